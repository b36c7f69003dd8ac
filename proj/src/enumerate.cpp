#include "partperm/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "partperm/ordergraph.hpp"
#include "partperm/parallel.hpp"

namespace partperm {

Method parse_method(std::string_view name) {
  if (name == "brute") return Method::Brute;
  if (name == "direct") return Method::Direct;
  if (name == "formula") return Method::Formula;
  invalid_input("unknown method '" + std::string(name) + "'");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::Direct: return "direct";
    case Method::Formula: return "formula";
  }
  return "?";
}

Count total_partial_perms(int n, int k) {
  if (k < 0 || k > n) return 0;
  return falling_ratio(n, k);
}

namespace {

void check_nk(int n, int k) {
  if (n < 0 || k < 0 || k > n) invalid_input("need 0 <= k <= n");
}

// Left-to-right growth of S_n^H(p). `slots` holds the prefix with holes as 0
// and values standardized to 1..m. Each appended entry is tested for an
// occurrence ending at it; earlier occurrences were ruled out already.
class Grower {
 public:
  Grower(const HoleSet& holes, const Perm& p) : holes_(holes), p_(p), slots_() {
    slots_.reserve(holes.n());
  }

  template <class Visit>
  void run(Visit&& visit) {
    grow(0, visit);
  }

 private:
  template <class Visit>
  void grow(int values, Visit& visit) {
    const int pos = static_cast<int>(slots_.size());
    if (pos == holes_.n()) {
      visit(slots_);
      return;
    }
    if (holes_.contains(pos + 1)) {
      slots_.push_back(0);
      if (!has_occurrence_ending_at(slots_, pos, p_)) grow(values, visit);
      slots_.pop_back();
      return;
    }
    for (int r = 1; r <= values + 1; ++r) {
      for (int& s : slots_)
        if (s >= r) ++s;
      slots_.push_back(r);
      if (!has_occurrence_ending_at(slots_, pos, p_)) grow(values + 1, visit);
      slots_.pop_back();
      for (int& s : slots_)
        if (s > r) --s;
    }
  }

  const HoleSet& holes_;
  const Perm& p_;
  std::vector<int> slots_;
};

Count direct_count_H(const HoleSet& holes, const Perm& p) {
  Count c = 0;
  Grower g(holes, p);
  g.run([&](const std::vector<int>&) { c = checked_add(c, 1); });
  return c;
}

Count brute_count_H(const HoleSet& holes, const Perm& p) {
  const int n = holes.n();
  const int m = n - holes.size();
  std::vector<int> vals(m);
  std::iota(vals.begin(), vals.end(), 1);
  std::vector<int> slots(n);
  Count c = 0;
  do {
    std::size_t t = 0;
    for (int i = 0; i < n; ++i) slots[i] = holes.contains(i + 1) ? 0 : vals[t++];
    if (avoids_encoded(slots, p)) c = checked_add(c, 1);
  } while (std::next_permutation(vals.begin(), vals.end()));
  return c;
}

bool is_monotone(const Perm& p) {
  return p == Perm::identity(p.size()) || p == Perm::anti_identity(p.size());
}

bool in_class(const Perm& p, std::initializer_list<const char*> reps) {
  Perm c = canonical(p);
  for (const char* r : reps)
    if (canonical(Perm::parse(r)) == c) return true;
  return false;
}

PartialPerm decode(const std::vector<int>& slots) {
  std::vector<Slot> s;
  s.reserve(slots.size());
  for (int v : slots) s.push_back(v == 0 ? Slot::hole() : Slot::of(v));
  return PartialPerm(std::move(s));
}

}  // namespace

Count count_H(const HoleSet& holes, const Perm& p, Method method) {
  switch (method) {
    case Method::Brute: return brute_count_H(holes, p);
    case Method::Direct: return direct_count_H(holes, p);
    case Method::Formula: {
      auto f = closed_form_H(holes, p);
      if (!f) throw Error(ErrorKind::NotCovered, "no closed form for s_n^H(" + p.compact() + ")");
      return *f;
    }
  }
  return 0;
}

Count count(int n, int k, const Perm& p, Method method, int jobs) {
  check_nk(n, k);
  if (method == Method::Formula) {
    auto f = closed_form(p, k, n);
    if (!f) {
      throw Error(ErrorKind::NotCovered,
                  "no closed form for s_n^k(" + p.compact() + ") with k = " + std::to_string(k));
    }
    return *f;
  }
  auto hole_sets = all_hole_sets(n, k);
  auto parts = parallel_map(hole_sets.size(), jobs, [&](std::size_t i) { return count_H(hole_sets[i], p, method); });
  Count total = 0;
  for (Count c : parts) total = checked_add(total, c);
  return total;
}

std::optional<Count> closed_form(const Perm& p, int k, int n) {
  check_nk(n, k);
  const int l = p.size();
  if (n < l) return total_partial_perms(n, k);
  if (k >= l - 1) return 0;
  if (is_monotone(p)) {
    // s_n^k(12..l) = C(n,k) * s_{n-k}^0(12..(l-k)); here l - k >= 2.
    const int m = l - k;
    if (m == 2) return binomial(n, k);
    if (m == 3) return checked_mul(binomial(n, k), catalan(n - k));
  }
  if (l == k + 2) {
    if (is_baxter(p)) return binomial(n, k);
    if (l == 4) return static_cast<Count>(3 * n - 6);
    return std::nullopt;
  }
  if (k == 1 && l == 4) {
    if (in_class(p, {"1234", "1243", "1324", "1432", "2143"})) return binomial(2 * n - 2, n - 1);
    if (in_class(p, {"1342", "1423"})) return checked_sub(binomial(2 * n - 2, n - 1), binomial(2 * n - 2, n - 5));
    if (in_class(p, {"2413"})) {
      Count pow2 = Count{1} << (n - 1);
      return checked_sub(checked_mul(2, catalan(n)), pow2);
    }
  }
  return std::nullopt;
}

std::optional<Count> closed_form_H(const HoleSet& holes, const Perm& p) {
  const int n = holes.n();
  const int k = holes.size();
  const int l = p.size();
  if (n < l) return factorial(n - k);
  if (k >= l - 1) return 0;
  if (l == k + 2) return order_graph(p, holes).is_acyclic() ? 1 : 0;
  return std::nullopt;
}

std::vector<PartialPerm> avoiders_H(const HoleSet& holes, const Perm& p) {
  std::vector<PartialPerm> out;
  Grower g(holes, p);
  g.run([&](const std::vector<int>& slots) { out.push_back(decode(slots)); });
  return out;
}

std::vector<PartialPerm> avoiders(int n, int k, const Perm& p) {
  check_nk(n, k);
  std::vector<PartialPerm> out;
  for (const auto& h : all_hole_sets(n, k)) {
    auto part = avoiders_H(h, p);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialPerm> all_partial_perms(int n, int k) {
  check_nk(n, k);
  std::vector<PartialPerm> out;
  for (const auto& h : all_hole_sets(n, k)) {
    std::vector<int> vals(n - k);
    std::iota(vals.begin(), vals.end(), 1);
    do {
      out.emplace_back(h, vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Perm, HoleSet> canonical(const Perm& p, const HoleSet& holes) {
  std::pair<Perm, HoleSet> best{p, holes};
  auto consider = [&](Perm q, HoleSet h) {
    if (std::tie(q, h) < std::tie(best.first, best.second)) best = {std::move(q), std::move(h)};
  };
  consider(p.complement(), holes);
  consider(p.reverse(), holes.reflect());
  consider(p.reverse().complement(), holes.reflect());
  return best;
}

Perm canonical(const Perm& p) {
  return std::min({p, p.complement(), p.reverse(), p.reverse().complement()});
}

// ---------------------------------------------------------------- classify

nlohmann::json ClassPartition::to_json() const {
  nlohmann::json blocks_json = nlohmann::json::array();
  for (const auto& b : blocks) {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& p : b) names.push_back(p.compact());
    blocks_json.push_back(names);
  }
  nlohmann::json ev = nlohmann::json::object();
  for (const auto& [p, v] : evidence) ev[p.compact()] = v;
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& b : blocks) sizes.push_back(b.size());
  return {{"length", length}, {"k", k},          {"horizon", horizon},    {"strong", strong},
          {"label", "horizon-limited"}, {"block_sizes", sizes}, {"blocks", blocks_json}, {"evidence", ev}};
}

ClassPartition classify(int length, int k, int horizon, bool strong, int jobs) {
  if (length < 1 || k < 0) invalid_input("classify needs length >= 1 and k >= 0");
  ClassPartition cp;
  cp.length = length;
  cp.k = k;
  cp.horizon = horizon;
  cp.strong = strong;

  const auto patterns = all_perms(length);
  std::vector<int> ns;
  for (int n = std::max(length, k); n <= horizon; ++n) ns.push_back(n);

  if (!strong) {
    // One computation per symmetry class.
    std::map<Perm, std::vector<Count>> by_canon;
    std::vector<Perm> reps;
    for (const auto& p : patterns) {
      Perm c = canonical(p);
      if (!by_canon.count(c)) {
        by_canon[c] = {};
        reps.push_back(c);
      }
    }
    auto vectors = parallel_map(reps.size(), jobs, [&](std::size_t i) {
      std::vector<Count> v;
      for (int n : ns) v.push_back(count(n, k, reps[i], Method::Direct));
      return v;
    });
    for (std::size_t i = 0; i < reps.size(); ++i) by_canon[reps[i]] = vectors[i];
    for (const auto& p : patterns) cp.evidence[p] = by_canon[canonical(p)];
  } else {
    // Units are (canonical pattern, H) pairs; each pattern's vector lists
    // its own H in lexicographic order.
    std::map<std::pair<Perm, HoleSet>, Count> memo;
    std::vector<std::pair<Perm, HoleSet>> units;
    for (const auto& p : patterns)
      for (int n : ns)
        for (const auto& h : all_hole_sets(n, k)) {
          auto key = canonical(p, h);
          if (!memo.count(key)) {
            memo[key] = 0;
            units.push_back(key);
          }
        }
    auto counts = parallel_map(units.size(), jobs,
                               [&](std::size_t i) { return count_H(units[i].second, units[i].first, Method::Direct); });
    for (std::size_t i = 0; i < units.size(); ++i) memo[units[i]] = counts[i];
    for (const auto& p : patterns) {
      std::vector<Count> v;
      for (int n : ns)
        for (const auto& h : all_hole_sets(n, k)) v.push_back(memo[canonical(p, h)]);
      cp.evidence[p] = std::move(v);
    }
  }

  std::map<std::vector<Count>, std::vector<Perm>> groups;
  for (const auto& p : patterns) groups[cp.evidence[p]].push_back(p);
  for (auto& [_, members] : groups) cp.blocks.push_back(members);
  std::sort(cp.blocks.begin(), cp.blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cp;
}

// ---------------------------------------------------------------- cache

CountCache::CountCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path CountCache::file_for(const Perm& p, int n, int k, const std::optional<HoleSet>& holes) const {
  std::string name;
  if (holes) {
    auto [cp, ch] = canonical(p, *holes);
    name = "s_" + cp.compact() + "_n" + std::to_string(n) + "_H";
    for (int h : ch.indices()) name += "-" + std::to_string(h);
  } else {
    name = "s_" + canonical(p).compact() + "_n" + std::to_string(n) + "_k" + std::to_string(k);
  }
  for (char& c : name)
    if (c == ' ') c = '.';
  return dir_ / (name + ".json");
}

std::optional<Count> CountCache::get(const Perm& p, int n, int k, const std::optional<HoleSet>& holes) const {
  auto path = file_for(p, n, k, holes);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("n").get<int>() != n || j.at("k").get<int>() != k) return std::nullopt;
    return j.at("count").get<Count>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void CountCache::put(const Perm& p, int n, int k, const std::optional<HoleSet>& holes, Count value) const {
  auto path = file_for(p, n, k, holes);
  nlohmann::json j = {{"pattern", canonical(p).compact()}, {"n", n}, {"k", k}, {"count", value}};
  if (holes) j["holes"] = std::vector<int>(canonical(p, *holes).second.indices().begin(),
                                           canonical(p, *holes).second.indices().end());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorKind::Io, "cannot write cache file " + tmp.string());
    out << j.dump() << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot write cache file " + path.string() + ": " + ec.message());
}

Count CountCache::get_or_compute(const Perm& p, int n, int k, const std::optional<HoleSet>& holes,
                                 const std::function<Count()>& compute) const {
  if (auto hit = get(p, n, k, holes)) return *hit;
  Count v = compute();
  put(p, n, k, holes, v);
  return v;
}

// ---------------------------------------------------------------- sequences

std::vector<SequenceEntry> sequence(const Perm& p, int k, int max_n, Method method, int jobs,
                                    const CountCache* cache) {
  std::vector<SequenceEntry> out;
  for (int n = std::max(k, 1); n <= max_n; ++n) {
    auto compute = [&] { return count(n, k, p, method, jobs); };
    Count c = cache ? cache->get_or_compute(p, n, k, std::nullopt, compute) : compute();
    out.push_back({n, c});
  }
  return out;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "bfile") return Format::Bfile;
  if (name == "text") return Format::Text;
  invalid_input("unknown format '" + std::string(name) + "'");
}

std::string format_sequence(const std::vector<SequenceEntry>& seq, Format format, int index_shift) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : seq) arr.push_back({{"n", e.n + index_shift}, {"count", e.count}});
      os << arr.dump() << '\n';
      break;
    }
    case Format::Csv:
      os << "n,count\n";
      for (const auto& e : seq) os << e.n + index_shift << ',' << e.count << '\n';
      break;
    case Format::Bfile:
      for (const auto& e : seq) os << e.n + index_shift << ' ' << e.count << '\n';
      break;
    case Format::Text:
      for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? ", " : "") << seq[i].count;
      os << '\n';
      break;
  }
  return os.str();
}

}  // namespace partperm
