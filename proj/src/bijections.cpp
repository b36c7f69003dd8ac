#include "partperm/bijections.hpp"

#include <algorithm>
#include <set>

namespace partperm {

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<bool> up;
  for (char c : text) {
    if (c == 'U' || c == 'u') up.push_back(true);
    else if (c == 'D' || c == 'd') up.push_back(false);
    else if (c != ' ' && c != ',') invalid_input(std::string("unexpected path step '") + c + "'");
  }
  return LatticePath(std::move(up));
}

int LatticePath::ups() const { return static_cast<int>(std::count(up_.begin(), up_.end(), true)); }

int LatticePath::height(int t) const {
  int h = 0;
  for (int s = 0; s < t; ++s) h += up_.at(s) ? 1 : -1;
  return h;
}

bool LatticePath::is_dyck() const {
  int h = 0;
  for (bool u : up_) {
    h += u ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

std::string LatticePath::str() const {
  std::string s;
  for (bool u : up_) s.push_back(u ? 'U' : 'D');
  return s;
}

nlohmann::json LatticePath::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (bool u : up_) steps.push_back(u ? "U" : "D");
  return {{"steps", steps}, {"text", str()}, {"length", length()}};
}

std::vector<LatticePath> all_balanced_paths(int length) {
  std::vector<LatticePath> out;
  if (length % 2) return out;
  const int half = length / 2;
  std::vector<bool> up(length, false);
  std::fill(up.begin(), up.begin() + half, true);
  std::sort(up.begin(), up.end());
  do out.emplace_back(up);
  while (std::next_permutation(up.begin(), up.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> left_to_right_minima(const Perm& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.size(); ++i)
    if (out.empty() || p[i] < out.back().second) out.emplace_back(i + 1, p[i]);
  return out;
}

std::vector<std::pair<int, int>> right_to_left_maxima(const Perm& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = p.size() - 1; i >= 0; --i)
    if (out.empty() || p[i] > out.back().second) out.emplace_back(i + 1, p[i]);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

bool seq_avoids(const std::vector<int>& seq, const char* p) { return avoids_encoded(seq, Perm::parse(p)); }

Perm reverse_complement(const Perm& p) { return p.reverse().complement(); }

// Keeps the left-to-right minima of sigma and refills the other positions
// left to right: decreasing for 123 (smallest_above = false), or with the
// smallest unused value above the current minimum for 132.
Perm refill(const Perm& sigma, bool smallest_above) {
  const int n = sigma.size();
  auto minima = left_to_right_minima(sigma);
  std::vector<int> out(n, 0);
  std::set<int> unused;
  for (int v = 1; v <= n; ++v) unused.insert(v);
  for (auto [pos, val] : minima) {
    out[pos - 1] = val;
    unused.erase(val);
  }
  int current = n + 1;
  for (int i = 0; i < n; ++i) {
    if (out[i]) {
      current = out[i];
      continue;
    }
    auto it = smallest_above ? unused.upper_bound(current) : std::prev(unused.end());
    if (it == unused.end() || *it < current) invalid_input("left-to-right minima admit no refill");
    out[i] = *it;
    unused.erase(it);
  }
  Perm result(out);
  if (left_to_right_minima(result) != minima) invalid_input("refill changed the left-to-right minima");
  return result;
}

}  // namespace

Perm simion_schmidt(const Perm& sigma, SSTarget target) {
  if (!seq_avoids({sigma.values().begin(), sigma.values().end()}, "123")) invalid_input("input contains 123");
  if (target == SSTarget::Avoid213) return reverse_complement(refill(reverse_complement(sigma), true));
  return refill(sigma, true);
}

Perm simion_schmidt_inverse(const Perm& tau, SSTarget target) {
  const char* cls = target == SSTarget::Avoid132 ? "132" : "213";
  if (!seq_avoids({tau.values().begin(), tau.values().end()}, cls)) invalid_input(std::string("input contains ") + cls);
  if (target == SSTarget::Avoid213) return reverse_complement(refill(reverse_complement(tau), false));
  return refill(tau, false);
}

SplitPerm SplitPerm::of(const PartialPerm& pi) {
  if (pi.k() != 1) invalid_input("expected exactly one hole");
  SplitPerm s;
  s.hole = pi.holes().indices()[0];
  for (int i = 0; i < pi.n(); ++i) {
    if (i + 1 == s.hole) continue;
    (i + 1 < s.hole ? s.left : s.right).push_back(pi[i].value());
  }
  return s;
}

PartialPerm SplitPerm::join() const {
  std::vector<Slot> slots;
  for (int v : left) slots.push_back(Slot::of(v));
  slots.push_back(Slot::hole());
  for (int v : right) slots.push_back(Slot::of(v));
  return PartialPerm(std::move(slots));
}

namespace {

bool decreasing(const std::vector<int>& seq) {
  return std::adjacent_find(seq.begin(), seq.end(), std::less_equal<>()) == seq.end();
}

bool increasing(const std::vector<int>& seq) {
  return std::adjacent_find(seq.begin(), seq.end(), std::greater_equal<>()) == seq.end();
}

std::vector<int> filtered(const std::vector<int>& seq, auto keep) {
  std::vector<int> out;
  for (int v : seq)
    if (keep(v)) out.push_back(v);
  return out;
}

// No a < b < c with a, c in `outer` (c to the right of a) and b in `inner`.
bool no_split_ascent(const std::vector<int>& outer, const std::vector<int>& inner) {
  for (std::size_t s = 0; s < outer.size(); ++s)
    for (std::size_t t = s + 1; t < outer.size(); ++t) {
      int a = outer[s], c = outer[t];
      if (a > c) continue;
      for (int b : inner)
        if (a < b && b < c) return false;
    }
  return true;
}

}  // namespace

std::vector<int> one_hole_conditions(const PartialPerm& pi, const Perm& p) {
  auto s = SplitPerm::of(pi);
  const auto& L = s.left;
  const auto& R = s.right;
  const int lmin = L.empty() ? 1 << 30 : *std::min_element(L.begin(), L.end());
  const int rmax = R.empty() ? 0 : *std::max_element(R.begin(), R.end());
  std::vector<bool> ok;
  const std::string name = p.compact();
  if (name == "1234" || name == "1324") {
    const bool plain = name == "1234";
    ok = {seq_avoids(L, plain ? "123" : "132"), decreasing(filtered(L, [&](int v) { return v < rmax; })),
          seq_avoids(R, plain ? "123" : "213"), decreasing(filtered(R, [&](int v) { return v > lmin; }))};
  } else if (name == "1342") {
    ok = {seq_avoids(L, "123"), seq_avoids(R, "231"), increasing(filtered(R, [&](int v) { return v > lmin; })),
          no_split_ascent(L, R)};
  } else if (name == "2413") {
    ok = {seq_avoids(L, "231"), seq_avoids(R, "312"), no_split_ascent(L, R), no_split_ascent(R, L)};
  } else {
    invalid_input("one-hole description covers 1234, 1324, 1342 and 2413 only");
  }
  std::vector<int> failed;
  for (int c = 0; c < 4; ++c)
    if (!ok[c]) failed.push_back(c + 1);
  return failed;
}

std::string one_hole_case(const PartialPerm& pi, const Perm& p) {
  if (!one_hole_conditions(pi, p).empty()) invalid_input("input does not avoid " + p.compact());
  auto s = SplitPerm::of(pi);
  const std::string name = p.compact();
  if (name == "1342") return increasing(s.right) ? "i" : "ii";
  if (name == "2413") {
    if (s.left.empty() || s.right.empty()) return "empty";
    return *std::min_element(s.left.begin(), s.left.end()) > *std::max_element(s.right.begin(), s.right.end()) ? "i"
                                                                                                              : "ii";
  }
  invalid_input("structural cases exist for 1342 and 2413 only");
}

namespace {

// Applies f to the standardization of seq and maps back onto seq's values.
std::vector<int> on_values(const std::vector<int>& seq, const auto& f) {
  if (seq.empty()) return seq;
  Perm image = f(standardize(seq));
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int r : image.values()) out.push_back(sorted[r - 1]);
  return out;
}

void require_avoidance(const PartialPerm& pi, const char* p) {
  auto failed = one_hole_conditions(pi, Perm::parse(p));
  if (!failed.empty())
    invalid_input(std::string("input fails condition ") + std::to_string(failed[0]) + " of the one-hole " + p +
                  " description");
}

}  // namespace

PartialPerm bijection_1234_1324(const PartialPerm& pi) {
  require_avoidance(pi, "1234");
  auto s = SplitPerm::of(pi);
  s.left = on_values(s.left, [](const Perm& q) { return simion_schmidt(q, SSTarget::Avoid132); });
  s.right = on_values(s.right, [](const Perm& q) { return simion_schmidt(q, SSTarget::Avoid213); });
  return s.join();
}

PartialPerm bijection_1324_1234(const PartialPerm& pi) {
  require_avoidance(pi, "1324");
  auto s = SplitPerm::of(pi);
  s.left = on_values(s.left, [](const Perm& q) { return simion_schmidt_inverse(q, SSTarget::Avoid132); });
  s.right = on_values(s.right, [](const Perm& q) { return simion_schmidt_inverse(q, SSTarget::Avoid213); });
  return s.join();
}

LatticePath perm123_to_dyck(const Perm& sigma) {
  if (!seq_avoids({sigma.values().begin(), sigma.values().end()}, "123")) invalid_input("input contains 123");
  auto maxima = right_to_left_maxima(sigma);
  std::vector<bool> up;
  int prev_pos = 0;
  for (std::size_t t = 0; t < maxima.size(); ++t) {
    auto [pos, val] = maxima[t];
    int next_val = t + 1 < maxima.size() ? maxima[t + 1].second : 0;
    up.insert(up.end(), pos - prev_pos, true);
    up.insert(up.end(), val - next_val, false);
    prev_pos = pos;
  }
  return LatticePath(std::move(up));
}

Perm dyck_to_perm123(const LatticePath& path) {
  if (!path.is_dyck()) invalid_input("path is not a Dyck path");
  const int m = path.length() / 2;
  // runs U^{a_t} D^{b_t}
  std::vector<int> a, b;
  for (int t = 0; t < path.length();) {
    int ua = 0, db = 0;
    while (t < path.length() && path.up(t)) ++ua, ++t;
    while (t < path.length() && !path.up(t)) ++db, ++t;
    a.push_back(ua);
    b.push_back(db);
  }
  const std::size_t s = a.size();
  std::vector<int> pos(s), val(s);
  for (std::size_t t = 0; t < s; ++t) pos[t] = (t ? pos[t - 1] : 0) + a[t];
  for (std::size_t t = s; t-- > 0;) val[t] = (t + 1 < s ? val[t + 1] : 0) + b[t];
  std::vector<int> out(m, 0);
  std::vector<bool> used(m + 1, false);
  for (std::size_t t = 0; t < s; ++t) {
    out[pos[t] - 1] = val[t];
    used[val[t]] = true;
  }
  int next = m;
  for (int i = 0; i < m; ++i) {
    if (out[i]) continue;
    while (used[next]) --next;
    out[i] = next;
    used[next] = true;
  }
  Perm sigma(out);
  if (perm123_to_dyck(sigma) != path) invalid_input("path does not come from a 123-avoider");
  return sigma;
}

LatticePath hole_bijection_to_path(const PartialPerm& pi) {
  require_avoidance(pi, "1234");
  const int i = pi.holes().indices()[0];
  auto values = pi.values();
  auto p = perm123_to_dyck(Perm(values)).steps();
  p.push_back(false);
  int downs = 0;
  std::size_t cut = 0;
  for (; cut < p.size(); ++cut)
    if (!p[cut] && ++downs == i) break;
  std::vector<bool> out(p.begin() + cut, p.end());
  out.insert(out.end(), p.begin(), p.begin() + cut);
  out.erase(out.begin());  // the i-th down-step
  return LatticePath(std::move(out));
}

PartialPerm path_to_hole_perm(const LatticePath& path) {
  if (path.ups() != path.downs()) invalid_input("path must end at height 0");
  std::vector<bool> r{false};
  r.insert(r.end(), path.steps().begin(), path.steps().end());
  int h = 0, best = 0;
  std::size_t cut = 0;  // steps before the leftmost minimum point
  for (std::size_t t = 0; t < r.size(); ++t) {
    h += r[t] ? 1 : -1;
    if (h < best) {
      best = h;
      cut = t + 1;
    }
  }
  std::vector<bool> p(r.begin() + cut, r.end());
  p.insert(p.end(), r.begin(), r.begin() + cut);
  const int i = static_cast<int>(std::count(r.begin() + cut, r.end(), false)) + 1;
  p.pop_back();
  Perm sigma = dyck_to_perm123(LatticePath(p));
  const int n = sigma.size() + 1;
  std::vector<Slot> slots;
  for (int pos = 1, t = 0; pos <= n; ++pos) slots.push_back(pos == i ? Slot::hole() : Slot::of(sigma[t++]));
  return PartialPerm(std::move(slots));
}

}  // namespace partperm
