#include "partperm/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace partperm {

namespace {

bool is_bijection(std::span<const int> v) {
  std::vector<bool> seen(v.size() + 1, false);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '\n') {
      flush();
    } else if (c == '*') {
      flush();
      tokens.emplace_back("*");
    } else if (text.substr(i, 3) == "◇") {
      flush();
      tokens.emplace_back("*");
      i += 2;
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return tokens;
}

int parse_int(const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    invalid_input("not a positive integer: '" + tok + "'");
  if (tok.size() > 6) invalid_input("entry too large: '" + tok + "'");
  return std::stoi(tok);
}

// "2413" or "2*1": without separators every character is its own token.
std::vector<std::string> tokenize(std::string_view text) {
  auto tokens = split_tokens(text);
  bool separated = text.find_first_of(" \t,\n") != std::string_view::npos;
  if (separated) return tokens;
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (t == "*") {
      out.push_back(t);
      continue;
    }
    for (char c : t) out.emplace_back(1, c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<int> values) : values_(std::move(values)) {
  if (!is_bijection(values_)) invalid_input("not a permutation of 1..len");
}

Perm Perm::identity(int len) {
  std::vector<int> v(len);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::anti_identity(int len) {
  std::vector<int> v(len);
  for (int i = 0; i < len; ++i) v[i] = len - i;
  return Perm(std::move(v));
}

Perm Perm::parse(std::string_view text) {
  auto tokens = tokenize(text);
  std::vector<int> v;
  v.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t == "*") invalid_input("a pattern cannot contain holes");
    v.push_back(parse_int(t));
  }
  return Perm(std::move(v));
}

Perm Perm::reverse() const {
  std::vector<int> v(values_.rbegin(), values_.rend());
  return Perm(std::move(v));
}

Perm Perm::complement() const {
  std::vector<int> v(values_);
  for (int& x : v) x = size() + 1 - x;
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(values_.size());
  for (int i = 0; i < size(); ++i) v[values_[i] - 1] = i + 1;
  return Perm(std::move(v));
}

std::string Perm::str() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(values_[i]);
  }
  return s;
}

std::string Perm::compact() const {
  std::string s;
  for (int x : values_) {
    if (x > 9) return str();
    s.push_back(static_cast<char>('0' + x));
  }
  return s;
}

Perm standardize(std::span<const int> seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[order[r]] == seq[order[r - 1]]) invalid_input("standardize: duplicate entries");
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Perm(std::move(out));
}

std::vector<Perm> all_perms(int len) {
  std::vector<int> v(len);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------- Slot

Slot Slot::of(int value) {
  if (value < 1) invalid_input("slot values are positive");
  Slot s;
  s.value_ = value;
  return s;
}

int Slot::value() const {
  if (!value_) invalid_input("value() on a hole");
  return *value_;
}

// ---------------------------------------------------------------- HoleSet

HoleSet::HoleSet(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
  if (n < 0) invalid_input("negative length");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > n) invalid_input("hole index outside [n]");
    if (i > 0 && indices_[i] <= indices_[i - 1]) invalid_input("hole indices must be strictly increasing");
  }
}

bool HoleSet::contains(int pos) const {
  return std::binary_search(indices_.begin(), indices_.end(), pos);
}

HoleSet HoleSet::reflect() const {
  std::vector<int> r;
  for (auto it = indices_.rbegin(); it != indices_.rend(); ++it) r.push_back(n_ + 1 - *it);
  return HoleSet(n_, std::move(r));
}

std::string HoleSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(indices_[i]);
  }
  return s + "}";
}

std::vector<HoleSet> all_hole_sets(int n, int k) {
  std::vector<HoleSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.emplace_back(n, idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------- PartialPerm

PartialPerm::PartialPerm(std::vector<Slot> slots) : slots_(std::move(slots)) {
  std::vector<int> holes;
  std::vector<int> vals;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].is_hole())
      holes.push_back(static_cast<int>(i) + 1);
    else
      vals.push_back(slots_[i].value());
  }
  if (!is_bijection(vals)) invalid_input("non-hole values must be exactly 1..n-k");
  holes_ = HoleSet(static_cast<int>(slots_.size()), std::move(holes));
}

PartialPerm::PartialPerm(const HoleSet& holes, std::span<const int> values) {
  if (static_cast<int>(values.size()) + holes.size() != holes.n())
    invalid_input("value count does not match n - |H|");
  std::vector<Slot> slots;
  slots.reserve(holes.n());
  std::size_t v = 0;
  for (int i = 1; i <= holes.n(); ++i) slots.push_back(holes.contains(i) ? Slot::hole() : Slot::of(values[v++]));
  *this = PartialPerm(std::move(slots));
}

PartialPerm PartialPerm::from_perm(const Perm& p) {
  std::vector<Slot> s;
  for (int x : p.values()) s.push_back(Slot::of(x));
  return PartialPerm(std::move(s));
}

PartialPerm PartialPerm::parse(std::string_view text) {
  auto tokens = tokenize(text);
  std::vector<Slot> slots;
  for (const auto& t : tokens) slots.push_back(t == "*" ? Slot::hole() : Slot::of(parse_int(t)));
  return PartialPerm(std::move(slots));
}

PartialPerm PartialPerm::from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    auto holes = j.at("holes").get<std::vector<int>>();
    auto vals = j.at("values").get<std::vector<int>>();
    return PartialPerm(HoleSet(n, std::move(holes)), vals);
  } catch (const nlohmann::json::exception& e) {
    invalid_input(std::string("malformed partial permutation JSON: ") + e.what());
  }
}

std::vector<int> PartialPerm::values() const {
  std::vector<int> v;
  for (const auto& s : slots_)
    if (!s.is_hole()) v.push_back(s.value());
  return v;
}

PartialPerm PartialPerm::reverse() const {
  return PartialPerm(std::vector<Slot>(slots_.rbegin(), slots_.rend()));
}

PartialPerm PartialPerm::complement() const {
  int m = n() - k();
  std::vector<Slot> s;
  for (const auto& x : slots_) s.push_back(x.is_hole() ? x : Slot::of(m + 1 - x.value()));
  return PartialPerm(std::move(s));
}

PartialPerm PartialPerm::without_holes() const {
  std::vector<Slot> s;
  for (const auto& x : slots_)
    if (!x.is_hole()) s.push_back(x);
  return PartialPerm(std::move(s));
}

std::string PartialPerm::str() const {
  std::string s;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) s.push_back(' ');
    s += slots_[i].is_hole() ? std::string("*") : std::to_string(slots_[i].value());
  }
  return s;
}

nlohmann::json PartialPerm::to_json() const {
  return {{"n", n()},
          {"holes", std::vector<int>(holes_.indices().begin(), holes_.indices().end())},
          {"values", values()}};
}

// ---------------------------------------------------------------- avoidance

std::set<Perm> extensions(const PartialPerm& pi) {
  const int n = pi.n();
  const int k = pi.k();
  std::set<Perm> out;
  const auto vals = pi.values();
  // Choose the value set taken by the holes, then its arrangement over the
  // hole positions; the remaining values follow pi's relative order.
  for (const auto& chosen : all_hole_sets(n, k)) {
    std::vector<int> hole_vals(chosen.indices().begin(), chosen.indices().end());
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (!chosen.contains(v)) rest.push_back(v);
    do {
      std::vector<int> sigma(n);
      std::size_t h = 0;
      std::size_t t = 0;
      for (int i = 0; i < n; ++i) {
        if (pi[i].is_hole())
          sigma[i] = hole_vals[h++];
        else
          sigma[i] = rest[vals[t++] - 1];
      }
      out.emplace(std::move(sigma));
    } while (std::next_permutation(hole_vals.begin(), hole_vals.end()));
  }
  return out;
}

bool contains_classical(const Perm& sigma, const Perm& p) {
  const int n = sigma.size();
  const int l = p.size();
  if (l == 0) return true;
  if (l > n) return false;
  std::vector<int> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> sub(l);
  while (true) {
    for (int t = 0; t < l; ++t) sub[t] = sigma[idx[t]];
    if (standardize(sub) == p) return true;
    int i = l - 1;
    while (i >= 0 && idx[i] == n - l + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool avoids_oracle(const PartialPerm& pi, const Perm& p) {
  for (const auto& sigma : extensions(pi))
    if (contains_classical(sigma, p)) return false;
  return true;
}

namespace {

// Depth-first placement of pattern letters t = 0.. onto increasing
// positions. `slots` encodes holes as 0. Each newly placed non-hole entry is
// compared against all earlier non-hole entries of the candidate.
struct OccurrenceSearch {
  std::span<const int> slots;
  const Perm& p;
  int limit;   // positions usable are < limit, except the forced last one
  int forced;  // position of the last letter, or -1
  std::vector<int> chosen_val;  // value per placed letter (0 for hole)

  bool consistent(int t, int v) const {
    if (v == 0) return true;
    for (int s = 0; s < t; ++s) {
      int w = chosen_val[s];
      if (w == 0) continue;
      if ((v > w) != (p[t] > p[s])) return false;
    }
    return true;
  }

  bool run(int t, int from) {
    const int l = p.size();
    if (t == l) return true;
    if (t == l - 1 && forced >= 0) {
      int v = slots[forced];
      if (!consistent(t, v)) return false;
      chosen_val[t] = v;
      return true;
    }
    const int remaining = l - t;  // letters still to place including t
    const int last_usable = forced >= 0 ? limit - remaining + 1 : limit - remaining;
    for (int pos = from; pos <= last_usable; ++pos) {
      int v = slots[pos];
      if (!consistent(t, v)) continue;
      chosen_val[t] = v;
      if (run(t + 1, pos + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool has_occurrence_ending_at(std::span<const int> slots, int last, const Perm& p) {
  const int l = p.size();
  if (l == 0) return true;
  if (last + 1 < l) return false;
  OccurrenceSearch s{slots, p, last, last, std::vector<int>(l, 0)};
  return s.run(0, 0);
}

bool avoids_encoded(std::span<const int> slots, const Perm& p) {
  const int l = p.size();
  if (l == 0) return false;
  const int n = static_cast<int>(slots.size());
  if (n < l) return true;
  OccurrenceSearch s{slots, p, n, -1, std::vector<int>(l, 0)};
  return !s.run(0, 0);
}

bool avoids(const PartialPerm& pi, const Perm& p) {
  std::vector<int> slots(pi.n());
  for (int i = 0; i < pi.n(); ++i) slots[i] = pi[i].is_hole() ? 0 : pi[i].value();
  return avoids_encoded(slots, p);
}

}  // namespace partperm
