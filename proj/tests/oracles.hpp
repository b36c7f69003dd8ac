#pragma once

// Test-side reference implementations. Each one follows a definition
// literally and shares no search code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "partperm/core.hpp"

namespace oracle {

using partperm::PartialPerm;
using partperm::Perm;

inline std::vector<std::vector<int>> perms_of(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<int> ranks(const std::vector<int>& seq) {
  std::vector<int> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int r = 1;
    for (int x : seq)
      if (x < seq[i]) ++r;
    out[i] = r;
  }
  return out;
}

// sigma in S_n filtered by "its non-hole restriction standardizes to pi".
inline std::set<std::vector<int>> extensions(const PartialPerm& pi) {
  std::set<std::vector<int>> out;
  std::vector<int> vals = pi.values();
  for (const auto& sigma : perms_of(pi.n())) {
    std::vector<int> sub;
    for (int i = 0; i < pi.n(); ++i)
      if (!pi[i].is_hole()) sub.push_back(sigma[i]);
    if (ranks(sub) == vals) out.insert(sigma);
  }
  return out;
}

// Bitmask subsets of positions.
inline bool contains(const std::vector<int>& sigma, const std::vector<int>& p) {
  const int n = static_cast<int>(sigma.size());
  const int l = static_cast<int>(p.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != l) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(sigma[i]);
    if (ranks(sub) == p) return true;
  }
  return false;
}

inline bool avoids(const PartialPerm& pi, const Perm& p) {
  std::vector<int> pv(p.values().begin(), p.values().end());
  for (const auto& sigma : oracle::extensions(pi))
    if (oracle::contains(sigma, pv)) return false;
  return true;
}

// Every hole set as a bitmask, every value arrangement.
inline std::vector<PartialPerm> all_partial(int n, int k) {
  std::vector<PartialPerm> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    for (const auto& vals : perms_of(n - k)) {
      std::vector<partperm::Slot> slots;
      std::size_t t = 0;
      for (int i = 0; i < n; ++i)
        slots.push_back(mask >> i & 1 ? partperm::Slot::hole() : partperm::Slot::of(vals[t++]));
      out.emplace_back(std::move(slots));
    }
  }
  return out;
}

inline std::uint64_t count(int n, int k, const Perm& p) {
  std::uint64_t c = 0;
  for (const auto& pi : all_partial(n, k))
    if (oracle::avoids(pi, p)) ++c;
  return c;
}

// For each pi in S_n^k (holes encoded as 0): the patterns contained in at
// least one extension, as a bitmask over `patterns`, and the number of
// extensions. Built forwards: every sigma in S_n is restricted to every
// hole set and standardized.
struct Projection {
  std::uint64_t contained = 0;
  std::uint64_t extensions = 0;
};

inline std::map<std::vector<int>, Projection> project(int n, int k, const std::vector<std::vector<int>>& patterns) {
  std::map<std::vector<int>, Projection> out;
  for (const auto& sigma : perms_of(n)) {
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < patterns.size(); ++q)
      if (contains(sigma, patterns[q])) mask |= std::uint64_t{1} << q;
    for (unsigned holes = 0; holes < (1u << n); ++holes) {
      if (__builtin_popcount(holes) != k) continue;
      std::vector<int> kept;
      for (int i = 0; i < n; ++i)
        if (!(holes >> i & 1)) kept.push_back(sigma[i]);
      auto r = ranks(kept);
      std::vector<int> code(n, 0);
      std::size_t t = 0;
      for (int i = 0; i < n; ++i)
        if (!(holes >> i & 1)) code[i] = r[t++];
      auto& e = out[code];
      e.contained |= mask;
      ++e.extensions;
    }
  }
  return out;
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
