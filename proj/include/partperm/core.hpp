#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "partperm/error.hpp"

namespace partperm {

/// A classical permutation of [len], stored as its one-line notation
/// values[0..len-1] with entries 1..len. Doubles as the permutation matrix
/// whose cell (row i, column j) holds 1 iff values[j-1] == i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> values);

  static Perm identity(int len);
  static Perm anti_identity(int len);
  /// Parses "3 1 2" or the compact "312" (single-digit entries only).
  static Perm parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }

  Perm reverse() const;
  Perm complement() const;
  Perm inverse() const;

  std::string str() const;  // "3 1 2"
  std::string compact() const;  // "312"

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> values_;
};

/// Output rank of each entry, smallest mapped to 1.
Perm standardize(std::span<const int> seq);

/// All permutations of [len] in lexicographic order.
std::vector<Perm> all_perms(int len);

/// One position of a partial permutation: either a hole or a value.
class Slot {
 public:
  static Slot hole() { return Slot(); }
  static Slot of(int value);

  bool is_hole() const noexcept { return !value_; }
  int value() const;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;

 private:
  Slot() = default;
  std::optional<int> value_;
};

/// Strictly increasing 1-based positions inside [n].
class HoleSet {
 public:
  HoleSet() = default;
  HoleSet(int n, std::vector<int> indices);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  std::span<const int> indices() const noexcept { return indices_; }
  bool contains(int pos) const;

  /// Mirror image under reversal of positions: i -> n + 1 - i.
  HoleSet reflect() const;
  std::string str() const;  // "{2,4}"

  friend bool operator==(const HoleSet&, const HoleSet&) = default;
  friend auto operator<=>(const HoleSet&, const HoleSet&) = default;

 private:
  int n_ = 0;
  std::vector<int> indices_;
};

/// All k-element hole sets of [n] in lexicographic order.
std::vector<HoleSet> all_hole_sets(int n, int k);

/// A partial permutation of length n with k holes: the non-hole slots carry
/// each of 1..n-k exactly once.
class PartialPerm {
 public:
  PartialPerm() = default;
  explicit PartialPerm(std::vector<Slot> slots);
  /// Non-hole values in position order, holes at the given positions.
  PartialPerm(const HoleSet& holes, std::span<const int> values);

  static PartialPerm from_perm(const Perm& p);
  /// Canonical form "3 2 * 1 5 4"; `◇` is accepted in place of `*`.
  static PartialPerm parse(std::string_view text);
  static PartialPerm from_json(const nlohmann::json& j);

  int n() const noexcept { return static_cast<int>(slots_.size()); }
  int k() const noexcept { return holes_.size(); }
  const HoleSet& holes() const noexcept { return holes_; }
  std::span<const Slot> slots() const noexcept { return slots_; }
  const Slot& operator[](std::size_t i) const { return slots_[i]; }
  /// Non-hole values in position order.
  std::vector<int> values() const;

  PartialPerm reverse() const;
  PartialPerm complement() const;
  PartialPerm without_holes() const;

  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const PartialPerm&, const PartialPerm&) = default;
  friend auto operator<=>(const PartialPerm&, const PartialPerm&) = default;

 private:
  std::vector<Slot> slots_;
  HoleSet holes_;
};

/// Every sigma in S_n whose non-hole restriction standardizes to pi's
/// non-hole subsequence. Exactly n!/(n-k)! of them.
std::set<Perm> extensions(const PartialPerm& pi);

/// Classical containment by scanning every position subset. Used by the
/// oracle side only.
bool contains_classical(const Perm& sigma, const Perm& p);

/// Avoidance through a pruned search over position subsets; holes in a
/// candidate occurrence are unconstrained.
bool avoids(const PartialPerm& pi, const Perm& p);

/// Same check on an encoded slot sequence: 0 marks a hole, positive
/// entries are values.
bool avoids_encoded(std::span<const int> slots, const Perm& p);

/// Literal definition: every extension avoids p.
bool avoids_oracle(const PartialPerm& pi, const Perm& p);

/// True iff an occurrence of p exists whose last entry sits at position
/// `last` (0-based) and whose other entries lie strictly before it. `slots`
/// holds hole markers as 0 and values as positive integers.
bool has_occurrence_ending_at(std::span<const int> slots, int last, const Perm& p);

}  // namespace partperm
