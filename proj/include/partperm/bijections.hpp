#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partperm/core.hpp"

namespace partperm {

/// Path with unit steps up (1,1) and down (1,-1), starting at height 0.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<bool> up) : up_(std::move(up)) {}
  /// "UUDD"
  static LatticePath parse(std::string_view text);

  int length() const noexcept { return static_cast<int>(up_.size()); }
  bool up(int t) const { return up_.at(t); }
  int ups() const;
  int downs() const { return length() - ups(); }
  /// Height after t steps.
  int height(int t) const;
  /// Never below 0 and ends at 0.
  bool is_dyck() const;
  const std::vector<bool>& steps() const noexcept { return up_; }

  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<bool> up_;
};

/// Free paths of the given length that end at height 0.
std::vector<LatticePath> all_balanced_paths(int length);

/// (position, value) pairs, 1-based.
std::vector<std::pair<int, int>> left_to_right_minima(const Perm& p);
std::vector<std::pair<int, int>> right_to_left_maxima(const Perm& p);

enum class SSTarget { Avoid132, Avoid213 };

/// 123-avoider -> the 132-avoider with the same left-to-right minima
/// (Avoid132), or the 213-avoider with the same right-to-left maxima
/// (Avoid213, via reverse-complement).
Perm simion_schmidt(const Perm& sigma, SSTarget target);
Perm simion_schmidt_inverse(const Perm& tau, SSTarget target);

/// One-hole partial permutation cut at its hole.
struct SplitPerm {
  std::vector<int> left;
  int hole = 0;  // 1-based position
  std::vector<int> right;

  static SplitPerm of(const PartialPerm& pi);
  PartialPerm join() const;
};

/// Indices (1..4) of the failing conditions of the one-hole avoidance
/// description for p in {1234, 1324, 1342, 2413}. Empty iff pi avoids p.
std::vector<int> one_hole_conditions(const PartialPerm& pi, const Perm& p);

/// Structural case of a one-hole avoider: for 1342 "i" (increasing right
/// part) or "ii"; for 2413 "empty" (a part is empty), "i" (left > right)
/// or "ii".
std::string one_hole_case(const PartialPerm& pi, const Perm& p);

/// S_n^1(1234) -> S_n^1(1324), hole fixed, left part through
/// simion_schmidt(., Avoid132) and right part through
/// simion_schmidt(., Avoid213).
PartialPerm bijection_1234_1324(const PartialPerm& pi);
PartialPerm bijection_1324_1234(const PartialPerm& pi);

/// 123-avoider of length m -> Dyck path of length 2m, read off the
/// right-to-left maxima at positions x_1 < .. < x_s with values
/// y_1 > .. > y_s as U^{x_1} D^{y_1-y_2} U^{x_2-x_1} .. U^{x_s-x_{s-1}} D^{y_s}.
LatticePath perm123_to_dyck(const Perm& sigma);
Perm dyck_to_perm123(const LatticePath& path);

/// S_n^1(1234) -> balanced free paths of length 2n - 2.
LatticePath hole_bijection_to_path(const PartialPerm& pi);
PartialPerm path_to_hole_perm(const LatticePath& path);

}  // namespace partperm
