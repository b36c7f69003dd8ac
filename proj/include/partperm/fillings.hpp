#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partperm/core.hpp"

namespace partperm {

// Coordinates everywhere in this header: rows are numbered bottom to top,
// columns left to right, both from 1. Cell (i, j) is row i, column j.

/// Bottom-justified cell array with non-increasing column heights; zero
/// heights are allowed, so every row has nonzero length.
class FerrersShape {
 public:
  FerrersShape() = default;
  explicit FerrersShape(std::vector<int> heights);
  static FerrersShape rectangle(int rows, int cols);

  int columns() const noexcept { return static_cast<int>(heights_.size()); }
  int rows() const noexcept { return heights_.empty() ? 0 : heights_[0]; }
  int height(int j) const;
  /// Number of columns reaching row i.
  int row_length(int i) const;
  bool has_cell(int i, int j) const;
  /// Lattice point (i, j): j = 0 uses the first column.
  bool has_point(int i, int j) const;
  bool proper() const;
  bool degenerate() const;
  std::span<const int> heights() const noexcept { return heights_; }
  std::string str() const;  // "3,3,2"

  friend bool operator==(const FerrersShape&, const FerrersShape&) = default;
  friend auto operator<=>(const FerrersShape&, const FerrersShape&) = default;

 private:
  std::vector<int> heights_;
};

/// Points (i, j) of the shape whose cell (i + 1, j + 1) is absent.
std::vector<std::pair<int, int>> boundary_points(const FerrersShape& shape);

/// All shapes with rows + columns <= max_size, lexicographic in heights.
std::vector<FerrersShape> all_shapes(int max_size);

enum class Cell { Zero, One, Diamond };

/// Sparse partial 01-filling: each standard column holds at most one 1,
/// each row at most one 1, and ◇-columns (zero-height ones included) are
/// recorded explicitly.
class PartialFilling {
 public:
  PartialFilling() = default;
  /// one_row[j-1] is the row of the 1 in column j, or 0 for none.
  PartialFilling(FerrersShape shape, std::vector<bool> diamond, std::vector<int> one_row);

  static PartialFilling from_partial_perm(const PartialPerm& pi);
  static PartialFilling from_perm(const Perm& p);
  /// Header "shape=3,2,2 di=2" then one line per row, top row first, using
  /// 0, 1, * and . for an absent cell.
  static PartialFilling parse(std::string_view text);

  const FerrersShape& shape() const noexcept { return shape_; }
  int columns() const noexcept { return shape_.columns(); }
  int rows() const noexcept { return shape_.rows(); }
  bool is_diamond(int j) const;
  int one_in(int j) const;
  Cell cell(int i, int j) const;
  std::vector<int> diamond_columns() const;
  int diamond_count() const;

  /// Every row and every standard column holds exactly one 1.
  bool transversal() const;
  /// Same diagram with every ◇ replaced by 0 (columns become standard).
  PartialFilling zeroed() const;
  /// The partial permutation it encodes, when the shape is an
  /// (n - k) x n rectangle and the filling is transversal.
  std::optional<PartialPerm> to_partial_perm() const;

  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const PartialFilling&, const PartialFilling&) = default;
  friend auto operator<=>(const PartialFilling&, const PartialFilling&) = default;

 private:
  FerrersShape shape_;
  std::vector<bool> diamond_;
  std::vector<int> one_row_;
};

/// Inclusive range of legal lengths for a new row inserted below row i.
std::pair<int, int> insertion_lengths(const FerrersShape& shape, int i);

/// Substitution into ◇-column j with the new row placed between rows i - 1
/// and i. The row length defaults to its largest legal value.
PartialFilling substitute(const PartialFilling& f, int j, int i, std::optional<int> length = std::nullopt);

/// Every non-partial filling reachable by substitutions.
std::set<PartialFilling> filling_extensions(const PartialFilling& f);

/// Containment in a non-partial filling: 1-cells in increasing columns
/// order-isomorphic to p whose top-right corner cell lies in the diagram.
bool contains_plain(const PartialFilling& f, const Perm& p);

/// Some extension contains p, decided without building extensions: a
/// ◇-column may supply its 1 in any gap between consecutive rows that the
/// column reaches.
bool filling_contains(const PartialFilling& f, const Perm& p);
bool filling_avoids(const PartialFilling& f, const Perm& p);
/// Every extension avoids p.
bool filling_avoids_oracle(const PartialFilling& f, const Perm& p);

/// Cells above and to the right of the point (i, j).
PartialFilling above_right(const PartialFilling& f, int i, int j);
/// Cells below and to the left of the point (i, j).
PartialFilling below_left(const PartialFilling& f, int i, int j);
/// Columns [first, last] restricted to rows [row_lo, row_hi].
PartialFilling window(const PartialFilling& f, int first, int last, int row_lo, int row_hi);

/// Direct sum: p in the bottom-left, x in the top-right.
Perm direct_sum(const Perm& p, const Perm& x);

/// M(X): the cells of m whose top-right corner (i, j) has m(>i, >j)
/// containing x, arranged on k(M) columns with ◇ status inherited.
PartialFilling dominated_region(const PartialFilling& m, const Perm& x);
/// The k(M) of the dominated region.
int dominated_width(const PartialFilling& m, const Perm& x);

using TransversalMap = std::function<PartialFilling(const PartialFilling&)>;

/// Rewrites the dominated region of pi: strip empty rows and 1-less
/// standard columns, apply `inner`, put them back, splice into pi.
PartialPerm transport(const PartialPerm& pi, const Perm& x, const TransversalMap& inner);

enum class Monotone { Avoid12, Avoid21 };

/// Fills rows top to bottom, each in the leftmost (Avoid12) or rightmost
/// (Avoid21) free column. Absent when the shape has no transversal.
std::optional<PartialFilling> unique_monotone_transversal(const FerrersShape& shape, Monotone direction);

/// Every partial transversal with the given ◇-columns.
std::vector<PartialFilling> all_partial_transversals(const FerrersShape& shape, const std::vector<bool>& diamond);

struct RowClass {
  int leftmost_diamond = 0;  // 0 when there is none
  int bottom_rows = 0;       // rows meeting the leftmost ◇-column
  std::vector<bool> rightist;  // index i - 1

  int rightist_count() const;
  int leftist_bottom_count() const;
};

RowClass classify_rows(const FerrersShape& shape, const std::vector<bool>& diamond);

enum class Variant { Avoid312, Avoid231 };

/// Names ("C1".."C6", primed for Avoid231) of the failing conditions of the
/// structural description of 312- or 231-avoiding partial transversals.
std::vector<std::string> check_conditions(const PartialFilling& f, Variant variant);

/// Split of a C3-satisfying partial transversal into transversals of the
/// leftist-rows x left-columns and rightist-rows x right-columns subdiagrams.
struct LeftRightSplit {
  PartialFilling left;
  PartialFilling right;
  std::vector<int> left_rows, left_cols, right_rows, right_cols;
  int bottom_leftist = 0;
};

std::optional<LeftRightSplit> split_left_right(const PartialFilling& f);
PartialFilling join_left_right(const PartialFilling& frame, const LeftRightSplit& parts);

/// 312-avoiding partial transversal -> 231-avoiding one of the same diagram
/// and ◇-columns, built from the key bijection on the left part and the
/// unique monotone transversal on the right part.
PartialFilling shape_bijection_312_231(const PartialFilling& f);

struct ShapeWilfReport {
  Perm p, q;
  int size_bound = 0;
  int max_diamonds = 0;
  long cases = 0;
  long p_total = 0, q_total = 0;
  std::vector<std::string> mismatches;

  bool passes() const { return mismatches.empty(); }
  nlohmann::json to_json() const;
};

/// Per (shape, ◇-set) counts of p- and q-avoiding partial transversals,
/// over shapes with rows + columns <= size_bound and ◇-sets of size at most
/// max_diamonds.
ShapeWilfReport verify_shape_star_wilf(const Perm& p, const Perm& q, int size_bound, int max_diamonds = 3,
                                       int jobs = 1);

struct PrefixStats {
  int h = 0;
  int I = 0;
  int J = 0;
  int I_zeroed = 0;  // same quantities for the filling with ◇ replaced by 0
  int J_zeroed = 0;
};

/// h(F, j), and the longest identity / anti-identity contained in F(<=i, <=j).
/// Throws unless (i, j) is a boundary point.
PrefixStats prefix_stats(const PartialFilling& f, int i, int j);

}  // namespace partperm
