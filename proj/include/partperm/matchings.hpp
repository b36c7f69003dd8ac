#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partperm/fillings.hpp"

namespace partperm {

struct Edge {
  int left;
  int right;

  bool covers(int v) const { return left < v && v < right; }
  /// this = (a, b) crosses o = (c, d) from the left: a < c < b < d.
  bool crosses_from_left(const Edge& o) const { return left < o.left && o.left < right && right < o.right; }
  bool crosses(const Edge& o) const { return crosses_from_left(o) || o.crosses_from_left(*this); }
  /// o is nested below this.
  bool nests(const Edge& o) const { return left < o.left && o.right < right; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Perfect matching on the vertices 1..2n.
class Matching {
 public:
  Matching() = default;
  Matching(int order, const std::vector<std::pair<int, int>>& edges);

  /// "3; (1,4) (2,6) (3,5)"
  static Matching parse(std::string_view text);

  int order() const noexcept { return order_; }
  int size() const noexcept { return 2 * order_; }
  int partner(int v) const { return partner_.at(v); }
  bool is_left(int v) const { return partner(v) > v; }
  std::vector<int> left_vertices() const;
  /// Edges sorted by left endpoint.
  std::vector<Edge> edges() const;
  Edge edge_at(int v) const;

  Matching reversed() const;
  bool is_k_crossing(const std::vector<int>& vertices) const;
  bool is_k_nesting(const std::vector<int>& vertices) const;

  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  int order_ = 0;
  std::vector<int> partner_;  // index 0 unused
};

/// All (2n-1)!! matchings of order n.
std::vector<Matching> all_matchings(int n);

Matching matching_312();
Matching matching_231();
/// The cyclic chain of order q >= 3: (f, e_1, .., e_{q-1}).
Matching cyclic_chain(int q);

/// Transversal of a proper Ferrers diagram -> matching and back.
Matching mu(const PartialFilling& f);
PartialFilling mu_inverse(const Matching& m);

/// Edge-preserving increasing injection from `pattern` into m, by trying
/// every subset of edges.
bool contains_matching(const Matching& m, const Matching& pattern);

/// Avoidance of every cyclic chain, by searching for each C_q.
bool avoids_cyclic_search(const Matching& m);
/// Same property through the maximalist R-step characterization.
bool avoids_cyclic(const Matching& m);
/// 312-matching avoidance through the minimalist R-step characterization.
bool avoids_312_fast(const Matching& m);

struct Prefix {
  int r = 0;
  std::vector<int> stubs;
  std::vector<std::vector<int>> blocks;
};

/// Stubs of M[r] grouped by the chain relation: x ~ x' when a chain of
/// M[r] starts with an edge covering x and ends with one covering x'.
Prefix prefix_blocks(const Matching& m, int r);
/// Grouping by "a single edge of M[r] covers both".
Prefix prefix_blocks_single_edge(const Matching& m, int r);
/// Blocks of every prefix M[1..2n] via the L-step / R-step update rule.
std::vector<std::vector<std::vector<int>>> block_evolution(const Matching& m);

struct StepInfo {
  bool left_step = true;
  int selected = 0;
  int block_index = 0;  // 1-based
  bool minimalist = false;
  bool maximalist = false;
};

/// Kind of the transition M[r-1] -> M[r], r >= 2.
StepInfo step_type(const Matching& m, int r);

/// Replays M's R-steps, choosing the largest stub of the matching block
/// where M took the smallest. Input must avoid the 312-matching.
Matching psi(const Matching& m);
/// Mirror replay: smallest where the input took the largest. Input must
/// avoid cyclic chains.
Matching psi_inverse(const Matching& n);

struct KeyTrace {
  std::vector<std::pair<std::string, Matching>> stages;
  nlohmann::json to_json() const;
};

/// The six-step map from transversals of D avoiding 312 whose bottom k rows
/// avoid 21 to transversals avoiding 231 whose bottom k rows avoid 12.
/// Every intermediate set membership is asserted; a failure throws
/// InvalidInput naming the condition.
PartialFilling key_bijection(const PartialFilling& f, int k, KeyTrace* trace = nullptr);

/// Membership tests for the two sides of the key bijection.
bool in_key_domain(const PartialFilling& f, int k);
bool in_key_range(const PartialFilling& f, int k);

/// Proper shapes with n rows, n columns and equal bottom k rows.
std::vector<FerrersShape> key_shapes(int n, int k);

}  // namespace partperm
