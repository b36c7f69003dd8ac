#pragma once

#include <array>
#include <optional>
#include <vector>

#include <json.hpp>

#include "partperm/core.hpp"

namespace partperm {

/// Non-hole positions of [n] split by the holes h_1 < ... < h_k into k + 1
/// possibly empty intervals I_1..I_{k+1}.
struct IntervalDecomposition {
  HoleSet holes;
  std::vector<std::vector<int>> intervals;

  /// 1-based interval index a with pos in I_a; pos must not be a hole.
  int interval_of(int pos) const;
};

IntervalDecomposition decompose(const HoleSet& holes);

/// Tournament on the non-hole positions. An arc i -> j forces pi_i < pi_j in
/// every avoider of p when |p| = |H| + 2.
class OrderGraph {
 public:
  OrderGraph(int n, std::vector<int> vertices);

  int n() const noexcept { return n_; }
  const std::vector<int>& vertices() const noexcept { return vertices_; }
  bool arc(int from, int to) const;
  void set_arc(int from, int to);

  /// A directed 3-cycle (u, v, w) with arcs u->v->w->u, if any.
  std::optional<std::array<int, 3>> find_triangle() const;
  /// Kahn's algorithm; absent when a cycle blocks it.
  std::optional<std::vector<int>> topological_order() const;
  /// Both tests above; throws if they disagree, which a tournament forbids.
  bool is_acyclic() const;

 private:
  int n_;
  std::vector<int> vertices_;
  std::vector<std::vector<char>> adj_;  // indexed by position 1..n
};

OrderGraph order_graph(const Perm& p, const HoleSet& holes);

/// The single element of S_n^H(p) when the order graph is acyclic.
std::optional<PartialPerm> unique_avoider(const Perm& p, const HoleSet& holes);

/// No a < b < b+1 < d with p_a p_b p_{b+1} p_d order-isomorphic to 2413 or 3142.
bool is_baxter(const Perm& p);

struct BaxterReport {
  Perm pattern;
  bool is_baxter = false;
  /// s_n^H(p) = 1 for every n in [k, k + 4] and every H.
  bool all_small_n = false;
  /// s_{k+3}^H(p) = 1 for every H.
  bool at_k_plus_3 = false;
  /// Some n in [k + 3, k + 4] has s_n^H(p) = 1 for every H.
  bool exists_n = false;
  /// Order-graph acyclicity matched the counted s_n^H(p) everywhere.
  bool graph_agrees = true;
  std::vector<HoleSet> failing_H;  // at n = k + 3

  bool passes() const;
  nlohmann::json to_json() const;
};

BaxterReport baxter_criterion(const Perm& p);

}  // namespace partperm
