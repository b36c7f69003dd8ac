#include "partperm/ordergraph.hpp"

#include <algorithm>
#include <deque>

#include "partperm/enumerate.hpp"

namespace partperm {

int IntervalDecomposition::interval_of(int pos) const {
  if (holes.contains(pos)) invalid_input("position is a hole");
  auto idx = holes.indices();
  return static_cast<int>(std::lower_bound(idx.begin(), idx.end(), pos) - idx.begin()) + 1;
}

IntervalDecomposition decompose(const HoleSet& holes) {
  IntervalDecomposition d{holes, std::vector<std::vector<int>>(holes.size() + 1)};
  for (int i = 1; i <= holes.n(); ++i)
    if (!holes.contains(i)) d.intervals[d.interval_of(i) - 1].push_back(i);
  return d;
}

OrderGraph::OrderGraph(int n, std::vector<int> vertices)
    : n_(n), vertices_(std::move(vertices)), adj_(n + 1, std::vector<char>(n + 1, 0)) {}

bool OrderGraph::arc(int from, int to) const { return adj_[from][to] != 0; }

void OrderGraph::set_arc(int from, int to) {
  adj_[from][to] = 1;
  adj_[to][from] = 0;
}

std::optional<std::array<int, 3>> OrderGraph::find_triangle() const {
  for (int u : vertices_)
    for (int v : vertices_) {
      if (!arc(u, v)) continue;
      for (int w : vertices_)
        if (arc(v, w) && arc(w, u)) return std::array<int, 3>{u, v, w};
    }
  return std::nullopt;
}

std::optional<std::vector<int>> OrderGraph::topological_order() const {
  std::vector<int> indeg(n_ + 1, 0);
  for (int u : vertices_)
    for (int v : vertices_)
      if (arc(u, v)) ++indeg[v];
  std::deque<int> ready;
  for (int v : vertices_)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int u = ready.front();
    ready.pop_front();
    order.push_back(u);
    for (int v : vertices_)
      if (arc(u, v) && --indeg[v] == 0) ready.push_back(v);
  }
  if (order.size() != vertices_.size()) return std::nullopt;
  return order;
}

bool OrderGraph::is_acyclic() const {
  bool by_triangle = !find_triangle().has_value();
  bool by_sort = topological_order().has_value();
  if (by_triangle != by_sort) throw Error(ErrorKind::InvalidInput, "order graph is not a tournament");
  return by_sort;
}

OrderGraph order_graph(const Perm& p, const HoleSet& holes) {
  if (p.size() != holes.size() + 2) invalid_input("order graph needs |p| = |H| + 2");
  auto d = decompose(holes);
  std::vector<int> verts;
  for (const auto& iv : d.intervals) verts.insert(verts.end(), iv.begin(), iv.end());
  OrderGraph g(holes.n(), verts);
  for (std::size_t x = 0; x < verts.size(); ++x)
    for (std::size_t y = x + 1; y < verts.size(); ++y) {
      int i = verts[x];
      int j = verts[y];
      int a = d.interval_of(i);
      int b = d.interval_of(j);
      // p is 1-based in the rule: compare p_a with p_{b+1}.
      if (p[a - 1] > p[b]) g.set_arc(i, j);
      else g.set_arc(j, i);
    }
  return g;
}

std::optional<PartialPerm> unique_avoider(const Perm& p, const HoleSet& holes) {
  auto g = order_graph(p, holes);
  if (!g.is_acyclic()) return std::nullopt;
  auto order = *g.topological_order();
  std::vector<Slot> slots(holes.n(), Slot::hole());
  for (std::size_t r = 0; r < order.size(); ++r) slots[order[r] - 1] = Slot::of(static_cast<int>(r) + 1);
  return PartialPerm(std::move(slots));
}

bool is_baxter(const Perm& p) {
  const int l = p.size();
  for (int b = 1; b + 2 < l; ++b)
    for (int a = 0; a < b; ++a)
      for (int d = b + 2; d < l; ++d) {
        int q[4] = {p[a], p[b], p[b + 1], p[d]};
        auto s = standardize(q);
        if (s.compact() == "2413" || s.compact() == "3142") return false;
      }
  return true;
}

bool BaxterReport::passes() const {
  return graph_agrees && all_small_n == is_baxter && at_k_plus_3 == is_baxter && exists_n == is_baxter;
}

nlohmann::json BaxterReport::to_json() const {
  nlohmann::json failing = nlohmann::json::array();
  for (const auto& h : failing_H) failing.push_back(std::vector<int>(h.indices().begin(), h.indices().end()));
  return {{"pattern", pattern.compact()},
          {"is_baxter", is_baxter},
          {"all_small_n", all_small_n},
          {"at_k_plus_3", at_k_plus_3},
          {"exists_n", exists_n},
          {"graph_agrees", graph_agrees},
          {"failing_H", failing},
          {"passes", passes()}};
}

BaxterReport baxter_criterion(const Perm& p) {
  const int l = p.size();
  if (l < 3) invalid_input("criterion needs a pattern of length at least 3");
  const int k = l - 2;
  BaxterReport r;
  r.pattern = p;
  r.is_baxter = is_baxter(p);
  r.all_small_n = true;
  r.exists_n = false;
  for (int n = k; n <= k + 4; ++n) {
    bool all_one = true;
    for (const auto& h : all_hole_sets(n, k)) {
      Count c = count_H(h, p, Method::Direct);
      bool acyclic = order_graph(p, h).is_acyclic();
      if ((c == 1) != acyclic || c > 1) r.graph_agrees = false;
      if (c != 1) {
        all_one = false;
        if (n == k + 3) r.failing_H.push_back(h);
      }
    }
    if (!all_one) r.all_small_n = false;
    if (n == k + 3) r.at_k_plus_3 = all_one;
    if (n >= k + 3 && all_one) r.exists_n = true;
  }
  return r;
}

}  // namespace partperm
