#include "partperm/matchings.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

namespace partperm {

Matching::Matching(int order, const std::vector<std::pair<int, int>>& edges) : order_(order), partner_(2 * order + 1, 0) {
  if (order < 0) invalid_input("matching order must be non-negative");
  if (static_cast<int>(edges.size()) != order) invalid_input("a matching of order n has n edges");
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > size() || b > size() || a == b) invalid_input("edge endpoint out of range");
    if (partner_[a] || partner_[b]) invalid_input("vertex used by two edges");
    partner_[a] = b;
    partner_[b] = a;
  }
}

Matching Matching::parse(std::string_view text) {
  std::string s(text);
  auto semi = s.find(';');
  if (semi == std::string::npos) invalid_input("matching text must read 'n; (a,b) ...'");
  int order = 0;
  try {
    order = std::stoi(s.substr(0, semi));
  } catch (const std::exception&) {
    invalid_input("bad matching order");
  }
  std::vector<std::pair<int, int>> edges;
  std::regex edge_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::string rest = s.substr(semi + 1);
  for (auto it = std::sregex_iterator(rest.begin(), rest.end(), edge_re); it != std::sregex_iterator(); ++it)
    edges.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
  return Matching(order, edges);
}

std::vector<int> Matching::left_vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= size(); ++v)
    if (is_left(v)) out.push_back(v);
  return out;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (int v = 1; v <= size(); ++v)
    if (is_left(v)) out.push_back({v, partner_[v]});
  return out;
}

Edge Matching::edge_at(int v) const {
  int w = partner(v);
  return {std::min(v, w), std::max(v, w)};
}

Matching Matching::reversed() const {
  std::vector<std::pair<int, int>> es;
  const int t = size() + 1;
  for (const auto& e : edges()) es.emplace_back(t - e.right, t - e.left);
  return Matching(order_, es);
}

namespace {

std::vector<Edge> incident_edges(const Matching& m, const std::vector<int>& vertices) {
  std::vector<Edge> es;
  for (int v : vertices) es.push_back(m.edge_at(v));
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return {};
  return es;
}

}  // namespace

bool Matching::is_k_crossing(const std::vector<int>& vertices) const {
  auto es = incident_edges(*this, vertices);
  if (es.size() != vertices.size()) return false;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (!es[a].crosses(es[b])) return false;
  return true;
}

bool Matching::is_k_nesting(const std::vector<int>& vertices) const {
  auto es = incident_edges(*this, vertices);
  if (es.size() != vertices.size()) return false;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (!es[a].nests(es[b]) && !es[b].nests(es[a])) return false;
  return true;
}

std::string Matching::str() const {
  std::ostringstream os;
  os << order_ << ";";
  for (const auto& e : edges()) os << " (" << e.left << "," << e.right << ")";
  return os.str();
}

nlohmann::json Matching::to_json() const {
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : edges()) es.push_back({e.left, e.right});
  return {{"order", order_}, {"edges", es}};
}

namespace {

void matchings_rec(std::vector<int>& partner, int size, std::vector<Matching>& out) {
  int v = 1;
  while (v <= size && partner[v]) ++v;
  if (v > size) {
    std::vector<std::pair<int, int>> es;
    for (int a = 1; a <= size; ++a)
      if (partner[a] > a) es.emplace_back(a, partner[a]);
    out.emplace_back(size / 2, es);
    return;
  }
  for (int w = v + 1; w <= size; ++w) {
    if (partner[w]) continue;
    partner[v] = w;
    partner[w] = v;
    matchings_rec(partner, size, out);
    partner[v] = partner[w] = 0;
  }
}

}  // namespace

std::vector<Matching> all_matchings(int n) {
  std::vector<Matching> out;
  std::vector<int> partner(2 * n + 1, 0);
  matchings_rec(partner, 2 * n, out);
  return out;
}

Matching matching_312() { return Matching(3, {{1, 4}, {2, 6}, {3, 5}}); }
Matching matching_231() { return Matching(3, {{1, 5}, {2, 4}, {3, 6}}); }

Matching cyclic_chain(int q) {
  if (q < 3) invalid_input("cyclic chains have order at least 3");
  // vertex order: a1 fa a2 b1 a3 b2 ... a_p b_{p-1} fb b_p, edge e_i = a_i b_i
  const int p = q - 1;
  std::vector<int> a(p + 1), b(p + 1);
  int v = 1;
  a[1] = v++;
  const int fa = v++;
  for (int i = 2; i <= p; ++i) {
    a[i] = v++;
    b[i - 1] = v++;
  }
  const int fb = v++;
  b[p] = v++;
  std::vector<std::pair<int, int>> es{{fa, fb}};
  for (int i = 1; i <= p; ++i) es.emplace_back(a[i], b[i]);
  return Matching(q, es);
}

Matching mu(const PartialFilling& f) {
  if (f.diamond_count() || !f.transversal() || !f.shape().proper()) invalid_input("mu needs a transversal of a proper diagram");
  const int n = f.columns();
  std::vector<int> x(n + 1), y(f.rows() + 1);
  int v = 1;
  for (int j = 1; j <= n; ++j) {
    x[j] = v++;
    for (int i = f.rows(); i >= 1; --i)
      if (f.shape().row_length(i) == j) y[i] = v++;
  }
  std::vector<std::pair<int, int>> es;
  for (int j = 1; j <= n; ++j) es.emplace_back(x[j], y[f.one_in(j)]);
  return Matching(n, es);
}

PartialFilling mu_inverse(const Matching& m) {
  auto xs = m.left_vertices();
  std::vector<int> ys;
  for (int v = m.size(); v >= 1; --v)
    if (!m.is_left(v)) ys.push_back(v);  // ys[i-1] = y_i
  const int n = m.order();
  std::vector<int> heights(n), ones(n);
  for (int j = 0; j < n; ++j) {
    heights[j] = static_cast<int>(std::count_if(ys.begin(), ys.end(), [&](int y) { return y > xs[j]; }));
    int y = m.partner(xs[j]);
    ones[j] = static_cast<int>(std::find(ys.begin(), ys.end(), y) - ys.begin()) + 1;
  }
  return PartialFilling(FerrersShape(heights), std::vector<bool>(n, false), ones);
}

namespace {

Matching induced(const Matching& m, const std::vector<Edge>& es) {
  std::vector<int> verts;
  for (const auto& e : es) {
    verts.push_back(e.left);
    verts.push_back(e.right);
  }
  std::sort(verts.begin(), verts.end());
  auto rank = [&](int v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()) + 1; };
  std::vector<std::pair<int, int>> out;
  for (const auto& e : es) out.emplace_back(rank(e.left), rank(e.right));
  (void)m;
  return Matching(static_cast<int>(es.size()), out);
}

}  // namespace

bool contains_matching(const Matching& m, const Matching& pattern) {
  const int q = pattern.order();
  const int n = m.order();
  if (q == 0) return true;
  if (q > n) return false;
  auto es = m.edges();
  std::vector<int> idx(q);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<Edge> sub;
    for (int t : idx) sub.push_back(es[t]);
    if (induced(m, sub) == pattern) return true;
    int i = q - 1;
    while (i >= 0 && idx[i] == n - q + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int t = i + 1; t < q; ++t) idx[t] = idx[t - 1] + 1;
  }
}

bool avoids_cyclic_search(const Matching& m) {
  for (int q = 3; q <= m.order(); ++q)
    if (contains_matching(m, cyclic_chain(q))) return false;
  return true;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) { return parent_[a] == a ? a : parent_[a] = find(parent_[a]); }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

Prefix group(const Matching& m, int r, const std::vector<std::vector<bool>>& linked_edges) {
  Prefix pre;
  pre.r = r;
  std::vector<Edge> inner;
  for (const auto& e : m.edges())
    if (e.right <= r) inner.push_back(e);
  for (int v = 1; v <= r; ++v)
    if (m.partner(v) > r) pre.stubs.push_back(v);
  const int s = static_cast<int>(pre.stubs.size());
  UnionFind uf(s);
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) {
      bool joined = false;
      for (std::size_t e = 0; e < inner.size() && !joined; ++e) {
        if (!inner[e].covers(pre.stubs[a])) continue;
        for (std::size_t g = 0; g < inner.size() && !joined; ++g)
          if (linked_edges[e][g] && inner[g].covers(pre.stubs[b])) joined = true;
      }
      if (joined) uf.unite(a, b);
    }
  std::vector<std::vector<int>> by_root(s);
  for (int a = 0; a < s; ++a) by_root[uf.find(a)].push_back(pre.stubs[a]);
  for (auto& b : by_root)
    if (!b.empty()) pre.blocks.push_back(b);
  std::sort(pre.blocks.begin(), pre.blocks.end());
  return pre;
}

std::vector<Edge> edges_within(const Matching& m, int r) {
  std::vector<Edge> inner;
  for (const auto& e : m.edges())
    if (e.right <= r) inner.push_back(e);
  return inner;
}

}  // namespace

Prefix prefix_blocks(const Matching& m, int r) {
  auto inner = edges_within(m, r);
  const std::size_t t = inner.size();
  // reach[e][g]: a chain from e to g exists (e itself included)
  std::vector<std::vector<bool>> reach(t, std::vector<bool>(t, false));
  for (std::size_t e = 0; e < t; ++e) {
    reach[e][e] = true;
    for (std::size_t g = 0; g < t; ++g)
      if (inner[e].crosses_from_left(inner[g])) reach[e][g] = true;
  }
  for (std::size_t w = 0; w < t; ++w)
    for (std::size_t e = 0; e < t; ++e)
      if (reach[e][w])
        for (std::size_t g = 0; g < t; ++g)
          if (reach[w][g]) reach[e][g] = true;
  return group(m, r, reach);
}

Prefix prefix_blocks_single_edge(const Matching& m, int r) {
  const std::size_t t = edges_within(m, r).size();
  std::vector<std::vector<bool>> same(t, std::vector<bool>(t, false));
  for (std::size_t e = 0; e < t; ++e) same[e][e] = true;
  return group(m, r, same);
}

namespace {

using Blocks = std::vector<std::vector<int>>;

// Applies vertex r of m to the blocks of M[r-1]; returns the block index
// (0-based) of the selected stub for an R-step, -1 for an L-step.
int advance(Blocks& blocks, int r, int selected) {
  if (selected == 0) {
    blocks.push_back({r});
    return -1;
  }
  int j = 0;
  while (j < static_cast<int>(blocks.size()) &&
         std::find(blocks[j].begin(), blocks[j].end(), selected) == blocks[j].end())
    ++j;
  if (j == static_cast<int>(blocks.size())) invalid_input("selected vertex is not a stub");
  std::vector<int> rest;
  for (std::size_t b = j; b < blocks.size(); ++b)
    for (int v : blocks[b])
      if (v != selected) rest.push_back(v);
  blocks.resize(j);
  if (!rest.empty()) blocks.push_back(rest);
  return j;
}

}  // namespace

std::vector<Blocks> block_evolution(const Matching& m) {
  std::vector<Blocks> out;
  Blocks cur;
  for (int r = 1; r <= m.size(); ++r) {
    advance(cur, r, m.is_left(r) ? 0 : m.partner(r));
    out.push_back(cur);
  }
  return out;
}

StepInfo step_type(const Matching& m, int r) {
  if (r < 2 || r > m.size()) invalid_input("step index out of range");
  Blocks cur;
  for (int v = 1; v < r; ++v) advance(cur, v, m.is_left(v) ? 0 : m.partner(v));
  StepInfo info;
  if (m.is_left(r)) return info;
  info.left_step = false;
  info.selected = m.partner(r);
  Blocks before = cur;
  int j = advance(cur, r, info.selected);
  info.block_index = j + 1;
  info.minimalist = info.selected == before[j].front();
  info.maximalist = info.selected == before[j].back();
  return info;
}

namespace {

bool all_steps(const Matching& m, bool want_min) {
  Blocks cur;
  for (int r = 1; r <= m.size(); ++r) {
    if (m.is_left(r)) {
      advance(cur, r, 0);
      continue;
    }
    Blocks before = cur;
    int j = advance(cur, r, m.partner(r));
    int s = m.partner(r);
    if (s != (want_min ? before[j].front() : before[j].back())) return false;
  }
  return true;
}

Matching replay(const Matching& m, bool target_max) {
  Blocks src, dst;
  std::vector<std::pair<int, int>> es;
  for (int r = 1; r <= m.size(); ++r) {
    if (m.is_left(r)) {
      advance(src, r, 0);
      advance(dst, r, 0);
      continue;
    }
    int j = advance(src, r, m.partner(r));
    if (j >= static_cast<int>(dst.size()) || (src.size() > dst.size() + 1))
      invalid_input("block structures diverged during replay");
    int s = target_max ? dst[j].back() : dst[j].front();
    es.emplace_back(s, r);
    advance(dst, r, s);
  }
  return Matching(m.order(), es);
}

}  // namespace

bool avoids_cyclic(const Matching& m) { return all_steps(m, false); }
bool avoids_312_fast(const Matching& m) { return all_steps(m, true); }

Matching psi(const Matching& m) {
  if (!avoids_312_fast(m)) invalid_input("psi needs a 312-matching-avoiding input");
  return replay(m, true);
}

Matching psi_inverse(const Matching& n) {
  if (!avoids_cyclic(n)) invalid_input("psi inverse needs a cyclic-chain-avoiding input");
  return replay(n, false);
}

nlohmann::json KeyTrace::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [name, m] : stages) out.push_back({{"stage", name}, {"matching", m.to_json()}, {"text", m.str()}});
  return out;
}

namespace {

bool bottom_rows_full(const PartialFilling& f, int k) {
  if (k < 0 || k > f.rows()) return false;
  for (int i = 1; i <= k; ++i)
    if (f.shape().row_length(i) != f.columns()) return false;
  return true;
}

bool key_side(const PartialFilling& f, int k, const char* big, const char* small) {
  if (f.diamond_count() || !f.shape().proper() || !f.transversal() || f.rows() != f.columns()) return false;
  if (!bottom_rows_full(f, k)) return false;
  if (!filling_avoids(f, Perm::parse(big))) return false;
  return filling_avoids(window(f, 1, f.columns(), 1, k), Perm::parse(small));
}

void require(bool ok, const std::string& what) {
  if (!ok) invalid_input("key bijection: condition " + what + " fails");
}

std::vector<int> range_of(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

bool in_key_domain(const PartialFilling& f, int k) { return key_side(f, k, "312", "21"); }
bool in_key_range(const PartialFilling& f, int k) { return key_side(f, k, "231", "12"); }

PartialFilling key_bijection(const PartialFilling& f, int k, KeyTrace* trace) {
  require(in_key_domain(f, k), "domain");
  const int n = f.columns();
  auto record = [&](const char* name, const Matching& m) {
    if (trace) trace->stages.emplace_back(name, m);
  };
  const Matching m0 = mu(f);
  record("mu", m0);
  const auto x = m0.left_vertices();

  const Matching n1 = psi(m0);
  record("psi", n1);
  require(avoids_cyclic(n1) && avoids_cyclic_search(n1), "P1");
  require(n1.left_vertices() == x, "P2");
  for (const auto& b : prefix_blocks(n1, 2 * n - k).blocks) require(b.size() == 1, "P3");
  require(n1.is_k_nesting(range_of(2 * n - k + 1, 2 * n)), "P4");

  std::vector<std::pair<int, int>> plus;
  auto shift = [&](int v) { return v > 2 * n - k ? v + 1 : v; };
  for (const auto& e : n1.edges()) plus.emplace_back(shift(e.left), shift(e.right));
  plus.emplace_back(2 * n - k + 1, 2 * n + 2);
  const Matching n2(n + 1, plus);
  record("add-edge", n2);
  require(avoids_cyclic(n2) && avoids_cyclic_search(n2), "R1");
  std::vector<int> x_plus;
  for (int v : x) x_plus.push_back(shift(v));
  x_plus.push_back(2 * n - k + 1);
  std::sort(x_plus.begin(), x_plus.end());
  require(n2.left_vertices() == x_plus, "R2");
  require(n2.partner(2 * n - k + 1) == 2 * n + 2, "R3");

  const Matching n3 = n2.reversed();
  record("reverse", n3);
  require(avoids_cyclic(n3), "R1 after reversal");
  require(n3.partner(1) == k + 2, "R3 after reversal");

  const Matching n4 = psi_inverse(n3);
  record("psi-inverse", n4);
  require(avoids_312_fast(n4) && !contains_matching(n4, matching_312()), "S1");
  require(n4.left_vertices() == n3.left_vertices(), "S2");
  require(n4.partner(1) == k + 2, "S3");

  std::vector<std::pair<int, int>> minus;
  auto squeeze = [&](int v) { return v - 1 - (v > k + 2 ? 1 : 0); };
  for (const auto& e : n4.edges())
    if (e.left != 1) minus.emplace_back(squeeze(e.left), squeeze(e.right));
  const Matching n5(n, minus);
  record("remove-edge", n5);
  require(!contains_matching(n5, matching_312()), "S1-");
  require(n5.left_vertices() == m0.reversed().left_vertices(), "S2-");
  require(n5.is_k_crossing(range_of(1, k)), "S3-");

  const Matching n6 = n5.reversed();
  record("reverse-back", n6);
  PartialFilling out = mu_inverse(n6);
  require(out.shape() == f.shape(), "same diagram");
  require(in_key_range(out, k), "range");
  return out;
}

std::vector<FerrersShape> key_shapes(int n, int k) {
  std::vector<FerrersShape> out;
  for (const auto& s : all_shapes(2 * n)) {
    if (s.columns() != n || s.rows() != n || !s.proper()) continue;
    bool ok = s.height(n) >= k;
    for (int j = 1; j <= n && ok; ++j) ok = s.height(j) >= n - j + 1;
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace partperm
