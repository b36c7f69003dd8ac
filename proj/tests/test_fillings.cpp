#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "partperm/enumerate.hpp"
#include "partperm/fillings.hpp"

using namespace partperm;

namespace {

Perm P(const char* s) { return Perm::parse(s); }

std::vector<std::vector<bool>> diamond_sets(int m, int max_count) {
  std::vector<std::vector<bool>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) > max_count) continue;
    std::vector<bool> d(m);
    for (int j = 0; j < m; ++j) d[j] = mask >> j & 1;
    out.push_back(d);
  }
  return out;
}

std::vector<Perm> small_patterns(int max_len) {
  std::vector<Perm> out;
  for (int l = 1; l <= max_len; ++l)
    for (const auto& p : all_perms(l)) out.push_back(p);
  return out;
}

// Every sparse partial filling: each standard column gets a row or none,
// rows used at most once.
void sparse_rec(const FerrersShape& shape, const std::vector<bool>& d, int j, std::vector<int>& ones,
                std::vector<bool>& used, std::vector<PartialFilling>& out) {
  if (j > shape.columns()) {
    out.emplace_back(shape, d, ones);
    return;
  }
  sparse_rec(shape, d, j + 1, ones, used, out);
  if (d[j - 1]) return;
  for (int r = 1; r <= shape.height(j); ++r) {
    if (used[r]) continue;
    used[r] = true;
    ones[j - 1] = r;
    sparse_rec(shape, d, j + 1, ones, used, out);
    ones[j - 1] = 0;
    used[r] = false;
  }
}

std::vector<PartialFilling> sparse_fillings(const FerrersShape& shape, const std::vector<bool>& d) {
  std::vector<PartialFilling> out;
  std::vector<int> ones(shape.columns(), 0);
  std::vector<bool> used(shape.rows() + 1, false);
  sparse_rec(shape, d, 1, ones, used, out);
  return out;
}

}  // namespace

TEST_CASE("Ferrers shapes") {
  FerrersShape s({3, 3, 1});
  CHECK(s.rows() == 3);
  CHECK(s.row_length(1) == 3);
  CHECK(s.row_length(2) == 2);
  CHECK(s.has_cell(3, 2));
  CHECK_FALSE(s.has_cell(2, 3));
  CHECK_THROWS_AS(FerrersShape({1, 2}), Error);
  for (const auto& sh : all_shapes(6)) {
    REQUIRE(sh.rows() + sh.columns() <= 6);
    REQUIRE(static_cast<int>(boundary_points(sh).size()) == sh.rows() + sh.columns() + 1);
  }
  auto shapes = all_shapes(4);
  CHECK(std::set<FerrersShape>(shapes.begin(), shapes.end()).size() == shapes.size());
}

TEST_CASE("filling text round trip") {
  const char* text = "shape=3,3,1 di=2\n1*.\n0*.\n0*1";
  auto f = PartialFilling::parse(text);
  CHECK(f.str() == text);
  CHECK(f.diamond_columns() == std::vector<int>{2});
  CHECK(f.transversal() == false);
  CHECK(f.cell(3, 1) == Cell::One);
  CHECK(f.cell(1, 2) == Cell::Diamond);
  CHECK_THROWS_AS(PartialFilling::parse("shape=2,2 di=\n11\n00"), Error);
  auto g = PartialFilling::from_partial_perm(PartialPerm::parse("2*1"));
  CHECK(g.to_partial_perm()->str() == "2 * 1");
  CHECK(g.to_json()["ones"] == std::vector<int>{2, 0, 1});
}

TEST_CASE("substitution") {
  auto f = PartialFilling::from_partial_perm(PartialPerm::parse("2*1"));
  CHECK(insertion_lengths(f.shape(), 2) == std::pair{3, 3});
  auto g = substitute(f, 2, 2);
  CHECK(g.to_partial_perm()->str() == "3 2 1");
  CHECK_THROWS_AS(substitute(g, 2, 1), Error);
  // rectangular extensions are exactly the permutation extensions
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& pi : all_partial_perms(n, k)) {
        std::set<Perm> rect;
        for (const auto& e : filling_extensions(PartialFilling::from_partial_perm(pi)))
          if (auto q = e.to_partial_perm()) rect.insert(Perm(q->values()));
        std::set<Perm> want;
        for (const auto& v : oracle::extensions(pi)) want.insert(Perm(v));
        REQUIRE(rect == want);
      }
}

TEST_CASE("filling containment agrees with partial-permutation avoidance") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= 2 && k <= n; ++k)
      for (const auto& pi : all_partial_perms(n, k)) {
        auto f = PartialFilling::from_partial_perm(pi);
        for (const auto& p : small_patterns(3)) REQUIRE(filling_contains(f, p) == !avoids(pi, p));
        for (const char* p : {"2413", "1324", "4321"}) REQUIRE(filling_contains(f, P(p)) == !avoids(pi, P(p)));
      }
}

TEST_CASE("filling containment agrees with the extension oracle") {
  long checked = 0;
  for (const auto& shape : all_shapes(8)) {
    if (shape.rows() > 4 || shape.columns() > 4) continue;
    for (const auto& d : diamond_sets(shape.columns(), 4))
      for (const auto& f : all_partial_transversals(shape, d))
        for (const auto& p : small_patterns(3)) {
          REQUIRE(filling_avoids(f, p) == filling_avoids_oracle(f, p));
          ++checked;
        }
  }
  CHECK(checked > 2000);
}

TEST_CASE("sparse filling containment agrees with the extension oracle") {
  long checked = 0;
  for (const auto& shape : all_shapes(6))
    for (const auto& d : diamond_sets(shape.columns(), 2))
      for (const auto& f : sparse_fillings(shape, d))
        for (const auto& p : small_patterns(3)) {
          REQUIRE(filling_avoids(f, p) == filling_avoids_oracle(f, p));
          ++checked;
        }
  CHECK(checked > 10000);
}

TEST_CASE("plain containment needs the top-right cell") {
  auto f = PartialFilling::parse("shape=2,1 di=\n1.\n01");
  CHECK_FALSE(contains_plain(f, P("21")));
  auto g = PartialFilling::parse("shape=2,2 di=\n10\n01");
  CHECK(contains_plain(g, P("21")));
}

TEST_CASE("monotone transversals are the unique ones") {
  for (const auto& shape : all_shapes(7)) {
    std::vector<bool> none(shape.columns(), false);
    auto all = all_partial_transversals(shape, none);
    for (auto [dir, pat] : {std::pair{Monotone::Avoid12, "12"}, std::pair{Monotone::Avoid21, "21"}}) {
      auto u = unique_monotone_transversal(shape, dir);
      int avoiders = 0;
      for (const auto& f : all) avoiders += filling_avoids(f, P(pat));
      if (all.empty()) {
        REQUIRE_FALSE(u.has_value());
      } else {
        REQUIRE(avoiders == 1);
        REQUIRE(u.has_value());
        REQUIRE(filling_avoids(*u, P(pat)));
      }
    }
  }
}

TEST_CASE("structural description of 312- and 231-avoiders") {
  for (const auto& shape : all_shapes(7))
    for (const auto& d : diamond_sets(shape.columns(), shape.columns()))
      for (const auto& f : all_partial_transversals(shape, d)) {
        REQUIRE(filling_avoids(f, P("312")) == check_conditions(f, Variant::Avoid312).empty());
        REQUIRE(filling_avoids(f, P("231")) == check_conditions(f, Variant::Avoid231).empty());
      }
}

TEST_CASE("leftist and rightist rows") {
  for (const auto& shape : all_shapes(7))
    for (const auto& d : diamond_sets(shape.columns(), 2))
      for (const auto& f : all_partial_transversals(shape, d)) {
        auto failed = check_conditions(f, Variant::Avoid312);
        auto has = [&](const char* c) { return std::find(failed.begin(), failed.end(), c) != failed.end(); };
        if (has("C1") || has("C2")) continue;
        REQUIRE(split_left_right(f).has_value() == !has("C3"));
      }
}

TEST_CASE("shape bijection 312 -> 231") {
  long maps = 0;
  for (const auto& shape : all_shapes(9))
    for (const auto& d : diamond_sets(shape.columns(), 2)) {
      std::set<PartialFilling> image;
      int targets = 0;
      for (const auto& f : all_partial_transversals(shape, d)) {
        targets += filling_avoids(f, P("231"));
        if (!filling_avoids(f, P("312"))) continue;
        auto g = shape_bijection_312_231(f);
        REQUIRE(g.shape() == f.shape());
        REQUIRE(g.diamond_columns() == f.diamond_columns());
        REQUIRE(g.transversal());
        REQUIRE(filling_avoids(g, P("231")));
        image.insert(g);
        ++maps;
      }
      REQUIRE(static_cast<int>(image.size()) == targets);
    }
  CHECK(maps > 500);
}

TEST_CASE("shape-Wilf reports") {
  auto r = verify_shape_star_wilf(P("312"), P("231"), 7, 3, 2);
  CHECK(r.passes());
  CHECK(r.p_total == r.q_total);
  CHECK(r.to_json()["passes"] == true);
  CHECK(verify_shape_star_wilf(P("123"), P("321"), 7).passes());
  CHECK(verify_shape_star_wilf(P("12"), P("21"), 6).passes());
  auto bad = verify_shape_star_wilf(P("123"), P("312"), 7);
  CHECK_FALSE(bad.passes());
}

TEST_CASE("prefix statistics") {
  for (const auto& shape : all_shapes(6))
    for (const auto& d : diamond_sets(shape.columns(), 2))
      for (const auto& f : all_partial_transversals(shape, d))
        for (auto [i, j] : boundary_points(shape)) {
          auto st = prefix_stats(f, i, j);
          REQUIRE(st.I == st.h + st.I_zeroed);
          REQUIRE(st.J == st.h + st.J_zeroed);
        }
  auto f = PartialFilling::from_perm(P("123"));
  auto st = prefix_stats(f, 3, 3);
  CHECK(st.I == 3);
  CHECK(st.J == 1);
  CHECK_THROWS_AS(prefix_stats(f, 1, 1), Error);
}

TEST_CASE("dominated region detects direct sums") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 2 && k <= n; ++k)
      for (const auto& pi : all_partial_perms(n, k)) {
        auto m = PartialFilling::from_partial_perm(pi);
        for (const char* x : {"1", "21", "12"})
          for (const char* p : {"1", "12", "21", "312", "231"}) {
            auto region = dominated_region(m, P(x));
            REQUIRE(filling_contains(region, P(p)) == !avoids(pi, direct_sum(P(p), P(x))));
          }
      }
  CHECK(direct_sum(P("312"), P("21")).compact() == "31254");
}

TEST_CASE("transport gives a bijection between direct-sum avoiders") {
  for (const char* x : {"1", "21"}) {
    const Perm from = direct_sum(P("312"), P(x));
    const Perm to = direct_sum(P("231"), P(x));
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= 2 && k <= n; ++k)
        for (const auto& h : all_hole_sets(n, k)) {
          auto src = avoiders_H(h, from);
          std::set<PartialPerm> image;
          for (const auto& pi : src) {
            auto out = transport(pi, P(x), shape_bijection_312_231);
            REQUIRE(out.holes() == pi.holes());
            REQUIRE(avoids(out, to));
            image.insert(out);
          }
          REQUIRE(image.size() == src.size());
          REQUIRE(image.size() == avoiders_H(h, to).size());
        }
  }
}
