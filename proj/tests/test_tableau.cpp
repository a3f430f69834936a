#include "doctest.h"

#include <set>

#include "kmin/tableau.hpp"
#include "testing.hpp"

using namespace kmin;
using kmin::testing::random_filling;
using kmin::testing::random_tableau;

namespace {

Tableau L(const char* poset, const char* literal) { return Tableau::parse(Poset::get(poset), literal); }

BoxSet boxes(const Poset& p, std::initializer_list<Box> bs) {
  BoxSet s;
  for (const auto& b : bs) s.set(p.index_or_throw(b));
  return s;
}

std::vector<std::vector<int>> rows_of(const Tableau& t) { return t.rows(); }

}  // namespace

TEST_CASE("literal round trip and validation") {
  Tableau t = L("e6", ".,.,.,1/.,2,4,5/3,4,5");
  CHECK(t.to_literal() == ".,.,.,1/.,2,4,5/3,4,5");
  CHECK(t.inner_shape().to_string() == "3,1");
  CHECK(t.outer_shape().to_string() == "4,4,3");
  CHECK(t.at(Box{2, 6}) == 5);
  CHECK(t.value_set() == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(Tableau::parse_with_header("e6|.,.,.,1/.,2,4,5/3,4,5") == t);
  CHECK_THROWS_AS(L("a:2,2", "2,1"), ParseError);     // not increasing
  CHECK_THROWS_AS(L("a:2,2", "1/./"), ParseError);    // inner not an ideal
  CHECK_THROWS_AS(L("a:2,2", "1,2,3"), ParseError);   // too long
  CHECK(L("a:2,2", "").straight());
  CHECK(L("a:2,2", "").size() == 0);
}

TEST_CASE("swap") {
  const Poset& p = Poset::get("a:1,2");
  MarkedTableau m(p);
  m.labels[0] = Label::plain(1);
  m.labels[1] = Label::plain(2);
  auto s = swap(m, Label::plain(1), Label::plain(2));
  CHECK(s.labels[0] == Label::plain(2));
  CHECK(s.labels[1] == Label::plain(1));
  auto same = swap(m, Label::plain(5), Label::dot());
  CHECK(same.labels == m.labels);
}

TEST_CASE("Cayley plane forward slide with intermediate dots") {
  const Poset& e6 = Poset::get("e6");
  Tableau T = L("e6", ".,.,.,1/.,2,4,5/3,4,5");
  BoxSet C = boxes(e6, {{2, 3}});
  DottedTableau D(e6, T.inner() - C, T.outer(), C, T.values(), 1);
  MarkedTableau M = D.marked();
  std::vector<BoxSet> dots;
  for (int v = 1; v <= 5; ++v) {
    M = swap(M, Label::plain(v), Label::dot());
    dots.push_back(M.boxes_with(Label::dot()));
  }
  CHECK(dots[0] == boxes(e6, {{2, 3}}));
  CHECK(dots[1] == boxes(e6, {{2, 4}}));
  CHECK(dots[2] == boxes(e6, {{2, 4}}));
  CHECK(dots[3] == boxes(e6, {{2, 5}, {3, 4}}));
  CHECK(dots[4] == boxes(e6, {{2, 6}, {3, 5}}));

  Tableau R = forward_slide(T, C);
  CHECK(R.to_literal() == ".,.,.,1/2,4,5/3,5");
  CHECK(R.outer_shape().to_string() == "4,3,2");
  CHECK(forward_slide_by_swaps(T, C) == R);
  // The printed first picture has 6 in box [2,6]; that slide keeps the box.
  Tableau T6 = L("e6", ".,.,.,1/.,2,4,6/3,4,5");
  CHECK(forward_slide(T6, C).outer_shape().to_string() == "4,4,2");
  // Inverse law with the complementary starting box.
  CHECK(reverse_slide(R, T.outer() - R.outer()) == T);
  CHECK_THROWS(forward_slide(T, boxes(e6, {{1, 3}})));
  CHECK_THROWS(forward_slide(T, BoxSet{}));
}

TEST_CASE("fast slides agree with swap products") {
  for (const char* spec : {"e6", "e7", "og:6", "a:4,4", "qeven:5", "grid:5,5", "shifted:6"}) {
    const Poset& p = Poset::get(spec);
    for (int trial = 0; trial < 150; ++trial) {
      int n = p.size();
      Tableau T = random_tableau(p, testing::uniform(0, n / 2), testing::uniform(0, n / 2), 3);
      for (const auto& C : forward_choices(T)) {
        Tableau F = forward_slide(T, C);
        CHECK(F == forward_slide_by_swaps(T, C));
        CHECK(F.value_set() == T.value_set());
        CHECK(is_increasing(p, F.skew(), F.values()));
        CHECK(reverse_slide(F, T.outer() - F.outer()) == T);
      }
      for (const auto& C : reverse_choices(T)) {
        Tableau R = reverse_slide(T, C);
        CHECK(R == reverse_slide_by_swaps(T, C));
        CHECK(R.value_set() == T.value_set());
        CHECK(forward_slide(R, R.inner() - T.inner()) == T);
      }
    }
  }
}

TEST_CASE("infusion on the Cayley plane pair") {
  Tableau S = L("e6", ".,.,.,2/1,3,4/3");
  Tableau T = L("e6", ".,.,.,./.,.,.,1/.,1,2,3/3,4,5");
  auto [A, B] = infusion(S, T);
  CHECK(A.to_literal() == ".,.,.,1/1,2,3,4/3,4,5");
  CHECK(B.to_literal() == ".,.,.,./.,.,.,./.,.,.,2/1,3,4");
  auto [S2, T2] = infusion(A, B);
  CHECK(S2 == S);
  CHECK(T2 == T);
}

TEST_CASE("infusion edge cases and involution") {
  const Poset& e6 = Poset::get("e6");
  Tableau S = L("e6", "1,2,3/4");
  Tableau Tnone = Tableau::empty(e6, S.outer());
  auto [a, b] = infusion(S, Tnone);
  CHECK(a.size() == 0);
  CHECK(b == S);
  Tableau Snone = Tableau::empty(e6);
  auto [c, d] = infusion(Snone, S);
  CHECK(c == S);
  CHECK(d.size() == 0);
  CHECK_THROWS(infusion(S, L("e6", "1")));

  for (const char* spec : {"e6", "og:5", "a:3,4", "qeven:4"}) {
    const Poset& p = Poset::get(spec);
    for (int trial = 0; trial < 200; ++trial) {
      BoxSet lam = testing::grow_ideal(p, {}, testing::uniform(0, 4));
      BoxSet mu = testing::grow_ideal(p, lam, testing::uniform(0, 5));
      BoxSet nu = testing::grow_ideal(p, mu, testing::uniform(0, 5));
      Tableau s = random_filling(p, lam, mu, 2), t = random_filling(p, mu, nu, 2);
      auto [x, y] = infusion(s, t);
      CHECK(x.inner() == lam);
      CHECK(y.outer() == nu);
      auto [s2, t2] = infusion(x, y);
      CHECK(s2 == s);
      CHECK(t2 == t);
    }
  }
}

TEST_CASE("rectifications of the Gr(3,6) tableau") {
  Tableau T = L("a:3,3", ".,.,./.,.,2/1,3,4");
  auto rects = rectify_all(T);
  REQUIRE(rects.size() == 2);
  std::set<std::vector<std::vector<int>>> got{rows_of(rects[0]), rows_of(rects[1])};
  CHECK(got == std::set<std::vector<std::vector<int>>>{{{1, 2, 4}, {3}}, {{1, 2, 4}, {3, 4}}});
  CHECK(got.count(rows_of(rect_greedy(T))) == 1);
  Tableau U = L("a:3,3", "1,2/3");
  CHECK(rectify_all(U) == std::vector<Tableau>{U});
  CHECK(rect_greedy(U) == U);
}

TEST_CASE("reverse closure inverts rectification") {
  Tableau U = L("a:3,3", "1,2,4/3");
  auto pre = reverse_closure(U);
  for (const auto& T : pre) {
    auto r = rectify_all(T);
    CHECK(std::find(r.begin(), r.end(), U) != r.end());
  }
  CHECK(std::find(pre.begin(), pre.end(), L("a:3,3", ".,.,./.,.,2/1,3,4")) != pre.end());
}

TEST_CASE("minimal and maximal tableaux") {
  CHECK(rows_of(minimal_tableau(Shape::parse(Poset::get("og:6"), "5,3,2"))) ==
        std::vector<std::vector<int>>{{1, 2, 3, 4, 5}, {3, 4, 5}, {5, 6}});
  const Poset& a = Poset::get("a:5,9");
  BoxSet nu = a.ideal_from_rows({9, 7, 6, 6, 4}), lam = a.ideal_from_rows({5, 3, 2});
  CHECK(rows_of(minimal_tableau(a, lam, nu)) ==
        std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}, {2, 3, 4, 5}});
  CHECK(rows_of(maximal_tableau(a, lam, nu)) == std::vector<std::vector<int>>{{-4, -3, -2, -1},
                                                                              {-5, -4, -3, -1},
                                                                              {-5, -4, -3, -2},
                                                                              {-6, -5, -4, -3, -2, -1},
                                                                              {-4, -3, -2, -1}});
  CHECK(rows_of(minimal_tableau(Shape::parse(Poset::get("a:1,1"), "1"))) == std::vector<std::vector<int>>{{1}});
  CHECK(rows_of(maximal_tableau(Shape::parse(Poset::get("a:1,1"), "1"))) == std::vector<std::vector<int>>{{-1}});
  for (const char* spec : {"e6", "og:5", "a:3,3", "qeven:3"}) {
    const Poset& p = Poset::get(spec);
    auto shapes = enumerate_shapes(p);
    for (const auto& mu : shapes)
      for (const auto& la : shapes)
        if (mu.contains(la))
          CHECK(maximal_tableau(p, la.boxes(), mu.boxes()) == maximal_tableau_by_duality(p, la.boxes(), mu.boxes()));
  }
}

TEST_CASE("superstandard tableaux") {
  Shape lam = Shape::parse(Poset::get("og:6"), "5,3,2");
  CHECK(rows_of(superstandard(lam, Orientation::Rowwise)) ==
        std::vector<std::vector<int>>{{1, 2, 3, 4, 5}, {6, 7, 8}, {9, 10}});
  CHECK(rows_of(superstandard(lam, Orientation::Columnwise)) ==
        std::vector<std::vector<int>>{{1, 2, 4, 7, 10}, {3, 5, 8}, {6, 9}});
  Shape one = Shape::parse(Poset::get("e6"), "1");
  CHECK(superstandard(one, Orientation::Rowwise) == superstandard(one, Orientation::Columnwise));
}

TEST_CASE("w_X action") {
  const Poset& e6 = Poset::get("e6");
  Tableau t = L("e6", "7");
  Tableau w = wx_act(t);
  CHECK(w.size() == 1);
  CHECK(w.at(Box{4, 8}) == -7);
  CHECK(w.inner_shape().size() == 15);
  // Slides commute with w_X.
  for (int trial = 0; trial < 100; ++trial) {
    Tableau T = random_tableau(e6, testing::uniform(1, 6), testing::uniform(1, 8));
    for (const auto& C : forward_choices(T))
      CHECK(wx_act(forward_slide(T, C)) == reverse_slide(wx_act(T), e6.wx(C)));
  }
  // The anti-rectification of M_lambda is M_{w_X.lambda}.
  for (const auto& lam : enumerate_shapes(e6)) {
    Tableau M = minimal_tableau(lam);
    Tableau A = antirect_greedy(M);
    BoxSet wl = e6.wx(lam.boxes());
    CHECK(A.skew() == wl);
    CHECK(A == minimal_tableau(e6, e6.all() - wl, e6.all()));
  }
}

TEST_CASE("doubling of a shifted tableau") {
  Tableau T = L("shifted:6", ".,.,.,.,.,2/.,.,1,3,4/2,4,6,7/5,7");
  Tableau D = doubling(T);
  CHECK(D.poset().spec() == "grid:6,6");
  CHECK(D.to_literal() == ".,.,.,.,.,2/.,.,.,1,3,4/.,.,2,4,6,7/.,1,4,5,7/.,3,6,7/2,4,7");
  Tableau diag = L("shifted:3", "5");
  CHECK(doubling(diag).size() == 1);
  const Poset& sh = Poset::get("shifted:5");
  for (int trial = 0; trial < 200; ++trial) {
    Tableau t = random_tableau(sh, testing::uniform(0, 6), testing::uniform(1, 6));
    const Poset& g = doubling_poset(sh);
    for (const auto& C : forward_choices(t))
      CHECK(doubling(forward_slide(t, C)) == forward_slide(doubling(t), double_boxes(sh, g, C)));
  }
}

TEST_CASE("tableau products") {
  const Poset& g = Poset::get("grid:3,3");
  auto R = [&](std::vector<std::vector<int>> rows) { return Tableau::from_rows(g, rows); };
  CHECK(rows_of(tableau_product(R({{1, 2}, {4}}), R({{1, 3}, {3}}))) ==
        std::vector<std::vector<int>>{{1, 2, 3}, {2}, {4}});
  Tableau one = R({{1}}), two = R({{2}}), mid = R({{1, 4}, {3}});
  CHECK(rows_of(tableau_product(tableau_product(one, mid), two)) == std::vector<std::vector<int>>{{1, 2, 4}, {3}});
  CHECK(rows_of(tableau_product(one, tableau_product(mid, two))) ==
        std::vector<std::vector<int>>{{1, 2, 4}, {3, 4}});
  const Poset& big = Poset::get("grid:6,6");
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      int c = a >= b ? a : a + 1, d = b >= a ? b : b + 1;
      std::vector<int> lam{c};
      for (int k = 1; k < d; ++k) lam.push_back(1);
      Tableau Ma = minimal_tableau(Shape::from_rows(big, {a}));
      Tableau Mb = minimal_tableau(Shape::from_rows(big, std::vector<int>(b, 1)));
      CHECK(tableau_product(Ma, Mb) == trim_grid(minimal_tableau(Shape::from_rows(big, lam))));
    }
}

TEST_CASE("conjugate") {
  Tableau row = L("a:1,3", "1,2,3");
  Tableau col = conjugate(row);
  CHECK(col.poset().spec() == "a:3,1");
  CHECK(rows_of(col) == std::vector<std::vector<int>>{{1}, {2}, {3}});
  Tableau sym = L("a:2,2", "1,2/2,3");
  CHECK(conjugate(sym).to_literal() == sym.to_literal());
  // S^dagger . T^dagger = (T . S)^dagger on minimal tableaux.
  const Poset& g = Poset::get("grid:4,4");
  auto shapes_of = [&](int k) {
    std::vector<Shape> out;
    for (const auto& s : enumerate_shapes(Poset::get("a:3,3")))
      if (s.size() <= k && s.size() > 0) out.push_back(Shape::from_rows(g, s.rows()));
    return out;
  };
  auto small = shapes_of(4);
  for (const auto& a : small)
    for (const auto& b : small) {
      Tableau S = minimal_tableau(a), T = minimal_tableau(b);
      CHECK(trim_grid(conjugate(tableau_product(T, S))) == tableau_product(conjugate(S), conjugate(T)));
    }
}

TEST_CASE("resolutions of the dotted tableau") {
  const Poset& g = Poset::get("grid:5,8");
  BoxSet inner = g.ideal_from_rows({4, 2, 1, 1}), outer = g.ideal_from_rows({8, 7, 6, 5, 4});
  std::map<Box, int> vals{{{1, 5}, 1}, {{1, 6}, 3}, {{1, 8}, 8}, {{2, 3}, 2}, {{2, 4}, 3}, {{2, 5}, 4},
                          {{2, 6}, 6}, {{2, 7}, 9}, {{3, 2}, 1}, {{3, 3}, 3}, {{3, 4}, 5}, {{3, 5}, 7},
                          {{4, 2}, 2}, {{4, 4}, 8}, {{4, 5}, 9}, {{5, 1}, 2}, {{5, 3}, 8}, {{5, 4}, 9}};
  std::vector<int> v(g.size(), 0);
  for (const auto& [b, x] : vals) v[g.index_or_throw(b)] = x;
  BoxSet dots = boxes(g, {{1, 7}, {3, 6}, {4, 3}, {5, 2}});
  DottedTableau D(g, inner, outer, dots, v, 7);
  CHECK_THROWS(DottedTableau(g, inner, outer, dots, v, 3));
  auto res = resolutions(D);
  GridFilling expect;
  std::vector<std::vector<int>> printed{{1, 3, 8, 8}, {2, 3, 4, 6, 9}, {1, 3, 5, 7}, {2, 8, 8, 9}, {2, 2, 8, 9}};
  std::vector<int> first_col{5, 3, 2, 2, 1};
  for (int r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < printed[r].size(); ++c) expect.cells[{r + 1, first_col[r] + static_cast<int>(c)}] = printed[r][c];
  CHECK(std::find(res.begin(), res.end(), expect) != res.end());
  CHECK(res.size() == 16);
  for (const auto& r : res) {
    CHECK(r.weakly_increasing());
    CHECK(r.hook_closed());
  }
  Tableau plain = L("a:2,2", "1,2/3");
  auto only = resolutions(DottedTableau::from_tableau(plain));
  REQUIRE(only.size() == 1);
  CHECK(only[0] == GridFilling::of(plain));
}

TEST_CASE("jeu de taquin classes") {
  JdtClass tiny = jdt_class(L("a:1,1", "1"));
  CHECK(tiny.exhausted);
  CHECK(tiny.members.size() == 1);

  JdtClass K = jdt_class(L("e6", "1,2"));
  CHECK(K.exhausted);
  for (const char* lit : {".,.,1,2", ".,.,1/2", ".,.,1,2/2"})
    CHECK(std::find(K.members.begin(), K.members.end(), L("e6", lit)) != K.members.end());
  CHECK(K.straight_members().size() == 1);

  // Restriction to a value interval lands in the class of the restriction.
  Tableau seed = L("a:3,3", "1,2,4/3,5");
  JdtClass big = jdt_class(seed);
  JdtClass sub = jdt_class(seed.restrict_values(2, 4));
  std::set<Tableau> subset(sub.members.begin(), sub.members.end());
  REQUIRE(big.exhausted);
  for (const auto& t : big.members) CHECK(subset.count(t.restrict_values(2, 4)) == 1);
}

TEST_CASE("URT verdicts") {
  const Poset& e6 = Poset::get("e6");
  for (const auto& lam : enumerate_shapes(e6)) {
    if (lam.size() > 9) continue;
    auto v = is_urt(minimal_tableau(lam));
    CHECK(v.status == UrtStatus::Certified);
  }
  auto refuted = is_urt(L("a:3,3", "1,2,4/3"));
  CHECK(refuted.status == UrtStatus::Refuted);
  REQUIRE(refuted.witness);
  CHECK(refuted.witness->rows() == std::vector<std::vector<int>>{{1, 2, 4}, {3, 4}});

  // Window verdicts never certify when the class reaches the boundary.
  Tableau U = urt_window(L("a:2,2", "1,2/2,3"), 2);
  CHECK(U.poset().spec() == "grid:4,4");
  auto w = is_urt(U);
  CHECK(w.status != UrtStatus::Refuted);
  auto tight = is_urt(urt_window(L("a:2,2", "1,2/2,3"), 0));
  CHECK(tight.status == UrtStatus::Inconclusive);
  auto budget = is_urt(minimal_tableau(Shape::parse(e6, "4")), UrtOptions{3, false});
  CHECK(budget.status == UrtStatus::Inconclusive);
}
