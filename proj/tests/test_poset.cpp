#include "doctest.h"

#include <set>

#include "kmin/poset.hpp"

using namespace kmin;

namespace {

bool grid_leq(const Box& a, const Box& b) { return a.row <= b.row && a.col <= b.col; }

// Counts antichains (= order ideals) straight from box coordinates.
long count_antichains(const std::vector<Box>& boxes, std::size_t i, std::vector<Box>& chosen) {
  if (i == boxes.size()) return 1;
  long n = count_antichains(boxes, i + 1, chosen);
  for (const auto& c : chosen)
    if (grid_leq(c, boxes[i]) || grid_leq(boxes[i], c)) return n;
  chosen.push_back(boxes[i]);
  n += count_antichains(boxes, i + 1, chosen);
  chosen.pop_back();
  return n;
}

long brute_ideal_count(const Poset& p) {
  std::vector<Box> chosen;
  return count_antichains(p.boxes(), 0, chosen);
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Shape S(const Poset& p, const char* rows) { return Shape::parse(p, rows); }

}  // namespace

TEST_CASE("box counts per family") {
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k) CHECK(Poset::get(PosetFamily::type_a(m, k)).size() == m * k);
  for (int n = 2; n <= 8; ++n) {
    CHECK(Poset::get(PosetFamily::max_orthogonal(n)).size() == n * (n - 1) / 2);
    CHECK(Poset::get(PosetFamily::quadric_even(n)).size() == 2 * n);
  }
  for (int n = 1; n <= 6; ++n) {
    CHECK(Poset::get(PosetFamily::quadric_odd(n)).size() == 2 * n - 1);
    CHECK(Poset::get(PosetFamily::lagrangian(n)).size() == n * (n + 1) / 2);
  }
  CHECK(Poset::get("e6").size() == 16);
  CHECK(Poset::get("e7").size() == 27);
}

TEST_CASE("exceptional embeddings") {
  const Poset& e6 = Poset::get("e6");
  CHECK(e6.max_height() == 11);
  CHECK(e6.row_lengths(e6.all()) == std::vector<int>{4, 4, 4, 4});
  CHECK(e6.index({2, 3}).has_value());
  CHECK_FALSE(e6.index({2, 2}).has_value());
  const Poset& e7 = Poset::get("e7");
  CHECK(e7.row_lengths(e7.all()) == std::vector<int>{5, 5, 5, 3, 3, 3, 1, 1, 1});
  CHECK(e7.max_height() == 17);
  CHECK(e7.is_minuscule());
  CHECK_FALSE(Poset::get("lg:3").is_minuscule());
  CHECK_FALSE(Poset::get("qodd:3").is_minuscule());
  CHECK_FALSE(Poset::get("grid:3,3").is_minuscule());
}

TEST_CASE("trivial poset") {
  const Poset& p = Poset::get("a:1,1");
  CHECK(p.size() == 1);
  CHECK(p.height(0) == 1);
  CHECK(p.wx(0) == 0);
}

TEST_CASE("invalid families are rejected") {
  CHECK_THROWS(Poset::get("qeven:1"));
  CHECK_THROWS(Poset::get("a:0,2"));
  CHECK_THROWS(PosetFamily::parse("b7"));
  CHECK_THROWS(PosetFamily::parse("a:2"));
  CHECK(PosetFamily::parse("a:2,3").spec() == "a:2,3");
}

TEST_CASE("small quadrics match the expected pictures") {
  CHECK(Poset::get("qeven:2").row_lengths(Poset::get("qeven:2").all()) == std::vector<int>{2, 2});
  const Poset& q3 = Poset::get("qeven:3");
  CHECK(q3.row_lengths(q3.all()) == std::vector<int>{3, 2, 1});
  CHECK(q3.box(q3.row_boxes(3)[0]) == Box{3, 3});
  const Poset& q4 = Poset::get("qeven:4");
  CHECK(q4.box(q4.row_boxes(2)[0]) == Box{2, 3});
}

TEST_CASE("covers are the Hasse diagram of the grid order") {
  for (const char* spec : {"e6", "e7", "og:5", "qeven:5", "qeven:4", "a:3,4", "lg:4", "shifted:5"}) {
    const Poset& p = Poset::get(spec);
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) {
        bool lt = i != j && grid_leq(p.box(i), p.box(j));
        bool cover = lt;
        for (int k = 0; k < p.size() && cover; ++k)
          if (k != i && k != j && grid_leq(p.box(i), p.box(k)) && grid_leq(p.box(k), p.box(j))) cover = false;
        CHECK(p.covers(i, j) == cover);
      }
  }
}

TEST_CASE("heights: some cover predecessor has height one less") {
  for (const char* spec : {"e6", "e7", "og:6", "qeven:5", "a:3,3"}) {
    const Poset& p = Poset::get(spec);
    for (int i = 0; i < p.size(); ++i) {
      if (p.height(i) == 1) {
        CHECK(p.down(i).empty());
        continue;
      }
      bool found = false;
      for (int j : p.down(i)) found = found || p.height(j) == p.height(i) - 1;
      CHECK(found);
    }
  }
}

TEST_CASE("w_X reverses covers on bounded families") {
  for (const char* spec : {"e6", "e7", "og:5", "qeven:2", "qeven:3", "qeven:6", "a:2,3", "lg:4", "qodd:3"}) {
    const Poset& p = Poset::get(spec);
    REQUIRE(p.has_involution());
    for (int i = 0; i < p.size(); ++i) {
      CHECK(p.wx(p.wx(i)) == i);
      for (int j = 0; j < p.size(); ++j) CHECK(p.covers(i, j) == p.covers(p.wx(j), p.wx(i)));
    }
  }
  CHECK_FALSE(Poset::get("grid:3,3").has_involution());
}

TEST_CASE("enumerate_shapes agrees with brute force") {
  const Poset& a22 = Poset::get("a:2,2");
  auto shapes = enumerate_shapes(a22);
  std::vector<std::string> names;
  for (const auto& s : shapes) names.push_back(s.to_string());
  CHECK(names == std::vector<std::string>{"", "1", "2", "1,1", "2,1", "2,2"});

  CHECK(enumerate_shapes(Poset::get("e6")).size() == 27);
  CHECK(enumerate_shapes(Poset::get("e7")).size() == 56);
  for (const char* spec : {"e6", "e7", "og:5", "og:6", "qeven:4", "qeven:5", "lg:3", "qodd:4"}) {
    const Poset& p = Poset::get(spec);
    auto all = enumerate_shapes(p);
    CHECK(static_cast<long>(all.size()) == brute_ideal_count(p));
    std::set<BoxSet> uniq;
    for (std::size_t i = 0; i < all.size(); ++i) {
      uniq.insert(all[i].boxes());
      if (i) CHECK(all[i - 1].size() <= all[i].size());
      CHECK(Shape::from_rows(p, all[i].rows()) == all[i]);
    }
    CHECK(uniq.size() == all.size());
  }
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k)
      CHECK(static_cast<long>(enumerate_shapes(Poset::get(PosetFamily::type_a(m, k))).size()) == binom(m + k, m));
  CHECK_THROWS(enumerate_shapes(Poset::get("grid:2,2")));
}

TEST_CASE("dual shapes") {
  const Poset& e6 = Poset::get("e6");
  CHECK(dual_shape(S(e6, "4,2,1")).to_string() == "4,3,2");
  CHECK(dual_shape(Shape::empty(e6)) == Shape::full(e6));
  CHECK(dual_shape(S(Poset::get("a:2,2"), "1")).to_string() == "2,1");
  for (const char* spec : {"e6", "e7", "og:5", "qeven:3", "qeven:4", "a:2,3"})
    for (const auto& s : enumerate_shapes(Poset::get(spec))) {
      CHECK(dual_shape(dual_shape(s)) == s);
      CHECK(dual_shape(s).size() + s.size() == s.poset().size());
    }
  CHECK_THROWS(dual_shape(Shape::empty(Poset::get("grid:2,2"))));
}

TEST_CASE("rook strips") {
  const Poset& a22 = Poset::get("a:2,2");
  std::vector<std::string> names;
  for (const auto& s : rook_strips_over(S(a22, "1"))) names.push_back(s.to_string());
  CHECK(names == std::vector<std::string>{"1", "2", "1,1", "2,1"});
  CHECK(rook_strips_over(Shape::full(a22)).size() == 1);

  // Brute force: every ideal nu above lambda whose difference is an antichain.
  for (const char* spec : {"qeven:2", "e6", "og:5", "a:3,3"}) {
    const Poset& p = Poset::get(spec);
    auto all = enumerate_shapes(p);
    for (const auto& lam : all) {
      std::set<BoxSet> expect;
      for (const auto& nu : all)
        if (nu.contains(lam) && p.is_antichain(nu.boxes() - lam.boxes())) expect.insert(nu.boxes());
      std::set<BoxSet> got;
      for (const auto& nu : rook_strips_over(lam)) got.insert(nu.boxes());
      CHECK(got == expect);
    }
  }
}

TEST_CASE("shape parsing") {
  const Poset& e6 = Poset::get("e6");
  CHECK(S(e6, "").size() == 0);
  CHECK(S(e6, "(4,2)").size() == 6);
  CHECK_THROWS_AS(S(e6, "1,1"), ParseError);  // [2,3] needs [1,3]
  CHECK_THROWS_AS(S(e6, "5"), ParseError);
  CHECK_THROWS_AS(S(e6, "4,x"), ParseError);
}

TEST_CASE("ambient windows") {
  const Poset& g = Poset::get("grid:3,4");
  CHECK(g.size() == 12);
  CHECK(g.boundary().count() == 6);
  const Poset& sh = Poset::get("shifted:4");
  CHECK(sh.size() == 10);
  CHECK(sh.boundary().count() == 4);
  CHECK_FALSE(sh.bounded());
}
