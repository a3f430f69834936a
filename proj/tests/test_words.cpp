#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "kmin/words.hpp"
#include "testing.hpp"

using namespace kmin;

namespace {

GridFilling weakly_increasing_example() {
  GridFilling g;
  auto put = [&](int r, int c, int v) { g.cells[{r, c}] = v; };
  put(1, 9, 2);
  put(2, 8, 1), put(2, 9, 2);
  put(3, 6, 2), put(3, 7, 2);
  put(4, 7, 3);
  put(5, 3, 1), put(5, 4, 2), put(5, 5, 4);
  put(6, 1, 1), put(6, 2, 2), put(6, 3, 3), put(6, 4, 3);
  put(7, 2, 2), put(7, 3, 3), put(7, 4, 4);
  put(8, 4, 5);
  return g;
}

Word W(std::initializer_list<int> l) { return Word(l); }

Word random_word(int len, int letters) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(testing::uniform(1, letters));
  return w;
}

// Brute-force lis/lds over all subsequences.
int brute_mono(const Word& w, bool increasing) {
  const int n = static_cast<int>(w.size());
  int best = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    int last = 0, len = 0;
    bool ok = true, first = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!first) ok = increasing ? w[i] > last : w[i] < last;
      last = w[i];
      first = false;
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

// All increasing fillings of a straight shape with entries in 1..top.
void for_each_filling(const Shape& s, int top, const std::function<void(const Tableau&)>& f) {
  const Poset& p = s.poset();
  std::vector<int> boxes;
  s.boxes().for_each([&](int b) { boxes.push_back(b); });
  std::vector<int> v(p.size(), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == boxes.size()) {
      f(Tableau(p, {}, s.boxes(), v));
      return;
    }
    int lo = 1;
    for (int d : p.down(boxes[k])) lo = std::max(lo, v[d] + 1);
    for (int x = lo; x <= top; ++x) {
      v[boxes[k]] = x;
      self(self, k + 1);
    }
    v[boxes[k]] = 0;
  };
  rec(rec, 0);
}

// Inversion count of the one-line window, computed directly.
int inversions(const Permutation& p) {
  auto v = p.one_line(p.lo(), p.hi());
  int c = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j];
  return c;
}

}  // namespace

TEST_CASE("word parsing") {
  CHECK(parse_word("1,2,3") == W({1, 2, 3}));
  CHECK(parse_word("(2, 3,2)") == W({2, 3, 2}));
  CHECK(parse_word("").empty());
  CHECK(parse_word("()").empty());
  CHECK_THROWS(parse_word("1,,2"));
  CHECK(to_string(W({1, 2})) == "(1,2)");
  CHECK(dagger_double(W({1, 2, 3})) == W({3, 2, 1, 1, 2, 3}));
}

TEST_CASE("reading words of the weakly increasing example") {
  GridFilling g = weakly_increasing_example();
  REQUIRE(g.hook_closed());
  REQUIRE(g.weakly_increasing());
  auto words = reading_words(g);
  std::set<Word> got(words.begin(), words.end());
  std::set<Word> expect = {
      W({2, 3, 1, 2, 3, 1, 5, 4, 3, 2, 4, 2, 3, 2, 1, 2, 2}),
      W({2, 3, 1, 2, 3, 5, 1, 4, 3, 2, 4, 2, 3, 2, 1, 2, 2}),
      W({2, 3, 1, 2, 3, 5, 4, 1, 3, 2, 4, 2, 3, 2, 1, 2, 2}),
      W({2, 3, 1, 2, 3, 5, 4, 3, 1, 2, 4, 2, 3, 2, 1, 2, 2}),
  };
  CHECK(got == expect);
  CHECK(words.size() == 4);
  for (const auto& w : expect) CHECK(is_reading_word(g, w));
  CHECK_FALSE(is_reading_word(g, row_word(g)));

  Permutation h = hecke_of_word(*expect.begin());
  for (const auto& w : expect) CHECK(hecke_of_word(w) == h);
  for (const auto& a : expect)
    for (const auto& b : expect) CHECK(kknuth_equiv(a, b).status == Equiv::Equivalent);
}

TEST_CASE("reading word edge cases") {
  GridFilling row;
  row.cells = {{{1, 1}, 1}, {{1, 2}, 2}, {{1, 3}, 3}};
  CHECK(reading_words(row) == std::vector<Word>{W({1, 2, 3})});

  // Equal neighbours in both directions force contradictory orders.
  GridFilling none;
  none.cells = {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}};
  CHECK(reading_words(none).empty());

  GridFilling gap;
  gap.cells = {{{1, 1}, 1}, {{2, 2}, 2}};
  CHECK_THROWS_AS(reading_words(gap), std::invalid_argument);

  // Row words of increasing tableaux are reading words.
  const Poset& p = Poset::get("a:4,5");
  for (int trial = 0; trial < 40; ++trial) {
    Tableau T = testing::random_tableau(p, testing::uniform(0, 6), testing::uniform(1, 10));
    GridFilling g = GridFilling::of(T);
    CHECK(is_reading_word(g, row_word(T)));
    auto all = reading_words(g, 50);
    CHECK(!all.empty());
    for (const auto& w : all) CHECK(hecke_of_word(w) == hecke_of_word(row_word(T)));
  }
}

TEST_CASE("row words") {
  const Poset& a = Poset::get("a:3,3");
  CHECK(row_word(minimal_tableau(Shape::parse(a, "2,1"))) == W({2, 1, 2}));
  const Poset& g = Poset::get("grid:5,9");
  Tableau M = minimal_tableau(g, g.ideal_from_rows({5, 3, 2}), g.ideal_from_rows({9, 7, 6, 6, 4}));
  CHECK(row_word(M) == W({2, 3, 4, 5, 1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4}));
  CHECK_THROWS(row_word(minimal_tableau(Shape::full(Poset::get("e6")))));
}

TEST_CASE("basic K-Knuth moves") {
  auto has = [](const std::vector<Word>& v, const Word& w) { return std::find(v.begin(), v.end(), w) != v.end(); };
  CHECK(has(kknuth_basic_moves(W({1, 2, 1})), W({2, 1, 2})));
  CHECK(has(kknuth_basic_moves(W({2, 1, 2})), W({1, 2, 1})));
  CHECK(has(kknuth_basic_moves(W({1, 1})), W({1})));
  CHECK(has(kknuth_basic_moves(W({1})), W({1, 1})));
  CHECK(has(kknuth_basic_moves(W({1, 3, 2})), W({3, 1, 2})));
  CHECK(has(kknuth_basic_moves(W({3, 1, 2})), W({1, 3, 2})));
  CHECK(has(kknuth_basic_moves(W({2, 1, 3})), W({2, 3, 1})));
  CHECK_FALSE(has(kknuth_basic_moves(W({2, 1, 3})), W({1, 2, 3})));
  CHECK_FALSE(has(kknuth_basic_moves(W({1, 2})), W({2, 1})));
  CHECK(has(weak_kknuth_basic_moves(W({1, 2})), W({2, 1})));
  for (const auto& w : kknuth_basic_moves(W({2, 3, 1, 2}))) CHECK(w != W({2, 3, 1, 2}));
}

TEST_CASE("moves preserve lis, lds and the Hecke permutation") {
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(testing::uniform(1, 7), 5);
    for (const auto& x : kknuth_basic_moves(w)) {
      CHECK(lis(x) == lis(w));
      CHECK(lds(x) == lds(w));
      CHECK(hecke_of_word(x) == hecke_of_word(w));
    }
    for (const auto& x : weak_kknuth_basic_moves(w)) {
      Word a = dagger_double(w), b = dagger_double(x);
      CHECK(hecke_of_word(a) == hecke_of_word(b));
      CHECK(lis(a) == lis(b));
      CHECK(lds(a) == lds(b));
    }
  }
}

TEST_CASE("K-Knuth equivalence search") {
  auto one = kknuth_equiv(W({1, 2, 1}), W({2, 1, 2}));
  CHECK(one.status == Equiv::Equivalent);
  CHECK(one.path.size() == 2);
  CHECK(kknuth_equiv(W({1}), W({2})).status == Equiv::Refuted);

  // Smallest instance of the longer-intermediate chain, b1=1 < d0=2 < c1=3 < d1=4.
  auto chain = kknuth_equiv(W({1, 3, 1, 4, 2}), W({1, 3, 2, 4, 2}));
  REQUIRE(chain.status == Equiv::Equivalent);
  CHECK(chain.path.front() == W({1, 3, 1, 4, 2}));
  CHECK(chain.path.back() == W({1, 3, 2, 4, 2}));
  for (std::size_t i = 1; i < chain.path.size(); ++i) {
    auto nb = kknuth_basic_moves(chain.path[i - 1]);
    CHECK(std::find(nb.begin(), nb.end(), chain.path[i]) != nb.end());
  }
  // This instance also connects without ever lengthening the word.
  EquivOptions tight;
  tight.slack = 0;
  auto flat = kknuth_equiv(W({1, 3, 1, 4, 2}), W({1, 3, 2, 4, 2}), tight);
  REQUIRE(flat.status == Equiv::Equivalent);
  for (const auto& w : flat.path) CHECK(w.size() <= 5);

  // The pair (2,3,2,4) vs (2,3,4) is separated by its Hecke permutations.
  auto sep = kknuth_equiv(W({2, 3, 2, 4}), W({2, 3, 4}));
  CHECK(sep.status == Equiv::Refuted);
  CHECK(hecke_of_word(W({2, 3, 2, 4})).length() == 4);
  CHECK(hecke_of_word(W({2, 3, 4})).length() == 3);

  EquivOptions tiny;
  tiny.budget = 3;
  CHECK(kknuth_equiv(W({1, 3, 1, 4, 2}), W({1, 3, 2, 4, 2}), tiny).status == Equiv::Inconclusive);
}

TEST_CASE("weak K-Knuth equivalence") {
  CHECK(weak_kknuth_equiv(W({1, 2}), W({2, 1})).status == Equiv::Equivalent);
  CHECK(kknuth_equiv(W({1, 2}), W({2, 1})).status != Equiv::Equivalent);
  // Diagonal configuration with a < b <= y < c < d.
  CHECK(weak_kknuth_equiv(W({2, 1, 2, 5, 4, 3}), W({4, 1, 2, 5, 4, 3})).status == Equiv::Equivalent);
  CHECK(weak_kknuth_equiv(W({2, 1, 2, 5, 4, 2}), W({4, 1, 2, 5, 4, 2})).status == Equiv::Equivalent);
  for (int trial = 0; trial < 60; ++trial) {
    Word u = random_word(testing::uniform(1, 5), 4);
    auto nb = kknuth_basic_moves(u);
    Word v = nb[testing::uniform(0, static_cast<int>(nb.size()) - 1)];
    auto nb2 = kknuth_basic_moves(v);
    v = nb2[testing::uniform(0, static_cast<int>(nb2.size()) - 1)];
    REQUIRE(kknuth_equiv(u, v).status == Equiv::Equivalent);
    CHECK(weak_kknuth_equiv(u, v).status == Equiv::Equivalent);
  }
}

TEST_CASE("reading words of hook-closed tableaux are equivalent") {
  const Poset& p = Poset::get("a:3,4");
  int inconclusive = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Tableau T = testing::random_tableau(p, testing::uniform(0, 4), testing::uniform(2, 6));
    auto words = reading_words(T, 6);
    for (std::size_t i = 1; i < words.size(); ++i) {
      auto v = kknuth_equiv(words[0], words[i]);
      CHECK(v.status != Equiv::Refuted);
      inconclusive += v.status == Equiv::Inconclusive;
    }
  }
  MESSAGE("inconclusive reading-word pairs: " << inconclusive);
}

TEST_CASE("jdt classes never separate K-Knuth classes") {
  const Poset& g = Poset::get("grid:4,4");
  for (int trial = 0; trial < 12; ++trial) {
    Tableau T = testing::random_tableau(g, testing::uniform(1, 3), testing::uniform(2, 4), 1);
    auto cls = jdt_class(T, 20000);
    Permutation h = hecke_of_tableau(T);
    for (std::size_t i = 0; i < cls.members.size() && i < 6; ++i) {
      CHECK(hecke_of_tableau(cls.members[i]) == h);
      EquivOptions o;
      o.budget = 20000;
      CHECK(kknuth_equiv(row_word(T), row_word(cls.members[i]), o).status != Equiv::Refuted);
    }
  }
}

TEST_CASE("Hecke products") {
  Permutation s1 = Permutation::simple(1), s2 = Permutation::simple(2);
  CHECK(hecke_product(s1, s1) == s1);
  CHECK(hecke_product(hecke_product(s1, s2), s1) == hecke_product(hecke_product(s2, s1), s2));
  Permutation w = hecke_of_word(W({2, 1, 2}));
  CHECK(w.length() == 3);
  CHECK(w.one_line(1, 3) == std::vector<int>{3, 2, 1});
  CHECK(w.to_string() == "1:[3,2,1]");
  CHECK(hecke_of_word({}).is_identity());
  for (int p = 1; p <= 6; ++p) {
    Word row;
    for (int i = 1; i <= p; ++i) row.push_back(i);
    Permutation m = hecke_of_word(row);
    std::vector<int> expect;
    for (int i = 2; i <= p + 1; ++i) expect.push_back(i);
    expect.push_back(1);
    CHECK(m.one_line(1, p + 1) == expect);
  }
  for (int trial = 0; trial < 200; ++trial) {
    Word a = random_word(testing::uniform(0, 6), 5), b = random_word(testing::uniform(0, 6), 5);
    Permutation u = hecke_of_word(a), v = hecke_of_word(b);
    Word ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(hecke_product(u, v) == hecke_of_word(ab));
    CHECK(u.length() == inversions(u));
    CHECK(hecke_of_word(u.reduced_word()) == u);
    CHECK(static_cast<int>(u.reduced_word().size()) == u.length());
    bool reduced = hecke_product(u, v).length() == u.length() + v.length();
    CHECK(reduced == (hecke_product(u, v) == u * v));
    CHECK(u * u.inverse() == Permutation{});
  }
  CHECK(Permutation::parse("2:[3,2]") == Permutation::simple(2));
  CHECK(Permutation::parse("1:[1,3,2]") == Permutation::simple(2));
  CHECK_THROWS(Permutation::parse("1:[1,1]"));
  CHECK(Permutation::simple(1).shifted(2) == Permutation::simple(3));
}

TEST_CASE("lis and lds") {
  CHECK(lis(W({1, 2, 3})) == 3);
  CHECK(lds(W({1, 2, 3})) == 1);
  CHECK(lis(W({3, 2, 1})) == 1);
  CHECK(lds(W({3, 2, 1})) == 3);
  CHECK(lis(W({2, 1, 2})) == 2);
  CHECK(lds(W({2, 1, 2})) == 2);
  CHECK(lis(W({2, 2})) == 1);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(testing::uniform(0, 9), 5);
    CHECK(lis(w) == brute_mono(w, true));
    CHECK(lds(w) == brute_mono(w, false));
  }
  const Poset& p = Poset::get("a:4,4");
  for (const auto& lam : enumerate_shapes(p)) {
    if (lam.size() == 0) continue;
    auto rows = lam.rows();
    Tableau T = testing::random_filling(p, {}, lam.boxes(), 2);
    CHECK(lis(row_word(T)) == rows[0]);
    CHECK(lds(row_word(T)) == static_cast<int>(std::count_if(rows.begin(), rows.end(), [](int r) { return r > 0; })));
  }
}

TEST_CASE("Grassmannian permutations") {
  CHECK(grassmannian_permutation({}).is_identity());
  CHECK(grassmannian_permutation({1}) == Permutation::simple(1));
  Permutation w21 = grassmannian_permutation({2, 1});
  CHECK(w21.one_line(1, 4) == std::vector<int>{2, 4, 1, 3});
  CHECK(w21.length() == 3);
  const Poset& p = Poset::get("a:4,4");
  for (const auto& lam : enumerate_shapes(p)) {
    Permutation w = grassmannian_permutation(lam.rows());
    CHECK(w.length() == lam.size());
    // w(M_lambda)^{-1}(1) = lambda_1 + 1.
    if (lam.size()) CHECK(hecke_of_tableau(minimal_tableau(lam)).inverse()(1) == lam.rows()[0] + 1);
  }
  // G_{w_lambda} = G_lambda: exactly one increasing tableau of shape lambda has
  // w(T) = w_lambda^{-1}, and no tableau of another shape of the same size does.
  for (const auto& lam : enumerate_shapes(Poset::get("a:3,3"))) {
    if (lam.size() == 0) continue;
    const Permutation target = grassmannian_permutation(lam.rows()).inverse();
    const int top = target.hi() - 1;
    for (const auto& mu : enumerate_shapes(lam.poset())) {
      if (mu.size() != lam.size()) continue;
      int hits = 0;
      for_each_filling(mu, top, [&](const Tableau& T) { hits += hecke_of_tableau(T) == target; });
      CHECK(hits == (mu == lam ? 1 : 0));
    }
  }
}

TEST_CASE("conjecture sweep") {
  auto rep = conjecture_search(4, 3);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.forward_violations == 0);
  CHECK(rep.pairs == rep.agree + rep.inconclusive);
  MESSAGE("pairs " << rep.pairs << ", inconclusive " << rep.inconclusive);
}
