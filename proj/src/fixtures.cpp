#include "kmin/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "kmin/rootsys.hpp"
#include "kmin/words.hpp"

namespace kmin {

namespace {

// Accumulates named checks into a verdict and a one-line detail.
class Report {
 public:
  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += ok ? what : "MISMATCH " + what;
  }
  std::pair<bool, std::string> result() const { return {ok_, detail_}; }

 private:
  bool ok_ = true;
  std::string detail_;
};

Shape S(const Poset& p, const char* rows) { return Shape::parse(p, rows); }

template <class E>
E element(const Poset& p, std::initializer_list<std::pair<const char*, long long>> terms) {
  E e(p);
  for (const auto& [s, c] : terms) e.add(S(p, s), c);
  return e;
}

bool contains(const std::vector<Tableau>& v, const Tableau& t) { return std::binary_search(v.begin(), v.end(), t); }

std::string rows_text(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    if (!out.empty()) out += "/";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + std::to_string(row[i]);
  }
  return out;
}

// ------------------------------------------------------------ fixtures

std::pair<bool, std::string> cayley() {
  const Poset& e6 = Poset::get("e6");
  Report r;
  GammaElement g2 = product(S(e6, "2"), S(e6, "2"));
  r.check(g2 == element<GammaElement>(e6, {{"4", 1}, {"3,1", 1}, {"4,1", 1}}), "G2*G2 = " + g2.to_string());
  r.check(product_tableaux(S(e6, "2"), S(e6, "2")).size() == 3, "3 tableaux for G2*G2");

  auto o4 = SignedKElement::basis(S(e6, "4")), o44 = SignedKElement::basis(S(e6, "4,4"));
  auto a = product(o4, o4), b = product(o4, o44), c = product(o44, o44);
  r.check(a == element<SignedKElement>(e6, {{"4,4", 1}, {"4,3,1", 1}, {"4,2,2", 1}, {"4,4,1", -1}, {"4,3,2", -1}}),
          "O4*O4 = " + a.to_string());
  r.check(b == element<SignedKElement>(e6, {{"4,4,4", 1}}), "O4*O44 = " + b.to_string());
  r.check(c == element<SignedKElement>(e6, {{"4,4,4,4", 1}}), "O44*O44 = " + c.to_string());
  std::size_t n = product_tableaux(S(e6, "4"), S(e6, "4")).size() +
                  product_tableaux(S(e6, "4,4"), S(e6, "4")).size() +
                  product_tableaux(S(e6, "4,4"), S(e6, "4,4")).size();
  r.check(n == 7, std::to_string(n) + " tableaux in the O4/O44 table");
  return r.result();
}

std::pair<bool, std::string> e7_products() {
  const Poset& e7 = Poset::get("e7");
  Report r;
  auto g5 = GammaElement::basis(S(e7, "5")), g54 = GammaElement::basis(S(e7, "5,4"));
  auto a = product(g5, g5), b = product(g5, g54), c = product(g54, g54);
  r.check(a == element<GammaElement>(e7, {{"5,4,1", 2}, {"5,3,2", 2}, {"5,4,2", 3}, {"5,3,3", 1}, {"5,4,3", 1}}),
          "G5*G5 = " + a.to_string());
  r.check(b == element<GammaElement>(e7, {{"5,5,4", 2}, {"5,5,3,1", 2}, {"5,4,4,1", 1}, {"5,5,4,1", 4}}),
          "G5*G54 = " + b.to_string());
  r.check(c == element<GammaElement>(e7, {{"5,5,5,2,1", 2}, {"5,5,4,2,1,1", 2}, {"5,5,5,2,1,1", 3}}),
          "G54*G54 = " + c.to_string());
  auto oa = product(to_schubert_basis(g5), to_schubert_basis(g5));
  r.check(oa.coeff(S(e7, "5,4,2")) == -3 && oa.coeff(S(e7, "5,3,3")) == -1 && oa.coeff(S(e7, "5,4,3")) == 1,
          "signed O5*O5 = " + oa.to_string());
  std::size_t n = product_tableaux(S(e7, "5"), S(e7, "5")).size() +
                  product_tableaux(S(e7, "5,4"), S(e7, "5")).size() +
                  product_tableaux(S(e7, "5,4"), S(e7, "5,4")).size();
  r.check(n == 25, std::to_string(n) + " tableaux found");
  return r.result();
}

std::pair<bool, std::string> e8_fails() {
  const Poset& e7 = Poset::get("e7");
  Report r;
  Shape lam = S(e7, "5,1"), mu = S(e7, "5,3,3"), nu = S(e7, "5,5,5,2,1,1");
  long long c = structure_constant(lam, mu, nu);
  r.check(c == 11, "c = " + std::to_string(c));
  for (auto o : {Orientation::Rowwise, Orientation::Columnwise}) {
    Tableau U = superstandard(mu, o);
    auto census = rectification_census(lam, nu, U);
    std::string name = o == Orientation::Rowwise ? "rowwise" : "columnwise";
    r.check(census.having.size() == 12 && census.unique == 10,
            name + " superstandard: " + std::to_string(census.having.size()) + " having, " +
                std::to_string(census.unique) + " unique");
  }
  return r.result();
}

std::pair<bool, std::string> non_urt_a() {
  const Poset& p = Poset::get("a:3,3");
  Report r;
  Tableau T = Tableau::parse(p, ".,.,./.,.,2/1,3,4");
  auto rects = rectify_all(T);
  std::vector<Tableau> expect{Tableau::parse(p, "1,2,4/3"), Tableau::parse(p, "1,2,4/3,4")};
  std::sort(expect.begin(), expect.end());
  std::string got;
  for (const auto& t : rects) got += (got.empty() ? "" : " and ") + rows_text(t);
  r.check(rects == expect, "rectifications " + got);
  return r.result();
}

BoxSet box(const Poset& p, int row, int col) {
  BoxSet s;
  s.set(p.index_or_throw({row, col}));
  return s;
}

std::pair<bool, std::string> non_urt_e7() {
  const Poset& e7 = Poset::get("e7");
  Report r;
  Shape lam = S(e7, "5,3,3");
  struct Case {
    const char* literal;
    Orientation o;
    const char* name;
  };
  for (const Case& k : {Case{".,.,.,.,./.,1,2,3,5/1,2,4,6,8/7,9/10/11", Orientation::Rowwise, "T"},
                        Case{".,.,.,.,./.,1,2,4,5/1,3,4,6,8/7,9/10/11", Orientation::Columnwise, "T-hat"}}) {
    Tableau T = Tableau::parse(e7, k.literal);
    Tableau U = superstandard(lam, k.o);
    auto first = rectify_all(forward_slide(T, box(e7, 1, 5)));
    auto second = rectify_all(forward_slide(T, box(e7, 2, 4)));
    r.check(first == std::vector<Tableau>{U}, std::string(k.name) + ": slide at (1,5) rectifies only to the superstandard");
    r.check(!contains(second, U), std::string(k.name) + ": slide at (2,4) misses it (" +
                                      std::to_string(second.size()) + " rectifications)");
  }
  return r.result();
}

std::pair<bool, std::string> non_urt_b() {
  const Poset& og = Poset::get("og:6");
  Report r;
  Tableau T = Tableau::parse(og, ".,.,.,.,2/.,1,2,4/3,5/6");
  Tableau U = superstandard(S(og, "4,2"), Orientation::Columnwise);
  r.check(rows_text(U) == "1,2,4,6/3,5", "columnwise superstandard " + rows_text(U));
  auto first = rectify_all(forward_slide(T, box(og, 1, 4)));
  auto second = rectify_all(forward_slide(T, box(og, 2, 2)));
  r.check(contains(first, U), "slide at (1,4) reaches it");
  r.check(!contains(second, U), "slide at (2,2) misses it");
  return r.result();
}

std::pair<bool, std::string> reading_word_example() {
  GridFilling g;
  auto put = [&](int row, int col, int v) { g.cells[{row, col}] = v; };
  put(1, 9, 2);
  put(2, 8, 1), put(2, 9, 2);
  put(3, 6, 2), put(3, 7, 2);
  put(4, 7, 3);
  put(5, 3, 1), put(5, 4, 2), put(5, 5, 4);
  put(6, 1, 1), put(6, 2, 2), put(6, 3, 3), put(6, 4, 3);
  put(7, 2, 2), put(7, 3, 3), put(7, 4, 4);
  put(8, 4, 5);
  std::set<Word> expect = {
      {2, 3, 1, 2, 3, 1, 5, 4, 3, 2, 4, 2, 3, 2, 1, 2, 2},
      {2, 3, 1, 2, 3, 5, 1, 4, 3, 2, 4, 2, 3, 2, 1, 2, 2},
      {2, 3, 1, 2, 3, 5, 4, 1, 3, 2, 4, 2, 3, 2, 1, 2, 2},
      {2, 3, 1, 2, 3, 5, 4, 3, 1, 2, 4, 2, 3, 2, 1, 2, 2},
  };
  auto words = reading_words(g);
  Report r;
  r.check(std::set<Word>(words.begin(), words.end()) == expect && words.size() == 4,
          std::to_string(words.size()) + " reading words");
  Permutation h = hecke_of_word(*expect.begin());
  bool same = std::all_of(expect.begin(), expect.end(), [&](const Word& w) { return hecke_of_word(w) == h; });
  r.check(same, "common Hecke permutation " + h.to_string());
  return r.result();
}

std::pair<bool, std::string> tableau_products() {
  const Poset& g = Poset::get("grid:3,3");
  auto R = [&](std::vector<std::vector<int>> rows) { return Tableau::from_rows(g, rows); };
  Report r;
  Tableau pq = tableau_product(R({{1, 2}, {4}}), R({{1, 3}, {3}}));
  r.check(rows_text(pq) == "1,2,3/2/4", "(1,2/4).(1,3/3) = " + rows_text(pq));
  Tableau one = R({{1}}), two = R({{2}}), mid = R({{1, 4}, {3}});
  Tableau left = tableau_product(tableau_product(one, mid), two);
  Tableau right = tableau_product(one, tableau_product(mid, two));
  r.check(rows_text(left) == "1,2,4/3", "left bracketing " + rows_text(left));
  r.check(rows_text(right) == "1,2,4/3,4", "right bracketing " + rows_text(right));
  for (auto [lam, mu, expect] : {std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>{{1}, {1}, {1}},
                                 {{1}, {2}, {2}},
                                 {{2}, {1, 1}, {2, 1}}}) {
    auto got = minimal_product_shape(lam, mu);
    r.check(got == expect, rows_to_string(lam) + " . " + rows_to_string(mu) + " = " + rows_to_string(got));
  }
  return r.result();
}

std::pair<bool, std::string> doubling_display() {
  Tableau T = Tableau::parse(Poset::get("shifted:6"), ".,.,.,.,.,2/.,.,1,3,4/2,4,6,7/5,7");
  Tableau D = doubling(T);
  Report r;
  r.check(D.poset().spec() == "grid:6,6" &&
              D.to_literal() == ".,.,.,.,.,2/.,.,.,1,3,4/.,.,2,4,6,7/.,1,4,5,7/.,3,6,7/2,4,7",
          "doubled " + D.to_literal());
  r.check(D == conjugate(D), "diagonal symmetric");
  return r.result();
}

std::pair<bool, std::string> pieri_b_tableau() {
  Tableau T = Tableau::parse(Poset::get("shifted:9"), ".,.,.,.,.,.,.,1,6/.,.,.,.,.,.,5/.,.,.,2,5/2,3,4");
  Report r;
  r.check(is_pieri_tableau_b(T), "row word " + to_string(row_word(T)) + " is a Pieri word of type B");
  return r.result();
}

std::pair<bool, std::string> mininc() {
  const Poset& og = Poset::get("og:6");
  Tableau M = minimal_tableau(S(og, "5,3,2"));
  Report r;
  r.check(rows_text(M) == "1,2,3,4,5/3,4,5/5,6", "M(5,3,2) = " + rows_text(M));
  return r.result();
}

std::pair<bool, std::string> type_b_urt() {
  Tableau U = Tableau::parse(Poset::get("og:4"), "1,2,4/3,5");
  auto v = is_urt(bounded_window(U));
  Report r;
  r.check(v.status == UrtStatus::Certified, "1,2,4/3,5 " + to_string(v.status) + " over " +
                                                std::to_string(v.class_size) + " class members");
  return r.result();
}

std::pair<bool, std::string> type_a_class() {
  const Poset& g = Poset::get("grid:3,3");
  auto R = [&](std::vector<std::vector<int>> rows) { return Tableau::from_rows(g, rows); };
  std::vector<Tableau> ts{R({{1, 2, 4}, {2, 3, 5}, {4, 5}}), R({{1, 2, 4}, {2, 3, 5}, {4}}),
                          R({{1, 2, 4}, {2, 3}, {4, 5}})};
  Report r;
  Permutation h = hecke_of_tableau(ts[0]);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    auto v = kknuth_equiv(row_word(ts[0]), row_word(ts[i]));
    r.check(v.status == Equiv::Equivalent && hecke_of_tableau(ts[i]) == h,
            "T1 ~ T" + std::to_string(i + 1) + " (" + std::to_string(v.path.size()) + "-word path)");
  }
  return r.result();
}

std::pair<bool, std::string> rootsys_checks(const char* label, int gamma, int shapes) {
  RootSystem R = RootSystem::parse(label);
  Report r;
  auto inv = check_inversion_theorem(R, gamma);
  r.check(inv.all_pass() && inv.passed() == shapes,
          std::to_string(inv.passed()) + "/" + std::to_string(inv.entries.size()) + " shapes pass the inversion check");
  auto bru = check_bruhat_containment(R, gamma);
  r.check(bru.all_pass(), std::to_string(bru.passed()) + "/" + std::to_string(bru.entries.size()) +
                              " Bruhat containment checks");
  return r.result();
}

std::pair<bool, std::string> lr_examples() {
  Report r;
  const Poset& e6 = Poset::get("e6");
  auto g2 = product(S(e6, "2"), S(e6, "2"));
  bool ones = g2.size() == 3 &&
              std::all_of(g2.terms().begin(), g2.terms().end(), [](const auto& t) { return t.second == 1; });
  r.check(ones, "e6: three constants equal to 1 for G2*G2");
  const Poset& a = Poset::get("a:2,2");
  r.check(structure_constant(Shape::empty(a), Shape::empty(a), Shape::empty(a)) == 1, "a:2,2: empty constant 1");
  return r.result();
}

std::pair<bool, std::string> quadric() {
  Report r;
  for (int n = 2; n <= 5; ++n) {
    auto q = quadric_pattern(n);
    r.check(q.ok, "qeven:" + std::to_string(n) + " pattern");
  }
  return r.result();
}

}  // namespace

const std::vector<Fixture>& reference_fixtures() {
  static const std::vector<Fixture> all = {
      {"cayley", "Cayley plane square of G(2) and the O(4), O(4,4) table", cayley},
      {"e7-products", "Freudenthal variety products of G(5) and G(5,4)", e7_products},
      {"e8-fails", "E7 constant c = 11 and superstandard rectification counts", e8_fails},
      {"non-urt-a", "Gr(3,6) tableau with two rectifications", non_urt_a},
      {"non-urt-e7", "E7 slide-dependent rectification", non_urt_e7},
      {"non-urt-b", "OG(6,12) slide-dependent rectification", non_urt_b},
      {"reading-words", "reading words of a weakly increasing filling", reading_word_example},
      {"tableau-products", "type A tableau products and minimal product shapes", tableau_products},
      {"doubling", "doubling of a shifted skew tableau", doubling_display},
      {"pieri-b-tableau", "type B Pieri tableau", pieri_b_tableau},
      {"mininc", "minimal increasing tableau of shape (5,3,2) in OG", mininc},
      {"type-b-urt", "shifted tableau 1,2,4/3,5 is a URT", type_b_urt},
      {"type-a-class", "three type A tableaux in one K-theoretic class", type_a_class},
      {"lr-examples", "small structure constants", lr_examples},
      {"quadric", "hyperplane products on even quadrics", quadric},
      {"rootsys-e6", "E6 node 6 inversion sets and Bruhat containment", [] { return rootsys_checks("E6", 6, 27); }},
      {"rootsys-e7", "E7 node 7 inversion sets and Bruhat containment", [] { return rootsys_checks("E7", 7, 56); }},
  };
  return all;
}

std::vector<FixtureResult> run_fixtures(const std::vector<std::string>& only,
                                        const std::function<void(const FixtureResult&)>& progress) {
  const auto& all = reference_fixtures();
  for (const auto& id : only)
    if (std::none_of(all.begin(), all.end(), [&](const Fixture& f) { return f.id == id; }))
      throw std::invalid_argument("unknown fixture: " + id);
  std::vector<FixtureResult> out;
  for (const auto& f : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), f.id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    FixtureResult res{f.id, false, "", 0};
    try {
      std::tie(res.pass, res.detail) = f.run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) progress(res);
    out.push_back(std::move(res));
  }
  return out;
}

// ------------------------------------------------------------- censuses

UrtCensus urt_census(const Poset& p, int max_size, const UrtOptions& opts,
                     const std::function<void(const Shape&)>& progress) {
  std::vector<Shape> shapes;
  for (const auto& s : enumerate_shapes(p))
    if (max_size < 0 || s.size() <= max_size) shapes.push_back(s);
  std::vector<UrtCensus> parts(shapes.size());
  std::mutex mu;
  parallel_for(shapes.size(), [&](std::size_t i) {
    UrtCensus& c = parts[i];
    for_each_packed_tableau(shapes[i], [&](const Tableau& T) {
      ++c.tableaux;
      UrtVerdict v = is_urt(T, opts);
      if (v.status == UrtStatus::Certified) {
        ++c.certified;
        return true;
      }
      (v.status == UrtStatus::Refuted ? c.refuted : c.inconclusive)++;
      if (!c.first_failure) c.first_failure = T, c.failure_reason = v.reason;
      return true;
    });
    if (progress) {
      std::lock_guard<std::mutex> lock(mu);
      progress(shapes[i]);
    }
  });
  UrtCensus total;
  total.shapes = shapes.size();
  for (auto& c : parts) {
    total.tableaux += c.tableaux;
    total.certified += c.certified;
    total.refuted += c.refuted;
    total.inconclusive += c.inconclusive;
    if (!total.first_failure && c.first_failure) total.first_failure = c.first_failure, total.failure_reason = c.failure_reason;
  }
  return total;
}

ShapeCensus minimal_class_census(const Poset& p, std::size_t budget, const std::function<void(const Shape&)>& progress) {
  auto shapes = enumerate_shapes(p);
  std::vector<char> ok(shapes.size(), 0);
  std::mutex mu;
  parallel_for(shapes.size(), [&](std::size_t i) {
    JdtClass K = jdt_class(minimal_tableau(shapes[i]), budget);
    ok[i] = K.exhausted && K.straight_members().size() == 1;
    if (progress) {
      std::lock_guard<std::mutex> lock(mu);
      progress(shapes[i]);
    }
  });
  ShapeCensus out;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    ++out.checked;
    if (ok[i])
      ++out.passed;
    else
      out.failures.push_back(shapes[i].to_string());
  }
  return out;
}

ShapeCensus minimal_skew_census(const Poset& p, std::size_t budget) {
  auto shapes = enumerate_shapes(p);
  ShapeCensus out;
  for (const auto& nu : shapes)
    for (const auto& lam : shapes) {
      if (!nu.contains(lam)) continue;
      ++out.checked;
      auto rects = rectify_all(minimal_tableau(p, lam.boxes(), nu.boxes()), budget);
      if (rects.size() == 1 && rects[0] == minimal_tableau(rects[0].outer_shape()))
        ++out.passed;
      else
        out.failures.push_back(nu.to_string() + "/" + lam.to_string());
    }
  return out;
}

QuadricCheck quadric_pattern(int n) {
  const Poset& q = Poset::get(PosetFamily::quadric_even(n));
  std::map<int, std::vector<Shape>> by_size;
  for (const auto& s : enumerate_shapes(q)) by_size[s.size()].push_back(s);
  QuadricCheck out;
  out.ok = static_cast<int>(by_size.size()) == 2 * n + 1 && by_size[n].size() == 2;
  for (int k = 0; k <= 2 * n; ++k)
    if (k != n) out.ok = out.ok && by_size[k].size() == 1;
  if (!out.ok) {
    out.lines.push_back("unexpected shape counts");
    return out;
  }
  auto X = [&](int k) { return SignedKElement::basis(by_size[k].front()); };
  SignedKElement h = X(1);
  for (int k = 0; k <= 2 * n; ++k)
    for (const auto& s : by_size[k]) {
      SignedKElement expect(q);
      if (k == n - 1)
        expect = SignedKElement::basis(by_size[n][0]) + SignedKElement::basis(by_size[n][1]) - X(n + 1);
      else if (k < 2 * n)
        expect = X(k + 1);
      SignedKElement got = product(h, SignedKElement::basis(s));
      out.ok = out.ok && got == expect;
      out.lines.push_back((got == expect ? "" : "MISMATCH ") + std::string("O[1]*O[") + rows_to_string(s.rows()) +
                          "] = " + got.to_string());
    }
  SignedKElement point = n % 2 == 0 ? X(2 * n) : SignedKElement(q);
  for (const auto& s : by_size[n]) {
    SignedKElement got = product(SignedKElement::basis(s), SignedKElement::basis(s));
    out.ok = out.ok && got == point;
    out.lines.push_back((got == point ? "" : "MISMATCH ") + std::string("O[") + rows_to_string(s.rows()) + "]^2 = " +
                        got.to_string());
  }
  return out;
}

}  // namespace kmin
