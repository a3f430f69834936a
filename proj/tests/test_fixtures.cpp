#include "doctest.h"

#include <set>

#include "kmin/fixtures.hpp"

using namespace kmin;

TEST_CASE("fixture ids are unique and selectable") {
  std::set<std::string> ids;
  for (const auto& f : reference_fixtures()) {
    CHECK(ids.insert(f.id).second);
    CHECK_FALSE(f.description.empty());
  }
  CHECK(ids.count("cayley") == 1);
  auto one = run_fixtures({"mininc"});
  REQUIRE(one.size() == 1);
  CHECK(one[0].id == "mininc");
  CHECK_THROWS_AS(run_fixtures({"no-such-fixture"}), std::invalid_argument);
}

TEST_CASE("every fixture passes") {
  for (const auto& r : run_fixtures()) CHECK_MESSAGE(r.pass, r.id << ": " << r.detail);
}

TEST_CASE("URT census detects the Gr(3,6) failures") {
  auto ok = urt_census(Poset::get("a:2,2"));
  CHECK(ok.all_certified());
  CHECK(ok.shapes == 6);
  auto bad = urt_census(Poset::get("a:3,3"));
  CHECK(bad.refuted > 0);
  REQUIRE(bad.first_failure);
  CHECK(is_urt(*bad.first_failure).status == UrtStatus::Refuted);
  CHECK(bad.certified + bad.refuted + bad.inconclusive == bad.tableaux);
}

TEST_CASE("packed tableaux counts") {
  const Poset& g = Poset::get("a:2,2");
  // 2x2 square: 1,2/2,3 and 1,2/3,4 and 1,3/2,4.
  CHECK(count_packed_tableaux(Shape::full(g)) == 3);
  CHECK(count_packed_tableaux(Shape::empty(g)) == 1);
  CHECK(count_packed_tableaux(Shape::parse(g, "2")) == 1);
  std::size_t seen = 0;
  for_each_packed_tableau(Shape::full(Poset::get("e6")), [&](const Tableau& t) {
    auto vs = t.value_set();
    CHECK(vs.back() == static_cast<int>(vs.size()));
    return ++seen < 50;
  });
  CHECK(seen == 50);
}

TEST_CASE("censuses of minimal tableaux") {
  auto cls = minimal_class_census(Poset::get("og:5"));
  CHECK(cls.ok());
  CHECK(cls.checked == 16);
  auto skew = minimal_skew_census(Poset::get("a:2,3"));
  CHECK(skew.ok());
  // Nested pairs in a 2x3 box.
  CHECK(skew.checked == 50);
}

TEST_CASE("quadric pattern lines") {
  auto q = quadric_pattern(3);
  CHECK(q.ok);
  // 8 shapes times O_(1), plus two middle squares.
  CHECK(q.lines.size() == 10);
}
