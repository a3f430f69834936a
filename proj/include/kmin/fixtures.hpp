#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmin/kring.hpp"
#include "kmin/poset.hpp"
#include "kmin/tableau.hpp"

namespace kmin {

struct FixtureResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Fixture {
  std::string id;
  std::string description;
  std::function<std::pair<bool, std::string>()> run;
};

const std::vector<Fixture>& reference_fixtures();
// Runs the selected fixtures (all when only is empty) in suite order.
// Unknown ids throw std::invalid_argument.
std::vector<FixtureResult> run_fixtures(const std::vector<std::string>& only = {},
                                        const std::function<void(const FixtureResult&)>& progress = {});

// ------------------------------------------------------------- censuses

struct UrtCensus {
  std::size_t shapes = 0;
  std::size_t tableaux = 0;
  std::size_t certified = 0;
  std::size_t refuted = 0;
  std::size_t inconclusive = 0;
  std::optional<Tableau> first_failure;
  std::string failure_reason;
  bool all_certified() const { return tableaux > 0 && certified == tableaux; }
};

// is_urt on every packed straight tableau of every shape of size <= max_size
// (all shapes when max_size < 0).
UrtCensus urt_census(const Poset& p, int max_size = -1, const UrtOptions& opts = {},
                     const std::function<void(const Shape&)>& progress = {});

struct ShapeCensus {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;  // "lambda" or "nu/lambda"
  bool ok() const { return checked > 0 && passed == checked; }
};

// For every straight shape, the class of M_lambda has exactly one straight member.
ShapeCensus minimal_class_census(const Poset& p, std::size_t budget = default_budget(),
                                 const std::function<void(const Shape&)>& progress = {});
// For every pair lambda <= nu, rectify_all(M_{nu/lambda}) is a single minimal tableau.
ShapeCensus minimal_skew_census(const Poset& p, std::size_t budget = default_budget());

struct QuadricCheck {
  bool ok = false;
  std::vector<std::string> lines;  // one per checked product
};

// O_(1) times every class, and the squares of the two middle classes, on qeven:n.
QuadricCheck quadric_pattern(int n);

}  // namespace kmin
