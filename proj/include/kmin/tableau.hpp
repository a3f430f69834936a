#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/common.hpp"
#include "kmin/poset.hpp"

namespace kmin {

// Increasing filling of the skew shape outer/inner of a poset.
// Values outside the skew shape are stored as 0 so that equality and
// hashing only see the shape and the filled entries.
class Tableau {
 public:
  Tableau(const Poset& p, BoxSet inner, BoxSet outer, std::vector<int> values);
  static Tableau empty(const Poset& p, BoxSet at = {}) { return Tableau(p, at, at, std::vector<int>(p.size(), 0)); }
  // No validation; values must already be zero outside outer - inner.
  static Tableau unchecked(const Poset& p, BoxSet inner, BoxSet outer, std::vector<int> values);
  static Tableau from_cells(const Poset& p, BoxSet inner, const std::map<Box, int>& cells);
  // rows[r] lists the entries of row r+1 starting at that row's first box.
  static Tableau from_rows(const Poset& p, const std::vector<std::vector<int>>& rows);
  // ".,.,.,1/.,2,4,6/3,4,5": rows separated by '/', '.' marks inner boxes,
  // entries start at the first box of each poset row.
  static Tableau parse(const Poset& p, std::string_view literal);
  // "<poset spec>|<literal>", e.g. "e6|.,.,.,1/.,2,4,6/3,4,5".
  static Tableau parse_with_header(std::string_view text);

  const Poset& poset() const { return *poset_; }
  const BoxSet& inner() const { return inner_; }
  const BoxSet& outer() const { return outer_; }
  BoxSet skew() const { return outer_ - inner_; }
  Shape inner_shape() const { return Shape(*poset_, inner_); }
  Shape outer_shape() const { return Shape(*poset_, outer_); }
  bool straight() const { return inner_.empty(); }
  int size() const { return skew().count(); }
  const std::vector<int>& values() const { return values_; }
  int at(int box) const { return values_[box]; }
  std::optional<int> at(const Box& b) const;

  std::vector<int> value_set() const;  // sorted, distinct
  int min_value() const;
  int max_value() const;
  // Straight or skew entries grouped by poset row (inner boxes omitted).
  std::vector<std::vector<int>> rows() const;
  std::map<Box, int> cells() const;

  std::string to_literal() const;
  std::string render() const;  // ASCII picture in grid coordinates

  // Boxes with values in [a, b].
  Tableau restrict_values(int a, int b) const;
  // Order-isomorphic copy with values 1..d.
  Tableau packed() const;
  // Same boxes by coordinates inside another poset.
  Tableau embed(const Poset& other) const;
  // Value shift v -> v + k.
  Tableau shifted(int k) const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.poset_ == b.poset_ && a.inner_ == b.inner_ && a.outer_ == b.outer_ && a.values_ == b.values_;
  }
  friend bool operator<(const Tableau& a, const Tableau& b);
  std::size_t hash() const;

 private:
  Tableau() = default;
  const Poset* poset_ = nullptr;
  BoxSet inner_, outer_;
  std::vector<int> values_;
};

bool is_increasing(const Poset& p, const BoxSet& skew, const std::vector<int>& values);

// ------------------------------------------------------------ marked tableaux

enum class Mark : std::uint8_t { Empty, Plain, Barred, Dot };

struct Label {
  Mark mark = Mark::Empty;
  int value = 0;
  static Label plain(int v) { return {Mark::Plain, v}; }
  static Label barred(int v) { return {Mark::Barred, v}; }
  static Label dot() { return {Mark::Dot, 0}; }
  friend bool operator==(const Label&, const Label&) = default;
};

// Filling by plain, barred and dot labels; used for swaps and infusion.
struct MarkedTableau {
  const Poset* poset = nullptr;
  std::vector<Label> labels;  // Mark::Empty outside the filled boxes

  explicit MarkedTableau(const Poset& p) : poset(&p), labels(p.size()) {}
  BoxSet boxes_with(const Label& l) const;
  BoxSet filled() const;
};

// swap_{s,t}: s-boxes with a t-neighbour become t and vice versa; neighbours
// are Hasse-diagram covers.
MarkedTableau swap(const MarkedTableau& T, const Label& s, const Label& t);

// Dotted increasing tableau: dots behave like k + 1/2 for the stored witness.
struct DottedTableau {
  const Poset* poset = nullptr;
  BoxSet inner, outer, dots;
  std::vector<int> values;  // entries on non-dot boxes of outer - inner
  int witness = 0;

  DottedTableau(const Poset& p, BoxSet inner, BoxSet outer, BoxSet dots, std::vector<int> values, int witness);
  static DottedTableau from_tableau(const Tableau& T);
  MarkedTableau marked() const;
};

// Weakly increasing filling of a finite box set in grid coordinates.
struct GridFilling {
  std::map<Box, int> cells;
  bool hook_closed() const;
  bool weakly_increasing() const;
  bool strictly_increasing() const;
  std::string render() const;
  friend bool operator==(const GridFilling&, const GridFilling&) = default;
  friend auto operator<=>(const GridFilling&, const GridFilling&) = default;
  static GridFilling of(const Tableau& T);
};

std::vector<GridFilling> resolutions(const DottedTableau& D);

// ------------------------------------------------------------------ slides

// Boxes C must be a nonempty set of maximal inner boxes.
Tableau forward_slide(const Tableau& T, const BoxSet& C);
// Boxes must be a nonempty set of minimal boxes of the poset outside outer.
Tableau reverse_slide(const Tableau& T, const BoxSet& C);
// The same slides computed literally as products of swaps on dotted tableaux.
Tableau forward_slide_by_swaps(const Tableau& T, const BoxSet& C);
Tableau reverse_slide_by_swaps(const Tableau& T, const BoxSet& C);

// All nonempty subsets of the legal starting boxes.
std::vector<BoxSet> forward_choices(const Tableau& T);
std::vector<BoxSet> reverse_choices(const Tableau& T);

// Returns (jdt_S(T), reverse-jdt_T(S)) for sh(S) = mu/lambda, sh(T) = nu/mu.
std::pair<Tableau, Tableau> infusion(const Tableau& S, const Tableau& T);

// Straight tableaux reachable by forward slides (sorted).
std::vector<Tableau> rectify_all(const Tableau& T, std::size_t budget = default_budget());
Tableau rect_greedy(const Tableau& T);
// Repeated reverse slides from all minimal outside boxes (bounded posets).
Tableau antirect_greedy(const Tableau& T);
// All tableaux from which U is reachable by forward slides, including U.
std::vector<Tableau> reverse_closure(const Tableau& U, std::size_t budget = default_budget());

struct JdtClass {
  Tableau seed;
  std::vector<Tableau> members;  // breadth-first discovery order
  bool exhausted = false;
  bool touches_boundary = false;  // some member meets an ambient window boundary
  std::vector<Tableau> straight_members() const;
};

JdtClass jdt_class(const Tableau& T, std::size_t budget = default_budget());

enum class UrtStatus { Certified, Refuted, Inconclusive };
std::string to_string(UrtStatus s);

struct UrtVerdict {
  UrtStatus status = UrtStatus::Inconclusive;
  std::optional<Tableau> witness;  // second straight member when refuted
  std::size_t class_size = 0;
  bool packed = false;
  std::string reason;
};

struct UrtOptions {
  std::size_t budget = default_budget();
  bool pack = false;
};

UrtVerdict is_urt(const Tableau& U, const UrtOptions& opts = {});
// Re-embeds a straight type A/B tableau into a window (rows+pad) x (cols+pad)
// of the ambient grid or shifted plane.
Tableau urt_window(const Tableau& U, int pad = 2);
// Re-embeds a straight type A/B tableau into the bounded Grassmannian a:m,k
// or og:n with pad extra rows and columns. Verdicts there are exact for that
// poset and refutations transfer to the ambient plane.
Tableau bounded_window(const Tableau& U, int pad = 1);

// --------------------------------------------------------- distinguished

Tableau minimal_tableau(const Poset& p, const BoxSet& inner, const BoxSet& outer);
inline Tableau minimal_tableau(const Shape& s) { return minimal_tableau(s.poset(), {}, s.boxes()); }
Tableau maximal_tableau(const Poset& p, const BoxSet& inner, const BoxSet& outer);
inline Tableau maximal_tableau(const Shape& s) { return maximal_tableau(s.poset(), {}, s.boxes()); }
// Via w_X.M_{lambda^vee / nu^vee}; bounded posets only.
Tableau maximal_tableau_by_duality(const Poset& p, const BoxSet& inner, const BoxSet& outer);

// Every increasing tableau of shape lambda with value set {1..k} for some k,
// visited in a fixed order until visit returns false.
void for_each_packed_tableau(const Shape& lambda, const std::function<bool(const Tableau&)>& visit);
std::size_t count_packed_tableaux(const Shape& lambda);

enum class Orientation { Rowwise, Columnwise };
Tableau superstandard(const Shape& lambda, Orientation o);

Tableau wx_act(const Tableau& T);

// Type B shifted tableau -> diagonal-symmetric type A tableau.
Tableau doubling(const Tableau& T);
const Poset& doubling_poset(const Poset& p);
BoxSet double_boxes(const Poset& from, const Poset& to, const BoxSet& s);

// Type A: S * T places T north-east of S; S . T is its greedy rectification.
Tableau tableau_star(const Tableau& S, const Tableau& T);
Tableau tableau_product(const Tableau& S, const Tableau& T);
Tableau conjugate(const Tableau& T);
// Type A straight tableau re-embedded in its tight grid window.
Tableau trim_grid(const Tableau& T);
bool type_a(const Poset& p);
bool type_b(const Poset& p);

}  // namespace kmin

template <>
struct std::hash<kmin::Tableau> {
  std::size_t operator()(const kmin::Tableau& t) const { return t.hash(); }
};
