#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/boxset.hpp"

namespace kmin {

struct Box {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

enum class FamilyKind {
  TypeA,
  MaxOrthogonal,
  Lagrangian,
  QuadricOdd,
  QuadricEven,
  CayleyPlane,
  Freudenthal,
  AmbientGrid,
  AmbientShifted,
};

struct PosetFamily {
  FamilyKind kind = FamilyKind::TypeA;
  std::vector<int> params;

  static PosetFamily type_a(int m, int k) { return {FamilyKind::TypeA, {m, k}}; }
  static PosetFamily max_orthogonal(int n) { return {FamilyKind::MaxOrthogonal, {n}}; }
  static PosetFamily lagrangian(int n) { return {FamilyKind::Lagrangian, {n}}; }
  static PosetFamily quadric_odd(int n) { return {FamilyKind::QuadricOdd, {n}}; }
  static PosetFamily quadric_even(int n) { return {FamilyKind::QuadricEven, {n}}; }
  static PosetFamily cayley() { return {FamilyKind::CayleyPlane, {}}; }
  static PosetFamily freudenthal() { return {FamilyKind::Freudenthal, {}}; }
  static PosetFamily grid(int rows, int cols) { return {FamilyKind::AmbientGrid, {rows, cols}}; }
  static PosetFamily shifted(int cols) { return {FamilyKind::AmbientShifted, {cols}}; }

  // Mini-language: a:m,k og:n lg:n qodd:n qeven:n e6 e7 grid:r,c shifted:c
  static PosetFamily parse(std::string_view spec);
  std::string spec() const;
  std::string name() const;

  bool ambient() const {
    return kind == FamilyKind::AmbientGrid || kind == FamilyKind::AmbientShifted;
  }
  friend bool operator==(const PosetFamily&, const PosetFamily&) = default;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WindowExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Shape;

// Finite set of grid boxes with the induced componentwise order.
// Boxes are indexed in row-major order, which is a linear extension.
class Poset {
 public:
  // Interned: the same family always yields the same object, which lives
  // for the rest of the process.
  static const Poset& get(const PosetFamily& family);
  static const Poset& get(std::string_view spec) { return get(PosetFamily::parse(spec)); }

  const PosetFamily& family() const { return family_; }
  std::string spec() const { return family_.spec(); }
  int size() const { return static_cast<int>(boxes_.size()); }
  const Box& box(int i) const { return boxes_[i]; }
  const std::vector<Box>& boxes() const { return boxes_; }
  std::optional<int> index(const Box& b) const;
  int index_or_throw(const Box& b) const;

  // Hasse diagram.
  const std::vector<int>& up(int i) const { return up_[i]; }
  const std::vector<int>& down(int i) const { return down_[i]; }
  const BoxSet& up_set(int i) const { return up_set_[i]; }
  const BoxSet& down_set(int i) const { return down_set_[i]; }
  const BoxSet& neighbors(int i) const { return nbr_[i]; }
  bool covers(int lower, int upper) const { return up_set_[lower].test(upper); }
  bool leq(int i, int j) const;
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  int height(int i) const { return height_[i]; }
  int max_height() const;

  bool is_minuscule() const { return minuscule_; }
  bool bounded() const { return !family_.ambient(); }
  bool has_involution() const { return !wx_.empty(); }
  int wx(int i) const;
  BoxSet wx(const BoxSet& s) const;

  // Row layout: rows are 1..num_rows(); row_boxes(r) lists indices left to right.
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row_boxes(int r) const { return rows_[r - 1]; }
  int row_start_col(int r) const;
  int max_col() const { return max_col_; }

  BoxSet all() const { return all_; }
  // Boxes in the last row or last column of an ambient window.
  const BoxSet& boundary() const { return boundary_; }

  bool is_ideal(const BoxSet& s) const;
  bool is_antichain(const BoxSet& s) const;
  BoxSet maximal(const BoxSet& s) const;   // maximal elements of s
  BoxSet minimal(const BoxSet& s) const;   // minimal elements of s
  BoxSet addable(const BoxSet& ideal) const;  // minimal boxes of the complement
  BoxSet down_closure(const BoxSet& s) const;
  BoxSet up_closure(const BoxSet& s) const;

  // Longest chain inside s ending (resp. starting) at each box of s.
  std::vector<int> chain_depth_below(const BoxSet& s) const;
  std::vector<int> chain_depth_above(const BoxSet& s) const;

  std::vector<int> row_lengths(const BoxSet& ideal) const;
  // Ideal with the given row prefix lengths; throws ParseError if invalid.
  BoxSet ideal_from_rows(const std::vector<int>& rows) const;

 private:
  explicit Poset(PosetFamily family);
  void build_order();

  PosetFamily family_;
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_first_col_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<BoxSet> up_set_, down_set_, nbr_, below_;
  std::vector<int> height_;
  std::vector<int> wx_;
  BoxSet all_, boundary_;
  bool minuscule_ = false;
  int max_col_ = 0;
};

// A lower order ideal.
class Shape {
 public:
  Shape(const Poset& p, BoxSet boxes);
  static Shape empty(const Poset& p) { return Shape(p, BoxSet{}); }
  static Shape full(const Poset& p) { return Shape(p, p.all()); }
  static Shape from_rows(const Poset& p, const std::vector<int>& rows);
  // "5,3,2"; "" or "0" is the empty shape.
  static Shape parse(const Poset& p, std::string_view text);

  const Poset& poset() const { return *poset_; }
  const BoxSet& boxes() const { return boxes_; }
  int size() const { return boxes_.count(); }
  std::vector<int> rows() const { return poset_->row_lengths(boxes_); }
  std::string to_string() const;
  bool contains(const Shape& o) const { return o.boxes_.subset_of(boxes_); }

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.poset_ == b.poset_ && a.boxes_ == b.boxes_;
  }
  // Orders by size, then by row lengths (lexicographically decreasing).
  friend bool operator<(const Shape& a, const Shape& b);

 private:
  const Poset* poset_;
  BoxSet boxes_;
};

std::string rows_to_string(const std::vector<int>& rows);
std::vector<int> parse_int_list(std::string_view text);

std::vector<Shape> enumerate_shapes(const Poset& p);
Shape dual_shape(const Shape& lambda);
std::vector<Shape> rook_strips_over(const Shape& lambda);

}  // namespace kmin

template <>
struct std::hash<kmin::Shape> {
  std::size_t operator()(const kmin::Shape& s) const { return s.boxes().hash(); }
};
