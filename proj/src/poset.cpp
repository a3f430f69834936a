#include "kmin/poset.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace kmin {

std::string to_string(const Box& b) {
  return "[" + std::to_string(b.row) + "," + std::to_string(b.col) + "]";
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  while (true) {
    skip_ws();
    int v = 0;
    const char* b = text.data() + i;
    const char* e = text.data() + text.size();
    if (b != e && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{}) throw ParseError("expected integer in \"" + std::string(text) + "\"");
    i = static_cast<std::size_t>(ptr - text.data());
    out.push_back(v);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ',' in \"" + std::string(text) + "\"");
    ++i;
  }
  return out;
}

std::string rows_to_string(const std::vector<int>& rows) {
  std::string s;
  for (int r : rows) {
    if (r == 0) break;
    if (!s.empty()) s += ',';
    s += std::to_string(r);
  }
  return s;
}

// ---------------------------------------------------------------- families

PosetFamily PosetFamily::parse(std::string_view spec) {
  std::string key(spec.substr(0, spec.find(':')));
  std::vector<int> params;
  if (auto colon = spec.find(':'); colon != std::string_view::npos)
    params = parse_int_list(spec.substr(colon + 1));
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw ParseError("poset spec \"" + std::string(spec) + "\" expects " + std::to_string(n) +
                       " parameter(s)");
  };
  PosetFamily f;
  if (key == "a" || key == "gr") {
    need(2);
    f = type_a(params[0], params[1]);
  } else if (key == "og") {
    need(1);
    f = max_orthogonal(params[0]);
  } else if (key == "lg") {
    need(1);
    f = lagrangian(params[0]);
  } else if (key == "qodd") {
    need(1);
    f = quadric_odd(params[0]);
  } else if (key == "qeven") {
    need(1);
    f = quadric_even(params[0]);
  } else if (key == "e6" || key == "cayley") {
    need(0);
    f = cayley();
  } else if (key == "e7" || key == "freudenthal") {
    need(0);
    f = freudenthal();
  } else if (key == "grid") {
    need(2);
    f = grid(params[0], params[1]);
  } else if (key == "shifted") {
    need(1);
    f = shifted(params[0]);
  } else {
    throw ParseError("unknown poset family \"" + std::string(spec) + "\"");
  }
  return f;
}

std::string PosetFamily::spec() const {
  auto join = [&] {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s;
  };
  switch (kind) {
    case FamilyKind::TypeA: return "a:" + join();
    case FamilyKind::MaxOrthogonal: return "og:" + join();
    case FamilyKind::Lagrangian: return "lg:" + join();
    case FamilyKind::QuadricOdd: return "qodd:" + join();
    case FamilyKind::QuadricEven: return "qeven:" + join();
    case FamilyKind::CayleyPlane: return "e6";
    case FamilyKind::Freudenthal: return "e7";
    case FamilyKind::AmbientGrid: return "grid:" + join();
    case FamilyKind::AmbientShifted: return "shifted:" + join();
  }
  return "?";
}

std::string PosetFamily::name() const {
  auto join = [&] {
    std::string s = "{";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + "}";
  };
  switch (kind) {
    case FamilyKind::TypeA: return "TypeA" + join();
    case FamilyKind::MaxOrthogonal: return "MaxOrthogonal" + join();
    case FamilyKind::Lagrangian: return "Lagrangian" + join();
    case FamilyKind::QuadricOdd: return "QuadricOdd" + join();
    case FamilyKind::QuadricEven: return "QuadricEven" + join();
    case FamilyKind::CayleyPlane: return "CayleyPlane";
    case FamilyKind::Freudenthal: return "Freudenthal";
    case FamilyKind::AmbientGrid: return "AmbientGrid" + join();
    case FamilyKind::AmbientShifted: return "AmbientShifted" + join();
  }
  return "?";
}

// ---------------------------------------------------------------- poset

namespace {

struct RowRange {
  int row, first, last;
};

enum class Involution { None, Rotation, Reflection };

struct Layout {
  std::vector<RowRange> rows;
  Involution inv = Involution::None;
  bool minuscule = false;
};

Layout layout_for(const PosetFamily& f) {
  for (int p : f.params)
    if (p <= 0) throw std::invalid_argument("poset parameters must be positive: " + f.spec());
  Layout L;
  switch (f.kind) {
    case FamilyKind::TypeA:
      for (int r = 1; r <= f.params[0]; ++r) L.rows.push_back({r, 1, f.params[1]});
      L.inv = Involution::Rotation;
      L.minuscule = true;
      break;
    case FamilyKind::MaxOrthogonal: {
      int n = f.params[0];
      if (n < 2) throw std::invalid_argument("MaxOrthogonal needs n >= 2");
      for (int r = 1; r <= n - 1; ++r) L.rows.push_back({r, r, n - 1});
      L.inv = Involution::Reflection;
      L.minuscule = true;
      break;
    }
    case FamilyKind::Lagrangian: {
      int n = f.params[0];
      for (int r = 1; r <= n; ++r) L.rows.push_back({r, r, n});
      L.inv = Involution::Reflection;
      break;
    }
    case FamilyKind::QuadricOdd:
      L.rows.push_back({1, 1, 2 * f.params[0] - 1});
      L.inv = Involution::Rotation;
      break;
    case FamilyKind::QuadricEven: {
      int n = f.params[0];
      if (n < 2) throw std::invalid_argument("QuadricEven needs n >= 2");
      L.rows.push_back({1, 1, n});
      if (n % 2 == 0) {
        L.rows.push_back({2, n - 1, 2 * n - 2});
        L.inv = Involution::Rotation;
      } else {
        L.rows.push_back({2, n - 1, n});
        for (int r = 3; r <= n; ++r) L.rows.push_back({r, n, n});
        L.inv = Involution::Reflection;
      }
      L.minuscule = true;
      break;
    }
    case FamilyKind::CayleyPlane:
      L.rows = {{1, 1, 4}, {2, 3, 6}, {3, 3, 6}, {4, 5, 8}};
      L.inv = Involution::Rotation;
      L.minuscule = true;
      break;
    case FamilyKind::Freudenthal:
      L.rows = {{1, 1, 5}, {2, 4, 8}, {3, 4, 8}, {4, 6, 8}, {5, 7, 9},
                {6, 7, 9}, {7, 9, 9}, {8, 9, 9}, {9, 9, 9}};
      L.inv = Involution::Reflection;
      L.minuscule = true;
      break;
    case FamilyKind::AmbientGrid:
      for (int r = 1; r <= f.params[0]; ++r) L.rows.push_back({r, 1, f.params[1]});
      break;
    case FamilyKind::AmbientShifted:
      for (int r = 1; r <= f.params[0]; ++r) L.rows.push_back({r, r, f.params[0]});
      break;
  }
  return L;
}

}  // namespace

Poset::Poset(PosetFamily family) : family_(std::move(family)) {
  Layout L = layout_for(family_);
  minuscule_ = L.minuscule;
  for (const auto& rr : L.rows) {
    rows_.emplace_back();
    row_first_col_.push_back(rr.first);
    for (int c = rr.first; c <= rr.last; ++c) {
      rows_.back().push_back(static_cast<int>(boxes_.size()));
      boxes_.push_back({rr.row, c});
      max_col_ = std::max(max_col_, c);
    }
  }
  if (size() > BoxSet::kMaxBoxes)
    throw std::invalid_argument("poset " + family_.spec() + " exceeds " +
                                std::to_string(BoxSet::kMaxBoxes) + " boxes");
  build_order();

  if (family_.kind == FamilyKind::AmbientGrid || family_.kind == FamilyKind::AmbientShifted) {
    int last_row = boxes_.back().row;
    for (int i = 0; i < size(); ++i)
      if (boxes_[i].col == max_col_ || (family_.kind == FamilyKind::AmbientGrid && boxes_[i].row == last_row))
        boundary_.set(i);
  }

  if (L.inv != Involution::None) {
    int rmin = boxes_.front().row, rmax = boxes_.back().row, cmin = max_col_, cmax = 0;
    for (const auto& b : boxes_) {
      cmin = std::min(cmin, b.col);
      cmax = std::max(cmax, b.col);
    }
    wx_.resize(size());
    for (int i = 0; i < size(); ++i) {
      Box b = boxes_[i];
      Box t = L.inv == Involution::Rotation ? Box{rmin + rmax - b.row, cmin + cmax - b.col}
                                            : Box{rmin + cmax - b.col, cmin + rmax - b.row};
      auto j = index(t);
      if (!j) throw std::logic_error("w_X does not preserve " + family_.name());
      wx_[i] = *j;
    }
    for (int i = 0; i < size(); ++i)
      for (int j : up_[i])
        if (!covers(wx_[j], wx_[i])) throw std::logic_error("w_X is not order reversing on " + family_.name());
  }
}

void Poset::build_order() {
  int n = size();
  below_.assign(n, BoxSet{});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i)
      if (boxes_[i].row <= boxes_[j].row && boxes_[i].col <= boxes_[j].col) below_[j].set(i);
  up_.assign(n, {});
  down_.assign(n, {});
  up_set_.assign(n, BoxSet{});
  down_set_.assign(n, BoxSet{});
  nbr_.assign(n, BoxSet{});
  for (int j = 0; j < n; ++j) {
    BoxSet strict = below_[j];
    strict.reset(j);
    // i is covered by j iff i is maximal in the strict down-set of j.
    strict.for_each([&](int i) {
      BoxSet above_i = strict;
      above_i.reset(i);
      bool cover = true;
      above_i.for_each([&](int k) {
        if (cover && below_[k].test(i)) cover = false;
      });
      if (cover) {
        down_[j].push_back(i);
        up_[i].push_back(j);
        down_set_[j].set(i);
        up_set_[i].set(j);
      }
    });
  }
  for (int i = 0; i < n; ++i) nbr_[i] = up_set_[i] | down_set_[i];
  height_.assign(n, 1);
  for (int j = 0; j < n; ++j)
    for (int i : down_[j]) height_[j] = std::max(height_[j], height_[i] + 1);
  all_ = BoxSet{};
  for (int i = 0; i < n; ++i) all_.set(i);
}

const Poset& Poset::get(const PosetFamily& family) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Poset>> registry;
  std::string key = family.spec();
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, std::unique_ptr<Poset>(new Poset(family))).first;
  return *it->second;
}

std::optional<int> Poset::index(const Box& b) const {
  int r = b.row;
  if (r < 1 || r > num_rows()) return std::nullopt;
  const auto& row = rows_[r - 1];
  int off = b.col - row_first_col_[r - 1];
  if (off < 0 || off >= static_cast<int>(row.size())) return std::nullopt;
  return row[off];
}

int Poset::index_or_throw(const Box& b) const {
  auto i = index(b);
  if (!i) throw WindowExceeded("box " + to_string(b) + " is not in poset " + spec());
  return *i;
}

bool Poset::leq(int i, int j) const { return below_[j].test(i); }

int Poset::max_height() const {
  int h = 0;
  for (int x : height_) h = std::max(h, x);
  return h;
}

int Poset::wx(int i) const {
  if (wx_.empty()) throw std::logic_error("poset " + spec() + " has no w_X involution");
  return wx_[i];
}

BoxSet Poset::wx(const BoxSet& s) const {
  BoxSet out;
  s.for_each([&](int i) { out.set(wx(i)); });
  return out;
}

int Poset::row_start_col(int r) const { return row_first_col_[r - 1]; }

bool Poset::is_ideal(const BoxSet& s) const {
  bool ok = s.subset_of(all_);
  s.for_each([&](int i) {
    if (ok && !down_set_[i].subset_of(s)) ok = false;
  });
  return ok;
}

bool Poset::is_antichain(const BoxSet& s) const {
  bool ok = true;
  s.for_each([&](int i) {
    BoxSet strict = below_[i];
    strict.reset(i);
    if (strict.intersects(s)) ok = false;
  });
  return ok;
}

BoxSet Poset::maximal(const BoxSet& s) const {
  BoxSet out;
  s.for_each([&](int i) {
    if (!up_set_[i].intersects(s)) out.set(i);
  });
  return out;
}

BoxSet Poset::minimal(const BoxSet& s) const {
  BoxSet out;
  s.for_each([&](int i) {
    if (!down_set_[i].intersects(s)) out.set(i);
  });
  return out;
}

BoxSet Poset::addable(const BoxSet& ideal) const {
  BoxSet out;
  (all_ - ideal).for_each([&](int i) {
    if (down_set_[i].subset_of(ideal)) out.set(i);
  });
  return out;
}

BoxSet Poset::down_closure(const BoxSet& s) const {
  BoxSet out;
  s.for_each([&](int i) { out |= below_[i]; });
  return out;
}

BoxSet Poset::up_closure(const BoxSet& s) const {
  BoxSet out;
  for (int j = 0; j < size(); ++j)
    if (below_[j].intersects(s)) out.set(j);
  return out;
}

std::vector<int> Poset::chain_depth_below(const BoxSet& s) const {
  std::vector<int> d(size(), 0);
  s.for_each([&](int j) {
    int h = 1;
    for (int i : down_[j])
      if (s.test(i)) h = std::max(h, d[i] + 1);
    // Covers of the sub-poset may skip boxes outside s.
    (s & below_[j]).for_each([&](int i) {
      if (i != j) h = std::max(h, d[i] + 1);
    });
    d[j] = h;
  });
  return d;
}

std::vector<int> Poset::chain_depth_above(const BoxSet& s) const {
  std::vector<int> d(size(), 0);
  std::vector<int> order;
  s.for_each([&](int i) { order.push_back(i); });
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int i = *it, h = 1;
    for (int j : order)
      if (j != i && below_[j].test(i)) h = std::max(h, d[j] + 1);
    d[i] = h;
  }
  return d;
}

std::vector<int> Poset::row_lengths(const BoxSet& ideal) const {
  std::vector<int> out;
  for (const auto& row : rows_) {
    int len = 0;
    for (int i : row)
      if (ideal.test(i)) ++len;
    out.push_back(len);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BoxSet Poset::ideal_from_rows(const std::vector<int>& rows) const {
  BoxSet s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] < 0) throw ParseError("negative row length");
    if (rows[r] == 0) continue;
    if (r >= rows_.size() || rows[r] > static_cast<int>(rows_[r].size()))
      throw ParseError("shape " + rows_to_string(rows) + " does not fit in poset " + spec());
    for (int c = 0; c < rows[r]; ++c) s.set(rows_[r][c]);
  }
  if (!is_ideal(s)) throw ParseError("shape " + rows_to_string(rows) + " is not an order ideal of " + spec());
  return s;
}

// ---------------------------------------------------------------- shapes

Shape::Shape(const Poset& p, BoxSet boxes) : poset_(&p), boxes_(boxes) {
  if (!p.is_ideal(boxes)) throw std::invalid_argument("box set is not an order ideal of " + p.spec());
}

Shape Shape::from_rows(const Poset& p, const std::vector<int>& rows) {
  return Shape(p, p.ideal_from_rows(rows));
}

Shape Shape::parse(const Poset& p, std::string_view text) {
  std::string t(text);
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty() || t == "0" || t == "empty" || t == "()") return empty(p);
  if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  return from_rows(p, parse_int_list(t));
}

std::string Shape::to_string() const { return rows_to_string(rows()); }

bool operator<(const Shape& a, const Shape& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.rows() > b.rows();
}

std::vector<Shape> enumerate_shapes(const Poset& p) {
  if (!p.bounded()) throw std::invalid_argument("enumerate_shapes refuses ambient poset " + p.spec());
  std::vector<Shape> out;
  std::vector<BoxSet> layer{BoxSet{}};
  while (!layer.empty()) {
    std::set<BoxSet> next;
    for (const auto& s : layer) {
      out.emplace_back(p, s);
      p.addable(s).for_each([&](int i) {
        BoxSet t = s;
        t.set(i);
        next.insert(t);
      });
    }
    layer.assign(next.begin(), next.end());
  }
  std::stable_sort(out.begin(), out.end());
  return out;
}

Shape dual_shape(const Shape& lambda) {
  const Poset& p = lambda.poset();
  if (!p.has_involution()) throw std::invalid_argument("dual_shape needs a bounded poset with w_X");
  return Shape(p, p.all() - p.wx(lambda.boxes()));
}

std::vector<Shape> rook_strips_over(const Shape& lambda) {
  const Poset& p = lambda.poset();
  std::vector<int> add;
  p.addable(lambda.boxes()).for_each([&](int i) { add.push_back(i); });
  std::vector<Shape> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << add.size()); ++mask) {
    BoxSet s = lambda.boxes();
    for (std::size_t k = 0; k < add.size(); ++k)
      if (mask >> k & 1) s.set(add[k]);
    out.emplace_back(p, s);
  }
  std::stable_sort(out.begin(), out.end());
  return out;
}

}  // namespace kmin
