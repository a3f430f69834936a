#include "kmin/tableau.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace kmin {

// ------------------------------------------------------------------ basics

bool is_increasing(const Poset& p, const BoxSet& skew, const std::vector<int>& values) {
  bool ok = true;
  skew.for_each([&](int j) {
    for (int i : p.down(j))
      if (skew.test(i) && values[i] >= values[j]) ok = false;
  });
  return ok;
}

Tableau::Tableau(const Poset& p, BoxSet inner, BoxSet outer, std::vector<int> values)
    : poset_(&p), inner_(inner), outer_(outer), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != p.size()) throw std::invalid_argument("tableau value vector has wrong size");
  if (!inner.subset_of(outer)) throw std::invalid_argument("inner shape not contained in outer shape");
  if (!p.is_ideal(inner) || !p.is_ideal(outer)) throw std::invalid_argument("tableau shape is not a skew shape");
  BoxSet s = skew();
  for (int i = 0; i < p.size(); ++i)
    if (!s.test(i)) values_[i] = 0;
  if (!is_increasing(p, s, values_)) throw std::invalid_argument("tableau is not increasing");
}

Tableau Tableau::unchecked(const Poset& p, BoxSet inner, BoxSet outer, std::vector<int> values) {
  Tableau t;
  t.poset_ = &p;
  t.inner_ = inner;
  t.outer_ = outer;
  t.values_ = std::move(values);
  return t;
}

Tableau Tableau::from_cells(const Poset& p, BoxSet inner, const std::map<Box, int>& cells) {
  std::vector<int> v(p.size(), 0);
  BoxSet outer = inner;
  for (const auto& [b, x] : cells) {
    int i = p.index_or_throw(b);
    outer.set(i);
    v[i] = x;
  }
  return Tableau(p, inner, outer, std::move(v));
}

Tableau Tableau::from_rows(const Poset& p, const std::vector<std::vector<int>>& rows) {
  std::vector<int> v(p.size(), 0);
  BoxSet outer;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    if (static_cast<int>(r) >= p.num_rows() || rows[r].size() > p.row_boxes(r + 1).size())
      throw ParseError("tableau row " + std::to_string(r + 1) + " does not fit in poset " + p.spec());
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int i = p.row_boxes(r + 1)[c];
      outer.set(i);
      v[i] = rows[r][c];
    }
  }
  return Tableau(p, BoxSet{}, outer, std::move(v));
}

Tableau Tableau::parse(const Poset& p, std::string_view literal) {
  std::string text(literal);
  text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == ' ' || c == '\t'; }), text.end());
  std::vector<int> v(p.size(), 0);
  BoxSet inner, outer;
  if (!text.empty() && text != "-") {
    std::vector<std::string> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, '/')) rows.push_back(row);
    if (!text.empty() && text.back() == '/') rows.push_back("");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].empty()) continue;
      if (static_cast<int>(r) >= p.num_rows())
        throw ParseError("tableau literal has more rows than poset " + p.spec());
      std::stringstream rs(rows[r]);
      std::string tok;
      std::size_t c = 0;
      while (std::getline(rs, tok, ',')) {
        if (c >= p.row_boxes(r + 1).size())
          throw ParseError("tableau row " + std::to_string(r + 1) + " is too long for poset " + p.spec());
        int i = p.row_boxes(r + 1)[c++];
        outer.set(i);
        if (tok == ".") {
          inner.set(i);
        } else {
          auto vals = parse_int_list(tok);
          if (vals.size() != 1) throw ParseError("bad tableau entry \"" + tok + "\"");
          v[i] = vals[0];
        }
      }
    }
  }
  if (!p.is_ideal(inner) || !p.is_ideal(outer)) throw ParseError("tableau literal does not describe a skew shape");
  try {
    return Tableau(p, inner, outer, std::move(v));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Tableau Tableau::parse_with_header(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected \"<poset>|<rows>\"");
  return parse(Poset::get(text.substr(0, bar)), text.substr(bar + 1));
}

std::optional<int> Tableau::at(const Box& b) const {
  auto i = poset_->index(b);
  if (!i || !skew().test(*i)) return std::nullopt;
  return values_[*i];
}

std::vector<int> Tableau::value_set() const {
  std::vector<int> out;
  skew().for_each([&](int i) { out.push_back(values_[i]); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Tableau::min_value() const {
  auto vs = value_set();
  if (vs.empty()) throw std::logic_error("empty tableau has no minimum");
  return vs.front();
}

int Tableau::max_value() const {
  auto vs = value_set();
  if (vs.empty()) throw std::logic_error("empty tableau has no maximum");
  return vs.back();
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out(poset_->num_rows());
  BoxSet s = skew();
  for (int r = 1; r <= poset_->num_rows(); ++r)
    for (int i : poset_->row_boxes(r))
      if (s.test(i)) out[r - 1].push_back(values_[i]);
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::map<Box, int> Tableau::cells() const {
  std::map<Box, int> out;
  skew().for_each([&](int i) { out[poset_->box(i)] = values_[i]; });
  return out;
}

std::string Tableau::to_literal() const {
  std::vector<std::string> rows;
  for (int r = 1; r <= poset_->num_rows(); ++r) {
    std::string row;
    for (int i : poset_->row_boxes(r)) {
      if (!outer_.test(i)) break;
      if (!row.empty()) row += ',';
      row += inner_.test(i) ? "." : std::to_string(values_[i]);
    }
    rows.push_back(row);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) s += (r ? "/" : "") + rows[r];
  return s;
}

std::string Tableau::render() const {
  std::size_t width = 1;
  skew().for_each([&](int i) { width = std::max(width, std::to_string(values_[i]).size()); });
  int max_row = 0, max_col = 0;
  outer_.for_each([&](int i) {
    max_row = std::max(max_row, poset_->box(i).row);
    max_col = std::max(max_col, poset_->box(i).col);
  });
  std::ostringstream os;
  for (int r = 1; r <= max_row; ++r) {
    std::string line;
    for (int c = 1; c <= max_col; ++c) {
      std::string cell;
      auto i = poset_->index({r, c});
      if (i && inner_.test(*i))
        cell = ".";
      else if (i && outer_.test(*i))
        cell = std::to_string(values_[*i]);
      if (c > 1) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

Tableau Tableau::restrict_values(int a, int b) const {
  BoxSet in = inner_, out = inner_;
  std::vector<int> v(values_.size(), 0);
  skew().for_each([&](int i) {
    if (values_[i] < a) {
      in.set(i);
      out.set(i);
    } else if (values_[i] <= b) {
      out.set(i);
      v[i] = values_[i];
    }
  });
  return Tableau(*poset_, in, out, std::move(v));
}

Tableau Tableau::packed() const {
  auto vs = value_set();
  std::vector<int> v = values_;
  skew().for_each([&](int i) {
    v[i] = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v[i]) - vs.begin()) + 1;
  });
  return unchecked(*poset_, inner_, outer_, std::move(v));
}

Tableau Tableau::embed(const Poset& other) const {
  BoxSet in, out;
  std::vector<int> v(other.size(), 0);
  outer_.for_each([&](int i) {
    int j = other.index_or_throw(poset_->box(i));
    out.set(j);
    if (inner_.test(i))
      in.set(j);
    else
      v[j] = values_[i];
  });
  return Tableau(other, in, out, std::move(v));
}

Tableau Tableau::shifted(int k) const {
  std::vector<int> v = values_;
  skew().for_each([&](int i) { v[i] += k; });
  return unchecked(*poset_, inner_, outer_, std::move(v));
}

bool operator<(const Tableau& a, const Tableau& b) {
  if (a.poset_ != b.poset_) return a.poset_->spec() < b.poset_->spec();
  if (a.outer_ != b.outer_) return a.outer_ < b.outer_;
  if (a.inner_ != b.inner_) return a.inner_ < b.inner_;
  return a.values_ < b.values_;
}

std::size_t Tableau::hash() const {
  std::size_t h = inner_.hash() * 31 + outer_.hash();
  for (int v : values_) h = (h ^ static_cast<std::size_t>(v + 0x9e37)) * 0x100000001b3ull;
  return h;
}

// ----------------------------------------------------------- marked / dots

BoxSet MarkedTableau::boxes_with(const Label& l) const {
  BoxSet s;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] == l) s.set(i);
  return s;
}

BoxSet MarkedTableau::filled() const {
  BoxSet s;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i].mark != Mark::Empty) s.set(i);
  return s;
}

MarkedTableau swap(const MarkedTableau& T, const Label& s, const Label& t) {
  MarkedTableau out = T;
  if (s == t) return out;
  BoxSet S = T.boxes_with(s), U = T.boxes_with(t);
  const Poset& p = *T.poset;
  S.for_each([&](int i) {
    if (p.neighbors(i).intersects(U)) out.labels[i] = t;
  });
  U.for_each([&](int i) {
    if (p.neighbors(i).intersects(S)) out.labels[i] = s;
  });
  return out;
}

DottedTableau::DottedTableau(const Poset& p, BoxSet inner_, BoxSet outer_, BoxSet dots_, std::vector<int> values_,
                             int witness_)
    : poset(&p), inner(inner_), outer(outer_), dots(dots_), values(std::move(values_)), witness(witness_) {
  if (!inner.subset_of(outer) || !p.is_ideal(inner) || !p.is_ideal(outer))
    throw std::invalid_argument("dotted tableau shape is not a skew shape");
  BoxSet skew = outer - inner;
  if (!dots.subset_of(skew)) throw std::invalid_argument("dots outside the skew shape");
  std::vector<long> twice(p.size(), 0);
  skew.for_each([&](int i) { twice[i] = dots.test(i) ? 2L * witness + 1 : 2L * values[i]; });
  skew.for_each([&](int j) {
    for (int i : p.down(j))
      if (skew.test(i) && twice[i] >= twice[j])
        throw std::invalid_argument("dotted tableau is not increasing for witness " + std::to_string(witness));
  });
}

DottedTableau DottedTableau::from_tableau(const Tableau& T) {
  return DottedTableau(T.poset(), T.inner(), T.outer(), BoxSet{}, T.values(), 0);
}

MarkedTableau DottedTableau::marked() const {
  MarkedTableau M(*poset);
  (outer - inner).for_each([&](int i) { M.labels[i] = dots.test(i) ? Label::dot() : Label::plain(values[i]); });
  return M;
}

// ------------------------------------------------------------ grid fillings

GridFilling GridFilling::of(const Tableau& T) { return {T.cells()}; }

bool GridFilling::hook_closed() const {
  for (const auto& [a, va] : cells)
    for (const auto& [b, vb] : cells) {
      if (!(a.row <= b.row && a.col <= b.col)) continue;
      for (int c = a.col; c <= b.col; ++c)
        if (!cells.count({a.row, c})) return false;
      for (int r = a.row; r <= b.row; ++r)
        if (!cells.count({r, b.col})) return false;
    }
  return true;
}

bool GridFilling::weakly_increasing() const {
  for (const auto& [b, v] : cells) {
    auto right = cells.find({b.row, b.col + 1});
    if (right != cells.end() && right->second < v) return false;
    auto below = cells.find({b.row + 1, b.col});
    if (below != cells.end() && below->second < v) return false;
  }
  return true;
}

bool GridFilling::strictly_increasing() const {
  for (const auto& [b, v] : cells) {
    auto right = cells.find({b.row, b.col + 1});
    if (right != cells.end() && right->second <= v) return false;
    auto below = cells.find({b.row + 1, b.col});
    if (below != cells.end() && below->second <= v) return false;
  }
  return true;
}

std::string GridFilling::render() const {
  int max_row = 0, max_col = 0;
  std::size_t width = 1;
  for (const auto& [b, v] : cells) {
    max_row = std::max(max_row, b.row);
    max_col = std::max(max_col, b.col);
    width = std::max(width, std::to_string(v).size());
  }
  std::ostringstream os;
  for (int r = 1; r <= max_row; ++r) {
    std::string line;
    for (int c = 1; c <= max_col; ++c) {
      auto it = cells.find({r, c});
      std::string cell = it == cells.end() ? "" : std::to_string(it->second);
      if (c > 1) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::vector<GridFilling> resolutions(const DottedTableau& D) {
  const Poset& p = *D.poset;
  BoxSet skew = D.outer - D.inner;
  auto value_at = [&](Box b) -> std::optional<int> {
    auto i = p.index(b);
    if (!i || !skew.test(*i) || D.dots.test(*i)) return std::nullopt;
    return D.values[*i];
  };
  GridFilling base;
  std::vector<int> dot_list;
  skew.for_each([&](int i) {
    if (D.dots.test(i))
      dot_list.push_back(i);
    else
      base.cells[p.box(i)] = D.values[i];
  });
  // Options per dot: a value, or nullopt for removing the box.
  std::vector<std::vector<std::optional<int>>> options;
  for (int i : dot_list) {
    Box b = p.box(i);
    std::vector<std::optional<int>> opt;
    auto up = value_at({b.row - 1, b.col}), left = value_at({b.row, b.col - 1});
    auto down = value_at({b.row + 1, b.col}), right = value_at({b.row, b.col + 1});
    if (up || left)
      opt.push_back(std::max(up.value_or(left.value_or(0)), left.value_or(up.value_or(0))));
    else
      opt.push_back(std::nullopt);
    if (down || right)
      opt.push_back(std::min(down.value_or(right.value_or(0)), right.value_or(down.value_or(0))));
    else
      opt.push_back(std::nullopt);
    if (opt[0] == opt[1]) opt.pop_back();
    options.push_back(opt);
  }
  std::set<GridFilling> out;
  std::vector<std::size_t> choice(dot_list.size(), 0);
  while (true) {
    GridFilling g = base;
    for (std::size_t k = 0; k < dot_list.size(); ++k)
      if (auto v = options[k][choice[k]]) g.cells[p.box(dot_list[k])] = *v;
    out.insert(std::move(g));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return {out.begin(), out.end()};
}

// ------------------------------------------------------------------ slides

namespace {

// Distinct values of T in increasing order with the boxes holding each.
std::vector<std::pair<int, BoxSet>> value_groups(const Tableau& T) {
  std::vector<std::pair<int, int>> entries;
  T.skew().for_each([&](int i) { entries.emplace_back(T.at(i), i); });
  std::sort(entries.begin(), entries.end());
  std::vector<std::pair<int, BoxSet>> out;
  for (const auto& [v, i] : entries) {
    if (out.empty() || out.back().first != v) out.emplace_back(v, BoxSet{});
    out.back().second.set(i);
  }
  return out;
}

template <class It>
BoxSet run_dot_swaps(const Poset& p, It first, It last, BoxSet dots, std::vector<int>& vals) {
  for (; first != last; ++first) {
    const auto& [v, group] = *first;
    BoxSet new_dots, become_v;
    group.for_each([&](int b) {
      if (p.neighbors(b).intersects(dots)) new_dots.set(b);
    });
    if (new_dots.empty()) continue;
    dots.for_each([&](int d) {
      if (p.neighbors(d).intersects(group)) become_v.set(d);
    });
    become_v.for_each([&](int d) { vals[d] = v; });
    new_dots.for_each([&](int b) { vals[b] = 0; });
    dots = (dots - become_v) | new_dots;
  }
  return dots;
}

std::vector<BoxSet> nonempty_subsets(const BoxSet& s) {
  std::vector<int> items;
  s.for_each([&](int i) { items.push_back(i); });
  std::vector<BoxSet> out;
  if (items.size() > 20) throw std::length_error("too many slide choices");
  for (std::uint32_t mask = 1; mask < (1u << items.size()); ++mask) {
    BoxSet c;
    for (std::size_t k = 0; k < items.size(); ++k)
      if (mask >> k & 1u) c.set(items[k]);
    out.push_back(c);
  }
  return out;
}

void check_forward(const Tableau& T, const BoxSet& C) {
  if (C.empty()) throw std::invalid_argument("forward slide needs a nonempty starting set");
  if (!C.subset_of(T.poset().maximal(T.inner())))
    throw std::invalid_argument("forward slide boxes must be maximal boxes of the inner shape");
}

void check_reverse(const Tableau& T, const BoxSet& C) {
  if (C.empty()) throw std::invalid_argument("reverse slide needs a nonempty starting set");
  const Poset& p = T.poset();
  if (!C.subset_of(p.minimal(p.all() - T.outer())))
    throw std::invalid_argument("reverse slide boxes must be minimal boxes outside the outer shape");
}

}  // namespace

Tableau forward_slide(const Tableau& T, const BoxSet& C) {
  check_forward(T, C);
  auto groups = value_groups(T);
  std::vector<int> vals = T.values();
  BoxSet dots = run_dot_swaps(T.poset(), groups.begin(), groups.end(), C, vals);
  return Tableau::unchecked(T.poset(), T.inner() - C, T.outer() - dots, std::move(vals));
}

Tableau reverse_slide(const Tableau& T, const BoxSet& C) {
  check_reverse(T, C);
  auto groups = value_groups(T);
  std::vector<int> vals = T.values();
  BoxSet dots = run_dot_swaps(T.poset(), groups.rbegin(), groups.rend(), C, vals);
  return Tableau::unchecked(T.poset(), T.inner() | dots, T.outer() | C, std::move(vals));
}

namespace {

Tableau slide_by_swaps(const Tableau& T, const BoxSet& C, bool forward) {
  MarkedTableau M(T.poset());
  T.skew().for_each([&](int i) { M.labels[i] = Label::plain(T.at(i)); });
  C.for_each([&](int i) { M.labels[i] = Label::dot(); });
  auto vs = T.value_set();
  if (!forward) std::reverse(vs.begin(), vs.end());
  for (int v : vs) M = swap(M, Label::plain(v), Label::dot());
  BoxSet dots = M.boxes_with(Label::dot());
  std::vector<int> vals(T.poset().size(), 0);
  BoxSet plain = M.filled() - dots;
  plain.for_each([&](int i) { vals[i] = M.labels[i].value; });
  BoxSet inner = forward ? T.inner() - C : T.inner() | dots;
  return Tableau(T.poset(), inner, inner | plain, std::move(vals));
}

}  // namespace

Tableau forward_slide_by_swaps(const Tableau& T, const BoxSet& C) {
  check_forward(T, C);
  return slide_by_swaps(T, C, true);
}

Tableau reverse_slide_by_swaps(const Tableau& T, const BoxSet& C) {
  check_reverse(T, C);
  return slide_by_swaps(T, C, false);
}

std::vector<BoxSet> forward_choices(const Tableau& T) { return nonempty_subsets(T.poset().maximal(T.inner())); }

std::vector<BoxSet> reverse_choices(const Tableau& T) {
  const Poset& p = T.poset();
  return nonempty_subsets(p.minimal(p.all() - T.outer()));
}

std::pair<Tableau, Tableau> infusion(const Tableau& S, const Tableau& T) {
  if (&S.poset() != &T.poset()) throw std::invalid_argument("infusion needs tableaux on one poset");
  if (S.outer() != T.inner()) throw std::invalid_argument("infusion needs sh(S) = mu/lambda and sh(T) = nu/mu");
  const Poset& p = S.poset();
  MarkedTableau M(p);
  S.skew().for_each([&](int i) { M.labels[i] = Label::barred(S.at(i)); });
  T.skew().for_each([&](int i) { M.labels[i] = Label::plain(T.at(i)); });
  auto sv = S.value_set(), tv = T.value_set();
  for (auto a = sv.rbegin(); a != sv.rend(); ++a)
    for (int b : tv) M = swap(M, Label::barred(*a), Label::plain(b));
  std::vector<int> plain_vals(p.size(), 0), bar_vals(p.size(), 0);
  BoxSet plain, barred;
  for (int i = 0; i < p.size(); ++i) {
    if (M.labels[i].mark == Mark::Plain) {
      plain.set(i);
      plain_vals[i] = M.labels[i].value;
    } else if (M.labels[i].mark == Mark::Barred) {
      barred.set(i);
      bar_vals[i] = M.labels[i].value;
    }
  }
  BoxSet mid = S.inner() | plain;
  return {Tableau(p, S.inner(), mid, std::move(plain_vals)), Tableau(p, mid, T.outer(), std::move(bar_vals))};
}

std::vector<Tableau> rectify_all(const Tableau& T, std::size_t budget) {
  std::unordered_set<Tableau> seen{T};
  std::set<Tableau> found;
  std::vector<Tableau> stack{T};
  while (!stack.empty()) {
    Tableau cur = std::move(stack.back());
    stack.pop_back();
    if (cur.straight()) {
      found.insert(cur);
      continue;
    }
    for (const auto& C : forward_choices(cur)) {
      Tableau nxt = forward_slide(cur, C);
      if (seen.insert(nxt).second) {
        if (seen.size() > budget) throw BudgetExceeded("rectify_all exceeded budget of " + std::to_string(budget));
        stack.push_back(std::move(nxt));
      }
    }
  }
  return {found.begin(), found.end()};
}

Tableau rect_greedy(const Tableau& T) {
  Tableau cur = T;
  while (!cur.straight()) cur = forward_slide(cur, cur.poset().maximal(cur.inner()));
  return cur;
}

Tableau antirect_greedy(const Tableau& T) {
  const Poset& p = T.poset();
  if (!p.bounded()) throw std::invalid_argument("anti-rectification needs a bounded poset");
  Tableau cur = T;
  while (cur.outer() != p.all()) cur = reverse_slide(cur, p.minimal(p.all() - cur.outer()));
  return cur;
}

std::vector<Tableau> reverse_closure(const Tableau& U, std::size_t budget) {
  std::unordered_set<Tableau> seen{U};
  std::vector<Tableau> order{U};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& C : reverse_choices(order[k])) {
      Tableau nxt = reverse_slide(order[k], C);
      if (seen.insert(nxt).second) {
        if (seen.size() > budget) throw BudgetExceeded("reverse_closure exceeded budget of " + std::to_string(budget));
        order.push_back(std::move(nxt));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<Tableau> JdtClass::straight_members() const {
  std::vector<Tableau> out;
  for (const auto& t : members)
    if (t.straight()) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Breadth-first class closure; stops early when `stop` returns true.
template <class Stop>
JdtClass class_bfs(const Tableau& T, std::size_t budget, Stop&& stop) {
  JdtClass K{T, {T}, false, false};
  const BoxSet& boundary = T.poset().boundary();
  std::unordered_set<Tableau> seen{T};
  K.touches_boundary = T.outer().intersects(boundary);
  if (stop(T)) return K;
  for (std::size_t k = 0; k < K.members.size(); ++k) {
    const Tableau cur = K.members[k];
    auto visit = [&](Tableau&& nxt) -> bool {
      if (!seen.insert(nxt).second) return false;
      if (nxt.outer().intersects(boundary)) K.touches_boundary = true;
      K.members.push_back(std::move(nxt));
      return stop(K.members.back()) || K.members.size() > budget;
    };
    for (const auto& C : forward_choices(cur))
      if (visit(forward_slide(cur, C))) return K;
    for (const auto& C : reverse_choices(cur))
      if (visit(reverse_slide(cur, C))) return K;
  }
  K.exhausted = true;
  return K;
}

}  // namespace

JdtClass jdt_class(const Tableau& T, std::size_t budget) {
  return class_bfs(T, budget, [](const Tableau&) { return false; });
}

std::string to_string(UrtStatus s) {
  switch (s) {
    case UrtStatus::Certified: return "certified";
    case UrtStatus::Refuted: return "refuted";
    case UrtStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

UrtVerdict is_urt(const Tableau& U, const UrtOptions& opts) {
  if (!U.straight()) throw std::invalid_argument("is_urt needs a straight tableau");
  Tableau seed = opts.pack ? U.packed() : U;
  JdtClass K = class_bfs(seed, opts.budget, [&](const Tableau& t) { return t.straight() && !(t == seed); });
  UrtVerdict v;
  v.packed = opts.pack;
  v.class_size = K.members.size();
  const Tableau& last = K.members.back();
  if (last.straight() && !(last == seed)) {
    v.status = UrtStatus::Refuted;
    v.witness = last;
    v.reason = "second straight tableau in class";
  } else if (!K.exhausted) {
    v.reason = "budget of " + std::to_string(opts.budget) + " class members exhausted";
  } else if (K.touches_boundary) {
    v.reason = "class reaches the boundary of window " + U.poset().spec();
  } else {
    v.status = UrtStatus::Certified;
    v.reason = "class exhausted with one straight member";
  }
  return v;
}

bool type_a(const Poset& p) {
  return p.family().kind == FamilyKind::TypeA || p.family().kind == FamilyKind::AmbientGrid;
}

bool type_b(const Poset& p) {
  return p.family().kind == FamilyKind::MaxOrthogonal || p.family().kind == FamilyKind::AmbientShifted;
}

Tableau urt_window(const Tableau& U, int pad) {
  if (!U.straight()) throw std::invalid_argument("urt_window needs a straight tableau");
  auto rows = U.outer_shape().rows();
  int nrows = static_cast<int>(rows.size()), ncols = rows.empty() ? 0 : rows[0];
  const Poset& p = U.poset();
  if (type_a(p)) return U.embed(Poset::get(PosetFamily::grid(nrows + pad, ncols + pad)));
  if (type_b(p)) {
    int last_col = 0;
    U.outer().for_each([&](int i) { last_col = std::max(last_col, p.box(i).col); });
    return U.embed(Poset::get(PosetFamily::shifted(last_col + pad)));
  }
  throw std::invalid_argument("urt_window needs a type A or type B tableau");
}

Tableau bounded_window(const Tableau& U, int pad) {
  if (!U.straight()) throw std::invalid_argument("bounded_window needs a straight tableau");
  auto rows = U.outer_shape().rows();
  int nrows = 0, ncols = rows.empty() ? 0 : rows[0];
  for (int r : rows) nrows += r > 0;
  const Poset& p = U.poset();
  if (type_a(p)) return U.embed(Poset::get(PosetFamily::type_a(std::max(1, nrows + pad), std::max(1, ncols + pad))));
  if (type_b(p)) {
    int last_col = 0;
    U.outer().for_each([&](int i) { last_col = std::max(last_col, p.box(i).col); });
    return U.embed(Poset::get(PosetFamily::max_orthogonal(std::max(1, last_col + pad) + 1)));
  }
  throw std::invalid_argument("bounded_window needs a type A or type B tableau");
}

// --------------------------------------------------------- distinguished

Tableau minimal_tableau(const Poset& p, const BoxSet& inner, const BoxSet& outer) {
  BoxSet skew = outer - inner;
  auto d = p.chain_depth_below(skew);
  std::vector<int> v(p.size(), 0);
  skew.for_each([&](int i) { v[i] = d[i]; });
  return Tableau(p, inner, outer, std::move(v));
}

Tableau maximal_tableau(const Poset& p, const BoxSet& inner, const BoxSet& outer) {
  BoxSet skew = outer - inner;
  auto d = p.chain_depth_above(skew);
  std::vector<int> v(p.size(), 0);
  skew.for_each([&](int i) { v[i] = -d[i]; });
  return Tableau(p, inner, outer, std::move(v));
}

Tableau maximal_tableau_by_duality(const Poset& p, const BoxSet& inner, const BoxSet& outer) {
  BoxSet lam_dual = p.all() - p.wx(inner), nu_dual = p.all() - p.wx(outer);
  return wx_act(minimal_tableau(p, nu_dual, lam_dual));
}

void for_each_packed_tableau(const Shape& lambda, const std::function<bool(const Tableau&)>& visit) {
  const Poset& p = lambda.poset();
  const BoxSet target = lambda.boxes();
  std::vector<int> vals(p.size(), 0);
  bool stop = false;
  std::function<void(const BoxSet&, int)> go = [&](const BoxSet& cur, int v) {
    if (cur == target) {
      stop = !visit(Tableau::unchecked(p, {}, target, vals));
      return;
    }
    for (const BoxSet& S : nonempty_subsets(p.addable(cur) & target)) {
      S.for_each([&](int b) { vals[b] = v; });
      go(cur | S, v + 1);
      S.for_each([&](int b) { vals[b] = 0; });
      if (stop) return;
    }
  };
  go({}, 1);
}

std::size_t count_packed_tableaux(const Shape& lambda) {
  std::size_t n = 0;
  for_each_packed_tableau(lambda, [&](const Tableau&) { return ++n, true; });
  return n;
}

Tableau superstandard(const Shape& lambda, Orientation o) {
  const Poset& p = lambda.poset();
  std::vector<int> order;
  lambda.boxes().for_each([&](int i) { order.push_back(i); });
  if (o == Orientation::Columnwise)
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(p.box(a).col, p.box(a).row) < std::pair(p.box(b).col, p.box(b).row);
    });
  std::vector<int> v(p.size(), 0);
  int next = 1;
  for (int i : order) v[i] = next++;
  return Tableau(p, BoxSet{}, lambda.boxes(), std::move(v));
}

Tableau wx_act(const Tableau& T) {
  const Poset& p = T.poset();
  if (!p.has_involution()) throw std::invalid_argument("w_X action needs a bounded poset with involution");
  BoxSet inner = p.all() - p.wx(T.outer()), outer = p.all() - p.wx(T.inner());
  std::vector<int> v(p.size(), 0);
  (outer - inner).for_each([&](int i) { v[i] = -T.at(p.wx(i)); });
  return Tableau(p, inner, outer, std::move(v));
}

const Poset& doubling_poset(const Poset& p) {
  switch (p.family().kind) {
    case FamilyKind::MaxOrthogonal: {
      int n = p.family().params[0] - 1;
      return Poset::get(PosetFamily::grid(n, n));
    }
    case FamilyKind::AmbientShifted: {
      int n = p.family().params[0];
      return Poset::get(PosetFamily::grid(n, n));
    }
    default: throw std::invalid_argument("doubling needs a shifted (type B) poset");
  }
}

BoxSet double_boxes(const Poset& from, const Poset& to, const BoxSet& s) {
  BoxSet out;
  s.for_each([&](int i) {
    Box b = from.box(i);
    out.set(to.index_or_throw(b));
    out.set(to.index_or_throw({b.col, b.row}));
  });
  return out;
}

Tableau doubling(const Tableau& T) {
  const Poset& p = T.poset();
  const Poset& g = doubling_poset(p);
  std::vector<int> v(g.size(), 0);
  T.skew().for_each([&](int i) {
    Box b = p.box(i);
    v[g.index_or_throw(b)] = T.at(i);
    v[g.index_or_throw({b.col, b.row})] = T.at(i);
  });
  return Tableau(g, double_boxes(p, g, T.inner()), double_boxes(p, g, T.outer()), std::move(v));
}

Tableau tableau_star(const Tableau& S, const Tableau& T) {
  if (!S.straight() || !T.straight() || !type_a(S.poset()) || !type_a(T.poset()))
    throw std::invalid_argument("tableau product needs straight type A tableaux");
  auto lam = S.outer_shape().rows(), mu = T.outer_shape().rows();
  int l_rows = static_cast<int>(lam.size()), m_rows = static_cast<int>(mu.size());
  int l_cols = lam.empty() ? 0 : lam[0], m_cols = mu.empty() ? 0 : mu[0];
  const Poset& g = Poset::get(PosetFamily::grid(std::max(1, l_rows + m_rows), std::max(1, l_cols + m_cols)));
  std::map<Box, int> cells;
  BoxSet inner;
  for (int r = 1; r <= m_rows; ++r)
    for (int c = 1; c <= l_cols; ++c) inner.set(g.index_or_throw({r, c}));
  for (const auto& [b, x] : T.cells()) cells[{b.row, l_cols + b.col}] = x;
  for (const auto& [b, x] : S.cells()) cells[{m_rows + b.row, b.col}] = x;
  return Tableau::from_cells(g, inner, cells);
}

Tableau trim_grid(const Tableau& T) {
  if (!T.straight() || !type_a(T.poset())) throw std::invalid_argument("trim_grid needs a straight type A tableau");
  auto rows = T.outer_shape().rows();
  int r = std::max<int>(1, static_cast<int>(rows.size())), c = std::max(1, rows.empty() ? 1 : rows[0]);
  return T.embed(Poset::get(PosetFamily::grid(r, c)));
}

Tableau tableau_product(const Tableau& S, const Tableau& T) { return trim_grid(rect_greedy(tableau_star(S, T))); }

Tableau conjugate(const Tableau& T) {
  const Poset& p = T.poset();
  if (!type_a(p)) throw std::invalid_argument("conjugate needs a type A tableau");
  const auto& f = p.family();
  const Poset& q = Poset::get(f.kind == FamilyKind::TypeA ? PosetFamily::type_a(f.params[1], f.params[0])
                                                          : PosetFamily::grid(f.params[1], f.params[0]));
  BoxSet inner, outer;
  std::vector<int> v(q.size(), 0);
  T.outer().for_each([&](int i) {
    Box b = p.box(i);
    int j = q.index_or_throw({b.col, b.row});
    outer.set(j);
    if (T.inner().test(i))
      inner.set(j);
    else
      v[j] = T.at(i);
  });
  return Tableau(q, inner, outer, std::move(v));
}

}  // namespace kmin
