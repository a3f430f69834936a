#include "kmin/kring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <tuple>

#include "kmin/common.hpp"

namespace kmin {

bool ring_supported(const Poset& p) { return p.is_minuscule() || p.family().ambient(); }

void require_ring_poset(const Poset& p, const RingOptions& opts) {
  if (ring_supported(p) || opts.assume_urp) return;
  throw RefusedPoset("poset " + p.spec() + " is not known to be a unique rectification poset; pass assume_urp to override");
}

namespace {

void same_poset(const Shape& a, const Shape& b) {
  if (&a.poset() != &b.poset()) throw std::invalid_argument("shapes come from different posets");
}

std::vector<BoxSet> subsets(const BoxSet& s, bool with_empty) {
  std::vector<int> items;
  s.for_each([&](int i) { items.push_back(i); });
  if (items.size() > 24) throw std::length_error("too many addable boxes to enumerate layers");
  std::vector<BoxSet> out;
  for (std::uint32_t mask = with_empty ? 0 : 1; mask < (1u << items.size()); ++mask) {
    BoxSet c;
    for (std::size_t k = 0; k < items.size(); ++k)
      if (mask >> k & 1u) c.set(items[k]);
    out.push_back(c);
  }
  return out;
}

// ------------------------------------------------------- LR enumeration

// Fills nu/lambda one value layer at a time. After layer j the partial
// tableau must rectify to M_mu restricted to [1, j]; greedy rectification
// commutes with restriction to an initial value interval, so a failing
// prefix cannot be completed.
struct LrSearch {
  const Poset& p;
  BoxSet inner;
  BoxSet limit;
  bool exact = false;  // outer must equal limit
  bool keep = false;
  std::vector<Tableau> prefix;  // prefix[j] = M_mu | [1, j + 1]
  int layers = 0;

  struct Result {
    std::map<BoxSet, long long> counts;
    std::vector<Tableau> tableaux;
    void merge(Result&& o) {
      for (const auto& [k, c] : o.counts) counts[k] += c;
      for (auto& t : o.tableaux) tableaux.push_back(std::move(t));
    }
  };

  bool feasible(const BoxSet& cur, int next_layer) const {
    if (!exact) return true;
    return (limit - cur).count() >= layers - next_layer;
  }

  void dfs(const BoxSet& cur, std::vector<int>& vals, int j, Result& out) const {
    if (j == layers) {
      if (exact && cur != limit) return;
      out.counts[cur] += 1;
      if (keep) out.tableaux.push_back(Tableau::unchecked(p, inner, cur, vals));
      return;
    }
    for (const BoxSet& S : subsets(p.addable(cur) & limit, false)) {
      BoxSet nxt = cur | S;
      if (!feasible(nxt, j + 1)) continue;
      S.for_each([&](int b) { vals[b] = j + 1; });
      if (rect_greedy(Tableau::unchecked(p, inner, nxt, vals)) == prefix[j]) dfs(nxt, vals, j + 1, out);
      S.for_each([&](int b) { vals[b] = 0; });
    }
  }

  Result run() const {
    Result total;
    std::vector<int> vals(p.size(), 0);
    if (layers == 0) {
      dfs(inner, vals, 0, total);
      return total;
    }
    std::vector<BoxSet> first;
    for (const BoxSet& S : subsets(p.addable(inner) & limit, false)) {
      BoxSet nxt = inner | S;
      if (!feasible(nxt, 1)) continue;
      S.for_each([&](int b) { vals[b] = 1; });
      if (rect_greedy(Tableau::unchecked(p, inner, nxt, vals)) == prefix[0]) first.push_back(S);
      S.for_each([&](int b) { vals[b] = 0; });
    }
    std::vector<Result> parts(first.size());
    parallel_for(first.size(), [&](std::size_t k) {
      std::vector<int> v(p.size(), 0);
      first[k].for_each([&](int b) { v[b] = 1; });
      dfs(inner | first[k], v, 1, parts[k]);
    });
    for (auto& r : parts) total.merge(std::move(r));
    std::sort(total.tableaux.begin(), total.tableaux.end());
    return total;
  }
};

LrSearch make_search(const Shape& lambda, const Shape& mu, const BoxSet& limit, bool exact, bool keep) {
  const Poset& p = lambda.poset();
  Tableau M = minimal_tableau(mu);
  LrSearch s{p, lambda.boxes(), limit, exact, keep, {}, mu.size() == 0 ? 0 : M.max_value()};
  for (int j = 1; j <= s.layers; ++j) s.prefix.push_back(M.restrict_values(1, j));
  return s;
}

using CacheKey = std::tuple<const Poset*, BoxSet, BoxSet>;

std::mutex cache_mutex;
std::map<CacheKey, GammaElement>& cache() {
  static std::map<CacheKey, GammaElement> c;
  return c;
}

GammaElement from_counts(const Poset& p, const std::map<BoxSet, long long>& counts) {
  GammaElement e(p);
  for (const auto& [b, c] : counts) e.add(Shape(p, b), c);
  if (!ring_supported(p)) e.mark_unverified();
  return e;
}

long long count_exact(const Shape& lambda, const Shape& mu, const Shape& nu) {
  if (!nu.contains(lambda) || nu.size() < lambda.size() + mu.size()) return 0;
  auto res = make_search(lambda, mu, nu.boxes(), true, false).run();
  auto it = res.counts.find(nu.boxes());
  return it == res.counts.end() ? 0 : it->second;
}

}  // namespace

void clear_product_cache() {
  std::lock_guard lock(cache_mutex);
  cache().clear();
}

long long structure_constant(const Shape& lambda, const Shape& mu, const Shape& nu, const RingOptions& opts) {
  same_poset(lambda, mu);
  same_poset(lambda, nu);
  require_ring_poset(lambda.poset(), opts);
  {
    std::lock_guard lock(cache_mutex);
    for (const auto& key : {CacheKey{&lambda.poset(), lambda.boxes(), mu.boxes()},
                            CacheKey{&lambda.poset(), mu.boxes(), lambda.boxes()}}) {
      auto it = cache().find(key);
      if (it != cache().end()) return it->second.coeff(nu);
    }
  }
  long long c = count_exact(lambda, mu, nu);
#ifndef NDEBUG
  if (count_exact(mu, lambda, nu) != c)
    throw std::logic_error("structure constant is not symmetric for " + lambda.to_string() + ", " + mu.to_string());
#endif
  return c;
}

GammaElement product(const Shape& lambda, const Shape& mu, const RingOptions& opts) {
  same_poset(lambda, mu);
  const Poset& p = lambda.poset();
  require_ring_poset(p, opts);
  // Either order gives the same constants; the larger inner shape leaves
  // fewer boxes to fill.
  const Shape& in = mu.size() > lambda.size() ? mu : lambda;
  const Shape& target = &in == &lambda ? mu : lambda;
  CacheKey key{&p, in.boxes(), target.boxes()};
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  GammaElement e = from_counts(p, make_search(in, target, p.all(), false, false).run().counts);
  std::lock_guard lock(cache_mutex);
  cache().emplace(key, e);
  return e;
}

GammaElement product(const GammaElement& a, const GammaElement& b, const RingOptions& opts) {
  if (&a.poset() != &b.poset()) throw std::invalid_argument("elements from different posets");
  GammaElement out(a.poset());
  for (const auto& [s, x] : a.terms())
    for (const auto& [t, y] : b.terms()) out += product(s, t, opts) * (x * y);
  if (a.unverified() || b.unverified() || !ring_supported(a.poset())) out.mark_unverified();
  return out;
}

std::vector<Tableau> product_tableaux(const Shape& lambda, const Shape& mu, const RingOptions& opts) {
  same_poset(lambda, mu);
  require_ring_poset(lambda.poset(), opts);
  return make_search(lambda, mu, lambda.poset().all(), false, true).run().tableaux;
}

std::vector<Tableau> product_tableaux(const Shape& lambda, const Shape& mu, const Shape& nu, const RingOptions& opts) {
  same_poset(lambda, mu);
  same_poset(lambda, nu);
  require_ring_poset(lambda.poset(), opts);
  if (!nu.contains(lambda)) return {};
  return make_search(lambda, mu, nu.boxes(), true, true).run().tableaux;
}

RectificationCensus rectification_census(const Shape& lambda, const Shape& nu, const Tableau& U, std::size_t budget) {
  same_poset(lambda, nu);
  if (!U.straight() || &U.poset() != &lambda.poset()) throw std::invalid_argument("U must be a straight tableau of the same poset");
  const Poset& p = lambda.poset();
  RectificationCensus out;
  if (!nu.contains(lambda)) return out;
  auto values = U.value_set();
  const int layers = static_cast<int>(values.size());
  std::vector<Tableau> prefix;
  for (int v : values) prefix.push_back(U.restrict_values(values.front(), v));
  std::vector<int> vals(p.size(), 0);
  std::function<void(const BoxSet&, int)> go = [&](const BoxSet& cur, int j) {
    if (j == layers) {
      if (cur != nu.boxes()) return;
      Tableau T = Tableau::unchecked(p, lambda.boxes(), cur, vals);
      auto all = rectify_all(T, budget);
      if (!std::binary_search(all.begin(), all.end(), U)) return;
      out.having.push_back(T);
      out.unique += all.size() == 1;
      return;
    }
    for (const BoxSet& S : subsets(p.addable(cur) & nu.boxes(), false)) {
      BoxSet nxt = cur | S;
      if ((nu.boxes() - nxt).count() < layers - j - 1) continue;
      S.for_each([&](int b) { vals[b] = values[j]; });
      if (j + 1 == layers) {
        go(nxt, j + 1);
      } else {
        auto all = rectify_all(Tableau::unchecked(p, lambda.boxes(), nxt, vals), budget);
        if (std::binary_search(all.begin(), all.end(), prefix[j])) go(nxt, j + 1);
      }
      S.for_each([&](int b) { vals[b] = 0; });
    }
  };
  if (layers == 0) {
    if (lambda == nu) out.having.push_back(Tableau::empty(p, lambda.boxes())), out.unique = 1;
    return out;
  }
  go(lambda.boxes(), 0);
  std::sort(out.having.begin(), out.having.end());
  return out;
}

// ------------------------------------------------------------ O basis

namespace {

template <class To, class From>
To twist(const From& a) {
  To out(a.poset());
  for (const auto& [s, c] : a.terms()) out.add(s, s.size() % 2 ? -c : c);
  out.mark_unverified(a.unverified());
  return out;
}

}  // namespace

SignedKElement to_schubert_basis(const GammaElement& a) { return twist<SignedKElement>(a); }
GammaElement from_schubert_basis(const SignedKElement& a) { return twist<GammaElement>(a); }

SignedKElement product(const SignedKElement& a, const SignedKElement& b, const RingOptions& opts) {
  return to_schubert_basis(product(from_schubert_basis(a), from_schubert_basis(b), opts));
}

long long euler_characteristic(const SignedKElement& a) { return a.coefficient_sum(); }

long long euler_pairing(const Shape& lambda, const Shape& mu, const RingOptions& opts) {
  return euler_characteristic(product(SignedKElement::basis(lambda), SignedKElement::basis(mu), opts));
}

SignedKElement dual_class(const Shape& lambda) {
  Shape base = dual_shape(lambda);
  SignedKElement out(lambda.poset());
  for (const Shape& nu : rook_strips_over(base)) out.add(nu, (nu.size() - base.size()) % 2 ? -1 : 1);
  return out;
}

SymmetryCheck check_symmetry(const Shape& lambda, const Shape& mu, const Shape& nu, const RingOptions& opts) {
  same_poset(lambda, mu);
  same_poset(lambda, nu);
  const Poset& p = lambda.poset();
  SymmetryCheck r;
  Shape dl = dual_shape(lambda);
  SignedKElement rhs = SignedKElement::basis(dl);
  if (p.size() > 0) {
    Shape one(p, p.minimal(p.all()));
    rhs -= product(SignedKElement::basis(one), SignedKElement::basis(dl), opts);
  }
  r.dual_identity = rhs == dual_class(lambda);
  r.c = structure_constant(lambda, mu, nu, opts);
  r.c_dual = structure_constant(lambda, dual_shape(nu), dual_shape(mu), opts);
  return r;
}

GammaElement transfer(const GammaElement& a, const Poset& target) {
  GammaElement out(target);
  for (const auto& [s, c] : a.terms()) {
    auto rows = s.rows();
    try {
      out.add(Shape::from_rows(target, rows), c);
    } catch (const ParseError&) {
      if (target.bounded()) continue;
      throw WindowExceeded("G[" + rows_to_string(rows) + "] does not fit in window " + target.spec());
    }
  }
  out.mark_unverified(a.unverified());
  return out;
}

// -------------------------------------------------------------- Pieri A

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const Poset& grid_window(int rows, int cols) { return Poset::get(PosetFamily::grid(std::max(1, rows), std::max(1, cols))); }

void pieri_rows(const std::vector<int>& lam, std::vector<int>& nu, std::size_t r, int p, int added, int nonempty,
                std::vector<std::pair<std::vector<int>, long long>>& out) {
  if (r == nu.size()) {
    long long c = binom(nonempty - 1, added - p);
    if (c) out.emplace_back(nu, c);
    return;
  }
  int base = r < lam.size() ? lam[r] : 0;
  int top = r == 0 ? base + p + static_cast<int>(lam.size()) : (r - 1 < lam.size() ? lam[r - 1] : 0);
  for (int v = base; v <= top; ++v) {
    nu[r] = v;
    pieri_rows(lam, nu, r + 1, p, added + v - base, nonempty + (v > base), out);
  }
  nu[r] = base;
}

}  // namespace

GammaElement pieri_A(const Shape& lambda, int p) {
  if (p <= 0) throw std::invalid_argument("pieri_A needs p >= 1");
  if (!type_a(lambda.poset())) throw std::invalid_argument("pieri_A needs a type A poset");
  std::vector<int> lam = lambda.rows();
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  std::vector<int> nu(lam.size() + 1, 0);
  std::vector<std::pair<std::vector<int>, long long>> terms;
  pieri_rows(lam, nu, 0, p, 0, 0, terms);
  int rows = static_cast<int>(lam.size()) + 1, cols = 0;
  for (const auto& [n, c] : terms) cols = std::max(cols, n[0]);
  const Poset& g = grid_window(rows, cols);
  GammaElement e(g);
  for (const auto& [n, c] : terms) e.add(Shape::from_rows(g, n), c);
  return transfer(e, lambda.poset());
}

// -------------------------------------------------------------- Pieri B

bool is_pieri_word_b(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto [lo, hi] = std::minmax_element(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    if (!(w[i] <= *lo || w[i] >= *hi)) return false;
  }
  return true;
}

bool is_pieri_tableau_b(const Tableau& T) {
  if (!type_b(T.poset())) throw std::invalid_argument("Pieri tableaux of type B live on shifted posets");
  return is_pieri_word_b(row_word(T));
}

namespace {

std::vector<BoxSet> ideals_between(const Poset& p, const BoxSet& lo) {
  std::vector<BoxSet> out{lo};
  std::set<BoxSet> seen{lo};
  for (std::size_t k = 0; k < out.size(); ++k) {
    BoxSet cur = out[k];
    p.addable(cur).for_each([&](int b) {
      BoxSet n = cur;
      n.set(b);
      if (seen.insert(n).second) out.push_back(n);
    });
  }
  return out;
}

struct PieriBCount {
  std::map<BoxSet, long long> counts;
  bool touches = false;
};

// Counts Pieri tableaux of range [1, p] on every nu/lambda inside the window
// and records whether some Pieri tableau with range inside [1, p] meets the
// window boundary.
PieriBCount pieri_b_in_window(const Poset& w, const BoxSet& lambda, int p) {
  PieriBCount r;
  if (lambda.intersects(w.boundary())) r.touches = true;
  const unsigned full = (1u << p) - 1;
  for (const BoxSet& nu : ideals_between(w, lambda)) {
    BoxSet skew = nu - lambda;
    if (skew.empty()) continue;
    std::vector<int> order;
    skew.for_each([&](int i) { order.push_back(i); });
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const Box &x = w.box(a), &y = w.box(b);
      return std::pair(-x.row, x.col) < std::pair(-y.row, y.col);
    });
    std::vector<int> val(w.size(), 0);
    long long hits = 0;
    bool any = false;
    std::function<void(std::size_t, int, int, unsigned)> go = [&](std::size_t k, int mn, int mx, unsigned used) {
      if (k == order.size()) {
        any = true;
        if (used == full) ++hits;
        return;
      }
      int b = order[k];
      Box bx = w.box(b);
      int lo = 1, hi = p;
      if (auto l = w.index({bx.row, bx.col - 1}); l && skew.test(*l)) lo = std::max(lo, val[*l] + 1);
      if (auto d = w.index({bx.row + 1, bx.col}); d && skew.test(*d)) hi = std::min(hi, val[*d] - 1);
      for (int v = lo; v <= hi; ++v) {
        if (k > 0 && !(v <= mn || v >= mx)) continue;
        val[b] = v;
        go(k + 1, k ? std::min(mn, v) : v, k ? std::max(mx, v) : v, used | (1u << (v - 1)));
      }
      val[b] = 0;
    };
    go(0, 0, 0, 0);
    if (hits) r.counts[nu] = hits;
    if (any && skew.intersects(w.boundary())) r.touches = true;
  }
  return r;
}

}  // namespace

GammaElement pieri_B(const Shape& lambda, int p) {
  if (p <= 0 || p > 30) throw std::invalid_argument("pieri_B needs 1 <= p <= 30");
  const Poset& src = lambda.poset();
  if (!type_b(src)) throw std::invalid_argument("pieri_B needs a shifted poset");
  auto rows = lambda.rows();
  int last = 0;
  lambda.boxes().for_each([&](int i) { last = std::max(last, src.box(i).col); });
  for (int c = last + p + 1;; c += p + 1) {
    if (c > 60) throw WindowExceeded("pieri_B window did not stabilize");
    const Poset& w = Poset::get(PosetFamily::shifted(c));
    PieriBCount r = pieri_b_in_window(w, w.ideal_from_rows(rows), p);
    if (r.touches) continue;
    return transfer(from_counts(w, r.counts), src);
  }
}

// ------------------------------------------------------- Grothendieck

namespace {

// Letters i with s_i in every reduced word of w.
std::vector<int> support_letters(const Permutation& w) {
  std::vector<int> out;
  int mx = w.lo() - 1;
  for (int i = w.lo(); i < w.hi(); ++i) {
    mx = std::max(mx, w(i));
    if (mx > i) out.push_back(i);
  }
  return out;
}

// Increasing fillings of outer/inner by the given values, one antichain layer
// per value, every value used. Calls f on each Hecke match.
std::map<BoxSet, long long> count_hecke(const Poset& g, const BoxSet& inner, const std::vector<int>& letters,
                                        const Permutation& target) {
  std::map<BoxSet, long long> counts;
  std::vector<int> vals(g.size(), 0);
  std::function<void(std::size_t, const BoxSet&)> go = [&](std::size_t k, const BoxSet& cur) {
    if (k == letters.size()) {
      if (hecke_of_tableau(Tableau::unchecked(g, inner, cur, vals)) == target) counts[cur] += 1;
      return;
    }
    for (const BoxSet& S : subsets(g.addable(cur), false)) {
      S.for_each([&](int b) { vals[b] = letters[k]; });
      go(k + 1, cur | S);
      S.for_each([&](int b) { vals[b] = 0; });
    }
  };
  go(0, inner);
  return counts;
}

}  // namespace

GammaElement stable_grothendieck_coeffs(const Permutation& w) {
  auto letters = support_letters(w);
  int d = static_cast<int>(letters.size());
  const Poset& g = grid_window(d, d);
  return from_counts(g, count_hecke(g, {}, letters, w.inverse()));
}

GammaElement grothendieck_times_shape(const Permutation& w, const Shape& lambda) {
  if (!type_a(lambda.poset())) throw std::invalid_argument("grothendieck_times_shape needs a type A poset");
  auto letters = support_letters(w);
  int d = static_cast<int>(letters.size());
  auto rows = lambda.rows();
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  const Poset& g = grid_window(static_cast<int>(rows.size()) + d, (rows.empty() ? 0 : rows[0]) + d);
  return transfer(from_counts(g, count_hecke(g, g.ideal_from_rows(rows), letters, w.inverse())), lambda.poset());
}

GammaElement experimental_b_w(const Permutation& w) {
  auto letters = support_letters(w);
  const Poset& s = Poset::get(PosetFamily::shifted(std::max<int>(1, static_cast<int>(letters.size()))));
  GammaElement e = from_counts(s, count_hecke(s, {}, letters, w));
  e.mark_unverified();
  return e;
}

// --------------------------------------------------------- fat hooks

FatHookReport fat_hook_urt(int a, int b, int c, int d, const Tableau& U, const UrtOptions& opts) {
  if (a <= 0 || b <= 0 || c < 0 || c >= a || d < 0)
    throw std::invalid_argument("fat hook needs a > c >= 0, b > 0, d >= 0");
  if (!U.straight() || !type_a(U.poset())) throw std::invalid_argument("U must be a straight type A tableau");
  auto urows = U.outer_shape().rows();
  while (!urows.empty() && urows.back() == 0) urows.pop_back();
  int top = std::max(a + b - 1, c > 0 ? b + d + c - 1 : 0);
  if (static_cast<int>(urows.size()) > d || (!urows.empty() && urows[0] > a - c))
    throw std::invalid_argument("U does not fit in the corner of the fat hook");
  if (U.size() > 0 && U.min_value() <= top)
    throw std::invalid_argument("entries of U must exceed the largest entry of M_lambda");
  std::map<Box, int> cells;
  for (int r = 1; r <= b + d; ++r)
    for (int col = 1; col <= (r <= b ? a : c); ++col) cells[{r, col}] = r + col - 1;
  for (const auto& [bx, v] : U.cells()) cells[{b + bx.row, c + bx.col}] = v;
  const Poset& g = grid_window(b + d, a);
  Tableau combined = Tableau::from_cells(g, {}, cells);
  FatHookReport rep{combined, {}, {}};
  rep.corner = is_urt(bounded_window(U), opts);
  rep.direct = is_urt(bounded_window(combined), opts);
  return rep;
}

// --------------------------------------------------- minimal products

namespace {

Tableau minimal_in_grid(const std::vector<int>& lam) {
  int rows = 0;
  for (int r : lam) rows += r > 0;
  const Poset& g = grid_window(rows, lam.empty() ? 0 : lam[0]);
  return minimal_tableau(Shape::from_rows(g, lam));
}

}  // namespace

std::vector<int> minimal_product_shape(const std::vector<int>& lambda, const std::vector<int>& mu) {
  auto rows = tableau_product(minimal_in_grid(lambda), minimal_in_grid(mu)).outer_shape().rows();
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

Permutation minimal_hecke(const std::vector<int>& lambda) { return hecke_of_tableau(minimal_in_grid(lambda)); }

}  // namespace kmin
