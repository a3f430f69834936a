#include "kmin/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "kmin/common.hpp"

namespace kmin {

namespace {

std::string shape_label(const Shape& s) { return "(" + s.to_string() + ")"; }

std::string type_letter(Dynkin t) {
  switch (t) {
    case Dynkin::A: return "A";
    case Dynkin::B: return "B";
    case Dynkin::C: return "C";
    case Dynkin::D: return "D";
    case Dynkin::E: return "E";
  }
  return "?";
}

}  // namespace

RootSystem RootSystem::make(Dynkin type, int n) {
  bool ok = false;
  switch (type) {
    case Dynkin::A: ok = n >= 1; break;
    case Dynkin::B:
    case Dynkin::C: ok = n >= 2; break;
    case Dynkin::D: ok = n >= 4; break;
    case Dynkin::E: ok = n >= 6 && n <= 8; break;
  }
  if (!ok) throw std::invalid_argument("unsupported root system " + type_letter(type) + std::to_string(n));

  RootSystem R;
  R.type_ = type;
  R.rank_ = n;
  R.form_.assign(n * n, 0);
  auto edge = [&](int i, int j, int v) {  // 1-based nodes
    R.form_[(i - 1) * n + (j - 1)] = v;
    R.form_[(j - 1) * n + (i - 1)] = v;
  };
  for (int i = 0; i < n; ++i) R.form_[i * n + i] = 2;
  switch (type) {
    case Dynkin::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1, -1);
      break;
    case Dynkin::B:
      for (int i = 0; i < n - 1; ++i) R.form_[i * n + i] = 4;
      for (int i = 1; i < n; ++i) edge(i, i + 1, -2);
      break;
    case Dynkin::C:
      R.form_[(n - 1) * n + (n - 1)] = 4;
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1);
      edge(n - 1, n, -2);
      break;
    case Dynkin::D:
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1);
      edge(n - 2, n, -1);
      break;
    case Dynkin::E:
      edge(1, 3, -1);
      edge(2, 4, -1);
      for (int i = 3; i < n; ++i) edge(i, i + 1, -1);
      break;
  }
  R.generate();
  return R;
}

RootSystem RootSystem::parse(std::string_view label) {
  std::string s(label);
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  if (s.size() < 2) throw std::invalid_argument("bad root system label '" + std::string(label) + "'");
  Dynkin t;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': t = Dynkin::A; break;
    case 'B': t = Dynkin::B; break;
    case 'C': t = Dynkin::C; break;
    case 'D': t = Dynkin::D; break;
    case 'E': t = Dynkin::E; break;
    default: throw std::invalid_argument("bad root system label '" + std::string(label) + "'");
  }
  int n = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad root system label '" + std::string(label) + "'");
    n = n * 10 + (s[i] - '0');
    if (n > 64) throw std::invalid_argument("rank too large in '" + std::string(label) + "'");
  }
  return make(t, n);
}

std::string RootSystem::label() const { return type_letter(type_) + std::to_string(rank_); }

int RootSystem::pairing(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * form(i, j) * b[j];
  return s;
}

int RootSystem::height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

void RootSystem::generate() {
  std::vector<Root> layer;
  for (int i = 0; i < rank_; ++i) {
    Root r(rank_, 0);
    r[i] = 1;
    layer.push_back(r);
  }
  std::map<Root, int> seen;
  while (!layer.empty()) {
    for (const auto& r : layer) {
      seen[r] = static_cast<int>(positive_.size());
      positive_.push_back(r);
    }
    std::vector<Root> next;
    for (const auto& beta : layer)
      for (int i = 0; i < rank_; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i.
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < rank_; ++j) pair += beta[j] * cartan(j, i);
        if (p - pair > 0) {
          Root up = beta;
          up[i] += 1;
          if (!seen.count(up) && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
        }
      }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }

  const int P = num_positive();
  for (int k = 0; k < P; ++k) {
    index_[positive_[k]] = k;
    Root neg = positive_[k];
    for (auto& c : neg) c = -c;
    index_[neg] = k + P;
  }
  reflections_.resize(P);
  for (int k = 0; k < P; ++k) {
    const Root& a = positive_[k];
    const int aa = pairing(a, a);
    auto& perm = reflections_[k];
    perm.resize(2 * P);
    for (int x = 0; x < 2 * P; ++x) {
      Root b = root(x);
      int c = 2 * pairing(b, a) / aa;
      for (int i = 0; i < rank_; ++i) b[i] -= c * a[i];
      perm[x] = index_.at(b);
    }
  }
}

Root RootSystem::root(int k) const {
  if (k < num_positive()) return positive_[k];
  Root r = positive_[k - num_positive()];
  for (auto& c : r) c = -c;
  return r;
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::simple(int node) const {
  if (node < 1 || node > rank_) throw std::out_of_range("node " + std::to_string(node) + " out of range for " + label());
  Root r(rank_, 0);
  r[node - 1] = 1;
  return index_.at(r);
}

RootSystem RootSystem::dual() const {
  if (type_ == Dynkin::B) return make(Dynkin::C, rank_);
  if (type_ == Dynkin::C) return make(Dynkin::B, rank_);
  return *this;
}

bool RootSystem::cominuscule(int node) const {
  if (node < 1 || node > rank_) throw std::out_of_range("node " + std::to_string(node) + " out of range for " + label());
  for (const auto& r : positive_)
    if (r[node - 1] > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------

WeylElement WeylElement::identity(const RootSystem& R) {
  std::vector<int> p(R.num_roots());
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::reflection(const RootSystem& R, int k) { return WeylElement(R.reflection(k)); }

WeylElement WeylElement::operator*(const WeylElement& o) const {
  std::vector<int> p(perm_.size());
  for (std::size_t x = 0; x < p.size(); ++x) p[x] = perm_[o.perm_[x]];
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t x = 0; x < p.size(); ++x) p[perm_[x]] = static_cast<int>(x);
  return WeylElement(std::move(p));
}

int WeylElement::length() const {
  const int P = static_cast<int>(perm_.size() / 2);
  int l = 0;
  for (int x = 0; x < P; ++x) l += perm_[x] >= P;
  return l;
}

std::vector<int> WeylElement::inversion_set() const {
  const int P = static_cast<int>(perm_.size() / 2);
  std::vector<int> out;
  for (int x = 0; x < P; ++x)
    if (perm_[x] >= P) out.push_back(x);
  return out;
}

std::optional<int> WeylElement::as_reflection(const RootSystem& R) const {
  for (int k = 0; k < R.num_positive(); ++k)
    if (R.reflection(k) == perm_) return k;
  return std::nullopt;
}

std::optional<int> WeylElement::as_simple_reflection(const RootSystem& R) const {
  for (int i = 1; i <= R.rank(); ++i)
    if (R.reflection(R.simple(i)) == perm_) return i;
  return std::nullopt;
}

WeylElement longest_element(const RootSystem& R, const std::vector<int>& nodes) {
  WeylElement w = WeylElement::identity(R);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : nodes)
      if (R.is_positive(w.apply(R.simple(i)))) {
        w = w * WeylElement::simple_reflection(R, i);
        grew = true;
      }
  }
  return w;
}

WeylElement longest_element(const RootSystem& R) {
  std::vector<int> all(R.rank());
  std::iota(all.begin(), all.end(), 1);
  return longest_element(R, all);
}

WeylElement longest_in_levi(const RootSystem& R, int gamma) {
  std::vector<int> nodes;
  for (int i = 1; i <= R.rank(); ++i)
    if (i != gamma) nodes.push_back(i);
  return longest_element(R, nodes);
}

// ---------------------------------------------------------------------------

bool LambdaX::leq(int a, int b) const {
  const Root& x = system.positive_root(roots[a]);
  const Root& y = system.positive_root(roots[b]);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] < x[i]) return false;
  return true;
}

LambdaX lambda_from_root_data(const RootSystem& R, int gamma) {
  if (gamma < 1 || gamma > R.rank())
    throw std::invalid_argument("node " + std::to_string(gamma) + " out of range for " + R.label());
  LambdaX lx{R, gamma, false, {}};
  if (!R.cominuscule(gamma)) {
    RootSystem D = R.dual();
    if (!D.cominuscule(gamma))
      throw std::invalid_argument("node " + std::to_string(gamma) + " of " + R.label() +
                                  " is neither minuscule nor cominuscule");
    lx.system = std::move(D);
    lx.via_dual = true;
  }
  for (int k = 0; k < lx.system.num_positive(); ++k)
    if (lx.system.positive_root(k)[gamma - 1] == 1) lx.roots.push_back(k);
  std::stable_sort(lx.roots.begin(), lx.roots.end(), [&](int a, int b) {
    return RootSystem::height(lx.system.positive_root(a)) < RootSystem::height(lx.system.positive_root(b));
  });
  return lx;
}

PosetFamily family_for(const RootSystem& R, int g) {
  const int n = R.rank();
  switch (R.type()) {
    case Dynkin::A:
      if (g >= 1 && g <= n) return PosetFamily::type_a(g, n + 1 - g);
      break;
    case Dynkin::B:
      if (g == 1) return PosetFamily::quadric_odd(n);
      if (g == n) return PosetFamily::max_orthogonal(n + 1);
      break;
    case Dynkin::C:
      if (g == 1) return PosetFamily::quadric_odd(n);
      if (g == n) return PosetFamily::lagrangian(n);
      break;
    case Dynkin::D:
      if (g == 1) return PosetFamily::quadric_even(n - 1);
      if (g == n - 1 || g == n) return PosetFamily::max_orthogonal(n);
      break;
    case Dynkin::E:
      if (n == 6 && (g == 1 || g == 6)) return PosetFamily::cayley();
      if (n == 7 && g == 7) return PosetFamily::freudenthal();
      break;
  }
  throw std::invalid_argument("no minuscule poset for node " + std::to_string(g) + " of " + R.label());
}

EmbeddingReport verify_poset_embedding(const LambdaX& lx, const Poset& P) {
  EmbeddingReport rep;
  const int N = P.size();
  if (lx.size() != N) {
    rep.witness = "size mismatch: " + std::to_string(lx.size()) + " roots vs " + std::to_string(N) + " boxes";
    return rep;
  }
  std::vector<int> hr, hp;
  for (int a = 0; a < N; ++a) hr.push_back(lx.height(a));
  for (int b = 0; b < N; ++b) hp.push_back(P.height(b));
  std::sort(hr.begin(), hr.end());
  std::sort(hp.begin(), hp.end());
  if (hr != hp) {
    rep.witness = "height profiles differ";
    return rep;
  }

  std::vector<std::vector<char>> rleq(N, std::vector<char>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) rleq[a][b] = lx.leq(a, b);

  std::vector<int> map(N, -1);
  std::vector<char> used(N, 0);
  int deepest = -1;
  std::pair<int, int> conflict{-1, -1};

  auto fits = [&](int b, int r) {
    for (int a = 0; a < b; ++a) {
      if (P.leq(a, b) != static_cast<bool>(rleq[map[a]][r]) || P.leq(b, a) != static_cast<bool>(rleq[r][map[a]])) {
        if (b >= deepest) {
          deepest = b;
          conflict = {a, b};
        }
        return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, int b) -> bool {
    if (b == N) return true;
    for (int r = 0; r < N; ++r) {
      if (used[r] || lx.height(r) != P.height(b) || !fits(b, r)) continue;
      map[b] = r;
      used[r] = 1;
      if (self(self, b + 1)) return true;
      used[r] = 0;
    }
    map[b] = -1;
    return false;
  };
  if (search(search, 0)) {
    rep.ok = true;
    rep.box_to_root = map;
  } else if (conflict.first >= 0) {
    rep.witness = "no order isomorphism; pair " + to_string(P.box(conflict.first)) + ", " +
                  to_string(P.box(conflict.second)) + " cannot be matched";
  } else {
    rep.witness = "no order isomorphism";
  }
  return rep;
}

// ---------------------------------------------------------------------------

bool CheckReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

int CheckReport::passed() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; }));
}

RootPosetContext RootPosetContext::make(const RootSystem& R, int gamma) {
  RootPosetContext ctx;
  ctx.lx = lambda_from_root_data(R, gamma);
  ctx.poset = &Poset::get(family_for(R, gamma));
  EmbeddingReport rep = verify_poset_embedding(ctx.lx, *ctx.poset);
  if (!rep.ok) throw std::runtime_error("poset embedding failed for " + R.label() + ": " + rep.witness);
  for (int r : rep.box_to_root) ctx.box_to_root.push_back(ctx.lx.roots[r]);
  return ctx;
}

WeylElement weyl_of_order(const std::vector<int>& boxes, const RootPosetContext& ctx) {
  const RootSystem& R = ctx.system();
  WeylElement w = WeylElement::identity(R);
  for (int b : boxes) w = w * WeylElement::reflection(R, ctx.box_to_root[b]);
  return w;
}

WeylElement weyl_of_shape(const Shape& lambda, const RootPosetContext& ctx) {
  if (&lambda.poset() != ctx.poset) throw std::invalid_argument("shape is not on the poset of the root data");
  std::vector<int> order;
  lambda.boxes().for_each([&](int b) { order.push_back(b); });
  return weyl_of_order(order, ctx);
}

namespace {

CheckReport new_report(const RootSystem& R, int gamma) {
  CheckReport rep;
  rep.system = R.label();
  rep.gamma = gamma;
  return rep;
}

std::string roots_text(const RootSystem& R, const std::vector<int>& ks) {
  std::string s = "{";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ' ';
    const Root r = R.root(ks[i]);
    for (int c : r) s += std::to_string(c);
  }
  return s + "}";
}

}  // namespace

CheckReport check_inversion_theorem(const RootSystem& R, int gamma) {
  auto ctx = RootPosetContext::make(R, gamma);
  const RootSystem& S = ctx.system();
  auto shapes = enumerate_shapes(*ctx.poset);
  CheckReport rep = new_report(R, gamma);
  rep.entries.resize(shapes.size());
  parallel_for(shapes.size(), [&](std::size_t k) {
    const Shape& lam = shapes[k];
    WeylElement w = weyl_of_shape(lam, ctx);
    CheckEntry& e = rep.entries[k];
    e.shape = shape_label(lam);
    e.check = "inversion";
    for (int i = 1; i <= S.rank(); ++i)
      if (i != gamma && !S.is_positive(w.apply(S.simple(i)))) {
        e.witness = "w sends alpha_" + std::to_string(i) + " to a negative root";
        return;
      }
    std::vector<int> expect;
    lam.boxes().for_each([&](int b) { expect.push_back(ctx.box_to_root[b]); });
    std::sort(expect.begin(), expect.end());
    auto inv = w.inversion_set();
    e.pass = inv == expect && w.length() == lam.size();
    if (!e.pass) e.witness = "I(w) = " + roots_text(S, inv) + ", shape roots = " + roots_text(S, expect);
  });
  return rep;
}

CheckReport check_bruhat_containment(const RootSystem& R, int gamma) {
  auto ctx = RootPosetContext::make(R, gamma);
  const RootSystem& S = ctx.system();
  auto shapes = enumerate_shapes(*ctx.poset);
  std::vector<WeylElement> ws;
  for (const auto& s : shapes) ws.push_back(weyl_of_shape(s, ctx));
  CheckReport rep = new_report(R, gamma);
  for (std::size_t a = 0; a < shapes.size(); ++a)
    for (std::size_t b = 0; b < shapes.size(); ++b) {
      if (shapes[b].size() != shapes[a].size() + 1) continue;
      bool refl = (ws[a].inverse() * ws[b]).as_reflection(S).has_value();
      bool sub = shapes[b].contains(shapes[a]);
      CheckEntry e;
      e.shape = shape_label(shapes[a]) + " < " + shape_label(shapes[b]);
      e.check = "bruhat";
      e.pass = refl == sub;
      if (!e.pass) e.witness = refl ? "reflection but not contained" : "contained but not a reflection";
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

CheckReport check_poincare_duality(const RootSystem& R, int gamma) {
  auto ctx = RootPosetContext::make(R, gamma);
  const RootSystem& S = ctx.system();
  const WeylElement w0 = longest_element(S);
  const WeylElement wx = longest_in_levi(S, gamma);
  auto shapes = enumerate_shapes(*ctx.poset);
  CheckReport rep = new_report(R, gamma);
  for (const auto& lam : shapes) {
    Shape dual = dual_shape(lam);
    CheckEntry e;
    e.shape = shape_label(lam);
    e.check = "poincare";
    e.pass = weyl_of_shape(dual, ctx) == w0 * weyl_of_shape(lam, ctx) * wx;
    if (!e.pass) e.witness = "w of dual " + shape_label(dual) + " differs from w0 w_lambda w_X";
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

CheckReport check_full_commutativity(const Shape& lam, const RootSystem& R, int gamma, std::size_t budget) {
  auto ctx = RootPosetContext::make(R, gamma);
  const RootSystem& S = ctx.system();
  const Poset& P = *ctx.poset;
  CheckReport rep = new_report(R, gamma);
  CheckEntry e;
  e.shape = shape_label(lam);
  e.check = "full-commutativity";
  const Shape shape(P, lam.boxes());  // rebinds a shape given on an equal poset

  // Each box alpha carries the simple reflection w_<alpha> w_{<alpha> - alpha}^{-1}.
  std::vector<WeylElement> label(P.size(), WeylElement::identity(S));
  std::vector<int> node(P.size(), 0);
  bool labels_ok = true;
  shape.boxes().for_each([&](int b) {
    BoxSet princ = P.down_closure(BoxSet::single(b));
    BoxSet rest = princ;
    rest.reset(b);
    WeylElement l = weyl_of_shape(Shape(P, princ), ctx) * weyl_of_shape(Shape(P, rest), ctx).inverse();
    auto s = l.as_simple_reflection(S);
    if (!s) {
      labels_ok = false;
      if (e.witness.empty()) e.witness = "label of " + to_string(P.box(b)) + " is not a simple reflection";
    } else {
      node[b] = *s;
    }
    label[b] = std::move(l);
  });
  if (!labels_ok) {
    rep.entries.push_back(std::move(e));
    return rep;
  }
  const WeylElement target = weyl_of_shape(shape, ctx);

  // Count linear extensions over sub-ideals.
  std::unordered_map<BoxSet, double> memo;
  auto count = [&](auto&& self, const BoxSet& s) -> double {
    if (s.empty()) return 1;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    double c = 0;
    P.maximal(s).for_each([&](int b) {
      BoxSet t = s;
      t.reset(b);
      c += self(self, t);
    });
    memo.emplace(s, c);
    return c;
  };
  const double total = count(count, shape.boxes());

  std::vector<int> ext;
  std::string bad;
  auto word_text = [&] {
    std::string s;
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) s += (s.empty() ? "s" : " s") + std::to_string(node[*it]);
    return s;
  };
  std::size_t checked = 0;
  // Extends `ext` (applied so far as `w`) by a minimal box of the remainder.
  auto dfs = [&](auto&& self, const BoxSet& done, const WeylElement& w) -> bool {
    if (done == shape.boxes()) {
      ++checked;
      if (!(w == target)) {
        bad = "word " + word_text() + " does not equal w_lambda";
        return false;
      }
      return true;
    }
    bool ok = true;
    (P.addable(done) & shape.boxes()).for_each([&](int b) {
      if (!ok) return;
      WeylElement v = label[b] * w;
      ext.push_back(b);
      if (v.length() != w.length() + 1) {
        bad = "word " + word_text() + " is not reduced";
        ok = false;
      } else {
        ok = self(self, done | BoxSet::single(b), v);
      }
      ext.pop_back();
    });
    return ok;
  };

  bool pass = true;
  if (total <= static_cast<double>(budget)) {
    pass = dfs(dfs, BoxSet{}, WeylElement::identity(S));
    e.witness = pass ? std::to_string(checked) + " linear extensions checked (exhaustive)" : bad;
  } else {
    std::mt19937_64 rng(0x5eed);
    const std::size_t samples = std::min<std::size_t>(budget, 2000);
    for (std::size_t k = 0; k < samples && pass; ++k) {
      BoxSet done;
      WeylElement w = WeylElement::identity(S);
      ext.clear();
      while (!(done == shape.boxes())) {
        std::vector<int> opts;
        (P.addable(done) & shape.boxes()).for_each([&](int b) { opts.push_back(b); });
        int b = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
        WeylElement v = label[b] * w;
        ext.push_back(b);
        if (v.length() != w.length() + 1) {
          bad = "word " + word_text() + " is not reduced";
          pass = false;
          break;
        }
        w = std::move(v);
        done.set(b);
      }
      if (pass && !(w == target)) {
        bad = "word " + word_text() + " does not equal w_lambda";
        pass = false;
      }
      ++checked;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", total);
    e.witness = pass ? std::to_string(checked) + " of " + buf + " linear extensions sampled" : bad;
  }
  e.pass = pass;
  rep.entries.push_back(std::move(e));
  return rep;
}

CheckReport check_incomparable_orthogonal(const RootSystem& R, int gamma) {
  LambdaX lx = lambda_from_root_data(R, gamma);
  CheckReport rep = new_report(R, gamma);
  for (int a = 0; a < lx.size(); ++a)
    for (int b = a + 1; b < lx.size(); ++b) {
      if (lx.leq(a, b) || lx.leq(b, a)) continue;
      const Root& x = lx.system.positive_root(lx.roots[a]);
      const Root& y = lx.system.positive_root(lx.roots[b]);
      CheckEntry e;
      e.shape = roots_text(lx.system, {lx.roots[a], lx.roots[b]});
      e.check = "incomparable-orthogonal";
      int v = lx.system.pairing(x, y);
      e.pass = v == 0;
      if (!e.pass) e.witness = "pairing = " + std::to_string(v);
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

}  // namespace kmin
