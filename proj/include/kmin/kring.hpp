#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmin/poset.hpp"
#include "kmin/tableau.hpp"
#include "kmin/words.hpp"

namespace kmin {

class RefusedPoset : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finitely supported integer combination of basis classes indexed by the
// straight shapes of one poset. Sym is the printed basis letter.
template <char Sym>
class BasisElement {
 public:
  explicit BasisElement(const Poset& p) : poset_(&p) {}
  static BasisElement basis(const Shape& s, long long c = 1) {
    BasisElement e(s.poset());
    e.add(s, c);
    return e;
  }

  const Poset& poset() const { return *poset_; }
  const std::map<Shape, long long>& terms() const { return terms_; }
  long long coeff(const Shape& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long long coefficient_sum() const {
    long long t = 0;
    for (const auto& [s, c] : terms_) t += c;
    return t;
  }

  void add(const Shape& s, long long c) {
    if (&s.poset() != poset_) throw std::invalid_argument("shape from a different poset");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  // Set when a result was computed on a poset not known to be a unique
  // rectification poset.
  bool unverified() const { return unverified_; }
  void mark_unverified(bool u = true) { unverified_ = u; }

  BasisElement& operator+=(const BasisElement& o) {
    if (o.poset_ != poset_) throw std::invalid_argument("elements from different posets");
    for (const auto& [s, c] : o.terms_) add(s, c);
    unverified_ = unverified_ || o.unverified_;
    return *this;
  }
  BasisElement& operator-=(const BasisElement& o) { return *this += o * -1; }
  friend BasisElement operator+(BasisElement a, const BasisElement& b) { return a += b; }
  friend BasisElement operator-(BasisElement a, const BasisElement& b) { return a -= b; }
  friend BasisElement operator*(BasisElement a, long long k) {
    if (k == 0) a.terms_.clear();
    for (auto& [s, c] : a.terms_) c *= k;
    return a;
  }

  // "2*G[4,3,1] - G[5,4]"; the zero element prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      long long a = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (a != 1) out += std::to_string(a) + "*";
      out += std::string(1, Sym) + "[" + rows_to_string(s.rows()) + "]";
    }
    return out;
  }

  friend bool operator==(const BasisElement& a, const BasisElement& b) {
    return a.poset_ == b.poset_ && a.terms_ == b.terms_;
  }

 private:
  const Poset* poset_;
  std::map<Shape, long long> terms_;
  bool unverified_ = false;
};

using GammaElement = BasisElement<'G'>;    // basis G_lambda of Gamma
using SignedKElement = BasisElement<'O'>;  // Schubert structure sheaves O_lambda

struct RingOptions {
  bool assume_urp = false;  // allow posets not known to be unique rectification posets
};

// Minuscule posets and the ambient grid/shifted windows are accepted.
bool ring_supported(const Poset& p);
void require_ring_poset(const Poset& p, const RingOptions& opts);

// Number of increasing tableaux of shape nu/lambda that rectify greedily to M_mu.
long long structure_constant(const Shape& lambda, const Shape& mu, const Shape& nu, const RingOptions& opts = {});
GammaElement product(const Shape& lambda, const Shape& mu, const RingOptions& opts = {});
GammaElement product(const GammaElement& a, const GammaElement& b, const RingOptions& opts = {});
// Tableaux on nu/lambda (any nu, or exactly nu) rectifying to M_mu, sorted.
std::vector<Tableau> product_tableaux(const Shape& lambda, const Shape& mu, const RingOptions& opts = {});
std::vector<Tableau> product_tableaux(const Shape& lambda, const Shape& mu, const Shape& nu,
                                      const RingOptions& opts = {});

// Tableaux of shape nu/lambda having U among their rectifications (sorted),
// and how many of them have U as their only rectification.
struct RectificationCensus {
  std::vector<Tableau> having;
  std::size_t unique = 0;
};
RectificationCensus rectification_census(const Shape& lambda, const Shape& nu, const Tableau& U,
                                         std::size_t budget = default_budget());

// G_lambda -> (-1)^{|lambda|} O_lambda and back.
SignedKElement to_schubert_basis(const GammaElement& a);
GammaElement from_schubert_basis(const SignedKElement& a);
SignedKElement product(const SignedKElement& a, const SignedKElement& b, const RingOptions& opts = {});

// Euler characteristic: every O_lambda maps to 1.
long long euler_characteristic(const SignedKElement& a);
long long euler_pairing(const Shape& lambda, const Shape& mu, const RingOptions& opts = {});
SignedKElement dual_class(const Shape& lambda);

struct SymmetryCheck {
  bool dual_identity = false;  // O*_lambda = (1 - O_(1)) O_{lambda^vee}
  long long c = 0;             // c^nu_{lambda,mu}
  long long c_dual = 0;        // c^{mu^vee}_{lambda,nu^vee}
  bool ok() const { return dual_identity && c == c_dual; }
};
SymmetryCheck check_symmetry(const Shape& lambda, const Shape& mu, const Shape& nu, const RingOptions& opts = {});

// Re-indexes an element by row lengths in another poset. Shapes that do
// not fit are dropped for bounded targets (the truncation map) and raise
// WindowExceeded for ambient windows.
GammaElement transfer(const GammaElement& a, const Poset& target);

// G_(p) G_lambda from the binomial closed form, computed in N^2 and
// transferred to lambda's type A poset.
GammaElement pieri_A(const Shape& lambda, int p);

bool is_pieri_word_b(const Word& w);
// Increasing type B tableau whose row word is a Pieri word of type B.
bool is_pieri_tableau_b(const Tableau& T);
// G_(p) G_lambda by counting Pieri tableaux of type B with range [1, p].
GammaElement pieri_B(const Shape& lambda, int p);

// a_{w,lambda}: increasing tableaux of shape lambda with w(T) = w^{-1}.
// The result lives on the grid window d x d, d = support width of w.
GammaElement stable_grothendieck_coeffs(const Permutation& w);
// c^nu_{w,lambda}: increasing tableaux of shape nu/lambda with w(T) = w^{-1}.
GammaElement grothendieck_times_shape(const Permutation& w, const Shape& lambda);
// Experimental and unverified: b_{w,lambda} counts shifted tableaux with
// w(T^2) = w; the result lives on the shifted window of width d.
GammaElement experimental_b_w(const Permutation& w);

// Fat hook lambda = (a^b, c^d) with U placed in the corner rows b+1..b+d,
// columns c+1..a.
struct FatHookReport {
  Tableau combined;       // M_lambda union U in a grid window
  UrtVerdict corner;      // is_urt on U in its bounded window
  UrtVerdict direct;      // is_urt on the combined tableau in its bounded window
  bool predicted() const { return corner.status == UrtStatus::Certified; }
  bool consistent() const { return !predicted() || direct.status != UrtStatus::Refuted; }
};
FatHookReport fat_hook_urt(int a, int b, int c, int d, const Tableau& U, const UrtOptions& opts = {});

// lambda . mu = sh(M_lambda . M_mu) in type A, as row lengths.
std::vector<int> minimal_product_shape(const std::vector<int>& lambda, const std::vector<int>& mu);
// w(M_lambda) for a partition, read in a tight grid window.
Permutation minimal_hecke(const std::vector<int>& lambda);

void clear_product_cache();

}  // namespace kmin
