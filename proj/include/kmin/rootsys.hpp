#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/poset.hpp"

namespace kmin {

enum class Dynkin { A, B, C, D, E };

using Root = std::vector<int>;  // coefficients over the simple roots

// Finite crystallographic root system with Bourbaki node numbering 1..rank.
class RootSystem {
 public:
  RootSystem() = default;  // empty; use make() or parse()
  static RootSystem make(Dynkin type, int rank);
  static RootSystem parse(std::string_view label);  // "A3", "D5", "E6", ...

  Dynkin type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  int form(int i, int j) const { return form_[i * rank_ + j]; }  // (alpha_i, alpha_j), 0-based
  int cartan(int i, int j) const { return 2 * form(i, j) / form(j, j); }  // <alpha_i, alpha_j^vee>
  int pairing(const Root& a, const Root& b) const;
  int coroot_pairing(const Root& beta, const Root& alpha) const { return 2 * pairing(beta, alpha) / pairing(alpha, alpha); }

  // Roots are indexed 0..num_roots()-1: positives first, then their negatives.
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }
  Root root(int k) const;
  const Root& positive_root(int k) const { return positive_[k]; }
  bool is_positive(int k) const { return k < num_positive(); }
  int negate(int k) const { return k < num_positive() ? k + num_positive() : k - num_positive(); }
  int index_of(const Root& r) const;  // -1 if not a root
  int simple(int node) const;         // root index of alpha_node, node in 1..rank
  static int height(const Root& r);

  // Permutation of root indices given by the reflection in positive root k.
  const std::vector<int>& reflection(int k) const { return reflections_[k]; }

  RootSystem dual() const;
  // gamma(alpha) <= 1 for every positive root.
  bool cominuscule(int node) const;
  bool minuscule(int node) const { return dual().cominuscule(node); }

 private:
  void generate();

  Dynkin type_ = Dynkin::A;
  int rank_ = 0;
  std::vector<int> form_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
  std::vector<std::vector<int>> reflections_;
};

// Element of W stored as its permutation of the root indices.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& R);
  static WeylElement reflection(const RootSystem& R, int positive_root);
  static WeylElement simple_reflection(const RootSystem& R, int node) { return reflection(R, R.simple(node)); }

  int apply(int root) const { return perm_[root]; }
  WeylElement operator*(const WeylElement& o) const;  // composition: (this * o)(x) = this(o(x))
  WeylElement inverse() const;
  int length() const;
  std::vector<int> inversion_set() const;  // positive roots sent to negative roots
  std::optional<int> as_reflection(const RootSystem& R) const;  // positive root t with this = s_t
  std::optional<int> as_simple_reflection(const RootSystem& R) const;  // node in 1..rank
  const std::vector<int>& permutation() const { return perm_; }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }

 private:
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

// Longest element of the parabolic subgroup generated by the given nodes.
WeylElement longest_element(const RootSystem& R, const std::vector<int>& nodes);
WeylElement longest_element(const RootSystem& R);
WeylElement longest_in_levi(const RootSystem& R, int gamma);

// Lambda_X = {alpha : gamma(alpha) = 1}, taken from the dual system when gamma
// is minuscule but not cominuscule.
struct LambdaX {
  RootSystem system;
  int gamma = 1;
  bool via_dual = false;
  std::vector<int> roots;  // positive root indices of `system`, by height

  int size() const { return static_cast<int>(roots.size()); }
  bool leq(int a, int b) const;  // positions in `roots`
  int height(int a) const { return RootSystem::height(system.positive_root(roots[a])); }
};

LambdaX lambda_from_root_data(const RootSystem& R, int gamma);

// Table 2 family for (R, gamma).
PosetFamily family_for(const RootSystem& R, int gamma);

struct EmbeddingReport {
  bool ok = false;
  std::vector<int> box_to_root;  // position in LambdaX::roots for each box
  std::string witness;
};

EmbeddingReport verify_poset_embedding(const LambdaX& lx, const Poset& P);
inline EmbeddingReport verify_poset_embedding(const RootSystem& R, int gamma, const Poset& P) {
  return verify_poset_embedding(lambda_from_root_data(R, gamma), P);
}

struct CheckEntry {
  std::string shape;
  std::string check;
  bool pass = false;
  std::string witness;
};

struct CheckReport {
  std::string system;
  int gamma = 0;
  std::vector<CheckEntry> entries;
  bool all_pass() const;
  int passed() const;
};

// Root data together with a verified embedding of the matching poset.
struct RootPosetContext {
  LambdaX lx;
  const Poset* poset = nullptr;
  std::vector<int> box_to_root;  // box index -> root index in lx.system

  static RootPosetContext make(const RootSystem& R, int gamma);
  const RootSystem& system() const { return lx.system; }
};

WeylElement weyl_of_shape(const Shape& lambda, const RootPosetContext& ctx);
// Same element built from an explicit linear extension (box order).
WeylElement weyl_of_order(const std::vector<int>& boxes, const RootPosetContext& ctx);

CheckReport check_inversion_theorem(const RootSystem& R, int gamma);
CheckReport check_bruhat_containment(const RootSystem& R, int gamma);
CheckReport check_poincare_duality(const RootSystem& R, int gamma);
CheckReport check_full_commutativity(const Shape& lambda, const RootSystem& R, int gamma,
                                     std::size_t budget = 1'000'000);
CheckReport check_incomparable_orthogonal(const RootSystem& R, int gamma);

}  // namespace kmin
