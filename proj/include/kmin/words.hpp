#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kmin/tableau.hpp"

namespace kmin {

using Word = std::vector<int>;

std::string to_string(const Word& w);  // "(1,2,3)"
Word parse_word(std::string_view text);  // "1,2,3", optional parentheses; "" is empty

Word reversed(const Word& w);
// u^dagger u = (u_k, ..., u_1, u_1, ..., u_k)
Word dagger_double(const Word& u);

// ----------------------------------------------------------- reading words

// Calls visit on each distinct reading word until it returns false.
// Throws std::invalid_argument unless T is weakly increasing on a hook-closed shape.
void for_each_reading_word(const GridFilling& T, const std::function<bool(const Word&)>& visit);
std::vector<Word> reading_words(const GridFilling& T, std::size_t limit = 1'000'000);
std::vector<Word> reading_words(const Tableau& T, std::size_t limit = 1'000'000);
bool is_reading_word(const GridFilling& T, const Word& w);

// Rows left to right, bottom row first. Tableau overload requires type A or B.
Word row_word(const GridFilling& T);
Word row_word(const Tableau& T);

// ----------------------------------------------------------- K-Knuth moves

std::vector<Word> kknuth_basic_moves(const Word& w);
// Adds the interchange of the first two letters.
std::vector<Word> weak_kknuth_basic_moves(const Word& w);

enum class Equiv { Equivalent, Refuted, Inconclusive };
std::string to_string(Equiv e);

struct EquivOptions {
  std::size_t budget = 500'000;  // visited words, both directions together
  int slack = 3;                 // intermediates may be this much longer than the inputs
};

struct EquivVerdict {
  Equiv status = Equiv::Inconclusive;
  std::vector<Word> path;  // u = path.front(), ..., path.back() = v
  std::string reason;
  std::size_t explored = 0;
};

EquivVerdict kknuth_equiv(const Word& u, const Word& v, const EquivOptions& opts = {});
EquivVerdict weak_kknuth_equiv(const Word& u, const Word& v, const EquivOptions& opts = {});

// ----------------------------------------------------------- permutations

// Finite-support bijection of Z, stored on its tight window [lo, hi].
class Permutation {
 public:
  Permutation() = default;
  static Permutation simple(int i);
  // images[k] = w(lo + k); must permute [lo, lo + size).
  static Permutation from_window(int lo, std::vector<int> images);
  static Permutation parse(std::string_view text);  // "lo:[a,b,...]"

  int operator()(int x) const;
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(img_.size()) - 1; }
  bool is_identity() const { return img_.empty(); }
  const std::vector<int>& window() const { return img_; }
  std::vector<int> one_line(int from, int to) const;
  std::string to_string() const;

  int length() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& v) const;  // (uv)(x) = u(v(x))
  Permutation times_simple(int i) const;
  Permutation hecke_times_simple(int i) const;
  Word reduced_word() const;
  // 1^m x w: shifts the support up by m.
  Permutation shifted(int m) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void normalize();
  int lo_ = 1;
  std::vector<int> img_;
};

Permutation hecke_product(const Permutation& u, const Permutation& v);
Permutation hecke_of_word(const Word& w);
// Type A: row word. Type B: row word of the doubled tableau.
Permutation hecke_of_tableau(const Tableau& T);
Permutation grassmannian_permutation(const std::vector<int>& lambda);

int lis(const Word& w);
int lds(const Word& w);

// ----------------------------------------------------------- sweeps

// Connected components of the move graph on all words over {1..letters}
// of length <= max_len. Exact closure within that cap.
class WordIndex {
 public:
  WordIndex(int letters, int max_len, bool weak);
  bool contains(const Word& w) const;
  int component(const Word& w) const;
  std::size_t size() const { return parent_.size(); }
  int letters() const { return letters_; }
  int max_len() const { return max_len_; }

 private:
  std::size_t encode(const Word& w) const;
  Word decode(std::size_t code) const;
  int find(int x) const;
  int letters_, max_len_;
  std::vector<std::size_t> offset_;
  mutable std::vector<int> parent_;
};

struct ConjectureReport {
  int max_len = 0;
  int max_letter = 0;
  std::size_t pairs = 0;
  std::size_t agree = 0;              // both verdicts decided and equal
  std::size_t inconclusive = 0;       // at least one side undecided
  std::size_t forward_violations = 0; // weak-equivalent but doubled words refuted
  std::vector<std::pair<Word, Word>> counterexamples;  // one side equivalent, other refuted
};

// Compares u weak-equiv v against u^dagger u equiv v^dagger v over all
// unordered pairs of words over {1..max_letter} of length 1..max_len.
ConjectureReport conjecture_search(int max_len, int max_letter, int slack = 3);

}  // namespace kmin
