#include "kmin/words.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace kmin {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size() * 0x9e3779b97f4a7c15ull;
    for (int x : w) h = (h ^ static_cast<std::size_t>(x + 0x51)) * 0x100000001b3ull;
    return h;
  }
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::string to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

Word parse_word(std::string_view text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parentheses in word '" + s + "'");
    s = trim(std::string_view(s).substr(1, s.size() - 2));
  }
  if (s.empty()) return {};
  return parse_int_list(s);
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word dagger_double(const Word& u) {
  Word out = reversed(u);
  out.insert(out.end(), u.begin(), u.end());
  return out;
}

// ------------------------------------------------------------------ reading words

namespace {

struct ReadingOrder {
  std::vector<Box> boxes;
  std::vector<int> values;
  std::vector<std::vector<int>> before;  // before[j]: boxes that must precede j
};

ReadingOrder reading_order(const GridFilling& T) {
  if (!T.hook_closed()) throw std::invalid_argument("shape is not hook-closed");
  if (!T.weakly_increasing()) throw std::invalid_argument("tableau is not weakly increasing");
  ReadingOrder R;
  for (const auto& [b, v] : T.cells) {
    R.boxes.push_back(b);
    R.values.push_back(v);
  }
  const int n = static_cast<int>(R.boxes.size());
  R.before.assign(n, {});
  auto value_at = [&](Box b) -> std::optional<int> {
    auto it = T.cells.find(b);
    if (it == T.cells.end()) return std::nullopt;
    return it->second;
  };
  for (int i = 0; i < n; ++i) {
    const Box a = R.boxes[i];
    auto above = value_at({a.row - 1, a.col});
    auto right = value_at({a.row, a.col + 1});
    bool eq_above = above && *above == R.values[i];
    bool eq_right = right && *right == R.values[i];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Box b = R.boxes[j];
      bool must = (b.row <= a.row && b.col >= a.col) || (eq_above && b.row < a.row) || (eq_right && b.col > a.col);
      if (must) R.before[j].push_back(i);
    }
  }
  return R;
}

}  // namespace

void for_each_reading_word(const GridFilling& T, const std::function<bool(const Word&)>& visit) {
  ReadingOrder R = reading_order(T);
  const int n = static_cast<int>(R.boxes.size());
  std::vector<int> pending(n);
  std::vector<std::vector<int>> after(n);
  for (int j = 0; j < n; ++j) {
    pending[j] = static_cast<int>(R.before[j].size());
    for (int i : R.before[j]) after[i].push_back(j);
  }
  std::vector<char> used(n, 0);
  Word word;
  std::set<Word> seen;
  bool stop = false;
  // Letters with equal value among the currently free boxes yield the same
  // word, but they may unlock different continuations, so all are tried and
  // duplicates are filtered at the leaves.
  auto dfs = [&](auto&& self) -> void {
    if (stop) return;
    if (static_cast<int>(word.size()) == n) {
      if (seen.insert(word).second && !visit(word)) stop = true;
      return;
    }
    for (int j = 0; j < n && !stop; ++j) {
      if (used[j] || pending[j]) continue;
      used[j] = 1;
      for (int k : after[j]) --pending[k];
      word.push_back(R.values[j]);
      self(self);
      word.pop_back();
      for (int k : after[j]) ++pending[k];
      used[j] = 0;
    }
  };
  dfs(dfs);
}

std::vector<Word> reading_words(const GridFilling& T, std::size_t limit) {
  std::vector<Word> out;
  for_each_reading_word(T, [&](const Word& w) {
    out.push_back(w);
    return out.size() < limit;
  });
  return out;
}

std::vector<Word> reading_words(const Tableau& T, std::size_t limit) { return reading_words(GridFilling::of(T), limit); }

bool is_reading_word(const GridFilling& T, const Word& w) {
  ReadingOrder R = reading_order(T);
  const int n = static_cast<int>(R.boxes.size());
  if (static_cast<int>(w.size()) != n) return false;
  // Greedy with backtracking over boxes carrying equal values.
  std::vector<char> used(n, 0);
  auto ready = [&](int j) {
    for (int i : R.before[j])
      if (!used[i]) return false;
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == w.size()) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || R.values[j] != w[pos] || !ready(j)) continue;
      used[j] = 1;
      if (self(self, pos + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return dfs(dfs, 0);
}

Word row_word(const GridFilling& T) {
  std::vector<std::pair<Box, int>> cells(T.cells.begin(), T.cells.end());
  std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.first.row != b.first.row) return a.first.row > b.first.row;
    return a.first.col < b.first.col;
  });
  Word w;
  for (const auto& c : cells) w.push_back(c.second);
  return w;
}

Word row_word(const Tableau& T) {
  if (!type_a(T.poset()) && !type_b(T.poset()))
    throw std::invalid_argument("row words are defined for type A and B tableaux only");
  return row_word(GridFilling::of(T));
}

// ------------------------------------------------------------------ moves

namespace {

void same_length_moves(const Word& w, const std::function<void(Word&&)>& emit) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    int a = w[i], b = w[i + 1], c = w[i + 2];
    if (a == c && a != b) {
      Word x = w;
      x[i] = b;
      x[i + 1] = a;
      x[i + 2] = b;
      emit(std::move(x));
    }
    // (a,b,c) <-> (a,c,b) when a lies strictly between b and c.
    if ((b < a && a < c) || (c < a && a < b)) {
      Word x = w;
      std::swap(x[i + 1], x[i + 2]);
      emit(std::move(x));
    }
    // (a,b,c) <-> (b,a,c) when c lies strictly between a and b.
    if ((a < c && c < b) || (b < c && c < a)) {
      Word x = w;
      std::swap(x[i], x[i + 1]);
      emit(std::move(x));
    }
  }
}

void deletion_moves(const Word& w, const std::function<void(Word&&)>& emit) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1] && (i == 0 || w[i - 1] != w[i])) {
      Word x = w;
      x.erase(x.begin() + static_cast<long>(i));
      emit(std::move(x));
    }
}

void insertion_moves(const Word& w, const std::function<void(Word&&)>& emit) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i == 0 || w[i - 1] != w[i]) {
      Word x = w;
      x.insert(x.begin() + static_cast<long>(i), w[i]);
      emit(std::move(x));
    }
}

void first_swap(const Word& w, const std::function<void(Word&&)>& emit) {
  if (w.size() >= 2 && w[0] != w[1]) {
    Word x = w;
    std::swap(x[0], x[1]);
    emit(std::move(x));
  }
}

std::vector<Word> collect(const Word& w, bool weak) {
  std::set<Word> out;
  auto emit = [&](Word&& x) {
    if (x != w) out.insert(std::move(x));
  };
  deletion_moves(w, emit);
  insertion_moves(w, emit);
  same_length_moves(w, emit);
  if (weak) first_swap(w, emit);
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Word> kknuth_basic_moves(const Word& w) { return collect(w, false); }
std::vector<Word> weak_kknuth_basic_moves(const Word& w) { return collect(w, true); }

std::string to_string(Equiv e) {
  switch (e) {
    case Equiv::Equivalent: return "equivalent";
    case Equiv::Refuted: return "refuted";
    case Equiv::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::vector<int> letter_set(const Word& w) {
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Returns a reason when a K-Knuth invariant separates the words.
std::string invariant_difference(const Word& u, const Word& v) {
  if (letter_set(u) != letter_set(v)) return "letter sets differ";
  if (!(hecke_of_word(u) == hecke_of_word(v)))
    return "Hecke permutations differ: " + hecke_of_word(u).to_string() + " vs " + hecke_of_word(v).to_string();
  if (lis(u) != lis(v)) return "lis differs: " + std::to_string(lis(u)) + " vs " + std::to_string(lis(v));
  if (lds(u) != lds(v)) return "lds differs: " + std::to_string(lds(u)) + " vs " + std::to_string(lds(v));
  return {};
}

EquivVerdict search(const Word& u, const Word& v, const EquivOptions& opts, bool weak) {
  EquivVerdict out;
  std::string diff = weak ? invariant_difference(dagger_double(u), dagger_double(v)) : invariant_difference(u, v);
  if (!diff.empty()) {
    out.status = Equiv::Refuted;
    out.reason = weak ? "doubled words: " + diff : diff;
    return out;
  }
  if (u == v) {
    out.status = Equiv::Equivalent;
    out.path = {u};
    return out;
  }
  const std::size_t cap = std::max(u.size(), v.size()) + static_cast<std::size_t>(std::max(opts.slack, 0));

  using Parents = std::unordered_map<Word, Word, WordHash>;
  Parents from_u, from_v;
  from_u.emplace(u, Word{});
  from_v.emplace(v, Word{});
  std::vector<Word> frontier_u{u}, frontier_v{v};
  const Word* meet = nullptr;
  Word meet_word;

  auto expand = [&](std::vector<Word>& frontier, Parents& mine, const Parents& other) -> bool {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Word& x : collect(w, weak)) {
        if (x.size() > cap || mine.count(x)) continue;
        auto it = mine.emplace(std::move(x), w).first;
        if (other.count(it->first)) {
          meet_word = it->first;
          meet = &meet_word;
          return true;
        }
        next.push_back(it->first);
        if (from_u.size() + from_v.size() > opts.budget) {
          frontier = std::move(next);
          return false;
        }
      }
    }
    frontier = std::move(next);
    return false;
  };

  while (!frontier_u.empty() && !frontier_v.empty() && from_u.size() + from_v.size() <= opts.budget) {
    bool hit = frontier_u.size() <= frontier_v.size() ? expand(frontier_u, from_u, from_v)
                                                       : expand(frontier_v, from_v, from_u);
    if (hit) break;
  }
  out.explored = from_u.size() + from_v.size();
  if (meet) {
    std::vector<Word> path;
    for (Word w = *meet;; w = from_u.at(w)) {
      path.push_back(w);
      if (w == u) break;
    }
    std::reverse(path.begin(), path.end());
    if (!(*meet == v))
      for (Word w = from_v.at(*meet);; w = from_v.at(w)) {
        path.push_back(w);
        if (w == v) break;
      }
    out.status = Equiv::Equivalent;
    out.path = std::move(path);
    return out;
  }
  out.status = Equiv::Inconclusive;
  if (frontier_u.empty() || frontier_v.empty())
    out.reason = "no path with intermediate words of length <= " + std::to_string(cap);
  else
    out.reason = "budget of " + std::to_string(opts.budget) + " words exhausted";
  return out;
}

}  // namespace

EquivVerdict kknuth_equiv(const Word& u, const Word& v, const EquivOptions& opts) { return search(u, v, opts, false); }
EquivVerdict weak_kknuth_equiv(const Word& u, const Word& v, const EquivOptions& opts) { return search(u, v, opts, true); }

// ------------------------------------------------------------------ permutations

Permutation Permutation::simple(int i) { return from_window(i, {i + 1, i}); }

Permutation Permutation::from_window(int lo, std::vector<int> images) {
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != lo + static_cast<int>(k)) throw std::invalid_argument("window images are not a permutation of the window");
  Permutation p;
  p.lo_ = lo;
  p.img_ = std::move(images);
  p.normalize();
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::string s = trim(text);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("permutation must look like lo:[a,b,...]");
  int lo = 0;
  try {
    lo = std::stoi(s.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError("bad window start in '" + s + "'");
  }
  std::string rest = trim(std::string_view(s).substr(colon + 1));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') throw ParseError("permutation images must be in [...]");
  rest = trim(std::string_view(rest).substr(1, rest.size() - 2));
  std::vector<int> img = rest.empty() ? std::vector<int>{} : parse_int_list(rest);
  try {
    return from_window(lo, std::move(img));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void Permutation::normalize() {
  std::size_t a = 0, b = img_.size();
  while (a < b && img_[a] == lo_ + static_cast<int>(a)) ++a;
  while (b > a && img_[b - 1] == lo_ + static_cast<int>(b - 1)) --b;
  if (a == b) {
    lo_ = 1;
    img_.clear();
    return;
  }
  img_ = std::vector<int>(img_.begin() + static_cast<long>(a), img_.begin() + static_cast<long>(b));
  lo_ += static_cast<int>(a);
}

int Permutation::operator()(int x) const {
  if (x < lo_ || x > hi()) return x;
  return img_[x - lo_];
}

std::vector<int> Permutation::one_line(int from, int to) const {
  std::vector<int> out;
  for (int x = from; x <= to; ++x) out.push_back((*this)(x));
  return out;
}

std::string Permutation::to_string() const {
  std::string s = std::to_string(lo_) + ":[";
  for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
  return s + "]";
}

int Permutation::length() const {
  int l = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j) l += img_[i] > img_[j];
  return l;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.lo_ = lo_;
  p.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) p.img_[img_[k] - lo_] = lo_ + static_cast<int>(k);
  return p;
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (is_identity()) return v;
  if (v.is_identity()) return *this;
  int a = std::min(lo_, v.lo_), b = std::max(hi(), v.hi());
  Permutation p;
  p.lo_ = a;
  for (int x = a; x <= b; ++x) p.img_.push_back((*this)(v(x)));
  p.normalize();
  return p;
}

Permutation Permutation::times_simple(int i) const {
  int a = is_identity() ? i : std::min(lo_, i), b = is_identity() ? i + 1 : std::max(hi(), i + 1);
  Permutation p;
  p.lo_ = a;
  for (int x = a; x <= b; ++x) p.img_.push_back((*this)(x));
  std::swap(p.img_[i - a], p.img_[i + 1 - a]);
  p.normalize();
  return p;
}

Permutation Permutation::hecke_times_simple(int i) const {
  return (*this)(i) < (*this)(i + 1) ? times_simple(i) : *this;
}

Word Permutation::reduced_word() const {
  // Strip right descents: w = (w s_i) s_i with l(w s_i) < l(w).
  Word rev;
  Permutation w = *this;
  while (!w.is_identity()) {
    for (int i = w.lo(); i < w.hi(); ++i)
      if (w(i) > w(i + 1)) {
        rev.push_back(i);
        w = w.times_simple(i);
        break;
      }
  }
  return reversed(rev);
}

Permutation Permutation::shifted(int m) const {
  Permutation p = *this;
  if (p.is_identity()) return p;
  p.lo_ += m;
  for (auto& x : p.img_) x += m;
  return p;
}

Permutation hecke_product(const Permutation& u, const Permutation& v) {
  Permutation w = u;
  for (int i : v.reduced_word()) w = w.hecke_times_simple(i);
  return w;
}

Permutation hecke_of_word(const Word& a) {
  Permutation w;
  for (int i : a) w = w.hecke_times_simple(i);
  return w;
}

Permutation hecke_of_tableau(const Tableau& T) {
  if (type_a(T.poset())) return hecke_of_word(row_word(T));
  if (type_b(T.poset())) return hecke_of_word(row_word(doubling(T)));
  throw std::invalid_argument("Hecke permutations are defined for type A and B tableaux only");
}

Permutation grassmannian_permutation(const std::vector<int>& lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("not a partition");
  std::vector<int> lam;
  for (int x : lambda) {
    if (x < 0) throw std::invalid_argument("not a partition");
    if (x > 0) lam.push_back(x);
  }
  if (lam.empty()) return {};
  const int l = static_cast<int>(lam.size());
  const int n = l + lam[0];
  std::vector<int> img(n);
  std::vector<char> hit(n + 1, 0);
  for (int i = 1; i <= l; ++i) {
    img[i - 1] = i + lam[l - i];
    hit[img[i - 1]] = 1;
  }
  int next = 1;
  for (int i = l + 1; i <= n; ++i) {
    while (hit[next]) ++next;
    img[i - 1] = next++;
  }
  return Permutation::from_window(1, std::move(img));
}

int lis(const Word& w) {
  std::vector<int> tails;
  for (int x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) tails.push_back(x);
    else *it = x;
  }
  return static_cast<int>(tails.size());
}

int lds(const Word& w) {
  Word neg;
  for (int x : w) neg.push_back(-x);
  return lis(neg);
}

// ------------------------------------------------------------------ sweeps

WordIndex::WordIndex(int letters, int max_len, bool weak) : letters_(letters), max_len_(max_len) {
  if (letters < 1 || max_len < 0) throw std::invalid_argument("bad word index bounds");
  std::size_t total = 0, layer = 1;
  for (int k = 0; k <= max_len; ++k) {
    offset_.push_back(total);
    total += layer;
    if (total > 50'000'000) throw std::invalid_argument("word index too large");
    layer *= static_cast<std::size_t>(letters);
  }
  offset_.push_back(total);
  parent_.resize(total);
  std::iota(parent_.begin(), parent_.end(), 0);
  auto unite = [&](std::size_t a, std::size_t b) {
    int x = find(static_cast<int>(a)), y = find(static_cast<int>(b));
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  };
  for (std::size_t code = 0; code < total; ++code) {
    Word w = decode(code);
    auto emit = [&](Word&& x) { unite(code, encode(x)); };
    deletion_moves(w, emit);
    same_length_moves(w, emit);
    if (weak) first_swap(w, emit);
  }
}

std::size_t WordIndex::encode(const Word& w) const {
  std::size_t c = 0;
  for (int x : w) c = c * static_cast<std::size_t>(letters_) + static_cast<std::size_t>(x - 1);
  return offset_[w.size()] + c;
}

Word WordIndex::decode(std::size_t code) const {
  int k = 0;
  while (offset_[k + 1] <= code) ++k;
  std::size_t c = code - offset_[k];
  Word w(k);
  for (int i = k - 1; i >= 0; --i) {
    w[i] = static_cast<int>(c % static_cast<std::size_t>(letters_)) + 1;
    c /= static_cast<std::size_t>(letters_);
  }
  return w;
}

int WordIndex::find(int x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool WordIndex::contains(const Word& w) const {
  if (static_cast<int>(w.size()) > max_len_) return false;
  return std::all_of(w.begin(), w.end(), [&](int x) { return x >= 1 && x <= letters_; });
}

int WordIndex::component(const Word& w) const {
  if (!contains(w)) throw std::out_of_range("word outside the index: " + to_string(w));
  return find(static_cast<int>(encode(w)));
}

ConjectureReport conjecture_search(int max_len, int max_letter, int slack) {
  ConjectureReport rep;
  rep.max_len = max_len;
  rep.max_letter = max_letter;
  WordIndex weak(max_letter, max_len + slack, true);
  WordIndex doubled(max_letter, 2 * max_len + slack, false);

  std::vector<Word> words;
  for (int k = 1; k <= max_len; ++k) {
    Word w(k, 1);
    while (true) {
      words.push_back(w);
      int i = k - 1;
      while (i >= 0 && w[i] == max_letter) w[i--] = 1;
      if (i < 0) break;
      ++w[i];
    }
  }
  struct Info {
    int weak_comp, dbl_comp;
    Word d;
    std::vector<int> letters;
    Permutation hecke;
    int lis, lds;
  };
  std::vector<Info> info;
  for (const auto& w : words) {
    Word d = dagger_double(w);
    info.push_back({weak.component(w), doubled.component(d), d, letter_set(d), hecke_of_word(d), lis(d), lds(d)});
  }
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      ++rep.pairs;
      const Info &x = info[a], &y = info[b];
      bool same_inv = x.letters == y.letters && x.hecke == y.hecke && x.lis == y.lis && x.lds == y.lds;
      Equiv vw = x.weak_comp == y.weak_comp ? Equiv::Equivalent : same_inv ? Equiv::Inconclusive : Equiv::Refuted;
      Equiv vd = x.dbl_comp == y.dbl_comp ? Equiv::Equivalent : same_inv ? Equiv::Inconclusive : Equiv::Refuted;
      if (vw == Equiv::Equivalent && vd == Equiv::Refuted) ++rep.forward_violations;
      if ((vw == Equiv::Equivalent && vd == Equiv::Refuted) || (vw == Equiv::Refuted && vd == Equiv::Equivalent))
        rep.counterexamples.emplace_back(words[a], words[b]);
      else if (vw == Equiv::Inconclusive || vd == Equiv::Inconclusive)
        ++rep.inconclusive;
      else
        ++rep.agree;
    }
  return rep;
}

}  // namespace kmin
