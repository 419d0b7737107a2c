#include "tabtype/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "tabtype/error.hpp"

namespace tabtype {

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
  if (word_.empty()) throw error("invalid-permutation", "empty one-line word");
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > word_.size())
      throw error("invalid-permutation", "value " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v - 1)])
      throw error("invalid-permutation", "value " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::apply(int i) const {
  if (i < 1 || i > n()) throw error("invalid-permutation", "index " + std::to_string(i));
  return word_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i)
    inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) throw error("invalid-permutation", "size mismatch in composition");
  std::vector<int> w(q.word_.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = p.word_[static_cast<std::size_t>(q.word_[i] - 1)];
  return Permutation(std::move(w));
}

Permutation Permutation::right_multiply_adjacent(int i) const {
  if (i < 1 || i >= n()) throw error("invalid-word", "letter " + std::to_string(i));
  std::vector<int> w = word_;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int Permutation::length() const {
  int len = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++len;
  return len;
}

InversionSet inversion_set(const Permutation& sigma) {
  Permutation inv = sigma.inverse();
  InversionSet out;
  out.n = sigma.n();
  for (int a = 1; a <= sigma.n(); ++a)
    for (int b = a + 1; b <= sigma.n(); ++b)
      if (inv.apply(a) > inv.apply(b)) out.pairs.emplace_back(a, b);
  return out;
}

// Pair-hook of (a,b): {(a,x)} u {(x,b)} for a < x < b.
static int pair_hook_hits(const InversionSet& s, int a, int b) {
  int hits = 0;
  for (int x = a + 1; x < b; ++x) {
    if (std::binary_search(s.pairs.begin(), s.pairs.end(), std::make_pair(a, x))) ++hits;
    if (std::binary_search(s.pairs.begin(), s.pairs.end(), std::make_pair(x, b))) ++hits;
  }
  return hits;
}

bool is_inversion_set(const InversionSet& s) {
  std::vector<std::pair<int, int>> sorted = s.pairs;
  std::sort(sorted.begin(), sorted.end());
  InversionSet t{s.n, std::move(sorted)};
  for (const auto& [a, b] : t.pairs)
    if (a < 1 || a >= b || b > t.n) return false;
  for (int a = 1; a <= t.n; ++a)
    for (int b = a + 1; b <= t.n; ++b) {
      int theta = b - a - 1;
      int hits = pair_hook_hits(t, a, b);
      bool in = std::binary_search(t.pairs.begin(), t.pairs.end(), std::make_pair(a, b));
      if (in && theta > hits) return false;
      if (!in && theta < hits) return false;
    }
  return true;
}

Permutation permutation_from_inversion_set(const InversionSet& s) {
  std::vector<std::pair<int, int>> sorted = s.pairs;
  std::sort(sorted.begin(), sorted.end());
  auto in_set = [&](int a, int b) {  // a < b assumed
    return std::binary_search(sorted.begin(), sorted.end(), std::make_pair(a, b));
  };
  // "u comes before v": stable insertion sort only -- the comparator need not
  // be a strict weak ordering when the input is junk, and std::sort would be
  // undefined on it.
  auto before = [&](int u, int v) { return u < v ? !in_set(u, v) : in_set(v, u); };
  std::vector<int> line;
  for (int v = 1; v <= s.n; ++v) {
    std::size_t pos = line.size();
    while (pos > 0 && before(v, line[pos - 1])) --pos;
    line.insert(line.begin() + static_cast<std::ptrdiff_t>(pos), v);
  }
  Permutation sigma{std::move(line)};
  InversionSet round_trip = inversion_set(sigma);
  if (round_trip.pairs != sorted)
    throw error("not-an-inversion-set", "reconstruction round trip failed");
  return sigma;
}

BigInt count_reduced_words(const Permutation& sigma) {
  std::map<std::vector<int>, BigInt> memo;
  auto rec = [&](auto&& self, const Permutation& p) -> BigInt {
    if (p.is_identity()) return 1;
    auto it = memo.find(p.one_line());
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (int i = 1; i < p.n(); ++i)
      if (p.apply(i) > p.apply(i + 1)) total += self(self, p.right_multiply_adjacent(i));
    memo.emplace(p.one_line(), total);
    return total;
  };
  return rec(rec, sigma);
}

// Front-first DFS: the first letter of a reduced word is any i with values
// i, i+1 out of order; the tail is a reduced word of s_i * sigma.  Ascending
// i gives lexicographic output order.
static bool enum_words_rec(std::vector<int>& positions_of, std::vector<int>& word,
                           std::size_t limit, std::vector<std::vector<int>>& out) {
  int n = static_cast<int>(positions_of.size()) - 1;
  bool any = false;
  for (int i = 1; i < n; ++i) {
    if (positions_of[static_cast<std::size_t>(i)] <= positions_of[static_cast<std::size_t>(i + 1)])
      continue;
    any = true;
    word.push_back(i);
    std::swap(positions_of[static_cast<std::size_t>(i)],
              positions_of[static_cast<std::size_t>(i + 1)]);
    bool ok = enum_words_rec(positions_of, word, limit, out);
    std::swap(positions_of[static_cast<std::size_t>(i)],
              positions_of[static_cast<std::size_t>(i + 1)]);
    word.pop_back();
    if (!ok) return false;
  }
  if (!any) {  // identity reached
    if (out.size() >= limit) return false;
    out.push_back(word);
  }
  return true;
}

std::vector<std::vector<int>> enumerate_reduced_words(const Permutation& sigma,
                                                      std::size_t limit) {
  // positions_of[v] = position of value v, 1-based; index 0 unused
  std::vector<int> positions_of(static_cast<std::size_t>(sigma.n()) + 1, 0);
  for (int i = 1; i <= sigma.n(); ++i)
    positions_of[static_cast<std::size_t>(sigma.apply(i))] = i;
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  if (!enum_words_rec(positions_of, word, limit, out))
    throw error("limit-exceeded", "more than " + std::to_string(limit) + " reduced words");
  return out;
}

Permutation evaluate_word(int n, const std::vector<int>& word) {
  Permutation p = Permutation::identity(n);
  for (int letter : word) p = p.right_multiply_adjacent(letter);  // throws invalid-word
  return p;
}

bool is_reduced_word(int n, const std::vector<int>& word) {
  return evaluate_word(n, word).length() == static_cast<int>(word.size());
}

Box box_for_pair(int a, int b, int n) {
  if (a < 1 || a >= b || b > n)
    throw error("malformed-input", "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return Box{n + 1 - b, a};
}

std::pair<int, int> pair_for_box(const Box& box, int n) {
  int a = box.col, b = n + 1 - box.row;
  if (box.row < 1 || box.col < 1 || a >= b)
    throw error("box-outside-shape",
                "(" + std::to_string(box.row) + "," + std::to_string(box.col) + ")");
  return {a, b};
}

TypeFilling staircase_type(int n) {
  Diagram d = staircase_partition(n).ferrers();  // throws n-too-small
  std::vector<int> theta;
  theta.reserve(d.size());
  for (const Box& b : d.boxes()) theta.push_back(n - b.row - b.col);
  return TypeFilling(std::move(d), std::move(theta));
}

TypeFilling type_of_permutation(const Permutation& sigma) {
  InversionSet inv = inversion_set(sigma);
  std::vector<Box> boxes;
  boxes.reserve(inv.pairs.size());
  for (const auto& [a, b] : inv.pairs) boxes.push_back(box_for_pair(a, b, sigma.n()));
  Diagram d{std::move(boxes)};
  std::vector<int> theta;
  theta.reserve(d.size());
  for (const Box& b : d.boxes()) {
    auto [pa, pb] = pair_for_box(b, sigma.n());
    theta.push_back(pb - pa - 1);
  }
  return TypeFilling(std::move(d), std::move(theta));
}

std::vector<int> tableau_to_reduced_word(const Permutation& sigma, const Tableau& t) {
  if (type_of(t) != type_of_permutation(sigma))
    throw error("invalid-tableau-for-type", "tableau is not of this permutation's type");
  std::vector<Box> seq = filling_sequence_of(t);
  std::vector<int> word;
  word.reserve(seq.size());
  Permutation prev = Permutation::identity(sigma.n());
  InversionSet prefix;
  prefix.n = sigma.n();
  for (const Box& b : seq) {
    prefix.pairs.push_back(pair_for_box(b, sigma.n()));
    std::sort(prefix.pairs.begin(), prefix.pairs.end());
    Permutation cur = [&] {
      try {
        return permutation_from_inversion_set(prefix);
      } catch (const error&) {
        throw error("invalid-tableau-for-type", "entry prefix is not an inversion set");
      }
    }();
    Permutation step = prev.inverse() * cur;
    int letter = 0;
    for (int i = 1; i < step.n(); ++i)
      if (step.apply(i) != i) {
        letter = i;
        break;
      }
    if (letter == 0 || step != Permutation::identity(sigma.n()).right_multiply_adjacent(letter))
      throw error("invalid-tableau-for-type", "prefix chain is not a cover chain");
    word.push_back(letter);
    prev = cur;
  }
  return word;
}

Tableau reduced_word_to_tableau(const Permutation& sigma, const std::vector<int>& word) {
  if (evaluate_word(sigma.n(), word) != sigma ||
      static_cast<int>(word.size()) != sigma.length())
    throw error("invalid-word", "not a reduced word of this permutation");
  std::vector<Box> seq;
  seq.reserve(word.size());
  Permutation cur = Permutation::identity(sigma.n());
  std::vector<std::pair<int, int>> have;
  for (int letter : word) {
    cur = cur.right_multiply_adjacent(letter);
    InversionSet inv = inversion_set(cur);
    std::pair<int, int> added{0, 0};
    for (const auto& pr : inv.pairs)
      if (!std::binary_search(have.begin(), have.end(), pr)) added = pr;
    seq.push_back(box_for_pair(added.first, added.second, sigma.n()));
    have = std::move(inv.pairs);
  }
  return tableau_from_filling_sequence(seq);
}

VexillaryData vexillary_data(const Permutation& sigma) {
  VexillaryData out;
  int n = sigma.n();
  out.d.resize(static_cast<std::size_t>(n), 0);
  out.g.resize(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j > i && sigma.apply(j) < sigma.apply(i)) ++out.d[static_cast<std::size_t>(i - 1)];
      if (j < i && sigma.apply(j) > sigma.apply(i)) ++out.g[static_cast<std::size_t>(i - 1)];
    }
  auto to_partition = [](std::vector<int> v) {
    std::erase(v, 0);
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
  };
  out.mu = to_partition(out.d);
  out.lambda = to_partition(out.g);
  out.is_vexillary = (out.lambda == out.mu.conjugate());
  return out;
}

bool is_vexillary(const Permutation& sigma) { return vexillary_data(sigma).is_vexillary; }

Partition shape_lambda(const Permutation& sigma) { return vexillary_data(sigma).lambda; }

Diagram rothe_diagram(const Permutation& sigma) {
  std::vector<Box> boxes;
  for (int a = 1; a <= sigma.n(); ++a)
    for (int b = a + 1; b <= sigma.n(); ++b)
      if (sigma.apply(a) > sigma.apply(b)) boxes.push_back({a, sigma.apply(b)});
  return Diagram(std::move(boxes));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace tabtype
