#include "tabtype/schur.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "engine.hpp"
#include "tabtype/error.hpp"

namespace tabtype {

void Polynomial::add_term(const std::vector<int>& exps, const BigInt& coef) {
  if (static_cast<int>(exps.size()) != vars_)
    throw error("malformed-input", "exponent vector length mismatch");
  BigInt& slot = terms_[exps];
  slot += coef;
  if (slot == 0) terms_.erase(exps);
}

bool Polynomial::is_symmetric() const {
  for (int i = 0; i + 1 < vars_; ++i) {
    for (const auto& [exps, coef] : terms_) {
      std::vector<int> swapped = exps;
      std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i) + 1]);
      auto it = terms_.find(swapped);
      if (it == terms_.end() || it->second != coef) return false;
    }
  }
  return true;
}

namespace {

// Can the boxes be erased with labels weakly increasing along the way?
// Candidates at every step are the erasable boxes among those carrying the
// minimum remaining label; failed present-sets are memoized.
bool sst_rec(detail::Engine& e, const std::vector<int>& labels,
             std::unordered_set<std::uint64_t>* failed) {
  if (e.alive == 0) return true;
  std::uint64_t key = 0;
  if (failed) {
    key = e.key();
    if (failed->count(key)) return false;
  }
  int min_label = 0;
  for (std::size_t i = 0; i < e.present.size(); ++i)
    if (e.present[i] && (min_label == 0 || labels[i] < min_label)) min_label = labels[i];
  for (std::size_t i = 0; i < e.present.size(); ++i) {
    if (!e.present[i] || labels[i] != min_label || !e.erasable(i)) continue;
    e.erase(i);
    bool ok = sst_rec(e, labels, failed);
    e.restore(i);
    if (ok) return true;
  }
  if (failed) failed->insert(key);
  return false;
}

bool labels_column_distinct(const Diagram& shape, const std::vector<int>& labels) {
  const auto& bs = shape.boxes();
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j)
      if (bs[i].col == bs[j].col && labels[i] == labels[j]) return false;
  return true;
}

}  // namespace

bool is_sst(const TypeFilling& t, const LabelledFilling& f) {
  if (f.shape != t.shape() || f.labels.size() != t.shape().size())
    throw error("shape-mismatch", "labelled filling is on a different shape");
  // Same-column repeats can never be listed strictly increasing, whatever
  // the erase order.
  if (!labels_column_distinct(t.shape(), f.labels)) return false;
  detail::Engine e(t);
  std::unordered_set<std::uint64_t> failed;
  return sst_rec(e, f.labels, e.keyable() ? &failed : nullptr);
}

Polynomial sst_polynomial(const TypeFilling& t, int m, long long budget) {
  if (m < 1) throw error("malformed-input", "need at least one variable");
  const std::size_t n = t.shape().size();
  BigInt total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= m;
    if (total > budget)
      throw error("budget-exceeded",
                  "candidate labellings exceed budget " + std::to_string(budget));
  }
  Polynomial out(m);
  std::vector<int> labels(n, 1);
  detail::Engine e(t);
  while (true) {
    if (labels_column_distinct(t.shape(), labels)) {
      std::unordered_set<std::uint64_t> failed;
      if (sst_rec(e, labels, e.keyable() ? &failed : nullptr)) {
        std::vector<int> exps(static_cast<std::size_t>(m), 0);
        for (int lab : labels) ++exps[static_cast<std::size_t>(lab - 1)];
        out.add_term(exps, 1);
      }
    }
    // odometer, last box fastest
    if (n == 0) break;
    std::size_t i = n;
    bool done = false;
    while (i > 0) {
      --i;
      if (++labels[i] <= m) break;
      labels[i] = 1;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

namespace {

void ssyt_rec(const Partition& lambda, int m, std::vector<std::vector<int>>& grid, int r, int c,
              long long& visited, long long budget, Polynomial& out) {
  if (++visited > budget) throw error("budget-exceeded", "SSYT enumeration over budget");
  if (r > lambda.rows()) {
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    for (int i = 1; i <= lambda.rows(); ++i)
      for (int j = 1; j <= lambda.part(i); ++j)
        ++exps[static_cast<std::size_t>(
            grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] - 1)];
    out.add_term(exps, 1);
    return;
  }
  if (c > lambda.part(r)) {
    ssyt_rec(lambda, m, grid, r + 1, 1, visited, budget, out);
    return;
  }
  int lo = 1;
  if (c > 1) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)]);
  if (r > 1 && lambda.part(r - 1) >= c)
    lo = std::max(lo, grid[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] + 1);
  for (int v = lo; v <= m; ++v) {
    grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = v;
    ssyt_rec(lambda, m, grid, r, c + 1, visited, budget, out);
  }
}

}  // namespace

Polynomial classical_schur(const Partition& lambda, int m, long long budget) {
  if (m < 1) throw error("malformed-input", "need at least one variable");
  Polynomial out(m);
  std::vector<std::vector<int>> grid;
  for (int r = 1; r <= lambda.rows(); ++r)
    grid.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
  long long visited = 0;
  ssyt_rec(lambda, m, grid, 1, 1, visited, budget, out);
  return out;
}

}  // namespace tabtype
