#include "tabtype/filling.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "engine.hpp"
#include "tabtype/error.hpp"

namespace tabtype {

namespace {

using detail::Engine;
using Memo = std::unordered_map<std::uint64_t, BigInt>;

// The residual theta is a function of the original type and the set of boxes
// still present, so the count may be memoized on the present-set alone.
BigInt count_rec(Engine& e, Memo* memo, std::size_t memo_limit) {
  if (e.alive == 0) return 1;
  std::uint64_t key = 0;
  if (memo) {
    key = e.key();
    if (auto it = memo->find(key); it != memo->end()) return it->second;
  }
  BigInt total = 0;
  for (std::size_t i = 0; i < e.present.size(); ++i) {
    if (!e.erasable(i)) continue;
    e.erase(i);
    total += count_rec(e, memo, memo_limit);
    e.restore(i);
  }
  if (memo && memo->size() < memo_limit) memo->emplace(key, total);
  return total;
}

// DFS over erase orders, row-major at every branch; fn gets the finished
// sequence; returns false to stop the whole walk.
bool enum_rec(Engine& e, std::vector<Box>& seq,
              const std::function<bool(const std::vector<Box>&)>& fn) {
  if (e.alive == 0) return fn(seq);
  for (std::size_t i = 0; i < e.present.size(); ++i) {
    if (!e.erasable(i)) continue;
    seq.push_back(e.shape.boxes()[i]);
    e.erase(i);
    bool keep_going = enum_rec(e, seq, fn);
    e.restore(i);
    seq.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

// Erase prefix boxes in order; returns how many were erased before a
// non-erasable step (prefix.size() on full success).
std::size_t apply_prefix(Engine& e, const std::vector<Box>& prefix) {
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    std::size_t i = e.shape.index_of(prefix[k]);
    if (!e.erasable(i)) return k;
    e.erase(i);
  }
  return prefix.size();
}

void undo_prefix(Engine& e, const std::vector<Box>& prefix, std::size_t done) {
  while (done > 0) {
    --done;
    e.restore(e.shape.index_of(prefix[done]));
  }
}

}  // namespace

bool is_erasable(const TypeFilling& t, const Box& b) {
  std::size_t i = t.shape().index_of(b);
  Engine e(t);
  return e.erasable(i);
}

std::vector<Box> erasable_boxes(const TypeFilling& t) {
  if (t.shape().empty()) throw error("empty-shape", "no erasable boxes in an empty type");
  Engine e(t);
  std::vector<Box> out;
  for (std::size_t i = 0; i < t.shape().size(); ++i)
    if (e.erasable(i)) out.push_back(t.shape().boxes()[i]);
  return out;
}

TypeFilling erase_box(const TypeFilling& t, const Box& b) {
  std::size_t i = t.shape().index_of(b);
  Engine e(t);
  if (!e.erasable(i))
    throw error("not-erasable", "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")");
  e.erase(i);
  std::vector<Box> boxes;
  std::vector<int> theta;
  for (std::size_t j = 0; j < t.shape().size(); ++j) {
    if (!e.present[j]) continue;
    boxes.push_back(t.shape().boxes()[j]);
    theta.push_back(e.theta[j]);
  }
  return TypeFilling(Diagram(std::move(boxes)), std::move(theta));
}

BigInt count_tableaux(const TypeFilling& t, const CountOptions& opts) {
  Engine e(t);
  if (e.keyable()) {
    Memo memo;
    return count_rec(e, &memo, opts.memo_limit);
  }
  return count_rec(e, nullptr, 0);
}

void for_each_tableau(const TypeFilling& t, const std::function<bool(const Tableau&)>& fn) {
  Engine e(t);
  std::vector<Box> seq;
  seq.reserve(t.shape().size());
  enum_rec(e, seq, [&](const std::vector<Box>& s) { return fn(tableau_from_filling_sequence(s)); });
}

std::vector<Tableau> enumerate_tableaux(const TypeFilling& t, std::size_t limit) {
  std::vector<Tableau> out;
  bool over = false;
  for_each_tableau(t, [&](const Tableau& tab) {
    if (out.size() >= limit) {
      over = true;
      return false;
    }
    out.push_back(tab);
    return true;
  });
  if (over) throw error("limit-exceeded", "more than " + std::to_string(limit) + " tableaux");
  return out;
}

std::vector<Tableau> enumerate_tableaux_bounded(const TypeFilling& t, std::size_t limit,
                                                bool& truncated) {
  std::vector<Tableau> out;
  truncated = false;
  for_each_tableau(t, [&](const Tableau& tab) {
    if (out.size() >= limit) {
      truncated = true;
      return false;
    }
    out.push_back(tab);
    return true;
  });
  return out;
}

BigInt count_tableaux_with_prefix(const TypeFilling& t, const std::vector<Box>& prefix,
                                  const CountOptions& opts) {
  TableauCounter counter(t, opts);
  return counter.count_with_prefix(prefix);
}

bool prefix_feasible(const TypeFilling& t, const std::vector<Box>& prefix) {
  Engine e(t);
  std::size_t done = apply_prefix(e, prefix);
  undo_prefix(e, prefix, done);
  return done == prefix.size();
}

struct TableauCounter::Impl {
  TypeFilling type;
  CountOptions opts;
  Engine engine;
  Memo memo;  // valid across prefixes: keyed on the present-set only

  Impl(const TypeFilling& t, const CountOptions& o) : type(t), opts(o), engine(type) {}
};

TableauCounter::TableauCounter(const TypeFilling& t, const CountOptions& opts)
    : impl_(std::make_unique<Impl>(t, opts)) {}
TableauCounter::~TableauCounter() = default;
TableauCounter::TableauCounter(TableauCounter&&) noexcept = default;
TableauCounter& TableauCounter::operator=(TableauCounter&&) noexcept = default;

BigInt TableauCounter::count() const { return count_with_prefix({}); }

BigInt TableauCounter::count_with_prefix(const std::vector<Box>& prefix) const {
  Engine& e = impl_->engine;
  std::size_t done = apply_prefix(e, prefix);
  BigInt result = 0;
  if (done == prefix.size()) {
    Memo* memo = e.keyable() ? &impl_->memo : nullptr;
    result = count_rec(e, memo, impl_->opts.memo_limit);
  }
  undo_prefix(e, prefix, done);
  return result;
}

bool TableauCounter::prefix_feasible(const std::vector<Box>& prefix) const {
  Engine& e = impl_->engine;
  std::size_t done = apply_prefix(e, prefix);
  undo_prefix(e, prefix, done);
  return done == prefix.size();
}

void for_each_type(const Diagram& d, const std::function<bool(const TypeFilling&)>& fn) {
  std::vector<int> hooks;
  hooks.reserve(d.size());
  for (const Box& b : d.boxes()) hooks.push_back(hook_length(d, b));
  std::vector<int> theta(d.size(), 0);
  // odometer over the theta ranges, last box fastest
  while (true) {
    if (!fn(TypeFilling(d, theta))) return;
    if (theta.empty()) return;  // single empty type, visited once
    std::size_t i = theta.size();
    while (i > 0) {
      --i;
      if (++theta[i] < hooks[i]) break;
      theta[i] = 0;
      if (i == 0) return;
    }
  }
}

BigInt type_count(const Diagram& d) {
  BigInt prod = 1;
  for (const Box& b : d.boxes()) prod *= hook_length(d, b);
  return prod;
}

TypeStatistics type_statistics(const Diagram& d, const BigInt& limit) {
  BigInt n_types = type_count(d);
  if (n_types > limit)
    throw error("limit-exceeded", "diagram has " + n_types.str() + " types, limit " + limit.str());
  BigInt sum = 0, sum_sq = 0;
  for_each_type(d, [&](const TypeFilling& t) {
    BigInt c = count_tableaux(t);
    sum += c;
    sum_sq += c * c;
    return true;
  });
  TypeStatistics stats;
  stats.type_count = n_types;
  stats.mean = Rational(sum, n_types);
  stats.variance = Rational(sum_sq, n_types) - stats.mean * stats.mean;
  return stats;
}

}  // namespace tabtype
