#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "tabtype/numbers.hpp"
#include "tabtype/tableau.hpp"
#include "tabtype/type_filling.hpp"

namespace tabtype {

// A box c is erasable in t when theta(c) == 0 and no other box whose hook
// contains c (same row further left, or same column further up) also has
// theta == 0.
bool is_erasable(const TypeFilling& t, const Box& b);  // throws "box-not-in-diagram"
std::vector<Box> erasable_boxes(const TypeFilling& t);

// Remove b (which must be erasable, else "not-erasable") and decrement theta
// on every remaining box whose hook contained b.
TypeFilling erase_box(const TypeFilling& t, const Box& b);

struct CountOptions {
  // Hard cap on distinct memo entries; beyond it counting falls back to plain
  // recursion (still exact, just slower).
  std::size_t memo_limit = 4u << 20;
};

// Number of tableaux of type t (the number of complete erase sequences).
BigInt count_tableaux(const TypeFilling& t, const CountOptions& opts = {});

// Tableaux of type t in lexicographic order of their filling sequences
// (each erase picks the row-major smallest erasable box first).  Throws
// "limit-exceeded" once more than limit tableaux exist.
std::vector<Tableau> enumerate_tableaux(const TypeFilling& t, std::size_t limit = 1u << 20);
// Same, but sets truncated instead of throwing and returns the first limit.
std::vector<Tableau> enumerate_tableaux_bounded(const TypeFilling& t, std::size_t limit,
                                                bool& truncated);
// Visit every tableau; stop early when the callback returns false.
void for_each_tableau(const TypeFilling& t, const std::function<bool(const Tableau&)>& fn);

// Number of tableaux of type t whose erase order starts with exactly prefix
// (prefix[0] erased first).  Zero when some prefix step is not erasable.
BigInt count_tableaux_with_prefix(const TypeFilling& t, const std::vector<Box>& prefix,
                                  const CountOptions& opts = {});
// Whether every step of prefix is erasable in turn.
bool prefix_feasible(const TypeFilling& t, const std::vector<Box>& prefix);

// Reusable counter: shares its memo across many prefix queries on one type.
class TableauCounter {
 public:
  explicit TableauCounter(const TypeFilling& t, const CountOptions& opts = {});
  ~TableauCounter();
  TableauCounter(TableauCounter&&) noexcept;
  TableauCounter& operator=(TableauCounter&&) noexcept;

  BigInt count() const;
  BigInt count_with_prefix(const std::vector<Box>& prefix) const;
  bool prefix_feasible(const std::vector<Box>& prefix) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Iterate all types on a diagram (theta(c) ranging over [0, hook-1], boxes in
// row-major order, odometer style).  Stop early when fn returns false.
void for_each_type(const Diagram& d, const std::function<bool(const TypeFilling&)>& fn);

// Product of hook lengths: the number of types on d.
BigInt type_count(const Diagram& d);

struct TypeStatistics {
  BigInt type_count;
  Rational mean;      // average of count_tableaux over all types
  Rational variance;  // population variance of the same
};

// Throws "limit-exceeded" when the number of types exceeds limit.
TypeStatistics type_statistics(const Diagram& d, const BigInt& limit = 1'000'000);

}  // namespace tabtype
