#pragma once

#include <map>
#include <vector>

#include "tabtype/numbers.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/type_filling.hpp"

namespace tabtype {

// Polynomial in x_1..x_m with exact integer coefficients, keyed by dense
// exponent vectors of length m.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int vars) : vars_(vars) {}

  int vars() const { return vars_; }
  const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const BigInt& coef);
  bool is_symmetric() const;  // invariant under swapping any two variables

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int vars_ = 0;
  std::map<std::vector<int>, BigInt> terms_;  // zero coefficients never stored
};

// Arbitrary labelling of a shape (repetitions allowed), labels parallel to
// shape.boxes().
struct LabelledFilling {
  Diagram shape;
  std::vector<int> labels;
};

// True when some filling sequence of t lists the labels weakly increasing,
// strictly increasing between same-column boxes.  Throws "shape-mismatch".
bool is_sst(const TypeFilling& t, const LabelledFilling& f);

// Sum of x^F over labelled fillings F of t with labels in [m] passing
// is_sst.  Throws "budget-exceeded" when m^|S| > budget.
Polynomial sst_polynomial(const TypeFilling& t, int m, long long budget = 100'000'000);

// Classical Schur polynomial: sum over SSYT of shape lambda with entries
// <= m (rows weakly increase, columns strictly increase).
Polynomial classical_schur(const Partition& lambda, int m, long long budget = 100'000'000);

}  // namespace tabtype
