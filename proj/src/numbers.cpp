#include "tabtype/numbers.hpp"

namespace tabtype {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace tabtype
