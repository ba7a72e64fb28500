#include "hyperhodge/combinatorics.hpp"

#include <stdexcept>

namespace hyperhodge {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long j = 1; j <= k; ++j) {
    // result * (n - k + j) is divisible by j at every step
    result *= n - k + j;
    result /= j;
  }
  return result;
}

}  // namespace hyperhodge
