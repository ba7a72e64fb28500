#pragma once

#include "hyperhodge/rational.hpp"

namespace hyperhodge {

// C(n, k) by the multiplicative formula; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

// (-1)^n as an int.
constexpr int alternating_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace hyperhodge
