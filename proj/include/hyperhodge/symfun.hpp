#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperhodge/dense_polynomial.hpp"
#include "hyperhodge/rational.hpp"

namespace hyperhodge {

// Arguments x_1..x_n of a symmetric function. Order never affects results.
using ValueSet = std::vector<Rational>;

// {1, 3, ..., 2n-1}
ValueSet odd_values(std::size_t n);
// {2, 4, ..., 2n}
ValueSet even_values(std::size_t n);

// e_0(s), ..., e_{|s|}(s), built one argument at a time with
// e_i(s + {x}) = e_i(s) + x e_{i-1}(s).
std::vector<Rational> elementary_all(std::span<const Rational> values);

// e_i(s); 1 for i = 0 and 0 for i > |s|.
Rational elementary(std::size_t i, std::span<const Rational> values);

enum class Sign { Plus, Minus };

// prod_j (1 + x_j t) or prod_j (1 - x_j t). The empty product is 1.
DensePolynomial gen_product(std::span<const Rational> values, Sign sign);

// sum_{l=0}^{i} (-1)^l e_{i-l}(a) e_l(b), the t^i coefficient of
// gen_product(a, +) * gen_product(b, -).
Rational signed_convolution(std::span<const Rational> a, std::span<const Rational> b, std::size_t i);

}  // namespace hyperhodge
