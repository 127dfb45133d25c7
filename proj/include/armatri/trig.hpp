#pragma once

#include "armatri/rational_function.hpp"

#include <vector>

namespace armatri {

/// Chebyshev polynomial T_n, so that y^n + y^-n = 2 T_n((y + 1/y)/2).
Poly chebyshev_t(int n);

/// For S(c) of degree d: the polynomial y^d * S((y + 1/y)/2).
Poly cos_poly_to_y(const Poly& s);

/// Maps a symmetric Laurent polynomial sum_{j=-n..n} l_j y^j (given as
/// l_0..l_n) to the polynomial in c = (y + 1/y)/2 with the same values.
Poly symmetric_laurent_to_cos(const std::vector<GaussianRational>& half);

/// Autocorrelation sums r_m = sum_j a_j a_{j+m}, m = 0..n: the non-negative
/// half of the symmetric Laurent polynomial A(y) A(1/y).
std::vector<GaussianRational> autocorrelation_half(std::span<const Rational> a);

/// Rewrites a rational function of y with f(y) = f(1/y) as S(c)/T(c).
/// Throws std::invalid_argument when f is not symmetric.
std::pair<Poly, Poly> symmetric_to_cos(const RationalFunction& f);

}  // namespace armatri
