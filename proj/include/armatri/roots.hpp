#pragma once

#include "armatri/poly.hpp"

#include <vector>

namespace armatri {

struct RootMultiplicity {
  GaussianRational root;
  int multiplicity = 1;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// All roots of `p` with multiplicities, in canonical order.
///
/// The polynomial is split into square-free factors (Yun), and every factor
/// is deflated by verified Gaussian-rational roots. Candidates come from a
/// numeric root finder rounded to nearby rationals and, for rational
/// coefficients, from the rational-root theorem; every candidate is checked
/// by exact evaluation. A remaining quadratic is solved with sqrt_exact.
///
/// Throws std::invalid_argument for constant input and RootsNotExpressible
/// when some root is outside Q(i).
std::vector<RootMultiplicity> roots_exact(const Poly& p);

/// Expands roots with multiplicities to a flat list.
std::vector<GaussianRational> flatten_roots(const std::vector<RootMultiplicity>& roots);

/// Square-free decomposition: entry i holds the product of the factors of
/// multiplicity i + 1 (monic, possibly constant 1).
std::vector<Poly> squarefree_decomposition(const Poly& p);

}  // namespace armatri
