#pragma once

#include <optional>
#include <vector>

#include "quiverrep/field.hpp"

namespace quiverrep {

/// Little-endian coefficient list; an empty list is the zero polynomial.
using Poly = std::vector<Scalar>;

long poly_degree(const Poly& p);
Poly poly_trim(Poly p);
Poly poly_monic(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

/// Quotient and remainder with a nonzero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);

Scalar poly_eval(const Poly& p, const Scalar& x);
Poly poly_derivative(const Poly& p);

/// Yun decomposition p = prod f_i^i into pairwise coprime square-free
/// parts, characteristic zero only; the constant factor is dropped.
std::vector<std::pair<Poly, std::size_t>> poly_squarefree_decomposition(const Poly& p);

/// All roots in the base field, each listed once with its multiplicity.
/// Over the rationals this uses the rational root bound on the cleared
/// polynomial (divisor enumeration capped by trial division); over GF(p)
/// the search is exhaustive for p <= 65536 and throws otherwise.
std::vector<std::pair<Scalar, std::size_t>> poly_roots_in_field(const Poly& p);

/// The lambda with p = (t - lambda)^deg, when p is such a power; this
/// check is complete (no search bound) over both supported fields.
std::optional<Scalar> poly_single_root_power(const Poly& p);

} // namespace quiverrep
