#pragma once

#include "mhg/polynomial.hpp"

namespace mhg {

// Monic gcd in Q[w].  Dispatches to the modular kernel; gcd(0, b) is
// monic(b), gcd(0, 0) = 0.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

// Small-prime modular gcd (Brown): images mod word-size primes, CRT lift,
// verified by exact trial division.
PolyQ poly_gcd_modular(const PolyQ& a, const PolyQ& b);

// Subresultant PRS over Z, the serial reference implementation.
PolyQ poly_gcd_subresultant(const PolyQ& a, const PolyQ& b);

// Scale a rational polynomial to a primitive integer polynomial with
// positive leading coefficient (content stripped).
std::vector<mpz_class> primitive_integer_poly(const PolyQ& p);

}  // namespace mhg
