#pragma once

#include <span>
#include <vector>

#include "folcalc/polynomial.hpp"

namespace folcalc {

// Reduced Groebner basis of (gens) under ord: monic, auto-reduced, sorted
// descending by leading monomial — canonical for the ideal and order.
// (0) yields {}, any unit ideal yields {1}.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& ord);

// Remainder of full division of f by `basis` under ord (every term of the
// result is irreducible). When `basis` is a Groebner basis the result is the
// canonical normal form; membership is normal_form == 0.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord);

// S-polynomial, monic-free form: (u/lt f)·f − (u/lt g)·g with u = lcm of the
// leading monomials (exposed for the property tests).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace folcalc
