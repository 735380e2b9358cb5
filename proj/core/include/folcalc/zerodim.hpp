#pragma once

#include <span>

#include "folcalc/ideal.hpp"

namespace folcalc {

// Radical of a zero-dimensional affine ideal (Seidenberg): adjoin the
// squarefree part of a univariate eliminant of every variable. Throws if some
// variable admits no eliminant (the ideal is not zero-dimensional).
Ideal zero_dim_radical(const Ideal& i);

// dim_Q of the quotient ring by an affine zero-dimensional ideal, counted as
// the standard monomials of the lead-term ideal. Throws if infinite.
BigInt artinian_dimension(const Ideal& i);

// Multiplicity of a homogeneous ideal defining finitely many projective
// points at the rational point p (given by nvars homogeneous coordinates):
// dehomogenize in a chart where p has a nonzero coordinate, translate p to
// the origin, isolate the origin-primary component as (I_aff : (I_aff : m^inf))
// and count standard monomials. Throws if p is not on V(I) or if the scheme
// is positive-dimensional at p.
BigInt point_multiplicity(const Ideal& i, std::span<const Rational> point);

}  // namespace folcalc
