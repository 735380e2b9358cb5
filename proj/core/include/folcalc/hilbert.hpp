#pragma once

#include <string>
#include <vector>

#include "folcalc/ideal.hpp"

namespace folcalc {

// A Hilbert polynomial with exact rational coefficients, kept both expanded
// in t and in the binomial basis P_r(t) = C(t + r, r).
class HilbertPolynomial {
  public:
    HilbertPolynomial() = default;  // the zero polynomial

    // From coefficients in t: expanded[k] multiplies t^k.
    static HilbertPolynomial from_expanded(std::vector<Rational> expanded);
    // From coefficients in the binomial basis: pr[r] multiplies P_r.
    static HilbertPolynomial from_binomial(std::vector<Rational> pr);

    bool is_zero() const { return expanded_.empty(); }
    int degree() const { return static_cast<int>(expanded_.size()) - 1; }

    const std::vector<Rational>& expanded_coeffs() const { return expanded_; }
    const std::vector<Rational>& binomial_coeffs() const { return pr_; }

    Rational operator()(const Rational& t) const;

    bool operator==(const HilbertPolynomial& o) const { return expanded_ == o.expanded_; }
    bool operator!=(const HilbertPolynomial& o) const { return !(*this == o); }

    HilbertPolynomial operator+(const HilbertPolynomial& o) const;
    HilbertPolynomial operator-(const HilbertPolynomial& o) const;

    // "4*P2 - 11*P1 + 10*P0" / "0".
    std::string binomial_string() const;
    // "2*t^2 - 13/2*t + 10" / "0".
    std::string expanded_string() const;

  private:
    std::vector<Rational> expanded_;  // empty == zero, trailing (leading) coeff nonzero
    std::vector<Rational> pr_;
};

// dim_Q (S/I)_a for homogeneous I (exact for every a >= 0).
BigInt hilbert_function(const Ideal& i, int a);

// Hilbert polynomial of S/I. Throws if a generator is not homogeneous.
HilbertPolynomial hilbert_polynomial(const Ideal& i);

// Hilbert polynomial of I/J for homogeneous J ⊆ I (checked).
HilbertPolynomial hilbert_polynomial_quotient(const Ideal& i, const Ideal& j);

// Degree of the Hilbert polynomial of S/I: the dimension of Proj(S/I).
// Returns -1 when the Hilbert polynomial is zero (empty projective scheme).
// Throws if I is the unit ideal.
int projective_dimension(const Ideal& i);

// Numerator N(t) of the Hilbert series of S/M, M the monomial ideal generated
// by `lt_gens`: HS(t) = N(t) / (1-t)^nvars. Coefficient k multiplies t^k.
std::vector<BigInt> hilbert_numerator(std::vector<Monomial> lt_gens, int nvars);

}  // namespace folcalc
