#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "folcalc/diff_form.hpp"
#include "folcalc/ideal.hpp"

namespace folcalc {

// Basis of the degree-a graded piece of the unfolding module U(w): classes
// (h, eta) with a*h*dw = e*w^(eta - dh), modulo the line S(a-e)*(0, w).
struct GradedPiece {
    int degree = 0;
    std::vector<std::pair<Polynomial, DiffForm>> basis;
};

// Degreewise dimensions of the Koszul complex S -> O^1 -> O^2 -> ... induced
// by wedging with w, at homological position p and internal degree a.
struct KoszulReport {
    int p = 0;
    int a = 0;
    long long dim_cycles = 0;
    long long dim_boundaries = 0;
    long long dim_homology = 0;
};

// Raised when the generator accumulation has not stabilized by d_max: the
// degree-(d_max+k) piece of the generated ideal is still smaller than the
// directly computed piece of I(w). Retry with a larger d_max.
class UnfoldingStabilizationError : public std::runtime_error {
  public:
    UnfoldingStabilizationError(int degree, const std::string& msg)
        : std::runtime_error(msg), degree_(degree) {}
    int failing_degree() const { return degree_; }

  private:
    int degree_;
};

// Basis of U(w)(a): solves the unfolding equation degreewise and recovers one
// eta per independent h (the eta ambiguity is exactly the quotiented line
// when codim sing(w) >= 2). Requires a >= 1.
GradedPiece unfolding_space(const DiffForm& omega, int a);

// The graded S-module action: degree-b f sends a degree-a class (h, eta) to
// (f h, ((a+b)/a) f eta + (1/a)(a h df - b f dh)). Requires a >= 1.
std::pair<Polynomial, DiffForm> module_action(const Polynomial& f,
                                              const std::pair<Polynomial, DiffForm>& u,
                                              int a);

// dim of the degree-a piece of the unfolding ideal I(w) = pi_1(U(w)(a)).
long long unfolding_ideal_dimension(const DiffForm& omega, int a);

// Basis polynomials of that piece (integer primitive representatives).
std::vector<Polynomial> unfolding_ideal_piece(const DiffForm& omega, int a);

// Accumulates generators of I(w) degree by degree up to d_max, then certifies
// stabilization on `slack` further degrees by comparing the generated ideal's
// graded dimensions against the directly computed ones. Throws
// UnfoldingStabilizationError when the certificate fails; never returns the
// unit ideal.
Ideal assemble_unfolding_ideal(const DiffForm& omega, int d_max, int slack = 2);

// Kernel/image/homology dimensions of w^ : O^p(a) -> O^{p+1}(a+e) at position
// p (cycles there) over boundaries arriving from O^{p-1}(a-e).
KoszulReport koszul_homology_dim(const DiffForm& omega, int p, int a);

}  // namespace folcalc
