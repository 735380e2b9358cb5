#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "folcalc/diff_form.hpp"
#include "folcalc/graded.hpp"
#include "folcalc/hilbert.hpp"
#include "folcalc/ideal.hpp"

namespace folcalc {

// The axioms a twisted 1-form must satisfy to define a codimension-one
// foliation of P^n; rejections are labeled with the first violated one.
enum class FoliationInvariant {
    OneForm,             // the input must be a 1-form
    Nonzero,             // ... and not identically zero
    Homogeneity,         // coefficients homogeneous of one common degree
    Descent,             // i_R omega = 0, so omega descends to P^n
    Integrability,       // omega ^ d(omega) = 0
    SingularCodimension  // codim sing(omega) >= 2
};

// Short kebab-case label ("integrability", "descent", ...).
const char* to_string(FoliationInvariant inv);

class FoliationValidationError : public std::invalid_argument {
  public:
    FoliationValidationError(FoliationInvariant inv, const std::string& msg);
    FoliationInvariant invariant() const { return inv_; }

  private:
    FoliationInvariant inv_;
};

// A validated degree-e codimension-one foliation of P^n, held by its defining
// 1-form. Construct through new_foliation or the corpus constructors below.
// Copies share one lazily filled, write-once cache of computed ideals.
class Foliation {
  public:
    const DiffForm& omega() const { return omega_; }
    int nvars() const { return omega_.nvars(); }
    int n() const { return omega_.nvars() - 1; }  // ambient projective dimension
    int e() const { return e_; }                  // twist: coefficient degree + 1

  private:
    Foliation(DiffForm w, int e);

    DiffForm omega_;
    int e_;
    struct Cache;
    std::shared_ptr<Cache> cache_;

    friend Foliation new_foliation(const DiffForm& omega);
    friend Ideal singular_ideal(const Foliation& f);
    friend Ideal dw_coefficient_ideal(const Foliation& f);
    friend Ideal kupka_ideal(const Foliation& f);
    friend Ideal non_kupka_ideal(const Foliation& f);
    friend Ideal unfolding_ideal(const Foliation& f, std::optional<int> d_max);
};

// Checks the foliation axioms in the order of FoliationInvariant and throws
// FoliationValidationError naming the first violated one.
Foliation new_foliation(const DiffForm& omega);

// J = C(omega), generated by the coefficients of omega.
Ideal singular_ideal(const Foliation& f);
// C(d omega), generated by the coefficients of the exterior differential.
Ideal dw_coefficient_ideal(const Foliation& f);
// K = (J : C(d omega)), the Kupka ideal.
Ideal kupka_ideal(const Foliation& f);
// L = (J : K^inf), the non-Kupka ideal.
Ideal non_kupka_ideal(const Foliation& f);
// I, assembled degreewise up to d_max (default 2e). The inclusions
// J <= I <= K are verified before returning; UnfoldingStabilizationError
// propagates when generators keep appearing past d_max.
Ideal unfolding_ideal(const Foliation& f, std::optional<int> d_max = std::nullopt);

// Verdict of a procedure that cannot always decide.
enum class Trivalent { yes, no, undecided };
const char* to_string(Trivalent v);

// The localization of I at a rational point p of P^n is the unit ideal, i.e.
// some generator of I does not vanish at p. Throws on the origin of the cone.
bool is_division_point(const Foliation& f, std::span<const Rational> point,
                       std::optional<int> d_max = std::nullopt);

// p lies in sing(omega) and d(omega) does not vanish at p.
bool in_kupka_set(const Foliation& f, std::span<const Rational> point);

// sqrt(I) = sqrt(K): every non-Kupka singular point is a division point.
bool in_U(const Foliation& f, std::optional<int> d_max = std::nullopt);

// Proj(S/K) is nonempty: saturating K by the irrelevant ideal is not (1).
bool kupka_scheme_nonempty(const Foliation& f);

// Three-valued radicality of J = C(omega): certified radical chartwise when
// Proj(S/J) is finite, certified non-radical when a witness f with
// f in sqrt(J) \ J turns up (searched in K up to the degree bound, default e),
// undecided otherwise.
Trivalent j_radical(const Foliation& f,
                    std::optional<int> witness_degree_bound = std::nullopt);

// Comparison of the graded modules I/J and S/L through Hilbert polynomials.
struct IJComparison {
    HilbertPolynomial p_ij;         // Hilbert polynomial of I/J
    HilbertPolynomial p_sl;         // Hilbert polynomial of S/L
    bool k_comaximal_with_cdomega;  // saturations of K and C(dw) comaximal
    bool polynomials_equal;         // p_ij == p_sl
};
IJComparison compare_IJ_SL(const Foliation& f, std::optional<int> d_max = std::nullopt);

struct FoliationPredicates {
    bool in_u;
    bool kupka_nonempty;
    bool i_equals_k;
    Trivalent j_radical;
    bool k_comaximal_with_cdomega;
    bool ij_iso_sl_hilbert;  // P_{I/J} == P_{S/L}
};

// The four ideals plus the predicate battery; J <= I <= K holds in any value
// this library returns.
struct FoliationReport {
    Ideal j, i, k, l;
    FoliationPredicates predicates;
    HilbertPolynomial p_ij, p_sl;
};
FoliationReport make_report(const Foliation& f, std::optional<int> d_max = std::nullopt);

// Pullback of a P^2 foliation under a rational map F = (F0 : F1 : F2) with
// homogeneous components of one common positive degree. `predicted` is
// (A0(F), A1(F), A2(F)), which equals the unfolding ideal of the pullback for
// generic pairs; the genericity consequences actually checked are listed in
// `genericity_failures` when they do not hold.
struct PullbackResult {
    Foliation foliation;
    Ideal predicted;
    bool verified_generic = false;
    std::vector<std::string> genericity_failures;
};
PullbackResult pullback_foliation(std::span<const Polynomial> map3, const Foliation& omega2);

// The Dulac family D(p, q) on P^3: omega = i_R i_Y i_X (volume form) for the
// commuting fields X, Y attached to (p, q, alpha, beta); p, q >= 1. The form
// is normalized (content 1, positive lead); degenerate parameters fail
// foliation validation.
Foliation dulac(int p, int q, const Rational& alpha, const Rational& beta);

// Degree-3 foliation of P^4 invariant under an sl(2) action, built from the
// three generating fields by contraction of the volume form.
Foliation sl2_example();

// Corpus: degree-4 foliation of P^2 with singular points of multiplicity
// 1, 4, 2 (projectivized y dx + x^2 dy).
Foliation example_p2a();
// Corpus: P^2 foliation with K cap L = J and a conjugate point pair.
Foliation example_p2b();
// Corpus: degree-3 foliation of P^2 with three reduced singular points.
Foliation example_p2c();
// Corpus: degree-4 foliation of P^3 with a projective transverse structure;
// sing(omega) is not reduced and I != K.
Foliation transverse_example();

// First f in the candidate ideal (generators, then its monomials) of degree
// at most d_max with f not in j but f in sqrt(j); nullopt if none is found
// (which proves nothing).
std::optional<Polynomial> find_nonreduced_witness(const Ideal& j, const Ideal& candidates,
                                                  int d_max);

// Homogeneous ideal of a rational projective point, generated by the 2x2
// minors p_i x_j - p_j x_i. Throws on the origin.
Ideal rational_point_ideal(std::span<const Rational> point);

}  // namespace folcalc
