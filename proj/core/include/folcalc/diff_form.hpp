#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folcalc/polynomial.hpp"

namespace folcalc {

// Polynomial vector field X = sum comp[i] * d/dx_i on the cone C^{nvars}.
struct VectorField {
    std::vector<Polynomial> comp;

    VectorField() = default;
    explicit VectorField(std::vector<Polynomial> c) : comp(std::move(c)) {}

    static VectorField zero(int nvars);
    static VectorField radial(int nvars);  // R = sum x_i d/dx_i

    int nvars() const { return static_cast<int>(comp.size()); }
    bool is_zero() const;
    bool operator==(const VectorField& o) const = default;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(const Polynomial& f);
    VectorField& operator*=(const Rational& c);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Polynomial& f, VectorField x) { return x *= f; }
    friend VectorField operator*(const Rational& c, VectorField x) { return x *= c; }
    VectorField operator-() const;
};

// Differential p-form with polynomial coefficients, components keyed by
// strictly increasing index tuples (stored densely in lexicographic tuple
// order). Degrees above nvars collapse to the canonical zero 0-form.
class DiffForm {
  public:
    DiffForm() = default;
    DiffForm(int nvars, int degree);  // the zero p-form

    static DiffForm zero(int nvars, int degree) { return DiffForm(nvars, degree); }
    static DiffForm scalar(Polynomial f);             // 0-form
    static DiffForm dx(int nvars, int i);             // basis 1-form dx_i
    static DiffForm one_form(std::vector<Polynomial> coeffs);  // sum coeffs[i] dx_i
    static DiffForm volume(int nvars);                // dx_0 ^ ... ^ dx_{nvars-1}
    static DiffForm from_components(int nvars, int degree, std::vector<Polynomial> comps);

    int nvars() const { return nvars_; }
    int form_degree() const { return deg_; }
    bool is_zero() const;
    // Dense component vector, lexicographic over increasing tuples.
    const std::vector<Polynomial>& components() const { return comp_; }
    // Component at a strictly increasing tuple.
    const Polynomial& component(std::span<const int> tuple) const;
    Polynomial& component_mut(std::span<const int> tuple);

    bool operator==(const DiffForm& o) const = default;

    DiffForm& operator+=(const DiffForm& o);
    DiffForm& operator-=(const DiffForm& o);
    DiffForm& operator*=(const Polynomial& f);
    DiffForm& operator*=(const Rational& c);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    friend DiffForm operator*(const Polynomial& f, DiffForm a) { return a *= f; }
    friend DiffForm operator*(const Rational& c, DiffForm a) { return a *= c; }
    DiffForm operator-() const;

  private:
    int nvars_ = 0;
    int deg_ = 0;
    std::vector<Polynomial> comp_;
};

// Strictly increasing p-tuples from {0..nvars-1} in lexicographic order.
const std::vector<std::vector<int>>& index_tuples(int nvars, int p);

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_derivative(const DiffForm& a);
DiffForm contract(const VectorField& x, const DiffForm& a);
DiffForm lie_derivative(const VectorField& x, const DiffForm& a);
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Components as ideal generators (zero components dropped).
std::vector<Polynomial> coefficient_polys(const DiffForm& a);

// F* for a polynomial map with components `images` (all homogeneous of one
// degree, living in the source ring); `a` lives in a ring with one variable
// per image.
DiffForm pullback_form(std::span<const Polynomial> images, const DiffForm& a);

// i_{X_{n-1}} ... i_{X_1} i_R (volume), computed as signed maximal minors of
// the matrix with rows R, X_1, ..., X_{n-1}.
DiffForm split_contraction(std::span<const VectorField> fields);

// Common total degree of all nonzero components, if forms coefficients are
// homogeneous of one degree; nullopt otherwise (zero form -> nullopt).
std::optional<int> coefficient_degree(const DiffForm& a);

// b == r*a for a nonzero rational r (both nonzero), checked by exact
// cross-product vanishing; returns r.
std::optional<Rational> scalar_ratio(const DiffForm& b, const DiffForm& a);

// Divides out the content across all components and fixes the sign so the
// first nonzero component has positive leading coefficient.
DiffForm normalized(const DiffForm& a);

std::string to_string(const DiffForm& a, const std::vector<std::string>& names);
std::string to_string(const DiffForm& a);
std::string to_string(const VectorField& x, const std::vector<std::string>& names);
std::string to_string(const VectorField& x);

}  // namespace folcalc
