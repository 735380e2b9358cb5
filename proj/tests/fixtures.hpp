#pragma once

// Frozen foliation corpus shared by the test suites: printed 1-forms and the
// generating fields they come from. Each returns a freshly parsed value so
// tests cannot interfere through shared state.

#include <string>
#include <vector>

#include "folcalc/diff_form.hpp"
#include "folcalc/parse.hpp"

namespace folcalc::testfix {

inline std::vector<std::string> vars(int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

// Degree-4 foliation of P^2 with three singular points of multiplicities
// 1, 4, 2 (variables x, y, z).
inline DiffForm p2a() {
    return parse_form("y*z^2*dx + x^2*z*dy - (x^2*y + x*y*z)*dz", {"x", "y", "z"});
}

// P^2 foliation whose Kupka and non-Kupka ideals intersect exactly in the
// singular ideal; one singular point is a conjugate (non-rational) pair.
inline DiffForm p2b() {
    return parse_form("x0^2*x2*dx0 + x1^2*x2*dx1 + (-x0^3 - x1^3)*dx2", vars(3));
}

// Degree-3 foliation of P^2: sing(w) = three reduced points, K and C(dw) not
// comaximal but with disjoint supports; P_{I/J} = P_{S/L} = 1.
inline DiffForm p2c() {
    return parse_form("x1*x2*dx0 + x0*x2*dx1 - 2*x0*x1*dx2", vars(3));
}

// Dulac foliation D(1,1) of P^3 with alpha = 1, beta = 2 (printed expansion
// of i_R i_Y i_X vol); I = K despite the non-reduced Kupka components.
inline DiffForm dulac11() {
    return parse_form(
        "(6*x1^2*x2^2 + 2*x0*x1*x2*x3)*dx0 + (-2*x0*x1*x2^2 - 2*x0^2*x2*x3)*dx1 + "
        "(-4*x0*x1^2*x2 - 2*x0^2*x1*x3)*dx2 + 2*x0^2*x1*x2*dx3",
        vars(4));
}

inline VectorField dulac11_X() {
    return parse_vector_field("-2*x0*x1*ddx1 + 2*x0*x2*ddx2 + 2*x1*x2*ddx3", vars(4));
}
inline VectorField dulac11_Y() {
    return parse_vector_field("-2*x1*ddx1 + x2*ddx2 - x3*ddx3", vars(4));
}

// Degree-3 foliation of P^4 from the PSL(2) action: K = I but I/J and S/L
// have different Hilbert polynomials.
inline DiffForm sl2() {
    return parse_form(
        "(12*x1^3*x2 - 6*x0^2*x1*x3 + 24*x0*x2*x3^2 - 4*x0*x1^2*x4 - 32*x1*x2*x3*x4 + "
        "12*x0*x3*x4^2)*dx0 + "
        "(-4*x0*x1^2*x2 + 18*x0^3*x3 + 16*x1*x2^2*x3 - 4*x0^2*x1*x4 - 32*x0*x2*x3*x4 + "
        "8*x1*x2*x4^2)*dx1 + "
        "(-8*x0*x1^3 - 4*x1^2*x2*x3 - 18*x0^2*x3^2 + 28*x0*x1*x3*x4 + 8*x2*x3^2*x4 + "
        "4*x1^2*x4^2 - 12*x3*x4^3)*dx2 + "
        "(-12*x0^3*x1 - 12*x1^2*x2^2 - 6*x0^2*x2*x3 + 28*x0*x1*x2*x4 + 8*x2^2*x3*x4 + "
        "6*x0^2*x4^2 - 12*x2*x4^3)*dx3 + "
        "(8*x0^2*x1^2 + 8*x0*x1*x2*x3 - 16*x2^2*x3^2 - 12*x1^2*x2*x4 - 18*x0^2*x3*x4 + "
        "24*x2*x3*x4^2)*dx4",
        vars(5));
}

inline VectorField sl2_S() {
    return parse_vector_field("x0*ddx0 - x1*ddx1 + 2*x2*ddx2 - 2*x3*ddx3", vars(5));
}
inline VectorField sl2_X() {
    return parse_vector_field("x4*ddx0 + x3*ddx1 + x0*ddx2 + x1*ddx4", vars(5));
}
inline VectorField sl2_Y() {
    return parse_vector_field("-4*x2*ddx0 - 6*x4*ddx1 - 4*x1*ddx3 - 6*x0*ddx4", vars(5));
}

// The two generators of I = K for the PSL(2) foliation.
inline std::vector<Polynomial> sl2_I_gens() {
    return {parse_polynomial("2*x0*x1 - 2*x2*x3 - x4^2", vars(5)),
            parse_polynomial("6*x1^2*x2 + 9*x0^2*x3 - 18*x2*x3*x4 - x4^3", vars(5))};
}

// The seven generators of L = C(dw) for the PSL(2) foliation.
inline std::vector<Polynomial> sl2_L_gens() {
    const auto v = vars(5);
    return {parse_polynomial("x0*x1*x3 + 2*x2*x3^2 + x1^2*x4 - 3*x3*x4^2", v),
            parse_polynomial("2*x1^2*x2 - 3*x0^2*x3", v),
            parse_polynomial("2*x0*x1*x2 + 4*x2^2*x3 + 3*x0^2*x4 - 6*x2*x4^2", v),
            parse_polynomial("x1^3 + 3*x0*x3^2 - 3*x1*x3*x4", v),
            parse_polynomial("x0*x1^2 + 2*x1*x2*x3 - 3*x0*x3*x4", v),
            parse_polynomial("x0^2*x1 + 2*x0*x2*x3 - 2*x1*x2*x4", v),
            parse_polynomial("3*x0^3 + 4*x1*x2^2 - 6*x0*x2*x4", v)};
}

// Degree-4 foliation of P^3 carrying a projective transverse structure;
// the largest example in the corpus (coefficient degree 5).
inline DiffForm transverse() {
    return parse_form(
        "(-x0^4*x1 - x0^4*x3 - 2*x0^3*x1*x3 + x0^2*x1^2*x3 - 2*x0*x1^3*x3 - 2*x0^2*x1*x2*x3"
        " - x0^2*x1*x3^2 + x0*x1^2*x3^2 - x1^3*x3^2 + x0^2*x2*x3^2 - x1^2*x2*x3^2"
        " - x1*x2^2*x3^2)*dx0 + "
        "(x0^5 + x0^4*x3 + x0^2*x1^2*x3 + 2*x0^3*x2*x3 + x0^3*x3^2 - x0^2*x1*x3^2"
        " + x0*x1^2*x3^2 + x0^2*x2*x3^2 + x1^2*x2*x3^2 + x0*x2^2*x3^2)*dx1 + "
        "(-x0^3*x3^2 - x0^2*x1*x3^2 + x0*x1^2*x3^2 - x1^3*x3^2)*dx2 + "
        "(x0^5 + x0^4*x1 - x0^3*x1^2 + x0^2*x1^3)*dx3",
        vars(4));
}

}  // namespace folcalc::testfix
