#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace folcalc {

// A power product x0^e0 * ... * x{n-1}^e{n-1}, kept as its exponent vector.
// The number of variables is the vector length; monomials only interact when
// their lengths agree.
struct Monomial {
    std::vector<std::int32_t> exp;

    Monomial() = default;
    explicit Monomial(int nvars) : exp(static_cast<std::size_t>(nvars), 0) {}
    Monomial(std::initializer_list<std::int32_t> e) : exp(e) {}

    int nvars() const { return static_cast<int>(exp.size()); }
    std::int32_t degree() const;
    bool is_one() const;

    bool operator==(const Monomial& o) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial operator/(const Monomial& b, const Monomial& a);  // requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Term orders. All are graded refinements except pure lex; `block(k)` is the
// elimination order whose primary key is grevlex on the *last* k variables
// (the comparison tail), so eliminating those k variables means keeping basis
// elements whose leading monomials avoid them.
class MonomialOrder {
  public:
    static MonomialOrder grevlex();
    static MonomialOrder lex();
    static MonomialOrder block(int last_k);

    // Three-way compare: >0 when a is larger (comes first), 0 on equality.
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const = default;

    enum class Kind { Grevlex, Lex, Block };
    Kind kind() const { return kind_; }
    int block_size() const { return block_k_; }
    std::string name() const;

  private:
    Kind kind_ = Kind::Grevlex;
    int block_k_ = 0;
};

std::string to_string(const Monomial& m, const std::vector<std::string>& names);
std::string to_string(const Monomial& m);  // default names x0, x1, ...

std::vector<std::string> default_var_names(int nvars);

}  // namespace folcalc
