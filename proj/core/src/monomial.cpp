#include "folcalc/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace folcalc {

std::int32_t Monomial::degree() const {
    return std::accumulate(exp.begin(), exp.end(), std::int32_t{0});
}

bool Monomial::is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](std::int32_t e) { return e == 0; });
}

static void check_arity(const Monomial& a, const Monomial& b) {
    if (a.exp.size() != b.exp.size())
        throw std::invalid_argument("monomial arity mismatch");
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.exp[i] = a.exp[i] + b.exp[i];
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

Monomial operator/(const Monomial& b, const Monomial& a) {
    check_arity(a, b);
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
        r.exp[i] = b.exp[i] - a.exp[i];
        if (r.exp[i] < 0) throw std::invalid_argument("monomial division is not exact");
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp[i] > 0 && b.exp[i] > 0) return false;
    return true;
}

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::lex() {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    return o;
}

MonomialOrder MonomialOrder::block(int last_k) {
    if (last_k <= 0) throw std::invalid_argument("block order needs last_k >= 1");
    MonomialOrder o;
    o.kind_ = Kind::Block;
    o.block_k_ = last_k;
    return o;
}

// a > b in grevlex iff deg a > deg b, or degrees tie and the rightmost index
// where they differ has a-exponent < b-exponent.
static int cmp_grevlex(const std::int32_t* a, const std::int32_t* b, int n) {
    std::int32_t da = 0, db = 0;
    for (int i = 0; i < n; ++i) da += a[i];
    for (int i = 0; i < n; ++i) db += b[i];
    if (da != db) return da < db ? -1 : 1;
    for (int i = n - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

static int cmp_lex(const std::int32_t* a, const std::int32_t* b, int n) {
    for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (a.exp.size() != b.exp.size())
        throw std::invalid_argument("monomial arity mismatch");
    const int n = a.nvars();
    switch (kind_) {
        case Kind::Grevlex:
            return cmp_grevlex(a.exp.data(), b.exp.data(), n);
        case Kind::Lex:
            return cmp_lex(a.exp.data(), b.exp.data(), n);
        case Kind::Block: {
            const int k = std::min(block_k_, n);
            const int head = n - k;
            if (int c = cmp_grevlex(a.exp.data() + head, b.exp.data() + head, k)) return c;
            return cmp_grevlex(a.exp.data(), b.exp.data(), head);
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block(" + std::to_string(block_k_) + ")";
    }
    return "?";
}

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names.at(static_cast<std::size_t>(i));
        if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
}

std::string to_string(const Monomial& m) { return to_string(m, default_var_names(m.nvars())); }

}  // namespace folcalc
