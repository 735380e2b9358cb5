#include "folcalc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace folcalc {

static const MonomialOrder kGrevlex = MonomialOrder::grevlex();

static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::constant(int nvars, Rational c) {
    return monomial(nvars, Monomial(nvars), std::move(c));
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(nvars);
    m.exp[static_cast<std::size_t>(i)] = 1;
    return monomial(nvars, std::move(m), 1);
}

Polynomial Polynomial::monomial(int nvars, Monomial m, Rational c) {
    if (m.nvars() != nvars) throw std::invalid_argument("monomial arity mismatch");
    c.canonicalize();  // guard against mpq_class(a, b) literals like 4/6
    Polynomial f(nvars);
    if (c != 0) f.terms_.push_back(Term{std::move(c), std::move(m)});
    return f;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    Polynomial f(nvars);
    for (Term& t : terms) {
        if (t.mono.nvars() != nvars) throw std::invalid_argument("monomial arity mismatch");
        t.coeff.canonicalize();
    }
    f.terms_ = std::move(terms);
    f.canonicalize();
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

void Polynomial::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return kGrevlex.greater(a.mono, b.mono);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

// Merge of two grevlex-descending term lists; the workhorse behind +/-.
static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                     bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = kGrevlex.cmp(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j]);
            if (subtract) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Rational s = subtract ? Rational(a[i].coeff - b[j].coeff)
                                  : Rational(a[i].coeff + b[j].coeff);
            if (s != 0) out.push_back(Term{std::move(s), a[i].mono});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (subtract) out.back().coeff = -out.back().coeff;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(*this, o);
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(*this, o);
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    Rational s = c;
    s.canonicalize();
    if (s == 0) {
        terms_.clear();
    } else {
        for (Term& t : terms_) t.coeff *= s;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    std::vector<Term> prod;
    prod.reserve(a.terms().size() * b.terms().size());
    for (const Term& s : a.terms())
        for (const Term& t : b.terms())
            prod.push_back(Term{s.coeff * t.coeff, s.mono * t.mono});
    return Polynomial::from_terms(a.nvars(), std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = Polynomial::constant(nvars_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1u) r *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return r;
}

int degree(const Polynomial& f) {
    int d = -1;
    for (const Term& t : f.terms()) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

bool is_homogeneous(const Polynomial& f) {
    if (f.is_zero()) return true;
    const auto d = f.terms().front().mono.degree();
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [d](const Term& t) { return t.mono.degree() == d; });
}

int degree_in(const Polynomial& f, int i) {
    int d = 0;
    for (const Term& t : f.terms()) d = std::max(d, static_cast<int>(t.mono.exp.at(i)));
    return d;
}

Polynomial partial_derivative(const Polynomial& f, int i) {
    if (i < 0 || i >= f.nvars()) throw std::invalid_argument("variable index out of range");
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        const std::int32_t e = t.mono.exp[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        Term d{t.coeff * e, t.mono};
        d.mono.exp[static_cast<std::size_t>(i)] = e - 1;
        out.push_back(std::move(d));
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    if (static_cast<int>(images.size()) != f.nvars())
        throw std::invalid_argument("substitute: expected one image per variable");
    const int target = images.empty() ? 0 : images[0].nvars();
    for (const Polynomial& g : images)
        if (g.nvars() != target) throw std::invalid_argument("substitute: image ring mismatch");
    // Per-variable power cache, grown on demand.
    std::vector<std::vector<Polynomial>> pows(images.size());
    auto power = [&](int i, std::int32_t e) -> const Polynomial& {
        auto& cache = pows[static_cast<std::size_t>(i)];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (static_cast<std::int32_t>(cache.size()) <= e)
            cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
        return cache[static_cast<std::size_t>(e)];
    };
    Polynomial acc(target);
    for (const Term& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (int i = 0; i < f.nvars(); ++i)
            if (t.mono.exp[static_cast<std::size_t>(i)] > 0)
                prod *= power(i, t.mono.exp[static_cast<std::size_t>(i)]);
        acc += prod;
    }
    return acc;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != f.nvars())
        throw std::invalid_argument("evaluate: expected one value per variable");
    Rational acc = 0;
    for (const Term& t : f.terms()) {
        Rational prod = t.coeff;
        for (int i = 0; i < f.nvars(); ++i) {
            for (std::int32_t k = 0; k < t.mono.exp[static_cast<std::size_t>(i)]; ++k)
                prod *= point[static_cast<std::size_t>(i)];
        }
        acc += prod;
    }
    return acc;
}

Rational content(const Polynomial& f) {
    if (f.is_zero()) return 0;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const Term& t : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (f.terms().front().coeff < 0) c = -c;
    return c;
}

Polynomial primitive_part(const Polynomial& f) {
    if (f.is_zero()) return f;
    Rational c = content(f);
    Polynomial r = f;
    r *= Rational(1) / c;
    return r;
}

const Term& leading_term(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
    if (ord.kind() == MonomialOrder::Kind::Grevlex) return f.terms().front();
    const Term* best = &f.terms().front();
    for (const Term& t : f.terms())
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& ord) {
    return leading_term(f, ord).mono;
}

Rational leading_coeff(const Polynomial& f, const MonomialOrder& ord) {
    return leading_term(f, ord).coeff;
}

Polynomial make_monic(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    Polynomial r = f;
    r *= Rational(1) / leading_coeff(f, ord);
    return r;
}

std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& ord) {
    std::vector<Term> ts = f.terms();
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return ts;
}

Polynomial extend_ring(const Polynomial& f, int extra) {
    if (extra < 0) throw std::invalid_argument("extend_ring: negative count");
    std::vector<Term> out = f.terms();
    for (Term& t : out) t.mono.exp.resize(t.mono.exp.size() + static_cast<std::size_t>(extra), 0);
    return Polynomial::from_terms(f.nvars() + extra, std::move(out));
}

Polynomial drop_last_var(const Polynomial& f) {
    if (f.nvars() == 0) throw std::invalid_argument("drop_last_var: no variables");
    std::vector<Term> out = f.terms();
    for (Term& t : out) {
        if (t.mono.exp.back() != 0)
            throw std::invalid_argument("drop_last_var: variable occurs in polynomial");
        t.mono.exp.pop_back();
    }
    return Polynomial::from_terms(f.nvars() - 1, std::move(out));
}

Polynomial permute_vars(const Polynomial& f, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != f.nvars())
        throw std::invalid_argument("permute_vars: bad permutation size");
    std::vector<Term> out = f.terms();
    for (Term& t : out) {
        Monomial m(f.nvars());
        for (int i = 0; i < f.nvars(); ++i)
            m.exp[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                t.mono.exp[static_cast<std::size_t>(i)];
        t.mono = std::move(m);
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial dehomogenize(const Polynomial& f, int chart) {
    if (chart < 0 || chart >= f.nvars()) throw std::invalid_argument("chart out of range");
    std::vector<Term> out = f.terms();
    for (Term& t : out) t.mono.exp.erase(t.mono.exp.begin() + chart);
    return Polynomial::from_terms(f.nvars() - 1, std::move(out));
}

Polynomial insert_var(const Polynomial& f, int chart) {
    if (chart < 0 || chart > f.nvars()) throw std::invalid_argument("chart out of range");
    std::vector<Term> out = f.terms();
    for (Term& t : out) t.mono.exp.insert(t.mono.exp.begin() + chart, 0);
    return Polynomial::from_terms(f.nvars() + 1, std::move(out));
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : f.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        if (t.mono.is_one()) {
            s += to_string(c);
        } else if (c == 1) {
            s += to_string(t.mono, names);
        } else {
            s += to_string(c) + "*" + to_string(t.mono, names);
        }
    }
    return s;
}

std::string to_string(const Polynomial& f) {
    return to_string(f, default_var_names(f.nvars()));
}

}  // namespace folcalc
