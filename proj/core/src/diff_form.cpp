#include "folcalc/diff_form.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace folcalc {

// ---------- VectorField ----------

VectorField VectorField::zero(int nvars) {
    std::vector<Polynomial> c;
    for (int i = 0; i < nvars; ++i) c.push_back(Polynomial::zero(nvars));
    return VectorField(std::move(c));
}

VectorField VectorField::radial(int nvars) {
    std::vector<Polynomial> c;
    for (int i = 0; i < nvars; ++i) c.push_back(Polynomial::variable(nvars, i));
    return VectorField(std::move(c));
}

bool VectorField::is_zero() const {
    return std::all_of(comp.begin(), comp.end(), [](const Polynomial& f) { return f.is_zero(); });
}

static void check_same_field_ring(const VectorField& a, const VectorField& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("vector field ring mismatch");
}

VectorField& VectorField::operator+=(const VectorField& o) {
    check_same_field_ring(*this, o);
    for (int i = 0; i < nvars(); ++i) comp[static_cast<std::size_t>(i)] += o.comp[static_cast<std::size_t>(i)];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    check_same_field_ring(*this, o);
    for (int i = 0; i < nvars(); ++i) comp[static_cast<std::size_t>(i)] -= o.comp[static_cast<std::size_t>(i)];
    return *this;
}

VectorField& VectorField::operator*=(const Polynomial& f) {
    for (Polynomial& c : comp) c *= f;
    return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
    for (Polynomial& p : comp) p *= c;
    return *this;
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    for (Polynomial& p : r.comp) p = -p;
    return r;
}

// ---------- index tuples ----------

static long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

const std::vector<std::vector<int>>& index_tuples(int nvars, int p) {
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i < nvars; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    if (p >= 0 && p <= nvars) rec(rec, 0);
    return cache.emplace(key, std::move(out)).first->second;
}

static std::size_t tuple_rank(int nvars, std::span<const int> tuple) {
    const auto& all = index_tuples(nvars, static_cast<int>(tuple.size()));
    auto it = std::lower_bound(all.begin(), all.end(), tuple,
                               [](const std::vector<int>& a, std::span<const int> b) {
                                   return std::lexicographical_compare(a.begin(), a.end(),
                                                                       b.begin(), b.end());
                               });
    if (it == all.end() || !std::equal(it->begin(), it->end(), tuple.begin(), tuple.end()))
        throw std::invalid_argument("bad index tuple");
    return static_cast<std::size_t>(it - all.begin());
}

// ---------- DiffForm basics ----------

DiffForm::DiffForm(int nvars, int degree) : nvars_(nvars), deg_(degree) {
    if (degree < 0 || degree > nvars) throw std::invalid_argument("form degree out of range");
    comp_.assign(static_cast<std::size_t>(binom(nvars, degree)), Polynomial::zero(nvars));
}

DiffForm DiffForm::scalar(Polynomial f) {
    DiffForm a(f.nvars(), 0);
    a.comp_[0] = std::move(f);
    return a;
}

DiffForm DiffForm::dx(int nvars, int i) {
    DiffForm a(nvars, 1);
    if (i < 0 || i >= nvars) throw std::invalid_argument("dx index out of range");
    a.comp_[static_cast<std::size_t>(i)] = Polynomial::constant(nvars, 1);
    return a;
}

DiffForm DiffForm::one_form(std::vector<Polynomial> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("one_form: empty coefficient list");
    const int nv = static_cast<int>(coeffs.size());
    DiffForm a(nv, 1);
    for (int i = 0; i < nv; ++i) {
        if (coeffs[static_cast<std::size_t>(i)].nvars() != nv)
            throw std::invalid_argument("one_form: ring mismatch");
        a.comp_[static_cast<std::size_t>(i)] = std::move(coeffs[static_cast<std::size_t>(i)]);
    }
    return a;
}

DiffForm DiffForm::volume(int nvars) {
    DiffForm a(nvars, nvars);
    a.comp_[0] = Polynomial::constant(nvars, 1);
    return a;
}

DiffForm DiffForm::from_components(int nvars, int degree, std::vector<Polynomial> comps) {
    DiffForm a(nvars, degree);
    if (comps.size() != a.comp_.size())
        throw std::invalid_argument("from_components: wrong component count");
    for (const Polynomial& f : comps)
        if (f.nvars() != nvars) throw std::invalid_argument("from_components: ring mismatch");
    a.comp_ = std::move(comps);
    return a;
}

bool DiffForm::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

const Polynomial& DiffForm::component(std::span<const int> tuple) const {
    return comp_.at(tuple_rank(nvars_, tuple));
}

Polynomial& DiffForm::component_mut(std::span<const int> tuple) {
    return comp_.at(tuple_rank(nvars_, tuple));
}

static void check_same_form(const DiffForm& a, const DiffForm& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("form ring mismatch");
    if (a.form_degree() != b.form_degree()) throw std::invalid_argument("form degree mismatch");
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
    check_same_form(*this, o);
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
    check_same_form(*this, o);
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
    return *this;
}

DiffForm& DiffForm::operator*=(const Polynomial& f) {
    for (Polynomial& c : comp_) c *= f;
    return *this;
}

DiffForm& DiffForm::operator*=(const Rational& c) {
    for (Polynomial& p : comp_) p *= c;
    return *this;
}

DiffForm DiffForm::operator-() const {
    DiffForm r = *this;
    for (Polynomial& p : r.comp_) p = -p;
    return r;
}

// ---------- exterior operations ----------

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("form ring mismatch");
    const int nv = a.nvars();
    const int p = a.form_degree(), q = b.form_degree();
    if (p + q > nv) return DiffForm::zero(nv, 0);
    DiffForm out(nv, p + q);
    const auto& as = index_tuples(nv, p);
    const auto& bs = index_tuples(nv, q);
    for (std::size_t ia = 0; ia < as.size(); ++ia) {
        const Polynomial& f = a.components()[ia];
        if (f.is_zero()) continue;
        for (std::size_t ib = 0; ib < bs.size(); ++ib) {
            const Polynomial& g = b.components()[ib];
            if (g.is_zero()) continue;
            // merge tuples, tracking disjointness and the transposition sign
            const auto& S = as[ia];
            const auto& T = bs[ib];
            std::vector<int> merged;
            merged.reserve(S.size() + T.size());
            int inversions = 0;
            std::size_t i = 0, j = 0;
            bool disjoint = true;
            while (i < S.size() && j < T.size()) {
                if (S[i] == T[j]) {
                    disjoint = false;
                    break;
                }
                if (S[i] < T[j]) {
                    merged.push_back(S[i++]);
                } else {
                    // T[j] moves past the remaining elements of S
                    inversions += static_cast<int>(S.size() - i);
                    merged.push_back(T[j++]);
                }
            }
            if (!disjoint) continue;
            for (; i < S.size(); ++i) merged.push_back(S[i]);
            for (; j < T.size(); ++j) merged.push_back(T[j]);
            Polynomial prod = f * g;
            if (inversions % 2) prod = -prod;
            out.component_mut(merged) += prod;
        }
    }
    return out;
}

DiffForm exterior_derivative(const DiffForm& a) {
    const int nv = a.nvars();
    const int p = a.form_degree();
    if (p + 1 > nv) return DiffForm::zero(nv, 0);
    DiffForm out(nv, p + 1);
    const auto& as = index_tuples(nv, p);
    for (std::size_t ia = 0; ia < as.size(); ++ia) {
        const Polynomial& f = a.components()[ia];
        if (f.is_zero()) continue;
        const auto& S = as[ia];
        for (int i = 0; i < nv; ++i) {
            if (std::binary_search(S.begin(), S.end(), i)) continue;
            Polynomial df = partial_derivative(f, i);
            if (df.is_zero()) continue;
            std::vector<int> merged = S;
            auto pos = std::lower_bound(merged.begin(), merged.end(), i);
            const int sign_exp = static_cast<int>(pos - merged.begin());
            merged.insert(pos, i);
            if (sign_exp % 2) df = -df;
            out.component_mut(merged) += df;
        }
    }
    return out;
}

DiffForm contract(const VectorField& x, const DiffForm& a) {
    if (x.nvars() != a.nvars()) throw std::invalid_argument("form ring mismatch");
    const int nv = a.nvars();
    const int p = a.form_degree();
    if (p == 0) throw std::invalid_argument("contract: cannot contract a 0-form");
    DiffForm out(nv, p - 1);
    const auto& as = index_tuples(nv, p);
    for (std::size_t ia = 0; ia < as.size(); ++ia) {
        const Polynomial& f = a.components()[ia];
        if (f.is_zero()) continue;
        const auto& S = as[ia];
        for (std::size_t t = 0; t < S.size(); ++t) {
            const Polynomial& xc = x.comp[static_cast<std::size_t>(S[t])];
            if (xc.is_zero()) continue;
            std::vector<int> sub;
            sub.reserve(S.size() - 1);
            for (std::size_t u = 0; u < S.size(); ++u)
                if (u != t) sub.push_back(S[u]);
            Polynomial term = xc * f;
            if (t % 2) term = -term;
            out.component_mut(sub) += term;
        }
    }
    return out;
}

DiffForm lie_derivative(const VectorField& x, const DiffForm& a) {
    if (a.form_degree() == 0) return contract(x, exterior_derivative(a));
    return contract(x, exterior_derivative(a)) + exterior_derivative(contract(x, a));
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    check_same_field_ring(x, y);
    const int nv = x.nvars();
    VectorField out = VectorField::zero(nv);
    for (int i = 0; i < nv; ++i) {
        Polynomial acc(nv);
        for (int j = 0; j < nv; ++j) {
            acc += x.comp[static_cast<std::size_t>(j)] *
                   partial_derivative(y.comp[static_cast<std::size_t>(i)], j);
            acc -= y.comp[static_cast<std::size_t>(j)] *
                   partial_derivative(x.comp[static_cast<std::size_t>(i)], j);
        }
        out.comp[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
}

std::vector<Polynomial> coefficient_polys(const DiffForm& a) {
    std::vector<Polynomial> out;
    for (const Polynomial& f : a.components())
        if (!f.is_zero()) out.push_back(f);
    return out;
}

DiffForm pullback_form(std::span<const Polynomial> images, const DiffForm& a) {
    if (static_cast<int>(images.size()) != a.nvars())
        throw std::invalid_argument("pullback: one map component per target variable required");
    if (images.empty()) throw std::invalid_argument("pullback: empty map");
    const int src = images[0].nvars();
    int nu = -2;
    for (const Polynomial& f : images) {
        if (f.nvars() != src) throw std::invalid_argument("pullback: map ring mismatch");
        if (!is_homogeneous(f)) throw std::invalid_argument("pullback: map components must be homogeneous");
        if (nu == -2)
            nu = degree(f);
        else if (degree(f) != nu)
            throw std::invalid_argument("pullback: map component degree mismatch");
    }
    const int p = a.form_degree();
    std::vector<DiffForm> dF;
    dF.reserve(images.size());
    for (const Polynomial& f : images)
        dF.push_back(exterior_derivative(DiffForm::scalar(f)));
    DiffForm out(src, std::min(p, src));
    if (p > src) return DiffForm::zero(src, 0);
    const auto& as = index_tuples(a.nvars(), p);
    for (std::size_t ia = 0; ia < as.size(); ++ia) {
        const Polynomial& f = a.components()[ia];
        if (f.is_zero()) continue;
        DiffForm term = DiffForm::scalar(substitute(f, images));
        for (int s : as[ia]) term = wedge(term, dF[static_cast<std::size_t>(s)]);
        if (term.form_degree() != out.form_degree()) continue;  // collapsed to zero
        out += term;
    }
    return out;
}

// determinant of a small polynomial matrix by Laplace expansion on row 0
static Polynomial poly_det(const std::vector<std::vector<const Polynomial*>>& m, int nv) {
    const std::size_t k = m.size();
    if (k == 0) return Polynomial::constant(nv, 1);
    if (k == 1) return *m[0][0];
    Polynomial acc(nv);
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j]->is_zero()) continue;
        std::vector<std::vector<const Polynomial*>> sub;
        sub.reserve(k - 1);
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<const Polynomial*> row;
            row.reserve(k - 1);
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial term = *m[0][j] * poly_det(sub, nv);
        if (j % 2) term = -term;
        acc += term;
    }
    return acc;
}

DiffForm split_contraction(std::span<const VectorField> fields) {
    if (fields.empty()) throw std::invalid_argument("split_contraction: no fields");
    const int nv = fields[0].nvars();
    if (static_cast<int>(fields.size()) != nv - 2)
        throw std::invalid_argument("split_contraction: need n-1 fields in n+1 variables");
    for (const VectorField& x : fields)
        if (x.nvars() != nv) throw std::invalid_argument("split_contraction: ring mismatch");
    // rows R, X_1, ..., X_{n-1}; the signed maximal minors reproduce
    // i_{X_{n-1}} ... i_{X_1} i_R (vol), whose value on a field Z is
    // det[R; X_1; ...; X_{n-1}; Z].
    std::vector<const VectorField*> rows;
    VectorField radial = VectorField::radial(nv);
    rows.push_back(&radial);
    for (const VectorField& x : fields) rows.push_back(&x);
    DiffForm out(nv, 1);
    const int global = (nv + 1) % 2 == 0 ? 1 : -1;  // (-1)^(nv+1)
    for (int j = 0; j < nv; ++j) {
        std::vector<std::vector<const Polynomial*>> m;
        for (const VectorField* row : rows) {
            std::vector<const Polynomial*> r;
            for (int c = 0; c < nv; ++c)
                if (c != j) r.push_back(&row->comp[static_cast<std::size_t>(c)]);
            m.push_back(std::move(r));
        }
        Polynomial minor = poly_det(m, nv);
        int sign = global * (j % 2 ? -1 : 1);
        if (sign < 0) minor = -minor;
        std::vector<int> tuple = {j};
        out.component_mut(tuple) = std::move(minor);
    }
    return out;
}

std::optional<int> coefficient_degree(const DiffForm& a) {
    int d = -1;
    for (const Polynomial& f : a.components()) {
        if (f.is_zero()) continue;
        if (!is_homogeneous(f)) return std::nullopt;
        int df = degree(f);
        if (d == -1)
            d = df;
        else if (d != df)
            return std::nullopt;
    }
    if (d == -1) return std::nullopt;
    return d;
}

std::optional<Rational> scalar_ratio(const DiffForm& b, const DiffForm& a) {
    if (a.nvars() != b.nvars() || a.form_degree() != b.form_degree()) return std::nullopt;
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    // scalar-equivalent iff all 2x2 cross products of stacked coefficient
    // vectors vanish, i.e. b_i * a_j == b_j * a_i as polynomials
    const auto& ac = a.components();
    const auto& bc = b.components();
    for (std::size_t i = 0; i < ac.size(); ++i)
        for (std::size_t j = i + 1; j < ac.size(); ++j)
            if (bc[i] * ac[j] != bc[j] * ac[i]) return std::nullopt;
    // ratio from the first nonzero pair, b = r * a
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i].is_zero()) {
            if (!bc[i].is_zero()) return std::nullopt;
            continue;
        }
        if (bc[i].is_zero()) return std::nullopt;
        const Term& ta = ac[i].terms().front();
        const Term& tb = bc[i].terms().front();
        if (!(ta.mono == tb.mono)) return std::nullopt;
        Rational r = tb.coeff / ta.coeff;
        DiffForm scaled = a;
        scaled *= r;
        if (scaled == b) return r;
        return std::nullopt;
    }
    return std::nullopt;
}

DiffForm normalized(const DiffForm& a) {
    Rational c = 0;
    for (const Polynomial& f : a.components()) {
        if (f.is_zero()) continue;
        Rational cf = content(f);
        if (cf < 0) cf = -cf;
        if (c == 0) {
            c = cf;
        } else {
            // gcd of rationals: gcd of numerators over lcm of denominators
            BigInt num, den;
            mpz_gcd(num.get_mpz_t(), c.get_num().get_mpz_t(), cf.get_num().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), c.get_den().get_mpz_t(), cf.get_den().get_mpz_t());
            c = Rational(num, den);
            c.canonicalize();
        }
    }
    if (c == 0) return a;  // zero form
    for (const Polynomial& f : a.components())
        if (!f.is_zero()) {
            if (f.terms().front().coeff < 0) c = -c;
            break;
        }
    DiffForm out = a;
    out *= Rational(1) / c;
    return out;
}

// ---------- printing ----------

static std::string differential_name(const std::vector<int>& tuple,
                                     const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += "^";
        s += "d" + names.at(static_cast<std::size_t>(tuple[i]));
    }
    return s;
}

// Appends "coeff*base" to s, factoring a leading '-' out of the coefficient so
// sums read "a - (b + c)*dx1" rather than "a + (-b - c)*dx1".
static void append_component(std::string& s, bool& first, const Polynomial& f,
                             const std::string& base, const std::vector<std::string>& names) {
    Polynomial g = f;
    bool negate = false;
    if (g.terms().front().coeff < 0) {
        negate = true;
        g = -g;
    }
    std::string coeff;
    if (g.num_terms() == 1) {
        const Term& t = g.terms()[0];
        if (t.coeff == 1 && t.mono.is_one())
            coeff = "";
        else if (t.mono.is_one())
            coeff = to_string(t.coeff);
        else if (t.coeff == 1)
            coeff = to_string(t.mono, names);
        else
            coeff = to_string(t.coeff) + "*" + to_string(t.mono, names);
    } else {
        coeff = "(" + to_string(g, names) + ")";
    }
    if (first)
        s += negate ? "-" : "";
    else
        s += negate ? " - " : " + ";
    first = false;
    s += coeff.empty() ? base : coeff + "*" + base;
}

std::string to_string(const DiffForm& a, const std::vector<std::string>& names) {
    if (a.form_degree() == 0) return to_string(a.components()[0], names);
    if (a.is_zero()) return "0";
    const auto& tuples = index_tuples(a.nvars(), a.form_degree());
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const Polynomial& f = a.components()[i];
        if (f.is_zero()) continue;
        append_component(s, first, f, differential_name(tuples[i], names), names);
    }
    return s;
}

std::string to_string(const DiffForm& a) {
    return to_string(a, default_var_names(a.nvars()));
}

std::string to_string(const VectorField& x, const std::vector<std::string>& names) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = 0; i < x.nvars(); ++i) {
        const Polynomial& f = x.comp[static_cast<std::size_t>(i)];
        if (f.is_zero()) continue;
        append_component(s, first, f, "dd" + names.at(static_cast<std::size_t>(i)), names);
    }
    return s;
}

std::string to_string(const VectorField& x) {
    return to_string(x, default_var_names(x.nvars()));
}

}  // namespace folcalc
