#include "folcalc/graded.hpp"

#include <gmp.h>

#include <cstring>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "folcalc/groebner.hpp"
#include "folcalc/hilbert.hpp"
#include "folcalc/linalg.hpp"

namespace folcalc {

namespace {

// Monomial basis of S(d) in nv variables with O(1) rank lookup. The
// enumeration order is fixed but otherwise immaterial; ranks only serve as
// column/row coordinates inside one linear-algebra problem.
class MonoIndex {
  public:
    MonoIndex(int nvars, int degree) : nvars_(nvars) {
        if (degree < 0) return;
        Monomial m(nvars);
        emit(m, 0, degree);
        rank_.reserve(list_.size() * 2);
        for (std::size_t k = 0; k < list_.size(); ++k) rank_.emplace(key(list_[k]), static_cast<int>(k));
    }

    int size() const { return static_cast<int>(list_.size()); }
    const Monomial& at(int k) const { return list_[static_cast<std::size_t>(k)]; }

    int rank(const Monomial& m) const {
        const auto it = rank_.find(key(m));
        if (it == rank_.end()) throw std::logic_error("MonoIndex: monomial outside basis");
        return it->second;
    }

  private:
    static std::string key(const Monomial& m) {
        return std::string(reinterpret_cast<const char*>(m.exp.data()),
                           m.exp.size() * sizeof(std::int32_t));
    }

    void emit(Monomial& m, int pos, int remaining) {
        if (pos == nvars_ - 1) {
            m.exp[static_cast<std::size_t>(pos)] = remaining;
            list_.push_back(m);
            m.exp[static_cast<std::size_t>(pos)] = 0;
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            m.exp[static_cast<std::size_t>(pos)] = k;
            emit(m, pos + 1, remaining - k);
        }
        m.exp[static_cast<std::size_t>(pos)] = 0;
    }

    int nvars_;
    std::vector<Monomial> list_;
    std::unordered_map<std::string, int> rank_;
};

// dim S(d) = C(d + nv - 1, nv - 1), 0 for d < 0.
long long monomial_count(int nvars, int d) {
    if (d < 0) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d + nvars - 1),
                 static_cast<unsigned long>(nvars - 1));
    return b.get_si();
}

// Exact integer row, sorted by column. History combos refer to rows exactly
// as passed, so no content stripping happens here.
SparseRow exact_row(std::vector<std::pair<int, BigInt>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    out.ent.reserve(entries.size());
    for (auto& [c, v] : entries) {
        if (v == 0) continue;
        if (!out.ent.empty() && out.ent.back().first == c) {
            out.ent.back().second += v;
            if (out.ent.back().second == 0) out.ent.pop_back();
        } else {
            out.ent.emplace_back(c, std::move(v));
        }
    }
    return out;
}

// Coordinate row of gamma * base in the target basis: component c of the
// p-form contributes its terms at columns c * |idx| + rank(mono * gamma).
// All coefficients must be integers (base built from a normalized form).
SparseRow shifted_row(const DiffForm& base, const Monomial& gamma, const MonoIndex& idx) {
    std::vector<std::pair<int, BigInt>> entries;
    const auto& comps = base.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const int colbase = static_cast<int>(c) * idx.size();
        for (const Term& t : comps[c].terms()) {
            entries.emplace_back(colbase + idx.rank(t.mono * gamma), BigInt(t.coeff.get_num()));
        }
    }
    return exact_row(std::move(entries));
}

struct Setup {
    DiffForm wn;   // normalized copy of omega (integer, primitive)
    DiffForm dw;   // d(wn)
    std::vector<DiffForm> wdx;  // wn ^ dx_i
    int nvars = 0;
    int e = 0;  // degree of the form: coefficients have degree e - 1
};

Setup prepare(const DiffForm& omega) {
    if (omega.form_degree() != 1 || omega.is_zero()) {
        throw std::invalid_argument("unfolding computations need a nonzero 1-form");
    }
    const auto cd = coefficient_degree(omega);
    if (!cd.has_value()) {
        throw std::invalid_argument("unfolding computations need homogeneous coefficients");
    }
    Setup su;
    su.wn = normalized(omega);
    su.dw = exterior_derivative(su.wn);
    su.nvars = omega.nvars();
    su.e = *cd + 1;
    su.wdx.reserve(static_cast<std::size_t>(su.nvars));
    for (int i = 0; i < su.nvars; ++i) su.wdx.push_back(wedge(su.wn, DiffForm::dx(su.nvars, i)));
    return su;
}

// Shared kernel extraction for the degree-a piece of I(w). The 2-form
// coordinates of w^(gamma dx_i) span W; h = sum c_m m lies in I(w)(a) iff
// sum c_m (m dw) falls in W. A single echelon holds W first, then the rows
// m dw; each dependent row yields one kernel element. Tracking modes:
//   - Dims: no history at all, only the count of dependent rows.
//   - Piece: history over the m dw block only (combos mod W).
//   - Eta:   full history; the W part of the combo recovers eta.
enum class Mode { Dims, Piece, Eta };

struct PieceData {
    long long dim = 0;
    // Raw rational kernel polynomials (Piece/Eta modes).
    std::vector<Polynomial> kernel;
    // Per kernel element, psi with h dw = w ^ psi (Eta mode only).
    std::vector<DiffForm> psi;
};

// One-sided fast dimension of I(w)(a), assuming codim sing(w) >= 2 (checked
// by the caller). Under that hypothesis the kernel of w^ on O^1(a) is exactly
// S(a-e) w, so rank W = dim O^1(a) - dim S(a-e) in closed form, and only the
// combined stack needs elimination — done mod p, whose rank can only
// undercount. The result is therefore >= the exact dimension, with equality
// away from a bad-prime accident; callers must recheck exactly before acting
// on a value that is *larger* than expected.
long long upper_dimension(const Setup& su, int a) {
    if (a < 1) throw std::invalid_argument("unfolding degree must be at least 1");
    const int nv = su.nvars;
    const MonoIndex target(nv, a + su.e - 2);
    const std::uint32_t p = ModRankEchelon::kDefaultPrime;
    ModRankEchelon ech(p);

    const auto mod_row = [&](const SparseRow& row) {
        std::vector<std::pair<int, std::uint32_t>> out;
        out.reserve(row.ent.size());
        for (const auto& [c, v] : row.ent) {
            const std::uint32_t r = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
            if (r != 0) out.emplace_back(c, r);
        }
        return out;
    };

    const MonoIndex gammas(nv, a - 1);
    for (int i = 0; i < nv; ++i) {
        if (su.wdx[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int g = 0; g < gammas.size(); ++g) {
            ech.add_row(mod_row(shifted_row(su.wdx[static_cast<std::size_t>(i)], gammas.at(g), target)));
        }
    }
    const MonoIndex hmono(nv, a);
    for (int k = 0; k < hmono.size(); ++k) {
        ech.add_row(mod_row(shifted_row(su.dw, hmono.at(k), target)));
    }
    const long long rank_w_closed =
        static_cast<long long>(nv) * monomial_count(nv, a - 1) - monomial_count(nv, a - su.e);
    return hmono.size() - ech.rank() + rank_w_closed;
}

PieceData solve_piece(const Setup& su, int a, Mode mode) {
    if (a < 1) throw std::invalid_argument("unfolding degree must be at least 1");
    const int nv = su.nvars;
    const MonoIndex target(nv, a + su.e - 2);
    RowEchelon ech(mode == Mode::Eta);

    const MonoIndex gammas(nv, a - 1);
    std::vector<std::pair<int, int>> wrows;  // (gamma rank, i) per inserted W row
    for (int i = 0; i < nv; ++i) {
        if (su.wdx[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int g = 0; g < gammas.size(); ++g) {
            SparseRow row = shifted_row(su.wdx[static_cast<std::size_t>(i)], gammas.at(g), target);
            if (ech.add_row(std::move(row)).inserted && mode == Mode::Eta) {
                wrows.emplace_back(g, i);
            }
        }
    }
    const int rank_w = ech.rank();
    if (mode == Mode::Piece) ech.start_tracking();

    const MonoIndex hmono(nv, a);
    PieceData out;
    std::vector<int> inserted_h;  // tracked row order -> hmono rank
    for (int k = 0; k < hmono.size(); ++k) {
        auto res = ech.add_row(shifted_row(su.dw, hmono.at(k), target));
        if (res.inserted) {
            if (mode != Mode::Dims) inserted_h.push_back(k);
            continue;
        }
        ++out.dim;
        if (mode == Mode::Dims) continue;
        // Dependent row: m_k dw = sum_W combo_j w^(gamma_j dx_{i_j})
        //                         + sum_h combo_j (m_j dw)  (mod W in Piece mode).
        std::vector<Term> terms;
        terms.push_back({Rational(1), hmono.at(k)});
        DiffForm psi = DiffForm::zero(nv, 1);
        const int hbase = mode == Mode::Eta ? rank_w : 0;
        for (std::size_t j = 0; j < res.combo.size(); ++j) {
            const Rational& c = res.combo[j];
            if (c == 0) continue;
            if (static_cast<int>(j) < hbase) {
                const auto& [g, i] = wrows[j];
                psi += c * DiffForm::one_form([&] {
                    std::vector<Polynomial> comps(static_cast<std::size_t>(nv),
                                                  Polynomial::zero(nv));
                    comps[static_cast<std::size_t>(i)] =
                        Polynomial::monomial(nv, gammas.at(g));
                    return comps;
                }());
            } else {
                terms.push_back({-c, hmono.at(inserted_h[j - static_cast<std::size_t>(hbase)])});
            }
        }
        out.kernel.push_back(Polynomial::from_terms(nv, std::move(terms)));
        if (mode == Mode::Eta) out.psi.push_back(std::move(psi));
    }
    return out;
}

}  // namespace

GradedPiece unfolding_space(const DiffForm& omega, int a) {
    const Setup su = prepare(omega);
    PieceData data = solve_piece(su, a, Mode::Eta);
    GradedPiece out;
    out.degree = a;
    out.basis.reserve(data.kernel.size());
    const Rational ratio = frac(a, su.e);
    for (std::size_t k = 0; k < data.kernel.size(); ++k) {
        // h dw = w ^ psi gives e w ^ (ratio psi + dh - dh) = a h dw, so
        // eta = (a/e) psi + dh solves the degree-a unfolding equation.
        const Polynomial& h0 = data.kernel[k];
        DiffForm eta = ratio * data.psi[k] + exterior_derivative(DiffForm::scalar(h0));
        const Rational c = content(h0);
        out.basis.emplace_back(primitive_part(h0), Rational(1) / c * eta);
    }
    return out;
}

std::pair<Polynomial, DiffForm> module_action(const Polynomial& f,
                                              const std::pair<Polynomial, DiffForm>& u,
                                              int a) {
    if (a < 1) throw std::invalid_argument("module_action needs class degree a >= 1");
    const auto& [h, eta] = u;
    if (eta.form_degree() != 1 || eta.nvars() != f.nvars() || h.nvars() != f.nvars()) {
        throw std::invalid_argument("module_action: mismatched class components");
    }
    if (!is_homogeneous(f)) throw std::invalid_argument("module_action needs homogeneous f");
    const int b = f.is_zero() ? 0 : degree(f);
    const DiffForm df = exterior_derivative(DiffForm::scalar(f));
    const DiffForm dh = exterior_derivative(DiffForm::scalar(h));
    DiffForm out = frac(a + b, a) * (f * eta);
    out += frac(1, a) * (Rational(a) * (h * df) - Rational(b) * (f * dh));
    return {f * h, std::move(out)};
}

long long unfolding_ideal_dimension(const DiffForm& omega, int a) {
    return solve_piece(prepare(omega), a, Mode::Dims).dim;
}

std::vector<Polynomial> unfolding_ideal_piece(const DiffForm& omega, int a) {
    PieceData data = solve_piece(prepare(omega), a, Mode::Piece);
    std::vector<Polynomial> out;
    out.reserve(data.kernel.size());
    for (const Polynomial& h : data.kernel) out.push_back(primitive_part(h));
    return out;
}

Ideal assemble_unfolding_ideal(const DiffForm& omega, int d_max, int slack) {
    const Setup su = prepare(omega);
    if (d_max < su.e) {
        throw std::invalid_argument("assemble_unfolding_ideal: d_max must be at least e = " +
                                    std::to_string(su.e));
    }
    if (slack < 0) throw std::invalid_argument("assemble_unfolding_ideal: negative slack");
    // upper_dimension leans on the closed-form Koszul rank of the w^ block,
    // which needs codim sing(w) >= 2; verify that exactly before anything.
    const Ideal sing(su.nvars, coefficient_polys(su.wn));
    if (projective_dimension(sing) > su.nvars - 3) {
        throw std::invalid_argument(
            "assemble_unfolding_ideal: sing(w) must have codimension >= 2");
    }

    std::vector<Polynomial> gens;
    Ideal cur = Ideal::zero(su.nvars);
    for (int a = 1; a <= d_max + slack; ++a) {
        const long long dim_cur =
            gens.empty() ? 0
                         : BigInt(BigInt(static_cast<long>(monomial_count(su.nvars, a))) -
                                  hilbert_function(cur, a))
                               .get_si();
        // One-sided fast comparison: dim_up >= exact dim I(w)(a) >= dim_cur,
        // so equality here certifies the exact equality. Any other outcome is
        // re-decided by the exact solver.
        const long long dim_up = upper_dimension(su, a);
        if (dim_up == dim_cur) continue;
        if (dim_up < dim_cur) {
            throw std::logic_error("assemble_unfolding_ideal: generated ideal exceeds the "
                                   "directly computed piece in degree " + std::to_string(a));
        }
        if (a > d_max) {
            const long long dim_exact = solve_piece(su, a, Mode::Dims).dim;
            if (dim_exact < dim_cur) {
                throw std::logic_error("assemble_unfolding_ideal: generated ideal exceeds the "
                                       "directly computed piece in degree " + std::to_string(a));
            }
            if (dim_exact > dim_cur) {
                throw UnfoldingStabilizationError(
                    a, "unfolding ideal not stabilized: degree " + std::to_string(a) +
                           " piece has dimension " + std::to_string(dim_exact) +
                           " but the generators found up to degree " + std::to_string(d_max) +
                           " only span " + std::to_string(dim_cur) + "; increase d_max");
            }
            continue;  // spurious mod-p rank drop, exactly refuted
        }
        // New generators may appear in this degree; extract the piece and
        // keep the elements not already generated.
        PieceData piece = solve_piece(su, a, Mode::Piece);
        if (piece.dim < dim_cur) {
            throw std::logic_error("assemble_unfolding_ideal: generated ideal exceeds the "
                                   "directly computed piece in degree " + std::to_string(a));
        }
        if (piece.dim == dim_cur) continue;  // spurious mod-p rank drop
        const auto& gb = cur.groebner();
        for (Polynomial h : piece.kernel) {
            h = primitive_part(h);
            if (!gens.empty() && normal_form(h, gb, MonomialOrder::grevlex()).is_zero()) continue;
            gens.push_back(std::move(h));
        }
        cur = Ideal(su.nvars, gens);
    }
    if (cur.is_unit()) {
        throw std::logic_error("assemble_unfolding_ideal: the unfolding ideal contains 1");
    }
    return cur;
}

KoszulReport koszul_homology_dim(const DiffForm& omega, int p, int a) {
    if (p < 0) throw std::invalid_argument("koszul_homology_dim: p must be >= 0");
    const Setup su = prepare(omega);
    const int nv = su.nvars;

    // Rank of w^ : O^q(deg) -> O^{q+1}(deg + e) by row echelon.
    const auto wedge_rank = [&](int q, int deg) -> long long {
        const int cd = deg - q;  // coefficient degree of O^q(deg)
        if (cd < 0 || q > nv) return 0;
        const auto& tuples = index_tuples(nv, q);
        const MonoIndex target(nv, cd + su.e - 1);
        const MonoIndex gammas(nv, cd);
        RowEchelon ech(false);
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            std::vector<Polynomial> comps(tuples.size(), Polynomial::zero(nv));
            comps[t] = Polynomial::constant(nv, 1);
            const DiffForm base = wedge(su.wn, DiffForm::from_components(nv, q, std::move(comps)));
            if (base.is_zero()) continue;
            for (int g = 0; g < gammas.size(); ++g) {
                ech.add_row(shifted_row(base, gammas.at(g), target));
            }
        }
        return ech.rank();
    };

    const auto space_dim = [&](int q, int deg) -> long long {
        const int cd = deg - q;
        if (cd < 0 || q > nv) return 0;
        return static_cast<long long>(index_tuples(nv, q).size()) * monomial_count(nv, cd);
    };

    KoszulReport rep;
    rep.p = p;
    rep.a = a;
    rep.dim_cycles = space_dim(p, a) - wedge_rank(p, a);
    rep.dim_boundaries = p == 0 ? 0 : wedge_rank(p - 1, a - su.e);
    rep.dim_homology = rep.dim_cycles - rep.dim_boundaries;
    return rep;
}

}  // namespace folcalc
