#include "folcalc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace folcalc {

namespace {

// Divides every coefficient by the gcd of all of them; returns the content.
BigInt strip_content(SparseRow& r) {
    if (r.ent.empty()) return 1;
    BigInt g(0);
    for (const auto& [c, v] : r.ent) {
        g = gcd(g, v);
        if (g == 1) return 1;
    }
    if (g < 0) g = -g;
    if (g > 1) {
        for (auto& [c, v] : r.ent) v /= g;
    }
    return g;
}

// out = a*r - b*p, linear merge on column-sorted entries.
SparseRow combine(const SparseRow& r, const BigInt& a, const SparseRow& p, const BigInt& b) {
    SparseRow out;
    out.ent.reserve(r.ent.size() + p.ent.size());
    std::size_t i = 0, j = 0;
    while (i < r.ent.size() || j < p.ent.size()) {
        if (j == p.ent.size() || (i < r.ent.size() && r.ent[i].first < p.ent[j].first)) {
            out.ent.emplace_back(r.ent[i].first, a * r.ent[i].second);
            ++i;
        } else if (i == r.ent.size() || p.ent[j].first < r.ent[i].first) {
            out.ent.emplace_back(p.ent[j].first, -b * p.ent[j].second);
            ++j;
        } else {
            BigInt v = a * r.ent[i].second - b * p.ent[j].second;
            if (v != 0) out.ent.emplace_back(r.ent[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseRow make_row(std::vector<std::pair<int, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Sum duplicates.
    std::vector<std::pair<int, Rational>> merged;
    for (auto& [c, v] : entries) {
        if (!merged.empty() && merged.back().first == c) {
            merged.back().second += v;
        } else {
            merged.emplace_back(c, std::move(v));
        }
    }
    BigInt den(1);
    for (auto& [c, v] : merged) {
        if (v != 0) den = den / gcd(den, BigInt(v.get_den())) * BigInt(v.get_den());
    }
    SparseRow out;
    for (auto& [c, v] : merged) {
        if (v == 0) continue;
        Rational scaled = v * Rational(den);
        out.ent.emplace_back(c, BigInt(scaled.get_num()));
    }
    strip_content(out);
    return out;
}

void RowEchelon::reduce(SparseRow& r, std::vector<Rational>* combo, Rational* scale) const {
    std::size_t i = 0;
    while (i < r.ent.size()) {
        const int col = r.ent[i].first;
        const auto it = std::lower_bound(
            pivot_.begin(), pivot_.end(), col,
            [](const std::pair<int, int>& p, int c) { return p.first < c; });
        if (it == pivot_.end() || it->first != col) {
            ++i;
            continue;
        }
        const ERow& p = rows_[static_cast<std::size_t>(it->second)];
        const BigInt alpha = p.row.ent.front().second;  // pivot lead
        const BigInt beta = r.ent[i].second;
        r = combine(r, alpha, p.row, beta);
        BigInt content(1);
        if (!r.ent.empty()) content = strip_content(r);
        if (combo != nullptr) {
            const std::size_t tracked = rows_.size() - offset_;
            if (combo->size() < tracked) combo->resize(tracked, Rational(0));
            const Rational a(alpha), b(beta), d(content);
            for (std::size_t k = 0; k < combo->size(); ++k) {
                Rational next = (*combo)[k] * a;
                if (k < p.hist.size()) next += b * p.hist[k];
                (*combo)[k] = next / d;
            }
            *scale = *scale * a / d;
        }
        // Entries before position i are unchanged in column; resume there.
    }
}

RowEchelon::AddResult RowEchelon::add_row(SparseRow r) {
    AddResult res;
    std::vector<Rational> combo;
    Rational scale(1);
    reduce(r, track_ ? &combo : nullptr, track_ ? &scale : nullptr);
    if (r.ent.empty()) {
        if (track_) {
            combo.resize(rows_.size() - offset_, Rational(0));
            for (auto& c : combo) c /= scale;
            res.combo = std::move(combo);
        }
        return res;
    }
    ERow row;
    row.row = std::move(r);
    if (track_) {
        // stored = scale*original - sum combo[k]*inserted_{offset+k}.
        combo.resize(rows_.size() - offset_, Rational(0));
        row.hist.reserve(combo.size() + 1);
        for (auto& c : combo) row.hist.push_back(-c);
        row.hist.push_back(scale);
    }
    const int col = row.row.lead();
    const auto it = std::lower_bound(
        pivot_.begin(), pivot_.end(), col,
        [](const std::pair<int, int>& p, int c) { return p.first < c; });
    pivot_.insert(it, {col, static_cast<int>(rows_.size())});
    rows_.push_back(std::move(row));
    res.inserted = true;
    return res;
}

SparseRow RowEchelon::residual(SparseRow r) const {
    reduce(r, nullptr, nullptr);
    strip_content(r);
    return r;
}

namespace {

std::uint32_t pow_mod(std::uint32_t base, std::uint32_t exp, std::uint32_t p) {
    std::uint64_t acc = 1, b = base % p;
    while (exp != 0) {
        if (exp & 1u) acc = acc * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace

bool ModRankEchelon::add_row(std::vector<std::pair<int, std::uint32_t>> r) {
    std::vector<std::pair<int, std::uint32_t>> next;
    std::size_t i = 0;
    while (i < r.size()) {
        const int col = r[i].first;
        const auto it = std::lower_bound(
            pivot_.begin(), pivot_.end(), col,
            [](const std::pair<int, int>& q, int c) { return q.first < c; });
        if (it == pivot_.end() || it->first != col) {
            ++i;
            continue;
        }
        // r -= coef * pivot_row (pivot row has lead coefficient 1).
        const auto& prow = rows_[static_cast<std::size_t>(it->second)];
        const std::uint64_t neg = p_ - r[i].second;
        next.clear();
        next.reserve(r.size() + prow.size());
        std::size_t a = 0, b = 0;
        while (a < r.size() || b < prow.size()) {
            if (b == prow.size() || (a < r.size() && r[a].first < prow[b].first)) {
                next.push_back(r[a++]);
            } else if (a == r.size() || prow[b].first < r[a].first) {
                const std::uint32_t v = static_cast<std::uint32_t>(neg * prow[b].second % p_);
                if (v != 0) next.emplace_back(prow[b].first, v);
                ++b;
            } else {
                const std::uint32_t v =
                    static_cast<std::uint32_t>((r[a].second + neg * prow[b].second) % p_);
                if (v != 0) next.emplace_back(r[a].first, v);
                ++a;
                ++b;
            }
        }
        r.swap(next);
        // Columns before position i are untouched; the entry at col is gone.
    }
    if (r.empty()) return false;
    // Normalize the lead to 1 so elimination needs one multiply per entry.
    const std::uint64_t inv = pow_mod(r.front().second, p_ - 2, p_);
    for (auto& [c, v] : r) v = static_cast<std::uint32_t>(inv * v % p_);
    const int col = r.front().first;
    const auto it = std::lower_bound(
        pivot_.begin(), pivot_.end(), col,
        [](const std::pair<int, int>& q, int c) { return q.first < c; });
    pivot_.insert(it, {col, static_cast<int>(rows_.size())});
    rows_.push_back(std::move(r));
    return true;
}

std::optional<std::vector<Rational>> RowEchelon::solve(SparseRow r) const {
    if (!track_) throw std::logic_error("RowEchelon::solve requires history tracking");
    std::vector<Rational> combo;
    Rational scale(1);
    reduce(r, &combo, &scale);
    if (!r.ent.empty()) return std::nullopt;
    combo.resize(rows_.size() - offset_, Rational(0));
    for (auto& c : combo) c /= scale;
    return combo;
}

}  // namespace folcalc
