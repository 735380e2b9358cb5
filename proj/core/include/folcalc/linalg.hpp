#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "folcalc/rational.hpp"

namespace folcalc {

// Sparse exact integer vector: column-sorted entries with nonzero
// coefficients. Rows are kept primitive (content 1) inside RowEchelon; the
// scale never matters for the rank/row-space questions asked of it.
struct SparseRow {
    std::vector<std::pair<int, BigInt>> ent;

    bool empty() const { return ent.empty(); }
    int lead() const { return ent.front().first; }
};

// Builds a primitive integer row from rational entries (any order, duplicates
// summed).
SparseRow make_row(std::vector<std::pair<int, Rational>> entries);

// Incremental exact row-echelon basis over Q, stored fraction-free. With
// history enabled it can express dependent rows as rational combinations of
// the previously *inserted* rows, which is how kernels and preimages are
// recovered.
class RowEchelon {
  public:
    explicit RowEchelon(bool track_history = false) : track_(track_history) {}

    struct AddResult {
        bool inserted = false;  // true: row was independent and joined the basis
        // When not inserted and history is on:
        //   r = sum combo[k] * inserted_{offset+k}  (modulo the untracked block).
        std::vector<Rational> combo;
    };

    AddResult add_row(SparseRow r);

    // Turns history on from this point: rows inserted earlier act as an
    // untracked "context" block, and later combos are taken modulo its span
    // and indexed relative to tracked_offset(). Call at most once, before any
    // tracked insertion.
    void start_tracking() {
        track_ = true;
        offset_ = rows_.size();
    }
    int tracked_offset() const { return static_cast<int>(offset_); }

    // Reduces r against the basis without inserting; empty residual means r
    // lies in the row space.
    SparseRow residual(SparseRow r) const;

    // History mode only: rational combination of tracked inserted rows
    // representing r (modulo the untracked block), or nullopt if r is outside
    // the row space.
    std::optional<std::vector<Rational>> solve(SparseRow r) const;

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    struct ERow {
        SparseRow row;
        // row = sum hist[k] * inserted_{offset+k} modulo the untracked block;
        // empty for untracked rows.
        std::vector<Rational> hist;
    };

    // Shared reduction core; hist/scale only maintained when tracking.
    void reduce(SparseRow& r, std::vector<Rational>* combo, Rational* scale) const;

    std::vector<ERow> rows_;
    std::vector<std::pair<int, int>> pivot_;  // (leading col, row index), sorted by col
    bool track_ = false;
    std::size_t offset_ = 0;  // rows inserted before start_tracking()
};

// Rank-only row echelon over Z/p for a word-sized prime. The rank can only
// undercount the rational rank (a row may vanish mod p), so it serves as a
// one-sided accelerator: callers must back any decision drawn from it with an
// exact recomputation on the unfavorable side.
class ModRankEchelon {
  public:
    static constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

    explicit ModRankEchelon(std::uint32_t prime = kDefaultPrime) : p_(prime) {}

    // Entries must be column-sorted with values already reduced mod p.
    // Returns true when the row was independent and joined the basis.
    bool add_row(std::vector<std::pair<int, std::uint32_t>> r);

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    std::uint32_t p_;
    std::vector<std::vector<std::pair<int, std::uint32_t>>> rows_;  // pivot coeff 1
    std::vector<std::pair<int, int>> pivot_;  // (leading col, row index), sorted by col
};

}  // namespace folcalc
