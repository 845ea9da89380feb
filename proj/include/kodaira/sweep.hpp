#pragma once

#include "kodaira/families.hpp"

#include <map>
#include <string>
#include <vector>

namespace kodaira {

// Parameter box for one family. C2: b in [1, b_max], d squarefree in [-d_max, d_max] minus {0, 1}.
// C2xC2: d squarefree in [1, d_max]. C3zero: a in [1, a_max]. Others: |a| <= a_max, |b| <= b_max.
// Invalid and singular parameter sets are skipped.
struct Grid {
    TorsionTag tag;
    long a_max = 0, b_max = 0, d_max = 0;

    std::vector<long> a_values() const;
    std::vector<long> b_values() const;
    std::vector<long> d_values() const;
};

std::vector<Grid> standard_grids(long a_max, long b_max, long d_max);

struct SweepFailure {
    std::string kind;  // mismatch, coverage, papadopoulos, non-minimal, even-n-star, conductor-bound, IIstar-at-odd-p
    FamilySpec spec;
    Int p;
    std::string detail;

    friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepStats {
    long specs = 0;
    long cases = 0;  // additive (spec, p) pairs
    long mismatches = 0;
    long coverage_errors = 0;
    long papadopoulos_failures = 0;
    long non_minimal = 0;
    long even_star = 0, conductor_bound = 0, odd_IIstar = 0;
    std::map<std::string, long> row_hits;
    std::vector<SweepFailure> failures;  // first kMaxFailures, in grid order

    static constexpr size_t kMaxFailures = 64;

    void merge(const SweepStats& o);
    bool clean() const;
    friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

// All checks for one parameter set; skipped (no count) if invalid or singular.
void check_spec(const FamilySpec& s, SweepStats& st);

// Every spec of the grid with the given a.
SweepStats sweep_row(const Grid& g, long a);

SweepStats sweep_serial(const Grid& g);
SweepStats sweep_parallel(const Grid& g, int jobs = 0);

}  // namespace kodaira
