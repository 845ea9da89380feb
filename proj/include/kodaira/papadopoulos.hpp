#pragma once

#include "kodaira/arith.hpp"
#include "kodaira/kodaira_type.hpp"
#include "kodaira/tate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodaira {

struct Triplet {
    Valuation vc4, vc6;
    int vdelta = 0;

    std::string str() const;
};

Triplet triplet_of(const Ainvs& minimal, const Int& p);

struct TableGap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Tiebreak {
    None,
    P3_low_holds,   // (c6/27)^2 + 2 == c4/3 mod 9
    P3_low_fails,
    P3_high_holds,  // (c6/3^6)^2 + 2 == c4/27 mod 9
    P3_high_fails,
};

struct Candidate {
    KodairaType type;
    int fp;
    std::vector<int> cps;  // empty for I_n: {n, 1, 2} by splitting
    std::string row_id;
    Tiebreak tiebreak = Tiebreak::None;
    int max_step = 0;  // p = 2 only; 0 when the table leaves the column blank
};

struct LookupResult {
    std::vector<Candidate> candidates;
    std::string tiebreak;  // human-readable congruence, empty if none
    int max_step = 0;      // largest step hint among candidates at p = 2
};

LookupResult lookup(const Int& p, const Triplet& t);

struct Resolution {
    bool determined = false;
    KodairaType type;
    int fp = 0;
    std::vector<Candidate> candidates;  // when undetermined
    int max_step = 0;
};

Resolution resolve(const Int& p, const Triplet& t, const Int& c4, const Int& c6);

// True when (type, fp, cp) of ld appears among the rows matching its minimal triplet.
bool consistent(const LocalData& ld);

// Encoded rows as CSV text.
std::string dump_tables_csv();

}  // namespace kodaira
