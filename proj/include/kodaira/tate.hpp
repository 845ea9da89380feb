#pragma once

#include "kodaira/arith.hpp"
#include "kodaira/kodaira_type.hpp"
#include "kodaira/weierstrass.hpp"

#include <optional>
#include <vector>

namespace kodaira {

struct LocalData {
    Int p;
    KodairaType type;
    int fp = 0;
    int cp = 1;
    int vdelta_min = 0;
    int u_scale = 0;
    Ainvs minimal_model;

    bool same_data(const LocalData& o) const {
        return p == o.p && type == o.type && fp == o.fp && cp == o.cp && vdelta_min == o.vdelta_min;
    }
};

// Requires p prime (checked) and a nonsingular integral model.
LocalData tate_local_data(const WeierstrassModel& e, const Int& p);

// Same, without the primality and singularity checks.
LocalData tate_unchecked(const Ainvs& a, const Int& p);

// Closed-form I_n^* recognizer; nullopt when the valuation or root conditions fail.
std::optional<LocalData> lemma_in_fastpath(const WeierstrassModel& e, const Int& p, int n);

struct GlobalMinimal {
    Int disc_min;
    std::vector<LocalData> bad;  // increasing p
};

GlobalMinimal global_minimal_discriminant(const WeierstrassModel& e,
                                          const FactorOptions& opt = default_factor_options());

// Roots counting and splitting of a*t^2 + b*t + c over F_p (a nonzero mod p).
bool quadratic_has_root(const Int& a, const Int& b, const Int& c, const Int& p);
bool quadratic_distinct(const Int& a, const Int& b, const Int& c, const Int& p);

// Number of distinct roots in F_p of monic t^3 + b t^2 + c t + d.
int cubic_root_count(const Int& b, const Int& c, const Int& d, const Int& p);

}  // namespace kodaira
