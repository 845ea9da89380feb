#pragma once

#include "kodaira/families.hpp"
#include "kodaira/kodaira_type.hpp"
#include "kodaira/tate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodaira {

struct Contribution {
    Int p;
    int cp;
    KodairaType type;
    int fp;
};

struct GlobalReport {
    WeierstrassModel curve;
    Int c;
    Int disc_min;
    Int conductor;
    std::vector<Contribution> contributions;  // bad primes, increasing
    std::optional<TorsionTag> torsion_hint;
};

GlobalReport global_tamagawa(const WeierstrassModel& e, const FactorOptions& opt = default_factor_options());
GlobalReport global_tamagawa(const FamilySpec& s, const FactorOptions& opt = default_factor_options());

struct PrimeTrace {
    Int p;
    int v;             // valuation of the tested quantity (C3) or of the discriminant (C2)
    std::string rule;  // matched case, or "none"
    bool ok;
};

struct C1Result {
    bool value = false;
    std::vector<PrimeTrace> trace;
};

// y^2 + a^3 xy + sigma a^6 y = x^3, the family E_C3(a^3, sigma).
WeierstrassModel three_torsion_model(const Int& a, int sigma);

// Corrected: minimal discriminant sigma a^3 - 27, companion congruences a^6 - 27 sigma a^3,
// odd valuations allowed at p = 2 mod 3, valuation 4 only at 3.
// Literal: sigma (a^3 - 27), congruences on a^6 - 27 sigma a, odd valuations at p = 5,11 mod 12,
// valuation 4 at any p).
enum class ThreeTorsionRule { Corrected, Literal };

// Throws SingularCurve when a^3 = 27 sigma, ArgumentError when a < 1 or sigma not +-1.
C1Result c1_3torsion(const Int& a, int sigma, ThreeTorsionRule rule = ThreeTorsionRule::Corrected,
                     const FactorOptions& opt = default_factor_options());

// Row checks of the c = 1 criterion for E_C2(a, b, d); d = 1 is accepted.
C1Result c1_2torsion(const Int& a, const Int& b, const Int& d, const FactorOptions& opt = default_factor_options());

enum class C1Kind { ThreeTorsionCubes, TwoTorsionQuadratic };

C1Kind parse_c1_kind(const std::string& s);
std::string c1_kind_name(C1Kind k);

struct FamilyCurve {
    long k;
    FamilySpec spec;
    GlobalReport certificate;
};

// Members for k in [k_lo, k_hi] that pass the squarefree filter, in increasing k.
std::vector<FamilyCurve> enumerate_c1_families(C1Kind kind, long k_lo, long k_hi, int jobs = 0);

}  // namespace kodaira
