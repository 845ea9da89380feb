#pragma once

#include "kodaira/families.hpp"
#include "kodaira/tate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kodaira {

// Prime p -> n_p, asking for I_{n_p}^* at p.
struct Prescription {
    std::map<Int, int> entries;

    void set(const Int& p, int n) { entries[p] = n; }
    std::string str() const;  // "2=12,3=7"
    friend bool operator==(const Prescription&, const Prescription&) = default;
};

// Items of the form "p=n".
Prescription parse_prescription(const std::vector<std::string>& items);

// Throws ParameterError: construct.prime, construct.n-negative, construct.n2.
void validate(const Prescription& pres);

struct Exponents {
    int l, r, s;
};

Exponents exponents_for(const Int& p, int n);

// E_C2(A, B, D). Throws ParameterError "construct.empty" for an empty prescription.
FamilySpec construct(const Prescription& pres);

struct PrimeCheck {
    Int p;
    std::optional<int> expected_n;  // empty for 2 when 2 is not prescribed
    LocalData data;
    bool ok = false;
};

struct VerifyReport {
    Prescription pres;
    FamilySpec spec;
    std::vector<PrimeCheck> checks;       // prescribed primes and 2, increasing
    std::vector<LocalData> extra_additive;  // additive primes outside pres and 2

    bool ok() const;
};

VerifyReport verify_prescription(const Prescription& pres, const FactorOptions& opt = default_factor_options());

}  // namespace kodaira
