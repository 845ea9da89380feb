#pragma once

#include "kodaira/arith.hpp"
#include "kodaira/weierstrass.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kodaira {

// C2xC8 is semistable everywhere and deliberately has no tag.
enum class TorsionTag { C2, C3zero, C3, C4, C5, C6, C7, C8, C9, C10, C12, C2xC2, C2xC4, C2xC6 };

inline constexpr TorsionTag kAllTags[] = {
    TorsionTag::C2,  TorsionTag::C3zero, TorsionTag::C3,    TorsionTag::C4,    TorsionTag::C5,
    TorsionTag::C6,  TorsionTag::C7,     TorsionTag::C8,    TorsionTag::C9,    TorsionTag::C10,
    TorsionTag::C12, TorsionTag::C2xC2,  TorsionTag::C2xC4, TorsionTag::C2xC6,
};

std::string tag_name(TorsionTag t);
TorsionTag parse_tag(const std::string& s);  // throws ArgumentError
bool has_b(TorsionTag t);
bool has_d(TorsionTag t);

struct FamilySpec {
    TorsionTag tag = TorsionTag::C5;
    Int a{0}, b{0}, d{0};

    std::string str() const;  // "C2:a,b,d", "C3zero:a", "C5:a,b"
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// "T:a,b" or "T:a,b,d" or "C3zero:a". Syntax only; no validity check.
FamilySpec parse_family(const std::string& s);

struct ParameterError : ArgumentError {
    std::string clause;
    ParameterError(const std::string& c, const std::string& what) : ArgumentError(what), clause(c) {}
};

struct NotAdditive : ArgumentError {
    using ArgumentError::ArgumentError;
};

struct ValidateOptions {
    bool allow_d1 = false;  // C2 with d = 1
};

// Empty optional when valid, else the violated clause id (e.g. "C2.d-squarefree").
std::optional<std::string> violated_clause(const FamilySpec& s, const ValidateOptions& o = {});
void validate(const FamilySpec& s, const ValidateOptions& o = {});

// Canonical parameters of a Q-isomorphic member of the same family.
FamilySpec normalize(const FamilySpec& s);

// Family coefficients, no validation.
Ainvs family_ainvs(const FamilySpec& s);

// Validates, then builds; throws ParameterError or SingularCurve.
WeierstrassModel build_curve(const FamilySpec& s, const ValidateOptions& o = {});

struct AdditivePrime {
    Int p;
    std::string condition;
    friend bool operator==(const AdditivePrime&, const AdditivePrime&) = default;
};

// Increasing p. Parameters must be valid.
std::vector<AdditivePrime> additive_primes(const FamilySpec& s,
                                          const FactorOptions& opt = default_factor_options());

// Condition id when p is additive for s, else nullopt. p must be prime.
std::optional<std::string> additive_condition(const FamilySpec& s, const Int& p);

// The local change of variables to a p-minimal model; identity when none is needed.
IsoMap minimal_map(const FamilySpec& s, const Int& p);

// Throws NotAdditive when p is not an additive prime of s.
std::pair<WeierstrassModel, IsoMap> minimal_model_at(const FamilySpec& s, const Int& p);

}  // namespace kodaira
