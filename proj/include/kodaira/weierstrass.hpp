#pragma once

#include "kodaira/arith.hpp"

#include <array>
#include <string>

namespace kodaira {

struct SingularCurve : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonIntegralTransform : std::domain_error {
    int index;  // 1,2,3,4,6
    Rat value;
    NonIntegralTransform(int i, const Rat& v)
        : std::domain_error("transform: a" + std::to_string(i) + " = " + v.get_str() + " is not integral"),
          index(i), value(v) {}
};

struct Ainvs {
    Int a1, a2, a3, a4, a6;

    friend bool operator==(const Ainvs&, const Ainvs&) = default;
    std::array<Int, 5> array() const { return {a1, a2, a3, a4, a6}; }
};

struct Invariants {
    Int b2, b4, b6, b8, c4, c6, disc;
    Rat j;
};

// No singularity check. j is left at 0 when with_j is false or the model is singular.
Invariants compute_invariants(const Ainvs& a, bool with_j = true);
Int discriminant(const Ainvs& a);

// Integral, nonsingular model.
class WeierstrassModel {
public:
    WeierstrassModel(Int a1, Int a2, Int a3, Int a4, Int a6);
    explicit WeierstrassModel(const Ainvs& a);

    const Ainvs& ainvs() const { return a_; }
    const Int& a1() const { return a_.a1; }
    const Int& a2() const { return a_.a2; }
    const Int& a3() const { return a_.a3; }
    const Int& a4() const { return a_.a4; }
    const Int& a6() const { return a_.a6; }

    Invariants invariants() const { return compute_invariants(a_); }
    std::string str() const;  // [a1,a2,a3,a4,a6]

    friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;

private:
    Ainvs a_;
};

Invariants invariants(const WeierstrassModel& e);

// x = u^2 x' + r,  y = u^3 y' + s u^2 x' + w
struct IsoMap {
    Rat u{1}, r{0}, s{0}, w{0};

    static IsoMap identity() { return {}; }
    friend bool operator==(const IsoMap&, const IsoMap&) = default;
};

// Apply m1 first, then m2.
IsoMap compose(const IsoMap& m1, const IsoMap& m2);
IsoMap inverse(const IsoMap& m);

struct RationalAinvs {
    Rat a1, a2, a3, a4, a6;
    friend bool operator==(const RationalAinvs&, const RationalAinvs&) = default;
};

RationalAinvs transform_rational(const RationalAinvs& e, const IsoMap& m);
RationalAinvs to_rational(const Ainvs& a);

// Throws NonIntegralTransform when the image is not integral.
WeierstrassModel transform(const WeierstrassModel& e, const IsoMap& m);
Ainvs transform_integral(const Ainvs& e, const IsoMap& m);

// Integer translation (u = 1) without rationals, used by hot loops.
void translate(Ainvs& a, const Int& r, const Int& s, const Int& w);

}  // namespace kodaira
