#pragma once

#include <compare>
#include <string>

namespace kodaira {

struct KodairaType {
    enum Kind { I, Istar, II, III, IV, IIstar, IIIstar, IVstar };

    Kind kind = I;
    int n = 0;  // only meaningful for I and Istar

    static KodairaType In(int n) { return {I, n}; }
    static KodairaType Instar(int n) { return {Istar, n}; }
    static KodairaType of(Kind k) { return {k, 0}; }

    bool is_good() const { return kind == I && n == 0; }
    bool is_multiplicative() const { return kind == I && n > 0; }
    bool is_additive() const { return kind != I; }

    int components() const;
    std::string str() const;  // "I3", "I0*", "IV*"

    friend bool operator==(const KodairaType& x, const KodairaType& y) {
        return x.kind == y.kind && ((x.kind != I && x.kind != Istar) || x.n == y.n);
    }
};

// Accepts the output grammar of str(); throws ArgumentError otherwise.
KodairaType parse_kodaira(const std::string& s);

// c_p values a type can carry. For I_n this is {n, 1, 2}.
bool cp_allowed(const KodairaType& t, int cp);

}  // namespace kodaira
