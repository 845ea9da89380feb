#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kodaira {

using Int = mpz_class;
using Rat = mpq_class;

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when factorization gives up before completing.
struct FactorIncomplete : std::runtime_error {
    Int unfactored;
    explicit FactorIncomplete(const Int& n)
        : std::runtime_error("factorization incomplete: " + n.get_str()), unfactored(n) {}
};

// p-adic valuation; infinite only for 0.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(int v) : v_(v) {}
    static constexpr Valuation infinity() {
        Valuation r;
        r.inf_ = true;
        return r;
    }

    bool is_infinite() const { return inf_; }
    int value() const;  // throws on infinity
    bool at_least(int k) const { return inf_ || v_ >= k; }
    bool equals(int k) const { return !inf_ && v_ == k; }
    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

    friend bool operator==(const Valuation& x, const Valuation& y) {
        return x.inf_ == y.inf_ && (x.inf_ || x.v_ == y.v_);
    }

private:
    int v_ = 0;
    bool inf_ = false;
};

struct PrimePower {
    Int p;
    int e;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    Int value() const;
    std::vector<Int> primes() const;
};

bool is_prime(const Int& n);

// Public, prime-checked.
Valuation vp(const Int& n, const Int& p);

// Hot-path valuation without the primality check. Returns kInfVal for 0.
constexpr int kInfVal = 1 << 28;
int val(const Int& n, const Int& p);
int val(const Int& n, unsigned long p);

int legendre(const Int& a, const Int& p);

// Mathematical residue in [0, m).
Int mod(const Int& a, const Int& m);
long mod(const Int& a, long m);

struct SquarefreeParts {
    Int s, t;  // n = s^2 t
};
struct CubefreeParts {
    Int c, d, e;  // n = c^3 d^2 e
};

SquarefreeParts squarefree_decompose(const Int& n);
CubefreeParts cubefree_decompose(const Int& n);
bool is_squarefree(const Int& n);
bool is_cubefree(const Int& n);

struct FactorOptions {
    // <= 0 means no limit.
    long timeout_ms = 0;
};

// Reads LOCALDATA_FACTOR_TIMEOUT_MS once.
FactorOptions default_factor_options();

Factorization factor(const Int& n, const FactorOptions& opt = default_factor_options());

// Trial-division-only helper: primes of n below the bound, and the cofactor.
std::vector<PrimePower> small_factors(Int& n, unsigned long bound);

const std::vector<uint32_t>& small_primes();

Int ipow(const Int& b, unsigned long e);
Int gcd(const Int& a, const Int& b);

}  // namespace kodaira
