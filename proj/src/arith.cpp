#include "kodaira/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace kodaira {

namespace {

constexpr unsigned long kTrialBound = 1000000;

std::vector<uint32_t> sieve(uint32_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = uint64_t(i) * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

bool miller_rabin(const Int& n, unsigned long base) {
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int a = base, x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Int nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

// Bases 2..41 are deterministic below this bound.
const Int& mr_bound() {
    static const Int b("3317044064679887385961981");
    return b;
}

class Deadline {
public:
    explicit Deadline(long ms) : on_(ms > 0) {
        if (on_) end_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    }
    bool passed() const { return on_ && std::chrono::steady_clock::now() > end_; }

private:
    bool on_;
    std::chrono::steady_clock::time_point end_;
};

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 on deadline.
Int brent(const Int& n, const Deadline& dl) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, ys, q = 1, g = 1, t;
        unsigned long r = 1;
        const unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    t = x - y;
                    q = q * abs(t) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
            if (dl.passed()) return 0;
        } while (g == 1);
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                t = x - ys;
                t = abs(t);
                mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const Int& n, std::map<Int, int>& out, const Deadline& dl) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int sq;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(sq.get_mpz_t(), n.get_mpz_t());
        split(sq, out, dl);
        split(sq, out, dl);
        return;
    }
    Int g = brent(n, dl);
    if (g == 0) throw FactorIncomplete(n);
    split(g, out, dl);
    split(Int(n / g), out, dl);
}

}  // namespace

int Valuation::value() const {
    if (inf_) throw ArgumentError("valuation is infinite");
    return v_;
}

Int Factorization::value() const {
    Int r = sign;
    for (auto& f : factors) r *= ipow(f.p, f.e);
    return r;
}

std::vector<Int> Factorization::primes() const {
    std::vector<Int> r;
    for (auto& f : factors) r.push_back(f.p);
    return r;
}

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> p = sieve(kTrialBound);
    return p;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
    }
    if (n < 1681) return true;
    if (n < mr_bound()) {
        for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul})
            if (!miller_rabin(n, b)) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

int val(const Int& n, unsigned long p) {
    if (sgn(n) == 0) return kInfVal;
    if (p == 2) return int(mpz_scan1(n.get_mpz_t(), 0));
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) return 0;
    Int t;
    Int pp = p;
    return int(mpz_remove(t.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

int val(const Int& n, const Int& p) {
    if (sgn(n) == 0) return kInfVal;
    if (mpz_fits_ulong_p(p.get_mpz_t())) return val(n, p.get_ui());
    if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return 0;
    Int t;
    return int(mpz_remove(t.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation vp(const Int& n, const Int& p) {
    if (!is_prime(p)) throw ArgumentError("vp: " + p.get_str() + " is not prime");
    if (sgn(n) == 0) return Valuation::infinity();
    return Valuation(val(n, p));
}

int legendre(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p)) throw ArgumentError("legendre: need an odd prime, got " + p.get_str());
    Int r = mod(a, p);
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (sgn(r) < 0) r += abs(m);
    return r;
}

long mod(const Int& a, long m) {
    return long(mpz_fdiv_ui(a.get_mpz_t(), (unsigned long)m));
}

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::vector<PrimePower> small_factors(Int& n, unsigned long bound) {
    std::vector<PrimePower> out;
    n = abs(n);
    if (n == 0) return out;
    for (uint32_t q : small_primes()) {
        if (q > bound) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            int e = 0;
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
                ++e;
            } while (mpz_divisible_ui_p(n.get_mpz_t(), q));
            out.push_back({Int(q), e});
        }
        if (n < Int(q) * q) break;
    }
    return out;
}

FactorOptions default_factor_options() {
    static const FactorOptions opt = [] {
        FactorOptions o;
        if (const char* s = std::getenv("LOCALDATA_FACTOR_TIMEOUT_MS")) o.timeout_ms = std::atol(s);
        return o;
    }();
    return opt;
}

Factorization factor(const Int& n, const FactorOptions& opt) {
    if (n == 0) throw ArgumentError("factor: zero");
    Factorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    f.factors = small_factors(m, kTrialBound);
    if (m > 1) {
        unsigned long last = small_primes().back();
        if (m < Int(last) * last) {
            f.factors.push_back({m, 1});
        } else {
            Deadline dl(opt.timeout_ms);
            std::map<Int, int> big;
            split(m, big, dl);
            for (auto& [p, e] : big) f.factors.push_back({p, e});
        }
    }
    std::sort(f.factors.begin(), f.factors.end(), [](auto& x, auto& y) { return x.p < y.p; });
    return f;
}

SquarefreeParts squarefree_decompose(const Int& n) {
    if (n <= 0) throw ArgumentError("squarefree_decompose: need n >= 1");
    SquarefreeParts r{1, 1};
    for (auto& [p, e] : factor(n).factors) {
        r.s *= ipow(p, e / 2);
        if (e % 2) r.t *= p;
    }
    return r;
}

CubefreeParts cubefree_decompose(const Int& n) {
    if (n <= 0) throw ArgumentError("cubefree_decompose: need n >= 1");
    CubefreeParts r{1, 1, 1};
    for (auto& [p, e] : factor(n).factors) {
        r.c *= ipow(p, e / 3);
        if (e % 3 == 2) r.d *= p;
        if (e % 3 == 1) r.e *= p;
    }
    return r;
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (auto& f : factor(n).factors)
        if (f.e > 1) return false;
    return true;
}

bool is_cubefree(const Int& n) {
    if (n == 0) return false;
    for (auto& f : factor(n).factors)
        if (f.e > 2) return false;
    return true;
}

}  // namespace kodaira
