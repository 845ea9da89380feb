#include "kodaira/tamagawa.hpp"

#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kodaira {

GlobalReport global_tamagawa(const WeierstrassModel& e, const FactorOptions& opt) {
    GlobalMinimal g = global_minimal_discriminant(e, opt);
    GlobalReport r{e, 1, g.disc_min, 1, {}, std::nullopt};
    for (const auto& ld : g.bad) {
        r.c *= ld.cp;
        r.conductor *= ipow(ld.p, ld.fp);
        r.contributions.push_back({ld.p, ld.cp, ld.type, ld.fp});
    }
    return r;
}

GlobalReport global_tamagawa(const FamilySpec& s, const FactorOptions& opt) {
    GlobalReport r = global_tamagawa(build_curve(s, {.allow_d1 = true}), opt);
    r.torsion_hint = s.tag;
    return r;
}

WeierstrassModel three_torsion_model(const Int& a, int sigma) {
    if (sigma != 1 && sigma != -1) throw ArgumentError("sigma must be +1 or -1");
    Int a3 = a * a * a;
    return WeierstrassModel(Ainvs{a3, 0, sigma * a3 * a3, 0, 0});
}

namespace {

bool cong(const Int& x, const Int& r, const Int& m) {
    return mod(x - r, m) == 0;
}

Int pow3(unsigned long k) {
    return ipow(3, k);
}

}  // namespace

C1Result c1_3torsion(const Int& a, int sigma, ThreeTorsionRule rule, const FactorOptions& opt) {
    if (a < 1) throw ArgumentError("a must be positive");
    if (sigma != 1 && sigma != -1) throw ArgumentError("sigma must be +1 or -1");
    Int a3 = a * a * a;
    if (a3 == 27 * sigma) throw SingularCurve("a^3 = 27 sigma gives a singular curve");

    const bool literal = rule == ThreeTorsionRule::Literal;
    Int q = literal ? Int(sigma * (a3 - 27)) : Int(sigma * a3 - 27);
    Int w = literal ? Int(a3 * a3 - 27 * sigma * a) : Int(a3 * a3 - 27 * sigma * a3);

    C1Result res;
    res.value = true;
    if (sgn(q) == 0) {
        res.value = false;
        return res;
    }
    for (const auto& [p, v] : factor(q, opt).factors) {
        PrimeTrace t{p, v, "none", false};
        if (v <= 1) {
            t.rule = "v<=1";
            t.ok = true;
        } else if (v == 4 && (literal || p == 3)) {
            t.rule = "v=4";
            t.ok = true;
        } else if (p == 3 && v == 3) {
            t.rule = "p=3,v=3";
            t.ok = !cong(1 - sigma * a, -2, 9);
        } else if (p == 3 && v == 5) {
            t.rule = "p=3,v=5";
            t.ok = !cong(w, pow3(8), pow3(9));
        } else if (p == 3 && v == 6) {
            t.rule = "p=3,v=6";
            t.ok = cong(w, pow3(9), pow3(10));
        } else if (v % 2 == 1) {
            bool pok = literal ? (mod(p, 12L) == 5 || mod(p, 12L) == 11) : (p != 3 && mod(p, 3L) == 2);
            t.rule = literal ? "odd v, p=5,11 mod 12" : "odd v, p=2 mod 3";
            t.ok = pok;
        }
        if (!t.ok) res.value = false;
        res.trace.push_back(std::move(t));
    }
    return res;
}

C1Result c1_2torsion(const Int& a, const Int& b, const Int& d, const FactorOptions& opt) {
    if (sgn(b) == 0) throw ArgumentError("b must be nonzero");
    if (sgn(d) == 0 || !is_squarefree(abs(d))) throw ArgumentError("d must be squarefree");
    if (!is_squarefree(gcd(a, b))) throw ArgumentError("gcd(a,b) must be squarefree");
    Int t = b * b * d - a * a;
    if (sgn(t) == 0) throw SingularCurve("b^2 d = a^2 gives a singular curve");

    std::set<Int> primes{Int(2)};
    for (const Int& n : {Int(b), Int(d), t})
        for (const auto& pp : factor(n, opt).factors) primes.insert(pp.p);

    C1Result res;
    res.value = true;
    for (const Int& p : primes) {
        int va = val(a, p), vb = val(b, p), vd = val(d, p), vt = val(t, p);
        PrimeTrace tr{p, vb * 2 + vd + 2 * vt, "none", false};
        auto hit = [&](const char* id) {
            tr.rule = id;
            tr.ok = true;
        };
        if (p != 2) {
            if (vb == 0 && vd == 0 && vt == 0)
                hit("v(bd)=0,v(t)=0");
            else if (vb == 0 && vd == 1 && vt == 0)
                hit("v(b)=0,v(d)=1,v(t)=0");
            else if (vb >= 1 && vd == 1 && va == 0 && legendre(-a, p) == -1)
                hit("v(b)>=1,v(d)=1,v(a)=0,(-a/p)=-1");
        } else {
            long a8 = mod(a, 8L), a16 = mod(a, 16L), a32 = mod(a, 32L), a64 = mod(a, 64L);
            if (vb == 3 && vd == 0 && a64 == 31 && t == -1)
                hit("v(b)=3,v(d)=0,a=31(64),t=-1");
            else if (vb == 3 && vd == 1 && a64 == 63 && t == -1)
                hit("v(b)=3,v(d)=1,a=63(64),t=-1");
            else if (va == 0 && vb == 0 && vd == 1 && t == 1)
                hit("v(ab)=0,v(d)=1,t=1");
            else if (va > 0 && mod(d, 4L) == 3 && t == -1)
                hit("v(a)>0,d=3(4),t=-1");
            else if (vb == 1 && vd == 1 && a8 == 5 && t == -1)
                hit("v(b)=v(d)=1,a=5(8),t=-1");
            else if (vb == 2 && vd == 1 && a32 == 15 && t == -1)
                hit("v(b)=2,v(d)=1,a=15(32),t=-1");
            else if (va == 1 && vb == 1 && mod(t - 8 * a, 64L) == 32 && (t == 16 || t == -16))
                hit("v(a)=v(b)=1,t-8a=32(64),t=+-16");
            else if (vb == 1 && a16 == 10 && t == 16)
                hit("v(b)=1,a=10(16),t=16");
            else if (va == 1 && vb == 1 && a8 == 2 && (t == 256 || t == -256))
                hit("v(a)=v(b)=1,a=2(8),t=+-256");
        }
        if (!tr.ok) res.value = false;
        res.trace.push_back(std::move(tr));
    }
    return res;
}

C1Kind parse_c1_kind(const std::string& s) {
    if (s == "three-torsion-cubes") return C1Kind::ThreeTorsionCubes;
    if (s == "two-torsion-quadratic") return C1Kind::TwoTorsionQuadratic;
    throw ArgumentError("unknown family kind '" + s + "'");
}

std::string c1_kind_name(C1Kind k) {
    return k == C1Kind::ThreeTorsionCubes ? "three-torsion-cubes" : "two-torsion-quadratic";
}

std::vector<FamilyCurve> enumerate_c1_families(C1Kind kind, long k_lo, long k_hi, int jobs) {
    if (k_hi < k_lo) return {};
    if (kind == C1Kind::ThreeTorsionCubes && k_lo < 1) throw ArgumentError("k must be >= 1 for cubes");
    long n = k_hi - k_lo + 1;
    std::vector<std::optional<FamilyCurve>> slots(n);
    int threads = jobs > 0 ? jobs : 1;
#ifdef _OPENMP
    if (jobs <= 0) threads = omp_get_max_threads();
#endif
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < n; ++i) {
        long k = k_lo + i;
        Int K = k;
        FamilySpec s;
        if (kind == C1Kind::ThreeTorsionCubes) {
            if (!is_squarefree(abs(27 * K * K * K - 1))) continue;
            s = {TorsionTag::C3, 729 * K * K * K, 1, 0};
        } else {
            Int d = (2 * K + 1) * (2 * K + 1) + 1;
            if (!is_squarefree(d)) continue;
            s = {TorsionTag::C2, 2 * K + 1, 1, d};
        }
        slots[i] = FamilyCurve{k, s, global_tamagawa(s)};
    }
    std::vector<FamilyCurve> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

}  // namespace kodaira
