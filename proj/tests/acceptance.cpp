// One line per criterion; exit status is the number of failures.
#include "kodaira/classify.hpp"
#include "kodaira/constructor.hpp"
#include "kodaira/io.hpp"
#include "kodaira/sweep.hpp"
#include "kodaira/tamagawa.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace kodaira;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void guarded(int n, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(n, false, std::string("exception: ") + e.what());
    }
}

void example_curve() {
    auto t0 = clock_type::now();
    WeierstrassModel e(0, 13440, 0, Int("-54296487559248001716600"), 0);
    GlobalMinimal g = global_minimal_discriminant(e);
    std::set<std::pair<long, int>> got;
    std::string shown;
    bool only_star = true;
    for (const auto& d : g.bad) {
        if (!d.type.is_additive()) continue;
        if (d.type.kind != KodairaType::Istar) only_star = false;
        got.insert({d.p.get_si(), d.type.n});
        shown += " " + d.p.get_str() + ":" + d.type.str();
    }
    double secs = seconds_since(t0);
    std::set<std::pair<long, int>> want{{2, 12}, {3, 7}, {5, 11}, {7, 8}};
    std::ostringstream o;
    o << "Example curve additive data" << shown << " in " << secs << " s";
    report(1, only_star && got == want && secs < 1.0, o.str());
    if (!only_star || got != want) {
        FamilySpec fam = construct(parse_prescription({"2=12", "3=7", "5=11", "7=8"}));
        std::ostringstream n;
        n << "  family form " << fam.str() << " " << build_curve(fam).str() << ":";
        for (const auto& d : global_minimal_discriminant(build_curve(fam)).bad)
            if (d.type.is_additive()) n << " " << d.p.get_str() << ":" << d.type.str();
        std::printf("%s\n", n.str().c_str());
    }
}

void intro_curve() {
    LocalData d = tate_local_data(WeierstrassModel(0, 1, 0, -20, 0), 2);
    LocalData t = classify({TorsionTag::C2xC4, 2, 1, 0}, 2);
    bool ok = d.type == KodairaType::Instar(1) && d.fp == 3 && d.cp == 4 && t.same_data(d) &&
              compute_invariants(family_ainvs({TorsionTag::C2xC4, 2, 1, 0})).j ==
                  compute_invariants({0, 1, 0, -20, 0}).j;
    report(2, ok,
           "(0,1,0,-20,0) at 2: engine " + d.type.str() + " f=" + std::to_string(d.fp) + " c=" +
               std::to_string(d.cp) + ", table " + t.type.str() + " f=" + std::to_string(t.fp) +
               " c=" + std::to_string(t.cp));
}

void three_torsion() {
    auto t0 = clock_type::now();
    bool ok = global_tamagawa(WeierstrassModel(0, 0, 1, 0, 0)).c == 1;
    auto fams = enumerate_c1_families(C1Kind::ThreeTorsionCubes, 1, 50);
    long n = 0;
    for (const auto& f : fams) {
        ++n;
        ok = ok && f.certificate.c == 1 && c1_3torsion(9 * f.k, 1).value;
    }
    double secs = seconds_since(t0);
    report(3, ok && n > 0 && secs < 10.0,
           "y^2+y=x^3 and " + std::to_string(n) + " cubes k<=50 have c=1 in " + std::to_string(secs) + " s");
}

void two_torsion() {
    bool ok = true;
    long fam = 0;
    for (long k = 0; k <= 100; ++k) {
        Int a = 2 * k + 1, d = a * a + 1;
        if (!is_squarefree(d)) continue;
        ++fam;
        WeierstrassModel e(0, 4 * k + 2, 0, -1, 0);
        ok = ok && global_tamagawa(e).c == 1;
    }
    long n = 0, bad = 0;
    for (long a = -25; a <= 25; ++a)
        for (long b = 1; b <= 25; ++b)
            for (long d = -10; d <= 10; ++d) {
                Int A = a, B = b, D = d;
                if (d == 0 || !is_squarefree(D < 0 ? Int(-D) : D) || !is_squarefree(gcd(A, B))) continue;
                if (B * B * D == A * A) continue;
                ++n;
                bool engine = global_tamagawa(WeierstrassModel(0, 2 * A, 0, A * A - B * B * D, 0)).c == 1;
                if (c1_2torsion(A, B, D).value != engine) ++bad;
            }
    report(4, ok && n >= 10000 && bad == 0,
           std::to_string(fam) + " quadratic-family curves with c=1; c1_2torsion vs engine on " +
               std::to_string(n) + " points, " + std::to_string(bad) + " disagreements");
}

void grid_criteria() {
    auto t0 = clock_type::now();
    SweepStats total;
    for (const auto& g : standard_grids(200, 200, 50)) {
        auto t1 = clock_type::now();
        SweepStats st = sweep_parallel(g);
        std::printf("  sweep %-7s specs=%ld cases=%ld %.1f s\n", tag_name(g.tag).c_str(), st.specs, st.cases,
                    seconds_since(t1));
        std::fflush(stdout);
        total.merge(st);
    }
    double secs = seconds_since(t0);
    for (const auto& f : total.failures)
        std::printf("  %s %s p=%s %s\n", f.kind.c_str(), f.spec.str().c_str(), f.p.get_str().c_str(),
                    f.detail.c_str());
    std::ostringstream o;
    o << "classify == tate on " << total.cases << " additive cases of " << total.specs << " specs: "
      << total.mismatches << " mismatches, " << total.coverage_errors << " coverage errors, "
      << total.non_minimal << " non-minimal models, " << secs << " s";
    report(5, total.mismatches == 0 && total.coverage_errors == 0 && total.non_minimal == 0 && secs < 600, o.str());
    report(6, total.papadopoulos_failures == 0,
           "conductor-table consistency: " + std::to_string(total.papadopoulos_failures) + " failures over " +
               std::to_string(total.cases) + " cases");
    report(7, total.even_star == 0 && total.conductor_bound == 0 && total.odd_IIstar == 0,
           "structure violations: even I_n*=" + std::to_string(total.even_star) + " f bound=" + std::to_string(total.conductor_bound) +
               " II* at odd p=" + std::to_string(total.odd_IIstar));
}

void prescriptions() {
    std::mt19937 rng(2024);
    const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    int ok = 0;
    for (int i = 0; i < 200; ++i) {
        Prescription p;
        int k = 1 + rng() % 11;
        for (int j = 0; j < k; ++j) {
            int q = primes[rng() % 11];
            int n = rng() % 13;
            while (q == 2 && n >= 1 && n <= 3) n = rng() % 13;
            p.set(q, n);
        }
        VerifyReport r = verify_prescription(p);
        if (r.ok())
            ++ok;
        else
            std::printf("  prescription %s failed\n", p.str().c_str());
    }
    report(8, ok == 200, std::to_string(ok) + "/200 random prescriptions verify");
}

void lmfdb_batch() {
    auto recs = ingest_batch(std::string(FIXTURE_DIR) + "/lmfdb_intro.csv", BatchFormat::Csv);
    auto res = run_batch(recs);
    int ones = 0;
    std::string labels;
    for (const auto& r : res) {
        if (r.report && r.report->c == 1 && r.status == "ok") ++ones;
        labels += " " + r.record.label.value_or("?");
    }
    report(9, recs.size() == 4 && ones == 4, std::to_string(ones) + "/4 labelled curves with c=1:" + labels);
}

void structural() {
    std::mt19937_64 rng(77);
    auto rnd = [&](long k) { return Int(static_cast<long>(rng() % (2 * k + 1)) - k); };
    auto model = [&](long k) {
        for (;;) {
            Ainvs a{rnd(k), rnd(k), rnd(k), rnd(k), rnd(k)};
            if (discriminant(a) != 0) return a;
        }
    };
    const int N = 10000;
    long bad_c = 0, bad_ogg = 0, bad_comp = 0, bad_j = 0, ogg_checks = 0;
    for (int i = 0; i < N; ++i) {
        Invariants iv = compute_invariants(model(100000), false);
        if (iv.c4 * iv.c4 * iv.c4 - iv.c6 * iv.c6 != 1728 * iv.disc) ++bad_c;
    }
    for (int i = 0; i < N; ++i) {
        Ainvs a = model(60);
        for (const auto& pp : factor(discriminant(a)).factors) {
            LocalData d = tate_unchecked(a, pp.p);
            ++ogg_checks;
            if (d.fp != d.vdelta_min + 1 - d.type.components()) ++bad_ogg;
        }
    }
    auto map = [&] {
        Rat u(static_cast<long>(rng() % 6) + 1, static_cast<long>(rng() % 4) + 1);
        u.canonicalize();
        if (rng() % 2) u = -u;
        return IsoMap{u, Rat(rnd(30)), Rat(rnd(6)), Rat(rnd(30))};
    };
    for (int i = 0; i < N; ++i) {
        RationalAinvs e = to_rational(model(80));
        IsoMap m1 = map(), m2 = map();
        if (transform_rational(transform_rational(e, m1), m2) != transform_rational(e, compose(m1, m2))) ++bad_comp;
    }
    for (int i = 0; i < N; ++i) {
        Ainvs a = model(80);
        IsoMap m = map();
        RationalAinvs e = transform_rational(to_rational(a), m);
        // j from the rational model: clear denominators with u = 1/lcm and compare
        Int l = 1;
        for (const Rat* x : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6}) l = lcm(l, Int(x->get_den()));
        IsoMap clear{Rat(1, 1) / Rat(l), 0, 0, 0};
        RationalAinvs f = transform_rational(e, clear);
        auto as_int = [](const Rat& q) { return Int(q.get_num()); };
        bool integral = true;
        for (const Rat* x : {&f.a1, &f.a2, &f.a3, &f.a4, &f.a6}) integral = integral && x->get_den() == 1;
        if (!integral) {
            ++bad_j;
            continue;
        }
        Ainvs b{as_int(f.a1), as_int(f.a2), as_int(f.a3), as_int(f.a4), as_int(f.a6)};
        if (compute_invariants(a).j != compute_invariants(b).j) ++bad_j;
    }
    std::ostringstream o;
    o << N << " models each: c4^3-c6^2=1728disc fails " << bad_c << ", Ogg fails " << bad_ogg << "/" << ogg_checks
      << ", composition fails " << bad_comp << ", j-invariance fails " << bad_j;
    report(10, bad_c == 0 && bad_ogg == 0 && bad_comp == 0 && bad_j == 0, o.str());
}

}  // namespace

int main() {
    guarded(1, example_curve);
    guarded(2, intro_curve);
    guarded(3, three_torsion);
    guarded(4, two_torsion);
    guarded(5, grid_criteria);
    guarded(8, prescriptions);
    guarded(9, lmfdb_batch);
    guarded(10, structural);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
