#include "kodaira/tamagawa.hpp"

#include <doctest.h>

using namespace kodaira;

using T = TorsionTag;

TEST_CASE("global Tamagawa numbers") {
    CHECK(global_tamagawa(WeierstrassModel(0, 0, 1, 0, 0)).c == 1);
    CHECK(global_tamagawa(WeierstrassModel(1, 0, 1, 0, 0)).c == 1);
    // 3 | c when p | a for C3zero
    GlobalReport r = global_tamagawa(FamilySpec{T::C3zero, 2, 0, 0});
    CHECK(r.c % 3 == 0);
    CHECK(r.torsion_hint == T::C3zero);
    GlobalReport e = global_tamagawa(WeierstrassModel(0, -1, 1, -10, -20));
    CHECK(e.c == 5);
    CHECK(e.conductor == 11);
    CHECK(e.disc_min == -161051);
}

TEST_CASE("c is the product of the contributions") {
    for (long a = 1; a < 40; ++a)
        for (long b = 1; b < 10; ++b) {
            FamilySpec s{T::C5, a, b, 0};
            if (violated_clause(s) || discriminant(family_ainvs(s)) == 0) continue;
            GlobalReport g = global_tamagawa(s);
            Int prod = 1, cond = 1;
            for (const auto& c : g.contributions) {
                prod *= c.cp;
                cond *= ipow(c.p, c.fp);
            }
            CHECK(prod == g.c);
            CHECK(cond == g.conductor);
        }
}

TEST_CASE("three-torsion criterion") {
    CHECK(c1_3torsion(1, 1).value);
    CHECK_THROWS_AS(c1_3torsion(3, 1), SingularCurve);
    CHECK_THROWS_AS(c1_3torsion(0, 1), ArgumentError);
    CHECK_THROWS_AS(c1_3torsion(2, 0), ArgumentError);
    for (long k = 1; k <= 20; ++k) {
        Int K = k;
        if (!is_squarefree(27 * K * K * K - 1)) continue;
        CHECK(c1_3torsion(9 * K, 1).value);
    }
}

TEST_CASE("three-torsion criterion agrees with the engine") {
    long bad = 0;
    for (long a = 1; a <= 300; ++a)
        for (int s : {1, -1}) {
            if (a == 3 && s == 1) continue;
            bool want = global_tamagawa(three_torsion_model(a, s)).c == 1;
            if (c1_3torsion(a, s).value != want) ++bad;
        }
    CHECK(bad == 0);
}

TEST_CASE("literal rule rejects a curve with c = 1") {
    // a = 11: a^3 - 27 = 1304 = 2^3 * 163, and c = 1
    CHECK(global_tamagawa(three_torsion_model(11, 1)).c == 1);
    CHECK(c1_3torsion(11, 1).value);
    CHECK_FALSE(c1_3torsion(11, 1, ThreeTorsionRule::Literal).value);
}

TEST_CASE("two-torsion criterion") {
    auto r = c1_2torsion(1, 1, 2);
    CHECK(r.value);
    bool row = false;
    for (const auto& t : r.trace) row = row || (t.p == 2 && t.rule == "v(ab)=0,v(d)=1,t=1");
    CHECK(row);
    // odd p | gcd(a, bd)
    CHECK_FALSE(c1_2torsion(3, 1, 3).value);
    for (long k = 0; k <= 20; ++k) {
        Int a = 2 * k + 1, d = a * a + 1;
        if (is_squarefree(d)) CHECK(c1_2torsion(a, 1, d).value);
    }
    CHECK_THROWS_AS(c1_2torsion(1, 0, 2), ArgumentError);
    CHECK_THROWS_AS(c1_2torsion(1, 1, 4), ArgumentError);
    CHECK_THROWS_AS(c1_2torsion(1, 1, 1), SingularCurve);
}

TEST_CASE("two-torsion criterion agrees with the engine") {
    long n = 0, bad = 0;
    for (long a = -30; a <= 30; ++a)
        for (long b = 1; b <= 30; ++b)
            for (long d = -15; d <= 15; ++d) {
                Int A = a, B = b, D = d;
                if (d == 0 || !is_squarefree(D < 0 ? Int(-D) : D) || !is_squarefree(gcd(A, B))) continue;
                if (B * B * D == A * A) continue;
                ++n;
                bool want = global_tamagawa(FamilySpec{T::C2, A, B, D}).c == 1;
                if (c1_2torsion(A, B, D).value != want) ++bad;
            }
    CHECK(n > 10000);
    CHECK(bad == 0);
}

TEST_CASE("c = 1 families") {
    auto cubes = enumerate_c1_families(C1Kind::ThreeTorsionCubes, 1, 12, 2);
    REQUIRE_FALSE(cubes.empty());
    CHECK(cubes.front().k == 1);
    CHECK(cubes.front().spec == FamilySpec{T::C3, 729, 1, 0});
    for (const auto& f : cubes) CHECK(f.certificate.c == 1);
    auto quad = enumerate_c1_families(C1Kind::TwoTorsionQuadratic, 0, 12, 1);
    REQUIRE_FALSE(quad.empty());
    CHECK(quad.front().k == 0);
    CHECK(quad.front().certificate.curve.ainvs() == Ainvs{0, 2, 0, -1, 0});
    for (const auto& f : quad) CHECK(f.certificate.c == 1);
    // k = 7: 2k^2 + 2k + 1 = 113, squarefree; k = 3: 25, not
    bool has3 = false;
    for (const auto& f : quad) has3 = has3 || f.k == 3;
    CHECK_FALSE(has3);
    CHECK(parse_c1_kind(c1_kind_name(C1Kind::TwoTorsionQuadratic)) == C1Kind::TwoTorsionQuadratic);
    CHECK_THROWS_AS(parse_c1_kind("other"), ArgumentError);
}

TEST_CASE("parallel enumeration keeps order") {
    auto a = enumerate_c1_families(C1Kind::ThreeTorsionCubes, 1, 15, 1);
    auto b = enumerate_c1_families(C1Kind::ThreeTorsionCubes, 1, 15, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].k == b[i].k);
        CHECK(a[i].certificate.c == b[i].certificate.c);
    }
}
