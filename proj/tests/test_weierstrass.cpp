#include "kodaira/weierstrass.hpp"

#include <doctest.h>

#include <random>

using namespace kodaira;

namespace {

Ainvs random_ainvs(std::mt19937_64& rng, long range) {
    auto r = [&] { return Int(static_cast<long>(rng() % (2 * range + 1)) - range); };
    return {r(), r(), r(), r(), r()};
}

IsoMap random_map(std::mt19937_64& rng) {
    auto r = [&](long k) { return Rat(static_cast<long>(rng() % (2 * k + 1)) - k); };
    Rat u = Rat(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3) + 1);
    u.canonicalize();
    if (rng() % 2) u = -u;
    return {u, r(20), r(5), r(20)};
}

}  // namespace

TEST_CASE("invariants of 11a3") {
    Invariants iv = compute_invariants({0, -1, 1, 0, 0});
    CHECK(iv.disc == -11);
    CHECK(iv.c4 == 16);
    CHECK(iv.c6 == -152);
    CHECK(iv.j == Rat(-4096, 11));
}

TEST_CASE("singular models are rejected") {
    CHECK_THROWS_AS(WeierstrassModel(0, 0, 0, 0, 0), SingularCurve);
    CHECK_THROWS_AS(WeierstrassModel(0, 0, 0, -3, 2), SingularCurve);
    CHECK_NOTHROW(WeierstrassModel(0, 1, 0, -20, 0));
}

TEST_CASE("c4^3 - c6^2 = 1728 disc on random models") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10000; ++i) {
        Invariants iv = compute_invariants(random_ainvs(rng, 1000), false);
        CHECK(iv.c4 * iv.c4 * iv.c4 - iv.c6 * iv.c6 == 1728 * iv.disc);
        CHECK(4 * iv.b8 == iv.b2 * iv.b6 - iv.b4 * iv.b4);
    }
}

TEST_CASE("transforms: composition, inverse, j and disc scaling") {
    std::mt19937_64 rng(2);
    int checked = 0;
    while (checked < 2000) {
        Ainvs a = random_ainvs(rng, 50);
        if (discriminant(a) == 0) continue;
        ++checked;
        IsoMap m1 = random_map(rng), m2 = random_map(rng);
        RationalAinvs e = to_rational(a);
        RationalAinvs step = transform_rational(transform_rational(e, m1), m2);
        CHECK(step == transform_rational(e, compose(m1, m2)));
        CHECK(transform_rational(transform_rational(e, m1), inverse(m1)) == e);
        CHECK(compose(m1, inverse(m1)) == IsoMap::identity());
    }
}

TEST_CASE("integral transforms keep j, scale disc by u^-12") {
    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 2000) {
        Ainvs a = random_ainvs(rng, 50);
        if (discriminant(a) == 0) continue;
        ++checked;
        auto r = [&](long k) { return Int(static_cast<long>(rng() % (2 * k + 1)) - k); };
        Int r0 = r(30), s0 = r(5), w0 = r(30);
        Ainvs b = a;
        translate(b, r0, s0, w0);
        IsoMap m{1, Rat(r0), Rat(s0), Rat(w0)};
        CHECK(transform_integral(a, m) == b);
        Invariants ia = compute_invariants(a), ib = compute_invariants(b);
        CHECK(ia.disc == ib.disc);
        CHECK(ia.j == ib.j);
        // scale down by u = 2 after a model with u^i | a_i
        Ainvs big{2 * a.a1, 4 * a.a2, 8 * a.a3, 16 * a.a4, 64 * a.a6};
        Ainvs small = transform_integral(big, {2, 0, 0, 0});
        CHECK(small == a);
        CHECK(discriminant(big) == discriminant(a) * ipow(Int(2), 12));
    }
}

TEST_CASE("non-integral image throws") {
    WeierstrassModel e(0, 0, 1, 0, 0);
    CHECK_THROWS_AS(transform(e, {2, 0, 0, 0}), NonIntegralTransform);
}
