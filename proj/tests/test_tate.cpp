#include "kodaira/tate.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace kodaira;

namespace {

struct RefRow {
    Ainvs a;
    Int p;
    std::string type;
    int f, c;
};

std::vector<RefRow> reference() {
    std::ifstream in(std::string(FIXTURE_DIR) + "/tate_reference.csv");
    REQUIRE(in);
    std::vector<RefRow> rows;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string f[9];
        for (auto& x : f) std::getline(ss, x, ',');
        rows.push_back({{Int(f[0]), Int(f[1]), Int(f[2]), Int(f[3]), Int(f[4])}, Int(f[5]), f[6], std::stoi(f[7]),
                        std::stoi(f[8])});
    }
    return rows;
}

}  // namespace

TEST_CASE("intro curve at 2") {
    WeierstrassModel e(0, 1, 0, -20, 0);
    LocalData d = tate_local_data(e, 2);
    CHECK(d.type == KodairaType::Instar(1));
    CHECK(d.fp == 3);
    CHECK(d.cp == 4);
}

TEST_CASE("small examples") {
    LocalData d = tate_local_data(WeierstrassModel(0, -1, 1, 0, 0), 11);
    CHECK(d.type == KodairaType::In(1));
    CHECK(d.cp == 1);
    CHECK(d.fp == 1);
    d = tate_local_data(WeierstrassModel(0, 0, 1, 0, 0), 3);
    CHECK(d.type == KodairaType::of(KodairaType::II));
    CHECK(d.fp == 3);
    // 11a3 scaled by u = 2: good at 2 after one rescale
    d = tate_local_data(WeierstrassModel(0, -1 * 4, 8, 0, 0), 2);
    CHECK(d.type.is_good());
    CHECK(d.u_scale == 1);
    d = tate_local_data(WeierstrassModel(0, -1 * 25, 125, 0, 0), 5);
    CHECK(d.u_scale == 1);
    CHECK(d.type.is_good());
    CHECK_THROWS_AS(tate_local_data(WeierstrassModel(0, 1, 0, -20, 0), 4), ArgumentError);
}

TEST_CASE("agreement with the reference fixture") {
    auto rows = reference();
    CHECK(rows.size() > 20000);
    long bad = 0;
    for (const auto& r : rows) {
        LocalData d = tate_unchecked(r.a, r.p);
        bool ok = d.type.str() == r.type && d.fp == r.f && d.cp == r.c;
        if (!ok && ++bad <= 5)
            MESSAGE(WeierstrassModel(r.a).str() << " p=" << r.p << " got " << d.type.str() << " f=" << d.fp
                                                << " c=" << d.cp << " want " << r.type << " " << r.f << " " << r.c);
    }
    CHECK(bad == 0);
}

TEST_CASE("Ogg relation on the reference fixture") {
    auto rows = reference();
    long bad = 0;
    for (const auto& r : rows) {
        LocalData d = tate_unchecked(r.a, r.p);
        if (d.fp != d.vdelta_min + 1 - d.type.components()) ++bad;
        if (!cp_allowed(d.type, d.cp)) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("minimal model is reported and has the minimal valuation") {
    WeierstrassModel e(0, -25, 125, 0, 0);
    LocalData d = tate_local_data(e, 5);
    CHECK(val(discriminant(d.minimal_model), 5) == d.vdelta_min);
}

TEST_CASE("global minimal discriminant") {
    GlobalMinimal g = global_minimal_discriminant(WeierstrassModel(0, -4, 8, 0, 0));
    CHECK(g.disc_min == -11);
    REQUIRE(g.bad.size() == 1);
    CHECK(g.bad[0].p == 11);
}

TEST_CASE("I_n* fast path agrees with the loop") {
    long hits = 0;
    for (int p : {2, 3, 5, 7})
        for (int n = 1; n <= 6; ++n)
            for (int u = 1; u < 4; ++u)
                for (int v = -3; v <= 3; ++v)
                    for (int w = -3; w <= 3; ++w) {
                        Int P = p;
                        Ainvs a{0, P * u, w * ipow(P, (n + 4) / 2), v * ipow(P, (n + 5) / 2), w * ipow(P, n + 3)};
                        if (discriminant(a) == 0) continue;
                        WeierstrassModel e(a);
                        auto fast = lemma_in_fastpath(e, P, n);
                        if (!fast) continue;
                        ++hits;
                        CHECK(fast->same_data(tate_local_data(e, P)));
                    }
    CHECK(hits > 100);
}

TEST_CASE("quadratic and cubic root helpers") {
    CHECK(quadratic_has_root(1, 1, 0, 2));
    CHECK_FALSE(quadratic_has_root(1, 1, 1, 2));
    CHECK(quadratic_has_root(1, 0, -2, 7));
    CHECK_FALSE(quadratic_has_root(1, 0, -3, 7));
    CHECK(cubic_root_count(0, 0, -1, 7) == 3);
    CHECK(cubic_root_count(0, 0, -2, 7) == 0);
    CHECK(cubic_root_count(0, -1, 0, 5) == 3);
}
