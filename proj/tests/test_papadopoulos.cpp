#include "kodaira/papadopoulos.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace kodaira;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("triplet of the intro curve at 2") {
    LocalData d = tate_local_data(WeierstrassModel(0, 1, 0, -20, 0), 2);
    Triplet t = triplet_of(d.minimal_model, 2);
    CHECK(t.vdelta == d.vdelta_min);
    CHECK(consistent(d));
    auto lr = lookup(2, t);
    CHECK_FALSE(lr.candidates.empty());
    bool seen = false;
    for (const auto& c : lr.candidates) seen = seen || (c.type == d.type && c.fp == d.fp);
    CHECK(seen);
}

TEST_CASE("p >= 5 triplets determine the type") {
    // y^2 = x^3 + 5: v(c4) = inf, v(c6) = 1, v(disc) = 2 at 5
    LocalData d = tate_local_data(WeierstrassModel(0, 0, 0, 0, 5), 5);
    Triplet t = triplet_of(d.minimal_model, 5);
    auto inv = compute_invariants(d.minimal_model);
    Resolution r = resolve(5, t, inv.c4, inv.c6);
    CHECK(r.determined);
    CHECK(r.type == d.type);
    CHECK(r.fp == d.fp);
}

TEST_CASE("every reference row is consistent with the tables") {
    std::ifstream in(std::string(FIXTURE_DIR) + "/tate_reference.csv");
    REQUIRE(in);
    std::string line;
    std::getline(in, line);
    long n = 0, bad = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string f[6];
        for (auto& x : f) std::getline(ss, x, ',');
        LocalData d = tate_unchecked({Int(f[0]), Int(f[1]), Int(f[2]), Int(f[3]), Int(f[4])}, Int(f[5]));
        if (!d.type.is_additive()) continue;
        ++n;
        if (!consistent(d)) ++bad;
    }
    CHECK(n > 1000);
    CHECK(bad == 0);
}

TEST_CASE("row dump is frozen") {
    std::string want = slurp(std::string(FIXTURE_DIR) + "/tables/papadopoulos.csv");
    CHECK(dump_tables_csv() == want);
}
