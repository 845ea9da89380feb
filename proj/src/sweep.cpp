#include "kodaira/sweep.hpp"

#include "kodaira/classify.hpp"
#include "kodaira/papadopoulos.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kodaira {

namespace {

using T = TorsionTag;

bool full_two_torsion(T t) {
    return t == T::C2xC2 || t == T::C2xC4 || t == T::C2xC6;
}

bool even_order(T t) {
    switch (t) {
    case T::C2: case T::C4: case T::C6: case T::C8: case T::C10: case T::C12:
    case T::C2xC2: case T::C2xC4: case T::C2xC6:
        return true;
    default:
        return false;
    }
}

bool three_torsion(T t) {
    return t == T::C3zero || t == T::C3 || t == T::C6 || t == T::C9 || t == T::C12 || t == T::C2xC6;
}

std::string triple(const LocalData& d) {
    return d.type.str() + "," + std::to_string(d.fp) + "," + std::to_string(d.cp);
}

}  // namespace

std::vector<long> Grid::a_values() const {
    std::vector<long> v;
    for (long a = tag == T::C3zero ? 1 : -a_max; a <= a_max; ++a) v.push_back(a);
    return v;
}

std::vector<long> Grid::b_values() const {
    std::vector<long> v;
    if (!has_b(tag)) return {0};
    for (long b = tag == T::C2 ? 1 : -b_max; b <= b_max; ++b) v.push_back(b);
    return v;
}

std::vector<long> Grid::d_values() const {
    if (!has_d(tag)) return {0};
    std::vector<long> v;
    for (long d = tag == T::C2 ? -d_max : 1; d <= d_max; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(Int(d < 0 ? -d : d))) continue;
        v.push_back(d);
    }
    return v;
}

std::vector<Grid> standard_grids(long a_max, long b_max, long d_max) {
    std::vector<Grid> out;
    for (T t : kAllTags) out.push_back({t, a_max, b_max, d_max});
    return out;
}

void SweepStats::merge(const SweepStats& o) {
    specs += o.specs;
    cases += o.cases;
    mismatches += o.mismatches;
    coverage_errors += o.coverage_errors;
    papadopoulos_failures += o.papadopoulos_failures;
    non_minimal += o.non_minimal;
    even_star += o.even_star;
    conductor_bound += o.conductor_bound;
    odd_IIstar += o.odd_IIstar;
    for (const auto& [k, n] : o.row_hits) row_hits[k] += n;
    for (const auto& f : o.failures) {
        if (failures.size() >= kMaxFailures) break;
        failures.push_back(f);
    }
}

bool SweepStats::clean() const {
    return mismatches == 0 && coverage_errors == 0 && papadopoulos_failures == 0 && non_minimal == 0 &&
           even_star == 0 && conductor_bound == 0 && odd_IIstar == 0;
}

void check_spec(const FamilySpec& s, SweepStats& st) {
    if (violated_clause(s)) return;
    if (discriminant(family_ainvs(s)) == 0) return;
    ++st.specs;
    auto fail = [&](const char* kind, const Int& p, std::string detail) {
        if (st.failures.size() < SweepStats::kMaxFailures) st.failures.push_back({kind, s, p, std::move(detail)});
    };
    for (const auto& ap : additive_primes(s)) {
        const Int& p = ap.p;
        ++st.cases;
        auto rows = matching_rows(s, p);
        auto [model, map] = minimal_model_at(s, p);
        LocalData eng = tate_unchecked(model.ainvs(), p);
        if (eng.u_scale != 0) {
            ++st.non_minimal;
            fail("non-minimal", p, "u_scale=" + std::to_string(eng.u_scale));
        }
        if (rows.size() != 1) {
            ++st.coverage_errors;
            fail("coverage", p, std::to_string(rows.size()) + " rows fire");
        } else {
            const TableRow* r = rows.front();
            RowOutput o = r->out(make_context(s, p));
            ++st.row_hits[r->id];
            if (!(o.type == eng.type && o.fp == eng.fp && o.cp == eng.cp)) {
                ++st.mismatches;
                fail("mismatch", p,
                     std::string(r->id) + " table=" + o.type.str() + "," + std::to_string(o.fp) + "," +
                         std::to_string(o.cp) + " engine=" + triple(eng));
            }
        }
        if (!consistent(eng)) {
            ++st.papadopoulos_failures;
            fail("papadopoulos", p, triple(eng));
        }
        if (full_two_torsion(s.tag) && eng.type.kind == KodairaType::Istar && eng.type.n > 1 &&
            (eng.type.n % 2 != 0 || eng.cp != 4)) {
            ++st.even_star;
            fail("even-n-star", p, triple(eng));
        }
        if ((even_order(s.tag) && p != 2 && eng.fp > 2) || (three_torsion(s.tag) && p != 3 && eng.fp > 2)) {
            ++st.conductor_bound;
            fail("conductor-bound", p, triple(eng));
        }
        if (p != 2 && eng.type.kind == KodairaType::IIstar) {
            ++st.odd_IIstar;
            fail("IIstar-at-odd-p", p, triple(eng));
        }
    }
}

SweepStats sweep_row(const Grid& g, long a) {
    SweepStats st;
    const auto bs = g.b_values();
    const auto ds = g.d_values();
    for (long b : bs)
        for (long d : ds) check_spec({g.tag, a, b, d}, st);
    return st;
}

SweepStats sweep_serial(const Grid& g) {
    SweepStats st;
    for (long a : g.a_values()) st.merge(sweep_row(g, a));
    return st;
}

SweepStats sweep_parallel(const Grid& g, int jobs) {
    const auto as = g.a_values();
    std::vector<SweepStats> parts(as.size());
    int threads = jobs > 0 ? jobs : 1;
#ifdef _OPENMP
    if (jobs <= 0) threads = omp_get_max_threads();
#endif
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < static_cast<long>(as.size()); ++i) parts[i] = sweep_row(g, as[i]);
    SweepStats st;
    for (const auto& p : parts) st.merge(p);
    return st;
}

}  // namespace kodaira
