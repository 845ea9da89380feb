#include "kodaira/papadopoulos.hpp"

#include <sstream>

namespace kodaira {

namespace {

constexpr int kOpen = -1;

struct Cell {
    int lo, hi;  // hi == kOpen: at least lo

    bool matches(const Valuation& v) const {
        if (v.is_infinite()) return hi == kOpen;
        int x = v.value();
        return x >= lo && (hi == kOpen || x <= hi);
    }
    bool matches(int x) const { return x >= lo && (hi == kOpen || x <= hi); }
    std::string str() const {
        if (hi == kOpen) return lo == 0 ? "any" : ">=" + std::to_string(lo);
        return std::to_string(lo);
    }
};

constexpr Cell eq(int v) { return {v, v}; }
constexpr Cell ge(int v) { return {v, kOpen}; }

enum class PClass { Two, Three, FiveUp, ThreeUp, Any };

struct Row {
    const char* id;
    PClass pc;
    KodairaType::Kind kind;
    int n;     // fixed n for I/Istar, or -1 when n is read off vdelta
    int nmin;  // for parametrized rows
    Cell c4, c6;
    int vd;  // fixed v(Delta), or the offset when n == -1
    const char* cps;
    int max_step;
    Tiebreak tb;
    int f;
    const char* printed;  // original entry when it differs from the encoding
};

using K = KodairaType;
constexpr Tiebreak TN = Tiebreak::None;

// clang-format off
const Row kRows[] = {
    // p = 2
    {"T10.II.1",   PClass::Two, K::II, 0, 0, ge(4), eq(5), 4,  "1", 5, TN, 4, ""},
    {"T10.II.2",   PClass::Two, K::II, 0, 0, eq(4), ge(6), 6,  "1", 4, TN, 6, ""},
    {"T10.II.3",   PClass::Two, K::II, 0, 0, eq(4), eq(6), 7,  "1", 0, TN, 7, ""},
    {"T10.II.4",   PClass::Two, K::II, 0, 0, ge(5), eq(6), 6,  "1", 0, TN, 6, ""},
    {"T10.III.1",  PClass::Two, K::III, 0, 0, eq(4), eq(5), 4, "2", 5, TN, 3, ""},
    {"T10.III.2",  PClass::Two, K::III, 0, 0, eq(5), eq(5), 4, "2", 4, TN, 3, ""},
    {"T10.III.3",  PClass::Two, K::III, 0, 0, eq(4), ge(6), 6, "2", 4, TN, 5, ""},
    {"T10.III.4",  PClass::Two, K::III, 0, 0, eq(5), eq(7), 8, "2", 0, TN, 7, ""},
    {"T10.III.5",  PClass::Two, K::III, 0, 0, eq(5), ge(8), 9, "2", 0, TN, 8, ""},
    {"T10.IV.1",   PClass::Two, K::IV, 0, 0, eq(4), eq(5), 4,  "1,3", 5, TN, 2, ""},
    {"T10.IV.2",   PClass::Two, K::IV, 0, 0, ge(6), eq(5), 4,  "1,3", 5, TN, 2, ""},
    {"T10.I0*.1",  PClass::Two, K::Istar, 0, 0, eq(4), eq(6), 8,  "1,2", 8, TN, 4, ""},
    {"T10.I0*.2",  PClass::Two, K::Istar, 0, 0, ge(6), eq(7), 8,  "1,2", 8, TN, 4, ""},
    {"T10.I0*.3",  PClass::Two, K::Istar, 0, 0, eq(4), eq(6), 9,  "1,2", 0, TN, 5, ""},
    {"T10.I0*.4",  PClass::Two, K::Istar, 0, 0, ge(6), eq(8), 10, "1,2", 0, TN, 6, ""},
    {"T10.I1*.1",  PClass::Two, K::Istar, 1, 0, eq(4), eq(6), 8,  "2,4", 8, TN, 3, ""},
    {"T10.I1*.2",  PClass::Two, K::Istar, 1, 0, eq(6), eq(7), 8,  "2,4", 7, TN, 3, ""},
    {"T10.I2*.1",  PClass::Two, K::Istar, 2, 0, eq(4), eq(6), 10, "2,4", 9, TN, 4, ""},
    {"T10.I2*.2",  PClass::Two, K::Istar, 2, 0, eq(6), ge(9), 12, "2,4", 7, TN, 6, ""},
    {"T10.I2*.3",  PClass::Two, K::Istar, 2, 0, eq(6), eq(9), 13, "2,4", 0, TN, 7, ""},
    {"T10.I3*.1",  PClass::Two, K::Istar, 3, 0, eq(4), eq(6), 11, "2,4", 10, TN, 4, ""},
    {"T10.I3*.2",  PClass::Two, K::Istar, 3, 0, eq(6), ge(9), 12, "2,4", 7, TN, 5, ""},
    {"T10.In*.1",  PClass::Two, K::Istar, -1, 4, eq(4), eq(6), 8,  "2,4", 0, TN, 4, ""},
    {"T10.In*.2",  PClass::Two, K::Istar, -1, 4, eq(6), eq(9), 10, "2,4", 0, TN, 6, ""},
    {"T10.IV*.1",  PClass::Two, K::IVstar, 0, 0, eq(4), eq(6), 8,  "1,3", 8, TN, 2, ""},
    {"T10.IV*.2",  PClass::Two, K::IVstar, 0, 0, ge(7), eq(7), 8,  "1,3", 8, TN, 2, ""},
    {"T10.III*.1", PClass::Two, K::IIIstar, 0, 0, eq(4), eq(6), 10,  "2", 9, TN, 3, ""},
    {"T10.III*.2", PClass::Two, K::IIIstar, 0, 0, eq(7), eq(9), 12,  "2", 0, TN, 5, ""},
    {"T10.III*.3", PClass::Two, K::IIIstar, 0, 0, eq(7), eq(10), 14, "2", 0, TN, 7, ""},
    {"T10.III*.4", PClass::Two, K::IIIstar, 0, 0, eq(7), ge(11), 15, "2", 0, TN, 8, ""},
    {"T10.II*.1",  PClass::Two, K::IIstar, 0, 0, eq(4), eq(6), 11,  "1", 10, TN, 3, ""},
    {"T10.II*.2",  PClass::Two, K::IIstar, 0, 0, ge(8), eq(9), 12,  "1", 0, TN, 4, ""},
    {"T10.II*.3",  PClass::Two, K::IIstar, 0, 0, ge(8), eq(10), 14, "1", 0, TN, 6, ""},

    // p >= 3
    {"T11.II.1",   PClass::Three, K::II, 0, 0, ge(2), eq(3), 3, "1", 0, Tiebreak::P3_low_fails, 3, ""},
    {"T11.II.2",   PClass::Three, K::II, 0, 0, eq(2), eq(4), 3, "1", 0, TN, 3, ""},
    {"T11.II.3",   PClass::Three, K::II, 0, 0, eq(2), eq(3), 4, "1", 0, TN, 4, ""},
    {"T11.II.4",   PClass::Three, K::II, 0, 0, ge(3), eq(4), 5, "1", 0, TN, 5, ""},
    {"T11.II.5",   PClass::FiveUp, K::II, 0, 0, ge(1), eq(1), 2, "1", 0, TN, 2, ""},
    {"T11.III.1",  PClass::Three, K::III, 0, 0, ge(2), eq(3), 3, "2", 0, Tiebreak::P3_low_holds, 2, ""},
    {"T11.III.2",  PClass::Three, K::III, 0, 0, eq(2), ge(5), 3, "2", 0, TN, 2, ""},
    {"T11.III.3",  PClass::FiveUp, K::III, 0, 0, eq(1), ge(2), 3, "2", 0, TN, 2, ""},
    {"T11.IV.1",   PClass::Three, K::IV, 0, 0, eq(2), eq(3), 5, "1,3", 0, TN, 3, ""},
    {"T11.IV.2",   PClass::Three, K::IV, 0, 0, eq(3), eq(5), 6, "1,3", 0, TN, 4, ""},
    {"T11.IV.3",   PClass::Three, K::IV, 0, 0, ge(4), eq(5), 7, "1,3", 0, TN, 5, ""},
    {"T11.IV.4",   PClass::FiveUp, K::IV, 0, 0, ge(2), eq(2), 4, "1,3", 0, TN, 2, ""},
    {"T11.I0*.1",  PClass::Three, K::Istar, 0, 0, eq(2), eq(3), 6, "1,2,4", 0, TN, 2, ""},
    {"T11.I0*.2",  PClass::Three, K::Istar, 0, 0, eq(3), ge(6), 6, "1,2,4", 0, TN, 2, ""},
    {"T11.I0*.3",  PClass::FiveUp, K::Istar, 0, 0, eq(2), ge(3), 6, "1,2,4", 0, TN, 2, ""},
    {"T11.I0*.4",  PClass::FiveUp, K::Istar, 0, 0, ge(2), eq(3), 6, "1,2,4", 0, TN, 2, ""},
    {"T11.In*.1",  PClass::ThreeUp, K::Istar, -1, 1, eq(2), eq(3), 6, "2,4", 0, TN, 2, ""},
    {"T11.IV*.1",  PClass::Three, K::IVstar, 0, 0, ge(4), eq(6), 9, "1,3", 0, Tiebreak::P3_high_fails, 3, ""},
    {"T11.IV*.2",  PClass::Three, K::IVstar, 0, 0, eq(4), eq(7), 9, "1,3", 0, TN, 3, ""},
    {"T11.IV*.3",  PClass::Three, K::IVstar, 0, 0, eq(4), eq(6), 10, "1,3", 0, TN, 4, ""},
    {"T11.IV*.4",  PClass::Three, K::IVstar, 0, 0, ge(5), eq(7), 11, "1,3", 0, TN, 5, ""},
    {"T11.IV*.5",  PClass::FiveUp, K::IVstar, 0, 0, ge(3), eq(4), 8, "1,3", 0, TN, 2, ""},
    {"T11.III*.1", PClass::Three, K::IIIstar, 0, 0, ge(4), eq(6), 9, "2", 0, Tiebreak::P3_high_holds, 2, "II*"},
    {"T11.III*.2", PClass::Three, K::IIIstar, 0, 0, eq(4), ge(8), 9, "2", 0, TN, 2, "II*"},
    {"T11.III*.3", PClass::FiveUp, K::IIIstar, 0, 0, eq(3), ge(5), 9, "2", 0, TN, 2, "II*"},
    {"T11.II*.1",  PClass::Three, K::IIstar, 0, 0, eq(4), eq(6), 11, "1", 0, TN, 3, ""},
    {"T11.II*.2",  PClass::Three, K::IIstar, 0, 0, eq(5), eq(8), 12, "1", 0, TN, 4, ""},
    {"T11.II*.3",  PClass::Three, K::IIstar, 0, 0, ge(6), eq(8), 13, "1", 0, TN, 5, ""},
    {"T11.II*.4",  PClass::FiveUp, K::IIstar, 0, 0, ge(4), eq(5), 10, "1", 0, TN, 2, ""},

    // Semistable rows; not part of the additive tables.
    {"S.I0", PClass::Any, K::I, 0, 0, ge(0), ge(0), 0, "1", 0, TN, 0, ""},
    {"S.In", PClass::Any, K::I, -1, 1, eq(0), eq(0), 0, "", 0, TN, 1, ""},
};
// clang-format on

bool pclass_matches(PClass pc, const Int& p) {
    switch (pc) {
        case PClass::Two: return p == 2;
        case PClass::Three: return p == 3;
        case PClass::FiveUp: return p >= 5;
        case PClass::ThreeUp: return p >= 3;
        case PClass::Any: return true;
    }
    return false;
}

const char* pclass_str(PClass pc) {
    switch (pc) {
        case PClass::Two: return "2";
        case PClass::Three: return "3";
        case PClass::FiveUp: return ">=5";
        case PClass::ThreeUp: return ">=3";
        case PClass::Any: return "any";
    }
    return "?";
}

std::vector<int> parse_cps(const char* s) {
    std::vector<int> out;
    int cur = 0;
    bool any = false;
    for (const char* c = s;; ++c) {
        if (*c >= '0' && *c <= '9') {
            cur = cur * 10 + (*c - '0');
            any = true;
        } else {
            if (any) out.push_back(cur);
            cur = 0;
            any = false;
            if (!*c) break;
        }
    }
    return out;
}

const char* tiebreak_text(Tiebreak t) {
    switch (t) {
        case Tiebreak::None: return "";
        case Tiebreak::P3_low_holds: return "(c6/27)^2+2 == c4/3 mod 9";
        case Tiebreak::P3_low_fails: return "(c6/27)^2+2 != c4/3 mod 9";
        case Tiebreak::P3_high_holds: return "(c6/3^6)^2+2 == c4/27 mod 9";
        case Tiebreak::P3_high_fails: return "(c6/3^6)^2+2 != c4/27 mod 9";
    }
    return "";
}

bool tiebreak_holds(Tiebreak t, const Int& c4, const Int& c6) {
    if (t == Tiebreak::None) return true;
    bool low = (t == Tiebreak::P3_low_holds || t == Tiebreak::P3_low_fails);
    Int q6 = c6 / (low ? 27 : 729);
    Int q4 = c4 / (low ? 3 : 27);
    bool eqv = mod(Int(q6 * q6 + 2 - q4), 9L) == 0;
    bool want = (t == Tiebreak::P3_low_holds || t == Tiebreak::P3_high_holds);
    return eqv == want;
}

}  // namespace

std::string Triplet::str() const {
    return "(" + vc4.str() + "," + vc6.str() + "," + std::to_string(vdelta) + ")";
}

Triplet triplet_of(const Ainvs& minimal, const Int& p) {
    Invariants inv = compute_invariants(minimal, false);
    Triplet t;
    t.vc4 = sgn(inv.c4) == 0 ? Valuation::infinity() : Valuation(val(inv.c4, p));
    t.vc6 = sgn(inv.c6) == 0 ? Valuation::infinity() : Valuation(val(inv.c6, p));
    t.vdelta = val(inv.disc, p);
    return t;
}

LookupResult lookup(const Int& p, const Triplet& t) {
    LookupResult res;
    for (const Row& r : kRows) {
        if (!pclass_matches(r.pc, p) || !r.c4.matches(t.vc4) || !r.c6.matches(t.vc6)) continue;
        int n = r.n;
        if (r.n < 0) {
            n = t.vdelta - r.vd;
            if (n < r.nmin) continue;
        } else if (t.vdelta != r.vd) {
            continue;
        }
        Candidate c;
        c.type = {r.kind, n};
        c.fp = r.f;
        c.cps = parse_cps(r.cps);
        c.row_id = r.id;
        c.tiebreak = r.tb;
        c.max_step = r.max_step;
        if (r.tb != Tiebreak::None) res.tiebreak = tiebreak_text(r.tb);
        res.max_step = std::max(res.max_step, r.max_step);
        res.candidates.push_back(std::move(c));
    }
    if (res.candidates.empty()) throw TableGap("no table row for p=" + p.get_str() + " triplet " + t.str());
    return res;
}

Resolution resolve(const Int& p, const Triplet& t, const Int& c4, const Int& c6) {
    LookupResult lr = lookup(p, t);
    std::vector<Candidate> live;
    for (auto& c : lr.candidates)
        if (tiebreak_holds(c.tiebreak, c4, c6)) live.push_back(c);
    Resolution r;
    bool same = !live.empty();
    for (auto& c : live) same = same && c.type == live[0].type && c.fp == live[0].fp;
    if (same) {
        r.determined = true;
        r.type = live[0].type;
        r.fp = live[0].fp;
        return r;
    }
    r.candidates = std::move(live);
    r.max_step = lr.max_step;
    return r;
}

bool consistent(const LocalData& ld) {
    Triplet t = triplet_of(ld.minimal_model, ld.p);
    if (t.vdelta != ld.vdelta_min) return false;
    LookupResult lr;
    try {
        lr = lookup(ld.p, t);
    } catch (const TableGap&) {
        return false;
    }
    Invariants inv = compute_invariants(ld.minimal_model, false);
    for (auto& c : lr.candidates) {
        if (!(c.type == ld.type) || c.fp != ld.fp) continue;
        if (!tiebreak_holds(c.tiebreak, inv.c4, inv.c6)) continue;
        if (c.cps.empty()) {
            if (cp_allowed(ld.type, ld.cp)) return true;
            continue;
        }
        for (int x : c.cps)
            if (x == ld.cp) return true;
    }
    return false;
}

std::string dump_tables_csv() {
    std::ostringstream os;
    os << "row_id,p,type,c,vc4,vc6,vdelta,max_step,condition,f,original_type\n";
    for (const Row& r : kRows) {
        std::string type;
        if (r.n < 0)
            type = r.kind == K::I ? "In" : "In*";
        else
            type = KodairaType{r.kind, r.n}.str();
        std::string vd = r.n < 0 ? (r.vd == 0 ? "n" : std::to_string(r.vd) + "+n") : std::to_string(r.vd);
        std::string cps = r.cps;
        if (cps.empty()) cps = "n|1|2";
        for (auto& ch : cps)
            if (ch == ',') ch = '|';
        std::string cond = tiebreak_text(r.tb);
        if (r.n < 0) cond = (cond.empty() ? "" : cond + "; ") + "n>=" + std::to_string(r.nmin);
        os << r.id << ',' << pclass_str(r.pc) << ',' << type << ',' << cps << ',' << r.c4.str() << ','
           << r.c6.str() << ',' << vd << ',' << (r.max_step ? std::to_string(r.max_step) : "") << ',' << cond
           << ',' << r.f << ',' << r.printed << '\n';
    }
    return os.str();
}

}  // namespace kodaira
