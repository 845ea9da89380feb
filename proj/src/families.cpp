#include "kodaira/families.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kodaira {

namespace {

const char* const kNames[] = {"C2",  "C3zero", "C3",    "C4",    "C5",    "C6",    "C7",
                              "C8",  "C9",     "C10",   "C12",   "C2xC2", "C2xC4", "C2xC6"};

Int parse_int(const std::string& s, const std::string& whole) {
    Int r;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || r.set_str(t, 10) != 0) throw ArgumentError("bad integer '" + s + "' in " + whole);
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

void add_primes(std::set<Int>& out, const Int& n, const FactorOptions& opt) {
    if (sgn(n) == 0) return;
    for (const auto& pp : factor(n, opt).factors) out.insert(pp.p);
}

}  // namespace

std::string tag_name(TorsionTag t) {
    return kNames[static_cast<int>(t)];
}

TorsionTag parse_tag(const std::string& s) {
    for (TorsionTag t : kAllTags)
        if (s == kNames[static_cast<int>(t)]) return t;
    if (s == "C2xC8") throw ArgumentError("C2xC8 is semistable and has no additive primes");
    throw ArgumentError("unknown torsion tag '" + s + "'");
}

bool has_b(TorsionTag t) {
    return t != TorsionTag::C3zero;
}

bool has_d(TorsionTag t) {
    return t == TorsionTag::C2 || t == TorsionTag::C2xC2;
}

std::string FamilySpec::str() const {
    std::string r = tag_name(tag) + ":" + a.get_str();
    if (has_b(tag)) r += "," + b.get_str();
    if (has_d(tag)) r += "," + d.get_str();
    return r;
}

FamilySpec parse_family(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ArgumentError("family spec needs 'T:params': " + s);
    FamilySpec f;
    f.tag = parse_tag(s.substr(0, colon));
    auto parts = split(s.substr(colon + 1), ',');
    size_t want = 1 + (has_b(f.tag) ? 1 : 0) + (has_d(f.tag) ? 1 : 0);
    if (parts.size() != want)
        throw ArgumentError(tag_name(f.tag) + " takes " + std::to_string(want) + " parameters: " + s);
    f.a = parse_int(parts[0], s);
    if (has_b(f.tag)) f.b = parse_int(parts[1], s);
    if (has_d(f.tag)) f.d = parse_int(parts[2], s);
    return f;
}

std::optional<std::string> violated_clause(const FamilySpec& s, const ValidateOptions& o) {
    switch (s.tag) {
    case TorsionTag::C2: {
        if (sgn(s.b) == 0) return "C2.b-nonzero";
        if (sgn(s.d) == 0 || !is_squarefree(abs(s.d))) return "C2.d-squarefree";
        if (s.d == 1 && !o.allow_d1) return "C2.d-not-1";
        if (!is_squarefree(gcd(s.a, s.b))) return "C2.gcd-squarefree";
        return std::nullopt;
    }
    case TorsionTag::C2xC2:
        if (gcd(s.a, s.b) != 1) return "C2xC2.coprime";
        if (sgn(s.d) <= 0 || !is_squarefree(s.d)) return "C2xC2.d-positive-squarefree";
        if (mpz_odd_p(s.a.get_mpz_t())) return "C2xC2.a-even";
        return std::nullopt;
    case TorsionTag::C3zero:
        if (sgn(s.a) <= 0) return "C3zero.a-positive";
        if (!is_cubefree(s.a)) return "C3zero.a-cubefree";
        return std::nullopt;
    default:
        if (gcd(s.a, s.b) != 1) return tag_name(s.tag) + ".coprime";
        if (sgn(s.a) <= 0) return tag_name(s.tag) + ".a-positive";
        return std::nullopt;
    }
}

void validate(const FamilySpec& s, const ValidateOptions& o) {
    if (auto c = violated_clause(s, o)) throw ParameterError(*c, "invalid " + s.str() + ": violates " + *c);
}

FamilySpec normalize(const FamilySpec& s0) {
    FamilySpec s = s0;
    switch (s.tag) {
    case TorsionTag::C2: {
        if (sgn(s.b) == 0 || sgn(s.d) == 0) return s;
        auto sq = squarefree_decompose(abs(s.d));
        s.b *= sq.s;
        s.d = sgn(s.d) * sq.t;
        auto g = squarefree_decompose(gcd(s.a, s.b));
        Int k2 = g.s * g.s;
        s.a /= k2;
        s.b /= k2;
        s.b = abs(s.b);
        return s;
    }
    case TorsionTag::C2xC2: {
        // Roots 0, -A, -B with A = ad, B = bd, up to scaling by squares.
        Int A = s.a * s.d, B = s.b * s.d;
        Int g = gcd(A, B);
        if (sgn(g) == 0) return s;
        auto sq = squarefree_decompose(g);
        Int k2 = sq.s * sq.s;
        A /= k2;
        B /= k2;
        s.d = sq.t;
        s.a = A / s.d;
        s.b = B / s.d;
        if (mpz_odd_p(s.a.get_mpz_t())) {
            if (mpz_even_p(s.b.get_mpz_t())) {
                std::swap(s.a, s.b);
            } else {
                // move the root -B to 0
                Int a1 = s.a - s.b, b1 = -s.b;
                s.a = a1;
                s.b = b1;
            }
        }
        return s;
    }
    case TorsionTag::C3zero: {
        if (sgn(s.a) == 0) return s;
        auto cf = cubefree_decompose(abs(s.a));
        s.a = cf.d * cf.d * cf.e;
        return s;
    }
    default: {
        Int g = gcd(s.a, s.b);
        if (sgn(g) == 0) return s;
        s.a /= g;
        s.b /= g;
        if (sgn(s.a) < 0) {
            s.a = -s.a;
            s.b = -s.b;
        }
        return s;
    }
    }
}

Ainvs family_ainvs(const FamilySpec& s) {
    const Int &a = s.a, &b = s.b, &d = s.d;
    Ainvs r{0, 0, 0, 0, 0};
    switch (s.tag) {
    case TorsionTag::C2:
        r.a2 = 2 * a;
        r.a4 = a * a - b * b * d;
        break;
    case TorsionTag::C3zero:
        r.a3 = a;
        break;
    case TorsionTag::C3:
        r.a1 = a;
        r.a3 = a * a * b;
        break;
    case TorsionTag::C4:
        r.a1 = a;
        r.a2 = -a * b;
        r.a3 = -a * a * b;
        break;
    case TorsionTag::C5:
        r.a1 = a - b;
        r.a2 = -a * b;
        r.a3 = -a * a * b;
        break;
    case TorsionTag::C6:
        r.a1 = a - b;
        r.a2 = -a * b - b * b;
        r.a3 = -a * a * b - a * b * b;
        break;
    case TorsionTag::C7:
        r.a1 = a * a + a * b - b * b;
        r.a2 = a * a * b * b - a * b * b * b;
        r.a3 = a * a * a * a * b * b - a * a * a * b * b * b;
        break;
    case TorsionTag::C8: {
        Int b2 = b * b;
        r.a1 = -a * a + 4 * a * b - 2 * b2;
        r.a2 = -a * a * b2 + 3 * a * b2 * b - 2 * b2 * b2;
        r.a3 = -a * a * a * b2 * b + 3 * a * a * b2 * b2 - 2 * a * b2 * b2 * b;
        break;
    }
    case TorsionTag::C9: {
        Int a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b;
        r.a1 = a3 + a * b2 - b3;
        r.a2 = a2 * a2 * b2 - 2 * a3 * b3 + 2 * a2 * b2 * b2 - a * b2 * b3;
        r.a3 = a3 * r.a2;
        break;
    }
    case TorsionTag::C10: {
        Int a2 = a * a, a3 = a2 * a, b2 = b * b, b3 = b2 * b;
        r.a1 = a3 - 2 * a2 * b - 2 * a * b2 + 2 * b3;
        r.a2 = -a3 * b3 + 3 * a2 * b2 * b2 - 2 * a * b2 * b3;
        r.a3 = (a3 - 3 * a2 * b + a * b2) * r.a2;
        break;
    }
    case TorsionTag::C12: {
        Int a2 = a * a, b2 = b * b, amb = a - b;
        r.a1 = -a2 * a2 + 2 * a2 * a * b + 2 * a2 * b2 - 8 * a * b2 * b + 6 * b2 * b2;
        r.a2 = b * (a - 2 * b) * amb * amb * (a2 - 3 * a * b + 3 * b2) * (a2 - 2 * a * b + 2 * b2);
        Int bma = b - a;
        r.a3 = a * bma * bma * bma * r.a2;
        break;
    }
    case TorsionTag::C2xC2:
        r.a2 = a * d + b * d;
        r.a4 = a * b * d * d;
        break;
    case TorsionTag::C2xC4:
        r.a1 = a;
        r.a2 = -a * b - 4 * b * b;
        r.a3 = -a * a * b - 4 * a * b * b;
        break;
    case TorsionTag::C2xC6: {
        Int a2 = a * a, a3 = a2 * a, a4 = a2 * a2, b2 = b * b, b3 = b2 * b;
        r.a1 = -19 * a2 + 2 * a * b + b2;
        r.a2 = -10 * a4 + 22 * a3 * b - 14 * a2 * b2 + 2 * a * b3;
        r.a3 = 90 * a4 * a2 - 198 * a4 * a * b + 116 * a4 * b2 + 4 * a3 * b3 - 14 * a2 * b2 * b2 +
               2 * a * b2 * b3;
        break;
    }
    }
    return r;
}

WeierstrassModel build_curve(const FamilySpec& s, const ValidateOptions& o) {
    validate(s, o);
    return WeierstrassModel(family_ainvs(s));
}

std::optional<std::string> additive_condition(const FamilySpec& s, const Int& p) {
    const Int &a = s.a, &b = s.b, &d = s.d;
    const bool two = (p == 2), three = (p == 3);
    auto v = [&](const Int& n) { return val(n, p); };
    switch (s.tag) {
    case TorsionTag::C2: {
        if (!two) {
            if (a % p == 0 && (b * d) % p == 0) return std::string("C2.odd.p|gcd(a,bd)");
            return std::nullopt;
        }
        int va = v(a), vb = v(b);
        int vt = v(b * b * d - a * a);
        long a4 = mod(a, 4L), a8 = mod(a, 8L);
        if (vt <= 7 && va == 1 && vb == 1) return std::string("C2.2.(1)");
        if (vb >= 3 && a4 != 3) return std::string("C2.2.(2)");
        if (vb == 0 || vb == 2) return std::string("C2.2.(3)");
        if (vb == 1 && va != 1) return std::string("C2.2.(4)");
        if (vt >= 8 && a8 == 6) return std::string("C2.2.(5)");
        return std::nullopt;
    }
    case TorsionTag::C3zero:
        if (three) return std::string("C3zero.p=3");
        if (v(a) == 1 || v(a) == 2) return std::string("C3zero.v(a)=1,2");
        return std::nullopt;
    case TorsionTag::C3: {
        int va = v(a);
        if (va % 3 != 0) return std::string("C3.p|de");
        if (three && va > 0) return std::string("C3.p=3,v(a)>0");
        return std::nullopt;
    }
    case TorsionTag::C4: {
        int va = v(a);
        if (!two) {
            if (va % 2 == 1) return std::string("C4.odd.p|d");
            return std::nullopt;
        }
        if (va >= 1 && va % 2 == 1) return std::string("C4.2.v(a)-odd");
        if (va == 2 || va == 4 || va == 6) return std::string("C4.2.v(a)=2,4,6");
        if (va >= 8 && va % 2 == 0) {
            Int dd = squarefree_decompose(a).t;
            if (mod(b * dd, 4L) == 1) return std::string("C4.2.v(a)>=8,bd=1(4)");
        }
        return std::nullopt;
    }
    case TorsionTag::C2xC2: {
        if (!two) {
            if (d % p == 0) return std::string("C2xC2.odd.p|d");
            return std::nullopt;
        }
        int va = v(a);
        if (va < 4) return std::string("C2xC2.2.v(a)<4");
        if (mod(b * d, 4L) != 1) return std::string("C2xC2.2.v(a)>=4,bd!=1(4)");
        return std::nullopt;
    }
    case TorsionTag::C5:
        if (p == 5 && v(a + 18 * b) >= 1) return std::string("C5.5");
        return std::nullopt;
    case TorsionTag::C6:
        if (two) {
            int w = v(a + b);
            if (w == 1 || w == 2) return std::string("C6.2");
        }
        if (three && v(a) >= 1) return std::string("C6.3");
        return std::nullopt;
    case TorsionTag::C7:
        if (p == 7 && v(a + 4 * b) >= 1) return std::string("C7.7");
        return std::nullopt;
    case TorsionTag::C8:
        if (two && v(a) >= 2) return std::string("C8.2");
        return std::nullopt;
    case TorsionTag::C9:
        if (three && v(a + b) >= 1) return std::string("C9.3");
        return std::nullopt;
    case TorsionTag::C10:
        if (p == 5 && v(a + b) >= 1) return std::string("C10.5");
        return std::nullopt;
    case TorsionTag::C12:
        if (three && v(a) >= 1) return std::string("C12.3");
        return std::nullopt;
    case TorsionTag::C2xC4:
        if (two) {
            int va = v(a);
            if (va == 1 || va >= 3 || (va == 2 && v(a + 4 * b) == 3)) return std::string("C2xC4.2");
        }
        return std::nullopt;
    case TorsionTag::C2xC6:
        if (three && v(b) >= 1) return std::string("C2xC6.3");
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<AdditivePrime> additive_primes(const FamilySpec& s, const FactorOptions& opt) {
    std::set<Int> cand;
    switch (s.tag) {
    case TorsionTag::C2:
        cand.insert(2);
        add_primes(cand, gcd(s.a, s.b * s.d), opt);
        break;
    case TorsionTag::C3zero:
    case TorsionTag::C3:
        cand.insert(3);
        add_primes(cand, s.a, opt);
        break;
    case TorsionTag::C4:
        cand.insert(2);
        add_primes(cand, s.a, opt);
        break;
    case TorsionTag::C2xC2:
        cand.insert(2);
        add_primes(cand, s.d, opt);
        break;
    case TorsionTag::C5:
    case TorsionTag::C10:
        cand.insert(5);
        break;
    case TorsionTag::C6:
        cand.insert(2);
        cand.insert(3);
        break;
    case TorsionTag::C7:
        cand.insert(7);
        break;
    case TorsionTag::C8:
    case TorsionTag::C2xC4:
        cand.insert(2);
        break;
    case TorsionTag::C9:
    case TorsionTag::C12:
    case TorsionTag::C2xC6:
        cand.insert(3);
        break;
    }
    std::vector<AdditivePrime> out;
    for (const Int& p : cand)
        if (auto c = additive_condition(s, p)) out.push_back({p, *c});
    return out;
}

IsoMap minimal_map(const FamilySpec& s, const Int& p) {
    IsoMap m;
    switch (s.tag) {
    case TorsionTag::C2:
        if (p == 2 && val(s.b, 2UL) == 1 && val(s.b * s.b * s.d - s.a * s.a, 2UL) >= 4) {
            // x -> 4x, y -> 8y + 8x
            m.u = 2;
            m.s = 2;
        }
        break;
    case TorsionTag::C3: {
        auto cf = cubefree_decompose(s.a);
        m.u = Rat(cf.c * cf.c * cf.d);
        break;
    }
    case TorsionTag::C4:
        m.u = Rat(squarefree_decompose(s.a).s);
        break;
    case TorsionTag::C2xC4:
        if (p == 2 && val(s.a, 2UL) > 1) m.u = 2;
        break;
    default:
        break;
    }
    return m;
}

std::pair<WeierstrassModel, IsoMap> minimal_model_at(const FamilySpec& s, const Int& p) {
    if (!is_prime(p)) throw ArgumentError(p.get_str() + " is not prime");
    if (!additive_condition(s, p)) throw NotAdditive(s.str() + " is not additive at " + p.get_str());
    WeierstrassModel e = build_curve(s, {.allow_d1 = true});
    IsoMap m = minimal_map(s, p);
    return {transform(e, m), m};
}

}  // namespace kodaira
