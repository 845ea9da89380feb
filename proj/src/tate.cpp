#include "kodaira/tate.hpp"

#include <stdexcept>

namespace kodaira {

namespace {

constexpr int kMaxScale = 64;

Int inv_mod(const Int& x, const Int& m) {
    Int r, xm = mod(x, m);
    if (!mpz_invert(r.get_mpz_t(), xm.get_mpz_t(), m.get_mpz_t()))
        throw std::logic_error("tate: non-invertible residue");
    return r;
}

Int exact_div(const Int& x, const Int& q) {
    if (!mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t())) throw std::logic_error("tate: lost divisibility");
    Int r;
    mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    return r;
}

// Coefficients low to high over F_p.
using Poly = std::vector<Int>;

void trim(Poly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& g, const Int& p) {
    Int lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        Int q = mod(f.back() * lead_inv, p);
        size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) f[shift + i] = mod(f[shift + i] - q * g[i], p);
        trim(f);
    }
    return f;
}

size_t poly_gcd_degree(Poly f, Poly g, const Int& p) {
    for (auto& x : f) x = mod(x, p);
    for (auto& x : g) x = mod(x, p);
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = poly_mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return f.empty() ? 0 : f.size() - 1;
}

// x * y mod (T^3 + b T^2 + c T + d) over F_p.
Poly mulmod_cubic(const Poly& x, const Poly& y, const Int& b, const Int& c, const Int& d, const Int& p) {
    Int t[5];
    for (auto& v : t) v = 0;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) t[i + j] += x[i] * y[j];
    for (int k = 4; k >= 3; --k) {
        Int h = mod(t[k], p);
        t[k] = 0;
        t[k - 1] -= h * b;
        t[k - 2] -= h * c;
        t[k - 3] -= h * d;
    }
    return {mod(t[0], p), mod(t[1], p), mod(t[2], p)};
}

struct Light {
    Int b2, b6, b8, c4, c6, disc;
};

Light light_invariants(const Ainvs& a) {
    Invariants v = compute_invariants(a, false);
    return {v.b2, v.b6, v.b8, v.c4, v.c6, v.disc};
}

long smallmod(const Int& x, long p) {
    return long(mpz_fdiv_ui(x.get_mpz_t(), (unsigned long)p));
}

// Singular point of the reduction mod p, lifted to [0,p).
void singular_point(const Ainvs& a, const Light& inv, const Int& p, bool additive, Int& x0, Int& y0) {
    if (p <= 3) {
        long q = p.get_si();
        long a1 = smallmod(a.a1, q), a2 = smallmod(a.a2, q), a3 = smallmod(a.a3, q), a4 = smallmod(a.a4, q),
             a6 = smallmod(a.a6, q);
        for (long x = 0; x < q; ++x)
            for (long y = 0; y < q; ++y) {
                long F = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
                long Fx = a1 * y - 3 * x * x - 2 * a2 * x - a4;
                long Fy = 2 * y + a1 * x + a3;
                if (F % q == 0 && Fx % q == 0 && Fy % q == 0) {
                    x0 = x;
                    y0 = y;
                    return;
                }
            }
        throw std::logic_error("tate: no singular point mod " + p.get_str());
    }
    if (additive)
        x0 = mod(-inv.b2 * inv_mod(12, p), p);
    else
        x0 = mod(-(inv.c6 + inv.b2 * inv.c4) * inv_mod(12 * inv.c4, p), p);
    y0 = mod(-(a.a1 * x0 + a.a3) * inv_mod(2, p), p);
}

// Root of a t^2 + b t + c mod p known to have a double root.
Int double_root(const Int& a, const Int& b, const Int& c, const Int& p) {
    if (p == 2) return mod(c, p);  // a odd, b even: t^2 = c
    return mod(-b * inv_mod(2 * a, p), p);
}

LocalData finish(const Int& p, KodairaType t, int f, int c, int vd, int u, const Ainvs& m) {
    LocalData r;
    r.p = p;
    r.type = t;
    r.fp = f;
    r.cp = c;
    r.vdelta_min = vd;
    r.u_scale = u;
    r.minimal_model = m;
    return r;
}

}  // namespace

bool quadratic_distinct(const Int& a, const Int& b, const Int& c, const Int& p) {
    if (p == 2) return mpz_odd_p(b.get_mpz_t());
    return mpz_divisible_p(Int(b * b - 4 * a * c).get_mpz_t(), p.get_mpz_t()) == 0;
}

bool quadratic_has_root(const Int& a, const Int& b, const Int& c, const Int& p) {
    bool a0 = mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t());
    if (a0) {
        return !mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t()) || mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t());
    }
    if (p == 2) {
        if (mpz_even_p(b.get_mpz_t())) return true;
        return mpz_even_p(c.get_mpz_t());
    }
    Int disc = mod(b * b - 4 * a * c, p);
    return mpz_legendre(disc.get_mpz_t(), p.get_mpz_t()) >= 0;
}

int cubic_root_count(const Int& b, const Int& c, const Int& d, const Int& p) {
    if (p < 64) {
        long q = p.get_si(), bb = smallmod(b, q), cc = smallmod(c, q), dd = smallmod(d, q);
        int n = 0;
        for (long t = 0; t < q; ++t)
            if ((((t + bb) * t + cc) % q * t + dd) % q == 0) ++n;
        return n;
    }
    // T^p - T mod P, then the degree of its gcd with P.
    Poly acc{1}, base{0, 1};
    for (size_t i = mpz_sizeinbase(p.get_mpz_t(), 2); i-- > 0;) {
        acc = mulmod_cubic(acc, acc, b, c, d, p);
        if (mpz_tstbit(p.get_mpz_t(), i)) acc = mulmod_cubic(acc, base, b, c, d, p);
    }
    acc.resize(3);
    acc[1] = mod(acc[1] - 1, p);
    Poly P{d, c, b, 1};
    return int(poly_gcd_degree(P, acc, p));
}

LocalData tate_unchecked(const Ainvs& input, const Int& p) {
    Ainvs a = input;
    const bool p2 = (p == 2);
    for (int u = 0; u <= kMaxScale; ++u) {
        const Ainvs start = a;
        Light inv = light_invariants(a);
        const int vd = val(inv.disc, p);
        if (vd == 0) return finish(p, KodairaType::In(0), 0, 1, 0, u, start);
        const bool additive = val(inv.c4, p) > 0;

        Int x0, y0;
        singular_point(a, inv, p, additive, x0, y0);
        translate(a, x0, 0, y0);

        if (!additive) {
            bool split = quadratic_has_root(1, a.a1, -a.a2, p);
            int c = split ? vd : (vd % 2 == 0 ? 2 : 1);
            return finish(p, KodairaType::In(vd), 1, c, vd, u, start);
        }
        if (val(a.a6, p) < 2) return finish(p, KodairaType::of(KodairaType::II), vd, 1, vd, u, start);
        Light t = light_invariants(a);
        if (val(t.b8, p) < 3) return finish(p, KodairaType::of(KodairaType::III), vd - 1, 2, vd, u, start);
        const Int pp = p * p, p3 = pp * p;
        if (val(t.b6, p) < 3) {
            bool r = quadratic_has_root(1, exact_div(a.a3, p), -exact_div(a.a6, pp), p);
            return finish(p, KodairaType::of(KodairaType::IV), vd - 2, r ? 3 : 1, vd, u, start);
        }

        Int s, w;
        if (p2) {
            s = mod(a.a2, 2);
            w = 2 * mod(exact_div(a.a6, 4), 2);
        } else {
            Int h = inv_mod(2, pp);
            s = mod(-a.a1 * h, p);
            w = mod(-a.a3 * h, pp);
        }
        translate(a, 0, s, w);

        Int b = exact_div(a.a2, p), c = exact_div(a.a4, pp), d = exact_div(a.a6, p3);
        Int disc3 = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
        if (!mpz_divisible_p(disc3.get_mpz_t(), p.get_mpz_t())) {
            int roots = cubic_root_count(b, c, d, p);
            return finish(p, KodairaType::Instar(0), vd - 4, 1 + roots, vd, u, start);
        }

        Int r0;
        bool triple;
        if (p <= 3) {
            long q = p.get_si(), bb = smallmod(b, q), cc = smallmod(c, q), dd = smallmod(d, q);
            long found = -1;
            for (long x = 0; x < q && found < 0; ++x) {
                long P = ((x + bb) * x + cc) * x + dd;
                long dP = (3 * x + 2 * bb) * x + cc;
                if (P % q == 0 && dP % q == 0) found = x;
            }
            if (found < 0) throw std::logic_error("tate: no repeated root");
            r0 = found;
            triple = ((bb + 3 * found) % q) == 0;
        } else {
            Int e = b * b - 3 * c;
            if (mpz_divisible_p(e.get_mpz_t(), p.get_mpz_t())) {
                triple = true;
                r0 = mod(-b * inv_mod(3, p), p);
            } else {
                triple = false;
                r0 = mod((9 * d - b * c) * inv_mod(2 * e, p), p);
            }
        }
        translate(a, r0 * p, 0, 0);

        if (!triple) {
            int n = 1;
            int cp = 0;
            for (; n < 4 * kMaxScale + 64; ++n) {
                if (n % 2 == 1) {
                    Int pk = ipow(p, (n + 3) / 2);
                    Int A = exact_div(a.a3, pk), B = exact_div(a.a6, ipow(p, n + 3));
                    if (quadratic_distinct(1, A, -B, p)) {
                        cp = quadratic_has_root(1, A, -B, p) ? 4 : 2;
                        break;
                    }
                    Int y = double_root(1, A, -B, p);
                    translate(a, 0, 0, y * pk);
                } else {
                    int k = (n + 4) / 2;
                    Int A2 = exact_div(a.a2, p), A4 = exact_div(a.a4, ipow(p, k)),
                        A6 = exact_div(a.a6, ipow(p, n + 3));
                    if (quadratic_distinct(A2, A4, A6, p)) {
                        cp = quadratic_has_root(A2, A4, A6, p) ? 4 : 2;
                        break;
                    }
                    Int x = double_root(A2, A4, A6, p);
                    translate(a, x * ipow(p, k - 1), 0, 0);
                }
            }
            if (cp == 0) throw std::logic_error("tate: I_n* loop did not terminate");
            return finish(p, KodairaType::Instar(n), vd - 4 - n, cp, vd, u, start);
        }

        const Int p4 = pp * pp;
        Int A = exact_div(a.a3, pp), B = exact_div(a.a6, p4);
        if (quadratic_distinct(1, A, -B, p)) {
            bool r = quadratic_has_root(1, A, -B, p);
            return finish(p, KodairaType::of(KodairaType::IVstar), vd - 6, r ? 3 : 1, vd, u, start);
        }
        translate(a, 0, 0, double_root(1, A, -B, p) * pp);
        if (val(a.a4, p) < 4) return finish(p, KodairaType::of(KodairaType::IIIstar), vd - 7, 2, vd, u, start);
        if (val(a.a6, p) < 6) return finish(p, KodairaType::of(KodairaType::IIstar), vd - 8, 1, vd, u, start);

        a.a1 = exact_div(a.a1, p);
        a.a2 = exact_div(a.a2, pp);
        a.a3 = exact_div(a.a3, p3);
        a.a4 = exact_div(a.a4, p4);
        a.a6 = exact_div(a.a6, p4 * pp);
    }
    throw std::logic_error("tate: scaling cap exceeded");
}

LocalData tate_local_data(const WeierstrassModel& e, const Int& p) {
    if (!is_prime(p)) throw ArgumentError("tate: " + p.get_str() + " is not prime");
    return tate_unchecked(e.ainvs(), p);
}

std::optional<LocalData> lemma_in_fastpath(const WeierstrassModel& e, const Int& p, int n) {
    if (!is_prime(p)) throw ArgumentError("lemma_in_fastpath: " + p.get_str() + " is not prime");
    if (n < 1) return std::nullopt;
    const Ainvs& a = e.ainvs();
    auto ceil_half = [](int x) { return (x + 1) / 2; };
    if (val(a.a1, p) < 1 || val(a.a2, p) != 1 || val(a.a3, p) < ceil_half(n + 3) ||
        val(a.a4, p) < ceil_half(n + 4) || val(a.a6, p) < n + 3)
        return std::nullopt;
    Int B = exact_div(a.a6, ipow(p, n + 3));
    int cp;
    if (n % 2 == 1) {
        Int A = exact_div(a.a3, ipow(p, (n + 3) / 2));
        if (!quadratic_distinct(1, A, -B, p)) return std::nullopt;
        cp = quadratic_has_root(1, A, -B, p) ? 4 : 2;
    } else {
        Int A2 = exact_div(a.a2, p), A4 = exact_div(a.a4, ipow(p, (n + 4) / 2));
        if (!quadratic_distinct(A2, A4, B, p)) return std::nullopt;
        cp = quadratic_has_root(A2, A4, B, p) ? 4 : 2;
    }
    int vd = val(discriminant(a), p);
    return finish(p, KodairaType::Instar(n), vd - 4 - n, cp, vd, 0, a);
}

GlobalMinimal global_minimal_discriminant(const WeierstrassModel& e, const FactorOptions& opt) {
    Int disc = discriminant(e.ainvs());
    Factorization f = factor(disc, opt);
    GlobalMinimal g;
    g.disc_min = f.sign;
    for (auto& [p, ex] : f.factors) {
        LocalData ld = tate_unchecked(e.ainvs(), p);
        g.disc_min *= ipow(p, ld.vdelta_min);
        if (!ld.type.is_good()) g.bad.push_back(std::move(ld));
    }
    return g;
}

}  // namespace kodaira
