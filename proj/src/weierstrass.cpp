#include "kodaira/weierstrass.hpp"

namespace kodaira {

Invariants compute_invariants(const Ainvs& a, bool with_j) {
    Invariants v;
    v.b2 = a.a1 * a.a1 + 4 * a.a2;
    v.b4 = 2 * a.a4 + a.a1 * a.a3;
    v.b6 = a.a3 * a.a3 + 4 * a.a6;
    Int num = v.b2 * v.b6 - v.b4 * v.b4;
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 4)) throw std::logic_error("b8 not integral");
    mpz_divexact_ui(v.b8.get_mpz_t(), num.get_mpz_t(), 4);
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
    if (with_j && sgn(v.disc) != 0) {
        v.j = Rat(v.c4 * v.c4 * v.c4, v.disc);
        v.j.canonicalize();
    }
    return v;
}

Int discriminant(const Ainvs& a) {
    return compute_invariants(a, false).disc;
}

WeierstrassModel::WeierstrassModel(Int a1, Int a2, Int a3, Int a4, Int a6)
    : WeierstrassModel(Ainvs{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)}) {}

WeierstrassModel::WeierstrassModel(const Ainvs& a) : a_(a) {
    if (sgn(discriminant(a_)) == 0) throw SingularCurve("singular model " + str());
}

std::string WeierstrassModel::str() const {
    return "[" + a_.a1.get_str() + "," + a_.a2.get_str() + "," + a_.a3.get_str() + "," + a_.a4.get_str() +
           "," + a_.a6.get_str() + "]";
}

Invariants invariants(const WeierstrassModel& e) {
    return e.invariants();
}

IsoMap compose(const IsoMap& m1, const IsoMap& m2) {
    IsoMap m;
    Rat u1sq = m1.u * m1.u;
    m.u = m1.u * m2.u;
    m.r = m1.r + u1sq * m2.r;
    m.s = m1.s + m1.u * m2.s;
    m.w = m1.w + u1sq * m1.u * m2.w + m1.s * u1sq * m2.r;
    return m;
}

IsoMap inverse(const IsoMap& m) {
    if (sgn(m.u) == 0) throw ArgumentError("IsoMap with u = 0");
    IsoMap r;
    r.u = 1 / m.u;
    r.r = -m.r / (m.u * m.u);
    r.s = -m.s / m.u;
    r.w = (m.r * m.s - m.w) / (m.u * m.u * m.u);
    return r;
}

RationalAinvs to_rational(const Ainvs& a) {
    return {Rat(a.a1), Rat(a.a2), Rat(a.a3), Rat(a.a4), Rat(a.a6)};
}

RationalAinvs transform_rational(const RationalAinvs& e, const IsoMap& m) {
    if (sgn(m.u) == 0) throw ArgumentError("IsoMap with u = 0");
    const Rat &u = m.u, &r = m.r, &s = m.s, &w = m.w;
    Rat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    RationalAinvs o;
    o.a1 = (e.a1 + 2 * s) / u;
    o.a2 = (e.a2 - s * e.a1 + 3 * r - s * s) / u2;
    o.a3 = (e.a3 + r * e.a1 + 2 * w) / u3;
    o.a4 = (e.a4 - s * e.a3 + 2 * r * e.a2 - (w + r * s) * e.a1 + 3 * r * r - 2 * s * w) / u4;
    o.a6 = (e.a6 + r * e.a4 + r * r * e.a2 + r * r * r - w * e.a3 - w * w - r * w * e.a1) / u6;
    return o;
}

Ainvs transform_integral(const Ainvs& e, const IsoMap& m) {
    RationalAinvs q = transform_rational(to_rational(e), m);
    const Rat* c[5] = {&q.a1, &q.a2, &q.a3, &q.a4, &q.a6};
    static const int idx[5] = {1, 2, 3, 4, 6};
    for (int i = 0; i < 5; ++i)
        if (c[i]->get_den() != 1) throw NonIntegralTransform(idx[i], *c[i]);
    return {q.a1.get_num(), q.a2.get_num(), q.a3.get_num(), q.a4.get_num(), q.a6.get_num()};
}

WeierstrassModel transform(const WeierstrassModel& e, const IsoMap& m) {
    return WeierstrassModel(transform_integral(e.ainvs(), m));
}

void translate(Ainvs& a, const Int& r, const Int& s, const Int& w) {
    Int a1 = a.a1 + 2 * s;
    Int a2 = a.a2 - s * a.a1 + 3 * r - s * s;
    Int a3 = a.a3 + r * a.a1 + 2 * w;
    Int a4 = a.a4 - s * a.a3 + 2 * r * a.a2 - (w + r * s) * a.a1 + 3 * r * r - 2 * s * w;
    Int a6 = a.a6 + r * a.a4 + r * r * a.a2 + r * r * r - w * a.a3 - w * w - r * w * a.a1;
    a = {std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)};
}

}  // namespace kodaira
