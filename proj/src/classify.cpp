#include "kodaira/classify.hpp"

#include <sstream>

namespace kodaira {

namespace {

using K = KodairaType;
using C = const RowContext&;
using T = TorsionTag;

RowOutput out(K::Kind k, int f, int c) {
    return {K::of(k), f, c};
}
RowOutput star(int n, int f, int c) {
    return {K::Instar(n), f, c};
}
int four_or_two(bool four) {
    return four ? 4 : 2;
}
int leg(const Int& a, const Int& p) {
    return legendre(a, p);
}
// x == r * 3^k mod 3^(k+1), as exact integers
bool cong_pow(const Int& x, long r, const Int& base, unsigned long k) {
    Int pk = ipow(base, k);
    return mod(x - r * pk, pk * base) == 0;
}

constexpr PPattern Fx = PPattern::Fixed;
constexpr PPattern Odd = PPattern::Odd;
constexpr PPattern N3 = PPattern::NotThree;
constexpr PPattern G5 = PPattern::AtLeastFive;

// C2 at odd p
const std::vector<TableRow> kTable3 = {
    {"T3.I0*.1", T::C2, Fx, 3, "v(a)=v(b)=1, v(d)=0, v(b^2d-a^2)=2", "I0*", "2", "2", false,
     [](C x) { return x.va == 1 && x.vb == 1 && x.vd == 0 && x.vt == 2; }, [](C) { return star(0, 2, 2); }},
    {"T3.I0*.2", T::C2, G5, 0, "v(a)=v(b)=1, v(d)=0, v(b^2d-a^2)=2, v(9b^2d-a^2)=2", "I0*", "2",
     "2 if (d/p)=-1, 4 if (d/p)=1", false,
     [](C x) { return x.va == 1 && x.vb == 1 && x.vd == 0 && x.vt == 2 && x.v(9 * x.b * x.b * x.d - x.a * x.a) == 2; },
     [](C x) { return star(0, 2, four_or_two(leg(x.d, x.p) == 1)); }},
    {"T3.I0*.3", T::C2, G5, 0, "v(a)=v(b)=1, v(d)=0, v(b^2d-a^2)=2, v(9b^2d-a^2)>=3", "I0*", "2", "4", false,
     [](C x) { return x.va == 1 && x.vb == 1 && x.vd == 0 && x.vt == 2 && x.v(9 * x.b * x.b * x.d - x.a * x.a) >= 3; },
     [](C) { return star(0, 2, 4); }},
    {"T3.III", T::C2, Odd, 0, "v(a)>=1, v(b)=0, v(d)=1", "III", "2", "2", false,
     [](C x) { return x.va >= 1 && x.vb == 0 && x.vd == 1; }, [](C) { return out(K::III, 2, 2); }},
    {"T3.I0*.4", T::C2, Odd, 0, "v(a)>1, v(b)=1, v(d)=0", "I0*", "2", "2 if (d/p)=-1, 4 if (d/p)=1", false,
     [](C x) { return x.va > 1 && x.vb == 1 && x.vd == 0; },
     [](C x) { return star(0, 2, four_or_two(leg(x.d, x.p) == 1)); }},
    {"T3.In*.1", T::C2, Odd, 0, "v(a)=1, v(d)=1, n=2v(b)-1>=1", "I(2v(b)-1)*", "2",
     "2 if (ad/p^2 / p)=-1, 4 if (ad/p^2 / p)=1", false,
     [](C x) { return x.va == 1 && x.vd == 1 && x.vb >= 1; },
     [](C x) { return star(2 * x.vb - 1, 2, four_or_two(leg(x.a * x.d / (x.p * x.p), x.p) == 1)); }},
    {"T3.In*.2", T::C2, Odd, 0, "v(a)=1, v(d)=0, n=2v(b)-2>=2", "I(2v(b)-2)*", "2", "2 if (d/p)=-1, 4 if (d/p)=1",
     false, [](C x) { return x.va == 1 && x.vd == 0 && x.vb >= 2; },
     [](C x) { return star(2 * x.vb - 2, 2, four_or_two(leg(x.d, x.p) == 1)); }},
    {"T3.In*.3", T::C2, Odd, 0, "v(a)=v(b)=1, v(d)=0, n=2v(b^2d-a^2)-4>=2", "I(2v(b^2d-a^2)-4)*", "2", "4", false,
     [](C x) { return x.va == 1 && x.vb == 1 && x.vd == 0 && x.vt >= 3; },
     [](C x) { return star(2 * x.vt - 4, 2, 4); }},
    {"T3.III*", T::C2, Odd, 0, "v(a)>1, v(b)=1, v(d)=1", "III*", "2", "2", false,
     [](C x) { return x.va > 1 && x.vb == 1 && x.vd == 1; }, [](C) { return out(K::IIIstar, 2, 2); }},
};

// C3zero, stored as (f, c).
const std::vector<TableRow> kTable4 = {
    {"T4.II", T::C3zero, Fx, 3, "v(a)=0, a=+-1,+-4 mod 9", "II", "3", "1", true,
     [](C x) {
         long r = x.m(x.a, 9);
         return x.va == 0 && (r == 1 || r == 8 || r == 4 || r == 5);
     },
     [](C) { return out(K::II, 3, 1); }},
    {"T4.III", T::C3zero, Fx, 3, "v(a)=0, a=+-2 mod 9", "III", "2", "2", true,
     [](C x) {
         long r = x.m(x.a, 9);
         return x.va == 0 && (r == 2 || r == 7);
     },
     [](C) { return out(K::III, 2, 2); }},
    {"T4.IV.3", T::C3zero, Fx, 3, "v(a)=1", "IV", "5", "3", true, [](C x) { return x.va == 1; },
     [](C) { return out(K::IV, 5, 3); }},
    {"T4.IV*.3", T::C3zero, Fx, 3, "v(a)=2", "IV*", "5", "3", true, [](C x) { return x.va == 2; },
     [](C) { return out(K::IVstar, 5, 3); }},
    {"T4.IV", T::C3zero, N3, 0, "v(a)=1", "IV", "2", "3", true, [](C x) { return x.va == 1; },
     [](C) { return out(K::IV, 2, 3); }},
    {"T4.IV*", T::C3zero, N3, 0, "v(a)=2", "IV*", "2", "3", true, [](C x) { return x.va == 2; },
     [](C) { return out(K::IVstar, 2, 3); }},
};

// C3, a = c^3 d^2 e
Int c3_tiebreak(C x) {
    Int d2 = x.dd * x.dd, e3 = x.e * x.e * x.e;
    return x.b * d2 * e3 * (x.b * x.b * x.b * d2 * e3 * x.e * x.e - x.c);
}
Int c3_q(C x) {
    return x.a * x.a - 27 * x.a * x.b;
}
const std::vector<TableRow> kTable5 = {
    {"T5.IV", T::C3, N3, 0, "v(a)=2 mod 3", "IV", "2", "3", false, [](C x) { return x.va % 3 == 2; },
     [](C) { return out(K::IV, 2, 3); }},
    {"T5.IV*", T::C3, N3, 0, "v(a)=1 mod 3", "IV*", "2", "3", false, [](C x) { return x.va % 3 == 1; },
     [](C) { return out(K::IVstar, 2, 3); }},
    {"T5.II.1", T::C3, Fx, 3, "v(a-27b)=4", "II", "4", "1", false, [](C x) { return x.v(x.a - 27 * x.b) == 4; },
     [](C) { return out(K::II, 4, 1); }},
    {"T5.II.2", T::C3, Fx, 3, "v(a)=0 mod 3, v(a-27b)=3, bd^2e^3(b^3d^2e^5-c) != -2 mod 9", "II", "3", "1", false,
     [](C x) { return x.va % 3 == 0 && x.v(x.a - 27 * x.b) == 3 && x.m(c3_tiebreak(x), 9) != 7; },
     [](C) { return out(K::II, 3, 1); }},
    {"T5.III", T::C3, Fx, 3, "v(a)=0 mod 3, v(a-27b)=3, bd^2e^3(b^3d^2e^5-c) = -2 mod 9", "III", "2", "2", false,
     [](C x) { return x.va % 3 == 0 && x.v(x.a - 27 * x.b) == 3 && x.m(c3_tiebreak(x), 9) == 7; },
     [](C) { return out(K::III, 2, 2); }},
    {"T5.IV.1", T::C3, Fx, 3, "v(a)=2", "IV", "4", "3", false, [](C x) { return x.va == 2; },
     [](C) { return out(K::IV, 4, 3); }},
    {"T5.IV.2", T::C3, Fx, 3, "v(a)=2 mod 3, v(a)!=2", "IV", "5", "3", false,
     [](C x) { return x.va % 3 == 2 && x.va != 2; }, [](C) { return out(K::IV, 5, 3); }},
    {"T5.IV.3", T::C3, Fx, 3, "v(a-27b)=5", "IV", "3", "3 if a^2-27ab = 3^8 mod 3^9 else 1", false,
     [](C x) { return x.v(x.a - 27 * x.b) == 5; },
     [](C x) { return out(K::IV, 3, cong_pow(c3_q(x), 1, 3, 8) ? 3 : 1); }},
    {"T5.I0*", T::C3, Fx, 3, "v(a-27b)=6", "I0*", "2", "1 if a^2-27ab = 3^9 mod 3^10 else 2", false,
     [](C x) { return x.v(x.a - 27 * x.b) == 6; },
     [](C x) { return star(0, 2, cong_pow(c3_q(x), 1, 3, 9) ? 1 : 2); }},
    {"T5.In*", T::C3, Fx, 3, "n=v(a-27b)-6>=1", "I(v(a-27b)-6)*", "2", "4 if a^2-27ab = 3^(9+n) mod 3^(10+n) else 2",
     false, [](C x) { return x.v(x.a - 27 * x.b) >= 7; },
     [](C x) {
         int n = x.v(x.a - 27 * x.b) - 6;
         return star(n, 2, four_or_two(cong_pow(c3_q(x), 1, 3, 9 + n)));
     }},
    {"T5.IV*.1", T::C3, Fx, 3, "v(a)=1", "IV*", "3", "3", false, [](C x) { return x.va == 1; },
     [](C) { return out(K::IVstar, 3, 3); }},
    {"T5.IV*.2", T::C3, Fx, 3, "v(a)=1 mod 3, v(a)!=1", "IV*", "5", "3", false,
     [](C x) { return x.va % 3 == 1 && x.va != 1; }, [](C) { return out(K::IVstar, 5, 3); }},
};

// C4, a = c^2 d
const std::vector<TableRow> kTable6 = {
    {"T6.In*", T::C4, Odd, 0, "n=v(a) odd", "I(v(a))*", "2", "4", false, [](C x) { return x.va % 2 == 1; },
     [](C x) { return star(x.va, 2, 4); }},
    {"T6.III", T::C4, Fx, 2, "v(a)=2", "III", "3", "2", false, [](C x) { return x.va == 2; },
     [](C) { return out(K::III, 3, 2); }},
    {"T6.I0*", T::C4, Fx, 2, "v(a+16b)=5", "I0*", "5", "2", false, [](C x) { return x.v(x.a + 16 * x.b) == 5; },
     [](C) { return star(0, 5, 2); }},
    {"T6.I1*", T::C4, Fx, 2, "n=v(a)=1", "I1*", "3", "4", false, [](C x) { return x.va == 1; },
     [](C) { return star(1, 3, 4); }},
    {"T6.I3*.1", T::C4, Fx, 2, "n=v(a)=3", "I3*", "5", "4", false, [](C x) { return x.va == 3; },
     [](C) { return star(3, 5, 4); }},
    {"T6.In*.1", T::C4, Fx, 2, "n=v(a)>=5 odd", "I(v(a))*", "6", "4", false,
     [](C x) { return x.va >= 5 && x.va % 2 == 1; }, [](C x) { return star(x.va, 6, 4); }},
    {"T6.In*.2", T::C4, Fx, 2, "n=v(a)-4>=2 even, bd=1 mod 4", "I(v(a)-4)*", "4", "4", false,
     [](C x) { return x.va >= 6 && x.va % 2 == 0 && x.m(x.b * x.dd, 4) == 1; },
     [](C x) { return star(x.va - 4, 4, 4); }},
    {"T6.I3*.2", T::C4, Fx, 2, "n=v(a+16b)-4=3", "I3*", "4",
     "2 if d(a+16b) = 2^7 mod 2^9, 4 if d(a+16b) = 3*2^7 mod 2^9", false,
     [](C x) { return x.v(x.a + 16 * x.b) == 7; },
     [](C x) { return star(3, 4, four_or_two(mod(x.dd * (x.a + 16 * x.b), 512L) == 384)); }},
    {"T6.In*.3", T::C4, Fx, 2, "n=v(a+16b)-4>=2, n!=3", "I(v(a+16b)-4)*", "4",
     "2 if d(a+16b) = 3*2^(n+4) mod 2^(n+6), 4 if d(a+16b) = 2^(n+4) mod 2^(n+6)", false,
     [](C x) {
         int w = x.v(x.a + 16 * x.b);
         return w >= 6 && w != 7;
     },
     [](C x) {
         int n = x.v(x.a + 16 * x.b) - 4;
         Int q = x.dd * (x.a + 16 * x.b);
         Int pk = ipow(2, n + 4);
         return star(n, 4, four_or_two(mod(q - pk, pk * 4) == 0));
     }},
    {"T6.III*", T::C4, Fx, 2, "v(a)=6, bd=3 mod 4", "III*", "3", "2", false,
     [](C x) { return x.va == 6 && x.m(x.b * x.dd, 4) == 3; }, [](C) { return out(K::IIIstar, 3, 2); }},
};

// C2xC2
const std::vector<TableRow> kTable7 = {
    {"T7.I0*", T::C2xC2, Odd, 0, "v(d)=1, v(ab(a-b))=0", "I0*", "2", "4", false,
     [](C x) { return x.vd == 1 && x.v(x.a * x.b * (x.a - x.b)) == 0; }, [](C) { return star(0, 2, 4); }},
    {"T7.In*", T::C2xC2, Odd, 0, "v(d)=1, n=2v(ab(a-b))>=2", "I(2v(ab(a-b)))*", "2", "4", true,
     [](C x) { return x.vd == 1 && x.v(x.a * x.b * (x.a - x.b)) >= 1; },
     [](C x) { return star(2 * x.v(x.a * x.b * (x.a - x.b)), 2, 4); }},
    {"T7.III", T::C2xC2, Fx, 2, "v(d)=0, v(a)=1", "III", "5", "2", false,
     [](C x) { return x.vd == 0 && x.va == 1; }, [](C) { return out(K::III, 5, 2); }},
    {"T7.I0*.2", T::C2xC2, Fx, 2, "v(a)=2, bd=3 mod 4", "I0*", "4", "2", true,
     [](C x) { return x.va == 2 && x.m(x.b * x.d, 4) == 3; }, [](C) { return star(0, 4, 2); }},
    {"T7.I1*", T::C2xC2, Fx, 2, "v(a)=2, bd=1 mod 4", "I1*", "3",
     "2 if (bd=1 mod 8, ad=12 mod 16) or (bd=5 mod 8, ad=4 mod 16); 4 if (bd=1 mod 8, ad=4 mod 16) or "
     "(bd=5 mod 8, ad=12 mod 16)",
     false, [](C x) { return x.va == 2 && x.m(x.b * x.d, 4) == 1; },
     [](C x) {
         long bd = x.m(x.b * x.d, 8), ad = x.m(x.a * x.d, 16);
         return star(1, 3, four_or_two((bd == 1 && ad == 4) || (bd == 5 && ad == 12)));
     }},
    {"T7.In*.1", T::C2xC2, Fx, 2, "v(d)=1, n=2v(a)>=2", "I(2v(a))*", "6", "4", false,
     [](C x) { return x.vd == 1; }, [](C x) { return star(2 * x.va, 6, 4); }},
    {"T7.In*.2", T::C2xC2, Fx, 2, "n=2v(a)-4>=2, bd=3 mod 4", "I(2v(a)-4)*", "4", "4", false,
     [](C x) { return x.va >= 3 && x.m(x.b * x.d, 4) == 3; }, [](C x) { return star(2 * x.va - 4, 4, 4); }},
    {"T7.III*", T::C2xC2, Fx, 2, "v(a)=3, bd=1 mod 4", "III*", "3", "2", false,
     [](C x) { return x.va == 3 && x.m(x.b * x.d, 4) == 1; }, [](C) { return out(K::IIIstar, 3, 2); }},
};

// Remaining families
const std::vector<TableRow> kTable8 = {
    {"T8.C5.II", T::C5, Fx, 5, "v(a+18b)=1", "II", "2", "1", false, [](C x) { return x.v(x.a + 18 * x.b) == 1; },
     [](C) { return out(K::II, 2, 1); }},
    {"T8.C5.III", T::C5, Fx, 5, "v(a+18b)>=2", "III", "2", "2", false,
     [](C x) { return x.v(x.a + 18 * x.b) >= 2; }, [](C) { return out(K::III, 2, 2); }},
    {"T8.C6.IV", T::C6, Fx, 2, "v(a+b)=1", "IV", "2", "3", false, [](C x) { return x.v(x.a + x.b) == 1; },
     [](C) { return out(K::IV, 2, 3); }},
    {"T8.C6.IV*", T::C6, Fx, 2, "v(a+b)=2", "IV*", "2", "3", false, [](C x) { return x.v(x.a + x.b) == 2; },
     [](C) { return out(K::IVstar, 2, 3); }},
    {"T8.C6.III", T::C6, Fx, 3, "v(a)=1", "III", "2", "2", false, [](C x) { return x.va == 1; },
     [](C) { return out(K::III, 2, 2); }},
    {"T8.C6.I0*", T::C6, Fx, 3, "v(a+9b)=2, v(a)=2", "I0*", "2", "2", false,
     [](C x) { return x.va == 2 && x.v(x.a + 9 * x.b) == 2; }, [](C) { return star(0, 2, 2); }},
    {"T8.C6.In*.1", T::C6, Fx, 3, "n=v(a+9b)-2>=1, v(a)=2", "I(v(a+9b)-2)*", "2",
     "4 if ab+9b^2 = 3^(n+2) mod 3^(n+3) else 2", false,
     [](C x) { return x.va == 2 && x.v(x.a + 9 * x.b) >= 3; },
     [](C x) {
         int n = x.v(x.a + 9 * x.b) - 2;
         return star(n, 2, four_or_two(cong_pow(x.a * x.b + 9 * x.b * x.b, 1, 3, n + 2)));
     }},
    {"T8.C6.In*.2", T::C6, Fx, 3, "n=2v(a)-4>=2, v(a)>=3", "I(2v(a)-4)*", "2", "4", false,
     [](C x) { return x.va >= 3; }, [](C x) { return star(2 * x.va - 4, 2, 4); }},
    {"T8.C7.II", T::C7, Fx, 7, "v(a+4b)>=1", "II", "2", "1", false, [](C x) { return x.v(x.a + 4 * x.b) >= 1; },
     [](C) { return out(K::II, 2, 1); }},
    {"T8.C8.In*", T::C8, Fx, 2, "n=2v(a)-1>=3", "I(2v(a)-1)*", "4", "4", false, [](C x) { return x.va >= 2; },
     [](C x) { return star(2 * x.va - 1, 4, 4); }},
    {"T8.C9.IV", T::C9, Fx, 3, "v(a+b)>=1", "IV", "3", "3", false, [](C x) { return x.v(x.a + x.b) >= 1; },
     [](C) { return out(K::IV, 3, 3); }},
    {"T8.C10.III", T::C10, Fx, 5, "v(a+b)>=1", "III", "2", "2", false, [](C x) { return x.v(x.a + x.b) >= 1; },
     [](C) { return out(K::III, 2, 2); }},
    {"T8.C12.In*", T::C12, Fx, 3, "n=2v(a)-1>=1", "I(2v(a)-1)*", "2", "4", false, [](C x) { return x.va >= 1; },
     [](C x) { return star(2 * x.va - 1, 2, 4); }},
    {"T8.C2xC4.I1*", T::C2xC4, Fx, 2, "n=1 if v(a)=1 or v(a+4b)=3", "I1*", "3", "4", false,
     [](C x) { return x.va == 1 || (x.va == 2 && x.v(x.a + 4 * x.b) == 3); }, [](C) { return star(1, 3, 4); }},
    {"T8.C2xC4.In*.1", T::C2xC4, Fx, 2, "n=2v(a+8b)-6>=2, v(a)=3", "I(2v(a+8b)-6)*", "4", "4", false,
     [](C x) { return x.va == 3; }, [](C x) { return star(2 * x.v(x.a + 8 * x.b) - 6, 4, 4); }},
    {"T8.C2xC4.In*.2", T::C2xC4, Fx, 2, "n=2v(a)-6>=2, v(a)>=4", "I(2v(a)-6)*", "4", "4", false,
     [](C x) { return x.va >= 4; }, [](C x) { return star(2 * x.va - 6, 4, 4); }},
    {"T8.C2xC6.In*.1", T::C2xC6, Fx, 3, "n=2, v(b)>=3", "I2*", "2", "4", false, [](C x) { return x.vb >= 3; },
     [](C) { return star(2, 2, 4); }},
    {"T8.C2xC6.In*.2", T::C2xC6, Fx, 3, "n=2v(b^2-9a^2)-4, v(b)=1", "I(2v(b^2-9a^2)-4)*", "2", "4", false,
     [](C x) { return x.vb == 1; }, [](C x) { return star(2 * x.v(x.b * x.b - 9 * x.a * x.a) - 4, 2, 4); }},
    {"T8.C2xC6.In*.3", T::C2xC6, Fx, 3, "n=2v(b-9a)-2, v(b)=2", "I(2v(b-9a)-2)*", "2", "4", false,
     [](C x) { return x.vb == 2; }, [](C x) { return star(2 * x.v(x.b - 9 * x.a) - 2, 2, 4); }},
};

int ogg_vdelta(const RowOutput& o) {
    return o.fp - 1 + o.type.components();
}

}  // namespace

bool TableRow::applies_to(const Int& p) const {
    switch (pattern) {
    case PPattern::Fixed:
        return p == fixed_p;
    case PPattern::Odd:
        return p != 2;
    case PPattern::NotThree:
        return p != 3;
    case PPattern::AtLeastFive:
        return p >= 5;
    }
    return false;
}

std::string TableRow::p_pattern() const {
    switch (pattern) {
    case PPattern::Fixed:
        return std::to_string(fixed_p);
    case PPattern::Odd:
        return "odd";
    case PPattern::NotThree:
        return "!=3";
    case PPattern::AtLeastFive:
        return ">=5";
    }
    return "?";
}

const std::vector<TableRow>& table_rows(int table) {
    switch (table) {
    case 2:
        return detail::c2_at_2_rows();
    case 3:
        return kTable3;
    case 4:
        return kTable4;
    case 5:
        return kTable5;
    case 6:
        return kTable6;
    case 7:
        return kTable7;
    case 8:
        return kTable8;
    }
    throw ArgumentError("no table " + std::to_string(table));
}

int table_for(TorsionTag tag, const Int& p) {
    switch (tag) {
    case T::C2:
        return p == 2 ? 2 : 3;
    case T::C3zero:
        return 4;
    case T::C3:
        return 5;
    case T::C4:
        return 6;
    case T::C2xC2:
        return 7;
    default:
        return 8;
    }
}

namespace {
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"') r += '"';
        r += ch;
    }
    return r + "\"";
}
}  // namespace

std::string rows_csv(int table) {
    std::ostringstream os;
    os << "row_id,family,p_pattern,condition,type,f,c,reconstructed\n";
    for (const auto& r : table_rows(table))
        os << r.id << ',' << tag_name(r.tag) << ',' << csv_field(r.p_pattern()) << ',' << csv_field(r.condition)
           << ',' << csv_field(r.type) << ',' << csv_field(r.f) << ',' << csv_field(r.c) << ','
           << (r.reconstructed ? "yes" : "no") << '\n';
    return os.str();
}

RowContext make_context(const FamilySpec& s, const Int& p) {
    RowContext x;
    x.tag = s.tag;
    x.p = p;
    x.a = s.a;
    x.b = s.b;
    x.d = s.d;
    x.va = val(s.a, p);
    x.vb = has_b(s.tag) ? val(s.b, p) : 0;
    x.vd = has_d(s.tag) ? val(s.d, p) : 0;
    if (s.tag == T::C2) {
        x.t = s.b * s.b * s.d - s.a * s.a;
        x.vt = val(x.t, p);
    } else if (s.tag == T::C3) {
        auto cf = cubefree_decompose(s.a);
        x.c = cf.c;
        x.dd = cf.d;
        x.e = cf.e;
    } else if (s.tag == T::C4) {
        auto sq = squarefree_decompose(s.a);
        x.c = sq.s;
        x.dd = sq.t;
    }
    return x;
}

std::vector<const TableRow*> matching_rows(const FamilySpec& s, const Int& p) {
    std::vector<const TableRow*> out;
    RowContext x = make_context(s, p);
    for (const auto& r : table_rows(table_for(s.tag, p)))
        if (r.tag == s.tag && r.applies_to(p) && r.match(x)) out.push_back(&r);
    return out;
}

Classification classify_detailed(const FamilySpec& s, const Int& p) {
    if (!additive_condition(s, p)) throw NotAdditive(s.str() + " is not additive at " + p.get_str());
    RowContext x = make_context(s, p);
    for (const auto& r : table_rows(table_for(s.tag, p))) {
        if (r.tag != s.tag || !r.applies_to(p) || !r.match(x)) continue;
        RowOutput o = r.out(x);
        Classification c;
        c.row = &r;
        c.data.p = p;
        c.data.type = o.type;
        c.data.fp = o.fp;
        c.data.cp = o.cp;
        c.data.vdelta_min = ogg_vdelta(o);
        return c;
    }
    throw CoverageError("no table row for " + s.str() + " at p=" + p.get_str());
}

LocalData classify(const FamilySpec& s, const Int& p) {
    return classify_detailed(s, p).data;
}

bool CrosscheckReport::ok() const {
    for (const auto& e : entries)
        if (!e.match) return false;
    return true;
}

CrosscheckReport crosscheck(const FamilySpec& s, const FactorOptions& opt) {
    CrosscheckReport rep;
    rep.spec = s;
    for (const auto& ap : additive_primes(s, opt)) {
        CrosscheckEntry e;
        e.p = ap.p;
        e.condition = ap.condition;
        auto [model, map] = minimal_model_at(s, ap.p);
        e.engine = tate_unchecked(model.ainvs(), ap.p);
        try {
            auto c = classify_detailed(s, ap.p);
            e.table = c.data;
            e.row_id = c.row->id;
            e.match = e.table.type == e.engine.type && e.table.fp == e.engine.fp && e.table.cp == e.engine.cp;
        } catch (const CoverageError& err) {
            e.error = err.what();
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace kodaira
