// C2 at p = 2. t = b^2 d - a^2 throughout.
#include "kodaira/classify.hpp"

namespace kodaira {

namespace {

using K = KodairaType;
using C = const RowContext&;

RowOutput out(K::Kind k, int f, int c) {
    return {K::of(k), f, c};
}
RowOutput star(int n, int f, int c) {
    return {K::Instar(n), f, c};
}
int four_or_two(bool four) {
    return four ? 4 : 2;
}
Int fdiv(const Int& x, unsigned long k) {
    Int q;
    mpz_fdiv_q_ui(q.get_mpz_t(), x.get_mpz_t(), k);
    return q;
}

#define ROW(id, cond, type, f, c) id, TorsionTag::C2, PPattern::Fixed, 2, cond, type, f, c, true

const std::vector<TableRow> kRows = {
    // types II, III, IV
    {ROW("T2.II.1", "v(a)=v(b)=0, v(t)=0, v(d)=1", "II", "7", "1"),
     [](C x) { return x.va == 0 && x.vb == 0 && x.vt == 0 && x.vd == 1; },
     [](C) { return out(K::II, 7, 1); }},
    {ROW("T2.II.2", "v(a)>0, v(b)=v(d)=v(t)=0, d=3 mod 4", "II", "6", "1"),
     [](C x) { return x.va > 0 && x.vb == 0 && x.vd == 0 && x.vt == 0 && x.m(x.d, 4) == 3; },
     [](C) { return out(K::II, 6, 1); }},
    {ROW("T2.II.3", "v(a)=v(b)=1, v(t)=4, t-8a=32 mod 64", "II", "4", "1"),
     [](C x) { return x.va == 1 && x.vb == 1 && x.vt == 4 && x.m(x.t - 8 * x.a, 64) == 32; },
     [](C) { return out(K::II, 4, 1); }},
    {ROW("T2.III.1", "v(a)>0, v(b)=0, v(t)=1, v(d)=1", "III", "8", "2"),
     [](C x) { return x.va > 0 && x.vb == 0 && x.vt == 1 && x.vd == 1; },
     [](C) { return out(K::III, 8, 2); }},
    {ROW("T2.III.2", "v(a)=v(b)=0, v(t)=1, d=3 mod 4", "III", "7", "2"),
     [](C x) { return x.va == 0 && x.vb == 0 && x.vt == 1 && x.m(x.d, 4) == 3; },
     [](C) { return out(K::III, 7, 2); }},
    {ROW("T2.III.3", "v(a)>0, v(b)=v(d)=v(t)=0, d=1 mod 4", "III", "5", "2"),
     [](C x) { return x.va > 0 && x.vb == 0 && x.vd == 0 && x.vt == 0 && x.m(x.d, 4) == 1; },
     [](C) { return out(K::III, 5, 2); }},
    {ROW("T2.III.4", "v(a)=v(b)=1, v(t)=5", "III", "5", "2"),
     [](C x) { return x.va == 1 && x.vb == 1 && x.vt == 5; }, [](C) { return out(K::III, 5, 2); }},
    {ROW("T2.III.5", "v(a)=v(b)=1, v(t)=4, t=48 mod 64, t-8a!=32 mod 64, a=6 mod 8", "III", "3", "2"),
     [](C x) {
         return x.va == 1 && x.vb == 1 && x.vt == 4 && x.m(x.t - 8 * x.a, 64) != 32 && x.m(x.t, 64) == 48 &&
                x.m(x.a, 8) == 6;
     },
     [](C) { return out(K::III, 3, 2); }},
    {ROW("T2.IV.1", "v(a)=v(b)=1, v(t)=4, t=16 mod 64, t-8a!=32 mod 64, a=2 mod 8", "IV", "2",
         "3 if t=8a mod 128 else 1"),
     [](C x) {
         return x.va == 1 && x.vb == 1 && x.vt == 4 && x.m(x.t - 8 * x.a, 64) != 32 && x.m(x.t, 64) == 16 &&
                x.m(x.a, 8) == 2;
     },
     [](C x) { return out(K::IV, 2, x.m(x.t - 8 * x.a, 128) == 0 ? 3 : 1); }},

    // I0*
    {ROW("T2.I0*.1", "v(b)=1, a=1 mod 4, d=2 mod 4", "I0*", "5", "1"),
     [](C x) { return x.vb == 1 && x.m(x.a, 4) == 1 && x.m(x.d, 4) == 2; }, [](C) { return star(0, 5, 1); }},
    {ROW("T2.I0*.2", "v(b)=1, a=1 mod 4, d=3 mod 4", "I0*", "4", "1"),
     [](C x) { return x.vb == 1 && x.m(x.a, 4) == 1 && x.m(x.d, 4) == 3; }, [](C) { return star(0, 4, 1); }},
    {ROW("T2.I0*.3", "v(b)=0, v(t)=2", "I0*", "6", "2"), [](C x) { return x.vb == 0 && x.vt == 2; },
     [](C) { return star(0, 6, 2); }},
    {ROW("T2.I0*.4", "v(b)=1, a=3 mod 4, d=1 mod 4", "I0*", "4", "2"),
     [](C x) { return x.vb == 1 && x.m(x.a, 4) == 3 && x.m(x.d, 4) == 1; }, [](C) { return star(0, 4, 2); }},
    {ROW("T2.I0*.5", "v(b)=1, a=3 mod 4, d=2 mod 4", "I0*", "5", "2"),
     [](C x) { return x.vb == 1 && x.m(x.a, 4) == 3 && x.m(x.d, 4) == 2; }, [](C) { return star(0, 5, 2); }},
    {ROW("T2.I0*.6", "v(t)=6, a=6 mod 8", "I0*", "4", "2"), [](C x) { return x.vt == 6 && x.m(x.a, 8) == 6; },
     [](C) { return star(0, 4, 2); }},

    // In*, fixed n
    {ROW("T2.I1*.1", "v(b)=1, a=1 mod 4, d=1 mod 4", "I1*", "3", "4 if ad=1 mod 8 else 2"),
     [](C x) { return x.vb == 1 && x.m(x.a, 4) == 1 && x.m(x.d, 4) == 1; },
     [](C x) { return star(1, 3, four_or_two(x.m(x.a * x.d, 8) == 1)); }},
    {ROW("T2.I1*.2", "v(t)=6, a=2 mod 8", "I1*", "3", "4 if t+16a=96 mod 256 else 2"),
     [](C x) { return x.vt == 6 && x.m(x.a, 8) == 2; },
     [](C x) { return star(1, 3, four_or_two(x.m(x.t + 16 * x.a, 256) == 96)); }},
    {ROW("T2.I2*.1", "v(t)=7, a=6 mod 8", "I2*", "4", "4"), [](C x) { return x.vt == 7 && x.m(x.a, 8) == 6; },
     [](C) { return star(2, 4, 4); }},
    {ROW("T2.I2*.2", "v(b)=0, v(t)=3", "I2*", "6", "4"), [](C x) { return x.vb == 0 && x.vt == 3; },
     [](C) { return star(2, 6, 4); }},
    {ROW("T2.I2*.3", "v(a)=v(b)=1, v(t)=2", "I2*", "7", "4 if ad=4 mod 16 else 2"),
     [](C x) { return x.va == 1 && x.vb == 1 && x.vt == 2; },
     [](C x) { return star(2, 7, four_or_two(x.m(x.a * x.d, 16) == 4)); }},
    {ROW("T2.I2*.4", "v(a)>1, v(b)=1, d=1 mod 4", "I2*", "6", "4 if d=1 mod 8 else 2"),
     [](C x) { return x.va > 1 && x.vb == 1 && x.m(x.d, 4) == 1; },
     [](C x) { return star(2, 6, four_or_two(x.m(x.d, 8) == 1)); }},
    {ROW("T2.I2*.5", "v(b)=2, v(d)=0, a=1 mod 4", "I2*", "4", "4 if d=1 mod 4 else 2"),
     [](C x) { return x.vb == 2 && x.vd == 0 && x.m(x.a, 4) == 1; },
     [](C x) { return star(2, 4, four_or_two(x.m(x.d, 4) == 1)); }},
    {ROW("T2.I3*.1", "v(a)>1, v(b)=1, d=3 mod 8", "I3*", "5",
         "k=a/4, j=b^2d/4 mod 16: 4 if (k=0,1 mod 4 and j=3) or (k=2,3 mod 4 and j=11) else 2"),
     [](C x) { return x.va > 1 && x.vb == 1 && x.m(x.d, 8) == 3; },
     [](C x) {
         long k = x.m(x.a / 4, 4), j = x.m(x.b * x.b * x.d / 4, 16);
         return star(3, 5, four_or_two((k <= 1 && j == 3) || (k >= 2 && j == 11)));
     }},
    {ROW("T2.I3*.2", "v(a)>1, v(b)=1, d=7 mod 8", "I3*", "5",
         "k=a/4, j=b^2d/4 mod 16: 4 if (k=0,3 mod 4 and j=15) or (k=1,2 mod 4 and j=7) else 2"),
     [](C x) { return x.va > 1 && x.vb == 1 && x.m(x.d, 8) == 7; },
     [](C x) {
         long k = x.m(x.a / 4, 4), j = x.m(x.b * x.b * x.d / 4, 16);
         bool k03 = k == 0 || k == 3;
         return star(3, 5, four_or_two((k03 && j == 15) || (!k03 && j == 7)));
     }},
    {ROW("T2.I3*.3", "v(b)=2, v(d)=1, a=1 mod 4", "I3*", "4", "4 if a+d=7 mod 8 else 2"),
     [](C x) { return x.vb == 2 && x.vd == 1 && x.m(x.a, 4) == 1; },
     [](C x) { return star(3, 4, four_or_two(x.m(x.a + x.d, 8) == 7)); }},
    {ROW("T2.I4*.1", "v(a)=1, v(b)=2, d=1 mod 4", "I4*", "6", "4 if d=1 mod 8 else 2"),
     [](C x) { return x.va == 1 && x.vb == 2 && x.m(x.d, 4) == 1; },
     [](C x) { return star(4, 6, four_or_two(x.m(x.d, 8) == 1)); }},
    {ROW("T2.I4*.2", "v(a)=1, v(b)=2, d=3 mod 4", "I4*", "6", "4 if a+d=1 mod 8 else 2"),
     [](C x) { return x.va == 1 && x.vb == 2 && x.m(x.d, 4) == 3; },
     [](C x) { return star(4, 6, four_or_two(x.m(x.a + x.d, 8) == 1)); }},
    {ROW("T2.I5*.1", "v(b)=2, ad=4 mod 16", "I5*", "6", "4 if ad=4 mod 32 else 2"),
     [](C x) { return x.vb == 2 && x.m(x.a * x.d, 16) == 4; },
     [](C x) { return star(5, 6, four_or_two(x.m(x.a * x.d, 32) == 4)); }},
    {ROW("T2.I5*.2", "v(b)=2, ad=12 mod 16", "I5*", "6", "4 if floor(a/2)-floor(d/2)=2 mod 8 else 2"),
     [](C x) { return x.vb == 2 && x.m(x.a * x.d, 16) == 12; },
     [](C x) { return star(5, 6, four_or_two(x.m(fdiv(x.a, 2) - fdiv(x.d, 2), 8) == 2)); }},

    // In*, n from valuations
    {ROW("T2.In*.1", "n=2v(b)-2>=4, v(d)=0, a=1 mod 4", "I(2v(b)-2)*", "4", "4 if d=1 mod 4 else 2"),
     [](C x) { return x.vb >= 3 && x.vd == 0 && x.m(x.a, 4) == 1; },
     [](C x) { return star(2 * x.vb - 2, 4, four_or_two(x.m(x.d, 4) == 1)); }},
    {ROW("T2.In*.2", "n=2v(b)-1>=5, v(d)=1, a=1 mod 4", "I(2v(b)-1)*", "4", "4 if a+d=3 mod 8 else 2"),
     [](C x) { return x.vb >= 3 && x.vd == 1 && x.m(x.a, 4) == 1; },
     [](C x) { return star(2 * x.vb - 1, 4, four_or_two(x.m(x.a + x.d, 8) == 3)); }},
    {ROW("T2.In*.3", "n=2v(b)>=6, v(d)=0, a=2 mod 4", "I(2v(b))*", "6",
         "4 if d=1 mod 8 or (d=3 mod 4 and a+d=5 mod 8) else 2"),
     [](C x) { return x.vb >= 3 && x.vd == 0 && x.m(x.a, 4) == 2; },
     [](C x) {
         bool four = x.m(x.d, 8) == 1 || (x.m(x.d, 4) == 3 && x.m(x.a + x.d, 8) == 5);
         return star(2 * x.vb, 6, four_or_two(four));
     }},
    {ROW("T2.In*.4", "n=2v(b)+1>=7, a=2 mod 4, ad=4 mod 16", "I(2v(b)+1)*", "6", "4 if ad=4 mod 32 else 2"),
     [](C x) { return x.vb >= 3 && x.m(x.a, 4) == 2 && x.m(x.a * x.d, 16) == 4; },
     [](C x) { return star(2 * x.vb + 1, 6, four_or_two(x.m(x.a * x.d, 32) == 4)); }},
    {ROW("T2.In*.5", "n=2v(b)+1>=7, a=2 mod 4, ad=12 mod 16", "I(2v(b)+1)*", "6",
         "q=ad/4 mod 8: 4 if (a=2 mod 8 and q=3) or (a=6 mod 8 and q=7) else 2"),
     [](C x) { return x.vb >= 3 && x.m(x.a, 4) == 2 && x.m(x.a * x.d, 16) == 12; },
     [](C x) {
         long q = x.m(x.a * x.d / 4, 8), a8 = x.m(x.a, 8);
         return star(2 * x.vb + 1, 6, four_or_two((a8 == 2 && q == 3) || (a8 == 6 && q == 7)));
     }},
    {ROW("T2.In*.6", "n=2v(t)-4>=4, v(b)=0", "I(2v(t)-4)*", "6", "4"),
     [](C x) { return x.vb == 0 && x.vt >= 4; }, [](C x) { return star(2 * x.vt - 4, 6, 4); }},
    {ROW("T2.In*.7", "n=2v(t)-12>=4, a=6 mod 8", "I(2v(t)-12)*", "4", "4"),
     [](C x) { return x.vt >= 8 && x.m(x.a, 8) == 6; }, [](C x) { return star(2 * x.vt - 12, 4, 4); }},

    // starred
    {ROW("T2.IV*.1", "v(b)=1, a=3 mod 4, d=3 mod 4", "IV*", "2", "3 if ad=1 mod 8 else 1"),
     [](C x) { return x.vb == 1 && x.m(x.a, 4) == 3 && x.m(x.d, 4) == 3; },
     [](C x) { return out(K::IVstar, 2, x.m(x.a * x.d, 8) == 1 ? 3 : 1); }},
    {ROW("T2.III*.1", "v(a)=v(b)=1, v(t)=3", "III*", "7", "2"),
     [](C x) { return x.va == 1 && x.vb == 1 && x.vt == 3; }, [](C) { return out(K::IIIstar, 7, 2); }},
    {ROW("T2.III*.2", "v(a)>1, v(b)=v(d)=1", "III*", "8", "2"),
     [](C x) { return x.va > 1 && x.vb == 1 && x.vd == 1; }, [](C) { return out(K::IIIstar, 8, 2); }},
    {ROW("T2.III*.3", "v(t)=7, a=2 mod 8", "III*", "3", "2"), [](C x) { return x.vt == 7 && x.m(x.a, 8) == 2; },
     [](C) { return out(K::IIIstar, 3, 2); }},
    {ROW("T2.III*.4", "v(a)=0, v(b)=2, v(d)=0, a=3 mod 4", "III*", "3", "2"),
     [](C x) { return x.va == 0 && x.vb == 2 && x.vd == 0 && x.m(x.a, 4) == 3; },
     [](C) { return out(K::IIIstar, 3, 2); }},
    {ROW("T2.II*.1", "v(a)=0, v(b)=2, v(d)=1, a=3 mod 4", "II*", "3", "1"),
     [](C x) { return x.va == 0 && x.vb == 2 && x.vd == 1 && x.m(x.a, 4) == 3; },
     [](C) { return out(K::IIstar, 3, 1); }},
};

#undef ROW

}  // namespace

namespace detail {
const std::vector<TableRow>& c2_at_2_rows() {
    return kRows;
}
}  // namespace detail

}  // namespace kodaira
