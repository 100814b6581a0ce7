#include "reflow/pairing.hpp"

namespace reflow {

namespace {

// Projective point on the twist used only inside the Miller loop; lines are
// scale-invariant in Fp2 so no normalization is needed between steps.
struct TwistProjective {
    Fp2 x, y, z;
};

// Sparse line  a*w^0 + b*w^3 + c*w^5  in the w-basis of Fp12.
Fp12 line_to_fp12(const Fp2& a, const Fp2& b, const Fp2& c) {
    return Fp12(Fp6(a, Fp2::zero(), Fp2::zero()), Fp6(Fp2::zero(), b, c));
}

// xi * s for s in Fp, with xi = 1 + u.
Fp2 xi_scale(const Fp& s) { return Fp2(s, s); }

// Doubling step: advances t to 2t and returns the tangent line evaluated at
// (xp, yp), projectively scaled.
Fp12 double_step(TwistProjective& t, const Fp& xp, const Fp& yp) {
    Fp2 xx = t.x.square();          // X^2
    Fp2 yy = t.y.square();          // Y^2
    Fp2 zz = t.z.square();          // Z^2
    Fp2 xxx = xx * t.x;             // X^3
    Fp2 yz = t.y * t.z;
    Fp2 y2z = yy * t.z;             // Y^2 Z

    Fp2 xxz = xx * t.z;

    Fp2 l_w0 = (yz * zz).dbl().scale(yp).mul_by_xi();   // 2YZ^2 * yp * xi
    Fp2 l_w3 = xxx + xxx.dbl() - y2z.dbl();             // 3X^3 - 2Y^2 Z
    Fp2 l_w5 = -(xxz + xxz.dbl()).scale(xp);            // -3X^2 Z * xp

    Fp2 x4 = xx.square();                         // X^4
    Fp2 xy2z = t.x * y2z;                         // X Y^2 Z
    Fp2 nine_x4 = x4.dbl().dbl().dbl() + x4;      // 9X^4
    Fp2 eight_xy2z = xy2z.dbl().dbl().dbl();      // 8XY^2Z
    Fp2 y4 = yy.square();

    TwistProjective n;
    n.x = (nine_x4 - eight_xy2z) * yz.dbl();
    Fp2 x3y2z = xxx * y2z;                        // X^3 Y^2 Z
    Fp2 x6 = xxx.square();                        // X^6
    // 36 X^3 Y^2 Z - 27 X^6 - 8 Y^4 Z^2
    n.y = x3y2z.dbl().dbl().dbl().dbl().dbl() + x3y2z.dbl().dbl()
          - (x6.dbl().dbl().dbl() + x6.dbl().dbl().dbl().dbl() + x6 + x6.dbl())
          - (y4 * zz).dbl().dbl().dbl();
    Fp2 y3 = yy * t.y;
    n.z = (y3 * zz * t.z).dbl().dbl().dbl();      // 8 Y^3 Z^3
    t = n;

    return line_to_fp12(l_w0, l_w3, l_w5);
}

// Addition step with the affine base point q = (x2, y2): advances t to t+q
// and returns the chord line through them evaluated at (xp, yp).
Fp12 add_step(TwistProjective& t, const Fp2& x2, const Fp2& y2,
              const Fp& xp, const Fp& yp) {
    Fp2 n = y2 * t.z - t.y;         // numerator of the slope
    Fp2 d = x2 * t.z - t.x;         // denominator of the slope

    Fp2 l_w0 = d.scale(yp).mul_by_xi();
    Fp2 l_w3 = n * x2 - d * y2;
    Fp2 l_w5 = -n.scale(xp);

    Fp2 dd = d.square();
    Fp2 ddd = dd * d;
    Fp2 h = n.square() * t.z - (t.x + x2 * t.z) * dd;

    TwistProjective r;
    r.x = d * h;
    r.y = n * (x2 * dd * t.z - h) - y2 * ddd * t.z;
    r.z = ddd * t.z;
    t = r;

    return line_to_fp12(l_w0, l_w3, l_w5);
}

// f^e for |e| given as mpz magnitude, inverting via conjugation when the
// exponent is negative (valid in the cyclotomic subgroup).
Fp12 cyclotomic_exp(const Fp12& f, const mpz_t e_abs, bool negative) {
    Fp12 acc = Fp12::one();
    for (mp_bitcnt_t i = mpz_sizeinbase(e_abs, 2); i-- > 0;) {
        acc = acc.square();
        if (mpz_tstbit(e_abs, i)) acc *= f;
    }
    return negative ? acc.conjugate() : acc;
}

struct HardPartExponents {
    mpz_t x_abs;
    mpz_t x_abs_plus_1;

    HardPartExponents() {
        mpz_init_set(x_abs, curve_constants().x_abs);
        mpz_init(x_abs_plus_1);
        mpz_add_ui(x_abs_plus_1, x_abs, 1);
    }
};

const HardPartExponents& hard_exponents() {
    static const HardPartExponents e;
    return e;
}

} // namespace

namespace pairing_detail {

Fp12 miller_loop(const G2Point& q, const G1Point& p) {
    if (q.is_infinity() || p.is_infinity()) return Fp12::one();
    auto qa = q.to_affine();
    auto pa = p.to_affine();

    TwistProjective t{qa.x, qa.y, Fp2::one()};
    Fp12 f = Fp12::one();

    const mpz_t& loop = hard_exponents().x_abs;
    for (mp_bitcnt_t i = mpz_sizeinbase(loop, 2) - 1; i-- > 0;) {
        f = f.square();
        f *= double_step(t, pa.x, pa.y);
        if (mpz_tstbit(loop, i)) f *= add_step(t, qa.x, qa.y, pa.x, pa.y);
    }
    // BLS parameter is negative: invert via conjugation (exact after the
    // final exponentiation).
    return f.conjugate();
}

Fp12 final_exponentiation(const Fp12& f) {
    if (f.is_zero()) return f;
    // Easy part: f^((p^6 - 1)(p^2 + 1))
    Fp12 g = f.conjugate() * f.inverse();
    g = g.frobenius().frobenius() * g;

    // Hard part: g^((x-1)^2 (x+p) (x^2+p^2-1) + 3), a fixed multiple of
    // (p^4 - p^2 + 1)/r.  x is negative so x-1 and x map to conjugated
    // exponentiations by |x|+1 and |x|.
    const auto& e = hard_exponents();
    Fp12 t1 = cyclotomic_exp(g, e.x_abs_plus_1, true);      // g^(x-1)
    t1 = cyclotomic_exp(t1, e.x_abs_plus_1, true);          // g^((x-1)^2)
    Fp12 t2 = cyclotomic_exp(t1, e.x_abs, true) * t1.frobenius();  // ^(x+p)
    Fp12 t3 = cyclotomic_exp(t2, e.x_abs, true);
    t3 = cyclotomic_exp(t3, e.x_abs, true);                 // ^(x^2)
    t3 = t3 * t2.frobenius().frobenius() * t2.conjugate();  // ^(x^2+p^2-1)
    return t3 * g.square() * g;                             // * g^3
}

} // namespace pairing_detail

GtElement pairing(const G2Point& q, const G1Point& p) {
    return GtElement(
        pairing_detail::final_exponentiation(pairing_detail::miller_loop(q, p)));
}

bool pairing_equals(const G2Point& q1, const G1Point& p1,
                    const G2Point& q2, const G1Point& p2) {
    GtElement a = pairing(q1, p1);
    GtElement b = pairing(q2, p2);
    if (a.value().is_zero() || b.value().is_zero()) return false;
    return a == b;
}

} // namespace reflow
