#pragma once

#include "reflow/fields.hpp"

namespace reflow {

// Quadratic extension Fp2 = Fp[u] / (u^2 + 1).
class Fp2 {
public:
    Fp c0, c1;

    Fp2() = default;
    Fp2(const Fp& a, const Fp& b) : c0(a), c1(b) {}

    static Fp2 zero() { return {}; }
    static Fp2 one() { return {Fp::one(), Fp::zero()}; }
    static Fp2 from_base(const Fp& a) { return {a, Fp::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

    friend Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
    Fp2 operator-() const { return {-c0, -c1}; }

    friend Fp2 operator*(const Fp2& a, const Fp2& b) {
        // Karatsuba over u^2 = -1
        Fp v0 = a.c0 * b.c0;
        Fp v1 = a.c1 * b.c1;
        Fp mixed = (a.c0 + a.c1) * (b.c0 + b.c1);
        return {v0 - v1, mixed - v0 - v1};
    }

    Fp2 square() const {
        // (c0+c1)(c0-c1), 2*c0*c1
        Fp t0 = (c0 + c1) * (c0 - c1);
        Fp t1 = c0 * c1;
        return {t0, t1.dbl()};
    }

    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

    Fp2 scale(const Fp& k) const { return {c0 * k, c1 * k}; }
    Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }

    Fp2 conjugate() const { return {c0, -c1}; }

    // Norm over Fp: c0^2 + c1^2.
    Fp norm() const { return c0.square() + c1.square(); }

    Fp2 inverse() const {
        Fp t = norm().inverse();
        return {c0 * t, -(c1 * t)};
    }

    // Multiply by the sextic non-residue xi = 1 + u.
    Fp2 mul_by_xi() const { return {c0 - c1, c0 + c1}; }

    Fp2 pow(const mpz_t e) const {
        Fp2 acc = one();
        if (mpz_sgn(e) == 0) return acc;
        for (mp_bitcnt_t i = mpz_sizeinbase(e, 2); i-- > 0;) {
            acc = acc.square();
            if (mpz_tstbit(e, i)) acc *= *this;
        }
        return acc;
    }

    friend bool operator==(const Fp2& a, const Fp2& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
    friend bool operator!=(const Fp2& a, const Fp2& b) { return !(a == b); }
};

// Square root in Fp2 via the norm trick; false when a is a non-residue.
bool sqrt_fp2(const Fp2& a, Fp2& out);

// Cubic extension Fp6 = Fp2[v] / (v^3 - xi).
class Fp6 {
public:
    Fp2 c0, c1, c2;

    Fp6() = default;
    Fp6(const Fp2& a, const Fp2& b, const Fp2& c) : c0(a), c1(b), c2(c) {}

    static Fp6 zero() { return {}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

    friend Fp6 operator+(const Fp6& a, const Fp6& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend Fp6 operator-(const Fp6& a, const Fp6& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    Fp6 operator-() const { return {-c0, -c1, -c2}; }

    friend Fp6 operator*(const Fp6& a, const Fp6& b) {
        Fp2 v0 = a.c0 * b.c0;
        Fp2 v1 = a.c1 * b.c1;
        Fp2 v2 = a.c2 * b.c2;
        Fp2 r0 = v0 + ((a.c1 + a.c2) * (b.c1 + b.c2) - v1 - v2).mul_by_xi();
        Fp2 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1 + v2.mul_by_xi();
        Fp2 r2 = (a.c0 + a.c2) * (b.c0 + b.c2) - v0 - v2 + v1;
        return {r0, r1, r2};
    }

    Fp6 square() const { return *this * *this; }
    Fp6 dbl() const { return *this + *this; }

    Fp6& operator+=(const Fp6& o) { return *this = *this + o; }
    Fp6& operator-=(const Fp6& o) { return *this = *this - o; }
    Fp6& operator*=(const Fp6& o) { return *this = *this * o; }

    // Multiply by v: (c0, c1, c2) -> (xi*c2, c0, c1).
    Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

    Fp6 inverse() const {
        Fp2 a0 = c0.square() - (c1 * c2).mul_by_xi();
        Fp2 a1 = c2.square().mul_by_xi() - c0 * c1;
        Fp2 a2 = c1.square() - c0 * c2;
        Fp2 t = (c0 * a0 + (c1 * a2 + c2 * a1).mul_by_xi()).inverse();
        return {a0 * t, a1 * t, a2 * t};
    }

    friend bool operator==(const Fp6& a, const Fp6& b) {
        return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
    }
    friend bool operator!=(const Fp6& a, const Fp6& b) { return !(a == b); }
};

// Quadratic extension Fp12 = Fp6[w] / (w^2 - v).  Equivalently Fp2[w]/(w^6 - xi);
// the w-basis view drives the Frobenius coefficient table.
class Fp12 {
public:
    Fp6 c0, c1;

    Fp12() = default;
    Fp12(const Fp6& a, const Fp6& b) : c0(a), c1(b) {}

    static Fp12 zero() { return {}; }
    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool is_one() const { return *this == one(); }

    friend Fp12 operator+(const Fp12& a, const Fp12& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend Fp12 operator-(const Fp12& a, const Fp12& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }

    friend Fp12 operator*(const Fp12& a, const Fp12& b) {
        Fp6 v0 = a.c0 * b.c0;
        Fp6 v1 = a.c1 * b.c1;
        Fp6 mixed = (a.c0 + a.c1) * (b.c0 + b.c1);
        return {v0 + v1.mul_by_v(), mixed - v0 - v1};
    }

    Fp12 square() const {
        Fp6 t0 = c0 * c1;
        Fp6 t1 = (c0 + c1) * (c0 + c1.mul_by_v());
        return {t1 - t0 - t0.mul_by_v(), t0.dbl()};
    }

    Fp12& operator*=(const Fp12& o) { return *this = *this * o; }

    // Conjugation over Fp6, i.e. the p^6 Frobenius.  For elements of the
    // cyclotomic subgroup this is the inverse.
    Fp12 conjugate() const { return {c0, -c1}; }

    Fp12 inverse() const {
        Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
        return {c0 * t, -(c1 * t)};
    }

    // p-power Frobenius.
    Fp12 frobenius() const;

    Fp12 pow(const mpz_t e) const {
        Fp12 acc = one();
        if (mpz_sgn(e) == 0) return acc;
        for (mp_bitcnt_t i = mpz_sizeinbase(e, 2); i-- > 0;) {
            acc = acc.square();
            if (mpz_tstbit(e, i)) acc *= *this;
        }
        return acc;
    }

    friend bool operator==(const Fp12& a, const Fp12& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
    friend bool operator!=(const Fp12& a, const Fp12& b) { return !(a == b); }
};

} // namespace reflow
