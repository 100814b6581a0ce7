#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "reflow/tower.hpp"

namespace reflow {

// Elliptic curve point in Jacobian coordinates over field F, curve
// y^2 = x^3 + b.  Tag supplies b and the subgroup generator; all points of
// the r-order subgroup plus the point at infinity are representable.
template <class F, class Tag>
class ECPoint {
public:
    ECPoint() : x_(F::one()), y_(F::one()), z_(F::zero()) {}  // infinity

    static ECPoint infinity() { return ECPoint(); }

    static const ECPoint& generator() {
        static const ECPoint g = Tag::make_generator();
        return g;
    }

    // Affine constructor; validates curve membership.
    static ECPoint from_affine(const F& x, const F& y) {
        if (y.square() != x.square() * x + Tag::coeff_b())
            throw DecodeError("point not on curve");
        return ECPoint(x, y, F::one());
    }

    // Affine constructor for internally-computed coordinates.
    static ECPoint from_affine_unchecked(const F& x, const F& y) {
        return ECPoint(x, y, F::one());
    }

    bool is_infinity() const { return z_.is_zero(); }

    ECPoint operator-() const {
        ECPoint r = *this;
        r.y_ = -r.y_;
        return r;
    }

    friend ECPoint operator+(const ECPoint& p, const ECPoint& q) {
        if (p.is_infinity()) return q;
        if (q.is_infinity()) return p;
        F z1z1 = p.z_.square();
        F z2z2 = q.z_.square();
        F u1 = p.x_ * z2z2;
        F u2 = q.x_ * z1z1;
        F s1 = p.y_ * q.z_ * z2z2;
        F s2 = q.y_ * p.z_ * z1z1;
        F h = u2 - u1;
        F r = s2 - s1;
        if (h.is_zero()) {
            if (r.is_zero()) return p.dbl();
            return infinity();
        }
        F h2 = h.square();
        F h3 = h2 * h;
        F u1h2 = u1 * h2;
        F x3 = r.square() - h3 - u1h2.dbl();
        F y3 = r * (u1h2 - x3) - s1 * h3;
        F z3 = p.z_ * q.z_ * h;
        return ECPoint(x3, y3, z3);
    }

    friend ECPoint operator-(const ECPoint& p, const ECPoint& q) { return p + (-q); }
    ECPoint& operator+=(const ECPoint& o) { return *this = *this + o; }

    ECPoint dbl() const {
        if (is_infinity()) return *this;
        F a = x_.square();
        F b = y_.square();
        F c = b.square();
        F d = ((x_ + b).square() - a - c).dbl();
        F e = a + a.dbl();  // 3*a
        F f = e.square();
        F x3 = f - d.dbl();
        F y3 = e * (d - x3) - c.dbl().dbl().dbl();  // 8*c
        F z3 = (y_ * z_).dbl();
        return ECPoint(x3, y3, z3);
    }

    ECPoint mul(const Fr& k) const {
        mpz_t e;
        mpz_init(e);
        k.to_mpz(e);
        ECPoint r = mul_mpz(e);
        mpz_clear(e);
        return r;
    }

    ECPoint mul_mpz(const mpz_t e) const {
        ECPoint acc = infinity();
        if (mpz_sgn(e) == 0 || is_infinity()) return acc;
        for (mp_bitcnt_t i = mpz_sizeinbase(e, 2); i-- > 0;) {
            acc = acc.dbl();
            if (mpz_tstbit(e, i)) acc += *this;
        }
        return acc;
    }

    ECPoint mul_u64(std::uint64_t k) const {
        ECPoint acc = infinity();
        if (k == 0 || is_infinity()) return acc;
        for (int i = 63; i >= 0; --i) {
            acc = acc.dbl();
            if ((k >> i) & 1) acc += *this;
        }
        return acc;
    }

    friend bool operator==(const ECPoint& p, const ECPoint& q) {
        if (p.is_infinity() || q.is_infinity())
            return p.is_infinity() && q.is_infinity();
        F z1z1 = p.z_.square();
        F z2z2 = q.z_.square();
        if (p.x_ * z2z2 != q.x_ * z1z1) return false;
        return p.y_ * z2z2 * q.z_ == q.y_ * z1z1 * p.z_;
    }
    friend bool operator!=(const ECPoint& p, const ECPoint& q) { return !(p == q); }

    struct Affine {
        F x, y;
        bool infinity;
    };

    Affine to_affine() const {
        if (is_infinity()) return {F::zero(), F::zero(), true};
        F zinv = z_.inverse();
        F zinv2 = zinv.square();
        return {x_ * zinv2, y_ * zinv2 * zinv, false};
    }

    bool in_subgroup() const {
        if (is_infinity()) return true;
        return mul_mpz(curve_constants().r).is_infinity();
    }

private:
    ECPoint(const F& x, const F& y, const F& z) : x_(x), y_(y), z_(z) {}

    F x_, y_, z_;
};

struct G1CurveTag {
    static const Fp& coeff_b();
    static ECPoint<Fp, G1CurveTag> make_generator();
};

struct G2CurveTag {
    static const Fp2& coeff_b();
    static ECPoint<Fp2, G2CurveTag> make_generator();
};

// Point of E(Fp); signatures, session identities, commitments and
// fingerprints live here.
using G1Point = ECPoint<Fp, G1CurveTag>;

// Point of the twist E'(Fp2); public keys and verifiers live here.
using G2Point = ECPoint<Fp2, G2CurveTag>;

inline const G1Point& g1_generator() { return G1Point::generator(); }
inline const G2Point& g2_generator() { return G2Point::generator(); }

// --- Canonical encodings -------------------------------------------------
//
// Compressed big-endian x with flag bits in the top byte: 0x80 compressed,
// 0x40 infinity, 0x20 the lexicographically larger y.  G1 = 48 bytes,
// G2 = 96 bytes (x.c1 limbs first).  G2 additionally has a 192-byte
// uncompressed form (x.c1 | x.c0 | y.c1 | y.c0) used where decompression
// cost matters.

inline constexpr std::size_t g1_compressed_size = 48;
inline constexpr std::size_t g2_compressed_size = 96;
inline constexpr std::size_t g2_uncompressed_size = 192;
inline constexpr std::size_t scalar_size = 32;

std::vector<std::uint8_t> encode_g1(const G1Point& p);
std::vector<std::uint8_t> encode_g2(const G2Point& p);
std::vector<std::uint8_t> encode_g2_uncompressed(const G2Point& p);
std::vector<std::uint8_t> encode_scalar(const Fr& s);

G1Point decode_g1(std::span<const std::uint8_t> bytes, bool check_subgroup = true);
G2Point decode_g2(std::span<const std::uint8_t> bytes, bool check_subgroup = true);
G2Point decode_g2_uncompressed(std::span<const std::uint8_t> bytes,
                               bool check_subgroup = true);
Fr decode_scalar(std::span<const std::uint8_t> bytes);

} // namespace reflow
