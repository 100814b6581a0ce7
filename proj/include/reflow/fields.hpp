#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include <gmp.h>

#include "reflow/errors.hpp"

static_assert(GMP_LIMB_BITS == 64, "64-bit limbs required");

namespace reflow {

using Limb = mp_limb_t;

namespace detail {

// One-time context per prime modulus: Montgomery constants derived from the
// hex string with mpz arithmetic.
template <std::size_t N>
struct MontCtx {
    std::array<Limb, N> modulus{};
    std::array<Limb, N> r1{};        // R mod p       (Montgomery one)
    std::array<Limb, N> r2{};        // R^2 mod p
    Limb n0inv = 0;                  // -p^{-1} mod 2^64
    unsigned bit_length = 0;

    explicit MontCtx(const char* modulus_hex);
};

template <std::size_t N>
void mpz_to_limbs(const mpz_t z, std::array<Limb, N>& out);

template <std::size_t N>
void limbs_to_mpz(const std::array<Limb, N>& in, mpz_t out);

} // namespace detail

// Prime field element in Montgomery representation, fixed width of N limbs.
// Tag supplies the modulus; every instance is canonical (value < p), so
// equality is limb comparison.
template <class Tag, std::size_t N>
class MontField {
public:
    static constexpr std::size_t limb_count = N;
    static constexpr std::size_t byte_size = Tag::encoded_bytes;

    constexpr MontField() = default;

    static const detail::MontCtx<N>& ctx() {
        static const detail::MontCtx<N> c(Tag::modulus_hex());
        return c;
    }

    static MontField zero() { return MontField(); }

    static MontField one() {
        MontField r;
        r.limbs_ = ctx().r1;
        return r;
    }

    static MontField from_uint64(std::uint64_t v) {
        MontField r;
        r.limbs_[0] = v;
        r.to_mont();
        return r;
    }

    // Reduces an arbitrary big-endian byte string mod p.  Used for
    // hash-to-field; canonical decoding goes through from_bytes.
    static MontField from_bytes_reduce(std::span<const std::uint8_t> bytes) {
        mpz_t t, m;
        mpz_init(t);
        mpz_init(m);
        mpz_import(t, bytes.size(), 1, 1, 1, 0, bytes.data());
        detail::limbs_to_mpz<N>(ctx().modulus, m);
        mpz_mod(t, t, m);
        MontField r;
        detail::mpz_to_limbs<N>(t, r.limbs_);
        mpz_clear(t);
        mpz_clear(m);
        r.to_mont();
        return r;
    }

    // Canonical fixed-width big-endian decoding; rejects values >= p.
    static MontField from_bytes(std::span<const std::uint8_t> bytes) {
        if (bytes.size() != byte_size)
            throw DecodeError("field element: wrong length");
        std::array<Limb, N> raw{};
        for (std::size_t i = 0; i < byte_size; ++i) {
            std::size_t bit = 8 * (byte_size - 1 - i);
            raw[bit / 64] |= static_cast<Limb>(bytes[i]) << (bit % 64);
        }
        if (mpn_cmp(raw.data(), ctx().modulus.data(), N) >= 0)
            throw DecodeError("field element: not reduced");
        MontField r;
        r.limbs_ = raw;
        r.to_mont();
        return r;
    }

    void to_bytes(std::span<std::uint8_t> out) const {
        std::array<Limb, N> raw = from_mont();
        for (std::size_t i = 0; i < byte_size; ++i) {
            std::size_t bit = 8 * (byte_size - 1 - i);
            out[i] = static_cast<std::uint8_t>(raw[bit / 64] >> (bit % 64));
        }
    }

    std::array<std::uint8_t, byte_size> to_bytes() const {
        std::array<std::uint8_t, byte_size> out{};
        to_bytes(std::span<std::uint8_t>(out));
        return out;
    }

    friend MontField operator+(const MontField& a, const MontField& b) {
        MontField r;
        Limb carry = mpn_add_n(r.limbs_.data(), a.limbs_.data(), b.limbs_.data(), N);
        if (carry || mpn_cmp(r.limbs_.data(), ctx().modulus.data(), N) >= 0)
            mpn_sub_n(r.limbs_.data(), r.limbs_.data(), ctx().modulus.data(), N);
        return r;
    }

    friend MontField operator-(const MontField& a, const MontField& b) {
        MontField r;
        Limb borrow = mpn_sub_n(r.limbs_.data(), a.limbs_.data(), b.limbs_.data(), N);
        if (borrow)
            mpn_add_n(r.limbs_.data(), r.limbs_.data(), ctx().modulus.data(), N);
        return r;
    }

    MontField operator-() const {
        if (is_zero()) return *this;
        MontField r;
        mpn_sub_n(r.limbs_.data(), ctx().modulus.data(), limbs_.data(), N);
        return r;
    }

    friend MontField operator*(const MontField& a, const MontField& b) {
        std::array<Limb, 2 * N> wide;
        mpn_mul_n(wide.data(), a.limbs_.data(), b.limbs_.data(), N);
        MontField r;
        reduce(wide, r.limbs_);
        return r;
    }

    MontField square() const {
        std::array<Limb, 2 * N> wide;
        mpn_sqr(wide.data(), limbs_.data(), N);
        MontField r;
        reduce(wide, r.limbs_);
        return r;
    }

    MontField& operator+=(const MontField& o) { return *this = *this + o; }
    MontField& operator-=(const MontField& o) { return *this = *this - o; }
    MontField& operator*=(const MontField& o) { return *this = *this * o; }

    MontField dbl() const { return *this + *this; }

    // Multiplicative inverse; inverse(0) = 0 by convention so degenerate
    // pairing inputs propagate to a non-identity comparison failure instead
    // of an arithmetic fault.
    MontField inverse() const {
        if (is_zero()) return *this;
        mpz_t a, m;
        mpz_init(a);
        mpz_init(m);
        std::array<Limb, N> plain = from_mont();
        detail::limbs_to_mpz<N>(plain, a);
        detail::limbs_to_mpz<N>(ctx().modulus, m);
        mpz_invert(a, a, m);
        MontField r;
        detail::mpz_to_limbs<N>(a, r.limbs_);
        mpz_clear(a);
        mpz_clear(m);
        r.to_mont();
        return r;
    }

    // Exponentiation by an arbitrary non-negative mpz exponent.
    MontField pow(const mpz_t e) const {
        MontField acc = one();
        if (mpz_sgn(e) == 0) return acc;
        MontField base = *this;
        mp_bitcnt_t top = mpz_sizeinbase(e, 2);
        for (mp_bitcnt_t i = top; i-- > 0;) {
            acc = acc.square();
            if (mpz_tstbit(e, i)) acc *= base;
        }
        return acc;
    }

    bool is_zero() const {
        for (Limb l : limbs_)
            if (l) return false;
        return true;
    }

    friend bool operator==(const MontField& a, const MontField& b) {
        return a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const MontField& a, const MontField& b) {
        return !(a == b);
    }

    // Parity and ordering of the canonical (non-Montgomery) value; used by
    // point compression to pin the sign of y.
    bool is_odd() const { return from_mont()[0] & 1; }

    bool lexicographically_largest() const {
        // true iff value > (p-1)/2
        std::array<Limb, N> plain = from_mont();
        std::array<Limb, N> dbl;
        Limb carry = mpn_lshift(dbl.data(), plain.data(), N, 1);
        return carry || mpn_cmp(dbl.data(), ctx().modulus.data(), N) > 0;
    }

    void to_mpz(mpz_t out) const {
        std::array<Limb, N> plain = from_mont();
        detail::limbs_to_mpz<N>(plain, out);
    }

    static MontField from_mpz(const mpz_t z) {
        mpz_t t, m;
        mpz_init_set(t, z);
        mpz_init(m);
        detail::limbs_to_mpz<N>(ctx().modulus, m);
        mpz_mod(t, t, m);
        MontField r;
        detail::mpz_to_limbs<N>(t, r.limbs_);
        mpz_clear(t);
        mpz_clear(m);
        r.to_mont();
        return r;
    }

private:
    std::array<Limb, N> limbs_{};

    static void reduce(std::array<Limb, 2 * N>& wide, std::array<Limb, N>& out) {
        const auto& p = ctx().modulus;
        const Limb n0 = ctx().n0inv;
        for (std::size_t i = 0; i < N; ++i) {
            Limb m = wide[i] * n0;
            Limb carry = mpn_addmul_1(wide.data() + i, p.data(), N, m);
            mpn_add_1(wide.data() + i + N, wide.data() + i + N, N - i, carry);
        }
        std::memcpy(out.data(), wide.data() + N, N * sizeof(Limb));
        if (mpn_cmp(out.data(), p.data(), N) >= 0)
            mpn_sub_n(out.data(), out.data(), p.data(), N);
    }

    void to_mont() {
        std::array<Limb, 2 * N> wide;
        mpn_mul_n(wide.data(), limbs_.data(), ctx().r2.data(), N);
        reduce(wide, limbs_);
    }

    std::array<Limb, N> from_mont() const {
        std::array<Limb, 2 * N> wide{};
        std::memcpy(wide.data(), limbs_.data(), N * sizeof(Limb));
        std::array<Limb, N> out;
        reduce(wide, out);
        return out;
    }
};

struct FpTag {
    static const char* modulus_hex();
    static constexpr std::size_t encoded_bytes = 48;
};

struct FrTag {
    static const char* modulus_hex();
    static constexpr std::size_t encoded_bytes = 32;
};

// Base field of BLS12-381 (381-bit prime).
using Fp = MontField<FpTag, 6>;

// Scalar field: integers mod the group order n.  This is the spec's Scalar.
using Fr = MontField<FrTag, 4>;

// Square root in Fp (p = 3 mod 4).  Returns false when a is a non-residue.
bool sqrt_fp(const Fp& a, Fp& out);

// mpz handles for the curve constants, initialised once.
struct CurveConstants {
    mpz_t p;          // base field modulus
    mpz_t r;          // subgroup order
    mpz_t x_abs;      // |x|, the BLS parameter magnitude
    bool x_negative;  // x = -0xd201000000010000
    mpz_t h1;         // G1 cofactor (x-1)^2 / 3
    mpz_t h2;         // G2 (twist) cofactor
    mpz_t p_minus_1_half;
};

const CurveConstants& curve_constants();

} // namespace reflow
