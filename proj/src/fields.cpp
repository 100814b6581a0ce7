#include "reflow/fields.hpp"

namespace reflow {

namespace detail {

template <std::size_t N>
void mpz_to_limbs(const mpz_t z, std::array<Limb, N>& out) {
    out.fill(0);
    std::size_t count = 0;
    mpz_export(out.data(), &count, -1, sizeof(Limb), 0, 0, z);
}

template <std::size_t N>
void limbs_to_mpz(const std::array<Limb, N>& in, mpz_t out) {
    mpz_import(out, N, -1, sizeof(Limb), 0, 0, in.data());
}

template void mpz_to_limbs<4>(const mpz_t, std::array<Limb, 4>&);
template void mpz_to_limbs<6>(const mpz_t, std::array<Limb, 6>&);
template void limbs_to_mpz<4>(const std::array<Limb, 4>&, mpz_t);
template void limbs_to_mpz<6>(const std::array<Limb, 6>&, mpz_t);

template <std::size_t N>
MontCtx<N>::MontCtx(const char* modulus_hex) {
    mpz_t p, t;
    mpz_init_set_str(p, modulus_hex, 16);
    mpz_init(t);
    bit_length = static_cast<unsigned>(mpz_sizeinbase(p, 2));
    mpz_to_limbs<N>(p, modulus);

    // R mod p and R^2 mod p for R = 2^(64N)
    mpz_set_ui(t, 1);
    mpz_mul_2exp(t, t, 64 * N);
    mpz_mod(t, t, p);
    mpz_to_limbs<N>(t, r1);
    mpz_set_ui(t, 1);
    mpz_mul_2exp(t, t, 2 * 64 * N);
    mpz_mod(t, t, p);
    mpz_to_limbs<N>(t, r2);

    // -p^{-1} mod 2^64 by Newton iteration on the low limb
    Limb p0 = modulus[0];
    Limb inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - p0 * inv;
    n0inv = static_cast<Limb>(0) - inv;

    mpz_clear(p);
    mpz_clear(t);
}

template struct MontCtx<4>;
template struct MontCtx<6>;

} // namespace detail

const char* FpTag::modulus_hex() {
    return "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf"
           "6730d2a0f6b0f6241eabfffeb153ffffb9feffffffffaaab";
}

const char* FrTag::modulus_hex() {
    return "73eda753299d7d483339d80809a1d805"
           "53bda402fffe5bfeffffffff00000001";
}

bool sqrt_fp(const Fp& a, Fp& out) {
    if (a.is_zero()) {
        out = a;
        return true;
    }
    // p = 3 mod 4: candidate = a^((p+1)/4)
    static const auto exponent = [] {
        mpz_t* e = new mpz_t[1];
        mpz_init_set_str(*e, FpTag::modulus_hex(), 16);
        mpz_add_ui(*e, *e, 1);
        mpz_fdiv_q_2exp(*e, *e, 2);
        return e;
    }();
    Fp cand = a.pow(*exponent);
    if (cand.square() != a) return false;
    out = cand;
    return true;
}

const CurveConstants& curve_constants() {
    static const CurveConstants c = [] {
        CurveConstants k;
        mpz_init_set_str(k.p, FpTag::modulus_hex(), 16);
        mpz_init_set_str(k.r, FrTag::modulus_hex(), 16);
        mpz_init_set_str(k.x_abs, "d201000000010000", 16);
        k.x_negative = true;
        mpz_init(k.h1);
        mpz_init(k.h2);
        mpz_init(k.p_minus_1_half);

        // h1 = (x-1)^2/3 with x negative: (|x|+1)^2 / 3
        mpz_add_ui(k.h1, k.x_abs, 1);
        mpz_mul(k.h1, k.h1, k.h1);
        mpz_divexact_ui(k.h1, k.h1, 3);

        mpz_set_str(k.h2,
                    "5d543a95414e7f1091d50792876a202cd91de4547085abaa"
                    "68a205b2e5a7ddfa628f1cb4d9e82ef21537e293a6691ae1"
                    "616ec6e786f0c70cf1c38e31c7238e5",
                    16);

        mpz_sub_ui(k.p_minus_1_half, k.p, 1);
        mpz_fdiv_q_2exp(k.p_minus_1_half, k.p_minus_1_half, 1);
        return k;
    }();
    return c;
}

} // namespace reflow
