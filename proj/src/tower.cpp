#include "reflow/tower.hpp"

namespace reflow {

namespace {

// gamma = xi^((p-1)/6); the p-power Frobenius multiplies the w^k coefficient
// by gamma^k after conjugation.
struct FrobeniusTable {
    Fp2 gamma_pow[6];

    FrobeniusTable() {
        mpz_t e;
        mpz_init_set_str(e, FpTag::modulus_hex(), 16);
        mpz_sub_ui(e, e, 1);
        mpz_divexact_ui(e, e, 6);
        Fp2 xi(Fp::one(), Fp::one());
        Fp2 gamma = xi.pow(e);
        gamma_pow[0] = Fp2::one();
        for (int k = 1; k < 6; ++k) gamma_pow[k] = gamma_pow[k - 1] * gamma;
        mpz_clear(e);
    }
};

const FrobeniusTable& frobenius_table() {
    static const FrobeniusTable t;
    return t;
}

} // namespace

Fp12 Fp12::frobenius() const {
    const auto& t = frobenius_table();
    // w-basis coefficients: c0 holds w^0, w^2, w^4; c1 holds w^1, w^3, w^5.
    Fp6 a(c0.c0.conjugate(),
          c0.c1.conjugate() * t.gamma_pow[2],
          c0.c2.conjugate() * t.gamma_pow[4]);
    Fp6 b(c1.c0.conjugate() * t.gamma_pow[1],
          c1.c1.conjugate() * t.gamma_pow[3],
          c1.c2.conjugate() * t.gamma_pow[5]);
    return {a, b};
}

bool sqrt_fp2(const Fp2& a, Fp2& out) {
    if (a.is_zero()) {
        out = a;
        return true;
    }
    static const Fp half = Fp::from_uint64(2).inverse();
    if (a.c1.is_zero()) {
        Fp root;
        if (sqrt_fp(a.c0, root)) {
            out = {root, Fp::zero()};
            return true;
        }
        // -a.c0 must then be square since -1 is a non-residue (p = 3 mod 4)
        if (sqrt_fp(-a.c0, root)) {
            out = {Fp::zero(), root};
            return true;
        }
        return false;
    }
    Fp lambda;
    if (!sqrt_fp(a.norm(), lambda)) return false;
    for (int attempt = 0; attempt < 2; ++attempt) {
        Fp delta = (attempt == 0 ? a.c0 + lambda : a.c0 - lambda) * half;
        Fp x0;
        if (!sqrt_fp(delta, x0) || x0.is_zero()) continue;
        Fp x1 = a.c1 * half * x0.inverse();
        Fp2 cand(x0, x1);
        if (cand.square() == a) {
            out = cand;
            return true;
        }
    }
    return false;
}

} // namespace reflow
