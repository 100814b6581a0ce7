#pragma once

#include "reflow/groups.hpp"

namespace reflow {

// Element of the order-n subgroup of Fp12 (image of the final
// exponentiation).  Degenerate pairing inputs map to a zero value that never
// compares equal to an honest result.
class GtElement {
public:
    GtElement() : v_(Fp12::one()) {}
    explicit GtElement(const Fp12& v) : v_(v) {}

    static GtElement identity() { return GtElement(); }

    bool is_identity() const { return v_.is_one(); }

    friend GtElement operator*(const GtElement& a, const GtElement& b) {
        return GtElement(a.v_ * b.v_);
    }

    GtElement pow(const Fr& e) const {
        mpz_t z;
        mpz_init(z);
        e.to_mpz(z);
        GtElement r = pow_mpz(z);
        mpz_clear(z);
        return r;
    }

    GtElement pow_mpz(const mpz_t e) const { return GtElement(v_.pow(e)); }

    GtElement inverse() const { return GtElement(v_.conjugate()); }

    friend bool operator==(const GtElement& a, const GtElement& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const GtElement& a, const GtElement& b) {
        return !(a == b);
    }

    const Fp12& value() const { return v_; }

private:
    Fp12 v_;
};

// Optimal ate pairing e(q, p) for q on the twist and p on the base curve.
// Bilinear and non-degenerate on the r-order subgroups.
GtElement pairing(const G2Point& q, const G1Point& p);

// e(q1, p1) == e(q2, p2) with degenerate Miller outputs treated as unequal.
bool pairing_equals(const G2Point& q1, const G1Point& p1,
                    const G2Point& q2, const G1Point& p2);

// Internals exposed for the test suite's dual-route checks.
namespace pairing_detail {
Fp12 miller_loop(const G2Point& q, const G1Point& p);
Fp12 final_exponentiation(const Fp12& f);
}

} // namespace reflow
