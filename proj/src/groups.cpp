#include "reflow/groups.hpp"

#include <cstring>

namespace reflow {

namespace {

Fp fp_from_hex(const char* hex) {
    mpz_t t;
    mpz_init_set_str(t, hex, 16);
    Fp r = Fp::from_mpz(t);
    mpz_clear(t);
    return r;
}

constexpr std::uint8_t flag_compressed = 0x80;
constexpr std::uint8_t flag_infinity = 0x40;
constexpr std::uint8_t flag_y_sign = 0x20;

bool fp2_lexicographically_largest(const Fp2& y) {
    if (!y.c1.is_zero()) return y.c1.lexicographically_largest();
    return y.c0.lexicographically_largest();
}

} // namespace

const Fp& G1CurveTag::coeff_b() {
    static const Fp b = Fp::from_uint64(4);
    return b;
}

G1Point G1CurveTag::make_generator() {
    Fp gx = fp_from_hex(
        "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905"
        "a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb");
    Fp gy = fp_from_hex(
        "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af6"
        "00db18cb2c04b3edd03cc744a2888ae40caa232946c5e7e1");
    return G1Point::from_affine(gx, gy);
}

const Fp2& G2CurveTag::coeff_b() {
    static const Fp2 b(Fp::from_uint64(4), Fp::from_uint64(4));
    return b;
}

G2Point G2CurveTag::make_generator() {
    Fp2 gx(fp_from_hex("024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02"
                       "b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8"),
           fp_from_hex("13e02b6052719f607dacd3a088274f65596bd0d09920b61a"
                       "b5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e"));
    Fp2 gy(fp_from_hex("0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a7"
                       "6d429a695160d12c923ac9cc3baca289e193548608b82801"),
           fp_from_hex("0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af"
                       "267492ab572e99ab3f370d275cec1da1aaa9075ff05f79be"));
    return G2Point::from_affine(gx, gy);
}

std::vector<std::uint8_t> encode_g1(const G1Point& p) {
    std::vector<std::uint8_t> out(g1_compressed_size, 0);
    auto aff = p.to_affine();
    if (aff.infinity) {
        out[0] = flag_compressed | flag_infinity;
        return out;
    }
    aff.x.to_bytes(std::span<std::uint8_t>(out));
    out[0] |= flag_compressed;
    if (aff.y.lexicographically_largest()) out[0] |= flag_y_sign;
    return out;
}

std::vector<std::uint8_t> encode_g2(const G2Point& p) {
    std::vector<std::uint8_t> out(g2_compressed_size, 0);
    auto aff = p.to_affine();
    if (aff.infinity) {
        out[0] = flag_compressed | flag_infinity;
        return out;
    }
    aff.x.c1.to_bytes(std::span<std::uint8_t>(out.data(), 48));
    aff.x.c0.to_bytes(std::span<std::uint8_t>(out.data() + 48, 48));
    out[0] |= flag_compressed;
    if (fp2_lexicographically_largest(aff.y)) out[0] |= flag_y_sign;
    return out;
}

std::vector<std::uint8_t> encode_g2_uncompressed(const G2Point& p) {
    std::vector<std::uint8_t> out(g2_uncompressed_size, 0);
    auto aff = p.to_affine();
    if (aff.infinity) {
        out[0] = flag_infinity;
        return out;
    }
    aff.x.c1.to_bytes(std::span<std::uint8_t>(out.data(), 48));
    aff.x.c0.to_bytes(std::span<std::uint8_t>(out.data() + 48, 48));
    aff.y.c1.to_bytes(std::span<std::uint8_t>(out.data() + 96, 48));
    aff.y.c0.to_bytes(std::span<std::uint8_t>(out.data() + 144, 48));
    return out;
}

std::vector<std::uint8_t> encode_scalar(const Fr& s) {
    std::vector<std::uint8_t> out(scalar_size);
    s.to_bytes(std::span<std::uint8_t>(out));
    return out;
}

namespace {

// Strips flag bits from the leading byte and decodes the remaining
// big-endian field element.
Fp decode_fp_with_flags(std::span<const std::uint8_t> bytes, std::uint8_t mask) {
    std::array<std::uint8_t, 48> buf{};
    std::memcpy(buf.data(), bytes.data(), 48);
    buf[0] &= static_cast<std::uint8_t>(~mask);
    return Fp::from_bytes(std::span<const std::uint8_t>(buf));
}

} // namespace

G1Point decode_g1(std::span<const std::uint8_t> bytes, bool check_subgroup) {
    if (bytes.size() != g1_compressed_size)
        throw DecodeError("G1: wrong length");
    std::uint8_t flags = bytes[0] & 0xe0;
    if (!(flags & flag_compressed))
        throw DecodeError("G1: compression flag not set");
    if (flags & flag_infinity) {
        for (std::size_t i = 1; i < bytes.size(); ++i)
            if (bytes[i] || (bytes[0] & 0x3f))
                throw DecodeError("G1: malformed infinity");
        if (flags & flag_y_sign) throw DecodeError("G1: malformed infinity");
        return G1Point::infinity();
    }
    Fp x = decode_fp_with_flags(bytes, 0xe0);
    Fp y;
    if (!sqrt_fp(x.square() * x + G1CurveTag::coeff_b(), y))
        throw DecodeError("G1: x not on curve");
    bool want_larger = flags & flag_y_sign;
    if (y.lexicographically_largest() != want_larger) y = -y;
    G1Point p = G1Point::from_affine_unchecked(x, y);
    if (check_subgroup && !p.in_subgroup())
        throw DecodeError("G1: point not in subgroup");
    return p;
}

G2Point decode_g2(std::span<const std::uint8_t> bytes, bool check_subgroup) {
    if (bytes.size() != g2_compressed_size)
        throw DecodeError("G2: wrong length");
    std::uint8_t flags = bytes[0] & 0xe0;
    if (!(flags & flag_compressed))
        throw DecodeError("G2: compression flag not set");
    if (flags & flag_infinity) {
        for (std::size_t i = 1; i < bytes.size(); ++i)
            if (bytes[i])
                throw DecodeError("G2: malformed infinity");
        if ((bytes[0] & 0x3f) || (flags & flag_y_sign))
            throw DecodeError("G2: malformed infinity");
        return G2Point::infinity();
    }
    Fp2 x(Fp::from_bytes(bytes.subspan(48, 48)), decode_fp_with_flags(bytes, 0xe0));
    Fp2 y;
    if (!sqrt_fp2(x.square() * x + G2CurveTag::coeff_b(), y))
        throw DecodeError("G2: x not on curve");
    bool want_larger = flags & flag_y_sign;
    if (fp2_lexicographically_largest(y) != want_larger) y = -y;
    G2Point p = G2Point::from_affine_unchecked(x, y);
    if (check_subgroup && !p.in_subgroup())
        throw DecodeError("G2: point not in subgroup");
    return p;
}

G2Point decode_g2_uncompressed(std::span<const std::uint8_t> bytes,
                               bool check_subgroup) {
    if (bytes.size() != g2_uncompressed_size)
        throw DecodeError("G2: wrong length");
    std::uint8_t flags = bytes[0] & 0xe0;
    if (flags & flag_compressed)
        throw DecodeError("G2: unexpected compression flag");
    if (flags & flag_infinity) {
        for (std::size_t i = 1; i < bytes.size(); ++i)
            if (bytes[i])
                throw DecodeError("G2: malformed infinity");
        if (bytes[0] & 0xbf) throw DecodeError("G2: malformed infinity");
        return G2Point::infinity();
    }
    Fp2 x(Fp::from_bytes(bytes.subspan(48, 48)), decode_fp_with_flags(bytes, 0xe0));
    Fp2 y(Fp::from_bytes(bytes.subspan(144, 48)), Fp::from_bytes(bytes.subspan(96, 48)));
    G2Point p = G2Point::from_affine(x, y);  // on-curve check
    if (check_subgroup && !p.in_subgroup())
        throw DecodeError("G2: point not in subgroup");
    return p;
}

Fr decode_scalar(std::span<const std::uint8_t> bytes) {
    return Fr::from_bytes(bytes);
}

} // namespace reflow
