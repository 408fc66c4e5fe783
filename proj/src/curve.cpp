#include "kdiv/curve.hpp"

namespace kdiv {

namespace {

// All operands stay below 2^32, so products fit in 64 bits.
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e > 0) {
        if (e & 1)
            r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// chi(t) in {-1, 0, 1} by Euler's criterion.
int quad_char(std::uint64_t t, std::uint64_t p) {
    if (t == 0)
        return 0;
    return powmod(t, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t rhs(std::uint64_t x, const CurveFp& c) {
    std::uint64_t x2 = x * x % c.p;
    return (x2 * x % c.p + c.A * x % c.p + c.B) % c.p;
}

} // namespace

CurveFp::CurveFp(std::uint64_t p_, std::uint64_t A_, std::uint64_t B_) : p(p_) {
    if (p < 5)
        throw HypothesisViolation("CurveFp: p must be >= 5");
    if (p > 0xffffffffULL)
        throw HypothesisViolation("CurveFp: p exceeds the enumeration cap 2^32");
    if (!is_prime(Int(static_cast<unsigned long>(p))))
        throw NotPrime("CurveFp: p = " + std::to_string(p) + " is not prime");
    A = A_ % p;
    B = B_ % p;
    // 4A^3 + 27B^2 != 0 mod p
    std::uint64_t a3 = A * A % p * A % p;
    std::uint64_t b2 = B * B % p;
    if ((4 * a3 % p + 27 * b2 % p) % p == 0)
        throw HypothesisViolation("CurveFp: singular curve (discriminant = 0 mod p)");
}

WeilZeta WeilZeta::genus1(const Int& q, const Int& a) {
    if (q < 2)
        throw HypothesisViolation("WeilZeta: q must be >= 2");
    if (a * a > 4 * q)
        throw HypothesisViolation("WeilZeta: trace violates the Hasse bound a^2 <= 4q");
    WeilZeta z;
    z.q = q;
    z.a = a;
    z.genus = 1;
    return z;
}

WeilZeta WeilZeta::genus0(const Int& q) {
    if (q < 2)
        throw HypothesisViolation("WeilZeta: q must be >= 2");
    WeilZeta z;
    z.q = q;
    z.a = 0;
    z.genus = 0;
    return z;
}

std::uint64_t count_points_serial(const CurveFp& curve) {
    const std::uint64_t p = curve.p;
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < p; ++x)
        s += quad_char(rhs(x, curve), p);
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(p + 1) + s);
}

std::uint64_t count_points(const CurveFp& curve) {
    const std::uint64_t p = curve.p;
    std::int64_t s = 0;
#pragma omp parallel for reduction(+ : s) schedule(static)
    for (std::uint64_t x = 0; x < p; ++x)
        s += quad_char(rhs(x, curve), p);
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(p + 1) + s);
}

std::int64_t trace(const CurveFp& curve) {
    return static_cast<std::int64_t>(curve.p + 1) -
           static_cast<std::int64_t>(count_points(curve));
}

bool is_supersingular(const CurveFp& curve) {
    return trace(curve) == 0;
}

bool family_supersingular(CurveFamily family, std::uint64_t p) {
    if (p < 5 || !is_prime(Int(static_cast<unsigned long>(p))))
        throw HypothesisViolation("family_supersingular: p must be a prime >= 5");
    switch (family) {
    case CurveFamily::x3_plus_1:
        return p % 3 == 2;
    case CurveFamily::x3_plus_x:
        return p % 4 == 3;
    }
    return false;
}

WeilZeta weil_zeta(const CurveFp& curve) {
    return WeilZeta::genus1(Int(static_cast<unsigned long>(curve.p)), Int(trace(curve)));
}

namespace {

Int ipow(const Int& q, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
    return r;
}

} // namespace

Rat zeta_x_at(const WeilZeta& z, unsigned long n) {
    if (n < 1)
        throw HypothesisViolation("zeta_x_at: n must be >= 1");
    Int qn = ipow(z.q, n);
    Int qn1 = ipow(z.q, n + 1);
    Int d1 = 1 - qn;
    Int d2 = 1 - qn1;
    if (d1 == 0 || d2 == 0)
        throw PoleEvaluation("zeta_x_at: denominator factor vanishes");
    Int numer = z.genus == 1 ? 1 - z.a * qn + z.q * qn * qn : Int(1);
    return Rat(numer, d1 * d2);
}

Rat zeta_f_at(const WeilZeta& z, unsigned long n) {
    Int qn = ipow(z.q, n);
    return zeta_x_at(z, n) * Rat(1 - qn);
}

Int point_counts_ext(const WeilZeta& z, unsigned long k) {
    if (z.genus != 1)
        throw HypothesisViolation("point_counts_ext: genus-1 zeta required");
    if (k < 1)
        throw HypothesisViolation("point_counts_ext: k must be >= 1");
    Int prev = 2;   // a_0
    Int cur = z.a;  // a_1
    for (unsigned long i = 2; i <= k; ++i) {
        Int next = z.a * cur - z.q * prev;
        prev = cur;
        cur = next;
    }
    return ipow(z.q, k) + 1 - cur;
}

} // namespace kdiv
