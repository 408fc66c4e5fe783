#pragma once

#include <cstdint>

#include "kdiv/rat.hpp"

namespace kdiv {

// Short Weierstrass curve y^2 = x^3 + Ax + B over F_p, p >= 5 prime.
// Coefficients are stored reduced mod p. Point counting is by direct
// enumeration, so p is capped at 2^32 (desk scale).
struct CurveFp {
    std::uint64_t p;
    std::uint64_t A;
    std::uint64_t B;

    CurveFp(std::uint64_t p, std::uint64_t A, std::uint64_t B);
};

// The two congruence families with closed-form supersingularity tests.
enum class CurveFamily {
    x3_plus_1, // y^2 = x^3 + 1, supersingular iff p = 2 (mod 3)
    x3_plus_x, // y^2 = x^3 + x, supersingular iff p = 3 (mod 4)
};

// Numerator data of the zeta function of a curve over F_q: for genus 1 the
// numerator of Z(X, t) is 1 - a t + q t^2, for genus 0 (projective line,
// function field F_q(x)) it is 1.
struct WeilZeta {
    Int q;
    Int a;
    int genus = 1;

    static WeilZeta genus1(const Int& q, const Int& a);
    static WeilZeta genus0(const Int& q);
};

// |E(F_p)| including the point at infinity, as
// 1 + sum_x (1 + chi(x^3 + Ax + B)) with chi the quadratic character
// (chi(0) = 0) computed by Euler's criterion.
//
// count_points partitions the x-range across OpenMP threads; the serial
// variant is the reference implementation, and both return identical values.
std::uint64_t count_points(const CurveFp& curve);
std::uint64_t count_points_serial(const CurveFp& curve);

// Frobenius trace a = 1 + p - |E(F_p)|; |a| <= 2 sqrt(p).
std::int64_t trace(const CurveFp& curve);

// For p >= 5: a = 0 mod p and the Hasse bound force a = 0.
bool is_supersingular(const CurveFp& curve);

// Congruence answer for the named family, no point counting involved.
bool family_supersingular(CurveFamily family, std::uint64_t p);

WeilZeta weil_zeta(const CurveFp& curve);

// zeta_X(-n) = Z(X, q^n), exact:
//   genus 1: (1 - a q^n + q^{1+2n}) / ((1 - q^n)(1 - q^{1+n}))
//   genus 0: 1 / ((1 - q^n)(1 - q^{1+n}))
Rat zeta_x_at(const WeilZeta& z, unsigned long n);

// zeta_F(-n) = zeta_X(-n) * (1 - q^n): one infinite place of norm q.
Rat zeta_f_at(const WeilZeta& z, unsigned long n);

// N_k = |E(F_{q^k})| = q^k + 1 - a_k with a_1 = a, a_2 = a^2 - 2q,
// a_k = a a_{k-1} - q a_{k-2}. Genus 1 only.
Int point_counts_ext(const WeilZeta& z, unsigned long k);

} // namespace kdiv
