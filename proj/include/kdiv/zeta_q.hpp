#pragma once

#include <map>

#include "kdiv/rat.hpp"

namespace kdiv {

// The invariant w_n(Q): the largest N such that the exponent of (Z/N)^x
// divides n, together with its prime factorization.
//
// Per-prime closed form: an odd prime l contributes l^{1+v_l(n)} exactly
// when (l-1) | n; the prime 2 contributes 2^1 for n odd and 2^{2+v_2(n)}
// for n even.
struct WnInvariant {
    unsigned long n = 0;
    std::map<unsigned long, unsigned long> factors; // prime -> exponent >= 1
    Int value = 1;
};

// B_m, convention B_1 = -1/2, by the defining recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0.
Rat bernoulli(unsigned long m);

// zeta_Q(-n) = -B_{n+1} / (n+1); zero exactly at even n.
Rat zeta_q_neg(unsigned long n);

WnInvariant wn_q(unsigned long n);

// l-part of w_n(Q_l) for odd l: l^{1+v_l(n)} when (l-1) | n, else 1. The
// cyclotomic character of Q_l is onto, so the local l-part equals the
// global one.
LPower wn_ql(unsigned long n, const Int& l);

} // namespace kdiv
