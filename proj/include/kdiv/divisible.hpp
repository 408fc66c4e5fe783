#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kdiv/curve.hpp"
#include "kdiv/zeta_q.hpp"

namespace kdiv {

enum class DnContext {
    rational_field,
    function_field,
    supersingular_closed_form,
};

const char* to_string(DnContext context);

// Order of the group of divisible elements D(n)_l as an l-power, together
// with an echo of the exact rationals that entered the formula.
struct DivisibleOrder {
    DnContext context;
    unsigned long n;
    Int l;
    LPower order;
    std::vector<std::pair<std::string, Rat>> inputs_echo;
};

// |D(n)_l| over Q, n odd, l odd:
//   | w_{n+1}(Q) zeta_Q(-n) / w_n(Q_l) |_l^{-1}
DivisibleOrder dnl_q(unsigned long n, const Int& l);

// Same formula for a totally real field with caller-supplied w_{n+1}(F),
// zeta_F(-n) and local product prod_{v|l} w_n(F_v). No validation of the
// supplied data is possible beyond valuation sanity.
DivisibleOrder dnl_q_supplied(unsigned long n, const Int& l, const Int& wnp1,
                              const Rat& zeta_val, const Int& local_wn);

// |D(n)_l| for the function field of a curve over F_q, l not dividing q:
//   | w_n(F) w_{n+1}(F) zeta_F(-n) / w_n(F_inf) |_l^{-1}
// with w_k(F) = q^k - 1 and a single infinite place of norm q. The
// expression telescopes; inputs_echo keeps every factor auditable.
DivisibleOrder dnl_ff(const WeilZeta& z, unsigned long n, const Int& l);

// Supersingular closed form over F_p(E) (trace 0, p >= 5):
//   |D(n)_l| = |1 + p^{1+2n}|_l^{-1} / |1 - p^n|_l^{-1}
DivisibleOrder dnl_ss(const Int& p, unsigned long n, const Int& l);

// l-power orders of H^i(X, W^{n+1}), i = 0, 1, 2, for a genus-1 curve:
//   |H^0| = |q^{n+1} - 1|_l^{-1}
//   |H^1| = |(q^{n+1} - 1)(q^n - 1) zeta_X(-n)|_l^{-1}
//   |H^2| = |q^n - 1|_l^{-1}
struct CohomologyOrders {
    LPower h0;
    LPower h1;
    LPower h2;
};

CohomologyOrders h_orders(const WeilZeta& z, unsigned long n, const Int& l);

// |K_{2n}(O_{F,S})_l| / |K^w_{2n}(O_F)_l| = | prod_{v in S} w_n(F_v) / w_n(F) |_l^{-1}
LPower moore_quotient(const std::vector<Int>& local_wn, const Int& global_wn,
                      const Int& l);

} // namespace kdiv
