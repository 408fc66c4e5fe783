#include "kdiv/divisible.hpp"

namespace kdiv {

const char* to_string(DnContext context) {
    switch (context) {
    case DnContext::rational_field:
        return "rational-field";
    case DnContext::function_field:
        return "function-field";
    case DnContext::supersingular_closed_form:
        return "supersingular-closed-form";
    }
    return "?";
}

namespace {

Int ipow(const Int& q, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
    return r;
}

void require_odd_prime(const Int& l, const char* who) {
    if (l == 2)
        throw HypothesisViolation(std::string(who) + ": l must be odd");
    if (!is_prime(l))
        throw NotPrime(std::string(who) + ": l = " + l.get_str() + " is not prime");
}

} // namespace

DivisibleOrder dnl_q(unsigned long n, const Int& l) {
    if (n % 2 == 0)
        throw HypothesisViolation("dnl_q: n must be odd");
    require_odd_prime(l, "dnl_q");
    WnInvariant w = wn_q(n + 1);
    Rat zeta = zeta_q_neg(n);
    LPower local = wn_ql(n, l);
    Rat quotient = Rat(w.value) * zeta / Rat(local.value);
    DivisibleOrder d{DnContext::rational_field, n, l, linv_abs(quotient, l), {}};
    d.inputs_echo.emplace_back("w_{n+1}(Q)", Rat(w.value));
    d.inputs_echo.emplace_back("zeta_Q(-n)", zeta);
    d.inputs_echo.emplace_back("w_n(Q_l)", Rat(local.value));
    d.inputs_echo.emplace_back("quotient", quotient);
    return d;
}

DivisibleOrder dnl_q_supplied(unsigned long n, const Int& l, const Int& wnp1,
                              const Rat& zeta_val, const Int& local_wn) {
    if (n % 2 == 0)
        throw HypothesisViolation("dnl_q_supplied: n must be odd");
    require_odd_prime(l, "dnl_q_supplied");
    if (wnp1 == 0 || zeta_val.is_zero() || local_wn == 0)
        throw ZeroInput("dnl_q_supplied: all inputs must be nonzero");
    Rat quotient = Rat(wnp1) * zeta_val / Rat(local_wn);
    DivisibleOrder d{DnContext::rational_field, n, l, linv_abs(quotient, l), {}};
    d.inputs_echo.emplace_back("w_{n+1}(F)", Rat(wnp1));
    d.inputs_echo.emplace_back("zeta_F(-n)", zeta_val);
    d.inputs_echo.emplace_back("prod w_n(F_v)", Rat(local_wn));
    d.inputs_echo.emplace_back("quotient", quotient);
    return d;
}

DivisibleOrder dnl_ff(const WeilZeta& z, unsigned long n, const Int& l) {
    if (n < 1)
        throw HypothesisViolation("dnl_ff: n must be >= 1");
    if (!is_prime(l))
        throw NotPrime("dnl_ff: l = " + l.get_str() + " is not prime");
    if (mpz_divisible_p(z.q.get_mpz_t(), l.get_mpz_t()))
        throw CharacteristicClash("dnl_ff: l = " + l.get_str() +
                                  " divides the field characteristic");
    Rat w_n(ipow(z.q, n) - 1);
    Rat w_n1(ipow(z.q, n + 1) - 1);
    Rat zf = zeta_f_at(z, n);
    Rat w_inf = w_n; // one infinite place of norm q
    Rat telescoped = w_n * w_n1 * zf / w_inf;
    DivisibleOrder d{DnContext::function_field, n, l, linv_abs(telescoped, l), {}};
    d.inputs_echo.emplace_back("w_n(F)", w_n);
    d.inputs_echo.emplace_back("w_{n+1}(F)", w_n1);
    d.inputs_echo.emplace_back("zeta_F(-n)", zf);
    d.inputs_echo.emplace_back("w_n(F_inf)", w_inf);
    d.inputs_echo.emplace_back("product", telescoped);
    return d;
}

DivisibleOrder dnl_ss(const Int& p, unsigned long n, const Int& l) {
    if (n < 1)
        throw HypothesisViolation("dnl_ss: n must be >= 1");
    if (p < 5 || !is_prime(p))
        throw HypothesisViolation("dnl_ss: p must be a prime >= 5");
    if (l == p)
        throw HypothesisViolation("dnl_ss: l must differ from p");
    if (!is_prime(l))
        throw NotPrime("dnl_ss: l = " + l.get_str() + " is not prime");
    Rat numer(1 + ipow(p, 1 + 2 * n));
    Rat denom(1 - ipow(p, n));
    long v = lval(numer, l) - lval(denom, l);
    if (v < 0)
        throw NegativeValuation("dnl_ss: order exponent " + std::to_string(v) +
                                " < 0 signals misuse");
    DivisibleOrder d{DnContext::supersingular_closed_form, n, l,
                     LPower(l, static_cast<unsigned long>(v)), {}};
    d.inputs_echo.emplace_back("1+p^(1+2n)", numer);
    d.inputs_echo.emplace_back("1-p^n", denom);
    return d;
}

CohomologyOrders h_orders(const WeilZeta& z, unsigned long n, const Int& l) {
    if (z.genus != 1)
        throw HypothesisViolation("h_orders: genus-1 zeta required");
    if (n < 1)
        throw HypothesisViolation("h_orders: n must be >= 1");
    if (!is_prime(l))
        throw NotPrime("h_orders: l = " + l.get_str() + " is not prime");
    if (mpz_divisible_p(z.q.get_mpz_t(), l.get_mpz_t()))
        throw CharacteristicClash("h_orders: l = " + l.get_str() +
                                  " divides the field characteristic");
    Int qn = ipow(z.q, n);
    Int qn1 = ipow(z.q, n + 1);
    Rat h1_arg = Rat((qn1 - 1) * (qn - 1)) * zeta_x_at(z, n);
    return CohomologyOrders{
        linv_abs(Rat(qn1 - 1), l),
        linv_abs(h1_arg, l),
        linv_abs(Rat(qn - 1), l),
    };
}

LPower moore_quotient(const std::vector<Int>& local_wn, const Int& global_wn,
                      const Int& l) {
    if (global_wn == 0)
        throw ZeroInput("moore_quotient: global invariant must be nonzero");
    Rat prod(1);
    for (const Int& w : local_wn) {
        if (w == 0)
            throw ZeroInput("moore_quotient: local invariants must be nonzero");
        prod *= Rat(w);
    }
    return linv_abs(prod / Rat(global_wn), l);
}

} // namespace kdiv
