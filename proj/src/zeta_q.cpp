#include "kdiv/zeta_q.hpp"

#include <vector>

namespace kdiv {

namespace {

unsigned long uval(unsigned long n, unsigned long p) {
    unsigned long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace

Rat bernoulli(unsigned long m) {
    // Computation-local row; no shared state.
    std::vector<Rat> b;
    b.reserve(m + 1);
    b.push_back(Rat(1));
    Int binom;
    for (unsigned long i = 1; i <= m; ++i) {
        Rat acc;
        for (unsigned long j = 0; j < i; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), i + 1, j);
            acc += Rat(binom) * b[j];
        }
        b.push_back(-acc / Rat(Int(i + 1)));
    }
    return b[m];
}

Rat zeta_q_neg(unsigned long n) {
    if (n < 1)
        throw HypothesisViolation("zeta_q_neg: n must be >= 1");
    return -bernoulli(n + 1) / Rat(Int(n + 1));
}

WnInvariant wn_q(unsigned long n) {
    if (n < 1)
        throw HypothesisViolation("wn_q: n must be >= 1");
    WnInvariant w;
    w.n = n;
    w.factors[2] = (n % 2 == 1) ? 1 : 2 + uval(n, 2);
    for (unsigned long l = 3; l <= n + 1; l += 2) {
        if (!is_prime(Int(l)))
            continue;
        if (n % (l - 1) == 0)
            w.factors[l] = 1 + uval(n, l);
    }
    Int pw;
    for (const auto& [l, e] : w.factors) {
        mpz_ui_pow_ui(pw.get_mpz_t(), l, e);
        w.value *= pw;
    }
    return w;
}

LPower wn_ql(unsigned long n, const Int& l) {
    if (n < 1)
        throw HypothesisViolation("wn_ql: n must be >= 1");
    if (l == 2)
        throw HypothesisViolation("wn_ql: l must be odd");
    if (!is_prime(l))
        throw NotPrime("wn_ql: " + l.get_str() + " is not prime");
    Int lm1 = l - 1;
    Int nn(n);
    if (!mpz_divisible_p(nn.get_mpz_t(), lm1.get_mpz_t()))
        return LPower(l, 0);
    Int scratch;
    unsigned long v = mpz_remove(scratch.get_mpz_t(), nn.get_mpz_t(), l.get_mpz_t());
    return LPower(l, 1 + v);
}

} // namespace kdiv
