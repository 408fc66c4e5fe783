#include "kdiv/obstructions.hpp"

namespace kdiv {

namespace {

std::string gl_map(const std::string& ring, const std::string& field,
                   unsigned long n, const Int& l) {
    std::string deg = std::to_string(2 * n);
    std::string zl = "Z/" + l.get_str();
    return "H_" + deg + "(GL(" + ring + "), " + zl + ") -> H_" + deg + "(GL(" +
           field + "), " + zl + ")";
}

} // namespace

Verdict split_verdict_q(unsigned long n, const Int& l) {
    if (n % 2 == 0)
        throw HypothesisViolation("split_verdict_q: n must be odd");
    if (l == 2)
        throw HypothesisViolation("split_verdict_q: l must be odd");
    if (!is_prime(l))
        throw NotPrime("split_verdict_q: l = " + l.get_str() + " is not prime");
    Rat value = Rat(wn_q(n + 1).value) * zeta_q_neg(n);
    LPower part = linv_abs(value, l);
    Verdict v;
    v.hypotheses.push_back({"trivial l-part of w_{n+1}(Q) zeta_Q(-n)", part.is_one(),
                            "w_{n+1}(Q) zeta_Q(-n) = " + value.str() +
                                ", l-part " + part.str()});
    v.holds = part.is_one();
    v.conclusion = std::string("0 -> K_") + std::to_string(2 * n) + "(Z) -> K_" +
                   std::to_string(2 * n) + "(Q) -> sum_v K_" +
                   std::to_string(2 * n - 1) + "(k_v) -> 0 " +
                   (v.holds ? "splits" : "does not split") + " at l = " + l.get_str();
    return v;
}

Verdict split_verdict_ff(const WeilZeta& z, unsigned long n, const Int& l) {
    DivisibleOrder d = dnl_ff(z, n, l); // raises CharacteristicClash when l | q
    Verdict v;
    v.hypotheses.push_back({"D(n)_l = 0", d.order.is_one(),
                            "|D(" + std::to_string(n) + ")_" + l.get_str() +
                                "| = " + d.order.str()});
    v.holds = d.order.is_one();
    v.conclusion = std::string("boundary map K_") + std::to_string(2 * n) +
                   "(F)_l -> sum^(1)_v K_" + std::to_string(2 * n - 1) +
                   "(k_v)_l " + (v.holds ? "splits" : "does not split") +
                   " at l = " + l.get_str();
    return v;
}

Verdict homology_kernel_q(unsigned long n, const Int& l) {
    if (n < 1)
        throw HypothesisViolation("homology_kernel_q: n must be >= 1");
    if (!is_prime(l))
        throw NotPrime("homology_kernel_q: l = " + l.get_str() + " is not prime");
    Verdict v;
    bool h1 = n % 2 == 1;
    v.hypotheses.push_back({"n odd", h1, "n = " + std::to_string(n)});
    bool h2 = l > n + 1;
    v.hypotheses.push_back(
        {"l > n+1", h2, "l = " + l.get_str() + ", n+1 = " + std::to_string(n + 1)});
    v.applicable = h1 && h2;
    bool h3 = false;
    std::string witness = "not evaluated (structural precondition failed)";
    if (v.applicable) {
        Rat value = Rat(wn_q(n + 1).value) * zeta_q_neg(n);
        long val = lval(value, l);
        h3 = val == 1;
        witness = "v_" + l.get_str() + "(" + value.str() + ") = " + std::to_string(val);
    }
    v.hypotheses.push_back({"l exactly divides w_{n+1}(Q) zeta_Q(-n)", h3, witness});
    v.holds = h1 && h2 && h3;
    if (!v.applicable)
        v.conclusion = "criterion not applicable to (n, l)";
    else if (v.holds)
        v.conclusion = "kernel of " + gl_map("Z", "Q", n, l) +
                       " contains a subgroup isomorphic to Z/" + l.get_str();
    else
        v.conclusion = "criterion not met; no kernel certified";
    return v;
}

Verdict homology_kernel_ss(const Int& p, unsigned long n, const Int& l) {
    if (p < 5 || !is_prime(p))
        throw HypothesisViolation("homology_kernel_ss: p must be a prime >= 5");
    if (l == p)
        throw HypothesisViolation("homology_kernel_ss: l must differ from p");
    if (!is_prime(l))
        throw NotPrime("homology_kernel_ss: l = " + l.get_str() + " is not prime");
    Verdict v;
    bool h1 = n % 2 == 1;
    v.hypotheses.push_back({"n odd", h1, "n = " + std::to_string(n)});
    bool h2 = l > n + 1;
    v.hypotheses.push_back(
        {"l > n+1", h2, "l = " + l.get_str() + ", n+1 = " + std::to_string(n + 1)});
    v.applicable = h1 && h2;
    bool h3 = mpz_divisible_p(Int(p + 1).get_mpz_t(), l.get_mpz_t());
    v.hypotheses.push_back(
        {"p = -1 (mod l)", h3, "p + 1 = " + Int(p + 1).get_str()});
    // "l does not divide (p+1)(2n+1)/l" read as: the first power of l is
    // exact, v_l(p+1) + v_l(2n+1) = 1.
    long vl = lval(Int(p + 1), l) + lval(Int(2 * n + 1), l);
    bool h4 = vl == 1;
    v.hypotheses.push_back({"l exactly divides (p+1)(2n+1)", h4,
                            "v_l(p+1) + v_l(2n+1) = " + std::to_string(vl)});
    v.holds = h1 && h2 && h3 && h4;
    std::string field = "F_" + p.get_str() + "(E)";
    if (!v.applicable)
        v.conclusion = "criterion not applicable to (p, n, l)";
    else if (v.holds)
        v.conclusion = "kernel of " + gl_map("O_" + field, field, n, l) +
                       " contains a subgroup isomorphic to Z/" + l.get_str();
    else
        v.conclusion = "criterion not met; no kernel certified";
    return v;
}

} // namespace kdiv
