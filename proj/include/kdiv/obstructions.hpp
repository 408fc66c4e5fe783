#pragma once

#include <string>
#include <vector>

#include "kdiv/divisible.hpp"

namespace kdiv {

struct Hypothesis {
    std::string name;
    bool satisfied;
    std::string witness;
};

// Outcome of a criterion check. `holds` is true only when every audited
// hypothesis is satisfied. When a structural precondition fails, the
// verdict reports "not applicable" rather than a negative answer: the
// homology criteria are one-directional sufficient conditions, and
// conflating precondition failure with "does not hold" would misreport
// them.
struct Verdict {
    bool holds = false;
    bool applicable = true;
    std::vector<Hypothesis> hypotheses;
    std::string conclusion;

    std::string status() const {
        if (!applicable)
            return "not applicable";
        return holds ? "holds" : "does not hold";
    }
};

// Splitting of 0 -> K_{2n}(Z) -> K_{2n}(Q) -> sum_v K_{2n-1}(k_v) -> 0
// at an odd prime l, n odd:  splits  <=>  |w_{n+1}(Q) zeta_Q(-n)|_l^{-1} = 1.
Verdict split_verdict_q(unsigned long n, const Int& l);

// Function-field splitting of the boundary map restricted to places with
// l^k | q_v^n - 1:  splits  <=>  D(n)_l = 0, i.e. the function-field order
// formula equals 1.
Verdict split_verdict_ff(const WeilZeta& z, unsigned long n, const Int& l);

// Sufficient criterion for ker(H_{2n}(GL(Z), Z/l) -> H_{2n}(GL(Q), Z/l))
// to contain Z/l: n odd, l > n+1, and l exactly divides
// w_{n+1}(Q) zeta_Q(-n).
Verdict homology_kernel_q(unsigned long n, const Int& l);

// Sufficient criterion over F = F_p(E), E/F_p supersingular, for
// ker(H_{2n}(GL(O_F), Z/l) -> H_{2n}(GL(F), Z/l)) to contain Z/l:
// n odd, l > n+1, p = -1 (mod l), and v_l(p+1) + v_l(2n+1) = 1.
Verdict homology_kernel_ss(const Int& p, unsigned long n, const Int& l);

} // namespace kdiv
