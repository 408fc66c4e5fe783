#include "kdiv/rat.hpp"

#include <array>

namespace kdiv {

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0)
        throw ZeroInput("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const std::string& s) : v_(s, 10) {
    if (v_.get_den() == 0)
        throw ZeroInput("Rat: zero denominator in \"" + s + "\"");
    v_.canonicalize();
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.v_ == 0)
        throw ZeroInput("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat abs(const Rat& x) {
    return x < Rat(0) ? -x : x;
}

LPower::LPower(const Int& prime, unsigned long e) : l(prime), exponent(e) {
    if (!is_prime(prime))
        throw NotPrime("LPower: " + prime.get_str() + " is not prime");
    mpz_pow_ui(value.get_mpz_t(), l.get_mpz_t(), e);
}

std::string LPower::str() const {
    if (exponent == 0)
        return "1";
    return l.get_str() + "^" + std::to_string(exponent) + " = " + value.get_str();
}

namespace {

// Witness set deterministic for every odd input below 2^64.
constexpr std::array<unsigned long, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(const Int& m) {
    Int d = m - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    Int x, a;
    for (unsigned long w : kWitnesses) {
        a = w;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
        if (x == 1 || x == m - 1)
            continue;
        bool composite = true;
        for (unsigned long i = 1; i < r; ++i) {
            x = x * x % m;
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

bool trial_division(const Int& m) {
    if (m % 2 == 0)
        return false;
    Int root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    for (Int d = 3; d <= root; d += 2)
        if (m % d == 0)
            return false;
    return true;
}

} // namespace

bool is_prime(const Int& m) {
    if (m < 2)
        return false;
    for (unsigned long w : kWitnesses) {
        if (m == w)
            return true;
        if (m % w == 0)
            return false;
    }
    if (m.fits_ulong_p())
        return miller_rabin_u64(m);
    return trial_division(m);
}

long lval(const Rat& x, const Int& l) {
    if (x.is_zero())
        throw ZeroInput("lval: valuation of zero");
    if (!is_prime(l))
        throw NotPrime("lval: " + l.get_str() + " is not prime");
    Int num = ::abs(x.num());
    Int den = x.den();
    Int scratch;
    unsigned long vn = mpz_remove(scratch.get_mpz_t(), num.get_mpz_t(), l.get_mpz_t());
    unsigned long vd = mpz_remove(scratch.get_mpz_t(), den.get_mpz_t(), l.get_mpz_t());
    return static_cast<long>(vn) - static_cast<long>(vd);
}

long lval(const Int& x, const Int& l) {
    return lval(Rat(x), l);
}

LPower linv_abs(const Rat& x, const Int& l) {
    long v = lval(x, l);
    if (v < 0)
        throw NegativeValuation("linv_abs: v_" + l.get_str() + "(" + x.str() +
                                ") = " + std::to_string(v));
    return LPower(l, static_cast<unsigned long>(v));
}

} // namespace kdiv
