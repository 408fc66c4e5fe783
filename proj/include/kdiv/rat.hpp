#pragma once

#include <gmpxx.h>

#include <string>

#include "kdiv/errors.hpp"

namespace kdiv {

using Int = mpz_class;

// Exact rational number. Always stored reduced: den > 0, gcd(|num|, den) = 1,
// and 0 is 0/1. All arithmetic is exact.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);
    // Accepts "n" or "n/d" in base 10.
    explicit Rat(const std::string& s);

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    // "num/den", or just "num" when den = 1.
    std::string str() const;

  private:
    mpq_class v_;
};

Rat abs(const Rat& x);

// l^exponent with the power kept expanded. Models the l-part |x|_l^{-1}
// of a rational.
struct LPower {
    Int l;
    unsigned long exponent = 0;
    Int value = 1;

    LPower(const Int& prime, unsigned long e);

    bool is_one() const { return exponent == 0; }
    // "l^e = value", or "1" when the exponent is 0.
    std::string str() const;

    friend bool operator==(const LPower& a, const LPower& b) {
        return a.l == b.l && a.exponent == b.exponent;
    }
    friend bool operator!=(const LPower& a, const LPower& b) { return !(a == b); }
};

// Deterministic primality: Miller-Rabin with a fixed witness set for inputs
// that fit 64 bits, trial division above that. No probabilistic paths.
bool is_prime(const Int& m);

// l-adic valuation of a nonzero rational; may be negative.
long lval(const Rat& x, const Int& l);
long lval(const Int& x, const Int& l);

// |x|_l^{-1} = l^{v_l(x)} as an LPower; rejects negative valuation.
LPower linv_abs(const Rat& x, const Int& l);

} // namespace kdiv
