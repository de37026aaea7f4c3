#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "degsim/errors.hpp"

namespace degsim {

// Arbitrary-precision rational in canonical form:
// gcd(|numerator|, denominator) = 1, denominator >= 1, zero is 0/1.
// Immutable value semantics; every operation returns a reduced result.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit so integer literals flow into generic code
    Rat(long n, long d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        mpq_set_num(v_.get_mpq_t(), n.get_mpz_t());
        mpq_set_den(v_.get_mpq_t(), d.get_mpz_t());
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}

    // Accepts "p" and "p/q" in base 10.
    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw ParseError("invalid rational '" + s + "'", 0);
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw DomainError("rational with zero denominator");
        q.canonicalize();
        Rat r;
        r.v_ = std::move(q);
        return r;
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) {
        v_ += o.v_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        v_ -= o.v_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        v_ *= o.v_;
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    Rat inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    explicit Rat(mpq_class q) : v_(std::move(q)) {}

    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

}  // namespace degsim
