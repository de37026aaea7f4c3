#pragma once

#include <cstdint>

#include "degsim/errors.hpp"

namespace degsim {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs. The first twelve primes
// are a proven witness set for n < 2^64.
bool is_prime_u64(std::uint64_t n);

// Element of GF(p) for a runtime prime modulus p < 2^62. Values carry
// their modulus; arithmetic on mismatched moduli is a DomainError.
class Fp {
  public:
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {
        if (p < 2) throw DomainError("prime field modulus must be >= 2");
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(mul_mod(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp inverse() const {
        if (v_ == 0) throw DomainError("inverse of zero in GF(p)");
        return Fp(pow_mod(v_, p_ - 2, p_), p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw DomainError("mixed moduli in GF(p) arithmetic");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace degsim
