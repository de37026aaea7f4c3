#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "degsim/errors.hpp"

namespace degsim {

// Display tag for the indeterminate. Presentation only: arithmetic and
// equality look at coefficients, never at the tag.
enum class Var { x, t, mu };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::t: return "t";
        case Var::mu: return "mu";
        default: return "x";
    }
}

// Dense univariate polynomial over an exact coefficient type F.
// Coefficients are stored in ascending order. The zero polynomial is the
// empty vector; every nonzero polynomial has a nonzero leading
// coefficient, so degree == coefficient count - 1 (and -1 for zero).
//
// F must provide construction from long, +, -, *, unary -, == and
// is_zero(). Division-based operations additionally need operator/.
template <class F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(Var v) : var_(v) {}
    Poly(const F& c, Var v = Var::x) : var_(v) {
        if (!c.is_zero()) c_.push_back(c);
    }

    static Poly from_coeffs(std::vector<F> coeffs, Var v = Var::x) {
        Poly p(v);
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static Poly monomial(const F& c, std::size_t deg, Var v = Var::x) {
        Poly p(v);
        if (!c.is_zero()) {
            p.c_.assign(deg + 1, F(0));
            p.c_[deg] = c;
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Var var() const { return var_; }
    void set_var(Var v) { var_ = v; }

    const std::vector<F>& coeffs() const { return c_; }

    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

    const F& leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r(*this);
        for (F& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        var_ = pick_var(*this, o);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        var_ = pick_var(*this, o);
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(pick_var(a, b));
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& s) const {
        Poly r(var_);
        if (s.is_zero()) return r;
        r.c_ = c_;
        for (F& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    // Quotient and remainder with deg(rem) < deg(divisor); F must be a field.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        Poly q(pick_var(a, b));
        Poly r = a;
        if (a.degree() < b.degree()) return {q, r};
        q.c_.assign(a.c_.size() - b.c_.size() + 1, F(0));
        const F& lead = b.c_.back();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = r.c_.size() - b.c_.size();
            F f = r.c_.back() / lead;
            q.c_[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                r.c_[shift + i] = r.c_[shift + i] - f * b.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly derivative() const {
        Poly r(var_);
        if (degree() < 1) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * F(static_cast<long>(i));
        r.trim();
        return r;
    }

    F eval(const F& x) const {
        if (is_zero()) return F(0);
        F acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        const F lead = c_.back();
        for (F& c : r.c_) c = c / lead;
        return r;
    }

    bool is_monic() const { return !is_zero() && c_.back() == F(1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            bool unit = c_[i] == F(1);
            if (i == 0 || !unit) out += coeff_str(c_[i]);
            if (i > 0) {
                if (!unit) out += "*";
                out += var_name(var_);
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    static Var pick_var(const Poly& a, const Poly& b) { return a.degree() > 0 || b.degree() <= 0 ? a.var_ : b.var_; }

    template <class G>
    static auto coeff_str(const G& c) -> decltype(c.to_string()) {
        return c.to_string();
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
    Var var_ = Var::x;
};

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0 and gcd(p, 0) is
// p made monic. F must be a field.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Exact quotient; throws if the division leaves a remainder. Used by
// fraction-free elimination where exactness is guaranteed.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

// Unique interpolating polynomial of degree < xs.size() through
// (xs[i], ys[i]); the xs must be pairwise distinct.
template <class F>
Poly<F> lagrange_interpolate(const std::vector<F>& xs, const std::vector<F>& ys, Var v = Var::x) {
    if (xs.size() != ys.size()) throw ShapeError("interpolation needs matching point/value counts");
    const std::size_t m = xs.size();
    Poly<F> full(F(1), v);
    for (std::size_t j = 0; j < m; ++j)
        full *= Poly<F>::from_coeffs({-xs[j], F(1)}, v);
    Poly<F> acc(v);
    for (std::size_t i = 0; i < m; ++i) {
        Poly<F> basis = exact_div(full, Poly<F>::from_coeffs({-xs[i], F(1)}, v));
        F denom(1);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) denom = denom * (xs[i] - xs[j]);
        if (denom.is_zero()) throw DomainError("interpolation points must be distinct");
        acc += basis.scaled(ys[i] / denom);
    }
    return acc;
}

}  // namespace degsim
