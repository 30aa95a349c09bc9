#pragma once

#include <gmpxx.h>

#include <string>

#include "twistedlab/errors.hpp"

namespace twistedlab {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d) {
        if (d == 0) throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (decimal, optional leading '-').
    static Rational parse(const std::string& s);

    /// Serializes as "p/q", with "/q" omitted when q = 1. Inverse of parse.
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Closest double; exact when numerator and denominator fit in 53 bits.
    double to_double() const { return v_.get_d(); }
    /// Division performed in extended precision; used by the float embedding.
    long double to_long_double() const {
        return static_cast<long double>(v_.get_num().get_d()) /
               static_cast<long double>(v_.get_den().get_d());
    }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }

private:
    mpq_class v_;
};

}  // namespace twistedlab
