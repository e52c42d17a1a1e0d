#pragma once

#include <gmpxx.h>

#include <string>

#include "hahnrank/errors.hpp"
#include "hahnrank/ordering.hpp"

namespace hahnrank {

// Exact rational number, kept canonical at all times: lowest terms, positive
// denominator. Backed by GMP so coefficient growth under repeated squaring or
// doubling never overflows.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0)
            throw Error(ErrorCode::DomainMismatch, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with an optional leading sign, base 10.
    static Rational parse(const std::string& text);

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw Error(ErrorCode::DomainMismatch, "division by zero rational");
        return Rational(mpq_class(v_ / o.v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Ordering compare(const Rational& o) const { return ordering_from_sign(cmp(v_, o.v_)); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inverse() const {
        if (is_zero())
            throw Error(ErrorCode::DomainMismatch, "inverse of zero rational");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(unsigned long e) const;

    // Smallest integer >= *this. Throws if it does not fit a long.
    long ceil_long() const;

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;
    // Always "p/q", including "p/1".
    std::string str_explicit() const;

private:
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace hahnrank
