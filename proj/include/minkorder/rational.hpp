#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "minkorder/errors.hpp"

namespace minkorder {

using BigInt = mpz_class;

/// Exact rational scalar. Always in lowest terms with a positive
/// denominator; zero is 0/1. Backed by GMP's mpq.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& num) : q_(num) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw input_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p" or "p/q" (sign on the numerator, q > 0 after reduction).
    static Rational parse(const std::string& text);

    std::string str() const { return q_.get_str(); }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw input_error("rational division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t()) == 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t()) < 0; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_; // kept canonical
};

using RatVec = std::vector<Rational>;

Rational dot(const RatVec& a, const RatVec& b);
Rational norm_sq(const RatVec& a);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& c, const RatVec& a);
bool is_zero(const RatVec& a);
std::string str(const RatVec& a);

} // namespace minkorder
