#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gpc {

using Integer = mpz_class;

// Exact rational number, always held in canonical form: positive denominator,
// numerator and denominator coprime, zero as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den);

    // Accepts "p/q" and "p" with an optional leading sign; rejects decimals,
    // whitespace and empty components.
    static Rational parse(std::string_view text);

    const Integer& num() const { return value_.get_num(); }
    const Integer& den() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned exponent) const;

    // "num/den", including "n/1" and "0/1".
    std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    mpq_class value_;
};

Rational rat(const Integer& num, const Integer& den);

// Exact integer square root: k with k*k == n, or nothing when n is not a
// perfect square. Throws NegativeInput for n < 0.
std::optional<Integer> int_sqrt(const Integer& n);

// Nonnegative rational square root, or nothing (negative input included).
std::optional<Rational> rat_sqrt(const Rational& q);

// Rational cube root, or nothing.
std::optional<Rational> rat_cbrt(const Rational& q);

// Naive height max(|num|, den).
Integer height(const Rational& q);

} // namespace gpc

template <>
struct std::hash<gpc::Rational> {
    std::size_t operator()(const gpc::Rational& q) const noexcept;
};
