#include "gpc/exactnum.hpp"

#include <cctype>

#include "gpc/error.hpp"

namespace gpc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::optional<Integer> int_cbrt(const Integer& n) {
    Integer magnitude = abs(n);
    Integer root;
    if (mpz_root(root.get_mpz_t(), magnitude.get_mpz_t(), 3) == 0) return std::nullopt;
    return n < 0 ? Integer(-root) : root;
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, num.get_str() + "/0");
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorKind::ParseError, "not a rational: \"" + std::string(text) + "\"");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (negative) n = -n;
    return Rational(n, d);
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(unsigned exponent) const {
    Rational r;
    mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
    return r;
}

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division of " + str() + " by zero");
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
}

Rational rat(const Integer& num, const Integer& den) { return Rational(num, den); }

std::optional<Integer> int_sqrt(const Integer& n) {
    if (n < 0) throw Error(ErrorKind::NegativeInput, "int_sqrt of " + n.get_str());
    Integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

std::optional<Rational> rat_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    auto n = int_sqrt(q.num());
    if (!n) return std::nullopt;
    auto d = int_sqrt(q.den());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

std::optional<Rational> rat_cbrt(const Rational& q) {
    auto n = int_cbrt(q.num());
    if (!n) return std::nullopt;
    auto d = int_cbrt(q.den());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

Integer height(const Rational& q) {
    Integer n = ::abs(q.num());
    return n > q.den() ? n : q.den();
}

} // namespace gpc

std::size_t std::hash<gpc::Rational>::operator()(const gpc::Rational& q) const noexcept {
    std::size_t h = mpz_fdiv_ui(q.num().get_mpz_t(), 1000000007UL);
    std::size_t g = mpz_fdiv_ui(q.den().get_mpz_t(), 998244353UL);
    return h * 1315423911UL ^ g;
}
