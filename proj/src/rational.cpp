#include "omegader/rational.hpp"

#include <ostream>

#include "omegader/error.hpp"

namespace omegader {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (s.starts_with("-")) {
        negative = true;
        s.remove_prefix(1);
    } else if (s.starts_with("\xE2\x88\x92")) {  // U+2212
        negative = true;
        s.remove_prefix(3);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den)) {
        throw DocumentError("", "malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DivisionByZero("malformed rational '" + std::string(text) + "': zero denominator");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace omegader
