#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "omegader/rational.hpp"

namespace omegader {

// Univariate polynomial over the rationals. Coefficients are stored lowest
// degree first with no trailing zeros, so the zero polynomial is empty.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c);             // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    // The polynomial c * t^k.
    static Poly monomial(const Rational& c, int k);
    // t - root.
    static Poly linear_factor(const Rational& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;

    // Horner evaluation at any ring element that can absorb rational scalars.
    template <class T>
    T eval_in(const T& x, const T& one) const {
        T acc = one * Rational(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + one * *it;
        }
        return acc;
    }

    Poly monic() const;
    Poly derivative() const;
    // p(a*t + b).
    Poly compose_affine(const Rational& a, const Rational& b) const;
    // Positive integer multiple with coprime integer coefficients and
    // positive leading coefficient.
    Poly primitive() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);

    friend bool operator==(const Poly&, const Poly&) = default;

    // Renders as e.g. "2*t^2-4*t+2" using the given variable name.
    std::string str(const std::string& var = "t") const;
    // Coefficients as rational strings, lowest degree first.
    std::vector<std::string> coeff_strings() const;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

PolyDivision divmod(const Poly& f, const Poly& g);
// Throws PreconditionError when g does not divide f.
Poly exact_div(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);

struct ExtendedGcd {
    Poly gcd;  // monic
    Poly s;    // s*f + t*g = gcd
    Poly t;
};
ExtendedGcd extended_gcd(const Poly& f, const Poly& g);

// Product of the distinct irreducible factors of f, made monic.
Poly squarefree_part(const Poly& f);

// All rational roots of a nonzero polynomial, ascending and without
// repetition. Throws PreconditionError for the zero polynomial.
std::vector<Rational> rational_roots(const Poly& f);

// True only when irreducibility over Q is certified by the implemented
// checks: degree 1, or degree 2 or 3 without a rational root.
bool verified_irreducible(const Poly& f);

// Total order used for deterministic output (degree, then coefficients).
bool poly_less(const Poly& a, const Poly& b);

}  // namespace omegader
