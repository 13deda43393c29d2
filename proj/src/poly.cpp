#include "omegader/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "omegader/error.hpp"
#include "integer_factor.hpp"

namespace omegader {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int k) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> v;
    v.reserve(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
    return Poly(std::move(v));
}

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
    const Poly inner({b, a});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
    return acc;
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    mpz_class lcm_den = 1;
    for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(coeffs_.size());
    mpz_class content = 0;
    for (const auto& c : coeffs_) {
        mpz_class v = c.num() * (lcm_den / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (ints.back() < 0) content = -content;
    std::vector<Rational> v;
    v.reserve(ints.size());
    for (auto& x : ints) v.emplace_back(mpz_class(x / content), mpz_class(1));
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
    }
    std::vector<Rational> v;
    v.reserve(acc.size());
    for (auto& x : acc) v.emplace_back(std::move(x));
    return Poly(std::move(v));
}

Poly operator-(const Poly& a) { return a * Rational(-1); }

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (c.sign() < 0) {
            os << "-";
        } else if (!first) {
            os << "+";
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

PolyDivision divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = f.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) return {Poly(), f};
    std::vector<Rational> quot(static_cast<size_t>(f.degree() - dg) + 1, Rational(0));
    const Rational inv_lead = g.leading().inverse();
    const auto& gc = g.coeffs();
    for (int k = f.degree(); k >= dg; --k) {
        const Rational& top = rem[static_cast<size_t>(k)];
        if (top.is_zero()) continue;
        const Rational q = top * inv_lead;
        const size_t shift = static_cast<size_t>(k - dg);
        quot[shift] = q;
        for (size_t i = 0; i < gc.size(); ++i) rem[shift + i] -= q * gc[i];
    }
    rem.resize(static_cast<size_t>(dg));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw PreconditionError("exact_div: " + g.str() + " does not divide " + f.str());
    return q;
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).remainder; }

Poly poly_gcd(const Poly& f, const Poly& g) {
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        // Keeping remainders primitive bounds coefficient growth.
        b = r.primitive();
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Poly& f, const Poly& g) {
    Poly r0 = f, r1 = g;
    Poly s0(1), s1;
    Poly t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    const Rational inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) return {};
    if (f.degree() == 0) return Poly(1);
    return exact_div(f, poly_gcd(f, f.derivative())).monic();
}

std::vector<Rational> rational_roots(const Poly& f) {
    if (f.is_zero()) throw PreconditionError("rational_roots: every point is a root of the zero polynomial");
    std::vector<Rational> roots;
    Poly p = squarefree_part(f);
    if (p.degree() <= 0) return roots;
    if (p.coeff(0).is_zero()) {
        roots.emplace_back(0);
        p = exact_div(p, Poly::monomial(Rational(1), 1));
    }
    p = p.primitive();
    if (p.degree() >= 1) {
        std::vector<mpz_class> ints;
        for (const auto& c : p.coeffs()) ints.push_back(c.num());
        const auto num_divs = detail::positive_divisors(abs(ints.front()));
        const auto den_divs = detail::positive_divisors(abs(ints.back()));
        const size_t n = ints.size() - 1;
        for (const auto& q : den_divs) {
            for (const auto& pabs : num_divs) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), pabs.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                for (int sgn : {1, -1}) {
                    const mpz_class num = sgn * pabs;
                    // q^n f(num/q) = sum a_i num^i q^(n-i), by Horner from the top.
                    mpz_class value = ints[n];
                    mpz_class qpow = 1;
                    for (size_t i = n; i-- > 0;) {
                        qpow *= q;
                        value = value * num + ints[i] * qpow;
                    }
                    if (value == 0) roots.emplace_back(num, q);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool verified_irreducible(const Poly& f) {
    const int d = f.degree();
    if (d == 1) return true;
    if (d == 2 || d == 3) return rational_roots(f).empty();
    return false;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        const auto ca = a.coeff(k), cb = b.coeff(k);
        if (ca != cb) return ca < cb;
    }
    return false;
}

}  // namespace omegader
