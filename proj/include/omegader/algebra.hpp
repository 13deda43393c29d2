#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "omegader/matrix.hpp"
#include "omegader/rational.hpp"

namespace omegader {

enum class Law { AntiCommutative, Commutative, None };

std::string_view law_name(Law law);
Law parse_law(std::string_view text);

// A finite-dimensional algebra given by structure constants on a fixed
// basis: mu(e_i, e_j) = sum_k c(i, j, k) e_k. Indices are 0-based.
class Algebra {
public:
    Algebra(std::string name, size_t dim, Law law);
    // `constants` is indexed (i * dim + j) * dim + k.
    Algebra(std::string name, size_t dim, Law law, std::vector<Rational> constants);

    const std::string& name() const { return name_; }
    size_t dim() const { return dim_; }
    Law law() const { return law_; }

    const Rational& c(size_t i, size_t j, size_t k) const { return constants_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Rational>& constants() const { return constants_; }

    // mu(e_i, e_j) as a coordinate vector.
    std::vector<Rational> product(size_t i, size_t j) const;

    Algebra renamed(std::string name) const;

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    std::string name_;
    size_t dim_;
    Law law_;
    std::vector<Rational> constants_;
};

enum class Check { AntiCommutative, Commutative, Jacobi };

struct Violation {
    std::array<size_t, 3> at;  // 1-based (i, j, k)
    std::string detail;
};

struct ValidationReport {
    Check check;
    bool passed = true;
    std::optional<Violation> first;
};

ValidationReport validate(const Algebra& a, Check check);

std::vector<Rational> bracket(const Algebra& a, const std::vector<Rational>& x, const std::vector<Rational>& y);

// An invertible change of basis g; acts by (g . mu)(x, y) = g mu(g^-1 x, g^-1 y).
class BasisChange {
public:
    explicit BasisChange(Matrix<Rational> g);

    static BasisChange identity(size_t n) { return BasisChange(Matrix<Rational>::identity(n)); }

    const Matrix<Rational>& matrix() const { return g_; }
    const Matrix<Rational>& inverse_matrix() const { return g_inv_; }
    BasisChange inverse() const { return BasisChange(g_inv_); }

    friend BasisChange operator*(const BasisChange& a, const BasisChange& b) {
        return BasisChange(a.g_ * b.g_);
    }

private:
    Matrix<Rational> g_;
    Matrix<Rational> g_inv_;
};

// Integer entries in [-3, 3], redrawn until invertible.
BasisChange random_basis_change(std::mt19937_64& rng, size_t n);

Algebra change_basis(const Algebra& a, const BasisChange& g);

struct Subspace {
    size_t dimension = 0;
    std::vector<std::vector<Rational>> basis;
};

// {X : mu(X, .) = 0}; also mu(., X) = 0 when the law is not symmetric.
Subspace center(const Algebra& a);

struct DerivedSpan {
    size_t dimension = 0;
    bool perfect = false;
};

DerivedSpan derived_span(const Algebra& a);

}  // namespace omegader
