#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "omegader/matrix.hpp"
#include "omegader/rational.hpp"

namespace omegader {

// The 2x3 coefficient matrix of the two linear relations imposed on a
// triple (A, B, C): row r reads a(r,0) A + a(r,1) B + a(r,2) C = 0.
struct OmegaSpec {
    std::array<Rational, 6> entries{};  // row-major

    static OmegaSpec from_rows(const std::array<Rational, 3>& first, const std::array<Rational, 3>& second);
    static OmegaSpec zero() { return {}; }

    Rational& operator()(size_t r, size_t c) { return entries[r * 3 + c]; }
    const Rational& operator()(size_t r, size_t c) const { return entries[r * 3 + c]; }

    Matrix<Rational> matrix() const;
    std::string str() const;

    friend bool operator==(const OmegaSpec&, const OmegaSpec&) = default;
};

enum class TransformDirection {
    ToTilde,  // Omega acting on (A,B,C) -> the same relations on ((P,Q),R)
    FromMho,  // relations on ((P,Q),R) -> relations on (A,B,C)
};

OmegaSpec transform_omega(const OmegaSpec& omega, TransformDirection direction);

enum class ClassLabel { D100, QC, D11m1, DT10, DT11, DT11xQC, D100xQC, T, P, NDER, NDERxQC };

std::string_view label_name(ClassLabel label);

struct CanonicalClass {
    ClassLabel label;
    std::optional<Rational> parameter;  // present for DT10, DT11, DT11xQC, T

    std::string str() const;
    friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

// Integer entries drawn uniformly from [-bound, bound].
OmegaSpec random_omega(std::mt19937_64& rng, int bound = 2);

// Reduces the relations to one of the eleven canonical spaces by the
// row echelon form of the transformed matrix.
CanonicalClass canonical_class(const OmegaSpec& omega);

}  // namespace omegader
