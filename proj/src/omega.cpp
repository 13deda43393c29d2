#include "omegader/omega.hpp"

#include <sstream>

#include "omegader/linalg.hpp"

namespace omegader {

OmegaSpec OmegaSpec::from_rows(const std::array<Rational, 3>& first, const std::array<Rational, 3>& second) {
    OmegaSpec o;
    for (size_t c = 0; c < 3; ++c) {
        o(0, c) = first[c];
        o(1, c) = second[c];
    }
    return o;
}

Matrix<Rational> OmegaSpec::matrix() const {
    Matrix<Rational> m(2, 3);
    for (size_t r = 0; r < 2; ++r) {
        for (size_t c = 0; c < 3; ++c) m(r, c) = (*this)(r, c);
    }
    return m;
}

std::string OmegaSpec::str() const {
    std::ostringstream os;
    os << "[[" << entries[0] << "," << entries[1] << "," << entries[2] << "],[" << entries[3] << "," << entries[4]
       << "," << entries[5] << "]]";
    return os.str();
}

OmegaSpec transform_omega(const OmegaSpec& omega, TransformDirection direction) {
    OmegaSpec out;
    const Rational half(1, 2);
    for (size_t r = 0; r < 2; ++r) {
        const Rational& x = omega(r, 1);
        const Rational& y = omega(r, 2);
        out(r, 0) = omega(r, 0);
        if (direction == TransformDirection::ToTilde) {
            out(r, 1) = x + y;
            out(r, 2) = x - y;
        } else {
            out(r, 1) = (x + y) * half;
            out(r, 2) = (x - y) * half;
        }
    }
    return out;
}

std::string_view label_name(ClassLabel label) {
    switch (label) {
        case ClassLabel::D100:
            return "D100";
        case ClassLabel::QC:
            return "QC";
        case ClassLabel::D11m1:
            return "D11m1";
        case ClassLabel::DT10:
            return "DT10";
        case ClassLabel::DT11:
            return "DT11";
        case ClassLabel::DT11xQC:
            return "DT11xQC";
        case ClassLabel::D100xQC:
            return "D100xQC";
        case ClassLabel::T:
            return "T";
        case ClassLabel::P:
            return "P";
        case ClassLabel::NDER:
            return "NDER";
        case ClassLabel::NDERxQC:
            return "NDERxQC";
    }
    return "";
}

std::string CanonicalClass::str() const {
    std::string s(label_name(label));
    if (parameter) s += "(" + parameter->str() + ")";
    return s;
}

CanonicalClass canonical_class(const OmegaSpec& omega) {
    const auto rr = rref(transform_omega(omega, TransformDirection::ToTilde).matrix());
    const auto& m = rr.reduced;
    const auto& piv = rr.pivots;
    const Rational two(2);

    if (piv.size() == 2 && piv[0] == 0 && piv[1] == 1) {
        const Rational& a = m(0, 2);
        const Rational& b = m(1, 2);
        if (!b.is_zero()) return {ClassLabel::DT10, a / (two * b)};
        if (!a.is_zero()) return {ClassLabel::D11m1, std::nullopt};
        return {ClassLabel::QC, std::nullopt};
    }
    if (piv.size() == 2 && piv[0] == 0 && piv[1] == 2) return {ClassLabel::DT11, -m(0, 1)};
    if (piv.size() == 2) return {ClassLabel::D100, std::nullopt};  // pivots {1, 2}
    if (piv.size() == 1 && piv[0] == 0) {
        const Rational& a = m(0, 1);
        const Rational& b = m(0, 2);
        if (b.is_zero()) return {ClassLabel::DT11xQC, -a};
        return {ClassLabel::T, (a + Rational(1)) / two};
    }
    if (piv.size() == 1 && piv[0] == 1) {
        return {m(0, 2).is_zero() ? ClassLabel::D100xQC : ClassLabel::P, std::nullopt};
    }
    if (piv.size() == 1) return {ClassLabel::NDER, std::nullopt};
    return {ClassLabel::NDERxQC, std::nullopt};
}

OmegaSpec random_omega(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> pick(-bound, bound);
    OmegaSpec out;
    for (auto& x : out.entries) x = Rational(pick(rng));
    return out;
}

}  // namespace omegader
