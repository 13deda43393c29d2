#pragma once

#include <iosfwd>
#include <memory>

#include "omegader/poly.hpp"

namespace omegader {

// Q[t]/(modulus). The modulus is stored monic; irreducibility is assumed
// and any contradiction discovered during inversion is reported.
class NumberField {
public:
    static std::shared_ptr<const NumberField> make(const Poly& modulus);

    const Poly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

private:
    explicit NumberField(Poly modulus) : modulus_(std::move(modulus)) {}
    Poly modulus_;
};

using FieldRef = std::shared_ptr<const NumberField>;

// Element of a number field. An element without a field reference is a
// rational constant, which embeds into every field; mixing it with a field
// element adopts that field.
class NumberFieldElem {
public:
    NumberFieldElem() = default;
    NumberFieldElem(long c) : residue_(Rational(c)) {}                 // NOLINT(google-explicit-constructor)
    NumberFieldElem(const Rational& c) : residue_(c) {}                // NOLINT(google-explicit-constructor)
    NumberFieldElem(FieldRef field, const Poly& value);

    // The class of t in the field.
    static NumberFieldElem generator(const FieldRef& field);

    const Poly& residue() const { return residue_; }
    const FieldRef& field() const { return field_; }
    bool is_zero() const { return residue_.is_zero(); }

    NumberFieldElem inverse() const;

    friend NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b) {
        return a * b.inverse();
    }
    friend NumberFieldElem operator-(const NumberFieldElem& a);
    NumberFieldElem& operator+=(const NumberFieldElem& b) { return *this = *this + b; }
    NumberFieldElem& operator-=(const NumberFieldElem& b) { return *this = *this - b; }
    NumberFieldElem& operator*=(const NumberFieldElem& b) { return *this = *this * b; }

    // Equal residues; the field reference is not compared.
    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) {
        return a.residue_ == b.residue_;
    }

    friend std::ostream& operator<<(std::ostream& os, const NumberFieldElem& x);

private:
    FieldRef field_;
    Poly residue_;
};

// Throws DivisionByZero for x = 0 and ReducibleModulus if x shares a factor
// with the modulus.
NumberFieldElem nf_inverse(const NumberFieldElem& x);

}  // namespace omegader
