#include "omegader/number_field.hpp"

#include <ostream>

#include "omegader/error.hpp"

namespace omegader {

namespace {

const FieldRef& common_field(const NumberFieldElem& a, const NumberFieldElem& b) {
    if (a.field() && b.field() && a.field() != b.field() && a.field()->modulus() != b.field()->modulus()) {
        throw PreconditionError("arithmetic across different number fields");
    }
    return a.field() ? a.field() : b.field();
}

}  // namespace

FieldRef NumberField::make(const Poly& modulus) {
    if (modulus.degree() < 1) throw PreconditionError("number field modulus must be nonconstant");
    return FieldRef(new NumberField(modulus.monic()));
}

NumberFieldElem::NumberFieldElem(FieldRef field, const Poly& value) : field_(std::move(field)) {
    residue_ = field_ ? value % field_->modulus() : value;
    if (!field_ && residue_.degree() > 0) throw PreconditionError("nonconstant element without a field");
}

NumberFieldElem NumberFieldElem::generator(const FieldRef& field) {
    return NumberFieldElem(field, Poly::monomial(Rational(1), 1));
}

NumberFieldElem NumberFieldElem::inverse() const { return nf_inverse(*this); }

NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b) {
    NumberFieldElem r;
    r.field_ = common_field(a, b);
    r.residue_ = a.residue_ + b.residue_;
    return r;
}

NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b) {
    NumberFieldElem r;
    r.field_ = common_field(a, b);
    r.residue_ = a.residue_ - b.residue_;
    return r;
}

NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b) {
    const FieldRef& f = common_field(a, b);
    if (a.residue_.is_constant() || b.residue_.is_constant()) {
        NumberFieldElem r;
        r.field_ = f;
        r.residue_ = a.residue_ * b.residue_;
        return r;
    }
    return NumberFieldElem(f, a.residue_ * b.residue_);
}

NumberFieldElem operator-(const NumberFieldElem& a) {
    NumberFieldElem r = a;
    r.residue_ = -a.residue_;
    return r;
}

NumberFieldElem nf_inverse(const NumberFieldElem& x) {
    if (x.is_zero()) throw DivisionByZero("inverse of zero in a number field");
    if (x.residue().is_constant()) return NumberFieldElem(x.field(), Poly(x.residue().leading().inverse()));
    const Poly& m = x.field()->modulus();
    const ExtendedGcd eg = extended_gcd(x.residue(), m);
    if (eg.gcd.degree() > 0) {
        throw ReducibleModulus("modulus " + m.str() + " is reducible: shares factor " + eg.gcd.str() +
                               " with " + x.residue().str());
    }
    return NumberFieldElem(x.field(), eg.s);
}

std::ostream& operator<<(std::ostream& os, const NumberFieldElem& x) {
    os << x.residue_;
    if (x.field_) os << " mod " << x.field_->modulus();
    return os;
}

}  // namespace omegader
