#pragma once

#include <variant>
#include <vector>

#include "omegader/matrix.hpp"
#include "omegader/poly.hpp"

namespace omegader {

// A value of the single formal parameter: a rational number, or all roots
// of an irreducible polynomial at once.
using ParameterPoint = std::variant<Rational, Poly>;

// Where the rank of a parametric matrix may drop below its generic value.
struct CandidateSet {
    std::vector<Rational> rational;  // ascending
    std::vector<Poly> irreducible;   // monic, degree 2 or 3, no rational root
    std::vector<Poly> unresolved;    // monic, degree >= 4, pairwise coprime

    bool empty() const { return rational.empty() && irreducible.empty() && unresolved.empty(); }
};

struct ParametricElimination {
    size_t generic_rank = 0;
    std::vector<Poly> pivots;  // fraction-free pivots of the parametric block
    CandidateSet candidates;
};

// Splits off the rows that do not involve the parameter. For every value of
// the parameter, rank(m) = constant_rank + rank(residual), where residual is
// the parametric rows restricted to the kernel of the constant rows.
struct ReducedSystem {
    size_t constant_rank = 0;
    Matrix<Poly> residual;
};

ReducedSystem reduce_constant_rows(const Matrix<Poly>& m);

// Fraction-free (Bareiss) elimination with minimal-degree row pivoting.
// Returns the rank over Q(t) and the successive pivots.
struct BareissResult {
    size_t rank = 0;
    std::vector<Poly> pivots;
};
BareissResult bareiss(Matrix<Poly> m);

// Splits polynomials into rational roots, certified irreducible factors of
// degree 2 and 3, and unresolved factors of higher degree.
CandidateSet candidate_factors(const std::vector<Poly>& polys);

ParametricElimination parametric_elimination(const Matrix<Poly>& m);
ParametricElimination parametric_elimination(const ReducedSystem& reduced);

Matrix<Rational> substitute(const Matrix<Poly>& m, const Rational& value);

// Rank with the parameter specialized. A polynomial point is handled over
// Q[t]/(point) and must pass verified_irreducible (a degree-1 polynomial is
// treated as its root); otherwise ReducibleModulus is thrown.
size_t rank_at(const Matrix<Poly>& m, const ParameterPoint& point);
size_t rank_at(const ReducedSystem& reduced, const ParameterPoint& point);

// Rank over Q[t]/(modulus) for a squarefree modulus of unknown factorization.
// The result holds at every root simultaneously; meeting a zero divisor
// throws ReducibleModulus.
size_t rank_over_quotient(const ReducedSystem& reduced, const Poly& modulus);

}  // namespace omegader
