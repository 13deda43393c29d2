#pragma once

#include <span>
#include <string>
#include <vector>

#include "omegader/algebra.hpp"
#include "omegader/matrix.hpp"
#include "omegader/omega.hpp"

namespace omegader {

// The three ways an unknown operator X enters a product identity.
enum class TermKind {
    Outer,  // X mu(e_i, e_j)
    Left,   // mu(X e_i, e_j)
    Right,  // mu(e_i, X e_j)
};

// A homogeneous system on `blocks` unknown n x n operators: a weighted sum
// of terms vanishing on every ordered basis pair, plus entrywise linear
// relations between the blocks. S is the coefficient type (Rational, or
// Poly for one-parameter families).
template <class S>
struct LeibnizSpec {
    struct Term {
        TermKind kind;
        size_t block;
        S coeff;
    };

    size_t blocks = 1;
    std::vector<Term> identity;
    std::vector<std::vector<S>> relations;  // each has `blocks` coefficients
};

// Unknowns are ordered block by block, each block row-major by
// (output index, input index). Rows: for each position (k, l) one row per
// relation, then for each ordered pair (i, j) and output k one identity row.
template <class S>
Matrix<S> build_leibniz_system(const Algebra& a, const LeibnizSpec<S>& spec) {
    const size_t n = a.dim();
    const size_t nn = n * n;
    const size_t rel = spec.relations.size();
    Matrix<S> m(rel * nn + nn * n, spec.blocks * nn);
    auto col = [&](size_t block, size_t out, size_t in) { return block * nn + out * n + in; };

    for (size_t pos = 0; pos < nn; ++pos) {
        for (size_t r = 0; r < rel; ++r) {
            for (size_t b = 0; b < spec.blocks; ++b) m(pos * rel + r, b * nn + pos) = spec.relations[r][b];
        }
    }
    const size_t base = rel * nn;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                const size_t row = base + (i * n + j) * n + k;
                for (const auto& term : spec.identity) {
                    for (size_t q = 0; q < n; ++q) {
                        switch (term.kind) {
                            case TermKind::Outer:
                                if (!a.c(i, j, q).is_zero()) m(row, col(term.block, k, q)) += term.coeff * S(a.c(i, j, q));
                                break;
                            case TermKind::Left:
                                if (!a.c(q, j, k).is_zero()) m(row, col(term.block, q, i)) += term.coeff * S(a.c(q, j, k));
                                break;
                            case TermKind::Right:
                                if (!a.c(i, q, k).is_zero()) m(row, col(term.block, q, j)) += term.coeff * S(a.c(i, q, k));
                                break;
                        }
                    }
                }
            }
        }
    }
    return m;
}

LeibnizSpec<Rational> omega_spec_system(const OmegaSpec& omega);

// The coefficient matrix whose kernel is Der_Omega(a): 3n^2 columns and
// 2n^2 + n^3 rows.
Matrix<Rational> build_system(const Algebra& a, const OmegaSpec& omega);

// Named spaces. D(alpha, beta, gamma) holds single operators D with
// alpha D mu(x,y) = beta mu(Dx,y) + gamma mu(x,Dy).
struct NamedSpace {
    enum class Kind { Dabc, QC, C, Der, NDer, QDer, P, T, Der0 };

    Kind kind = Kind::Der;
    Rational alpha, beta, gamma;  // Dabc
    Rational s;                   // T

    static NamedSpace d(Rational alpha, Rational beta, Rational gamma);
    static NamedSpace t(Rational s);
    static NamedSpace of(Kind kind);

    // CLI syntax: der|qc|c|nder|qder|p|der0|d:a,b,c|t:s
    static NamedSpace parse(std::string_view text);
    std::string str() const;
};

// The defining system of a named space (not available for QDer, which is a
// projection of NDer).
LeibnizSpec<Rational> named_spec(const NamedSpace& space);

struct SolvedSpace {
    std::string spec;
    size_t dim = 0;     // dimension of the algebra
    size_t blocks = 1;  // operators per element
    std::vector<std::vector<Rational>> basis;

    size_t dimension() const { return basis.size(); }
    // Operator `b` of basis element `index` as an n x n matrix.
    Matrix<Rational> block(size_t index, size_t b) const;
};

SolvedSpace omega_space(const Algebra& a, const OmegaSpec& omega);
size_t omega_dimension(const Algebra& a, const OmegaSpec& omega);

SolvedSpace named_space(const Algebra& a, const NamedSpace& space);
size_t named_dimension(const Algebra& a, const NamedSpace& space);

// Dimension of the space a canonical class stands for on `a`; product
// classes add the dimensions of their factors.
size_t class_dimension(const Algebra& a, const CanonicalClass& cls);

// Evaluates the defining equations directly on operator matrices, without
// going through build_leibniz_system.
bool satisfies(const Algebra& a, const LeibnizSpec<Rational>& spec, std::span<const Matrix<Rational>> ops);

struct DerivationTriple {
    Matrix<Rational> A, B, C;
    friend bool operator==(const DerivationTriple&, const DerivationTriple&) = default;
};

// A nearly derivation (P, Q) together with a quasicentroid element R.
struct NQPair {
    Matrix<Rational> P, Q, R;
    friend bool operator==(const NQPair&, const NQPair&) = default;
};

struct OperatorPair {
    Matrix<Rational> first, second;
    friend bool operator==(const OperatorPair&, const OperatorPair&) = default;
};

DerivationTriple triple_of(const SolvedSpace& space, size_t index);

bool is_omega_derivation(const Algebra& a, const OmegaSpec& omega, const DerivationTriple& t);
bool is_abc_derivation(const Algebra& a, const Rational& alpha, const Rational& beta, const Rational& gamma,
                       const Matrix<Rational>& d);
bool is_nearly_derivation(const Algebra& a, const Matrix<Rational>& p, const Matrix<Rational>& q);
bool in_quasicentroid(const Algebra& a, const Matrix<Rational>& r);
bool in_centroid(const Algebra& a, const Matrix<Rational>& m);
bool in_p_space(const Algebra& a, const OperatorPair& ab);
bool in_t_space(const Algebra& a, const Rational& s, const DerivationTriple& t);

// (A,B,C) -> ((A, (B+C)/2), (B-C)/2). Requires a symmetric law and
// (A,B,C) in Der_0(a).
NQPair decompose(const Algebra& a, const DerivationTriple& t);
// ((P,Q),R) -> (P, Q+R, Q-R).
DerivationTriple recompose(const Algebra& a, const NQPair& p);

// The canonical embeddings between the canonical spaces.
namespace embed {

DerivationTriple phi1(const Matrix<Rational>& d, const Rational& s);
DerivationTriple phi2(const Matrix<Rational>& d);
DerivationTriple phi3(const Matrix<Rational>& m, const Rational& u, const Rational& s);
OperatorPair phi4(const Matrix<Rational>& m, const Rational& u);
OperatorPair phi5(const OperatorPair& ab);
OperatorPair phi6(const DerivationTriple& abc);
// Requires 1 != 2(s + u).
DerivationTriple phi7(const Matrix<Rational>& d, const Matrix<Rational>& m, const Rational& s, const Rational& u);
// Requires t != 2u.
OperatorPair phi8(const Matrix<Rational>& d, const Matrix<Rational>& m, const Rational& t, const Rational& u);

}  // namespace embed

}  // namespace omegader
