#include "omegader/parametric.hpp"

#include <algorithm>

#include "omegader/error.hpp"
#include "omegader/linalg.hpp"
#include "omegader/number_field.hpp"

namespace omegader {

namespace {

bool row_is_constant(const Matrix<Poly>& m, size_t i) {
    for (const auto& x : m.row(i)) {
        if (x.degree() > 0) return false;
    }
    return true;
}

bool at_most_linear(const Matrix<Poly>& m) {
    return std::all_of(m.flat().begin(), m.flat().end(), [](const Poly& x) { return x.degree() <= 1; });
}

// With entries of degree <= 1, m = M0 + t M1. Constant row operations on
// [M1 | M0] keep the rank at every t, and after reducing it at most
// rank(M1) rows still involve t.
Matrix<Poly> echelon_pencil(const Matrix<Poly>& m) {
    const size_t n = m.cols();
    Matrix<Rational> stacked(m.rows(), 2 * n);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) {
            stacked(i, j) = m(i, j).coeff(1);
            stacked(i, n + j) = m(i, j).coeff(0);
        }
    }
    const auto rr = rref(std::move(stacked));
    Matrix<Poly> out(rr.rank(), n);
    for (size_t i = 0; i < rr.rank(); ++i) {
        for (size_t j = 0; j < n; ++j) out(i, j) = Poly{rr.reduced(i, n + j), rr.reduced(i, j)};
    }
    return out;
}

// Repeatedly splits pairs by their gcd until the list is pairwise coprime.
std::vector<Poly> coprime_basis(std::vector<Poly> polys) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < polys.size() && !changed; ++a) {
            for (size_t b = a + 1; b < polys.size() && !changed; ++b) {
                const Poly g = poly_gcd(polys[a], polys[b]);
                if (g.degree() < 1) continue;
                Poly fa = exact_div(polys[a], g).monic();
                Poly fb = exact_div(polys[b], g).monic();
                polys.erase(polys.begin() + static_cast<long>(b));
                polys.erase(polys.begin() + static_cast<long>(a));
                for (Poly* p : {&fa, &fb}) {
                    if (p->degree() >= 1) polys.push_back(std::move(*p));
                }
                polys.push_back(g);
                changed = true;
            }
        }
    }
    return polys;
}

}  // namespace

ReducedSystem reduce_constant_rows(const Matrix<Poly>& m) {
    const bool pencil = at_most_linear(m);
    ReducedSystem out;
    out.residual = m;
    while (true) {
        Matrix<Poly> cur = pencil ? echelon_pencil(out.residual) : out.residual;
        std::vector<size_t> constant, parametric;
        for (size_t i = 0; i < cur.rows(); ++i) (row_is_constant(cur, i) ? constant : parametric).push_back(i);
        if (constant.empty()) {
            out.residual = std::move(cur);
            return out;
        }

        Matrix<Rational> m0(constant.size(), cur.cols());
        for (size_t r = 0; r < constant.size(); ++r) {
            for (size_t j = 0; j < cur.cols(); ++j) m0(r, j) = cur(constant[r], j).coeff(0);
        }
        const auto kernel = nullspace(m0);
        out.constant_rank += cur.cols() - kernel.size();
        out.residual = Matrix<Poly>(parametric.size(), kernel.size());
        for (size_t r = 0; r < parametric.size(); ++r) {
            const auto row = cur.row(parametric[r]);
            for (size_t k = 0; k < kernel.size(); ++k) {
                Poly acc;
                for (size_t j = 0; j < cur.cols(); ++j) {
                    if (!row[j].is_zero() && !kernel[k][j].is_zero()) acc += row[j] * kernel[k][j];
                }
                out.residual(r, k) = std::move(acc);
            }
        }
        // projecting can make more rows constant; only worth repeating for pencils
        if (!pencil) return out;
    }
}

BareissResult bareiss(Matrix<Poly> m) {
    BareissResult out;
    Poly prev(1);
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t best = m.rows();
        for (size_t i = r; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            if (best == m.rows() || m(i, c).degree() < m(best, c).degree()) best = i;
        }
        if (best == m.rows()) continue;
        m.swap_rows(r, best);
        const Poly pivot = m(r, c);
        for (size_t i = r + 1; i < m.rows(); ++i) {
            const Poly factor = m(i, c);
            for (size_t j = c + 1; j < m.cols(); ++j) {
                Poly v = pivot * m(i, j);
                if (!factor.is_zero() && !m(r, j).is_zero()) v -= factor * m(r, j);
                m(i, j) = prev.is_constant() ? v * prev.leading().inverse() : exact_div(v, prev);
            }
            m(i, c) = Poly();
        }
        out.pivots.push_back(pivot);
        prev = pivot;
        ++r;
    }
    out.rank = r;
    return out;
}

CandidateSet candidate_factors(const std::vector<Poly>& polys) {
    CandidateSet out;
    std::vector<Poly> residuals;
    for (const auto& p : polys) {
        if (p.degree() < 1) continue;
        Poly sqf = squarefree_part(p);
        for (const auto& root : rational_roots(sqf)) {
            out.rational.push_back(root);
            sqf = exact_div(sqf, Poly::linear_factor(root));
        }
        if (sqf.degree() >= 1) residuals.push_back(sqf.monic());
    }
    std::sort(out.rational.begin(), out.rational.end());
    out.rational.erase(std::unique(out.rational.begin(), out.rational.end()), out.rational.end());

    for (auto& f : coprime_basis(std::move(residuals))) {
        (f.degree() <= 3 ? out.irreducible : out.unresolved).push_back(std::move(f));
    }
    std::sort(out.irreducible.begin(), out.irreducible.end(), poly_less);
    std::sort(out.unresolved.begin(), out.unresolved.end(), poly_less);
    return out;
}

ParametricElimination parametric_elimination(const ReducedSystem& reduced) {
    auto elim = bareiss(reduced.residual);
    ParametricElimination out;
    out.generic_rank = reduced.constant_rank + elim.rank;
    out.candidates = candidate_factors(elim.pivots);
    out.pivots = std::move(elim.pivots);
    return out;
}

ParametricElimination parametric_elimination(const Matrix<Poly>& m) {
    return parametric_elimination(reduce_constant_rows(m));
}

Matrix<Rational> substitute(const Matrix<Poly>& m, const Rational& value) {
    return m.map([&](const Poly& p) { return p.eval(value); });
}

size_t rank_at(const ReducedSystem& reduced, const ParameterPoint& point) {
    if (const auto* value = std::get_if<Rational>(&point)) {
        return reduced.constant_rank + rank(substitute(reduced.residual, *value));
    }
    const Poly& modulus = std::get<Poly>(point);
    if (modulus.degree() == 1) {
        const Poly mon = modulus.monic();
        return rank_at(reduced, ParameterPoint(-mon.coeff(0)));
    }
    if (!verified_irreducible(modulus)) {
        throw ReducibleModulus("cannot verify irreducibility of " + modulus.str() +
                               "; refine the point to an irreducible factor of degree at most 3");
    }
    const FieldRef field = NumberField::make(modulus);
    const auto lifted = reduced.residual.map([&](const Poly& p) { return NumberFieldElem(field, p); });
    return reduced.constant_rank + rank(lifted);
}

size_t rank_over_quotient(const ReducedSystem& reduced, const Poly& modulus) {
    if (squarefree_part(modulus).degree() != modulus.degree()) {
        throw PreconditionError("rank_over_quotient: modulus " + modulus.str() + " is not squarefree");
    }
    const FieldRef field = NumberField::make(modulus);
    const auto lifted = reduced.residual.map([&](const Poly& p) { return NumberFieldElem(field, p); });
    return reduced.constant_rank + rank(lifted);
}

size_t rank_at(const Matrix<Poly>& m, const ParameterPoint& point) {
    return rank_at(reduce_constant_rows(m), point);
}

}  // namespace omegader
