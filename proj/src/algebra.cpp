#include "omegader/algebra.hpp"

#include "omegader/error.hpp"
#include "omegader/linalg.hpp"

namespace omegader {

std::string_view law_name(Law law) {
    switch (law) {
        case Law::AntiCommutative:
            return "anti-commutative";
        case Law::Commutative:
            return "commutative";
        case Law::None:
            return "none";
    }
    return "none";
}

Law parse_law(std::string_view text) {
    if (text == "anti-commutative" || text == "anticommutative") return Law::AntiCommutative;
    if (text == "commutative") return Law::Commutative;
    if (text == "none") return Law::None;
    throw DocumentError("law", "unknown law '" + std::string(text) + "'");
}

Algebra::Algebra(std::string name, size_t dim, Law law)
    : Algebra(std::move(name), dim, law, std::vector<Rational>(dim * dim * dim, Rational(0))) {}

Algebra::Algebra(std::string name, size_t dim, Law law, std::vector<Rational> constants)
    : name_(std::move(name)), dim_(dim), law_(law), constants_(std::move(constants)) {
    if (dim_ == 0) throw PreconditionError("algebra dimension must be positive");
    if (constants_.size() != dim_ * dim_ * dim_) throw PreconditionError("structure constant count must be dim^3");
}

std::vector<Rational> Algebra::product(size_t i, size_t j) const {
    std::vector<Rational> out(dim_);
    for (size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
}

Algebra Algebra::renamed(std::string name) const {
    Algebra out = *this;
    out.name_ = std::move(name);
    return out;
}

namespace {

std::string_view check_name(Check check) {
    switch (check) {
        case Check::AntiCommutative:
            return "anti-commutative";
        case Check::Commutative:
            return "commutative";
        case Check::Jacobi:
            return "jacobi";
    }
    return "";
}

}  // namespace

ValidationReport validate(const Algebra& a, Check check) {
    ValidationReport report{check, true, std::nullopt};
    const size_t n = a.dim();
    auto fail = [&](size_t i, size_t j, size_t k, std::string detail) {
        report.passed = false;
        report.first = Violation{{i + 1, j + 1, k + 1}, std::move(detail)};
    };
    if (check == Check::AntiCommutative || check == Check::Commutative) {
        const bool anti = check == Check::AntiCommutative;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                for (size_t k = 0; k < n; ++k) {
                    const Rational expected = anti ? -a.c(j, i, k) : a.c(j, i, k);
                    if (a.c(i, j, k) != expected) {
                        fail(i, j, k,
                             std::string(check_name(check)) + " violated: c(" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + ") = " +
                                 a.c(i, j, k).str() + " but mirror gives " + expected.str());
                        return report;
                    }
                }
            }
        }
        return report;
    }
    // Jacobi: mu(mu(x,y),z) + mu(mu(y,z),x) + mu(mu(z,x),y) = 0 on basis triples.
    auto basis = [&](size_t i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = Rational(1);
        return v;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                auto s = bracket(a, a.product(i, j), basis(k));
                const auto t2 = bracket(a, a.product(j, k), basis(i));
                const auto t3 = bracket(a, a.product(k, i), basis(j));
                for (size_t m = 0; m < n; ++m) {
                    s[m] += t2[m] + t3[m];
                    if (!s[m].is_zero()) {
                        fail(i, j, k,
                             "jacobi violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                 std::to_string(k + 1) + "): coordinate " + std::to_string(m + 1) + " is " +
                                 s[m].str());
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

std::vector<Rational> bracket(const Algebra& a, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    const size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw PreconditionError("bracket: vector length must equal dim");
    std::vector<Rational> out(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Rational w = x[i] * y[j];
            for (size_t k = 0; k < n; ++k) {
                if (!a.c(i, j, k).is_zero()) out[k] += w * a.c(i, j, k);
            }
        }
    }
    return out;
}

BasisChange::BasisChange(Matrix<Rational> g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols()) throw PreconditionError("basis change must be square");
    try {
        g_inv_ = omegader::inverse(g_);
    } catch (const PreconditionError&) {
        throw PreconditionError("basis change is singular");
    }
}

BasisChange random_basis_change(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<long> entry(-3, 3);
    for (;;) {
        Matrix<Rational> g(n, n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) g(i, j) = Rational(entry(rng));
        }
        if (rank(g) == n) return BasisChange(std::move(g));
    }
}

Algebra change_basis(const Algebra& a, const BasisChange& g) {
    const size_t n = a.dim();
    if (g.matrix().rows() != n) throw PreconditionError("basis change dimension mismatch");
    const auto& gm = g.matrix();
    const auto& h = g.inverse_matrix();
    auto column = [&](const Matrix<Rational>& m, size_t j) {
        std::vector<Rational> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = m(i, j);
        return v;
    };
    std::vector<Rational> constants(n * n * n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        const auto x = column(h, i);
        for (size_t j = 0; j < n; ++j) {
            const auto z = apply(gm, std::span<const Rational>(bracket(a, x, column(h, j))));
            for (size_t k = 0; k < n; ++k) constants[(i * n + j) * n + k] = z[k];
        }
    }
    return Algebra(a.name(), n, a.law(), std::move(constants));
}

Subspace center(const Algebra& a) {
    const size_t n = a.dim();
    const bool symmetric = a.law() != Law::None;
    Matrix<Rational> m((symmetric ? 1 : 2) * n * n, n);
    // Row (j, k): coordinate k of mu(X, e_j); then of mu(e_j, X).
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < n; ++k) {
            for (size_t i = 0; i < n; ++i) {
                m(j * n + k, i) = a.c(i, j, k);
                if (!symmetric) m(n * n + j * n + k, i) = a.c(j, i, k);
            }
        }
    }
    Subspace out;
    out.basis = nullspace(m);
    out.dimension = out.basis.size();
    return out;
}

DerivedSpan derived_span(const Algebra& a) {
    const size_t n = a.dim();
    Matrix<Rational> m(n * n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) m(i * n + j, k) = a.c(i, j, k);
        }
    }
    DerivedSpan out;
    out.dimension = rank(m);
    out.perfect = out.dimension == n;
    return out;
}

}  // namespace omegader
