#include "omegader/spaces.hpp"

#include <stdexcept>

#include "omegader/error.hpp"
#include "omegader/linalg.hpp"

namespace omegader {

namespace {

using Term = LeibnizSpec<Rational>::Term;

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (;;) {
        const size_t at = text.find(sep, start);
        parts.emplace_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) return parts;
        start = at + 1;
    }
}

std::vector<Rational> column(const Matrix<Rational>& m, size_t j) {
    std::vector<Rational> v(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

std::vector<Rational> unit(size_t n, size_t i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = Rational(1);
    return v;
}

LeibnizSpec<Rational> abc_spec(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    return {1, {Term{TermKind::Outer, 0, alpha}, Term{TermKind::Left, 0, -beta}, Term{TermKind::Right, 0, -gamma}}, {}};
}

LeibnizSpec<Rational> der0_spec() {
    return {3,
            {Term{TermKind::Outer, 0, Rational(1)}, Term{TermKind::Left, 1, Rational(-1)},
             Term{TermKind::Right, 2, Rational(-1)}},
            {}};
}

SolvedSpace solve(const Algebra& a, const LeibnizSpec<Rational>& spec, std::string label) {
    SolvedSpace out{std::move(label), a.dim(), spec.blocks, nullspace(build_leibniz_system(a, spec))};
    const size_t nn = a.dim() * a.dim();
    for (size_t idx = 0; idx < out.basis.size(); ++idx) {
        std::vector<Matrix<Rational>> ops;
        for (size_t b = 0; b < spec.blocks; ++b) ops.push_back(out.block(idx, b));
        if (!satisfies(a, spec, ops)) {
            throw std::logic_error("solved basis element " + std::to_string(idx) + " of " + out.spec +
                                   " fails its defining equations");
        }
    }
    (void)nn;
    return out;
}

Matrix<Rational> scaled(const Matrix<Rational>& m, const Rational& c) { return m * c; }

}  // namespace

LeibnizSpec<Rational> omega_spec_system(const OmegaSpec& omega) {
    auto spec = der0_spec();
    for (size_t r = 0; r < 2; ++r) spec.relations.push_back({omega(r, 0), omega(r, 1), omega(r, 2)});
    return spec;
}

Matrix<Rational> build_system(const Algebra& a, const OmegaSpec& omega) {
    return build_leibniz_system(a, omega_spec_system(omega));
}

NamedSpace NamedSpace::d(Rational alpha, Rational beta, Rational gamma) {
    NamedSpace s;
    s.kind = Kind::Dabc;
    s.alpha = std::move(alpha);
    s.beta = std::move(beta);
    s.gamma = std::move(gamma);
    return s;
}

NamedSpace NamedSpace::t(Rational param) {
    NamedSpace s;
    s.kind = Kind::T;
    s.s = std::move(param);
    return s;
}

NamedSpace NamedSpace::of(Kind kind) {
    NamedSpace s;
    s.kind = kind;
    return s;
}

NamedSpace NamedSpace::parse(std::string_view text) {
    if (text == "der") return of(Kind::Der);
    if (text == "qc") return of(Kind::QC);
    if (text == "c") return of(Kind::C);
    if (text == "nder") return of(Kind::NDer);
    if (text == "qder") return of(Kind::QDer);
    if (text == "p") return of(Kind::P);
    if (text == "der0") return of(Kind::Der0);
    try {
        if (text.starts_with("d:")) {
            const auto parts = split(text.substr(2), ',');
            if (parts.size() == 3) return d(Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]));
        } else if (text.starts_with("t:")) {
            return t(Rational::parse(text.substr(2)));
        }
    } catch (const Error&) {
    }
    throw UsageError("unknown space '" + std::string(text) + "'; expected der|qc|c|nder|qder|p|der0|d:a,b,c|t:s");
}

std::string NamedSpace::str() const {
    switch (kind) {
        case Kind::Dabc:
            return "D(" + alpha.str() + "," + beta.str() + "," + gamma.str() + ")";
        case Kind::QC:
            return "QC";
        case Kind::C:
            return "C";
        case Kind::Der:
            return "Der";
        case Kind::NDer:
            return "NDer";
        case Kind::QDer:
            return "QDer";
        case Kind::P:
            return "P";
        case Kind::T:
            return "T(" + s.str() + ")";
        case Kind::Der0:
            return "Der0";
    }
    return "";
}

LeibnizSpec<Rational> named_spec(const NamedSpace& space) {
    using Kind = NamedSpace::Kind;
    switch (space.kind) {
        case Kind::Dabc:
            return abc_spec(space.alpha, space.beta, space.gamma);
        case Kind::QC:
            return abc_spec(Rational(0), Rational(1), Rational(-1));
        case Kind::C:
            return abc_spec(Rational(1), Rational(1), Rational(0));
        case Kind::Der:
            return abc_spec(Rational(1), Rational(1), Rational(1));
        case Kind::NDer:
            return {2,
                    {Term{TermKind::Outer, 0, Rational(1)}, Term{TermKind::Left, 1, Rational(-1)},
                     Term{TermKind::Right, 1, Rational(-1)}},
                    {}};
        case Kind::P:
            return {2, {Term{TermKind::Outer, 0, Rational(1)}, Term{TermKind::Left, 1, Rational(-1)}}, {}};
        case Kind::T: {
            auto spec = der0_spec();
            spec.relations.push_back({Rational(1), space.s, space.s - Rational(1)});
            return spec;
        }
        case Kind::Der0:
            return der0_spec();
        case Kind::QDer:
            break;
    }
    throw PreconditionError("QDer has no defining system of its own; it is the Q-projection of NDer");
}

Matrix<Rational> SolvedSpace::block(size_t index, size_t b) const {
    const size_t nn = dim * dim;
    return Matrix<Rational>::from_flat(dim, dim, std::span<const Rational>(basis.at(index)).subspan(b * nn, nn));
}

SolvedSpace omega_space(const Algebra& a, const OmegaSpec& omega) {
    return solve(a, omega_spec_system(omega), "Der_Omega" + omega.str());
}

size_t omega_dimension(const Algebra& a, const OmegaSpec& omega) {
    const auto m = build_system(a, omega);
    return m.cols() - rank(m);
}

SolvedSpace named_space(const Algebra& a, const NamedSpace& space) {
    if (space.kind != NamedSpace::Kind::QDer) return solve(a, named_spec(space), space.str());

    const auto nder = named_space(a, NamedSpace::of(NamedSpace::Kind::NDer));
    const size_t nn = a.dim() * a.dim();
    // Columns are the Q parts; pivot columns pick an independent subfamily.
    Matrix<Rational> qs(nn, nder.dimension());
    for (size_t k = 0; k < nder.dimension(); ++k) {
        for (size_t p = 0; p < nn; ++p) qs(p, k) = nder.basis[k][nn + p];
    }
    SolvedSpace out{space.str(), a.dim(), 1, {}};
    for (size_t k : rref(qs).pivots) {
        out.basis.emplace_back(nder.basis[k].begin() + static_cast<long>(nn), nder.basis[k].end());
    }
    return out;
}

size_t named_dimension(const Algebra& a, const NamedSpace& space) {
    if (space.kind == NamedSpace::Kind::QDer) return named_space(a, space).dimension();
    const auto m = build_leibniz_system(a, named_spec(space));
    return m.cols() - rank(m);
}

size_t class_dimension(const Algebra& a, const CanonicalClass& cls) {
    using Kind = NamedSpace::Kind;
    const Rational zero(0), one(1);
    auto qc = [&] { return named_dimension(a, NamedSpace::of(Kind::QC)); };
    auto nder = [&] { return named_dimension(a, NamedSpace::of(Kind::NDer)); };
    switch (cls.label) {
        case ClassLabel::D100:
            return named_dimension(a, NamedSpace::d(one, zero, zero));
        case ClassLabel::QC:
            return qc();
        case ClassLabel::D11m1:
            return named_dimension(a, NamedSpace::d(one, one, -one));
        case ClassLabel::DT10:
            return named_dimension(a, NamedSpace::d(cls.parameter.value(), one, zero));
        case ClassLabel::DT11:
            return named_dimension(a, NamedSpace::d(cls.parameter.value(), one, one));
        case ClassLabel::DT11xQC:
            return named_dimension(a, NamedSpace::d(cls.parameter.value(), one, one)) + qc();
        case ClassLabel::D100xQC:
            return named_dimension(a, NamedSpace::d(one, zero, zero)) + qc();
        case ClassLabel::T:
            return named_dimension(a, NamedSpace::t(cls.parameter.value()));
        case ClassLabel::P:
            return named_dimension(a, NamedSpace::of(Kind::P));
        case ClassLabel::NDER:
            return nder();
        case ClassLabel::NDERxQC:
            return nder() + qc();
    }
    return 0;
}

bool satisfies(const Algebra& a, const LeibnizSpec<Rational>& spec, std::span<const Matrix<Rational>> ops) {
    const size_t n = a.dim();
    if (ops.size() != spec.blocks) throw PreconditionError("operator count does not match the system");
    for (const auto& op : ops) {
        if (op.rows() != n || op.cols() != n) throw PreconditionError("operator shape does not match the algebra");
    }
    for (const auto& rel : spec.relations) {
        Matrix<Rational> sum(n, n);
        for (size_t b = 0; b < spec.blocks; ++b) {
            if (!rel[b].is_zero()) sum += ops[b] * rel[b];
        }
        if (!sum.is_zero()) return false;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            std::vector<Rational> total(n, Rational(0));
            for (const auto& term : spec.identity) {
                if (term.coeff.is_zero()) continue;
                const auto& x = ops[term.block];
                std::vector<Rational> v;
                switch (term.kind) {
                    case TermKind::Outer:
                        v = apply(x, std::span<const Rational>(a.product(i, j)));
                        break;
                    case TermKind::Left:
                        v = bracket(a, column(x, i), unit(n, j));
                        break;
                    case TermKind::Right:
                        v = bracket(a, unit(n, i), column(x, j));
                        break;
                }
                for (size_t k = 0; k < n; ++k) total[k] += term.coeff * v[k];
            }
            for (const auto& x : total) {
                if (!x.is_zero()) return false;
            }
        }
    }
    return true;
}

DerivationTriple triple_of(const SolvedSpace& space, size_t index) {
    if (space.blocks != 3) throw PreconditionError("space does not hold triples");
    return {space.block(index, 0), space.block(index, 1), space.block(index, 2)};
}

bool is_omega_derivation(const Algebra& a, const OmegaSpec& omega, const DerivationTriple& t) {
    const std::vector<Matrix<Rational>> ops{t.A, t.B, t.C};
    return satisfies(a, omega_spec_system(omega), ops);
}

bool is_abc_derivation(const Algebra& a, const Rational& alpha, const Rational& beta, const Rational& gamma,
                       const Matrix<Rational>& d) {
    const std::vector<Matrix<Rational>> ops{d};
    return satisfies(a, abc_spec(alpha, beta, gamma), ops);
}

bool is_nearly_derivation(const Algebra& a, const Matrix<Rational>& p, const Matrix<Rational>& q) {
    const std::vector<Matrix<Rational>> ops{p, q};
    return satisfies(a, named_spec(NamedSpace::of(NamedSpace::Kind::NDer)), ops);
}

bool in_quasicentroid(const Algebra& a, const Matrix<Rational>& r) {
    return is_abc_derivation(a, Rational(0), Rational(1), Rational(-1), r);
}

bool in_centroid(const Algebra& a, const Matrix<Rational>& m) {
    return is_abc_derivation(a, Rational(1), Rational(1), Rational(0), m);
}

bool in_p_space(const Algebra& a, const OperatorPair& ab) {
    const std::vector<Matrix<Rational>> ops{ab.first, ab.second};
    return satisfies(a, named_spec(NamedSpace::of(NamedSpace::Kind::P)), ops);
}

bool in_t_space(const Algebra& a, const Rational& s, const DerivationTriple& t) {
    const std::vector<Matrix<Rational>> ops{t.A, t.B, t.C};
    return satisfies(a, named_spec(NamedSpace::t(s)), ops);
}

NQPair decompose(const Algebra& a, const DerivationTriple& t) {
    if (a.law() == Law::None) throw PreconditionError("decompose requires an anti-commutative or commutative algebra");
    if (!is_omega_derivation(a, OmegaSpec::zero(), t)) throw PreconditionError("decompose: triple is not in Der_0");
    const Rational half(1, 2);
    NQPair out{t.A, (t.B + t.C) * half, (t.B - t.C) * half};
    if (!is_nearly_derivation(a, out.P, out.Q) || !in_quasicentroid(a, out.R)) {
        throw std::logic_error("decompose produced components outside NDer x QC");
    }
    return out;
}

DerivationTriple recompose(const Algebra& a, const NQPair& p) {
    if (!is_nearly_derivation(a, p.P, p.Q)) throw PreconditionError("recompose: (P,Q) is not a nearly derivation");
    if (!in_quasicentroid(a, p.R)) throw PreconditionError("recompose: R is not in the quasicentroid");
    return {p.P, p.Q + p.R, p.Q - p.R};
}

namespace embed {

DerivationTriple phi1(const Matrix<Rational>& d, const Rational& s) {
    return {scaled(d, Rational(1) - Rational(2) * s), d, d};
}

DerivationTriple phi2(const Matrix<Rational>& d) { return {d, -d, d}; }

DerivationTriple phi3(const Matrix<Rational>& m, const Rational& u, const Rational& s) {
    return {scaled(m, u), scaled(m, Rational(1) - u - s), scaled(m, u + s)};
}

OperatorPair phi4(const Matrix<Rational>& m, const Rational& u) { return {scaled(m, u), m}; }

OperatorPair phi5(const OperatorPair& ab) { return {ab.first, scaled(ab.second, Rational(1, 2))}; }

OperatorPair phi6(const DerivationTriple& abc) { return {abc.A, scaled(abc.B + abc.C, Rational(1, 2))}; }

DerivationTriple phi7(const Matrix<Rational>& d, const Matrix<Rational>& m, const Rational& s, const Rational& u) {
    if (Rational(2) * (s + u) == Rational(1)) throw PreconditionError("phi7 requires 1 != 2(s+u)");
    const auto x = phi1(d, s);
    const auto y = phi3(m, u, s);
    return {x.A + y.A, x.B + y.B, x.C + y.C};
}

OperatorPair phi8(const Matrix<Rational>& d, const Matrix<Rational>& m, const Rational& t, const Rational& u) {
    if (t == Rational(2) * u) throw PreconditionError("phi8 requires t != 2u");
    return {scaled(d, t) + scaled(m, u), d + scaled(m, Rational(1, 2))};
}

}  // namespace embed

}  // namespace omegader
