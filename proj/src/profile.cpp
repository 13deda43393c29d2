#include "omegader/profile.hpp"

#include <algorithm>

#include "omegader/error.hpp"
#include "omegader/linalg.hpp"

namespace omegader {

namespace {

using PolyTerm = LeibnizSpec<Poly>::Term;

const Poly kParam = Poly::monomial(Rational(1), 1);

LeibnizSpec<Poly> family_spec(ParametricFamily family) {
    switch (family) {
        case ParametricFamily::T:
            return {3,
                    {PolyTerm{TermKind::Outer, 0, Poly(1)}, PolyTerm{TermKind::Left, 1, Poly(-1)},
                     PolyTerm{TermKind::Right, 2, Poly(-1)}},
                    {{Poly(1), kParam, kParam - Poly(1)}}};
        case ParametricFamily::D_t11:
            return {1,
                    {PolyTerm{TermKind::Outer, 0, kParam}, PolyTerm{TermKind::Left, 0, Poly(-1)},
                     PolyTerm{TermKind::Right, 0, Poly(-1)}},
                    {}};
        case ParametricFamily::D_t10:
            return {1, {PolyTerm{TermKind::Outer, 0, kParam}, PolyTerm{TermKind::Left, 0, Poly(-1)}}, {}};
    }
    return {};
}

struct Evaluator {
    ReducedSystem reduced;
    size_t cols = 0;

    Evaluator(const Algebra& a, ParametricFamily family) {
        const auto m = family_system(a, family);
        cols = m.cols();
        reduced = reduce_constant_rows(m);
    }

    size_t at(const ParameterPoint& p) const { return cols - rank_at(reduced, p); }
};

std::string unresolved_warning(ParametricFamily family, const Poly& f) {
    return std::string(family_name(family)) + ": factor " + f.str() +
           " has degree >= 4 and was not evaluated";
}

}  // namespace

std::string_view family_name(ParametricFamily family) {
    switch (family) {
        case ParametricFamily::T:
            return "T";
        case ParametricFamily::D_t11:
            return "D_t11";
        case ParametricFamily::D_t10:
            return "D_t10";
    }
    return "";
}

ParametricFamily parse_family(std::string_view text) {
    if (text == "t" || text == "T") return ParametricFamily::T;
    if (text == "d11" || text == "D_t11") return ParametricFamily::D_t11;
    if (text == "d10" || text == "D_t10") return ParametricFamily::D_t10;
    throw UsageError("unknown family '" + std::string(text) + "'; expected t|d11|d10");
}

Matrix<Poly> family_system(const Algebra& a, ParametricFamily family) {
    return build_leibniz_system(a, family_spec(family));
}

std::string point_str(const ParameterPoint& point) {
    if (const auto* r = std::get_if<Rational>(&point)) return r->str();
    return std::get<Poly>(point).str("t");
}

bool same_point(const ParameterPoint& x, const ParameterPoint& y) {
    if (x.index() != y.index()) return false;
    if (const auto* r = std::get_if<Rational>(&x)) return *r == std::get<Rational>(y);
    return std::get<Poly>(x).monic() == std::get<Poly>(y).monic();
}

ParameterPoint d11_reparam(const ParameterPoint& alpha) {
    if (const auto* r = std::get_if<Rational>(&alpha)) return (Rational(1) - *r) / Rational(2);
    // alpha is a root of p, so s = (1 - alpha)/2 is a root of p(1 - 2s).
    return std::get<Poly>(alpha).compose_affine(Rational(-2), Rational(1)).monic();
}

std::vector<std::string> ParametricReport::warnings() const {
    std::vector<std::string> out;
    for (const auto& f : unresolved) out.push_back(unresolved_warning(family, f));
    return out;
}

ParametricReport sweep(const Algebra& a, ParametricFamily family) {
    const Evaluator eval(a, family);
    const auto elim = parametric_elimination(eval.reduced);

    ParametricReport out;
    out.family = family;
    out.generic_dimension = eval.cols - elim.generic_rank;
    auto consider = [&](ParameterPoint p) {
        const size_t d = eval.at(p);
        if (d > out.generic_dimension) out.special.push_back({std::move(p), d});
    };
    for (const auto& r : elim.candidates.rational) consider(r);
    for (const auto& f : elim.candidates.irreducible) consider(f);
    for (const auto& f : elim.candidates.unresolved) {
        // Discharged when no root of f changes the rank.
        try {
            if (eval.cols - rank_over_quotient(eval.reduced, f) == out.generic_dimension) continue;
        } catch (const ReducibleModulus&) {
        }
        out.unresolved.push_back(f);
    }
    return out;
}

size_t evaluate_at(const Algebra& a, ParametricFamily family, const ParameterPoint& point) {
    return Evaluator(a, family).at(point);
}

std::string_view invariant_name(FixedInvariant which) {
    switch (which) {
        case FixedInvariant::QC:
            return "QC";
        case FixedInvariant::C:
            return "C";
        case FixedInvariant::Der:
            return "Der";
        case FixedInvariant::D011:
            return "D(0,1,1)";
        case FixedInvariant::D211:
            return "D(2,1,1)";
        case FixedInvariant::D010:
            return "D(0,1,0)";
        case FixedInvariant::NDer:
            return "NDer";
        case FixedInvariant::QDer:
            return "QDer";
        case FixedInvariant::P:
            return "P";
        case FixedInvariant::Der0:
            return "Der0";
    }
    return "";
}

NamedSpace invariant_space(FixedInvariant which) {
    using Kind = NamedSpace::Kind;
    switch (which) {
        case FixedInvariant::QC:
            return NamedSpace::of(Kind::QC);
        case FixedInvariant::C:
            return NamedSpace::of(Kind::C);
        case FixedInvariant::Der:
            return NamedSpace::of(Kind::Der);
        case FixedInvariant::D011:
            return NamedSpace::d(0, 1, 1);
        case FixedInvariant::D211:
            return NamedSpace::d(2, 1, 1);
        case FixedInvariant::D010:
            return NamedSpace::d(0, 1, 0);
        case FixedInvariant::NDer:
            return NamedSpace::of(Kind::NDer);
        case FixedInvariant::QDer:
            return NamedSpace::of(Kind::QDer);
        case FixedInvariant::P:
            return NamedSpace::of(Kind::P);
        case FixedInvariant::Der0:
            return NamedSpace::of(Kind::Der0);
    }
    return {};
}

std::vector<std::string> InvariantProfile::warnings() const {
    std::vector<std::string> out;
    for (const auto& r : parametric) {
        for (auto& w : r.warnings()) out.push_back(std::move(w));
    }
    return out;
}

InvariantProfile profile(const Algebra& a) {
    InvariantProfile out;
    out.algebra = a.name();
    for (size_t i = 0; i < kFixedInvariants.size(); ++i) {
        out.fixed[i] = named_dimension(a, invariant_space(kFixedInvariants[i]));
    }
    for (size_t i = 0; i < kFamilies.size(); ++i) out.parametric[i] = sweep(a, kFamilies[i]);
    if (out[FixedInvariant::Der0] != out[FixedInvariant::NDer] + out[FixedInvariant::QC]) {
        throw std::logic_error("profile of " + a.name() + ": Der0 differs from NDer + QC");
    }
    return out;
}

ObstructionVerdict obstruct(const Algebra& source, const Algebra& target) {
    if (source.dim() != target.dim()) {
        throw PreconditionError("obstruct: dimensions differ (" + std::to_string(source.dim()) + " vs " +
                                std::to_string(target.dim()) + ")");
    }
    const auto ps = profile(source);
    const auto pt = profile(target);

    ObstructionVerdict out;
    out.source = source.name();
    out.target = target.name();
    auto record = [&](std::string name, std::optional<ParametricFamily> family, std::optional<ParameterPoint> at,
                      size_t ds, size_t dt) {
        if (ds > dt) out.all.push_back({std::move(name), family, std::move(at), ds, dt});
    };

    for (const auto family : kFamilies) {
        const auto& rs = ps.family(family);
        const auto& rt = pt.family(family);
        const std::string name(family_name(family));
        record(name, family, std::nullopt, rs.generic_dimension, rt.generic_dimension);

        std::vector<ParameterPoint> points;
        for (const auto* r : {&rs, &rt}) {
            for (const auto& sp : r->special) {
                const bool seen = std::any_of(points.begin(), points.end(),
                                              [&](const ParameterPoint& p) { return same_point(p, sp.point); });
                if (!seen) points.push_back(sp.point);
            }
        }
        if (points.empty()) continue;
        const Evaluator es(source, family), et(target, family);
        for (const auto& p : points) record(name, family, p, es.at(p), et.at(p));

        for (const auto* r : {&rs, &rt}) {
            for (auto& w : r->warnings()) out.warnings.push_back(std::move(w));
        }
    }
    for (size_t i = 0; i < kFixedInvariants.size(); ++i) {
        record(std::string(invariant_name(kFixedInvariants[i])), std::nullopt, std::nullopt, ps.fixed[i], pt.fixed[i]);
    }
    if (!out.all.empty()) {
        out.outcome = ObstructionVerdict::Outcome::Excluded;
        out.witness = out.all.front();
    }
    return out;
}

std::string_view hypothesis_name(Hypothesis which) {
    switch (which) {
        case Hypothesis::QcEqC:
            return "qc_eq_c";
        case Hypothesis::QderSplits:
            return "qder_splits";
        case Hypothesis::Perfect:
            return "perfect";
        case Hypothesis::Centerless:
            return "centerless";
    }
    return "";
}

Hypothesis parse_hypothesis(std::string_view text) {
    for (auto h : {Hypothesis::QcEqC, Hypothesis::QderSplits, Hypothesis::Perfect, Hypothesis::Centerless}) {
        if (hypothesis_name(h) == text) return h;
    }
    throw UsageError("unknown hypothesis '" + std::string(text) + "'");
}

HypothesisReport hypothesis_check(const Algebra& a, Hypothesis which) {
    using Kind = NamedSpace::Kind;
    HypothesisReport out{which, false, {}};
    switch (which) {
        case Hypothesis::QcEqC: {
            const auto qc = named_space(a, NamedSpace::of(Kind::QC));
            const size_t c = named_dimension(a, NamedSpace::of(Kind::C));
            bool members = true;
            for (size_t i = 0; i < qc.dimension() && members; ++i) members = in_centroid(a, qc.block(i, 0));
            out.holds = qc.dimension() == c && members;
            out.detail = "dim QC = " + std::to_string(qc.dimension()) + ", dim C = " + std::to_string(c) +
                         (members ? "" : ", some QC element is not in C");
            break;
        }
        case Hypothesis::QderSplits: {
            const auto der = named_space(a, NamedSpace::of(Kind::Der));
            const auto c = named_space(a, NamedSpace::of(Kind::C));
            const size_t qder = named_dimension(a, NamedSpace::of(Kind::QDer));
            std::vector<std::vector<Rational>> stacked = der.basis;
            stacked.insert(stacked.end(), c.basis.begin(), c.basis.end());
            const size_t joint = stacked.empty() ? 0 : rank(rows_matrix(stacked, stacked.front().size()));
            const size_t meet = der.dimension() + c.dimension() - joint;
            out.holds = qder == der.dimension() + c.dimension() && meet == 0;
            out.detail = "dim QDer = " + std::to_string(qder) + ", dim Der = " + std::to_string(der.dimension()) +
                         ", dim C = " + std::to_string(c.dimension()) + ", dim(Der meet C) = " + std::to_string(meet);
            break;
        }
        case Hypothesis::Perfect: {
            const auto span = derived_span(a);
            out.holds = span.perfect;
            out.detail = "dim [A,A] = " + std::to_string(span.dimension);
            break;
        }
        case Hypothesis::Centerless: {
            const auto z = center(a);
            out.holds = z.dimension == 0;
            out.detail = "dim center = " + std::to_string(z.dimension);
            break;
        }
    }
    return out;
}

}  // namespace omegader
