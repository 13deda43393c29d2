#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegader/algebra.hpp"
#include "omegader/parametric.hpp"
#include "omegader/spaces.hpp"

namespace omegader {

// One-parameter families of spaces. The parameter enters every system with
// degree at most one.
//   T      triples in Der_0 with A + tB + (t-1)C = 0
//   D_t11  operators in D(t,1,1)
//   D_t10  operators in D(t,1,0)
enum class ParametricFamily { T, D_t11, D_t10 };

inline constexpr std::array<ParametricFamily, 3> kFamilies{ParametricFamily::T, ParametricFamily::D_t11,
                                                           ParametricFamily::D_t10};

std::string_view family_name(ParametricFamily family);
// CLI spelling: t | d11 | d10.
ParametricFamily parse_family(std::string_view text);

Matrix<Poly> family_system(const Algebra& a, ParametricFamily family);

std::string point_str(const ParameterPoint& point);
bool same_point(const ParameterPoint& x, const ParameterPoint& y);

// For D_t11 the native parameter is alpha in D(alpha,1,1); reports also give
// s with alpha = 1 - 2s, the usual way of writing the family.
ParameterPoint d11_reparam(const ParameterPoint& alpha);

struct SpecialPoint {
    ParameterPoint point;
    size_t dimension = 0;
    friend bool operator==(const SpecialPoint&, const SpecialPoint&) = default;
};

struct ParametricReport {
    ParametricFamily family = ParametricFamily::T;
    size_t generic_dimension = 0;
    std::vector<SpecialPoint> special;  // rational points ascending, then moduli
    std::vector<Poly> unresolved;

    std::vector<std::string> warnings() const;
    friend bool operator==(const ParametricReport&, const ParametricReport&) = default;
};

ParametricReport sweep(const Algebra& a, ParametricFamily family);

// Exact dimension at one parameter value; a modulus must be verifiably
// irreducible (ReducibleModulus otherwise).
size_t evaluate_at(const Algebra& a, ParametricFamily family, const ParameterPoint& point);

enum class FixedInvariant { QC, C, Der, D011, D211, D010, NDer, QDer, P, Der0 };

inline constexpr std::array<FixedInvariant, 10> kFixedInvariants{
    FixedInvariant::QC,   FixedInvariant::C,    FixedInvariant::Der,  FixedInvariant::D011, FixedInvariant::D211,
    FixedInvariant::D010, FixedInvariant::NDer, FixedInvariant::QDer, FixedInvariant::P,    FixedInvariant::Der0};

std::string_view invariant_name(FixedInvariant which);
NamedSpace invariant_space(FixedInvariant which);

struct InvariantProfile {
    std::string algebra;
    std::array<size_t, kFixedInvariants.size()> fixed{};
    std::array<ParametricReport, kFamilies.size()> parametric{};

    size_t operator[](FixedInvariant which) const { return fixed[static_cast<size_t>(which)]; }
    const ParametricReport& family(ParametricFamily f) const { return parametric[static_cast<size_t>(f)]; }
    std::vector<std::string> warnings() const;

    // Compares everything except the algebra name.
    bool same_invariants(const InvariantProfile& other) const {
        return fixed == other.fixed && parametric == other.parametric;
    }
};

InvariantProfile profile(const Algebra& a);

struct Witness {
    std::string invariant;  // fixed invariant name or family name
    std::optional<ParametricFamily> family;
    std::optional<ParameterPoint> at;  // unset for generic and fixed comparisons
    size_t source_dim = 0;
    size_t target_dim = 0;
};

struct ObstructionVerdict {
    enum class Outcome { Excluded, Inconclusive };

    std::string source, target;
    Outcome outcome = Outcome::Inconclusive;
    std::optional<Witness> witness;   // first in catalog order
    std::vector<Witness> all;         // every witness found
    std::vector<std::string> warnings;
};

// Can `source` degenerate to `target`? Any invariant whose dimension drops
// from source to target rules it out. Catalog order: families T, D_t11,
// D_t10 (generic, then the source's special points, then the target's),
// then the fixed invariants.
ObstructionVerdict obstruct(const Algebra& source, const Algebra& target);

enum class Hypothesis { QcEqC, QderSplits, Perfect, Centerless };

std::string_view hypothesis_name(Hypothesis which);
Hypothesis parse_hypothesis(std::string_view text);

struct HypothesisReport {
    Hypothesis which;
    bool holds = false;
    std::string detail;
};

HypothesisReport hypothesis_check(const Algebra& a, Hypothesis which);

}  // namespace omegader
