#pragma once

// Structural property checks shared by the standalone property runner and
// the acceptance run. Each check walks every algebra given and reports one
// line.

#include <cstdint>
#include <string>
#include <vector>

#include "omegader/algebra.hpp"

namespace props {

struct Result {
    std::string name;
    bool passed = true;
    size_t checked = 0;  // individual membership tests performed
    std::string detail;  // first failure
};

// R, S in QC -> RS + SR in QC.
Result jordan_closure(const std::vector<omegader::Algebra>& algebras);

// D(u,1,0) and D(1,-1,1) inside QC; D(t,1,0) inside D(2t,1,1).
Result containments(const std::vector<omegader::Algebra>& algebras);

// The embeddings phi1..phi8 send basis elements of their domains into the
// spaces they are meant to land in, and phi6 . phi3 = phi5 . phi4.
Result embedding_codomains(const std::vector<omegader::Algebra>& algebras);

// (A,B,C) -> (gAg^-1, gBg^-1, gCg^-1) maps Der_Omega(a) into
// Der_Omega(g.a), with equal dimensions.
Result equivariance(const std::vector<omegader::Algebra>& algebras, std::uint64_t seed);

std::vector<Result> run_all(const std::vector<omegader::Algebra>& algebras, std::uint64_t seed);

// The algebras the property runs use by default.
std::vector<omegader::Algebra> default_algebras();

}  // namespace props
