#include "properties.hpp"

#include <random>

#include "omegader/document.hpp"
#include "omegader/linalg.hpp"
#include "omegader/spaces.hpp"

namespace props {

using namespace omegader;

namespace {

using Kind = NamedSpace::Kind;

// Records one membership test; keeps the first failure.
void expect(Result& r, bool ok, const std::string& what) {
    ++r.checked;
    if (ok || !r.passed) {
        if (!ok) r.passed = false;
        return;
    }
    r.passed = false;
    r.detail = what;
}

std::vector<Matrix<Rational>> operators(const Algebra& a, const NamedSpace& s) {
    const auto solved = named_space(a, s);
    std::vector<Matrix<Rational>> out;
    for (size_t i = 0; i < solved.dimension(); ++i) out.push_back(solved.block(i, 0));
    return out;
}

const std::vector<Rational>& samples() {
    static const std::vector<Rational> v = {Rational(0),    Rational(1),     Rational(2),   Rational(1, 2),
                                            Rational(-1),   Rational(7, 3),  Rational(-1, 2)};
    return v;
}

Matrix<Rational> conj(const BasisChange& g, const Matrix<Rational>& x) { return g.matrix() * x * g.inverse_matrix(); }

}  // namespace

Result jordan_closure(const std::vector<Algebra>& algebras) {
    Result r{"jordan closure of QC"};
    for (const auto& a : algebras) {
        const auto qc = operators(a, NamedSpace::of(Kind::QC));
        for (size_t i = 0; i < qc.size(); ++i) {
            for (size_t j = i; j < qc.size(); ++j) {
                const auto prod = qc[i] * qc[j] + qc[j] * qc[i];
                expect(r, in_quasicentroid(a, prod),
                       a.name() + ": QC[" + std::to_string(i) + "] o QC[" + std::to_string(j) + "]");
            }
        }
    }
    return r;
}

Result containments(const std::vector<Algebra>& algebras) {
    Result r{"diagram containments"};
    for (const auto& a : algebras) {
        for (const auto& u : samples()) {
            for (const auto& m : operators(a, NamedSpace::d(u, 1, 0))) {
                expect(r, in_quasicentroid(a, m), a.name() + ": D(" + u.str() + ",1,0) not in QC");
                expect(r, is_abc_derivation(a, Rational(2) * u, 1, 1, m),
                       a.name() + ": D(" + u.str() + ",1,0) not in D(" + (Rational(2) * u).str() + ",1,1)");
            }
        }
        for (const auto& d : operators(a, NamedSpace::d(1, -1, 1))) {
            expect(r, in_quasicentroid(a, d), a.name() + ": D(1,-1,1) not in QC");
        }
    }
    return r;
}

Result embedding_codomains(const std::vector<Algebra>& algebras) {
    Result r{"embedding codomains"};
    for (const auto& a : algebras) {
        const std::string at = a.name() + ": ";
        const auto der0 = named_space(a, NamedSpace::of(Kind::Der0));
        const auto p_space = named_space(a, NamedSpace::of(Kind::P));
        const auto dm = operators(a, NamedSpace::d(1, -1, 1));
        for (const auto& s : samples()) {
            const auto d11 = operators(a, NamedSpace::d(Rational(1) - Rational(2) * s, 1, 1));
            for (const auto& d : d11) expect(r, in_t_space(a, s, embed::phi1(d, s)), at + "phi1 outside T(" + s.str() + ")");
            for (const auto& d : dm) expect(r, in_t_space(a, s, embed::phi2(d)), at + "phi2 outside T(" + s.str() + ")");
            for (const auto& u : samples()) {
                const auto m10 = operators(a, NamedSpace::d(u, 1, 0));
                for (const auto& m : m10) {
                    expect(r, in_t_space(a, s, embed::phi3(m, u, s)), at + "phi3 outside T(" + s.str() + ")");
                    expect(r, embed::phi6(embed::phi3(m, u, s)) == embed::phi5(embed::phi4(m, u)),
                           at + "phi6.phi3 != phi5.phi4");
                }
                if (Rational(2) * (s + u) != Rational(1) && !d11.empty() && !m10.empty()) {
                    for (const auto& d : d11) {
                        for (const auto& m : m10) {
                            expect(r, in_t_space(a, s, embed::phi7(d, m, s, u)), at + "phi7 outside T(" + s.str() + ")");
                        }
                    }
                }
            }
        }
        for (const auto& u : samples()) {
            const auto m10 = operators(a, NamedSpace::d(u, 1, 0));
            for (const auto& m : m10) {
                const auto pair = embed::phi4(m, u);
                expect(r, in_p_space(a, pair), at + "phi4 outside P");
            }
            for (const auto& t : samples()) {
                if (t == Rational(2) * u) continue;
                for (const auto& d : operators(a, NamedSpace::d(t, 1, 1))) {
                    for (const auto& m : m10) {
                        const auto pq = embed::phi8(d, m, t, u);
                        expect(r, is_nearly_derivation(a, pq.first, pq.second), at + "phi8 outside NDer");
                    }
                }
            }
        }
        for (size_t i = 0; i < p_space.dimension(); ++i) {
            const auto pq = embed::phi5({p_space.block(i, 0), p_space.block(i, 1)});
            expect(r, is_nearly_derivation(a, pq.first, pq.second), at + "phi5 outside NDer");
        }
        for (size_t i = 0; i < der0.dimension(); ++i) {
            const auto pq = embed::phi6(triple_of(der0, i));
            expect(r, is_nearly_derivation(a, pq.first, pq.second), at + "phi6 outside NDer");
        }
    }
    return r;
}

Result equivariance(const std::vector<Algebra>& algebras, std::uint64_t seed) {
    Result r{"equivariance of the derivation map"};
    std::mt19937_64 rng(seed);
    for (const auto& a : algebras) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto g = random_basis_change(rng, a.dim());
            const auto b = change_basis(a, g);
            const auto omega = trial == 0 ? OmegaSpec::zero() : random_omega(rng);
            const auto src = omega_space(a, omega);
            const std::string at = a.name() + " with " + omega.str() + ": ";
            expect(r, omega_dimension(b, omega) == src.dimension(), at + "dimension changed");
            for (size_t i = 0; i < src.dimension(); ++i) {
                const auto t = triple_of(src, i);
                const DerivationTriple moved{conj(g, t.A), conj(g, t.B), conj(g, t.C)};
                expect(r, is_omega_derivation(b, omega, moved), at + "image not in the changed space");
            }
        }
    }
    return r;
}

std::vector<Result> run_all(const std::vector<Algebra>& algebras, std::uint64_t seed) {
    return {jordan_closure(algebras), containments(algebras), embedding_codomains(algebras),
            equivariance(algebras, seed)};
}

std::vector<Algebra> default_algebras() {
    return {corpus("g_G"),
            corpus("g_I", {{"alpha", Rational(1)}}),
            corpus("g_I", {{"alpha", Rational(1, 3)}}),
            corpus("sl2"),
            corpus("heisenberg3"),
            corpus("abelian(3)")};
}

}  // namespace props
