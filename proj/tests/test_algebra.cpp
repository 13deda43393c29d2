#include <random>

#include "doctest.h"
#include "omegader/algebra.hpp"
#include "omegader/document.hpp"
#include "omegader/error.hpp"
#include "oracle.hpp"

using namespace omegader;

namespace {

std::vector<Rational> unit(size_t n, size_t i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = Rational(1);
    return e;
}

std::vector<Rational> scaled(size_t n, size_t i, const Rational& c) {
    auto e = unit(n, i);
    e[i] = c;
    return e;
}

// Library constants against an independently typed table.
bool same_constants(const Algebra& a, const oracle::Structure& s) {
    if (a.dim() != s.n) return false;
    for (size_t k = 0; k < s.c.size(); ++k) {
        if (a.constants()[k].raw() != s.c[k]) return false;
    }
    return true;
}

oracle::Structure to_oracle(const Algebra& a) {
    oracle::Structure s;
    s.n = a.dim();
    for (const auto& x : a.constants()) s.c.push_back(x.raw());
    return s;
}

std::vector<Algebra> corpus_sample() {
    return {corpus("g_G"),         corpus("g_I", {{"alpha", Rational(1)}}), corpus("g_I", {{"alpha", Rational(1, 10)}}),
            corpus("g_I", {{"alpha", Rational(1, 3)}}), corpus("sl2"), corpus("heisenberg3"), corpus("abelian(3)")};
}

std::vector<Rational> random_vector(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<Rational> v;
    for (size_t i = 0; i < n; ++i) v.emplace_back(c(rng), 1 + std::abs(c(rng)));
    return v;
}

}  // namespace

TEST_CASE("loading the g_I family") {
    const auto one = corpus("g_I", {{"alpha", Rational(1)}});
    CHECK(one.c(2, 3, 6) == Rational(1));  // [e3,e4] = alpha e7
    CHECK(one.c(1, 4, 6) == Rational(0));  // [e2,e5] = (1-alpha) e7
    CHECK(one.c(3, 2, 6) == Rational(-1));

    const auto tenth = corpus("g_I", {{"alpha", Rational(1, 10)}});
    CHECK(tenth.c(1, 4, 6) == Rational(9, 10));

    const auto zero = corpus("g_I", {{"alpha", Rational(0)}});
    CHECK(zero.constants() == corpus("g_G").constants());
    CHECK(same_constants(corpus("g_G"), oracle::g_g()));

    CHECK_THROWS_AS(corpus("g_I"), DocumentError);
}

TEST_CASE("an empty bracket list gives the abelian algebra") {
    AlgebraDocument doc;
    doc.name = "flat";
    doc.dim = 3;
    const auto a = load_algebra(doc, {});
    CHECK(a.dim() == 3);
    for (const auto& x : a.constants()) CHECK(x.is_zero());
    CHECK(a.constants() == corpus("abelian(3)").constants());
}

TEST_CASE("load_algebra errors name the field") {
    AlgebraDocument doc;
    doc.name = "bad";
    doc.dim = 2;
    doc.brackets.push_back({1, 3, {{1, Poly(1)}}});
    try {
        load_algebra(doc, {});
        FAIL("expected a document error");
    } catch (const DocumentError& e) {
        CHECK(e.field() == "brackets[0].right");
    }

    doc.brackets = {{1, 2, {{5, Poly(1)}}}};
    try {
        load_algebra(doc, {});
        FAIL("expected a document error");
    } catch (const DocumentError& e) {
        CHECK(e.field() == "brackets[0].out.5");
    }

    doc.brackets = {{1, 2, {{1, Poly::monomial(Rational(1), 1)}}}};
    doc.parameters = {"a"};
    try {
        load_algebra(doc, {});
        FAIL("expected a document error");
    } catch (const DocumentError& e) {
        CHECK(e.field() == "parameters");
    }
    CHECK(load_algebra(doc, {{"a", Rational(3)}}).c(0, 1, 0) == Rational(3));

    // a bracket listed in both orders that contradicts the declared law
    doc.parameters.clear();
    doc.brackets = {{1, 2, {{1, Poly(1)}}}, {2, 1, {{1, Poly(1)}}}};
    CHECK_THROWS_AS(load_algebra(doc, {}), PreconditionError);
}

TEST_CASE("parse_document reports the offending field") {
    auto field_of = [](const std::string& text) {
        try {
            parse_document(text);
        } catch (const DocumentError& e) {
            return e.field();
        }
        return std::string("<none>");
    };
    CHECK(field_of(R"({"name":"x","law":"anti-commutative","brackets":[]})") == "dim");
    CHECK(field_of(R"({"name":"x","dim":0,"brackets":[]})") == "dim");
    CHECK(field_of(R"({"name":"x","dim":2,"brackets":[{"left":1,"right":2,"out":{"1":0.5}}]})") ==
          "brackets[0].out.1");
    CHECK(field_of(R"({"name":"x","dim":2,"brackets":[{"left":1,"right":2,"out":{"1":"2*"}}]})") ==
          "brackets[0].out.1");
    CHECK(field_of(R"({"name":"x","dim":2,"brackets":{}})") == "brackets");
    CHECK_THROWS_AS(parse_document("{not json"), DocumentError);
    CHECK_THROWS_AS(read_document_file("/nonexistent/algebra.json"), DocumentError);
}

TEST_CASE("coefficient expressions") {
    const std::optional<std::string> alpha("alpha");
    const Poly a = Poly::monomial(Rational(1), 1);
    CHECK(parse_coefficient("1-alpha", alpha) == Poly(1) - a);
    CHECK(parse_coefficient("2*alpha^2 + (-5*alpha+1)", alpha) == Poly(2) * a * a - Poly(5) * a + Poly(1));
    CHECK(parse_coefficient("3/4", std::nullopt) == Poly(Rational(3, 4)));
    CHECK(parse_coefficient("-(1/2)*alpha", alpha) == Rational(-1, 2) * a);
    CHECK_THROWS_AS(parse_coefficient("alpha", std::nullopt), DocumentError);
    CHECK_THROWS_AS(parse_coefficient("1/0", std::nullopt), DivisionByZero);
    CHECK_THROWS_AS(parse_coefficient("(1", std::nullopt), DocumentError);
}

TEST_CASE("serialize and reload keeps every constant") {
    for (const std::string name : {"g_I", "g_G", "sl2", "heisenberg3", "abelian(4)"}) {
        const auto doc = corpus_document(name);
        const auto again = parse_document(serialize_document(doc));
        CHECK(serialize_document(again) == serialize_document(doc));
        for (const Rational alpha : {Rational(0), Rational(1), Rational(-7, 3)}) {
            const Bindings b = doc.parameters.empty() ? Bindings{} : Bindings{{doc.parameters.front(), alpha}};
            CHECK(load_algebra(again, b) == load_algebra(doc, b));
        }
    }
    // a concrete algebra after a basis change, through its bracket list
    std::mt19937_64 rng(3);
    const auto changed = change_basis(corpus("sl2"), random_basis_change(rng, 3));
    const auto doc = parse_document(serialize_document(document_from_algebra(changed)));
    CHECK(load_algebra(doc, {}).constants() == changed.constants());
}

TEST_CASE("validate") {
    for (const auto& a : corpus_sample()) {
        CHECK(validate(a, Check::AntiCommutative).passed);
        CHECK(validate(a, Check::Jacobi).passed);
    }

    std::vector<Rational> c(8, Rational(0));
    c[(0 * 2 + 1) * 2 + 0] = Rational(1);  // mu(e1,e2) = e1
    c[(1 * 2 + 0) * 2 + 0] = Rational(1);  // mu(e2,e1) = e1
    const Algebra bad("bad", 2, Law::None, c);
    const auto r = validate(bad, Check::AntiCommutative);
    CHECK_FALSE(r.passed);
    REQUIRE(r.first.has_value());
    CHECK(r.first->at == std::array<size_t, 3>{1, 2, 1});
    CHECK(validate(bad, Check::Commutative).passed);

    // anti-commutative but not Lie
    AlgebraDocument doc;
    doc.name = "nonlie";
    doc.dim = 3;
    doc.brackets = {{1, 2, {{3, Poly(1)}}}, {1, 3, {{1, Poly(1)}}}};
    const auto nonlie = load_algebra(doc, {});
    CHECK(validate(nonlie, Check::AntiCommutative).passed);
    CHECK_FALSE(validate(nonlie, Check::Jacobi).passed);
}

TEST_CASE("bracket") {
    const auto gg = corpus("g_G");
    CHECK(bracket(gg, unit(7, 0), unit(7, 1)) == unit(7, 2));
    const auto tenth = corpus("g_I", {{"alpha", Rational(1, 10)}});
    CHECK(bracket(tenth, unit(7, 2), unit(7, 3)) == scaled(7, 6, Rational(1, 10)));
    const auto sl2 = corpus("sl2");
    CHECK(bracket(sl2, unit(3, 1), unit(3, 2)) == unit(3, 0));
    CHECK(bracket(sl2, unit(3, 0), unit(3, 2)) == scaled(3, 2, Rational(-2)));
    CHECK_THROWS_AS(bracket(sl2, unit(3, 0), unit(2, 0)), PreconditionError);

    std::mt19937_64 rng(17);
    for (const auto& a : corpus_sample()) {
        for (int i = 0; i < 50; ++i) {
            const auto x = random_vector(rng, a.dim()), y = random_vector(rng, a.dim());
            auto neg = bracket(a, y, x);
            for (auto& v : neg) v = -v;
            CHECK(bracket(a, x, y) == neg);
            for (const auto& v : bracket(a, x, x)) CHECK(v.is_zero());
        }
    }
}

TEST_CASE("change_basis") {
    const auto gg = corpus("g_G");
    CHECK(change_basis(gg, BasisChange::identity(7)) == gg);

    // g = diag(2,1,...,1): g mu(g^-1 e1, g^-1 e2) = g (1/2) e3 = (1/2) e3
    auto d = Matrix<Rational>::identity(7);
    d(0, 0) = Rational(2);
    const auto scaled_g = change_basis(gg, BasisChange(d));
    CHECK(scaled_g.c(0, 1, 2) == Rational(1, 2));
    CHECK(scaled_g.c(0, 5, 6) == Rational(1, 2));
    CHECK(scaled_g.c(1, 2, 4) == Rational(1));

    std::mt19937_64 rng(8);
    for (int i = 0; i < 5; ++i) {
        const auto g = random_basis_change(rng, 7), h = random_basis_change(rng, 7);
        CHECK(change_basis(change_basis(gg, g), g.inverse()) == gg);
        CHECK(change_basis(change_basis(gg, h), g) == change_basis(gg, g * h));
    }

    auto singular = Matrix<Rational>::identity(3);
    singular(2, 2) = Rational(0);
    CHECK_THROWS_AS(BasisChange{singular}, PreconditionError);
}

TEST_CASE("center and derived span against the oracle") {
    CHECK(center(corpus("abelian(3)")).dimension == 3);
    const auto zg = center(corpus("g_G"));
    CHECK(zg.dimension == 1);
    CHECK(zg.basis.front() == unit(7, 6));
    CHECK(center(corpus("sl2")).dimension == 0);

    CHECK(derived_span(corpus("abelian(3)")).dimension == 0);
    CHECK_FALSE(derived_span(corpus("abelian(3)")).perfect);
    CHECK(derived_span(corpus("sl2")).dimension == 3);
    CHECK(derived_span(corpus("sl2")).perfect);
    CHECK(derived_span(corpus("g_G")).dimension == 5);
    CHECK_FALSE(derived_span(corpus("g_G")).perfect);

    for (const auto& a : corpus_sample()) {
        const auto s = to_oracle(a);
        CHECK(center(a).dimension == oracle::center_dimension(s));
        CHECK(derived_span(a).dimension == oracle::derived_dimension(s));
    }
    CHECK(oracle::center_dimension(oracle::g_g()) == 1);
    CHECK(oracle::derived_dimension(oracle::sl2()) == 3);
    CHECK(oracle::derived_dimension(oracle::g_g()) == 5);
}

TEST_CASE("center and derived span survive basis changes") {
    std::mt19937_64 rng(20);
    for (const auto& a : corpus_sample()) {
        const auto z = center(a).dimension;
        const auto d = derived_span(a).dimension;
        for (int i = 0; i < 20; ++i) {
            const auto b = change_basis(a, random_basis_change(rng, a.dim()));
            CHECK(center(b).dimension == z);
            CHECK(derived_span(b).dimension == d);
            CHECK(validate(b, Check::AntiCommutative).passed);
            CHECK(validate(b, Check::Jacobi).passed);
        }
    }
}

TEST_CASE("corpus contents") {
    const auto gg = corpus("g_G");
    size_t nonzero = 0;
    for (size_t i = 0; i < 7; ++i) {
        for (size_t j = i + 1; j < 7; ++j) {
            bool any = false;
            for (size_t k = 0; k < 7; ++k) any = any || !gg.c(i, j, k).is_zero();
            nonzero += any ? 1 : 0;
        }
    }
    CHECK(nonzero == 8);

    const auto h = corpus("heisenberg3");
    CHECK(same_constants(h, oracle::heisenberg3()));
    CHECK(same_constants(corpus("sl2"), oracle::sl2()));
    CHECK(corpus("abelian(5)").dim() == 5);
    CHECK_THROWS_AS(corpus("nope"), DocumentError);
    CHECK_THROWS_AS(corpus("abelian(0)"), DocumentError);
}
