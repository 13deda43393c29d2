#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegader/algebra.hpp"
#include "omegader/poly.hpp"

namespace omegader {

using Bindings = std::map<std::string, Rational>;

struct BracketEntry {
    size_t left = 0;  // 1-based
    size_t right = 0;
    std::map<size_t, Poly> out;  // output index (1-based) -> coefficient
};

// Textual description of an algebra, possibly depending on one formal
// parameter. Under a symmetric law only one ordering of each pair needs
// to be listed; the loader fills in the mirror entries.
struct AlgebraDocument {
    std::string name;
    size_t dim = 0;
    Law law = Law::AntiCommutative;
    std::vector<std::string> parameters;
    std::vector<BracketEntry> brackets;
};

// Parses a coefficient expression: integers, rational literals p/q, the
// parameter name, + - * ^ and parentheses.
Poly parse_coefficient(std::string_view text, const std::optional<std::string>& parameter);

Algebra load_algebra(const AlgebraDocument& doc, const Bindings& bindings);

// JSON text <-> document. Parse errors name the offending field.
AlgebraDocument parse_document(std::string_view json_text);
std::string serialize_document(const AlgebraDocument& doc);

AlgebraDocument read_document_file(const std::string& path);

// Document listing the nonzero brackets of a concrete algebra.
AlgebraDocument document_from_algebra(const Algebra& a);

// Built-in corpus: g_I (parameter alpha), g_G, sl2, heisenberg3, abelian(n).
std::vector<std::string> corpus_names();
AlgebraDocument corpus_document(std::string_view name);
Algebra corpus(std::string_view name, const Bindings& bindings = {});

}  // namespace omegader
