#include "omegader/document.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "omegader/error.hpp"

namespace omegader {

namespace {

using ordered_json = nlohmann::ordered_json;

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const std::optional<std::string>& parameter)
        : text_(text), parameter_(parameter) {}

    Poly parse() {
        Poly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_, 1)) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw DocumentError("", "bad coefficient expression '" + std::string(text_) + "': " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    // Accepts an ASCII operator, treating U+2212 as '-'.
    bool accept(char op) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == op) {
            ++pos_;
            return true;
        }
        if (op == '-' && text_.substr(pos_).starts_with("\xE2\x88\x92")) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (!accept('^')) return base;
        skip_space();
        const std::string digits = read_digits();
        if (digits.empty()) fail("exponent must be a non-negative integer");
        const unsigned long e = std::stoul(digits);
        if (e > 64) fail("exponent too large");
        Poly out(1);
        for (unsigned long k = 0; k < e; ++k) out = out * base;
        return out;
    }

    std::string read_digits() {
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end");
        if (accept('(')) {
            Poly inner = expr();
            if (!accept(')')) fail("missing ')'");
            return inner;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::string literal = read_digits();
            // A '/' directly followed by digits belongs to a rational literal.
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) != 0) {
                ++pos_;
                literal += "/" + read_digits();
            }
            return Poly(Rational::parse(literal));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            const size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string ident(text_.substr(start, pos_ - start));
            if (!parameter_ || ident != *parameter_) fail("unknown symbol '" + ident + "'");
            return Poly::monomial(Rational(1), 1);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::optional<std::string>& parameter_;
    size_t pos_ = 0;
};

std::string bracket_field(size_t index, const std::string& leaf) {
    return "brackets[" + std::to_string(index) + "]" + (leaf.empty() ? "" : "." + leaf);
}

template <class F>
auto with_field(const std::string& field, F&& f) {
    try {
        return f();
    } catch (const DocumentError& e) {
        if (!e.field().empty()) throw;
        throw DocumentError(field, e.what());
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(field, e.what());
    }
}

class LawViolation : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace

Poly parse_coefficient(std::string_view text, const std::optional<std::string>& parameter) {
    return ExpressionParser(text, parameter).parse();
}

Algebra load_algebra(const AlgebraDocument& doc, const Bindings& bindings) {
    const size_t n = doc.dim;
    if (n == 0) throw DocumentError("dim", "must be a positive integer");
    if (doc.parameters.size() > 1) throw DocumentError("parameters", "at most one formal parameter is supported");
    Rational value(0);
    if (!doc.parameters.empty()) {
        const auto it = bindings.find(doc.parameters.front());
        if (it == bindings.end()) {
            throw DocumentError("parameters", "unbound parameter '" + doc.parameters.front() + "'");
        }
        value = it->second;
    }

    std::vector<Rational> constants(n * n * n, Rational(0));
    std::set<std::pair<size_t, size_t>> listed;
    for (size_t b = 0; b < doc.brackets.size(); ++b) {
        const auto& entry = doc.brackets[b];
        if (entry.left < 1 || entry.left > n) throw DocumentError(bracket_field(b, "left"), "index out of range");
        if (entry.right < 1 || entry.right > n) throw DocumentError(bracket_field(b, "right"), "index out of range");
        if (!listed.emplace(entry.left, entry.right).second) {
            throw DocumentError(bracket_field(b, ""), "duplicate bracket [e" + std::to_string(entry.left) + ",e" +
                                                          std::to_string(entry.right) + "]");
        }
        for (const auto& [k, coeff] : entry.out) {
            if (k < 1 || k > n) throw DocumentError(bracket_field(b, "out." + std::to_string(k)), "index out of range");
            if (coeff.degree() > 0 && doc.parameters.empty()) {
                throw DocumentError(bracket_field(b, "out." + std::to_string(k)), "uses an undeclared parameter");
            }
            constants[((entry.left - 1) * n + entry.right - 1) * n + k - 1] = coeff.eval(value);
        }
    }
    if (doc.law != Law::None) {
        const bool anti = doc.law == Law::AntiCommutative;
        for (const auto& [i, j] : listed) {
            if (listed.contains({j, i})) continue;
            for (size_t k = 0; k < n; ++k) {
                const Rational& v = constants[((i - 1) * n + j - 1) * n + k];
                constants[((j - 1) * n + i - 1) * n + k] = anti ? -v : v;
            }
        }
    }
    Algebra a(doc.name, n, doc.law, std::move(constants));
    if (doc.law != Law::None) {
        const auto report = validate(a, doc.law == Law::AntiCommutative ? Check::AntiCommutative : Check::Commutative);
        if (!report.passed) throw LawViolation("law violation after synthesis: " + report.first->detail);
    }
    return a;
}

AlgebraDocument parse_document(std::string_view json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError("", std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DocumentError("", "document must be a JSON object");

    AlgebraDocument doc;
    doc.name = with_field("name", [&] { return j.value("name", std::string()); });
    if (!j.contains("dim")) throw DocumentError("dim", "missing");
    doc.dim = with_field("dim", [&] {
        const auto& d = j.at("dim");
        if (!d.is_number_integer() || d.get<long>() < 1) throw DocumentError("dim", "must be a positive integer");
        return d.get<size_t>();
    });
    doc.law = with_field("law", [&] { return parse_law(j.value("law", std::string("anti-commutative"))); });
    if (j.contains("parameters")) {
        doc.parameters = with_field("parameters", [&] { return j.at("parameters").get<std::vector<std::string>>(); });
    }
    if (doc.parameters.size() > 1) throw DocumentError("parameters", "at most one formal parameter is supported");
    const std::optional<std::string> param =
        doc.parameters.empty() ? std::nullopt : std::optional<std::string>(doc.parameters.front());

    if (j.contains("brackets")) {
        const auto& list = j.at("brackets");
        if (!list.is_array()) throw DocumentError("brackets", "must be a list");
        for (size_t b = 0; b < list.size(); ++b) {
            const auto& rec = list[b];
            if (!rec.is_object()) throw DocumentError(bracket_field(b, ""), "must be an object");
            BracketEntry entry;
            entry.left = with_field(bracket_field(b, "left"), [&] { return rec.at("left").get<size_t>(); });
            entry.right = with_field(bracket_field(b, "right"), [&] { return rec.at("right").get<size_t>(); });
            if (!rec.contains("out") || !rec.at("out").is_object()) {
                throw DocumentError(bracket_field(b, "out"), "must be an object");
            }
            for (const auto& [key, value] : rec.at("out").items()) {
                const std::string field = bracket_field(b, "out." + key);
                const size_t k = with_field(field, [&] {
                    size_t used = 0;
                    const unsigned long idx = std::stoul(key, &used);
                    if (used != key.size()) throw DocumentError(field, "output index must be an integer");
                    return static_cast<size_t>(idx);
                });
                Poly coeff = with_field(field, [&] {
                    if (value.is_number_integer()) return Poly(Rational(value.get<long>()));
                    if (!value.is_string()) throw DocumentError(field, "coefficient must be a string");
                    return parse_coefficient(value.get<std::string>(), param);
                });
                entry.out[k] = std::move(coeff);
            }
            doc.brackets.push_back(std::move(entry));
        }
    }
    return doc;
}

std::string serialize_document(const AlgebraDocument& doc) {
    const std::string var = doc.parameters.empty() ? "t" : doc.parameters.front();
    ordered_json j;
    j["name"] = doc.name;
    j["dim"] = doc.dim;
    j["law"] = std::string(law_name(doc.law));
    j["parameters"] = doc.parameters;
    ordered_json list = ordered_json::array();
    for (const auto& entry : doc.brackets) {
        ordered_json rec;
        rec["left"] = entry.left;
        rec["right"] = entry.right;
        ordered_json out = ordered_json::object();
        for (const auto& [k, coeff] : entry.out) out[std::to_string(k)] = coeff.str(var);
        rec["out"] = std::move(out);
        list.push_back(std::move(rec));
    }
    j["brackets"] = std::move(list);
    return j.dump(2) + "\n";
}

AlgebraDocument read_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

AlgebraDocument document_from_algebra(const Algebra& a) {
    AlgebraDocument doc;
    doc.name = a.name();
    doc.dim = a.dim();
    doc.law = a.law();
    const size_t n = a.dim();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (a.law() == Law::AntiCommutative && j <= i) continue;
            if (a.law() == Law::Commutative && j < i) continue;
            BracketEntry entry{i + 1, j + 1, {}};
            for (size_t k = 0; k < n; ++k) {
                if (!a.c(i, j, k).is_zero()) entry.out[k + 1] = Poly(a.c(i, j, k));
            }
            if (!entry.out.empty()) doc.brackets.push_back(std::move(entry));
        }
    }
    return doc;
}

namespace {

AlgebraDocument lie_document(std::string name, size_t dim, std::vector<std::string> params,
                             const std::vector<std::tuple<size_t, size_t, size_t, std::string>>& table) {
    AlgebraDocument doc;
    doc.name = std::move(name);
    doc.dim = dim;
    doc.law = Law::AntiCommutative;
    doc.parameters = std::move(params);
    const std::optional<std::string> param =
        doc.parameters.empty() ? std::nullopt : std::optional<std::string>(doc.parameters.front());
    for (const auto& [i, j, k, expr] : table) {
        doc.brackets.push_back(BracketEntry{i, j, {{k, parse_coefficient(expr, param)}}});
    }
    return doc;
}

std::optional<size_t> abelian_dim(std::string_view name) {
    std::string_view rest;
    if (name.starts_with("abelian(") && name.ends_with(")")) {
        rest = name.substr(8, name.size() - 9);
    } else if (name.starts_with("abelian")) {
        rest = name.substr(7);
    } else {
        return std::nullopt;
    }
    if (rest.empty() || rest.size() > 3) return std::nullopt;
    for (char c : rest) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return std::nullopt;
    }
    const size_t n = std::stoul(std::string(rest));
    if (n == 0) return std::nullopt;
    return n;
}

}  // namespace

std::vector<std::string> corpus_names() { return {"g_I", "g_G", "sl2", "heisenberg3", "abelian(n)"}; }

AlgebraDocument corpus_document(std::string_view name) {
    if (name == "g_I") {
        return lie_document("g_I", 7, {"alpha"},
                            {{1, 2, 3, "1"},
                             {1, 3, 4, "1"},
                             {1, 4, 5, "1"},
                             {1, 5, 6, "1"},
                             {1, 6, 7, "1"},
                             {2, 3, 5, "1"},
                             {2, 4, 6, "1"},
                             {2, 5, 7, "1-alpha"},
                             {3, 4, 7, "alpha"}});
    }
    if (name == "g_G") {
        return lie_document("g_G", 7, {},
                            {{1, 2, 3, "1"},
                             {1, 3, 4, "1"},
                             {1, 4, 5, "1"},
                             {1, 5, 6, "1"},
                             {1, 6, 7, "1"},
                             {2, 3, 5, "1"},
                             {2, 4, 6, "1"},
                             {2, 5, 7, "1"}});
    }
    if (name == "sl2") {
        // Basis (h, e, f).
        return lie_document("sl2", 3, {}, {{1, 2, 2, "2"}, {1, 3, 3, "-2"}, {2, 3, 1, "1"}});
    }
    if (name == "heisenberg3") return lie_document("heisenberg3", 3, {}, {{1, 2, 3, "1"}});
    if (const auto n = abelian_dim(name)) {
        AlgebraDocument doc;
        doc.name = "abelian(" + std::to_string(*n) + ")";
        doc.dim = *n;
        return doc;
    }
    throw DocumentError("", "unknown corpus algebra '" + std::string(name) + "'");
}

Algebra corpus(std::string_view name, const Bindings& bindings) {
    const auto doc = corpus_document(name);
    Algebra a = load_algebra(doc, bindings);
    if (!doc.parameters.empty()) {
        const auto& value = bindings.at(doc.parameters.front());
        return a.renamed(doc.name + "(" + value.str() + ")");
    }
    return a;
}

}  // namespace omegader
