#include "omegader/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "omegader/error.hpp"
#include "omegader/spaces.hpp"

namespace omegader::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::string_view kArrow = "→";

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!text.empty() && text.back() == ',') out.emplace_back();
    return out;
}

Rational parse_value(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::pair<std::string, Rational> parse_binding(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=p/q, got '" + text + "'");
    return {text.substr(0, eq), parse_value(text.substr(eq + 1), "--param " + text.substr(0, eq))};
}

OmegaSpec parse_omega(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 6) throw UsageError("--omega expects six comma-separated rationals");
    OmegaSpec out;
    for (size_t i = 0; i < 6; ++i) out.entries[i] = parse_value(parts[i], "--omega");
    return out;
}

Poly parse_modulus(const std::string& text) {
    std::vector<Rational> coeffs;
    for (const auto& part : split_commas(text)) coeffs.push_back(parse_value(part, "--at-modulus"));
    Poly p(coeffs);
    if (p.degree() < 1) throw UsageError("--at-modulus needs a polynomial of degree at least 1");
    return p;
}

Algebra load_input(const std::string& input, const Bindings& params) {
    if (input.starts_with("corpus:")) return corpus(input.substr(7), params);
    const auto doc = read_document_file(input);
    Algebra a = load_algebra(doc, params);
    if (!doc.parameters.empty()) return a.renamed(doc.name + "(" + params.at(doc.parameters.front()).str() + ")");
    return a;
}

ordered_json omega_json(const OmegaSpec& omega) {
    auto rows = ordered_json::array();
    for (size_t r = 0; r < 2; ++r) rows.push_back({omega(r, 0).str(), omega(r, 1).str(), omega(r, 2).str()});
    return rows;
}

std::string family_label(ParametricFamily f) {
    switch (f) {
        case ParametricFamily::T:
            return "T(t)";
        case ParametricFamily::D_t11:
            return "D(1-2t,1,1)";
        case ParametricFamily::D_t10:
            return "D(t,1,0)";
    }
    return "";
}

// Reads a point back from an object carrying `<prefix>at` or `<prefix>modulus`.
std::string point_text(const ordered_json& j, const std::string& prefix = "") {
    if (j.contains(prefix + "at")) return "t=" + j.at(prefix + "at").get<std::string>();
    if (j.contains(prefix + "modulus")) {
        std::vector<Rational> c;
        for (const auto& x : j.at(prefix + "modulus")) c.push_back(Rational::parse(x.get<std::string>()));
        return "root of " + Poly(c).str("t");
    }
    return "generic";
}

// D_t11 points are shown as t in D(1-2t,1,1), with the rational alpha alongside.
std::string family_point_text(const ordered_json& w) {
    if (w.value("family", "") == "D_t11" && (w.contains("reparam_at") || w.contains("reparam_modulus"))) {
        std::string out = point_text(w, "reparam_");
        if (w.contains("at")) out += " (D(" + w.at("at").get<std::string>() + ",1,1))";
        return out;
    }
    return point_text(w);
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    if (w.family) {
        j["family"] = std::string(family_name(*w.family));
        if (w.at) {
            j.update(point_json(*w.at));
            if (*w.family == ParametricFamily::D_t11) j.update(point_json(d11_reparam(*w.at), "reparam_"));
        } else {
            j["at"] = "generic";
        }
    } else {
        j["invariant"] = w.invariant;
    }
    j["source_dim"] = w.source_dim;
    j["target_dim"] = w.target_dim;
    return j;
}

ordered_json check_json(const ValidationReport& r) {
    static const std::map<Check, std::string> names{
        {Check::AntiCommutative, "anti-commutative"}, {Check::Commutative, "commutative"}, {Check::Jacobi, "jacobi"}};
    ordered_json j;
    j["check"] = names.at(r.check);
    j["passed"] = r.passed;
    if (r.first) {
        j["violation"] = {{"at", {r.first->at[0], r.first->at[1], r.first->at[2]}}, {"detail", r.first->detail}};
    } else {
        j["violation"] = nullptr;
    }
    return j;
}

// Aligned " | "-separated rows.
class Table {
public:
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<size_t> width;
        for (const auto& row : rows_) {
            if (width.size() < row.size()) width.resize(row.size(), 0);
            for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
        }
        for (const auto& row : rows_) {
            std::string line;
            for (size_t c = 0; c < row.size(); ++c) {
                if (c > 0) line += " | ";
                line += row[c];
                if (c + 1 < row.size()) line.append(width[c] - display_width(row[c]), ' ');
            }
            os << line << '\n';
        }
    }

private:
    static size_t display_width(const std::string& s) {
        return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
    }

    std::vector<std::vector<std::string>> rows_;
};

std::string special_list(const ordered_json& report) {
    std::string out;
    for (auto sp : report.at("special")) {
        if (!out.empty()) out += ", ";
        sp["family"] = report.at("family");
        out += family_point_text(sp) + " " + std::string(kArrow) + " " + std::to_string(sp.at("dimension").get<size_t>());
    }
    return out.empty() ? "none" : out;
}

void render_family_rows(Table& t, const ordered_json& report) {
    t.add({report.at("label").get<std::string>(), "generic " + std::to_string(report.at("generic").get<size_t>()),
           special_list(report)});
}

void render_text_payload(const Report& r, std::ostream& os) {
    const auto& p = r.payload;
    if (r.command == "profile") {
        os << "profile of " << p.at("algebra").get<std::string>() << " (dim " << p.at("dim").get<size_t>() << ")\n";
        Table fixed;
        for (const auto& [name, value] : p.at("fixed").items()) fixed.add({name, std::to_string(value.get<size_t>())});
        fixed.print(os);
        os << '\n';
        Table fam;
        for (const auto& report : p.at("families")) render_family_rows(fam, report);
        fam.print(os);
        if (p.contains("basis_change_check")) {
            const auto& bc = p.at("basis_change_check");
            os << "\nbasis changes: " << bc.at("trials").get<size_t>() << " (seed " << bc.at("seed").get<std::uint64_t>()
               << "), profiles identical: " << (bc.at("identical").get<bool>() ? "yes" : "no") << '\n';
        }
    } else if (r.command == "sweep") {
        os << "sweep of " << p.at("algebra").get<std::string>() << '\n';
        if (p.contains("dimension")) {
            Table t;
            t.add({family_label(parse_family(p.at("family").get<std::string>())), family_point_text(p),
                   "dimension " + std::to_string(p.at("dimension").get<size_t>())});
            t.print(os);
        } else {
            Table t;
            render_family_rows(t, p.at("report"));
            t.print(os);
        }
    } else if (r.command == "space") {
        os << p.at("spec").get<std::string>() << " of " << p.at("algebra").get<std::string>() << ": dimension "
           << p.at("dimension").get<size_t>() << '\n';
        // each basis vector is `blocks` operators, each n x n row-major
        const auto n = p.at("n").get<size_t>();
        const auto blocks = p.at("blocks").get<size_t>();
        size_t idx = 0;
        for (const auto& element : p.at("basis")) {
            os << "basis[" << ++idx << "]\n";
            for (size_t b = 0; b < blocks; ++b) {
                if (blocks > 1) os << "  block " << b + 1 << '\n';
                Table t;
                for (size_t i = 0; i < n; ++i) {
                    std::vector<std::string> cells{" "};
                    for (size_t j = 0; j < n; ++j) cells.push_back(element.at(b * n * n + i * n + j).get<std::string>());
                    t.add(std::move(cells));
                }
                t.print(os);
            }
        }
    } else if (r.command == "classify") {
        if (p.contains("mismatches")) {
            os << "classification check on " << p.at("algebra").get<std::string>() << ": " << p.at("trials").get<size_t>()
               << " random relations (seed " << p.at("seed").get<std::uint64_t>() << "), mismatches "
               << p.at("mismatches").get<size_t>() << '\n';
            Table t;
            for (const auto& [label, count] : p.at("counts").items()) t.add({label, std::to_string(count.get<size_t>())});
            t.print(os);
        } else {
            Table t;
            t.add({"class", p.at("class").get<std::string>()});
            if (p.contains("algebra")) {
                t.add({"algebra", p.at("algebra").get<std::string>()});
                t.add({"dimension", std::to_string(p.at("dimension").get<size_t>())});
                t.add({"class dimension", std::to_string(p.at("class_dimension").get<size_t>())});
            }
            t.print(os);
        }
    } else if (r.command == "obstruct") {
        os << p.at("source").get<std::string>() << " " << kArrow << " " << p.at("target").get<std::string>() << ": "
           << p.at("outcome").get<std::string>() << '\n';
        if (!p.at("witnesses").empty()) {
            Table t;
            t.add({"witness", "point", "source", "target"});
            for (const auto& w : p.at("witnesses")) {
                const bool fam = w.contains("family");
                t.add({fam ? w.at("family").get<std::string>() : w.at("invariant").get<std::string>(),
                       fam ? family_point_text(w) : "", std::to_string(w.at("source_dim").get<size_t>()),
                       std::to_string(w.at("target_dim").get<size_t>())});
            }
            t.print(os);
        }
    } else if (r.command == "validate") {
        os << p.at("algebra").get<std::string>() << " (" << p.at("law").get<std::string>() << ", dim "
           << p.at("dim").get<size_t>() << ")\n";
        Table t;
        for (const auto& c : p.at("checks")) {
            std::string detail;
            if (!c.at("violation").is_null()) {
                const auto& at = c.at("violation").at("at");
                detail = "at (" + std::to_string(at[0].get<size_t>()) + "," + std::to_string(at[1].get<size_t>()) + "," +
                         std::to_string(at[2].get<size_t>()) + "): " + c.at("violation").at("detail").get<std::string>();
            }
            t.add({c.at("check").get<std::string>(), c.at("passed").get<bool>() ? "ok" : "FAILED", detail});
        }
        t.print(os);
    } else if (r.command == "corpus") {
        if (p.contains("names")) {
            for (const auto& n : p.at("names")) os << n.get<std::string>() << '\n';
        } else {
            os << p.at("document").dump(2) << '\n';
        }
    }
}

struct RawOptions {
    std::vector<std::string> inputs, params;
    std::string space, omega, family, at, at_modulus, format = "text";
    std::optional<std::uint64_t> seed;
    size_t trials = 0;
    bool jacobi = false;
};

CLI::Option* add_params(CLI::App* sc, RawOptions& raw) {
    return sc->add_option("--param", raw.params, "bind a document parameter, name=p/q (repeatable)")
        ->allow_extra_args(false);
}

void add_format(CLI::App* sc, RawOptions& raw) {
    sc->add_option("--format", raw.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

Report make_report(const Invocation& inv, ordered_json payload, std::vector<std::string> warnings = {}) {
    Report r;
    r.command = std::string(command_name(inv.command));
    r.argv = inv.argv;
    r.payload = std::move(payload);
    r.warnings = std::move(warnings);
    return r;
}

RunResult run_classify(const Invocation& inv) {
    if (inv.omega) {
        const auto cls = canonical_class(*inv.omega);
        ordered_json p;
        p["omega"] = omega_json(*inv.omega);
        p["tilde"] = omega_json(transform_omega(*inv.omega, TransformDirection::ToTilde));
        p["label"] = std::string(label_name(cls.label));
        p["parameter"] = cls.parameter ? ordered_json(cls.parameter->str()) : ordered_json(nullptr);
        p["class"] = cls.str();
        int code = 0;
        if (!inv.inputs.empty()) {
            const auto a = load_input(inv.inputs.front(), inv.params);
            const size_t direct = omega_dimension(a, *inv.omega);
            const size_t via_class = class_dimension(a, cls);
            p["algebra"] = a.name();
            p["dimension"] = direct;
            p["class_dimension"] = via_class;
            if (direct != via_class) code = 1;
        }
        return {make_report(inv, std::move(p)), code, code ? "dimension differs from its canonical class" : ""};
    }
    const auto a = load_input(inv.inputs.front(), inv.params);
    const size_t trials = inv.trials ? inv.trials : 500;
    std::mt19937_64 rng(*inv.seed);
    std::map<std::string, size_t> counts;
    std::map<std::string, size_t> class_dims;
    size_t mismatches = 0;
    for (size_t i = 0; i < trials; ++i) {
        const auto omega = random_omega(rng);
        const auto cls = canonical_class(omega);
        const auto key = cls.str();
        auto it = class_dims.find(key);
        if (it == class_dims.end()) it = class_dims.emplace(key, class_dimension(a, cls)).first;
        if (omega_dimension(a, omega) != it->second) ++mismatches;
        ++counts[std::string(label_name(cls.label))];
    }
    ordered_json p;
    p["algebra"] = a.name();
    p["seed"] = *inv.seed;
    p["trials"] = trials;
    p["mismatches"] = mismatches;
    p["counts"] = ordered_json::object();
    for (const auto& [label, n] : counts) p["counts"][label] = n;
    return {make_report(inv, std::move(p)), mismatches ? 1 : 0, mismatches ? "classification mismatches found" : ""};
}

RunResult dispatch(const Invocation& inv) {
    switch (inv.command) {
        case Command::Validate: {
            const auto a = load_input(inv.inputs.front(), inv.params);
            ordered_json p;
            p["algebra"] = a.name();
            p["dim"] = a.dim();
            p["law"] = std::string(law_name(a.law()));
            p["checks"] = ordered_json::array();
            bool passed = true;
            std::vector<Check> checks;
            if (a.law() == Law::AntiCommutative) checks.push_back(Check::AntiCommutative);
            if (a.law() == Law::Commutative) checks.push_back(Check::Commutative);
            if (inv.jacobi) checks.push_back(Check::Jacobi);
            for (auto c : checks) {
                const auto rep = validate(a, c);
                passed = passed && rep.passed;
                p["checks"].push_back(check_json(rep));
            }
            p["passed"] = passed;
            return {make_report(inv, std::move(p)), passed ? 0 : 1, passed ? "" : "validation failed"};
        }
        case Command::Profile: {
            const auto a = load_input(inv.inputs.front(), inv.params);
            const auto prof = profile(a);
            auto p = profile_json(prof, a.dim());
            int code = 0;
            if (inv.seed) {
                std::mt19937_64 rng(*inv.seed);
                const size_t trials = inv.trials ? inv.trials : 10;
                bool identical = true;
                for (size_t i = 0; i < trials && identical; ++i) {
                    identical = profile(change_basis(a, random_basis_change(rng, a.dim()))).same_invariants(prof);
                }
                p["basis_change_check"] = {{"seed", *inv.seed}, {"trials", trials}, {"identical", identical}};
                if (!identical) code = 1;
            }
            return {make_report(inv, std::move(p), prof.warnings()), code,
                    code ? "profile changed under a change of basis" : ""};
        }
        case Command::Space: {
            const auto a = load_input(inv.inputs.front(), inv.params);
            const auto solved = named_space(a, *inv.space);
            ordered_json p;
            p["algebra"] = a.name();
            p["spec"] = inv.space->str();
            p["dimension"] = solved.dimension();
            p["n"] = solved.dim;
            p["blocks"] = solved.blocks;
            p["basis"] = ordered_json::array();
            for (const auto& v : solved.basis) {
                auto flat = ordered_json::array();
                for (const auto& x : v) flat.push_back(x.str());
                p["basis"].push_back(std::move(flat));
            }
            return {make_report(inv, std::move(p)), 0, ""};
        }
        case Command::Sweep: {
            const auto a = load_input(inv.inputs.front(), inv.params);
            ordered_json p;
            p["algebra"] = a.name();
            p["family"] = std::string(family_name(*inv.family));
            if (inv.at) {
                p.update(point_json(*inv.at));
                if (*inv.family == ParametricFamily::D_t11) p.update(point_json(d11_reparam(*inv.at), "reparam_"));
                p["dimension"] = evaluate_at(a, *inv.family, *inv.at);
                return {make_report(inv, std::move(p)), 0, ""};
            }
            const auto rep = sweep(a, *inv.family);
            p["report"] = report_json(rep);
            return {make_report(inv, std::move(p), rep.warnings()), 0, ""};
        }
        case Command::Classify:
            return run_classify(inv);
        case Command::Obstruct: {
            const auto s = load_input(inv.inputs[0], inv.params);
            const auto t = load_input(inv.inputs[1], inv.params);
            const auto v = obstruct(s, t);
            return {make_report(inv, verdict_json(v), v.warnings), 0, ""};
        }
        case Command::Corpus: {
            ordered_json p;
            if (inv.inputs.empty()) {
                p["names"] = corpus_names();
            } else {
                std::string name = inv.inputs.front();
                if (name.starts_with("corpus:")) name = name.substr(7);
                p["name"] = name;
                p["document"] = ordered_json::parse(serialize_document(corpus_document(name)));
            }
            return {make_report(inv, std::move(p)), 0, ""};
        }
    }
    return {std::nullopt, 2, "unknown command"};
}

}  // namespace

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Validate:
            return "validate";
        case Command::Profile:
            return "profile";
        case Command::Space:
            return "space";
        case Command::Sweep:
            return "sweep";
        case Command::Classify:
            return "classify";
        case Command::Obstruct:
            return "obstruct";
        case Command::Corpus:
            return "corpus";
    }
    return "";
}

Invocation parse_invocation(const std::vector<std::string>& argv) {
    CLI::App app{"Extended derivation invariants of finite-dimensional algebras", "omegader"};
    app.require_subcommand(1, 1);
    RawOptions raw;

    auto* validate_cmd = app.add_subcommand("validate", "check the product law (and Jacobi with --jacobi)");
    validate_cmd->add_option("input", raw.inputs, "corpus:<name> or document path")->required()->expected(1);
    add_params(validate_cmd, raw);
    validate_cmd->add_flag("--jacobi", raw.jacobi, "also check the Jacobi identity");
    add_format(validate_cmd, raw);

    auto* profile_cmd = app.add_subcommand("profile", "fixed dimensions and parametric families");
    profile_cmd->add_option("input", raw.inputs, "corpus:<name> or document path")->required()->expected(1);
    add_params(profile_cmd, raw);
    profile_cmd->add_option("--seed", raw.seed, "also compare profiles under seeded random basis changes");
    profile_cmd->add_option("--trials", raw.trials, "number of basis changes (default 10)");
    add_format(profile_cmd, raw);

    auto* space_cmd = app.add_subcommand("space", "dimension and basis of one named space");
    space_cmd->add_option("input", raw.inputs, "corpus:<name> or document path")->required()->expected(1);
    add_params(space_cmd, raw);
    space_cmd->add_option("--space", raw.space, "der|qc|c|nder|qder|p|der0|d:a,b,c|t:s")->required();
    add_format(space_cmd, raw);

    auto* sweep_cmd = app.add_subcommand("sweep", "generic and special dimensions of a family");
    sweep_cmd->add_option("input", raw.inputs, "corpus:<name> or document path")->required()->expected(1);
    add_params(sweep_cmd, raw);
    sweep_cmd->add_option("--family", raw.family, "t|d11|d10")->required();
    auto* at = sweep_cmd->add_option("--at", raw.at, "evaluate at a rational point");
    auto* modulus = sweep_cmd->add_option("--at-modulus", raw.at_modulus, "evaluate at the roots of c0,c1,...");
    at->excludes(modulus);
    add_format(sweep_cmd, raw);

    auto* classify_cmd = app.add_subcommand("classify", "canonical class of a pair of relations");
    classify_cmd->add_option("input", raw.inputs, "optional algebra to compare dimensions on")->expected(0, 1);
    add_params(classify_cmd, raw);
    auto* omega = classify_cmd->add_option("--omega", raw.omega, "a1,a2,a3,a4,a5,a6");
    auto* seed = classify_cmd->add_option("--seed", raw.seed, "check seeded random relations on the input");
    omega->excludes(seed);
    classify_cmd->add_option("--trials", raw.trials, "number of random relations (default 500)");
    add_format(classify_cmd, raw);

    auto* obstruct_cmd = app.add_subcommand("obstruct", "look for an invariant ruling out source -> target");
    obstruct_cmd->add_option("inputs", raw.inputs, "source and target")->required()->expected(2);
    add_params(obstruct_cmd, raw);
    add_format(obstruct_cmd, raw);

    auto* corpus_cmd = app.add_subcommand("corpus", "list built-in algebras or print one as a document");
    corpus_cmd->add_option("name", raw.inputs, "corpus name")->expected(0, 1);
    add_format(corpus_cmd, raw);

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        throw HelpRequested{subs.empty() ? app.help() : subs.front()->help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Invocation inv;
    inv.argv = argv;
    const std::string name = app.get_subcommands().front()->get_name();
    for (auto c : {Command::Validate, Command::Profile, Command::Space, Command::Sweep, Command::Classify,
                   Command::Obstruct, Command::Corpus}) {
        if (command_name(c) == name) inv.command = c;
    }
    inv.inputs = raw.inputs;
    for (const auto& b : raw.params) {
        auto [key, value] = parse_binding(b);
        if (!inv.params.emplace(key, value).second) throw UsageError("--param " + key + " given twice");
    }
    if (!raw.space.empty()) inv.space = NamedSpace::parse(raw.space);
    if (!raw.omega.empty()) inv.omega = parse_omega(raw.omega);
    if (!raw.family.empty()) inv.family = parse_family(raw.family);
    if (!raw.at.empty()) inv.at = parse_value(raw.at, "--at");
    if (!raw.at_modulus.empty()) inv.at = parse_modulus(raw.at_modulus);
    inv.format = raw.format == "json" ? Format::Json : Format::Text;
    inv.seed = raw.seed;
    inv.trials = raw.trials;
    inv.jacobi = raw.jacobi;

    if (inv.command == Command::Classify) {
        if (!inv.omega && !inv.seed) throw UsageError("classify needs --omega or --seed");
        if (inv.seed && inv.inputs.empty()) throw UsageError("classify --seed needs an algebra");
    }
    return inv;
}

ordered_json poly_json(const Poly& p) { return p.coeff_strings(); }

ordered_json point_json(const ParameterPoint& p, std::string_view prefix) {
    const std::string pre(prefix);
    ordered_json j;
    if (const auto* r = std::get_if<Rational>(&p)) {
        j[pre + "at"] = r->str();
    } else {
        j[pre + "modulus"] = poly_json(std::get<Poly>(p));
    }
    return j;
}

ordered_json report_json(const ParametricReport& r) {
    ordered_json j;
    j["family"] = std::string(family_name(r.family));
    j["label"] = family_label(r.family);
    j["generic"] = r.generic_dimension;
    j["special"] = ordered_json::array();
    for (const auto& sp : r.special) {
        auto e = point_json(sp.point);
        if (r.family == ParametricFamily::D_t11) e.update(point_json(d11_reparam(sp.point), "reparam_"));
        e["dimension"] = sp.dimension;
        j["special"].push_back(std::move(e));
    }
    j["unresolved"] = ordered_json::array();
    for (const auto& f : r.unresolved) j["unresolved"].push_back(poly_json(f));
    return j;
}

ordered_json profile_json(const InvariantProfile& prof, size_t dim) {
    ordered_json j;
    j["algebra"] = prof.algebra;
    j["dim"] = dim;
    j["fixed"] = ordered_json::object();
    for (size_t i = 0; i < kFixedInvariants.size(); ++i) {
        j["fixed"][std::string(invariant_name(kFixedInvariants[i]))] = prof.fixed[i];
    }
    j["families"] = ordered_json::array();
    for (const auto& r : prof.parametric) j["families"].push_back(report_json(r));
    return j;
}

ordered_json verdict_json(const ObstructionVerdict& v) {
    ordered_json j;
    j["source"] = v.source;
    j["target"] = v.target;
    j["outcome"] = v.outcome == ObstructionVerdict::Outcome::Excluded ? "excluded" : "inconclusive";
    j["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
    j["witnesses"] = ordered_json::array();
    for (const auto& w : v.all) j["witnesses"].push_back(witness_json(w));
    return j;
}

std::string render(const Report& r, Format format) {
    if (format == Format::Json) {
        ordered_json j;
        j["schema"] = r.schema;
        j["command"] = r.command;
        j["argv"] = r.argv;
        j["payload"] = r.payload;
        j["warnings"] = r.warnings;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    render_text_payload(r, os);
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
    return os.str();
}

Report parse_report(std::string_view json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError("", std::string("report is not valid JSON: ") + e.what());
    }
    Report r;
    try {
        r.schema = j.at("schema").get<std::string>();
        r.command = j.at("command").get<std::string>();
        r.argv = j.at("argv").get<std::vector<std::string>>();
        r.payload = j.at("payload");
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError("", std::string("malformed report: ") + e.what());
    }
    if (r.schema != kSchema) throw DocumentError("schema", "unsupported report schema '" + r.schema + "'");
    return r;
}

RunResult run(const Invocation& inv) {
    try {
        return dispatch(inv);
    } catch (const UsageError& e) {
        return {std::nullopt, 2, e.what()};
    } catch (const DocumentError& e) {
        return {std::nullopt, 2, e.what()};
    } catch (const DivisionByZero& e) {
        return {std::nullopt, 2, e.what()};
    } catch (const Error& e) {
        return {std::nullopt, 1, e.what()};
    }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        inv = parse_invocation(argv);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    auto result = run(inv);
    if (result.report) {
        if (inv.format == Format::Json) {
            out << render(*result.report, Format::Json);
        } else {
            std::ostringstream body;
            render_text_payload(*result.report, body);
            out << body.str();
            for (const auto& w : result.report->warnings) err << "warning: " << w << '\n';
        }
    }
    if (!result.error.empty()) err << "error: " << result.error << '\n';
    return result.exit_code;
}

}  // namespace omegader::cli
