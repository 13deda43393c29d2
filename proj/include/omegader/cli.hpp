#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "omegader/document.hpp"
#include "omegader/omega.hpp"
#include "omegader/parametric.hpp"
#include "omegader/profile.hpp"

namespace omegader::cli {

inline constexpr std::string_view kSchema = "omega-der/1";

enum class Command { Validate, Profile, Space, Sweep, Classify, Obstruct, Corpus };
enum class Format { Text, Json };

std::string_view command_name(Command c);

struct Invocation {
    Command command = Command::Profile;
    std::vector<std::string> inputs;  // "corpus:<name>" or a document path
    Bindings params;
    std::optional<NamedSpace> space;
    std::optional<OmegaSpec> omega;
    std::optional<ParametricFamily> family;
    std::optional<ParameterPoint> at;
    Format format = Format::Text;
    std::optional<std::uint64_t> seed;
    size_t trials = 0;    // random cases for --seed runs; 0 picks the command default
    bool jacobi = false;  // validate: also check the Jacobi identity
    std::vector<std::string> argv;
};

// Thrown by parse_invocation for --help; carries the help text.
struct HelpRequested {
    std::string text;
};

// argv without the program name. Throws UsageError on unknown commands or
// flags, missing required options and malformed values.
Invocation parse_invocation(const std::vector<std::string>& argv);

struct Report {
    std::string schema{kSchema};
    std::string command;
    std::vector<std::string> argv;
    nlohmann::ordered_json payload;
    std::vector<std::string> warnings;

    friend bool operator==(const Report&, const Report&) = default;
};

std::string render(const Report& r, Format format);
Report parse_report(std::string_view json_text);

struct RunResult {
    std::optional<Report> report;  // absent when the command failed outright
    int exit_code = 0;
    std::string error;
};

// Exit codes: 0 success (an inconclusive obstruction included), 1 failed
// validation or precondition, 2 parse, IO or document errors.
RunResult run(const Invocation& inv);

// Whole command line: parse, run, print. Returns the process exit code.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// JSON encodings shared with the tests.
nlohmann::ordered_json poly_json(const Poly& p);
nlohmann::ordered_json point_json(const ParameterPoint& p, std::string_view prefix = "");
nlohmann::ordered_json report_json(const ParametricReport& r);
nlohmann::ordered_json profile_json(const InvariantProfile& p, size_t dim);
nlohmann::ordered_json verdict_json(const ObstructionVerdict& v);

}  // namespace omegader::cli
