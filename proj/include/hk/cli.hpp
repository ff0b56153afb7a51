#pragma once

// Problem files, command dispatch and reports for the command-line tool.
//
// A problem file holds one `key: value` entry per line; `#` starts a comment
// and a line without a key is a `poly` entry. Keys: command, vars, order,
// tprec, poly, y, r, seed, root, branch, ks.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace hk::cli {

/// Malformed invocation or problem file; exit code 1 like parse errors.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
    int column = 1;  // where the value starts
};

struct ProblemFile {
    std::vector<Entry> entries;

    std::vector<Entry> all(const std::string& key) const;
    std::optional<Entry> first(const std::string& key) const;
};

ProblemFile parse_problem(const std::string& text);

struct Options {
    std::optional<int> order;
    std::optional<int> tprec;
};

inline constexpr int kDefaultOrder = 12;
inline constexpr int kDefaultTprec = 20;

const std::vector<std::string>& commands();

struct Outcome {
    nlohmann::json report;
    int exit_code = 0;
};

/// Runs one command on the problem text; never throws for library, parse or
/// usage errors, which are rendered in the report's diagnostics.
Outcome run(const std::string& command, const std::string& text, const Options& options = {});

/// Aligned plain-text rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace hk::cli
