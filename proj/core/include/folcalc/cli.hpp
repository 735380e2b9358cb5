#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace folcalc {

// One foliation (or one rational map) per document.  Text documents are
// UTF-8 `key: value` lines; JSON documents with the same keys are accepted
// interchangeably.  See docs/grammar.md for the exact format.
struct InputDocument {
    std::vector<std::string> vars;
    std::string omega;                          // 1-form expression, may be empty
    std::vector<std::string> map;               // empty or exactly 3 polynomials
    std::map<std::string, std::string> fields;  // named vector-field expressions

    bool operator==(const InputDocument& o) const = default;
};

// Parses either format (auto-detected by a leading '{').  Checks the
// structural invariants (unique identifier variable names, three map entries)
// and that every expression parses in the declared ring; throws ParseError or
// std::invalid_argument otherwise.
InputDocument parse_input_document(const std::string& text);

// Inverse serializations; both round-trip through parse_input_document.
std::string to_key_value(const InputDocument& doc);
std::string to_json_text(const InputDocument& doc);

// Exit-code policy of the command surface.
inline constexpr int exit_ok = 0;             // success
inline constexpr int exit_usage = 1;          // bad flags, unreadable file, internal error
inline constexpr int exit_invalid = 2;        // input rejected (parse or foliation axiom)
inline constexpr int exit_stabilization = 3;  // unfolding ideal failed to stabilize

// Runs `body`, mapping exceptions to the exit codes above and writing the
// diagnostic (including a `reason: <axiom>` line for axiom rejections) to
// `err`.  run_command uses this for every subcommand; exposed so the mapping
// itself is testable.
int run_guarded(const std::function<int()>& body, std::ostream& err);

// The folcalc command surface: args excludes argv[0].  `in` backs the "-"
// input file (stdin in the shipped binary).  Writes results to `out`,
// diagnostics to `err`, and returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream* in = nullptr);

}  // namespace folcalc
