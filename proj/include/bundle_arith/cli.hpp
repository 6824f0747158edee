#pragma once

// The bundle-arith command line. `run` is the whole program; main() only
// forwards argv and the standard streams.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace bundle_arith::cli {

enum class Status { ok, domain_error, consistency_error, usage_error };

int exit_code(Status s) noexcept;
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CommandResult {
    Status status = Status::ok;
    std::string command;           ///< e.g. "rank3 index"
    nlohmann::json payload;        ///< mirrors the operation's result
    std::vector<std::string> notes;  ///< derivation trace, one step per line
    friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

void to_json(nlohmann::json& j, const CommandResult& r);
void from_json(const nlohmann::json& j, CommandResult& r);

/// Serialized form used by --json: sorted keys, two-space indent.
std::string serialize(const CommandResult& r);
CommandResult parse(const std::string& text);

/// Parses `args` (without the program name) and runs the command. Library
/// errors become statuses; nothing escapes.
CommandResult execute(const std::vector<std::string>& args);

/// execute() plus printing. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bundle_arith::cli
