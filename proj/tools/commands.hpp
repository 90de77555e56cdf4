#pragma once

#include "spec_file.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qgcat::cli {

// Payload of one command. `failed` marks a verification failure (exit 1).
struct CommandResult {
  nlohmann::json payload;
  bool failed = false;
};

struct CommandArgs {
  std::string w1;
  std::string w2;
  std::string predicate;  // check
  std::string mode;       // complexify: tensor | free; unglue: maximal | canonical
  std::string theorem;    // verify: A..E
  std::vector<std::int64_t> moduli;
  std::vector<std::string> odd_witness;
  int squares = -1;  // square cutoff of extended tables; report cutoff when negative
  std::int64_t tensor = -1;  // unglue: tensor-complexify the input first when >= 0
};

CommandResult cmd_dims(const QGSpec& spec);
CommandResult cmd_mor(const QGSpec& spec, const CommandArgs& args);
CommandResult cmd_degree(const QGSpec& spec);
CommandResult cmd_check(const QGSpec& spec, const CommandArgs& args);
CommandResult cmd_complexify(const QGSpec& spec, const CommandArgs& args);
CommandResult cmd_glue(const QGSpec& spec, const CommandArgs& args);
CommandResult cmd_unglue(const QGSpec& spec, const CommandArgs& args);
CommandResult cmd_verify(const QGSpec& spec, const CommandArgs& args);
CommandResult cmd_relations(const QGSpec& spec, const CommandArgs& args);

// Wraps a payload with the engine version, input digest and cutoffs.
nlohmann::json make_report(const std::string& command, const QGSpec& spec, const CommandResult& result);

// Lowercase hex SHA-256 of a string.
std::string sha256_hex(const std::string& data);

}  // namespace qgcat::cli
