#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace subsum {

using Json = nlohmann::ordered_json;

enum class Status { verified, refuted, vacuous };

std::string_view to_string(Status status);
Status status_from_string(std::string_view text);

/// Outcome of one verification job.
///
/// `checked` counts candidate subsets under the job's enumeration contract,
/// `violations` is the exact number of failing subsets, and `witnesses` holds
/// at most a capped number of them (sorted index lists). A refuted verdict
/// always carries at least one witness.
struct Verdict {
  std::string statement;
  std::string group;
  Json params = Json::object();
  Status status = Status::verified;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::vector<std::uint32_t>> witnesses;
  Json summary = Json::object();
  std::int64_t elapsed_ms = 0;
  std::string toolchain_version;
};

std::string toolchain_version();

Json to_json(const Verdict& verdict);
// Throws PreconditionError on schema mismatch.
Verdict verdict_from_json(const Json& json);

// Two-space indented JSON, the form written by the CLI.
std::string render(const Json& json);

}  // namespace subsum
