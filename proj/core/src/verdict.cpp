#include "subsum/verdict.hpp"

#include "subsum/errors.hpp"
#include "subsum/version.hpp"

namespace subsum {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::verified:
      return "verified";
    case Status::refuted:
      return "refuted";
    case Status::vacuous:
      return "vacuous";
  }
  return "unknown";
}

Status status_from_string(std::string_view text) {
  if (text == "verified") return Status::verified;
  if (text == "refuted") return Status::refuted;
  if (text == "vacuous") return Status::vacuous;
  throw PreconditionError("unknown verdict status '" + std::string(text) + "'");
}

std::string toolchain_version() {
  std::string compiler;
#if defined(__clang__)
  compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  compiler = "gcc " __VERSION__;
#else
  compiler = "unknown compiler";
#endif
  return std::string("subsum ") + kVersion + " (" + compiler + ")";
}

Json to_json(const Verdict& v) {
  Json j = Json::object();
  j["statement"] = v.statement;
  j["group"] = v.group;
  j["params"] = v.params;
  j["status"] = std::string(to_string(v.status));
  j["checked"] = v.checked;
  j["violations"] = v.violations;
  j["witnesses"] = v.witnesses;
  j["summary"] = v.summary;
  j["elapsed_ms"] = v.elapsed_ms;
  j["toolchain_version"] = v.toolchain_version;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.statement = j.at("statement").get<std::string>();
    v.group = j.at("group").get<std::string>();
    v.params = j.at("params");
    v.status = status_from_string(j.at("status").get<std::string>());
    v.checked = j.at("checked").get<std::uint64_t>();
    v.violations = j.at("violations").get<std::uint64_t>();
    v.witnesses = j.at("witnesses").get<std::vector<std::vector<std::uint32_t>>>();
    v.summary = j.at("summary");
    v.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    v.toolchain_version = j.at("toolchain_version").get<std::string>();
    if (v.status == Status::refuted && v.witnesses.empty()) {
      throw PreconditionError("refuted verdict without witnesses");
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed verdict certificate: ") + e.what());
  }
}

std::string render(const Json& json) { return json.dump(2); }

}  // namespace subsum
