#pragma once

#include "json.hpp"  // vendored nlohmann/json
#include "orelab/simplicity.hpp"

namespace orelab {

using json = nlohmann::json;

/// A parsed problem description: coefficient algebra, exponent monoid,
/// pi-structure and analysis caps.
struct ProblemConfig {
  Algebra algebra;
  MonoidSpec monoid;
  PiStructure pi;
  SimplicityCaps caps;
  std::string strategy = "auto";

  static ProblemConfig from_json(const json& j);
  static ProblemConfig from_file(const std::string& path);

  /// Canonical echo of the resolved configuration (lossless round-trip).
  json echo() const;
};

struct CommandResult {
  json report;        // deterministic machine body
  std::string human;  // rendered summary
  int exit_code = 0;
};

CommandResult run_check(const ProblemConfig& cfg);
CommandResult run_mul(const ProblemConfig& cfg, const std::string& lhs,
                      const std::string& rhs);
CommandResult run_center(const ProblemConfig& cfg, std::uint64_t cap);
CommandResult run_simple(const ProblemConfig& cfg, const std::string& strategy);

json ore_elem_json(const OreRing& ring, const OreElem& u);

}  // namespace orelab
