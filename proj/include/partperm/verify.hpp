#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace partperm {

/// Zero means "use the target's default".
struct VerifyBounds {
  int max_n = 0;
  int length = 0;
  int max_size = 0;
  int jobs = 1;
};

struct VerifyCase {
  std::string name;
  bool pass = true;
  nlohmann::json detail;
};

struct VerifyReport {
  std::string target;
  std::string claim;
  nlohmann::json bounds;
  std::vector<VerifyCase> cases;

  bool passes() const;
  nlohmann::json to_json() const;
};

/// enum1 enum2 enum3 baxter ordergraph shape-I-J shape-312-231 psi keylemma
/// bij-1324 bij-dyck eq1
const std::vector<std::string>& verify_targets();

/// Unknown targets throw InvalidInput. Output is deterministic for fixed
/// bounds whatever the job count.
VerifyReport verify(std::string_view target, const VerifyBounds& bounds);

}  // namespace partperm
