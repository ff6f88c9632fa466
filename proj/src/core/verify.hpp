#pragma once

#include <string>
#include <vector>

#include "core/runtime.hpp"

namespace garank {

struct VerifyCheck {
  std::string name;
  bool ok = false;
  double error = 0.0;  // magnitude of the mismatch where meaningful
};

struct VerifyReport {
  bool ok = true;
  std::vector<VerifyCheck> checks;
};

// Cross-validates the basis-free computations on m against the matrix
// representation oracle. tol feeds the rank comparison; the remaining
// checks run at the documented kernel tolerances.
VerifyReport verify_against_oracle(const AnyMultivector& m, double tol);

std::string verify_report_to_json(const VerifyReport& report);

}  // namespace garank
