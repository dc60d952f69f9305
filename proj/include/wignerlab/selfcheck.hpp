#pragma once

#include <string>
#include <vector>

namespace wignerlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst residual observed
  double tolerance = 0.0;  // pass threshold for `measured`
};

/// Fast built-in verification suite: semicircle identity and normalization,
/// eigensolver residuals, interlacing, Parseval and Schur identities,
/// coefficient chains, regularity integrals and SIMD/scalar agreement.
std::vector<CheckResult> run_selfcheck();

}  // namespace wignerlab
