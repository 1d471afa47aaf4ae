#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "incore/system.hpp"

namespace incore {

using DeductionOperator = std::function<Mask(const Mask&)>;

struct LawResult {
  std::string law;  // "finitely-generated", "monotone", "union", "directed-union"
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> counterexamples;  // first few, human readable

  bool passed() const { return violations == 0; }
};

struct LawReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<LawResult> laws;

  bool passed() const;
};

/// Samples subsets, pairs, families and chains of W and checks the
/// finite-generation, monotonicity, union and directed-union laws of D.
LawReport check_operator_laws(const DeductionSystem& sys, std::size_t samples,
                              std::uint64_t seed);
/// Same checks against an arbitrary operator on the masks of `sys`.
LawReport check_operator_laws(const DeductionSystem& sys,
                              const DeductionOperator& op, std::size_t samples,
                              std::uint64_t seed);

}  // namespace incore
