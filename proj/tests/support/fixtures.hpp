#pragma once

#include <string>

#include "incore/machine_infinity.hpp"
#include "incore/system_io.hpp"

namespace testing_support {

inline const std::string kEx1Text =
    "alphabet p q r s t\n"
    "wffs p q r s t\n"
    "axiom p\n"
    "axiom s\n"
    "rule p -> q\n"
    "rule s -> t\n"
    "rule q t -> p q r s t\n";

inline incore::DeductionSystem ex1() { return incore::parse_system(kEx1Text); }

inline incore::DeductionSystem ex1_with_axioms(incore::FormulaSet axioms) {
  return ex1().with_axioms(std::move(axioms));
}

inline incore::Formula F(const char* text) { return incore::Formula(text); }

}  // namespace testing_support
