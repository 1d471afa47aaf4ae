#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "incore/system.hpp"

namespace incore {

// Line-based system format ('#' starts a comment):
//
//   alphabet p q r s t
//   wffs p q r s t
//   axiom p
//   rule q t -> p q r s t
//   rule -> p            (empty premises)

/// Parses and validates. Throws ParseError carrying the offending line.
DeductionSystem parse_system(std::string_view text);
DeductionSystem parse_system(std::istream& in);
DeductionSystem load_system(const std::string& path);

/// Canonical text: alphabet, wffs, sorted axioms, sorted rules.
std::string serialize_system(const DeductionSystem& sys);

}  // namespace incore
