#pragma once

#include <iosfwd>
#include <string>

#include "semialg/linsystem.hpp"

namespace semialg {

// System file grammar (whitespace-insensitive, "#" starts a comment line):
//   field <p>
//   vars <n>
//   <c>*x<i> + <c>*x<i> + ... = <b>
// Coefficients are optional (default 1), may be negative, and are reduced
// mod p. A row with empty support is written "0 = <b>".
LinSystemFp parse_system(std::istream& is);
LinSystemFp parse_system(const std::string& text);

void write_system(std::ostream& os, const LinSystemFp& sys);
std::string system_to_string(const LinSystemFp& sys);

}  // namespace semialg
