#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "omcg/sign_vector.hpp"

namespace omcg {

// Interchange format for sign-vector systems:
//   - optional header line "# ground: e0,e1,..." naming the elements
//   - one sign string over {'+','-','0'} per line
//   - blank lines and other '#' lines are ignored
// Without a header the ground set is inferred from the first vector, with
// default labels. A file with neither header nor vectors is rejected.
SignSystem read_system(std::istream& in);
SignSystem parse_system(std::string_view text);

/// Canonical serialization: header only when labels are non-default (or the
/// ground set is empty), then members in canonical order. Parsing the output
/// reproduces the identical system.
void write_system(std::ostream& out, const SignSystem& system);
std::string to_text(const SignSystem& system);

} // namespace omcg
