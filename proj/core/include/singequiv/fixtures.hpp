#pragma once

#include "singequiv/quiver.hpp"

#include <string>
#include <vector>

namespace singequiv::fixtures {

// Presentation sources of the shipped examples; identical (up to comments)
// to the files under fixtures/.
std::string dual_source();
std::string a2_source();
std::string e31_source();
std::string e32_source();
// Three 2-cycles i <-> i' hanging off a central oriented 3-cycle; r >= 2.
std::string e33_source(int r);
// Targets of the presentation checks.
std::string e31_quotient_source();
std::string square_zero_free2_source();
// k Z_3 modulo the n-th power of the arrow ideal.
std::string cyclic3_truncated_source(int n);

Presentation by_name(const std::string& id, int r = 2);
std::vector<std::string> names();

}  // namespace singequiv::fixtures
