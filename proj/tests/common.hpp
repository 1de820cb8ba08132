#pragma once

#include "singequiv/bimodule.hpp"
#include "singequiv/dsg.hpp"
#include "singequiv/extension.hpp"
#include "singequiv/fixtures.hpp"
#include "singequiv/harness.hpp"
#include "singequiv/quiver.hpp"

#include <string>
#include <vector>

namespace testing {

using namespace singequiv;

inline QuiverAlgebra fixture(const std::string& id, int r = 2) { return build_algebra(fixtures::by_name(id, r)); }
inline QuiverAlgebra from_text(const std::string& text) { return build_algebra(parse_presentation(text)); }

inline std::size_t vx(const Algebra& a, const std::string& name) { return a.find_vertex(name).value(); }

inline Ideal vertex_ideal_named(const AlgebraPtr& a, const std::vector<std::string>& names) {
  std::vector<std::size_t> vs;
  for (const auto& n : names) vs.push_back(vx(*a, n));
  return vertex_ideal(a, vs);
}

inline std::vector<std::size_t> to_sizes(const std::vector<Multiplicity>& ms) {
  std::vector<std::size_t> out;
  for (const auto& m : ms) out.push_back(m.get_ui());
  return out;
}

}  // namespace testing
