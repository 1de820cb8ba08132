#include "singequiv/fixtures.hpp"

#include <sstream>
#include <stdexcept>

namespace singequiv::fixtures {

std::string dual_source() {
  return "field Q\n"
         "vertices v\n"
         "arrow x: v -> v\n"
         "relation x x\n"
         "nilpotency 2\n";
}

std::string a2_source() {
  return "field Q\n"
         "vertices 1, 2\n"
         "arrow a: 1 -> 2\n"
         "nilpotency 2\n";
}

std::string e31_source() {
  return "field Q\n"
         "composition function\n"
         "vertices 1, c, 2\n"
         "arrow alpha: 1 -> c\n"
         "arrow beta: c -> 1\n"
         "arrow delta: c -> 2\n"
         "arrow gamma: 2 -> c\n"
         "arrow x: c -> c\n"
         "relation delta x\n"
         "relation beta x\n"
         "relation x gamma\n"
         "relation x alpha\n"
         "relation beta gamma\n"
         "relation delta alpha\n"
         "relation beta alpha\n"
         "relation delta gamma\n"
         "relation alpha beta - gamma delta\n"
         "relation x x\n"  // forced by radical square zero of the quotient
         "nilpotency 3\n";
}

std::string e32_source() {
  std::ostringstream os;
  os << "field Q\n"
        "composition function\n"
        "vertices 1, c, 2\n"
        "arrow a1: 1 -> c\n"
        "arrow b1: c -> 1\n"
        "arrow a2: 2 -> c\n"
        "arrow b2: c -> 2\n"
        "arrow x1: c -> c\n"
        "arrow x2: c -> c\n"
        "relation x1 x1\n"
        "relation x2 x2\n";
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) os << "relation x" << j << " a" << i << '\n';
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) os << "relation b" << j << " a" << i << '\n';
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) os << "relation b" << i << " x" << j << '\n';
  os << "relation a1 b1 - x1 x2\n"
        "relation a2 b2 - x2 x1\n"
        "nilpotency 3\n";
  return os.str();
}

std::string e33_source(int r) {
  if (r < 2) throw std::invalid_argument("e33 needs r >= 2");
  auto prev = [](int i) { return i == 1 ? 3 : i - 1; };
  auto next = [](int i) { return i == 3 ? 1 : i + 1; };
  std::ostringstream os;
  os << "field Q\n"
        "composition function\n"
        "vertices 1, 2, 3, 1p, 2p, 3p\n";
  for (int i = 1; i <= 3; ++i) os << "arrow g" << i << ": " << i << " -> " << next(i) << '\n';
  for (int i = 1; i <= 3; ++i) os << "arrow a" << i << ": " << i << "p -> " << i << '\n';
  for (int i = 1; i <= 3; ++i) os << "arrow b" << i << ": " << i << " -> " << i << "p\n";
  for (int i = 1; i <= 3; ++i) {
    os << "relation b" << i << " a" << i << '\n';
    os << "relation g" << i << " a" << i << '\n';
    os << "relation b" << i << " g" << prev(i) << '\n';
    // a_i b_i - p_i^r, with p_i the central 3-path starting at i
    os << "relation a" << i << " b" << i << " -";
    for (int k = 0; k < r; ++k) os << " g" << prev(i) << " g" << next(i) << " g" << i;
    os << '\n';
  }
  os << "nilpotency " << 3 * r + 1 << '\n';
  return os.str();
}

std::string e31_quotient_source() {
  return "field Q\n"
         "vertices c, 2\n"
         "arrow delta: c -> 2\n"
         "arrow gamma: 2 -> c\n"
         "arrow x: c -> c\n"
         "relation x x\n"
         "relation delta x\n"
         "relation x gamma\n"
         "relation delta gamma\n"
         "relation gamma delta\n"
         "nilpotency 2\n";
}

std::string square_zero_free2_source() {
  return "field Q\n"
         "vertices c\n"
         "arrow x1: c -> c\n"
         "arrow x2: c -> c\n"
         "relation x1 x1\n"
         "relation x2 x2\n"
         "relation x1 x2\n"
         "relation x2 x1\n"
         "nilpotency 3\n";
}

std::string cyclic3_truncated_source(int n) {
  std::ostringstream os;
  os << "field Q\n"
        "vertices 1, 2, 3\n"
        "arrow g1: 1 -> 2\n"
        "arrow g2: 2 -> 3\n"
        "arrow g3: 3 -> 1\n";
  // every path of length n, written in function order
  for (int start = 1; start <= 3; ++start) {
    os << "relation";
    for (int k = n - 1; k >= 0; --k) os << " g" << (start - 1 + k) % 3 + 1;
    os << '\n';
  }
  os << "nilpotency " << n << '\n';
  return os.str();
}

Presentation by_name(const std::string& id, int r) {
  if (id == "dual") return parse_presentation(dual_source());
  if (id == "a2") return parse_presentation(a2_source());
  if (id == "e31") return parse_presentation(e31_source());
  if (id == "e32") return parse_presentation(e32_source());
  if (id == "e33") return parse_presentation(e33_source(r));
  throw std::invalid_argument("unknown fixture '" + id + "'");
}

std::vector<std::string> names() { return {"dual", "a2", "e31", "e32", "e33"}; }

}  // namespace singequiv::fixtures
