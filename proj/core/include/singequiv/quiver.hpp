#pragma once

#include "singequiv/algebra.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singequiv {

class PresentationError : public std::runtime_error {
 public:
  PresentationError(std::size_t line, const std::string& msg)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// How a juxtaposed word "a b" is read: Function means b first, then a;
/// Diagram means a first, then b. Algebra products are always function order.
enum class Composition { Function, Diagram };

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view name) const;
};

/// A path in traversal order: arrows[0] is traversed first.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  // Arrow indices in function order (last traversed first).
  std::vector<std::size_t> word() const { return {arrows.rbegin(), arrows.rend()}; }
  bool operator==(const Path&) const = default;
};

// Canonical order: shorter first, then lexicographic on word(); trivial paths
// by vertex.
bool canonical_less(const Path& a, const Path& b);
std::string path_label(const Quiver& q, const Path& p);

struct RelationTerm {
  Scalar coeff;
  Path path;
};

struct Relation {
  std::vector<RelationTerm> terms;
  std::size_t line = 0;
  std::string text;
};

struct Presentation {
  Field field;
  Composition composition = Composition::Function;
  Quiver quiver;
  std::vector<Relation> relations;
  std::size_t nilpotency = 1;
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);
// Same presentation over another field (coefficients are re-read).
Presentation with_field(const Presentation& p, Field field);

/// kQ/(I + J^N) as structure constants over its canonical path basis.
class QuiverAlgebra {
 public:
  const Presentation& presentation() const { return presentation_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Path>& basis_paths() const { return basis_; }

  // Image of an arbitrary path in the algebra.
  Vector path_element(const Path& p) const;
  // Path from a word of arrow names in the presentation's convention.
  Path parse_path(const std::vector<std::string>& written) const;

 private:
  friend QuiverAlgebra build_algebra(const Presentation& p);
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

  Presentation presentation_;
  AlgebraPtr algebra_;
  std::vector<Path> basis_;
  std::vector<Path> paths_;  // all paths of length <= N, canonical order
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> path_index_;
  std::map<std::size_t, Sparse> reducers_;  // pivot path -> fully reduced ideal vector
  std::vector<std::ptrdiff_t> basis_position_;  // path index -> basis index or -1
};

QuiverAlgebra build_algebra(const Presentation& p);

struct PresentationCheck {
  bool ok = false;
  std::vector<std::string> violations;
};

using GeneratorMap = std::map<std::string, Vector>;

/// Checks that sending vertices/arrows of `expected` to the given elements of
/// `target` induces a bijective algebra map build_algebra(expected) -> target.
PresentationCheck quotient_presentation_check(const AlgebraPtr& target, const Presentation& expected,
                                              const GeneratorMap& generators);
/// Maps vertex v to the basis element labelled e_v and arrow a to the one
/// labelled a.
GeneratorMap generator_map_by_labels(const Algebra& target, const Presentation& expected);

}  // namespace singequiv
