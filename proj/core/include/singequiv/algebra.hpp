#pragma once

#include "singequiv/linalg.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace singequiv {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Raw structure-constant description of an elementary algebra. left_mult[i]
/// is the matrix of x -> b_i * x on the basis b_0..b_{d-1}.
struct AlgebraData {
  Field field;
  std::vector<std::string> labels;
  std::vector<Matrix> left_mult;
  Vector unit;
  std::vector<Vector> idempotents;
  std::vector<std::string> vertex_names;
  Subspace radical;
};

ValidationReport validate(const AlgebraData& data);

/// A homogeneous algebra generator: either a vertex idempotent or an element
/// of e_target * rad * e_source spanning a complement of rad^2 there.
struct AlgebraGenerator {
  Vector element;
  std::size_t target = 0;
  std::size_t source = 0;
  bool idempotent = false;
};

/// Finite-dimensional elementary algebra with designated orthogonal
/// idempotents and designated radical. Instances are immutable and always
/// validated; construct through Algebra::make.
class Algebra {
 public:
  static AlgebraPtr make(AlgebraData data);

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const Field& field() const { return data_.field; }
  std::size_t dim() const { return data_.labels.size(); }
  const std::vector<std::string>& labels() const { return data_.labels; }
  const std::string& label(std::size_t i) const { return data_.labels.at(i); }
  std::optional<std::size_t> find_label(const std::string& name) const;

  std::size_t vertex_count() const { return data_.idempotents.size(); }
  const std::vector<std::string>& vertex_names() const { return data_.vertex_names; }
  std::optional<std::size_t> find_vertex(const std::string& name) const;

  const Matrix& left_mult(std::size_t i) const { return data_.left_mult.at(i); }
  const Matrix& right_mult(std::size_t i) const { return right_mult_.at(i); }
  const std::vector<Matrix>& left_mults() const { return data_.left_mult; }
  const std::vector<Matrix>& right_mults() const { return right_mult_; }
  Matrix left_mult_of(const Vector& x) const;
  Matrix right_mult_of(const Vector& x) const;
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  const Vector& unit() const { return data_.unit; }
  const Vector& idempotent(std::size_t v) const { return data_.idempotents.at(v); }
  const std::vector<Vector>& idempotents() const { return data_.idempotents; }
  const Subspace& radical() const { return data_.radical; }
  const Subspace& radical_square() const { return radical_square_; }

  /// A e_v as a subspace of A, and the left action of each basis element on
  /// its rref coordinates.
  const Subspace& projective_space(std::size_t v) const { return projective_space_.at(v); }
  const std::vector<Matrix>& projective_action(std::size_t v) const { return projective_action_.at(v); }
  /// vertex_count() x dim() matrix sending x to its coefficients on the
  /// idempotents modulo the radical.
  const Matrix& top_map() const { return top_map_; }
  const std::vector<AlgebraGenerator>& generators() const { return generators_; }

  AlgebraPtr opposite() const;
  bool same_as(const Algebra& other) const;

  const AlgebraData& data() const { return data_; }

 private:
  explicit Algebra(AlgebraData data);
  void derive();

  AlgebraData data_;
  std::vector<Matrix> right_mult_;
  Subspace radical_square_;
  std::vector<Subspace> projective_space_;
  std::vector<std::vector<Matrix>> projective_action_;
  Matrix top_map_;
  std::vector<AlgebraGenerator> generators_;

  mutable std::once_flag opposite_once_;
  mutable AlgebraPtr opposite_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;  // target.dim() x source.dim()

  Vector apply(const Vector& x) const { return matrix * x; }
};

ValidationReport validate(const AlgebraMorphism& f);
AlgebraMorphism identity_morphism(const AlgebraPtr& a);
// g after f
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

struct Ideal {
  AlgebraPtr algebra;
  Subspace space;
};

Ideal make_ideal(const AlgebraPtr& a, Subspace space);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
// span{ x y : x in s, y in t }
Subspace product_space(const Algebra& a, const Subspace& s, const Subspace& t);

AlgebraPtr opposite(const AlgebraPtr& a);

struct Corner {
  AlgebraPtr algebra;
  Matrix inclusion;  // parent.dim() x corner.dim()
  std::vector<std::size_t> vertices;
};

Corner corner(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);
// f must equal a sum of a subset of the designated idempotents.
Corner corner(const AlgebraPtr& a, const Vector& f);

Ideal ideal_generated(const AlgebraPtr& a, const std::vector<Vector>& gens);
Ideal vertex_ideal(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);

struct Quotient {
  AlgebraPtr algebra;
  AlgebraMorphism projection;
};

Quotient quotient_algebra(const AlgebraPtr& a, const Ideal& ideal);

/// True iff the two algebras have the same labels (as sets) and identical
/// structure constants after matching basis elements by label.
bool same_structure_by_labels(const Algebra& a, const Algebra& b);

}  // namespace singequiv
