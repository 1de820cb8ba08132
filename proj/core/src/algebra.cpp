#include "singequiv/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace singequiv {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
  return os.str();
}

namespace {

Matrix combine(const Field& f, const std::vector<Matrix>& mats, const Vector& x, std::size_t n) {
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out.add_scaled(mats[i], x[i]);
  return out;
}

std::vector<Matrix> right_from_left(const Field& f, const std::vector<Matrix>& left) {
  const std::size_t d = left.size();
  std::vector<Matrix> right(d, Matrix(f, d, d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) right[i](k, j) = left[j](k, i);
  return right;
}

// Product of two elements given the left multiplication table.
Vector product(const Field& f, const std::vector<Matrix>& left, const Vector& x, const Vector& y) {
  Vector out(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    axpy(f, out, x[i], left[i] * y);
  }
  return out;
}

}  // namespace

ValidationReport validate(const AlgebraData& data) {
  ValidationReport rep;
  const Field& f = data.field;
  const std::size_t d = data.labels.size();
  if (data.left_mult.size() != d) {
    rep.failures.push_back("structure constant table has wrong length");
    return rep;
  }
  for (const auto& m : data.left_mult)
    if (m.rows() != d || m.cols() != d || !(m.field() == f)) {
      rep.failures.push_back("structure constant matrix has wrong shape or field");
      return rep;
    }
  if (data.unit.size() != d || data.radical.ambient_dim() != d) {
    rep.failures.push_back("unit or radical has wrong dimension");
    return rep;
  }
  if (data.vertex_names.size() != data.idempotents.size()) {
    rep.failures.push_back("vertex names do not match idempotents");
    return rep;
  }
  for (const auto& e : data.idempotents)
    if (e.size() != d) {
      rep.failures.push_back("idempotent has wrong dimension");
      return rep;
    }

  // Associativity on all basis triples: L_{b_i b_j} = L_i L_j.
  for (std::size_t i = 0; i < d && rep.ok(); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector bij = data.left_mult[i].column(j);
      if (!(combine(f, data.left_mult, bij, d) == data.left_mult[i] * data.left_mult[j])) {
        rep.failures.push_back("associativity fails on (" + data.labels[i] + ", " + data.labels[j] + ", -)");
        break;
      }
    }

  const Matrix lu = combine(f, data.left_mult, data.unit, d);
  if (!(lu == Matrix::identity(f, d))) rep.failures.push_back("unit does not act as identity on the left");
  for (std::size_t j = 0; j < d; ++j)
    if (!(data.left_mult[j] * data.unit == unit_vector(d, j))) {
      rep.failures.push_back("unit does not act as identity on the right of " + data.labels[j]);
      break;
    }

  Vector sum(d);
  for (const auto& e : data.idempotents) sum = add(f, sum, e);
  if (!(sum == data.unit)) rep.failures.push_back("idempotents do not sum to the unit");
  for (std::size_t a = 0; a < data.idempotents.size(); ++a)
    for (std::size_t b = 0; b < data.idempotents.size(); ++b) {
      Vector p = product(f, data.left_mult, data.idempotents[a], data.idempotents[b]);
      Vector expect = a == b ? data.idempotents[a] : Vector(d);
      if (!(p == expect)) rep.failures.push_back("idempotents " + data.vertex_names[a] + ", " + data.vertex_names[b] + " not orthogonal idempotents");
    }

  const Subspace& rad = data.radical;
  const std::vector<Matrix> right = right_from_left(f, data.left_mult);
  bool ideal = true;
  for (std::size_t k = 0; k < rad.dim() && ideal; ++k) {
    Vector r = rad.vector(k);
    for (std::size_t i = 0; i < d; ++i)
      if (!rad.contains(data.left_mult[i] * r) || !rad.contains(right[i] * r)) {
        ideal = false;
        break;
      }
  }
  if (!ideal) rep.failures.push_back("radical is not a two-sided ideal");

  if (ideal) {
    Subspace power = rad;
    std::size_t steps = 0;
    while (power.dim() > 0 && steps <= d + 1) {
      std::vector<Vector> vecs;
      for (std::size_t a = 0; a < rad.dim(); ++a)
        for (std::size_t b = 0; b < power.dim(); ++b) vecs.push_back(product(f, data.left_mult, rad.vector(a), power.vector(b)));
      Subspace next = Subspace::span(f, d, vecs);
      if (next.dim() >= power.dim()) break;
      power = next;
      ++steps;
    }
    if (power.dim() > 0) rep.failures.push_back("radical is not nilpotent");
  }

  std::vector<Vector> spanning;
  for (std::size_t k = 0; k < rad.dim(); ++k) spanning.push_back(rad.vector(k));
  for (const auto& e : data.idempotents) spanning.push_back(e);
  if (rad.dim() + data.idempotents.size() != d || Subspace::span(f, d, spanning).dim() != d)
    rep.failures.push_back("algebra is not elementary: A/rad is not spanned freely by the idempotents");
  return rep;
}

Algebra::Algebra(AlgebraData data) : data_(std::move(data)) {}

AlgebraPtr Algebra::make(AlgebraData data) {
  ValidationReport rep = validate(data);
  if (!rep.ok()) throw AlgebraError("invalid algebra: " + rep.summary());
  std::shared_ptr<Algebra> a(new Algebra(std::move(data)));
  a->derive();
  return a;
}

void Algebra::derive() {
  const Field& f = field();
  const std::size_t d = dim();
  right_mult_ = right_from_left(f, data_.left_mult);

  std::vector<Vector> sq;
  for (std::size_t a = 0; a < radical().dim(); ++a)
    for (std::size_t b = 0; b < radical().dim(); ++b) sq.push_back(multiply(radical().vector(a), radical().vector(b)));
  radical_square_ = Subspace::span(f, d, sq);

  for (std::size_t v = 0; v < vertex_count(); ++v) {
    Subspace pv = Subspace::column_space(right_mult_of(idempotent(v)));
    std::vector<Matrix> acts;
    acts.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
      Matrix m(f, pv.dim(), pv.dim());
      for (std::size_t s = 0; s < pv.dim(); ++s) m.set_column(s, pv.coordinates(data_.left_mult[i] * pv.vector(s)));
      acts.push_back(std::move(m));
    }
    projective_space_.push_back(std::move(pv));
    projective_action_.push_back(std::move(acts));
  }

  // Basis change to [e_1..e_n | rad basis]; its inverse gives top coefficients.
  std::vector<Vector> cols = data_.idempotents;
  for (std::size_t k = 0; k < radical().dim(); ++k) cols.push_back(radical().vector(k));
  Matrix change = Matrix::from_columns(f, cols, d);
  Matrix aug = Matrix::hstack({change, Matrix::identity(f, d)});
  RrefResult rr = rref(aug);
  top_map_ = rr.reduced.block(0, d, vertex_count(), d);

  for (std::size_t v = 0; v < vertex_count(); ++v) generators_.push_back({idempotent(v), v, v, true});
  for (std::size_t w = 0; w < vertex_count(); ++w) {
    const Matrix lw = left_mult_of(idempotent(w));
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      const Matrix rv = right_mult_of(idempotent(v));
      std::vector<Vector> local, local_sq;
      for (std::size_t k = 0; k < radical().dim(); ++k) local.push_back(lw * (rv * radical().vector(k)));
      for (std::size_t k = 0; k < radical_square_.dim(); ++k) local_sq.push_back(lw * (rv * radical_square_.vector(k)));
      Subspace acc = Subspace::span(f, d, local_sq);
      Subspace full = Subspace::span(f, d, local);
      for (std::size_t k = 0; k < full.dim(); ++k) {
        Vector g = full.vector(k);
        if (acc.contains(g)) continue;
        acc = acc + Subspace::span(f, d, {g});
        generators_.push_back({g, w, v, false});
      }
    }
  }
}

std::optional<std::size_t> Algebra::find_label(const std::string& name) const {
  auto it = std::find(data_.labels.begin(), data_.labels.end(), name);
  if (it == data_.labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - data_.labels.begin());
}

std::optional<std::size_t> Algebra::find_vertex(const std::string& name) const {
  auto it = std::find(data_.vertex_names.begin(), data_.vertex_names.end(), name);
  if (it == data_.vertex_names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - data_.vertex_names.begin());
}

Matrix Algebra::left_mult_of(const Vector& x) const { return combine(field(), data_.left_mult, x, dim()); }
Matrix Algebra::right_mult_of(const Vector& x) const { return combine(field(), right_mult_, x, dim()); }

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw AlgebraError("multiply: dimension mismatch");
  return product(field(), data_.left_mult, x, y);
}

AlgebraPtr Algebra::opposite() const {
  std::call_once(opposite_once_, [this] {
    AlgebraData op = data_;
    op.left_mult = right_mult_;
    opposite_ = Algebra::make(std::move(op));
  });
  return opposite_;
}

bool Algebra::same_as(const Algebra& other) const {
  if (this == &other) return true;
  return field() == other.field() && dim() == other.dim() && data_.left_mult == other.data_.left_mult &&
         data_.idempotents == other.data_.idempotents;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a && b && a->same_as(*b); }

AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

// ---------------------------------------------------------------------------
// Morphisms and ideals

ValidationReport validate(const AlgebraMorphism& f) {
  ValidationReport rep;
  const Algebra& s = *f.source;
  const Algebra& t = *f.target;
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) {
    rep.failures.push_back("morphism matrix has wrong shape");
    return rep;
  }
  if (!(f.apply(s.unit()) == t.unit())) rep.failures.push_back("morphism does not preserve the unit");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vector lhs = f.apply(s.left_mult(i).column(j));
      Vector rhs = t.multiply(f.matrix.column(i), f.matrix.column(j));
      if (!(lhs == rhs)) {
        rep.failures.push_back("morphism does not preserve the product " + s.label(i) + " * " + s.label(j));
        return rep;
      }
    }
  return rep;
}

AlgebraMorphism identity_morphism(const AlgebraPtr& a) { return {a, a, Matrix::identity(a->field(), a->dim())}; }

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (!same_algebra(f.target, g.source)) throw AlgebraError("compose: algebras do not match");
  return {f.source, g.target, g.matrix * f.matrix};
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vector x = s.vector(k);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.left_mult(i) * x) || !s.contains(a.right_mult(i) * x)) return false;
  }
  return true;
}

Ideal make_ideal(const AlgebraPtr& a, Subspace space) {
  if (space.ambient_dim() != a->dim()) throw AlgebraError("ideal: ambient dimension mismatch");
  if (!is_two_sided_ideal(*a, space)) throw AlgebraError("subspace is not a two-sided ideal");
  return {a, std::move(space)};
}

Subspace product_space(const Algebra& a, const Subspace& s, const Subspace& t) {
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Matrix li = a.left_mult_of(s.vector(i));
    for (std::size_t j = 0; j < t.dim(); ++j) vecs.push_back(li * t.vector(j));
  }
  return Subspace::span(a.field(), a.dim(), vecs);
}

Ideal ideal_generated(const AlgebraPtr& a, const std::vector<Vector>& gens) {
  const Field& f = a->field();
  Subspace cur = Subspace::span(f, a->dim(), gens);
  for (;;) {
    std::vector<Vector> vecs;
    for (std::size_t k = 0; k < cur.dim(); ++k) {
      Vector x = cur.vector(k);
      vecs.push_back(x);
      for (std::size_t i = 0; i < a->dim(); ++i) {
        vecs.push_back(a->left_mult(i) * x);
        vecs.push_back(a->right_mult(i) * x);
      }
    }
    Subspace next = Subspace::span(f, a->dim(), vecs);
    if (next.dim() == cur.dim()) return {a, cur};
    cur = std::move(next);
  }
}

Ideal vertex_ideal(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
  std::vector<Vector> gens;
  for (std::size_t v : vertices) gens.push_back(a->idempotent(v));
  return ideal_generated(a, gens);
}

// ---------------------------------------------------------------------------
// Corners and quotients

namespace {

std::vector<std::string> labels_for(const Algebra& parent, const Subspace& s, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vector v = s.vector(k);
    std::size_t nonzero = 0;
    for (const auto& x : v)
      if (sgn(x) != 0) ++nonzero;
    if (nonzero == 1 && v[s.pivots()[k]] == 1)
      out.push_back(parent.label(s.pivots()[k]));
    else
      out.push_back(prefix + std::to_string(k));
  }
  return out;
}

}  // namespace

Corner corner(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
  const Field& fld = a->field();
  const std::size_t d = a->dim();
  std::vector<std::size_t> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.empty()) throw AlgebraError("corner: empty idempotent subset");
  Vector f(d);
  for (std::size_t v : verts) {
    if (v >= a->vertex_count()) throw AlgebraError("corner: vertex out of range");
    f = add(fld, f, a->idempotent(v));
  }
  const Matrix sandwich = a->left_mult_of(f) * a->right_mult_of(f);
  Subspace space = Subspace::column_space(sandwich);
  const std::size_t cd = space.dim();

  AlgebraData data;
  data.field = fld;
  data.labels = labels_for(*a, space, "c");
  for (std::size_t i = 0; i < cd; ++i) {
    Matrix m(fld, cd, cd);
    const Matrix li = a->left_mult_of(space.vector(i));
    for (std::size_t j = 0; j < cd; ++j) m.set_column(j, space.coordinates(li * space.vector(j)));
    data.left_mult.push_back(std::move(m));
  }
  data.unit = space.coordinates(f);
  for (std::size_t v : verts) {
    data.idempotents.push_back(space.coordinates(a->idempotent(v)));
    data.vertex_names.push_back(a->vertex_names()[v]);
  }
  std::vector<Vector> rad;
  for (std::size_t k = 0; k < a->radical().dim(); ++k) rad.push_back(space.coordinates(sandwich * a->radical().vector(k)));
  data.radical = Subspace::span(fld, cd, rad);

  Corner out;
  out.algebra = Algebra::make(std::move(data));
  out.inclusion = space.basis().transpose();
  out.vertices = verts;
  return out;
}

Corner corner(const AlgebraPtr& a, const Vector& f) {
  // Coefficients on idempotents must be 0/1 and f must equal that sum exactly.
  const Matrix& top = a->top_map();
  Vector coeff = top * f;
  std::vector<std::size_t> verts;
  Vector rebuilt(a->dim());
  for (std::size_t v = 0; v < coeff.size(); ++v) {
    if (sgn(coeff[v]) == 0) continue;
    if (coeff[v] != 1) throw AlgebraError("corner: element is not a sum of designated idempotents");
    verts.push_back(v);
    rebuilt = add(a->field(), rebuilt, a->idempotent(v));
  }
  if (!(rebuilt == f)) throw AlgebraError("corner: element is not a sum of designated idempotents");
  return corner(a, verts);
}

Quotient quotient_algebra(const AlgebraPtr& a, const Ideal& ideal) {
  const Field& fld = a->field();
  const Subspace& space = ideal.space;
  if (!same_algebra(ideal.algebra, a)) throw AlgebraError("quotient: ideal belongs to another algebra");
  if (space.contains(a->unit())) throw AlgebraError("quotient: ideal contains the unit");
  const std::vector<std::size_t> keep = space.non_pivots();
  const std::size_t qd = keep.size();

  Matrix proj(fld, qd, a->dim());
  for (std::size_t j = 0; j < a->dim(); ++j) {
    Vector r = space.reduce(a->basis_vector(j));
    for (std::size_t s = 0; s < qd; ++s) proj(s, j) = r[keep[s]];
  }
  auto project = [&](const Vector& x) { return proj * x; };

  AlgebraData data;
  data.field = fld;
  for (std::size_t s : keep) data.labels.push_back(a->label(s));
  for (std::size_t s = 0; s < qd; ++s) {
    Matrix m(fld, qd, qd);
    for (std::size_t t = 0; t < qd; ++t) m.set_column(t, project(a->left_mult(keep[s]).column(keep[t])));
    data.left_mult.push_back(std::move(m));
  }
  data.unit = project(a->unit());
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    if (space.contains(a->idempotent(v))) continue;
    data.idempotents.push_back(project(a->idempotent(v)));
    data.vertex_names.push_back(a->vertex_names()[v]);
  }
  std::vector<Vector> rad;
  for (std::size_t k = 0; k < a->radical().dim(); ++k) rad.push_back(project(a->radical().vector(k)));
  data.radical = Subspace::span(fld, qd, rad);

  Quotient out;
  out.algebra = Algebra::make(std::move(data));
  out.projection = {a, out.algebra, proj};
  return out;
}

bool same_structure_by_labels(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || !(a.field() == b.field())) return false;
  std::vector<std::size_t> perm(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto j = b.find_label(a.label(i));
    if (!j) return false;
    perm[i] = *j;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.left_mult(i)(k, j) != b.left_mult(perm[i])(perm[k], perm[j])) return false;
  return true;
}

}  // namespace singequiv
