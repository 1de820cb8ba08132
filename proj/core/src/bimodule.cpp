#include "singequiv/bimodule.hpp"

namespace singequiv {

namespace {

Matrix combine(const Field& f, const std::vector<Matrix>& mats, const Vector& a, std::size_t n) {
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) out.add_scaled(mats[i], a[i]);
  return out;
}

Matrix columns_of(const Subspace& s) { return s.basis().transpose(); }

Matrix pivot_rows(const Subspace& s, const Matrix& m) {
  Matrix out(m.field(), s.dim(), m.cols());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(s.pivots()[r], c);
  return out;
}

}  // namespace

Bimodule Bimodule::trusted(AlgebraPtr a, std::vector<Matrix> left, std::vector<Matrix> right) {
  if (left.size() != a->dim() || right.size() != a->dim()) throw ModuleError("bimodule: need one action per basis element");
  Bimodule b;
  b.dim_ = left.empty() ? 0 : left.front().rows();
  for (const auto* side : {&left, &right})
    for (const auto& m : *side)
      if (m.rows() != b.dim_ || m.cols() != b.dim_) throw ModuleError("bimodule: inconsistent action shapes");
  b.algebra_ = std::move(a);
  b.left_ = std::move(left);
  b.right_ = std::move(right);
  return b;
}

Bimodule Bimodule::make(AlgebraPtr a, std::vector<Matrix> left, std::vector<Matrix> right) {
  Bimodule b = trusted(std::move(a), std::move(left), std::move(right));
  ValidationReport rep = validate(b);
  if (!rep.ok()) throw ModuleError("invalid bimodule: " + rep.summary());
  return b;
}

Matrix Bimodule::left_act(const Vector& a) const { return combine(field(), left_, a, dim_); }
Matrix Bimodule::right_act(const Vector& a) const { return combine(field(), right_, a, dim_); }

Module Bimodule::as_left_module() const { return Module::trusted(algebra_, Side::Left, left_); }
Module Bimodule::as_right_module() const { return Module::trusted(algebra_, Side::Right, right_); }

ValidationReport validate(const Bimodule& x) {
  ValidationReport rep;
  for (const auto& f : validate(x.as_left_module()).failures) rep.failures.push_back("left: " + f);
  for (const auto& f : validate(x.as_right_module()).failures) rep.failures.push_back("right: " + f);
  if (!rep.ok()) return rep;
  // Commutation on generators suffices once both actions are multiplicative.
  const auto& gens = x.algebra()->generators();
  for (const auto& g : gens) {
    const Matrix lg = x.left_act(g.element);
    for (const auto& h : gens) {
      const Matrix rh = x.right_act(h.element);
      if (!(lg * rh == rh * lg)) {
        rep.failures.push_back("left and right actions do not commute");
        return rep;
      }
    }
  }
  return rep;
}

Bimodule sub_bimodule(const Bimodule& x, const Subspace& s) {
  const Matrix basis = columns_of(s);
  std::vector<Matrix> l, r;
  for (const auto& m : x.left()) l.push_back(pivot_rows(s, m * basis));
  for (const auto& m : x.right()) r.push_back(pivot_rows(s, m * basis));
  return Bimodule::trusted(x.algebra(), std::move(l), std::move(r));
}

Bimodule ideal_as_bimodule(const Ideal& i) {
  if (!is_two_sided_ideal(*i.algebra, i.space)) throw ModuleError("ideal_as_bimodule: not a two-sided ideal");
  return sub_bimodule(regular_bimodule(i.algebra), i.space);
}

Bimodule regular_bimodule(const AlgebraPtr& a) { return Bimodule::trusted(a, a->left_mults(), a->right_mults()); }

Bimodule tensor_bimodule(const Module& m, const Module& n) {
  if (m.side() != Side::Left || n.side() != Side::Right) throw ModuleError("tensor_bimodule: need a left and a right module");
  if (!same_algebra(m.algebra(), n.algebra())) throw ModuleError("tensor_bimodule: modules over different algebras");
  const Field& f = m.field();
  const Matrix im = Matrix::identity(f, m.dim()), in = Matrix::identity(f, n.dim());
  std::vector<Matrix> l, r;
  for (const auto& a : m.actions()) l.push_back(kronecker(a, in));
  for (const auto& a : n.actions()) r.push_back(kronecker(im, a));
  return Bimodule::make(m.algebra(), std::move(l), std::move(r));
}

bool is_idempotent_ideal(const Ideal& i) { return product_space(*i.algebra, i.space, i.space) == i.space; }

Bimodule projective_bimodule(const AlgebraPtr& a, std::size_t i, std::size_t j) {
  const Algebra& op = *a->opposite();
  const std::size_t p = a->projective_space(i).dim(), q = op.projective_space(j).dim();
  const Matrix ip = Matrix::identity(a->field(), p), iq = Matrix::identity(a->field(), q);
  std::vector<Matrix> l, r;
  for (std::size_t b = 0; b < a->dim(); ++b) {
    l.push_back(kronecker(a->projective_action(i)[b], iq));
    r.push_back(kronecker(ip, op.projective_action(j)[b]));
  }
  return Bimodule::trusted(a, std::move(l), std::move(r));
}

BimoduleResolutionStep bimodule_projective_cover(const Bimodule& x) {
  const AlgebraPtr& a = x.algebra();
  const Algebra& op = *a->opposite();
  const Field& f = x.field();
  BimoduleResolutionStep step;

  std::vector<Matrix> parts;
  for (const auto& g : a->generators())
    if (!g.idempotent) {
      parts.push_back(x.left_act(g.element));
      parts.push_back(x.right_act(g.element));
    }
  Subspace acc = parts.empty() || x.dim() == 0 ? Subspace(f, x.dim()) : Subspace::column_space(Matrix::hstack(parts));
  for (std::size_t i = 0; i < a->vertex_count(); ++i)
    for (std::size_t j = 0; j < a->vertex_count(); ++j) {
      Subspace piece = Subspace::column_space(x.left_act(a->idempotent(i)) * x.right_act(a->idempotent(j)));
      for (std::size_t k = 0; k < piece.dim(); ++k) {
        Vector g = piece.vector(k);
        if (acc.contains(g)) continue;
        acc = acc + Subspace::span(f, x.dim(), {g});
        step.cover.push_back({i, j});
        step.generators.push_back(std::move(g));
      }
    }

  // P = (+) A e_i (x) e_j A, block coordinates (s, t) -> s * q + t.
  step.offsets = {0};
  for (const auto& [i, j] : step.cover)
    step.offsets.push_back(step.offsets.back() + a->projective_space(i).dim() * op.projective_space(j).dim());
  const std::size_t pdim = step.offsets.back();
  step.epi = Matrix(f, x.dim(), pdim);
  for (std::size_t k = 0; k < step.cover.size(); ++k) {
    const auto& [i, j] = step.cover[k];
    const Subspace& ps = a->projective_space(i);
    const Subspace& qs = op.projective_space(j);
    for (std::size_t s = 0; s < ps.dim(); ++s) {
      const Vector left = x.left_act(ps.vector(s)) * step.generators[k];
      for (std::size_t t = 0; t < qs.dim(); ++t)
        step.epi.set_column(step.offsets[k] + s * qs.dim() + t, x.right_act(qs.vector(t)) * left);
    }
  }
  if (rank(step.epi) != x.dim()) throw ModuleError("internal: bimodule cover is not surjective");
  step.kernel_space = kernel(step.epi);

  // Kernel actions without materialising P: only the pivot rows of each
  // image are needed, and the block actions are Kronecker products.
  const Subspace& ks = step.kernel_space;
  const std::size_t kd = ks.dim();
  struct Pos {
    std::size_t block, s, t;
  };
  std::vector<Pos> pos;
  for (std::size_t piv : ks.pivots()) {
    std::size_t k = 0;
    while (step.offsets[k + 1] <= piv) ++k;
    const std::size_t q = op.projective_space(step.cover[k].right).dim();
    pos.push_back({k, (piv - step.offsets[k]) / q, (piv - step.offsets[k]) % q});
  }
  const Matrix& kb = ks.basis();  // rows = kernel vectors
  std::vector<Matrix> l(a->dim(), Matrix(f, kd, kd)), r(a->dim(), Matrix(f, kd, kd));
  for (std::size_t b = 0; b < a->dim(); ++b)
    for (std::size_t row = 0; row < kd; ++row) {
      const auto [k, s, t] = pos[row];
      const auto& [i, j] = step.cover[k];
      const std::size_t p = a->projective_space(i).dim(), q = op.projective_space(j).dim();
      const Matrix& lm = a->projective_action(i)[b];
      const Matrix& rm = op.projective_action(j)[b];
      const std::size_t off = step.offsets[k];
      for (std::size_t c = 0; c < kd; ++c) {
        Scalar& lv = l[b](row, c);
        for (std::size_t s2 = 0; s2 < p; ++s2)
          if (sgn(lm(s, s2)) != 0 && sgn(kb(c, off + s2 * q + t)) != 0) f.fma(lv, lm(s, s2), kb(c, off + s2 * q + t));
        Scalar& rv = r[b](row, c);
        for (std::size_t t2 = 0; t2 < q; ++t2)
          if (sgn(rm(t, t2)) != 0 && sgn(kb(c, off + s * q + t2)) != 0) f.fma(rv, rm(t, t2), kb(c, off + s * q + t2));
      }
    }
  step.kernel = Bimodule::trusted(a, std::move(l), std::move(r));
  return step;
}

Bounded bimodule_pd(const Bimodule& x, std::size_t bound, std::size_t max_dim) {
  if (x.dim() == 0) return {0, bound};
  Bimodule cur = x;
  for (std::size_t n = 0; n <= bound; ++n) {
    if (n > 0 && cur.dim() > max_dim) return {std::nullopt, n - 1, true};  // Omega^n != 0, so pd >= n
    BimoduleResolutionStep step = bimodule_projective_cover(cur);
    if (step.kernel.dim() == 0) return {n, bound};
    cur = step.kernel;
  }
  return {std::nullopt, bound};
}

HereditaryCertificate is_hereditary_ideal(const Ideal& j) {
  HereditaryCertificate c;
  c.idempotent = is_idempotent_ideal(j);
  c.ideal_dim = j.space.dim();
  BimoduleResolutionStep step = bimodule_projective_cover(ideal_as_bimodule(j));
  c.cover = step.cover;
  c.cover_dim = step.cover_dim();
  c.kernel_dim = step.kernel.dim();
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    default: return "INCONCLUSIVE";
  }
}

std::string to_string(Conclusion c) {
  return c == Conclusion::Certified ? "SINGULAR_EQUIVALENCE_CERTIFIED" : "NOT_CERTIFIED";
}

namespace {

bool any_positive_degree(const std::vector<Multiplicity>& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] != 0) return true;
  return false;
}

// Rank of B (x)_A B -> B, x (x) y -> x y, with B = A/J on non-pivot coordinates.
std::size_t multiplication_rank(const TensorSpace& t, const Ideal& j) {
  const Algebra& a = *j.algebra;
  const std::vector<std::size_t> keep = j.space.non_pivots();
  auto lift = [&](const Vector& b) {
    Vector x(a.dim());
    for (std::size_t k = 0; k < keep.size(); ++k) x[keep[k]] = b[k];
    return x;
  };
  std::vector<Vector> imgs;
  for (std::size_t v = 0; v + 1 < t.offsets.size(); ++v)
    for (std::size_t s = 0; s < t.right_bases[v].cols(); ++s)
      for (std::size_t u = 0; u < t.left_bases[v].cols(); ++u) {
        Vector p = j.space.reduce(a.multiply(lift(t.right_bases[v].column(s)), lift(t.left_bases[v].column(u))));
        Vector q(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) q[k] = p[keep[k]];
        imgs.push_back(std::move(q));
      }
  return Subspace::span(a.field(), keep.size(), imgs).dim();
}

}  // namespace

HomologicalReport is_homological_ideal(const Ideal& j, std::size_t bound) {
  HomologicalReport r;
  r.bound = bound;
  const AlgebraPtr& a = j.algebra;
  if (j.space.contains(a->unit())) throw ModuleError("is_homological_ideal: ideal is not proper");
  SyzygyClasses left_classes, right_classes;
  const Module b_left = quotient_by_ideal(j, Side::Left);
  const Module b_right = quotient_by_ideal(j, Side::Right);
  const Module j_right = ideal_module(j, Side::Right);

  r.pd_quotient_left = projective_dimension(b_left, bound, &left_classes);
  r.pd_ideal_right = projective_dimension(j_right, bound, &right_classes);
  const bool finite = r.pd_quotient_left.finite() || r.pd_ideal_right.finite();

  r.idempotent = is_idempotent_ideal(j);
  if (!r.idempotent) {
    r.verdict = Verdict::No;
    r.reason = "J^2 != J";
  } else {
    r.tor = tor_sequence(j_right, b_left, bound, &left_classes);
    if (any_positive_degree(r.tor)) {
      r.verdict = Verdict::No;
      r.reason = "Tor_i(J, A/J) != 0 for some 1 <= i <= bound";
    } else if (finite) {
      r.verdict = Verdict::Yes;
      r.reason = "J^2 = J, Tor vanishes through the bound, and a finite projective dimension makes the window conclusive";
    } else {
      r.verdict = Verdict::Inconclusive;
      r.reason = "Tor vanishes through the bound but no finite projective dimension was found";
    }
  }

  TensorSpace bb = tensor_over_algebra(b_right, b_left);
  r.tensor_dim = bb.dim();
  r.multiplication_rank = multiplication_rank(bb, j);
  const bool bijective = r.tensor_dim == r.multiplication_rank && r.multiplication_rank == b_left.dim();
  r.tor_quotient = tor_sequence(b_right, b_left, bound, &left_classes);
  const bool finite_b = r.pd_quotient_left.finite() || projective_dimension(b_right, bound, &right_classes).finite();
  if (!bijective || any_positive_degree(r.tor_quotient))
    r.direct = Verdict::No;
  else
    r.direct = finite_b ? Verdict::Yes : Verdict::Inconclusive;

  if (r.verdict != Verdict::Inconclusive && r.direct != Verdict::Inconclusive) r.oracles_agree = r.verdict == r.direct;
  return r;
}

TheoremReport theorem_hypothesis_check(const Ideal& j, std::size_t bound) {
  TheoremReport t;
  t.homological = is_homological_ideal(j, bound);
  t.hereditary = is_hereditary_ideal(j);
  t.bimodule_pd = bimodule_pd(ideal_as_bimodule(j), bound);
  t.conclusion = t.homological.verdict == Verdict::Yes && t.bimodule_pd.finite() ? Conclusion::Certified
                                                                                 : Conclusion::NotCertified;
  return t;
}

}  // namespace singequiv
