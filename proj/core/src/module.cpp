#include "singequiv/module.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace singequiv {

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

struct Module::Impl {
  AlgebraPtr algebra;
  AlgebraPtr acting;
  Side side = Side::Left;
  std::size_t dim = 0;
  std::vector<Matrix> action;
  std::vector<std::string> labels;

  std::once_flag cover_once;
  std::unique_ptr<CoverData> cover;
};

struct ModuleAccess {
  static Module build(AlgebraPtr algebra, AlgebraPtr acting, Side side, std::vector<Matrix> action,
                      std::vector<std::string> labels) {
    auto impl = std::make_shared<Module::Impl>();
    if (action.size() != algebra->dim()) throw ModuleError("module: need one action matrix per basis element");
    impl->dim = action.empty() ? 0 : action.front().rows();
    for (const auto& m : action)
      if (m.rows() != impl->dim || m.cols() != impl->dim || !(m.field() == algebra->field()))
        throw ModuleError("module: action matrices have inconsistent shape or field");
    if (!labels.empty() && labels.size() != impl->dim) throw ModuleError("module: label count mismatch");
    impl->algebra = std::move(algebra);
    impl->acting = std::move(acting);
    impl->side = side;
    impl->action = std::move(action);
    impl->labels = std::move(labels);
    return Module(std::move(impl));
  }
  static Module build(AlgebraPtr algebra, Side side, std::vector<Matrix> action, std::vector<std::string> labels) {
    AlgebraPtr acting = side == Side::Left ? algebra : algebra->opposite();
    return build(std::move(algebra), std::move(acting), side, std::move(action), std::move(labels));
  }
  // Module of the same kind as `like` (algebra, acting algebra, side).
  static Module like(const Module& like, std::vector<Matrix> action, std::vector<std::string> labels = {}) {
    return build(like.algebra(), like.acting(), like.side(), std::move(action), std::move(labels));
  }
  static void compute_cover(const Module& m, CoverData& out);
  static CoverData& cover_of(const Module& m) {
    std::call_once(m.impl_->cover_once, [&] {
      auto c = std::make_unique<CoverData>();
      compute_cover(m, *c);
      m.impl_->cover = std::move(c);
    });
    return *m.impl_->cover;
  }
};

Module Module::make(AlgebraPtr algebra, Side side, std::vector<Matrix> action, std::vector<std::string> labels) {
  Module m = ModuleAccess::build(std::move(algebra), side, std::move(action), std::move(labels));
  ValidationReport rep = validate(m);
  if (!rep.ok()) throw ModuleError("invalid module: " + rep.summary());
  return m;
}

Module Module::trusted(AlgebraPtr algebra, Side side, std::vector<Matrix> action, std::vector<std::string> labels) {
  return ModuleAccess::build(std::move(algebra), side, std::move(action), std::move(labels));
}

const AlgebraPtr& Module::algebra() const { return impl_->algebra; }
const AlgebraPtr& Module::acting() const { return impl_->acting; }
Side Module::side() const { return impl_->side; }
const Field& Module::field() const { return impl_->algebra->field(); }
std::size_t Module::dim() const { return impl_->dim; }
const Matrix& Module::action(std::size_t i) const { return impl_->action.at(i); }
const std::vector<Matrix>& Module::actions() const { return impl_->action; }
const std::vector<std::string>& Module::labels() const { return impl_->labels; }

Matrix Module::act(const Vector& a) const {
  Matrix out(field(), dim(), dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) out.add_scaled(impl_->action[i], a[i]);
  return out;
}

namespace {

// a * v without materialising the action matrix of a.
Vector act_on(const Module& m, const Vector& a, const Vector& v) {
  Vector out(m.dim());
  const Field& f = m.field();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) axpy(f, out, a[i], m.action(i) * v);
  return out;
}

Matrix columns_of(const Subspace& s) { return s.basis().transpose(); }

// Pivot readout of the columns of m in the rref basis of s (columns must lie in s).
Matrix coords_of_columns(const Subspace& s, const Matrix& m) {
  Matrix out(m.field(), s.dim(), m.cols());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(s.pivots()[r], c);
  return out;
}

Subspace image_of(const Matrix& m) { return Subspace::column_space(m); }

}  // namespace

std::vector<std::size_t> Module::vertex_dims() const {
  std::vector<std::size_t> out;
  for (const auto& e : acting()->idempotents()) out.push_back(rank(act(e)));
  return out;
}

Subspace Module::radical() const {
  std::vector<Matrix> parts;
  for (const auto& g : acting()->generators())
    if (!g.idempotent) parts.push_back(act(g.element));
  if (parts.empty() || dim() == 0) return Subspace(field(), dim());
  return image_of(Matrix::hstack(parts));
}

Module Module::opposite_view() const {
  const Side flipped = side() == Side::Left ? Side::Right : Side::Left;
  // Left A-module = right A^op-module (acting algebra stays A) and vice versa.
  AlgebraPtr alg = algebra()->opposite();
  return ModuleAccess::build(alg, acting(), flipped, actions(), labels());
}

const CoverData& Module::cover() const { return ModuleAccess::cover_of(*this); }
const Module& Module::syzygy() const { return cover().syzygy; }
bool Module::is_projective() const { return cover().kernel.dim() == 0; }

ValidationReport validate(const Module& m) {
  ValidationReport rep;
  const Algebra& b = *m.acting();
  const std::size_t n = m.dim();
  if (!(m.act(b.unit()) == Matrix::identity(m.field(), n))) rep.failures.push_back("unit does not act as identity");
  // Generators generate the algebra, so rho(g b_j) = rho(g) rho(b_j) for all
  // generators g and basis elements b_j implies multiplicativity.
  for (const auto& g : b.generators()) {
    const Matrix lg = b.left_mult_of(g.element);
    const Matrix rg = m.act(g.element);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (!(m.act(lg.column(j)) == rg * m.action(j))) {
        rep.failures.push_back("action is not multiplicative at (" + b.label(j) + ")");
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Covers

namespace {

struct Top {
  std::vector<std::size_t> vertices;
  std::vector<Vector> generators;
};

Top top_generators(const Module& m) {
  Top t;
  Subspace acc = m.radical();
  const Algebra& b = *m.acting();
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    Subspace ev = image_of(m.act(b.idempotent(v)));
    for (std::size_t k = 0; k < ev.dim(); ++k) {
      Vector x = ev.vector(k);
      if (acc.contains(x)) continue;
      acc = acc + Subspace::span(m.field(), m.dim(), {x});
      t.vertices.push_back(v);
      t.generators.push_back(std::move(x));
    }
  }
  return t;
}

// Right inverse of a surjective matrix.
Matrix right_inverse(const Matrix& a) {
  const std::size_t m = a.rows(), p = a.cols();
  RrefResult rr = rref(Matrix::hstack({a, Matrix::identity(a.field(), m)}));
  if (rr.rank != m || (m > 0 && rr.pivots.back() >= p)) throw ModuleError("internal: cover map is not surjective");
  Matrix s(a.field(), p, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t c = 0; c < m; ++c) s(rr.pivots[k], c) = rr.reduced(k, p + c);
  return s;
}

std::vector<Matrix> block_diagonal(const Field& f, const std::vector<const std::vector<Matrix>*>& blocks, std::size_t d) {
  std::size_t total = 0;
  for (const auto* b : blocks) total += b->empty() ? 0 : b->front().rows();
  std::vector<Matrix> out(d, Matrix(f, total, total));
  std::size_t off = 0;
  for (const auto* b : blocks) {
    const std::size_t k = b->empty() ? 0 : b->front().rows();
    for (std::size_t i = 0; i < d; ++i) out[i].set_block(off, off, (*b)[i]);
    off += k;
  }
  return out;
}

}  // namespace

void ModuleAccess::compute_cover(const Module& m, CoverData& c) {
  const Algebra& b = *m.acting();
  const Field& f = m.field();
  Top top = top_generators(m);
  c.vertices = top.vertices;
  c.generators = top.generators;
  c.offsets = {0};
  std::vector<const std::vector<Matrix>*> blocks;
  for (std::size_t v : c.vertices) {
    c.offsets.push_back(c.offsets.back() + b.projective_space(v).dim());
    blocks.push_back(&b.projective_action(v));
  }
  const std::size_t pdim = c.offsets.back();
  c.projective = like(m, block_diagonal(f, blocks, b.dim()));

  c.epi = Matrix(f, m.dim(), pdim);
  for (std::size_t j = 0; j < c.vertices.size(); ++j) {
    const Subspace& ps = b.projective_space(c.vertices[j]);
    for (std::size_t s = 0; s < ps.dim(); ++s) c.epi.set_column(c.offsets[j] + s, act_on(m, ps.vector(s), c.generators[j]));
  }
  c.section = right_inverse(c.epi);
  c.kernel = kernel(c.epi);
  c.syzygy = submodule(c.projective, c.kernel);
}

std::vector<std::size_t> top_multiplicities(const Module& m) {
  std::vector<std::size_t> out(m.acting()->vertex_count(), 0);
  for (std::size_t v : m.cover().vertices) ++out[v];
  return out;
}

// ---------------------------------------------------------------------------
// Standard modules

Module submodule(const Module& m, const Subspace& space) {
  const Matrix basis = columns_of(space);
  std::vector<Matrix> act;
  act.reserve(m.actions().size());
  for (const auto& a : m.actions()) act.push_back(coords_of_columns(space, a * basis));
  return ModuleAccess::like(m, std::move(act));
}

Module quotient_module(const Module& m, const Subspace& space) {
  const std::vector<std::size_t> keep = space.non_pivots();
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) {
    Matrix q(m.field(), keep.size(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
      Vector img = space.reduce(a.column(keep[c]));
      for (std::size_t r = 0; r < keep.size(); ++r) q(r, c) = img[keep[r]];
    }
    act.push_back(std::move(q));
  }
  std::vector<std::string> labels;
  if (!m.labels().empty())
    for (std::size_t k : keep) labels.push_back(m.labels()[k]);
  return ModuleAccess::like(m, std::move(act), std::move(labels));
}

Module simple(const AlgebraPtr& a, std::size_t v, Side side) {
  if (v >= a->vertex_count()) throw ModuleError("simple: vertex out of range");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix m(a->field(), 1, 1);
    m(0, 0) = a->top_map()(v, i);
    act.push_back(std::move(m));
  }
  return Module::trusted(a, side, std::move(act), {"s_" + a->vertex_names()[v]});
}

namespace {

std::vector<std::string> space_labels(const Algebra& a, const Subspace& s) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vector v = s.vector(k);
    std::size_t nz = 0;
    for (const auto& x : v) nz += sgn(x) != 0;
    out.push_back(nz == 1 ? a.label(s.pivots()[k]) : "p" + std::to_string(k));
  }
  return out;
}

}  // namespace

Module projective(const AlgebraPtr& a, std::size_t v, Side side) {
  if (v >= a->vertex_count()) throw ModuleError("projective: vertex out of range");
  const Algebra& b = side == Side::Left ? *a : *a->opposite();
  return Module::trusted(a, side, b.projective_action(v), space_labels(b, b.projective_space(v)));
}

Module injective(const AlgebraPtr& a, std::size_t v, Side side) {
  return dual(projective(a, v, side == Side::Left ? Side::Right : Side::Left));
}

Module regular(const AlgebraPtr& a, Side side) {
  return Module::trusted(a, side, side == Side::Left ? a->left_mults() : a->right_mults(), a->labels());
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw ModuleError("direct_sum: no summands");
  std::vector<const std::vector<Matrix>*> blocks;
  std::vector<std::string> labels;
  bool labelled = true;
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), parts.front().algebra()) || p.side() != parts.front().side())
      throw ModuleError("direct_sum: summands over different algebras or sides");
    blocks.push_back(&p.actions());
    labelled = labelled && p.labels().size() == p.dim();
    for (const auto& l : p.labels()) labels.push_back(l);
  }
  if (!labelled) labels.clear();
  return ModuleAccess::like(parts.front(), block_diagonal(parts.front().field(), blocks, parts.front().algebra()->dim()),
                            std::move(labels));
}

Module free_module(const AlgebraPtr& a, const std::vector<std::size_t>& mult, Side side) {
  std::vector<Module> parts;
  for (std::size_t v = 0; v < mult.size(); ++v)
    for (std::size_t k = 0; k < mult[v]; ++k) parts.push_back(projective(a, v, side));
  if (parts.empty()) return Module::trusted(a, side, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0)));
  return direct_sum(parts);
}

Module quotient_by_ideal(const Ideal& i, Side side) { return quotient_module(regular(i.algebra, side), i.space); }
Module ideal_module(const Ideal& i, Side side) { return submodule(regular(i.algebra, side), i.space); }

Module dual(const Module& m) {
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) act.push_back(a.transpose());
  std::vector<std::string> labels;
  for (const auto& l : m.labels()) labels.push_back(l + "*");
  return Module::trusted(m.algebra(), m.side() == Side::Left ? Side::Right : Side::Left, std::move(act), std::move(labels));
}

Module restrict_scalars(const Module& m, const AlgebraMorphism& phi) {
  if (!same_algebra(phi.target, m.algebra())) throw ModuleError("restrict_scalars: morphism target is not the module's algebra");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < phi.source->dim(); ++i) act.push_back(m.act(phi.matrix.column(i)));
  return Module::make(phi.source, m.side(), std::move(act), m.labels());
}

// ---------------------------------------------------------------------------
// Hom

namespace {

void require_compatible(const Module& m, const Module& n, const char* what) {
  if (m.side() != n.side() || !same_algebra(m.acting(), n.acting()))
    throw ModuleError(std::string(what) + ": modules over different algebras or sides");
}

// Element of the acting algebra carried by block j of a vector of P.
Vector block_element(const Algebra& b, const CoverData& c, std::size_t j, const Vector& p) {
  const Subspace& ps = b.projective_space(c.vertices[j]);
  Vector out(b.dim());
  for (std::size_t s = 0; s < ps.dim(); ++s) {
    const Scalar& x = p[c.offsets[j] + s];
    if (sgn(x) != 0) axpy(b.field(), out, x, ps.vector(s));
  }
  return out;
}

}  // namespace

HomSpace hom_space(const Module& m, const Module& n) {
  require_compatible(m, n, "hom_space");
  HomSpace h{m, n, {}};
  const Algebra& b = *m.acting();
  const Field& f = m.field();
  const CoverData& c = m.cover();
  const std::size_t g = c.vertices.size();
  if (g == 0 || n.dim() == 0) return h;

  std::vector<Matrix> targets;  // basis of e_{v_j} N as columns
  std::vector<std::size_t> toff{0};
  for (std::size_t j = 0; j < g; ++j) {
    targets.push_back(columns_of(image_of(n.act(b.idempotent(c.vertices[j])))));
    toff.push_back(toff.back() + targets.back().cols());
  }
  const std::size_t unknowns = toff.back();
  if (unknowns == 0) return h;

  // One block of equations per generator of the syzygy of M.
  const Module& k = c.syzygy;
  Top kt = top_generators(k);
  Matrix eq(f, kt.generators.size() * n.dim(), unknowns);
  const Matrix kb = columns_of(c.kernel);
  for (std::size_t r = 0; r < kt.generators.size(); ++r) {
    const Vector kp = kb * kt.generators[r];
    for (std::size_t j = 0; j < g; ++j) {
      Vector a = block_element(b, c, j, kp);
      if (is_zero(a)) continue;
      eq.set_block(r * n.dim(), toff[j], n.act(a) * targets[j]);
    }
  }
  Subspace sol = kernel(eq);
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    const Vector t = sol.vector(s);
    Vector vals(g * n.dim());
    for (std::size_t j = 0; j < g; ++j) {
      Vector tj(t.begin() + static_cast<std::ptrdiff_t>(toff[j]), t.begin() + static_cast<std::ptrdiff_t>(toff[j + 1]));
      Vector y = targets[j] * tj;
      std::copy(y.begin(), y.end(), vals.begin() + static_cast<std::ptrdiff_t>(j * n.dim()));
    }
    h.basis.push_back(std::move(vals));
  }
  return h;
}

Matrix hom_matrix(const Module& m, const Module& n, const Vector& vals) {
  const Algebra& b = *m.acting();
  const CoverData& c = m.cover();
  Matrix fp(m.field(), n.dim(), c.offsets.back());
  for (std::size_t j = 0; j < c.vertices.size(); ++j) {
    Vector y(vals.begin() + static_cast<std::ptrdiff_t>(j * n.dim()),
             vals.begin() + static_cast<std::ptrdiff_t>((j + 1) * n.dim()));
    const Subspace& ps = b.projective_space(c.vertices[j]);
    for (std::size_t s = 0; s < ps.dim(); ++s) fp.set_column(c.offsets[j] + s, act_on(n, ps.vector(s), y));
  }
  return fp * c.section;
}

Vector generator_values(const Module& m, const Matrix& f) {
  const CoverData& c = m.cover();
  Vector out;
  out.reserve(c.generators.size() * f.rows());
  for (const auto& g : c.generators) {
    Vector y = f * g;
    out.insert(out.end(), y.begin(), y.end());
  }
  return out;
}

bool is_module_hom(const Module& m, const Module& n, const Matrix& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (const auto& g : m.acting()->generators())
    if (!(f * m.act(g.element) == n.act(g.element) * f)) return false;
  return true;
}

StableHom stable_hom(const Module& m, const Module& n) {
  StableHom out;
  out.hom = hom_space(m, n);
  const std::size_t amb = m.cover().vertices.size() * n.dim();
  const CoverData& cn = n.cover();
  HomSpace through = hom_space(m, cn.projective);
  const std::size_t pd = cn.projective.dim();
  std::vector<Vector> comp;
  for (const auto& h : through.basis) {
    Vector vals;
    for (std::size_t j = 0; j < m.cover().vertices.size(); ++j) {
      Vector seg(h.begin() + static_cast<std::ptrdiff_t>(j * pd), h.begin() + static_cast<std::ptrdiff_t>((j + 1) * pd));
      Vector y = cn.epi * seg;
      vals.insert(vals.end(), y.begin(), y.end());
    }
    comp.push_back(std::move(vals));
  }
  out.projective_part = Subspace::span(m.field(), amb, comp);
  Subspace acc = out.projective_part;
  for (const auto& h : out.hom.basis) {
    if (acc.contains(h)) continue;
    acc = acc + Subspace::span(m.field(), amb, {h});
    out.representatives.push_back(h);
  }
  return out;
}

Matrix omega_map(const Module& m, const Module& n, const Matrix& f) {
  require_compatible(m, n, "omega_map");
  const Algebra& b = *m.acting();
  const CoverData& cm = m.cover();
  const CoverData& cn = n.cover();
  const Module& pn = cn.projective;
  std::vector<Vector> lifts;
  for (std::size_t j = 0; j < cm.vertices.size(); ++j) {
    const Vector y = f * cm.generators[j];
    Vector p = act_on(pn, b.idempotent(cm.vertices[j]), cn.section * y);
    if (!(cn.epi * p == y)) throw ModuleError("internal: lift through the cover failed");
    lifts.push_back(std::move(p));
  }
  Matrix lift(m.field(), pn.dim(), cm.offsets.back());
  for (std::size_t j = 0; j < cm.vertices.size(); ++j) {
    const Subspace& ps = b.projective_space(cm.vertices[j]);
    for (std::size_t s = 0; s < ps.dim(); ++s) lift.set_column(cm.offsets[j] + s, act_on(pn, ps.vector(s), lifts[j]));
  }
  const Matrix img = lift * columns_of(cm.kernel);
  for (std::size_t c = 0; c < img.cols(); ++c)
    if (!cn.kernel.contains(img.column(c))) throw ModuleError("internal: lifted map does not preserve syzygies");
  return coords_of_columns(cn.kernel, img);
}

// ---------------------------------------------------------------------------
// Resolutions

Resolution min_resolution(const Module& m, std::size_t n) {
  Resolution r;
  r.resolved = m;
  Module cur = m;
  Matrix prev_embed;
  for (std::size_t k = 0; k <= n; ++k) {
    const CoverData& c = cur.cover();
    std::vector<std::size_t> mult(cur.acting()->vertex_count(), 0);
    for (std::size_t v : c.vertices) ++mult[v];
    r.terms.push_back(mult);
    r.modules.push_back(c.projective);
    if (k == 0)
      r.augmentation = c.epi;
    else
      r.differentials.push_back(prev_embed * c.epi);
    prev_embed = columns_of(c.kernel);
    Module next = c.syzygy;
    if (next.dim() == 0) {
      r.terminated = true;
      break;
    }
    cur = next;
  }
  return r;
}

ValidationReport check_resolution(const Resolution& r) {
  ValidationReport rep;
  const std::size_t len = r.modules.size();
  if (rank(r.augmentation) != r.resolved.dim()) rep.failures.push_back("augmentation is not surjective");
  auto out_map = [&](std::size_t k) -> const Matrix& { return k == 0 ? r.augmentation : r.differentials[k - 1]; };
  for (std::size_t k = 1; k < len; ++k) {
    const Matrix& d = r.differentials[k - 1];
    if (!(out_map(k - 1) * d).is_zero()) rep.failures.push_back("d^2 != 0 at degree " + std::to_string(k));
    const Subspace rad = r.modules[k - 1].radical();
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (!rad.contains(d.column(c))) {
        rep.failures.push_back("image of d_" + std::to_string(k) + " leaves the radical");
        break;
      }
  }
  // Exactness at P_k for k < len - 1, and at the last term when the
  // resolution terminated (its kernel is then zero).
  for (std::size_t k = 0; k + 1 < len; ++k) {
    const std::size_t ker = r.modules[k].dim() - rank(out_map(k));
    if (ker != rank(r.differentials[k])) rep.failures.push_back("not exact at degree " + std::to_string(k));
  }
  if (len > 0 && r.terminated && rank(out_map(len - 1)) != r.modules[len - 1].dim())
    rep.failures.push_back("last map of a terminated resolution is not injective");
  return rep;
}

std::string Bounded::str() const { return value ? std::to_string(*value) : ">= " + std::to_string(bound + 1); }

// ---------------------------------------------------------------------------
// Syzygy classes

SyzygyClasses::SyzygyClasses(std::uint64_t seed) : rng_(seed) {}

namespace {

std::size_t find_root(std::vector<std::size_t>& p, std::size_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

Module restrict_to(const Module& m, const std::vector<std::size_t>& idx) {
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) {
    Matrix s(m.field(), idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) s(r, c) = a(idx[r], idx[c]);
    act.push_back(std::move(s));
  }
  return ModuleAccess::like(m, std::move(act));
}

bool fits(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  for (std::size_t v = 0; v < small.size(); ++v)
    if (small[v] > big[v]) return false;
  return true;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int> d(-3, 3);
    return f.from_integer(d(rng));
  }
  std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
  return f.from_integer(d(rng));
}

Vector random_combination(const Field& f, const std::vector<Vector>& basis, std::size_t len, std::mt19937_64& rng) {
  Vector out(len);
  for (const auto& b : basis) axpy(f, out, random_scalar(f, rng), b);
  return out;
}

}  // namespace

std::optional<Module> SyzygyClasses::split_off(const Module& x, const Module& c) {
  if (x.actions() == c.actions()) return ModuleAccess::like(x, std::vector<Matrix>(x.actions().size(), Matrix(x.field(), 0, 0)));
  HomSpace into = hom_space(c, x);
  if (into.dim() == 0) return std::nullopt;
  HomSpace back = hom_space(x, c);
  if (back.dim() == 0) return std::nullopt;
  const Field& f = x.field();
  const int tries = f.is_rational() ? 4 : 12;
  for (int t = 0; t < tries; ++t) {
    Matrix fm = hom_matrix(c, x, random_combination(f, into.basis, c.cover().vertices.size() * x.dim(), rng_));
    Matrix gm = hom_matrix(x, c, random_combination(f, back.basis, x.cover().vertices.size() * c.dim(), rng_));
    if (rank(gm * fm) != c.dim()) continue;
    // X = im f (+) ker g, with im f isomorphic to C.
    return submodule(x, kernel(gm));
  }
  return std::nullopt;
}

std::size_t SyzygyClasses::intern(const Module& x) {
  classes_.push_back({x, x.vertex_dims(), std::nullopt});
  return classes_.size() - 1;
}

std::vector<ClassCount> SyzygyClasses::decompose(const Module& m) {
  std::map<std::size_t, Multiplicity> counts;
  const std::size_t n = m.dim();
  if (n > 0) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& a : m.actions())
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(a(r, c)) != 0) parent[find_root(parent, r)] = find_root(parent, c);
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < n; ++i) comps[find_root(parent, i)].push_back(i);

    for (const auto& [root, idx] : comps) {
      Module rest = restrict_to(m, idx);
      std::vector<std::size_t> vd = rest.vertex_dims();
      for (std::size_t cls = 0; cls < classes_.size() && rest.dim() > 0; ++cls) {
        while (rest.dim() > 0 && classes_[cls].module.dim() <= rest.dim() && fits(classes_[cls].vdims, vd)) {
          auto comp = split_off(rest, classes_[cls].module);
          if (!comp) break;
          counts[cls] += 1;
          rest = *comp;
          vd = rest.vertex_dims();
        }
      }
      if (rest.dim() > 0) counts[intern(rest)] += 1;
    }
  }
  std::vector<ClassCount> out;
  for (auto& [cls, mult] : counts) out.push_back({cls, mult});
  return out;
}

const std::vector<ClassCount>& SyzygyClasses::omega(std::size_t cls) {
  if (!classes_.at(cls).omega) {
    Module syz = classes_[cls].module.syzygy();
    auto parts = decompose(syz);
    classes_[cls].omega = std::move(parts);
  }
  return *classes_[cls].omega;
}

std::vector<ClassCount> SyzygyClasses::step(const std::vector<ClassCount>& combo) {
  std::map<std::size_t, Multiplicity> acc;
  for (const auto& [cls, mult] : combo) {
    const std::vector<ClassCount> om = omega(cls);  // copy: omega() may grow classes_
    for (const auto& [c2, m2] : om) acc[c2] += mult * m2;
  }
  std::vector<ClassCount> out;
  for (auto& [cls, mult] : acc) out.push_back({cls, mult});
  return out;
}

Multiplicity SyzygyClasses::dim(const std::vector<ClassCount>& combo) const {
  Multiplicity d = 0;
  for (const auto& [cls, mult] : combo) d += mult * static_cast<unsigned long>(classes_[cls].module.dim());
  return d;
}

Bounded projective_dimension(const Module& m, std::size_t bound, SyzygyClasses* classes) {
  SyzygyClasses local;
  SyzygyClasses& sc = classes ? *classes : local;
  if (m.dim() == 0) return {0, bound};
  if (m.is_projective()) return {0, bound};
  std::vector<ClassCount> combo = sc.decompose(m.syzygy());
  for (std::size_t n = 1; n <= bound; ++n) {
    std::vector<ClassCount> next = sc.step(combo);
    if (next.empty()) return {n, bound};
    combo = std::move(next);
  }
  return {std::nullopt, bound};
}

Bounded injective_dimension(const Module& m, std::size_t bound, SyzygyClasses* classes) {
  return projective_dimension(dual(m), bound, classes);
}

std::vector<Multiplicity> syzygy_dims(const Module& m, std::size_t n, SyzygyClasses* classes) {
  SyzygyClasses local;
  SyzygyClasses& sc = classes ? *classes : local;
  std::vector<Multiplicity> out{Multiplicity(static_cast<unsigned long>(m.dim()))};
  if (n == 0) return out;
  std::vector<ClassCount> combo = sc.decompose(m.syzygy());
  out.push_back(sc.dim(combo));
  for (std::size_t k = 2; k <= n; ++k) {
    combo = sc.step(combo);
    out.push_back(sc.dim(combo));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor products and Tor

Vector TensorSpace::pure(std::size_t v, const Vector& x, const Vector& y) const {
  const Subspace& xs = right_spaces[v];
  Vector out(ambient);
  const std::size_t a = right_bases[v].cols(), b = left_bases[v].cols();
  if (a == 0 || b == 0) return out;
  // Coordinates by pivot readout in the stored rref bases.
  Vector xc(a), yc(b);
  for (std::size_t s = 0; s < a; ++s) xc[s] = x[xs.pivots()[s]];
  for (std::size_t t = 0; t < b; ++t) yc[t] = y[left_spaces[v].pivots()[t]];
  const Field& f = left.field();
  for (std::size_t s = 0; s < a; ++s) {
    if (sgn(xc[s]) == 0) continue;
    for (std::size_t t = 0; t < b; ++t)
      if (sgn(yc[t]) != 0) out[offsets[v] + s * b + t] = f.mul(xc[s], yc[t]);
  }
  return out;
}

TensorSpace tensor_over_algebra(const Module& x, const Module& y) {
  if (x.side() != Side::Right || y.side() != Side::Left) throw ModuleError("tensor: need a right and a left module");
  if (!same_algebra(x.algebra(), y.algebra())) throw ModuleError("tensor: modules over different algebras");
  TensorSpace t;
  t.right = x;
  t.left = y;
  const Algebra& a = *y.acting();
  const Field& f = y.field();
  t.offsets.push_back(0);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    Subspace xs = image_of(x.act(a.idempotent(v)));
    t.right_bases.push_back(columns_of(xs));
    t.right_spaces.push_back(xs);
    Subspace ys = image_of(y.act(a.idempotent(v)));
    t.left_bases.push_back(columns_of(ys));
    t.left_spaces.push_back(ys);
    t.offsets.push_back(t.offsets.back() + t.right_bases.back().cols() * t.left_bases.back().cols());
  }
  t.ambient = t.offsets.back();
  std::vector<Vector> rel;
  for (const auto& g : a.generators()) {
    if (g.idempotent) continue;
    // g = e_w g e_v: x in X e_w, y in e_v Y.
    const Matrix xg = x.act(g.element);
    const Matrix gy = y.act(g.element);
    const Matrix& xb = t.right_bases[g.target];
    const Matrix& yb = t.left_bases[g.source];
    for (std::size_t s = 0; s < xb.cols(); ++s) {
      const Vector xv = xb.column(s);
      const Vector xgv = xg * xv;
      for (std::size_t u = 0; u < yb.cols(); ++u) {
        const Vector yv = yb.column(u);
        Vector r = t.pure(g.source, xgv, yv);
        axpy(f, r, f.from_integer(-1), t.pure(g.target, xv, gy * yv));
        if (!is_zero(r)) rel.push_back(std::move(r));
      }
    }
  }
  t.relations = Subspace::span(f, t.ambient, rel);
  return t;
}

std::size_t induced_rank(const TensorSpace& from, const TensorSpace& to, const Matrix& fmap) {
  std::vector<Vector> imgs;
  for (std::size_t v = 0; v + 1 < from.offsets.size(); ++v) {
    const Matrix& xb = from.right_bases[v];
    const Matrix& yb = from.left_bases[v];
    for (std::size_t s = 0; s < xb.cols(); ++s)
      for (std::size_t u = 0; u < yb.cols(); ++u) imgs.push_back(to.pure(v, xb.column(s), fmap * yb.column(u)));
  }
  Subspace im = Subspace::span(to.left.field(), to.ambient, imgs) + to.relations;
  return im.dim() - to.relations.dim();
}

std::size_t tor_via_resolution(const Module& x, const Module& y, std::size_t i) {
  Resolution r = min_resolution(y, i + 1);
  if (i >= r.modules.size()) return 0;
  TensorSpace ti = tensor_over_algebra(x, r.modules[i]);
  std::size_t rank_out = 0;
  if (i > 0) {
    TensorSpace tprev = tensor_over_algebra(x, r.modules[i - 1]);
    rank_out = induced_rank(ti, tprev, r.differentials[i - 1]);
  }
  std::size_t rank_in = 0;
  if (i + 1 < r.modules.size()) {
    TensorSpace tnext = tensor_over_algebra(x, r.modules[i + 1]);
    rank_in = induced_rank(tnext, ti, r.differentials[i]);
  }
  return ti.dim() - rank_out - rank_in;
}

std::vector<Multiplicity> tor_sequence(const Module& x, const Module& y, std::size_t max_i, SyzygyClasses* classes) {
  SyzygyClasses local;
  SyzygyClasses& sc = classes ? *classes : local;
  std::vector<Multiplicity> out{Multiplicity(static_cast<unsigned long>(tensor_over_algebra(x, y).dim()))};
  if (max_i == 0) return out;
  std::map<std::size_t, Multiplicity> tor1;
  auto tor1_of = [&](std::size_t cls) {
    auto it = tor1.find(cls);
    if (it != tor1.end()) return it->second;
    const Module c = sc.module(cls);
    const CoverData& cov = c.cover();
    std::size_t value = 0;
    if (cov.kernel.dim() > 0) {
      TensorSpace tk = tensor_over_algebra(x, cov.syzygy);
      TensorSpace tp = tensor_over_algebra(x, cov.projective);
      value = tk.dim() - induced_rank(tk, tp, columns_of(cov.kernel));
    }
    return tor1[cls] = Multiplicity(static_cast<unsigned long>(value));
  };
  std::vector<ClassCount> combo = sc.decompose(y);
  for (std::size_t i = 1; i <= max_i; ++i) {
    Multiplicity total = 0;
    for (const auto& [cls, mult] : combo) total += mult * tor1_of(cls);
    out.push_back(total);
    if (i < max_i) combo = sc.step(combo);
  }
  return out;
}

Multiplicity tor(const Module& x, const Module& y, std::size_t i) { return tor_sequence(x, y, i).back(); }

// ---------------------------------------------------------------------------

std::vector<std::size_t> radical_layers(const Module& m) {
  std::vector<std::size_t> out;
  std::vector<Matrix> arrows;
  for (const auto& g : m.acting()->generators())
    if (!g.idempotent) arrows.push_back(m.act(g.element));
  Subspace cur = Subspace::full(m.field(), m.dim());
  while (cur.dim() > 0) {
    std::vector<Vector> next;
    const Matrix cb = columns_of(cur);
    for (const auto& a : arrows) {
      const Matrix img = a * cb;
      for (std::size_t c = 0; c < img.cols(); ++c) next.push_back(img.column(c));
    }
    Subspace nxt = Subspace::span(m.field(), m.dim(), next);
    out.push_back(cur.dim() - nxt.dim());
    cur = std::move(nxt);
  }
  return out;
}

bool is_nakayama(const AlgebraPtr& a) {
  for (Side side : {Side::Left, Side::Right})
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
      for (std::size_t layer : radical_layers(projective(a, v, side)))
        if (layer > 1) return false;
  return true;
}

bool is_selfinjective(const AlgebraPtr& a, std::size_t bound) {
  for (Side side : {Side::Left, Side::Right}) {
    Bounded d = injective_dimension(regular(a, side), bound);
    if (!d.finite() || *d.value != 0) return false;
  }
  return true;
}

}  // namespace singequiv
