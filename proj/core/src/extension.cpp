#include "singequiv/extension.hpp"

#include <set>

namespace singequiv {

namespace {

Subspace column_span(const Matrix& m) {
  return m.cols() == 0 ? Subspace(m.field(), m.rows()) : Subspace::column_space(m);
}

bool all_zero(const Module& x, const Matrix& phi) {
  for (std::size_t c = 0; c < phi.cols(); ++c)
    if (!x.act(phi.column(c)).is_zero()) return false;
  return true;
}

std::vector<std::string> unique_labels(const std::vector<std::string>& given, std::size_t n, const std::string& prefix,
                                       std::set<std::string>& taken) {
  std::vector<std::string> out;
  bool usable = given.size() == n;
  for (std::size_t k = 0; usable && k < n; ++k) usable = !given[k].empty() && !taken.count(given[k]);
  if (usable) usable = std::set<std::string>(given.begin(), given.end()).size() == n;
  for (std::size_t k = 0; k < n; ++k) {
    std::string l = usable ? given[k] : prefix + std::to_string(k);
    while (taken.count(l)) l += "'";
    taken.insert(l);
    out.push_back(l);
  }
  return out;
}

// Parent labels for a subspace spanned by basis vectors; generic names otherwise.
std::vector<std::string> subspace_labels(const Algebra& g, const Subspace& s, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vector v = s.vector(k);
    std::size_t nonzero = 0;
    for (const auto& x : v)
      if (sgn(x) != 0) ++nonzero;
    out.push_back(nonzero == 1 ? g.label(s.pivots()[k]) : prefix + std::to_string(k));
  }
  return out;
}

struct Split {
  ExtensionData data;
  Corner corner;
};

Split split_at(const AlgebraPtr& g, std::size_t v) {
  if (v >= g->vertex_count()) throw PeelError("peel: vertex index out of range");
  const std::string& name = g->vertex_names()[v];
  if (g->vertex_count() < 2) throw PeelError("peel at " + name + ": it is the only vertex, the quotient would be zero");
  const Vector& e = g->idempotent(v);
  const Matrix le = g->left_mult_of(e), re = g->right_mult_of(e);
  const std::size_t corner_dim = rank(le * re);
  if (corner_dim != 1)
    throw PeelError("peel at " + name + ": corner condition fails (dim e G e = " + std::to_string(corner_dim) + ")");

  std::vector<std::size_t> others;
  for (std::size_t u = 0; u < g->vertex_count(); ++u)
    if (u != v) others.push_back(u);
  Split out;
  out.corner = corner(g, others);
  const AlgebraPtr& a = out.corner.algebra;
  const Vector f = sub(g->field(), g->unit(), e);
  const Matrix lf = g->left_mult_of(f), rf = g->right_mult_of(f);
  const Subspace ms = column_span(lf * re), ns = column_span(le * rf);

  auto to_a = [&](const Vector& y) {
    auto x = solve(out.corner.inclusion, y);
    if (!x) throw PeelError("internal: product outside the corner");
    return *x;
  };
  std::vector<Matrix> mact, nact;
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const Vector x = out.corner.inclusion.column(b);
    const Matrix lx = g->left_mult_of(x), rx = g->right_mult_of(x);
    Matrix mm(g->field(), ms.dim(), ms.dim()), nm(g->field(), ns.dim(), ns.dim());
    for (std::size_t s = 0; s < ms.dim(); ++s) mm.set_column(s, ms.coordinates(lx * ms.vector(s)));
    for (std::size_t t = 0; t < ns.dim(); ++t) nm.set_column(t, ns.coordinates(rx * ns.vector(t)));
    mact.push_back(std::move(mm));
    nact.push_back(std::move(nm));
  }
  out.data.a = a;
  out.data.m = Module::make(a, Side::Left, std::move(mact), subspace_labels(*g, ms, "m"));
  out.data.n = Module::make(a, Side::Right, std::move(nact), subspace_labels(*g, ns, "n"));
  out.data.phi = Matrix(g->field(), a->dim(), ms.dim() * ns.dim());
  for (std::size_t s = 0; s < ms.dim(); ++s)
    for (std::size_t t = 0; t < ns.dim(); ++t)
      out.data.phi.set_column(s * ns.dim() + t, to_a(g->multiply(ms.vector(s), ns.vector(t))));
  return out;
}

}  // namespace

ValidationReport validate_extension(const ExtensionData& d) {
  ValidationReport rep;
  if (!d.a) {
    rep.failures.push_back("no algebra");
    return rep;
  }
  if (d.m.empty() || d.m.side() != Side::Left) rep.failures.push_back("M is not a left module");
  if (d.n.empty() || d.n.side() != Side::Right) rep.failures.push_back("N is not a right module");
  if (!rep.ok()) return rep;
  if (!same_algebra(d.m.algebra(), d.a) || !same_algebra(d.n.algebra(), d.a))
    rep.failures.push_back("M or N is a module over a different algebra");
  const Algebra& a = *d.a;
  const std::size_t dm = d.m.dim(), dn = d.n.dim();
  if (d.phi.rows() != a.dim() || d.phi.cols() != dm * dn) rep.failures.push_back("phi has the wrong shape");
  if (!rep.ok()) return rep;

  const Field& f = a.field();
  const Matrix im = Matrix::identity(f, dm), in = Matrix::identity(f, dn);
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (!(d.phi * kronecker(d.m.action(b), in) == a.left_mult(b) * d.phi)) {
      rep.failures.push_back("phi is not left A-linear (fails for " + a.label(b) + ")");
      break;
    }
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (!(d.phi * kronecker(im, d.n.action(b)) == a.right_mult(b) * d.phi)) {
      rep.failures.push_back("phi is not right A-linear (fails for " + a.label(b) + ")");
      break;
    }
  const std::size_t r = rank(d.phi);
  if (r != dm * dn)
    rep.failures.push_back("phi is not injective (rank " + std::to_string(r) + " < " + std::to_string(dm * dn) + ")");
  if (!all_zero(d.m, d.phi)) rep.failures.push_back("Im phi does not annihilate M");
  if (!all_zero(d.n, d.phi)) rep.failures.push_back("N does not annihilate Im phi");
  const Subspace image = column_span(d.phi);
  if (!is_two_sided_ideal(a, image)) rep.failures.push_back("Im phi is not an ideal");
  if (!a.radical().contains(image)) rep.failures.push_back("Im phi is not inside rad A");
  if (product_space(a, image, image).dim() != 0) rep.failures.push_back("(Im phi)^2 != 0");
  return rep;
}

GammaAlgebra build_gamma(const ExtensionData& d, const std::string& vertex_name, bool require_injective) {
  ValidationReport rep = validate_extension(d);
  if (!require_injective)
    std::erase_if(rep.failures, [](const std::string& s) { return s.rfind("phi is not injective", 0) == 0; });
  if (!rep.ok()) throw AlgebraError("build_gamma: invalid extension data: " + rep.summary());

  const Algebra& a = *d.a;
  const Field& f = a.field();
  const std::size_t da = a.dim(), dm = d.m.dim(), dn = d.n.dim();
  const std::size_t om = da, on = da + dm, oe = da + dm + dn, total = oe + 1;

  for (const auto& v : a.vertex_names())
    if (v == vertex_name) throw AlgebraError("build_gamma: vertex name '" + vertex_name + "' already used");

  AlgebraData data;
  data.field = f;
  std::set<std::string> taken(a.labels().begin(), a.labels().end());
  taken.insert("e_" + vertex_name);
  data.labels = a.labels();
  for (const auto& l : unique_labels(d.m.labels(), dm, "m", taken)) data.labels.push_back(l);
  for (const auto& l : unique_labels(d.n.labels(), dn, "n", taken)) data.labels.push_back(l);
  data.labels.push_back("e_" + vertex_name);

  auto place = [&](Vector& out, std::size_t offset, const Vector& v) {
    for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
  };
  // b_i * b_j
  auto product = [&](std::size_t i, std::size_t j) {
    Vector out(total);
    if (i < om && j < om) place(out, 0, a.left_mult(i).column(j));
    else if (i < om && j < on) place(out, om, d.m.action(i).column(j - om));
    else if (i >= om && i < on && j >= on && j < oe) place(out, 0, d.phi.column((i - om) * dn + (j - on)));
    else if (i >= om && i < on && j == oe) out[i] = 1;
    else if (i >= on && i < oe && j < om) place(out, on, d.n.action(j).column(i - on));
    else if (i == oe && j >= on && j < oe) out[j] = 1;
    else if (i == oe && j == oe) out[oe] = 1;
    return out;
  };
  for (std::size_t i = 0; i < total; ++i) {
    Matrix m(f, total, total);
    for (std::size_t j = 0; j < total; ++j) m.set_column(j, product(i, j));
    data.left_mult.push_back(std::move(m));
  }

  Matrix ea(f, total, da), em(f, total, dm), en(f, total, dn);
  for (std::size_t k = 0; k < da; ++k) ea(k, k) = 1;
  for (std::size_t k = 0; k < dm; ++k) em(om + k, k) = 1;
  for (std::size_t k = 0; k < dn; ++k) en(on + k, k) = 1;

  data.unit = ea * a.unit();
  data.unit[oe] = 1;
  for (const auto& e : a.idempotents()) data.idempotents.push_back(ea * e);
  data.idempotents.push_back(unit_vector(total, oe));
  data.vertex_names = a.vertex_names();
  data.vertex_names.push_back(vertex_name);
  std::vector<Vector> rad;
  for (std::size_t k = 0; k < a.radical().dim(); ++k) rad.push_back(ea * a.radical().vector(k));
  for (std::size_t k = om; k < oe; ++k) rad.push_back(unit_vector(total, k));
  data.radical = Subspace::span(f, total, rad);

  GammaAlgebra out;
  out.algebra = Algebra::make(std::move(data));
  out.vertex = a.vertex_count();
  out.embed_a = std::move(ea);
  out.embed_m = std::move(em);
  out.embed_n = std::move(en);
  return out;
}

ExtensionData extension_at(const AlgebraPtr& g, std::size_t v) { return split_at(g, v).data; }

PeelCertificate gamma_certificates(const AlgebraPtr& g, std::size_t v) {
  Split sp = split_at(g, v);
  const ExtensionData& d = sp.data;
  PeelCertificate c;
  c.vertex = v;
  c.vertex_name = g->vertex_names()[v];
  c.dim_gamma = g->dim();
  c.dim_a = d.a->dim();
  c.dim_m = d.m.dim();
  c.dim_n = d.n.dim();
  c.phi = d.phi;
  c.extension = validate_extension(d);

  const Ideal j = vertex_ideal(g, {v});
  c.dim_ideal = j.space.dim();
  const Vector& e = g->idempotent(v);
  const Subspace ge = column_span(g->right_mult_of(e)), eg = column_span(g->left_mult_of(e));
  c.dim_gamma_e = ge.dim();
  c.dim_e_gamma = eg.dim();
  std::vector<Vector> products;
  for (std::size_t s = 0; s < ge.dim(); ++s)
    for (std::size_t t = 0; t < eg.dim(); ++t) products.push_back(g->multiply(ge.vector(s), eg.vector(t)));
  c.multiplication_rank = Subspace::span(g->field(), g->dim(), products).dim();
  c.hereditary = is_hereditary_ideal(j);

  const Quotient q = quotient_algebra(g, j);
  c.dim_quotient = q.algebra->dim();
  const Matrix composite = q.projection.matrix * sp.corner.inclusion;
  if (rank(composite) != q.algebra->dim()) c.quotient_identification.failures.push_back("A -> G/GeG is not onto");
  if (!(kernel(composite) == column_span(d.phi)))
    c.quotient_identification.failures.push_back("kernel of A -> G/GeG differs from Im phi");
  for (const auto& msg : validate(AlgebraMorphism{d.a, q.algebra, composite}).failures)
    c.quotient_identification.failures.push_back(msg);
  return c;
}

PeelResult peel(const AlgebraPtr& g, std::size_t v) {
  PeelResult out;
  out.certificate = gamma_certificates(g, v);
  const PeelCertificate& c = out.certificate;
  if (!c.extension.ok())
    throw PeelError("peel at " + c.vertex_name + ": extension data invalid: " + c.extension.summary());
  if (!c.certified()) {
    std::string why;
    if (!c.multiplication_bijective()) why += " multiplication G e (x) e G -> G e G not bijective;";
    if (!c.hereditary.hereditary()) why += " G e G not hereditary;";
    if (!c.quotient_identification.ok()) why += " " + c.quotient_identification.summary();
    throw PeelError("peel at " + c.vertex_name + ": certificate failed:" + why);
  }
  out.data = extension_at(g, v);
  out.quotient = quotient_algebra(g, vertex_ideal(g, {v})).algebra;
  return out;
}

PeelChain peel_chain(const AlgebraPtr& g, const std::vector<std::string>& vertices) {
  PeelChain chain;
  chain.algebras.push_back(g);
  AlgebraPtr cur = g;
  for (const auto& name : vertices) {
    auto v = cur->find_vertex(name);
    if (!v) throw PeelError("peel: no vertex named '" + name + "'");
    PeelResult r = peel(cur, *v);
    chain.steps.push_back(std::move(r.certificate));
    cur = r.quotient;
    chain.algebras.push_back(cur);
  }
  chain.final = cur;
  return chain;
}

}  // namespace singequiv
