#include "singequiv/harness.hpp"

#include "singequiv/quiver.hpp"

#include <sstream>

namespace singequiv {

std::uint64_t instance_seed(std::uint64_t seed, std::size_t k) {
  // splitmix64 of (seed, k)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(k) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string random_monomial_source(Rng& rng, const RandomAlgebraOptions& opt) {
  const std::size_t nv = rng.between(1, opt.max_vertices);
  const std::size_t na = rng.between(1, opt.max_arrows);
  struct A {
    std::size_t s, t;
  };
  std::vector<A> arrows;
  for (std::size_t k = 0; k < na; ++k) arrows.push_back({rng.below(nv), rng.below(nv)});
  const std::size_t len = rng.between(2, 3);

  std::ostringstream os;
  os << "field Q\ncomposition function\nvertices ";
  for (std::size_t v = 0; v < nv; ++v) os << (v ? ", " : "") << v + 1;
  os << '\n';
  for (std::size_t k = 0; k < na; ++k) os << "arrow a" << k << ": " << arrows[k].s + 1 << " -> " << arrows[k].t + 1 << '\n';

  // Paths in traversal order; relations are written in function order.
  auto write = [&](const std::vector<std::size_t>& path) {
    os << "relation";
    for (auto it = path.rbegin(); it != path.rend(); ++it) os << " a" << *it;
    os << '\n';
  };
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t k = 0; k < na; ++k) layer.push_back({k});
  for (std::size_t l = 2; l <= len; ++l) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : layer)
      for (std::size_t k = 0; k < na; ++k)
        if (arrows[k].s == arrows[p.back()].t) {
          auto q = p;
          q.push_back(k);
          // Some length-2 monomials are killed early; the rest survive to the truncation.
          if (l == 2 && l < len && rng.chance(0.35)) {
            write(q);
            continue;
          }
          next.push_back(std::move(q));
        }
    if (l == len)
      for (const auto& p : next) write(p);
    layer = std::move(next);
  }
  os << "nilpotency " << len << '\n';
  return os.str();
}

AlgebraPtr random_monomial_algebra(Rng& rng, const RandomAlgebraOptions& opt) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    AlgebraPtr a = build_algebra(parse_presentation(random_monomial_source(rng, opt))).algebra();
    if (a->dim() <= opt.max_dim) return a;
  }
  throw AlgebraError("random_monomial_algebra: could not meet the dimension limit");
}

namespace {

struct BasisShape {
  std::size_t target = 0, source = 0;
  bool idempotent = false;
  bool arrow = false;  // outside rad^2
};

std::vector<BasisShape> basis_shapes(const Algebra& a) {
  std::vector<BasisShape> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector b = a.basis_vector(i);
    for (std::size_t t = 0; t < a.vertex_count(); ++t)
      for (std::size_t s = 0; s < a.vertex_count(); ++s)
        if (a.multiply(a.multiply(a.idempotent(t), b), a.idempotent(s)) == b) {
          out[i].target = t;
          out[i].source = s;
        }
    out[i].idempotent = a.idempotent(out[i].target) == b;
    out[i].arrow = !out[i].idempotent && !a.radical_square().contains(b);
  }
  return out;
}

Scalar small_coefficient(Rng& rng) {
  static const long values[] = {1, -1, 2, 1, -2, 3};
  return Scalar(values[rng.below(6)]);
}

// Vertices of the basis vectors and a strictly triangular arrow action.
Module random_small_module(Rng& rng, const AlgebraPtr& a, const std::vector<BasisShape>& shape, Side side,
                           std::size_t dim) {
  const Field& f = a->field();
  std::vector<std::size_t> vert(dim);
  for (auto& v : vert) v = rng.below(a->vertex_count());
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix m(f, dim, dim);
    if (shape[i].idempotent) {
      for (std::size_t p = 0; p < dim; ++p)
        if (vert[p] == shape[i].target) m(p, p) = 1;
    } else if (shape[i].arrow) {
      // left: e_s M -> e_t M;  right: M e_t -> M e_s
      const std::size_t from = side == Side::Left ? shape[i].source : shape[i].target;
      const std::size_t to = side == Side::Left ? shape[i].target : shape[i].source;
      for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = p + 1; q < dim; ++q)
          if (vert[p] == from && vert[q] == to && rng.chance(0.7)) m(q, p) = small_coefficient(rng);
    }
    act.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < dim; ++p) labels.push_back((side == Side::Left ? "m" : "n") + std::to_string(p));
  return Module::make(a, side, std::move(act), std::move(labels));
}

std::size_t vertex_of(const Module& m, std::size_t p) {
  const Algebra& a = *m.algebra();
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    if (sgn(m.act(a.idempotent(v))(p, p)) != 0) return v;
  return 0;
}

}  // namespace

ExtensionData random_extension_candidate(Rng& rng, const AlgebraPtr& a) {
  const auto shape = basis_shapes(*a);
  auto pick_dim = [&] { return rng.chance(0.1) ? 0 : rng.between(1, 2); };
  ExtensionData d;
  d.a = a;
  d.m = random_small_module(rng, a, shape, Side::Left, pick_dim());
  d.n = random_small_module(rng, a, shape, Side::Right, pick_dim());
  const std::size_t dm = d.m.dim(), dn = d.n.dim();
  d.phi = Matrix(a->field(), a->dim(), dm * dn);
  for (std::size_t s = 0; s < dm; ++s)
    for (std::size_t t = 0; t < dn; ++t) {
      // phi(m (x) n) lies in e_u rad A e_w
      const std::size_t u = vertex_of(d.m, s), w = vertex_of(d.n, t);
      std::vector<std::size_t> cands;
      for (std::size_t i = 0; i < a->dim(); ++i)
        if (!shape[i].idempotent && shape[i].target == u && shape[i].source == w) cands.push_back(i);
      if (cands.empty() || rng.chance(0.2)) continue;
      d.phi(cands[rng.below(cands.size())], s * dn + t) = small_coefficient(rng);
    }
  return d;
}

std::optional<ExtensionData> random_extension_data(Rng& rng, const AlgebraPtr& a, std::size_t tries) {
  for (std::size_t k = 0; k < tries; ++k) {
    ExtensionData d = random_extension_candidate(rng, a);
    if (validate_extension(d).ok()) return d;
  }
  return std::nullopt;
}

namespace {

void violation(HarnessReport& r, std::size_t k, std::uint64_t seed, std::string check, std::string detail) {
  r.violations.push_back({k, seed, std::move(check), std::move(detail)});
}

bool same_module_data(const Module& x, const Module& y) {
  if (x.dim() != y.dim() || x.actions().size() != y.actions().size()) return false;
  for (std::size_t i = 0; i < x.actions().size(); ++i)
    if (!(x.action(i) == y.action(i))) return false;
  return true;
}

void check_ideals(Rng& rng, const AlgebraPtr& a, std::size_t k, std::uint64_t seed, std::size_t bound, HarnessReport& r) {
  if (a->vertex_count() < 2) return;
  std::vector<std::size_t> verts;
  while (verts.empty() || verts.size() == a->vertex_count()) {
    verts.clear();
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
      if (rng.chance(0.5)) verts.push_back(v);
  }
  const Ideal j = vertex_ideal(a, verts);
  if (j.space.contains(a->unit())) return;
  ++r.ideals;
  const HomologicalReport h = is_homological_ideal(j, bound);
  if (h.verdict != Verdict::Inconclusive && h.direct != Verdict::Inconclusive) {
    ++r.ideals_conclusive;
    if (h.verdict == Verdict::Yes) ++r.ideals_yes;
    if (h.verdict != h.direct)
      violation(r, k, seed, "homological-oracles",
                "Tor criterion " + to_string(h.verdict) + " vs direct " + to_string(h.direct));
  }
}

// Explicit resolutions are dense; keep them to degrees where syzygies stay small.
std::size_t explicit_degree(const Module& m, std::size_t want) {
  const auto dims = syzygy_dims(m, want + 1);
  std::size_t n = 0;
  while (n < want && dims[n + 1] <= 40 && dims[n + 2] <= 40) ++n;
  return n;
}

void check_modules(const AlgebraPtr& a, std::size_t k, std::uint64_t seed, HarnessReport& r) {
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    const Module s = simple(a, v);
    const ValidationReport rr = check_resolution(min_resolution(s, explicit_degree(s, 4)));
    ++r.resolutions;
    if (!rr.ok()) violation(r, k, seed, "resolution", rr.summary());
  }
  // Tor balance and the two Tor routes, on one pair of simples.
  const Module x = simple(a, 0, Side::Right);
  const Module y = simple(a, a->vertex_count() - 1);
  const std::size_t top = std::min(explicit_degree(x, 3), explicit_degree(y, 3));
  const auto fast = tor_sequence(x, y, 3);
  for (std::size_t i = 0; i <= top; ++i) {
    const std::size_t lhs = tor_via_resolution(x, y, i);
    const std::size_t rhs = tor_via_resolution(y.opposite_view(), x.opposite_view(), i);
    ++r.tor_checks;
    if (lhs != rhs || fast[i] != lhs)
      violation(r, k, seed, "tor-balance",
                "Tor_" + std::to_string(i) + ": " + std::to_string(lhs) + " / " + std::to_string(rhs) + " / " +
                    fast[i].get_str());
  }
}

void check_extension(Rng& rng, std::size_t k, std::uint64_t seed, std::size_t bound, HarnessReport& r) {
  RandomAlgebraOptions small;
  small.max_dim = 8;
  const AlgebraPtr a = random_monomial_algebra(rng, small);
  const auto found = random_extension_data(rng, a);
  if (!found) return;
  const ExtensionData& d = *found;
  ++r.extensions;
  if (!d.phi.is_zero()) ++r.extensions_nontrivial;
  const std::size_t dm = d.m.dim(), dn = d.n.dim();

  const GammaAlgebra g = build_gamma(d);
  if (g.algebra->dim() != a->dim() + dm + dn + 1) violation(r, k, seed, "gamma-dim", "dim Gamma is wrong");
  const std::size_t dim_ideal = vertex_ideal(g.algebra, {g.vertex}).space.dim();
  if (dim_ideal != (dm + 1) * (dn + 1))
    violation(r, k, seed, "ideal-dim", "injective phi but dim GeG = " + std::to_string(dim_ideal));

  // Round trip
  const ExtensionData back = extension_at(g.algebra, g.vertex);
  ++r.round_trips;
  if (back.a->dim() != a->dim() || !same_structure_by_labels(*back.a, *a) || !same_module_data(back.m, d.m) ||
      !same_module_data(back.n, d.n) || !(back.phi == d.phi))
    violation(r, k, seed, "round-trip", "peel(build_gamma(d)) differs from d");

  const PeelCertificate c = gamma_certificates(g.algebra, g.vertex);
  if (!c.certified()) violation(r, k, seed, "peel-certificate", "valid data but certificate fails");
  else {
    ++r.certified_peels;
    const HomologicalReport h = is_homological_ideal(vertex_ideal(g.algebra, {g.vertex}), bound);
    if (h.verdict != Verdict::Yes) violation(r, k, seed, "peel-homological", "certified peel but verdict " + to_string(h.verdict));
  }

  // Non-injective control: phi = 0 must fail exactly injectivity and the identity.
  if (dm > 0 && dn > 0) {
    ExtensionData z = d;
    z.phi = Matrix(a->field(), a->dim(), dm * dn);
    ++r.non_injective;
    const ValidationReport zr = validate_extension(z);
    if (zr.failures.size() != 1 || zr.failures[0].rfind("phi is not injective", 0) != 0)
      violation(r, k, seed, "non-injective", "phi = 0 should fail only injectivity: " + zr.summary());
    const GammaAlgebra gz = build_gamma(z, "e", false);
    if (vertex_ideal(gz.algebra, {gz.vertex}).space.dim() == (dm + 1) * (dn + 1))
      violation(r, k, seed, "non-injective", "dimension identity holds for phi = 0");
  }
}

}  // namespace

void run_harness_instance(std::size_t k, std::uint64_t replay_seed, std::size_t bound, HarnessReport& report) {
  Rng rng(replay_seed);
  try {
    const AlgebraPtr a = random_monomial_algebra(rng, {});
    check_ideals(rng, a, k, replay_seed, bound, report);
    check_modules(a, k, replay_seed, report);
    check_extension(rng, k, replay_seed, bound, report);
  } catch (const std::exception& e) {
    violation(report, k, replay_seed, "exception", e.what());
  }
}

HarnessReport run_harness(const HarnessOptions& opt) {
  HarnessReport r;
  r.options = opt;
  for (std::size_t k = 0; k < opt.count; ++k) run_harness_instance(k, instance_seed(opt.seed, k), opt.bound, r);
  return r;
}

}  // namespace singequiv
