#include "singequiv/dsg.hpp"

#include <cstdlib>

namespace singequiv {

std::string PerfectReport::str() const {
  return pd.finite() ? "PERFECT(" + std::to_string(*pd.value) + ")" : "NOT_WITHIN(" + std::to_string(pd.bound) + ")";
}

PerfectReport is_perfect_module(const Module& m, std::size_t bound) { return {projective_dimension(m, bound)}; }

std::string GorensteinReport::str() const {
  return dimension ? "GORENSTEIN(" + std::to_string(*dimension) + ")" : "NOT_CERTIFIED";
}

GorensteinReport gorenstein(const AlgebraPtr& a, std::size_t bound) {
  GorensteinReport r;
  r.injdim_left = injective_dimension(regular(a, Side::Left), bound);
  r.injdim_right = injective_dimension(regular(a, Side::Right), bound);
  if (r.injdim_left.finite() && r.injdim_right.finite() && *r.injdim_left.value == *r.injdim_right.value)
    r.dimension = r.injdim_left.value;
  return r;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::ProvablyStable: return "PROVABLY_STABLE";
    case Stability::HeuristicallyStable: return "HEURISTICALLY_STABLE";
    default: return "NOT_STABILIZED";
  }
}

namespace {

// Omega^k along the cached cover chain.
Module omega_power(const Module& m, std::size_t k) {
  Module cur = m;
  for (std::size_t i = 0; i < k; ++i) {
    if (cur.dim() == 0) break;
    Module next = cur.syzygy();
    cur = next;
  }
  return cur;
}

}  // namespace

DsgHomReport dsg_hom_dim(const Module& m, const Module& n, int shift, const DsgOptions& opt) {
  if (m.side() != n.side() || !same_algebra(m.acting(), n.acting()))
    throw ModuleError("dsg_hom_dim: modules over different algebras or sides");
  DsgHomReport r;
  r.shift = shift;
  r.bound = opt.bound;
  r.window = opt.window;
  r.first = shift > 0 ? static_cast<std::size_t>(shift) : 0;
  const GorensteinReport gor = opt.gorenstein ? *opt.gorenstein : gorenstein(m.algebra(), opt.gorenstein_bound);
  r.gorenstein_dim = gor.dimension;
  const std::size_t abs_shift = static_cast<std::size_t>(std::abs(shift));
  const std::size_t cutoff = gor.dimension ? std::max(r.first, *gor.dimension + abs_shift + 1) : 0;

  Module x = omega_power(m, r.first);
  Module y = omega_power(n, static_cast<std::size_t>(static_cast<long>(r.first) - shift));
  StableHom prev;
  Module px, py;
  for (std::size_t k = r.first; k <= opt.bound; ++k) {
    StableHom cur = stable_hom(x, y);
    r.dims.push_back(cur.dim());
    if (k > r.first) {
      std::vector<Vector> imgs;
      for (const auto& f : prev.representatives) {
        const Matrix g = omega_map(px, py, hom_matrix(px, py, f));
        imgs.push_back(generator_values(x, g));
      }
      const std::size_t amb = cur.projective_part.ambient_dim();
      const Subspace total = cur.projective_part + Subspace::span(x.field(), amb, imgs);
      r.transition_ranks.push_back(total.dim() - cur.projective_part.dim());
    }
    if (gor.dimension && opt.stop_when_certified && k >= cutoff + opt.window - 1) break;
    if (k == opt.bound) break;
    prev = std::move(cur);
    px = x;
    py = y;
    x = omega_power(x, 1);
    y = omega_power(y, 1);
  }

  const std::size_t last = r.first + r.dims.size() - 1;
  if (gor.dimension && last >= cutoff) {
    const std::size_t v = r.dims[cutoff - r.first];
    for (std::size_t k = cutoff; k <= last; ++k)
      if (r.dims[k - r.first] != v) throw ModuleError("internal: singularity Hom dimension moved past the Gorenstein cutoff");
    r.status = Stability::ProvablyStable;
    r.value = v;
    r.stable_from = cutoff;
    return r;
  }
  std::size_t run = 0;
  for (std::size_t t = r.transition_ranks.size(); t-- > 0;) {
    const bool bijective = r.transition_ranks[t] == r.dims[t] && r.dims[t] == r.dims[t + 1];
    if (!bijective) break;
    ++run;
  }
  if (opt.window > 0 && run >= opt.window) {
    r.status = Stability::HeuristicallyStable;
    r.value = r.dims.back();
    r.stable_from = last - run;
  }
  return r;
}

std::vector<Multiplicity> syzygy_growth(const Module& m, std::size_t n) { return syzygy_dims(m, n); }

std::size_t ShadowReport::matches() const {
  std::size_t k = 0;
  for (const auto& c : cells)
    if (c.match()) ++k;
  return k;
}

ShadowReport equivalence_shadow(const Ideal& j, const std::vector<int>& shifts, const DsgOptions& opt,
                                std::size_t theorem_bound) {
  ShadowReport out;
  out.theorem = theorem_hypothesis_check(j, theorem_bound);
  out.certified = out.theorem.conclusion == Conclusion::Certified;
  const Quotient q = quotient_algebra(j.algebra, j);
  out.quotient = q.algebra;
  out.quotient_gorenstein = gorenstein(q.algebra, opt.gorenstein_bound);
  out.algebra_gorenstein = gorenstein(j.algebra, opt.gorenstein_bound);

  DsgOptions over_b = opt, over_a = opt;
  over_b.gorenstein = out.quotient_gorenstein;
  over_a.gorenstein = out.algebra_gorenstein;
  std::vector<Module> simples, restricted;
  for (std::size_t v = 0; v < q.algebra->vertex_count(); ++v) {
    simples.push_back(simple(q.algebra, v));
    restricted.push_back(restrict_scalars(simples.back(), q.projection));
  }
  const auto& names = q.algebra->vertex_names();
  for (std::size_t s = 0; s < simples.size(); ++s)
    for (std::size_t t = 0; t < simples.size(); ++t)
      for (int i : shifts) {
        ShadowCell c;
        c.source = names[s];
        c.target = names[t];
        c.shift = i;
        c.quotient_side = dsg_hom_dim(simples[s], simples[t], i, over_b);
        c.algebra_side = dsg_hom_dim(restricted[s], restricted[t], i, over_a);
        out.cells.push_back(std::move(c));
      }
  return out;
}

}  // namespace singequiv
