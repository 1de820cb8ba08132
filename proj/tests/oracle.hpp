#pragma once
// Brute-force reference computations over F_p with plain int64 arithmetic.
// Nothing here calls into the library except reading a parsed Presentation:
// paths are enumerated naively, the relation ideal is spanned by every
// u r w, and modules are dense action matrices over that basis.

#include "singequiv/quiver.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major

inline i64 md(i64 a, i64 p) { return ((a % p) + p) % p; }

inline i64 inv(i64 a, i64 p) {
  i64 r = 1, e = p - 2;
  a = md(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Row echelon basis of a list of vectors, fully reduced; pivots recorded.
struct Echelon {
  i64 p;
  std::size_t n;
  std::vector<Vec> rows;
  std::vector<std::size_t> piv;

  Echelon(i64 p_, std::size_t n_) : p(p_), n(n_) {}

  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const i64 c = v[piv[k]];
      if (!c) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = md(v[j] - c * rows[k][j], p);
    }
    return v;
  }

  bool add(Vec v) {
    v = reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](i64 x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t c = static_cast<std::size_t>(it - v.begin());
    const i64 s = inv(v[c], p);
    for (auto& x : v) x = x * s % p;
    for (auto& r : rows)
      if (r[c]) {
        const i64 f = r[c];
        for (std::size_t j = 0; j < n; ++j) r[j] = md(r[j] - f * v[j], p);
      }
    rows.push_back(std::move(v));
    piv.push_back(c);
    return true;
  }

  std::size_t rank() const { return rows.size(); }
  bool contains(const Vec& v) const {
    const Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](i64 x) { return x == 0; });
  }
};

inline std::size_t rank_of(const std::vector<Vec>& vs, i64 p, std::size_t n) {
  Echelon e(p, n);
  for (const auto& v : vs) e.add(v);
  return e.rank();
}

// Null space of the map sending column index j to cols[j].
inline std::vector<Vec> null_space(const std::vector<Vec>& cols, i64 p, std::size_t target_dim) {
  const std::size_t m = cols.size();
  // augmented rows [col_j | e_j]
  Echelon e(p, target_dim + m);
  std::vector<Vec> out;
  for (std::size_t j = 0; j < m; ++j) {
    Vec v(target_dim + m, 0);
    std::copy(cols[j].begin(), cols[j].end(), v.begin());
    v[target_dim + j] = 1;
    e.add(v);
  }
  for (std::size_t k = 0; k < e.rows.size(); ++k)
    if (e.piv[k] >= target_dim) out.emplace_back(e.rows[k].begin() + target_dim, e.rows[k].end());
  return out;
}

struct Path {
  std::size_t source, target;
  std::vector<std::size_t> arrows;  // traversal order
  bool operator<(const Path& o) const {
    return std::tie(source, target, arrows) < std::tie(o.source, o.target, o.arrows);
  }
};

class Algebra {
 public:
  Algebra(const singequiv::Presentation& pres, i64 p) : p_(p) {
    const auto& q = pres.quiver;
    nv_ = q.vertices.size();
    for (const auto& a : q.arrows) arrows_.push_back({a.source, a.target});
    const std::size_t N = pres.nilpotency;
    // all paths of length < N
    std::vector<Path> layer;
    for (std::size_t v = 0; v < nv_; ++v) layer.push_back({v, v, {}});
    while (!layer.empty()) {
      for (const auto& x : layer) paths_.push_back(x);
      std::vector<Path> next;
      for (const auto& x : layer) {
        if (x.arrows.size() + 1 >= N) continue;
        for (std::size_t a = 0; a < arrows_.size(); ++a)
          if (arrows_[a].first == x.target) {
            Path y = x;
            y.arrows.push_back(a);
            y.target = arrows_[a].second;
            next.push_back(y);
          }
      }
      layer = std::move(next);
    }
    for (std::size_t i = 0; i < paths_.size(); ++i) index_[paths_[i]] = i;
    const std::size_t n = paths_.size();

    Echelon ideal(p_, n);
    for (const auto& rel : pres.relations) {
      if (rel.terms.empty()) continue;
      const std::size_t s = rel.terms[0].path.source, t = rel.terms[0].path.target;
      std::size_t shortest = N;
      for (const auto& term : rel.terms) shortest = std::min(shortest, term.path.arrows.size());
      for (const auto& u : paths_) {
        if (u.source != t) continue;
        for (const auto& w : paths_) {
          if (w.target != s || u.arrows.size() + w.arrows.size() + shortest >= N) continue;
          Vec v(n, 0);
          for (const auto& term : rel.terms) {
            Path x{w.source, u.target, w.arrows};
            x.arrows.insert(x.arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
            x.arrows.insert(x.arrows.end(), u.arrows.begin(), u.arrows.end());
            auto it = index_.find(x);
            if (it == index_.end()) continue;  // length >= N: zero
            const mpz_class num = term.coeff.get_num(), den = term.coeff.get_den();
            const i64 c = md(mpz_class(num % p_).get_si(), p_) * inv(md(mpz_class(den % p_).get_si(), p_), p_) % p_;
            v[it->second] = md(v[it->second] + c, p_);
          }
          ideal.add(v);
        }
      }
    }
    ideal_ = ideal;
    std::vector<bool> is_piv(n, false);
    for (auto c : ideal_.piv) is_piv[c] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_piv[i]) basis_.push_back(i);
  }

  i64 prime() const { return p_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t vertices() const { return nv_; }
  const Path& basis_path(std::size_t k) const { return paths_[basis_[k]]; }

  // Normal form of a path (coordinates on the quotient basis).
  Vec path_vec(const Path& x) const {
    Vec out(dim(), 0);
    auto it = index_.find(x);
    if (it == index_.end()) return out;
    Vec v(paths_.size(), 0);
    v[it->second] = 1;
    v = ideal_.reduce(v);
    for (std::size_t k = 0; k < basis_.size(); ++k) out[k] = v[basis_[k]];
    return out;
  }

  // b_i * b_j (function order: b_j first).
  const Vec& mul_basis(std::size_t i, std::size_t j) const {
    if (table_.empty()) table_.resize(dim() * dim());
    Vec& slot = table_[i * dim() + j];
    if (slot.empty()) {
      const Path& x = basis_path(i);
      const Path& y = basis_path(j);
      if (y.target != x.source) {
        slot.assign(dim(), 0);
      } else {
        Path z{y.source, x.target, y.arrows};
        z.arrows.insert(z.arrows.end(), x.arrows.begin(), x.arrows.end());
        slot = path_vec(z);
      }
    }
    return slot;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i])
        for (std::size_t j = 0; j < dim(); ++j)
          if (y[j]) {
            const Vec& b = mul_basis(i, j);
            for (std::size_t k = 0; k < dim(); ++k) out[k] = md(out[k] + x[i] * y[j] % p_ * b[k], p_);
          }
    return out;
  }

  Vec idempotent(std::size_t v) const { return path_vec({v, v, {}}); }

  // Longest path (only through the allowed arrows) with nonzero image.
  std::size_t longest_nonzero(const std::vector<bool>& allowed) const {
    std::size_t best = 0;
    for (const auto& x : paths_) {
      if (!std::all_of(x.arrows.begin(), x.arrows.end(), [&](std::size_t a) { return allowed[a]; })) continue;
      const Vec v = path_vec(x);
      if (std::any_of(v.begin(), v.end(), [](i64 c) { return c != 0; })) best = std::max(best, x.arrows.size());
    }
    return best;
  }

  // dim of the two-sided ideal generated by the listed vertex idempotents.
  std::size_t vertex_ideal_dim(const std::vector<std::size_t>& vs) const {
    Echelon e(p_, dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (auto v : vs) {
          const Path& x = basis_path(i);
          const Path& y = basis_path(j);
          if (x.source == v && y.target == v) e.add(mul_basis(i, j));
        }
    return e.rank();
  }

  // Left projective A e_v as the basis indices with source v.
  std::vector<std::size_t> projective_support(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < dim(); ++k)
      if (basis_path(k).source == v) out.push_back(k);
    return out;
  }

 private:
  i64 p_;
  std::size_t nv_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
  Echelon ideal_{2, 0};
  std::vector<std::size_t> basis_;
  mutable std::vector<Vec> table_;  // products of basis elements, filled on demand
};

// Left module: action[i] is the matrix (dim x dim, row-major, acting on
// column vectors) of the i-th algebra basis element.
struct Module {
  std::size_t dim = 0;
  std::vector<Mat> action;
};

inline Vec apply(const Mat& m, const Vec& x, i64 p) {
  Vec out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) out[r] = md(out[r] + m[r][c] * x[c], p);
  return out;
}

inline Module simple(const Algebra& a, std::size_t v) {
  Module m{1, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Path& x = a.basis_path(i);
    m.action.push_back({{x.arrows.empty() && x.source == v ? 1 : 0}});
  }
  return m;
}

struct CoverStep {
  std::vector<std::size_t> top;  // multiplicity per vertex
  Module syzygy;
};

// Minimal projective cover and kernel, all by dense elimination.
inline CoverStep cover(const Algebra& a, const Module& m) {
  const i64 p = a.prime();
  CoverStep out;
  out.top.assign(a.vertices(), 0);
  // radical of M: images of all non-idempotent basis paths
  Echelon rad(p, m.dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.basis_path(i).arrows.empty())
      for (std::size_t c = 0; c < m.dim; ++c) {
        Vec col(m.dim);
        for (std::size_t r = 0; r < m.dim; ++r) col[r] = m.action[i][r][c];
        rad.add(col);
      }
  // top generators: e_v M vectors independent modulo rad M
  std::vector<std::pair<std::size_t, Vec>> gens;
  Echelon span = rad;
  for (std::size_t v = 0; v < a.vertices(); ++v) {
    const Vec e = a.idempotent(v);
    Mat ev(m.dim, Vec(m.dim, 0));
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (e[i])
        for (std::size_t r = 0; r < m.dim; ++r)
          for (std::size_t c = 0; c < m.dim; ++c) ev[r][c] = md(ev[r][c] + e[i] * m.action[i][r][c], p);
    for (std::size_t c = 0; c < m.dim; ++c) {
      Vec col(m.dim);
      for (std::size_t r = 0; r < m.dim; ++r) col[r] = ev[r][c];
      if (span.add(col)) {
        gens.push_back({v, col});
        ++out.top[v];
      }
    }
  }
  // P = (+) A e_v; its basis: (generator g, basis path k with source v_g)
  std::vector<std::pair<std::size_t, std::size_t>> pbasis;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (auto k : a.projective_support(gens[g].first)) pbasis.push_back({g, k});
  std::vector<Vec> images;
  for (auto [g, k] : pbasis) images.push_back(apply(m.action[k], gens[g].second, p));
  const std::vector<Vec> ker = null_space(images, p, m.dim);

  // action on the kernel: b_i * (x in P), coordinates back in ker basis
  const std::size_t pd = pbasis.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pindex;
  for (std::size_t s = 0; s < pd; ++s) pindex[pbasis[s]] = s;
  auto act_p = [&](std::size_t i, const Vec& x) {
    Vec out(pd, 0);
    for (std::size_t s = 0; s < pd; ++s) {
      if (!x[s]) continue;
      const auto [g, k] = pbasis[s];
      const Vec& prod = a.mul_basis(i, k);
      for (std::size_t t = 0; t < a.dim(); ++t)
        if (prod[t]) {
          const std::size_t idx = pindex.at({g, t});
          out[idx] = md(out[idx] + x[s] * prod[t], p);
        }
    }
    return out;
  };
  Echelon kb(p, pd);
  for (const auto& v : ker) kb.add(v);
  Module syz{kb.rank(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Mat act(syz.dim, Vec(syz.dim, 0));
    for (std::size_t c = 0; c < syz.dim; ++c) {
      const Vec y = act_p(i, kb.rows[c]);
      // rows of kb are fully reduced, so coordinates are the pivot entries
      for (std::size_t r = 0; r < syz.dim; ++r) act[r][c] = y[kb.piv[r]];
    }
    syz.action.push_back(std::move(act));
  }
  out.syzygy = std::move(syz);
  return out;
}

// dim Omega^k M for k = 0..n and top multiplicities of the k-th term.
struct SyzygyTable {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> tops;
};

inline SyzygyTable syzygies(const Algebra& a, Module m, std::size_t n) {
  SyzygyTable t;
  for (std::size_t k = 0; k <= n; ++k) {
    t.dims.push_back(m.dim);
    CoverStep c = cover(a, m);
    t.tops.push_back(c.top);
    m = std::move(c.syzygy);
  }
  return t;
}

}  // namespace oracle
