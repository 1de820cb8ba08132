#pragma once

#include "singequiv/algebra.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace singequiv {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { Left, Right };
std::string to_string(Side s);

struct CoverData;

/// Finite-dimensional one-sided module given by the action matrix of every
/// algebra basis element. For a right module, action(i) is m -> m * b_i.
/// A right A-module is handled internally as a left module over A^op with
/// the same matrices; acting() is that algebra.
class Module {
 public:
  Module() = default;

  // Validates the action; throws ModuleError on failure.
  static Module make(AlgebraPtr algebra, Side side, std::vector<Matrix> action, std::vector<std::string> labels = {});
  // Skips validation: only for actions that are correct by construction.
  static Module trusted(AlgebraPtr algebra, Side side, std::vector<Matrix> action, std::vector<std::string> labels = {});

  bool empty() const { return impl_ == nullptr; }
  const AlgebraPtr& algebra() const;
  const AlgebraPtr& acting() const;
  Side side() const;
  const Field& field() const;
  std::size_t dim() const;
  const Matrix& action(std::size_t i) const;
  const std::vector<Matrix>& actions() const;
  // Action of an arbitrary algebra element.
  Matrix act(const Vector& a) const;
  const std::vector<std::string>& labels() const;

  // dim e_v M (left) or M e_v (right), per vertex.
  std::vector<std::size_t> vertex_dims() const;
  // rad M as a subspace (span of the arrow-generator actions).
  Subspace radical() const;

  // Same data viewed over the opposite algebra with the side flipped.
  Module opposite_view() const;

  const CoverData& cover() const;
  const Module& syzygy() const;
  bool is_projective() const;

 private:
  friend struct ModuleAccess;
  struct Impl;
  explicit Module(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

ValidationReport validate(const Module& m);

/// Minimal projective cover P = (+)_j A e_{v_j} -> M of a module (computed over
/// its acting algebra). Coordinates of P are the concatenated rref coordinates
/// of the projective spaces A e_{v_j}.
struct CoverData {
  std::vector<std::size_t> vertices;  // vertex of each top generator
  std::vector<Vector> generators;     // top generators m_j in M
  std::vector<std::size_t> offsets;   // block starts in P, size vertices+1
  Module projective;
  Matrix epi;      // dim M x dim P
  Matrix section;  // dim P x dim M, epi * section = 1
  Subspace kernel;
  Module syzygy;
};

// Vertex multiplicities of the top of M.
std::vector<std::size_t> top_multiplicities(const Module& m);

Module simple(const AlgebraPtr& a, std::size_t v, Side side = Side::Left);
Module projective(const AlgebraPtr& a, std::size_t v, Side side = Side::Left);
Module injective(const AlgebraPtr& a, std::size_t v, Side side = Side::Left);
Module regular(const AlgebraPtr& a, Side side = Side::Left);
// Direct sum of projectives with the given vertex multiplicities.
Module free_module(const AlgebraPtr& a, const std::vector<std::size_t>& mult, Side side = Side::Left);
Module direct_sum(const std::vector<Module>& parts);
// Submodule spanned by the rows of `space` (must be invariant).
Module submodule(const Module& m, const Subspace& space);
// Quotient module M / space; basis = non-pivot coordinates.
Module quotient_module(const Module& m, const Subspace& space);
// A/I as a left or right A-module.
Module quotient_by_ideal(const Ideal& i, Side side);
Module ideal_module(const Ideal& i, Side side);

// Transposed action, side flipped; stays over the same algebra.
Module dual(const Module& m);
Module restrict_scalars(const Module& m, const AlgebraMorphism& phi);

// ---------------------------------------------------------------------------
// Homomorphisms. A homomorphism M -> N is stored by its values on the top
// generators of M (concatenated N-coordinates); hom_matrix expands it.

struct HomSpace {
  Module source;
  Module target;
  std::vector<Vector> basis;
  std::size_t dim() const { return basis.size(); }
};

HomSpace hom_space(const Module& m, const Module& n);
Matrix hom_matrix(const Module& m, const Module& n, const Vector& generator_values);
Vector generator_values(const Module& m, const Matrix& f);
bool is_module_hom(const Module& m, const Module& n, const Matrix& f);

struct StableHom {
  HomSpace hom;
  Subspace projective_part;  // maps factoring through the cover of the target
  std::vector<Vector> representatives;  // complement basis, in generator values
  std::size_t dim() const { return representatives.size(); }
};

StableHom stable_hom(const Module& m, const Module& n);
// A lift of f through the covers, restricted to the syzygies (matrix
// dim Omega N x dim Omega M).
Matrix omega_map(const Module& m, const Module& n, const Matrix& f);

// ---------------------------------------------------------------------------
// Resolutions

struct Resolution {
  Module resolved;
  std::vector<std::vector<std::size_t>> terms;  // vertex multiplicities of P_k
  std::vector<Module> modules;                  // P_k
  std::vector<Matrix> differentials;            // d_k: P_k -> P_{k-1}, k >= 1 (index k-1)
  Matrix augmentation;                          // P_0 -> M
  bool terminated = false;                      // last syzygy is zero
};

Resolution min_resolution(const Module& m, std::size_t n);
ValidationReport check_resolution(const Resolution& r);

/// Result of a bounded search: exact value, or "at least bound + 1".
struct Bounded {
  std::optional<std::size_t> value;
  std::size_t bound = 0;
  bool size_limited = false;  // search stopped early by a dimension cap
  bool finite() const { return value.has_value(); }
  std::string str() const;
};

using Multiplicity = mpz_class;
struct ClassCount {
  std::size_t cls;
  Multiplicity mult;
};

/// Iso-classes of summands met along syzygy iterations. decompose() splits a
/// module into a direct sum: first by connected components of the support
/// graph of the action, then by splitting off already-known classes via a
/// certified retraction (g f invertible for random f: C -> X, g: X -> C).
/// Classes are only ever identified through such certificates, so every
/// count derived from them is exact; randomness only affects speed.
class SyzygyClasses {
 public:
  explicit SyzygyClasses(std::uint64_t seed = 0x51a9e5);

  std::vector<ClassCount> decompose(const Module& m);
  const Module& module(std::size_t cls) const { return classes_.at(cls).module; }
  const std::vector<ClassCount>& omega(std::size_t cls);
  std::size_t size() const { return classes_.size(); }

  // Omega^n applied to a class combination.
  std::vector<ClassCount> step(const std::vector<ClassCount>& combo);
  Multiplicity dim(const std::vector<ClassCount>& combo) const;

 private:
  struct Entry {
    Module module;
    std::vector<std::size_t> vdims;
    std::optional<std::vector<ClassCount>> omega;
  };
  std::optional<Module> split_off(const Module& x, const Module& c);
  std::size_t intern(const Module& x);

  std::vector<Entry> classes_;
  std::mt19937_64 rng_;
};

Bounded projective_dimension(const Module& m, std::size_t bound, SyzygyClasses* classes = nullptr);
Bounded injective_dimension(const Module& m, std::size_t bound, SyzygyClasses* classes = nullptr);
std::vector<Multiplicity> syzygy_dims(const Module& m, std::size_t n, SyzygyClasses* classes = nullptr);

// ---------------------------------------------------------------------------
// Tensor products and Tor

/// X (x)_A Y for a right module X and a left module Y, realised as
/// (+)_v X e_v (x)_k e_v Y modulo x g (x) y - x (x) g y over the algebra
/// generators g.
struct TensorSpace {
  Module right;
  Module left;
  std::vector<std::size_t> offsets;     // block start per vertex
  std::vector<Matrix> right_bases;      // columns: basis of X e_v
  std::vector<Subspace> right_spaces;   // X e_v
  std::vector<Matrix> left_bases;       // columns: basis of e_v Y
  std::vector<Subspace> left_spaces;    // e_v Y
  Subspace relations;
  std::size_t ambient = 0;
  std::size_t dim() const { return ambient - relations.dim(); }

  // Ambient vector of x (x) y for x in X e_v, y in e_v Y (coordinates of X, Y).
  Vector pure(std::size_t v, const Vector& x, const Vector& y) const;
};

TensorSpace tensor_over_algebra(const Module& x, const Module& y);
// Rank of 1 (x) f : X (x) Y -> X (x) Y' for a left-module map f (dim Y' x dim Y).
std::size_t induced_rank(const TensorSpace& from, const TensorSpace& to, const Matrix& f);

// Tor_i via X (x) (minimal resolution of Y).
std::size_t tor_via_resolution(const Module& x, const Module& y, std::size_t i);
// Tor_0..Tor_max via syzygy classes: Tor_i(X,Y) = sum_c mult_c(Omega^{i-1} Y) Tor_1(X, c).
std::vector<Multiplicity> tor_sequence(const Module& x, const Module& y, std::size_t max_i,
                                       SyzygyClasses* classes = nullptr);
Multiplicity tor(const Module& x, const Module& y, std::size_t i);

// ---------------------------------------------------------------------------

bool is_nakayama(const AlgebraPtr& a);
bool is_selfinjective(const AlgebraPtr& a, std::size_t bound = 20);
// Dimensions of rad^k M / rad^{k+1} M.
std::vector<std::size_t> radical_layers(const Module& m);

}  // namespace singequiv
