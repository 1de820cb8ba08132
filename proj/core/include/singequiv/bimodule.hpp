#pragma once

#include "singequiv/module.hpp"

#include <string>
#include <vector>

namespace singequiv {

/// A-A-bimodule as a pair of commuting actions; an A^e-module without ever
/// forming A^e. right_action(i) is x -> x * b_i.
class Bimodule {
 public:
  Bimodule() = default;
  static Bimodule make(AlgebraPtr a, std::vector<Matrix> left, std::vector<Matrix> right);
  static Bimodule trusted(AlgebraPtr a, std::vector<Matrix> left, std::vector<Matrix> right);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return algebra_->field(); }
  const std::vector<Matrix>& left() const { return left_; }
  const std::vector<Matrix>& right() const { return right_; }
  Matrix left_act(const Vector& a) const;
  Matrix right_act(const Vector& a) const;

  Module as_left_module() const;
  Module as_right_module() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

ValidationReport validate(const Bimodule& x);

Bimodule ideal_as_bimodule(const Ideal& i);
Bimodule regular_bimodule(const AlgebraPtr& a);
// M (x)_k N with Kronecker basis order (M index major).
Bimodule tensor_bimodule(const Module& m, const Module& n);
Bimodule sub_bimodule(const Bimodule& x, const Subspace& s);

bool is_idempotent_ideal(const Ideal& i);

struct VertexPair {
  std::size_t left;   // i in A e_i (x) e_j A
  std::size_t right;  // j
};

/// One step of a minimal bimodule resolution: the cover
/// (+) A e_i (x) e_j A -> X and its kernel.
struct BimoduleResolutionStep {
  std::vector<VertexPair> cover;  // one entry per generator
  std::vector<Vector> generators;
  std::vector<std::size_t> offsets;
  Matrix epi;
  Subspace kernel_space;
  Bimodule kernel;
  std::size_t cover_dim() const { return offsets.empty() ? 0 : offsets.back(); }
};

BimoduleResolutionStep bimodule_projective_cover(const Bimodule& x);
Bimodule projective_bimodule(const AlgebraPtr& a, std::size_t i, std::size_t j);
// Syzygies of bimodules grow fast; once one exceeds max_dim the search stops
// with the lower bound proven so far (size_limited set).
inline constexpr std::size_t kBimoduleDimCap = 200;
Bounded bimodule_pd(const Bimodule& x, std::size_t bound, std::size_t max_dim = kBimoduleDimCap);

struct HereditaryCertificate {
  bool idempotent = false;
  std::size_t ideal_dim = 0;
  std::size_t cover_dim = 0;
  std::size_t kernel_dim = 0;
  std::vector<VertexPair> cover;
  bool hereditary() const { return idempotent && kernel_dim == 0; }
};

HereditaryCertificate is_hereditary_ideal(const Ideal& j);

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

struct HomologicalReport {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t bound = 0;
  bool idempotent = false;
  std::vector<Multiplicity> tor;     // Tor_i(J, A/J), i = 0..bound
  Bounded pd_quotient_left;          // pd of A/J as left A-module
  Bounded pd_ideal_right;            // pd of J as right A-module
  std::string reason;

  // Cross-oracle: A -> A/J is a homological epimorphism iff B (x)_A B -> B is
  // bijective and Tor_i(B, B) = 0 for i >= 1.
  Verdict direct = Verdict::Inconclusive;
  std::size_t tensor_dim = 0;
  std::size_t multiplication_rank = 0;
  std::vector<Multiplicity> tor_quotient;  // Tor_i(B, B)
  bool oracles_agree = true;
};

HomologicalReport is_homological_ideal(const Ideal& j, std::size_t bound = 20);

enum class Conclusion { Certified, NotCertified };
std::string to_string(Conclusion c);

struct TheoremReport {
  HomologicalReport homological;
  HereditaryCertificate hereditary;
  Bounded bimodule_pd;
  Conclusion conclusion = Conclusion::NotCertified;
};

TheoremReport theorem_hypothesis_check(const Ideal& j, std::size_t bound = 20);

}  // namespace singequiv
