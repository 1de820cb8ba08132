#pragma once

#include "singequiv/bimodule.hpp"

#include <string>
#include <vector>

namespace singequiv {

class PeelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data for the triangular matrix algebra [[A, M], [N, k]]: a left module M,
/// a right module N and a linear map phi: M (x)_k N -> A. Column s * dim N + t
/// of phi is phi(m_s (x) n_t).
struct ExtensionData {
  AlgebraPtr a;
  Module m;
  Module n;
  Matrix phi;
};

// Every failed condition is listed separately; the order of the checks is fixed.
ValidationReport validate_extension(const ExtensionData& d);

struct GammaAlgebra {
  AlgebraPtr algebra;
  std::size_t vertex = 0;  // index of the new idempotent e
  Matrix embed_a;          // dim Gamma x dim A, likewise for M and N
  Matrix embed_m;
  Matrix embed_n;
};

// Basis order: A, then M, then N, then e. With require_injective = false the
// injectivity of phi is not demanded (the other conditions still are); this
// is only useful for testing the dimension identities.
GammaAlgebra build_gamma(const ExtensionData& d, const std::string& vertex_name = "e", bool require_injective = true);

struct PeelCertificate {
  std::size_t vertex = 0;
  std::string vertex_name;
  std::size_t dim_gamma = 0, dim_a = 0, dim_m = 0, dim_n = 0;
  Matrix phi;
  ValidationReport extension;

  // Gamma e (x)_k e Gamma -> Gamma e Gamma
  std::size_t dim_ideal = 0;
  std::size_t dim_gamma_e = 0;
  std::size_t dim_e_gamma = 0;
  std::size_t multiplication_rank = 0;
  bool multiplication_bijective() const {
    return multiplication_rank == dim_gamma_e * dim_e_gamma && multiplication_rank == dim_ideal;
  }
  HereditaryCertificate hereditary;

  // A -> Gamma -> Gamma / Gamma e Gamma is onto with kernel Im phi and multiplicative.
  ValidationReport quotient_identification;
  std::size_t dim_quotient = 0;

  bool certified() const {
    return extension.ok() && multiplication_bijective() && hereditary.hereditary() && quotient_identification.ok();
  }
};

// Extension data read off at vertex v: A = (1-e) G (1-e), M = (1-e) G e,
// N = e G (1-e), phi = multiplication. Throws PeelError unless e G e = k e and
// some other vertex exists.
ExtensionData extension_at(const AlgebraPtr& g, std::size_t v);
PeelCertificate gamma_certificates(const AlgebraPtr& g, std::size_t v);

struct PeelResult {
  ExtensionData data;
  AlgebraPtr quotient;
  PeelCertificate certificate;
};

// Throws PeelError when the construction does not apply at v.
PeelResult peel(const AlgebraPtr& g, std::size_t v);

struct PeelChain {
  AlgebraPtr final;
  std::vector<AlgebraPtr> algebras;  // starting algebra, then each quotient
  std::vector<PeelCertificate> steps;
};

// Vertices are given by name since indices shift after each quotient.
PeelChain peel_chain(const AlgebraPtr& g, const std::vector<std::string>& vertices);

}  // namespace singequiv
