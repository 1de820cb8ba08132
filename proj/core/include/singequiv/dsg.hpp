#pragma once

#include "singequiv/bimodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace singequiv {

// A module vanishes in the singularity category iff it has finite pd.
struct PerfectReport {
  Bounded pd;
  bool perfect() const { return pd.finite(); }
  std::string str() const;  // PERFECT(d) or NOT_WITHIN(bound)
};
PerfectReport is_perfect_module(const Module& m, std::size_t bound = 20);

struct GorensteinReport {
  Bounded injdim_left;
  Bounded injdim_right;
  // Set only when both sides are finite and equal.
  std::optional<std::size_t> dimension;
  bool certified() const { return dimension.has_value(); }
  std::string str() const;  // GORENSTEIN(d) or NOT_CERTIFIED
};
GorensteinReport gorenstein(const AlgebraPtr& a, std::size_t bound = 20);

enum class Stability { ProvablyStable, HeuristicallyStable, NotStabilized };
std::string to_string(Stability s);

/// Hom(M, N[i]) in the singularity category read off from
/// d_n = dim stHom(Omega^n M, Omega^{n-i} N), n = max(0, i) .. bound, with the
/// transition maps induced by Omega.
struct DsgHomReport {
  int shift = 0;
  std::size_t bound = 0;
  std::size_t window = 0;
  std::size_t first = 0;                  // first n computed
  std::vector<std::size_t> dims;          // d_first, d_first+1, ...
  std::vector<std::size_t> transition_ranks;  // rank of d_n -> d_{n+1}
  std::optional<std::size_t> gorenstein_dim;
  Stability status = Stability::NotStabilized;
  std::optional<std::size_t> value;
  std::size_t stable_from = 0;            // n from which the value is asserted
};

struct DsgOptions {
  std::size_t bound = 12;
  std::size_t window = 3;
  // Gorenstein certificate of the acting algebra; computed when absent.
  std::optional<GorensteinReport> gorenstein;
  std::size_t gorenstein_bound = 20;
  // Stop once the provable cutoff is reached and `window` further values agree.
  bool stop_when_certified = true;
};

DsgHomReport dsg_hom_dim(const Module& m, const Module& n, int shift, const DsgOptions& opt = {});

std::vector<Multiplicity> syzygy_growth(const Module& m, std::size_t n);

struct ShadowCell {
  std::string source, target;  // vertex names of the simples
  int shift = 0;
  DsgHomReport quotient_side;  // over B = A/J
  DsgHomReport algebra_side;   // over A, modules restricted along A -> B
  bool match() const {
    return quotient_side.value && algebra_side.value && *quotient_side.value == *algebra_side.value &&
           quotient_side.status != Stability::NotStabilized && algebra_side.status != Stability::NotStabilized;
  }
};

struct ShadowReport {
  bool certified = false;  // theorem_hypothesis_check on (A, J)
  TheoremReport theorem;
  AlgebraPtr quotient;
  GorensteinReport quotient_gorenstein;
  GorensteinReport algebra_gorenstein;
  std::vector<ShadowCell> cells;
  std::size_t matches() const;
};

// All ordered pairs of simple B-modules (left) and the given shifts.
ShadowReport equivalence_shadow(const Ideal& j, const std::vector<int>& shifts, const DsgOptions& opt = {},
                                std::size_t theorem_bound = 20);

}  // namespace singequiv
