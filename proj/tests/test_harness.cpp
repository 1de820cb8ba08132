#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "oracle.hpp"

using namespace testing;

TEST_CASE("instance seeds are stable and distinct") {
  CHECK(instance_seed(42, 0) == instance_seed(42, 0));
  CHECK(instance_seed(42, 0) != instance_seed(42, 1));
  CHECK(instance_seed(42, 1) != instance_seed(43, 1));
}

TEST_CASE("random monomial algebras respect the options") {
  Rng rng(9);
  const RandomAlgebraOptions opt{3, 4, 10};
  for (int k = 0; k < 30; ++k) {
    const auto a = random_monomial_algebra(rng, opt);
    CHECK(a->dim() <= 10);
    CHECK(a->vertex_count() <= 3);
  }
}

TEST_CASE("the harness is reproducible and clean") {
  const HarnessReport a = run_harness({42, 25, 6});
  const HarnessReport b = run_harness({42, 25, 6});
  CHECK(a.ideals == b.ideals);
  CHECK(a.ideals_yes == b.ideals_yes);
  CHECK(a.extensions_nontrivial == b.extensions_nontrivial);
  CHECK(a.violations.empty());
  CHECK(a.round_trips == a.extensions);
  CHECK(a.non_injective == a.extensions_nontrivial);
}

TEST_CASE("replaying one instance reproduces its counts") {
  const HarnessReport full = run_harness({7, 6, 6});
  HarnessReport sum;
  for (std::size_t k = 0; k < 6; ++k) run_harness_instance(k, instance_seed(7, k), 6, sum);
  CHECK(sum.ideals == full.ideals);
  CHECK(sum.resolutions == full.resolutions);
  CHECK(sum.tor_checks == full.tor_checks);
  CHECK(sum.violations.size() == full.violations.size());
}

TEST_CASE("random algebras: library dims and syzygies agree with the oracle") {
  Rng rng(77);
  for (int k = 0; k < 20; ++k) {
    const std::string src = random_monomial_source(rng, {});
    const Presentation p = parse_presentation(src);
    const auto a = build_algebra(p).algebra();
    const oracle::Algebra o(p, 1000003);
    CAPTURE(src);
    REQUIRE(a->dim() == o.dim());
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
      // the dense oracle is only run while the syzygies stay small
      auto lib = to_sizes(syzygy_dims(simple(a, v), 3));
      while (lib.size() > 1 && lib.back() > 60) lib.pop_back();
      CHECK(lib == oracle::syzygies(o, oracle::simple(o, v), lib.size() - 1).dims);
    }
  }
}
