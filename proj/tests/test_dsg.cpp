#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "oracle.hpp"

using namespace testing;

TEST_CASE("perfect modules") {
  const auto a2 = fixture("a2").algebra();
  CHECK(is_perfect_module(simple(a2, vx(*a2, "1"))).str() == "PERFECT(1)");
  const auto du = fixture("dual").algebra();
  CHECK(is_perfect_module(simple(du, 0), 7).str() == "NOT_WITHIN(7)");
  CHECK(is_perfect_module(regular(du)).str() == "PERFECT(0)");
}

TEST_CASE("Gorenstein dimension") {
  CHECK(gorenstein(fixture("dual").algebra()).str() == "GORENSTEIN(0)");
  CHECK(gorenstein(fixture("a2").algebra()).str() == "GORENSTEIN(1)");
  CHECK(gorenstein(fixture("e33").algebra()).str() == "GORENSTEIN(2)");
  const GorensteinReport e31 = gorenstein(fixture("e31").algebra(), 10);
  CHECK_FALSE(e31.certified());
  CHECK(e31.str() == "NOT_CERTIFIED");
}

TEST_CASE("dsg over the dual numbers is one-dimensional in every degree") {
  const auto du = fixture("dual").algebra();
  const Module s = simple(du, 0);
  for (int i = -3; i <= 3; ++i) {
    const DsgHomReport r = dsg_hom_dim(s, s, i);
    CAPTURE(i);
    CHECK(r.value == 1u);
    CHECK(r.status == Stability::ProvablyStable);
  }
}

TEST_CASE("dsg vanishes for perfect modules") {
  const auto a2 = fixture("a2").algebra();
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t v = 0; v < 2; ++v)
      for (int i = -1; i <= 1; ++i) {
        const DsgHomReport r = dsg_hom_dim(simple(a2, u), simple(a2, v), i);
        CHECK(r.value == 0u);
        CHECK(r.status == Stability::ProvablyStable);
      }
  // projectives vanish over any algebra
  const auto e31 = fixture("e31").algebra();
  DsgOptions opt;
  opt.bound = 4;
  const DsgHomReport p = dsg_hom_dim(projective(e31, vx(*e31, "c")), simple(e31, vx(*e31, "c")), 0, opt);
  for (auto d : p.dims) CHECK(d == 0);
}

TEST_CASE("syzygy growth over the E31 quotient is Fibonacci") {
  const auto g = fixture("e31").algebra();
  const auto q = quotient_algebra(g, vertex_ideal_named(g, {"1"})).algebra;
  const Module s = simple(q, vx(*q, "c"));
  CHECK(to_sizes(syzygy_growth(s, 7)) == std::vector<std::size_t>{1, 2, 3, 5, 8, 13, 21, 34});
  // independent count over the presented quotient
  const Presentation qp = parse_presentation(fixtures::e31_quotient_source());
  const oracle::Algebra o(qp, 1000003);
  const auto t = oracle::syzygies(o, oracle::simple(o, qp.quiver.find_vertex("c").value()), 7);
  CHECK(t.dims == std::vector<std::size_t>{1, 2, 3, 5, 8, 13, 21, 34});
  DsgOptions opt;
  opt.bound = 5;
  CHECK(dsg_hom_dim(s, s, 0, opt).status != Stability::ProvablyStable);
}

TEST_CASE("heuristic status needs a bijective window") {
  // self-injective: Omega is an equivalence, so transitions are bijective
  const auto du = fixture("dual").algebra();
  DsgOptions opt;
  opt.gorenstein = GorensteinReport{};  // pretend nothing is known
  opt.bound = 6;
  const DsgHomReport r = dsg_hom_dim(simple(du, 0), simple(du, 0), 0, opt);
  CHECK(r.status == Stability::HeuristicallyStable);
  CHECK(r.value == 1u);
  CHECK(r.transition_ranks.back() == 1);
}

TEST_CASE("equivalence shadow on E33") {
  const auto g = fixture("e33").algebra();
  const ShadowReport sh = equivalence_shadow(vertex_ideal_named(g, {"1p", "2p", "3p"}), {-2, -1, 0, 1, 2});
  CHECK(sh.certified);
  CHECK(sh.cells.size() == 45);
  CHECK(sh.matches() == 45);
  for (const auto& c : sh.cells) {
    CHECK(c.quotient_side.status == Stability::ProvablyStable);
    CHECK(c.algebra_side.status == Stability::ProvablyStable);
  }
  CHECK(sh.quotient_gorenstein.str() == "GORENSTEIN(0)");
  CHECK(sh.algebra_gorenstein.str() == "GORENSTEIN(2)");
}

TEST_CASE("an uncertified ideal still produces a labelled shadow") {
  const auto g = fixture("e33").algebra();
  DsgOptions opt;
  opt.bound = 6;
  const ShadowReport sh = equivalence_shadow(vertex_ideal_named(g, {"1"}), {0}, opt, 6);
  CHECK_FALSE(sh.certified);
  CHECK(sh.cells.size() == 25);
}
