#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singequiv/claims.hpp"
#include "singequiv/quiver.hpp"

using namespace singequiv;

TEST_CASE("every fixture claim suite passes") {
  for (const std::string id : {"dual", "a2", "e31", "e32", "e33"}) {
    const ExampleReport r = verify_example(id);
    CAPTURE(id);
    for (const auto& c : r.claims) {
      CAPTURE(c.id);
      CAPTURE(c.observed);
      CHECK(c.passed);
    }
    CHECK(r.all_passed());
  }
}

TEST_CASE("E31 evidence claims are labelled as such") {
  const ExampleReport r = verify_example("e31");
  std::size_t evidence = 0;
  for (const auto& c : r.claims)
    if (c.kind == ClaimKind::Evidence) ++evidence;
  CHECK(evidence >= 3);
  for (const auto& c : r.claims)
    if (c.id == "gorenstein" || c.id == "growth" || c.id == "dsg") CHECK(c.kind == ClaimKind::Evidence);
}

TEST_CASE("E33 for r = 3") {
  const ExampleReport r = verify_example("e33", 3);
  CHECK(r.all_passed());
}

TEST_CASE("unknown fixture ids are rejected") { CHECK_THROWS_AS(verify_example("nope"), PresentationError); }
