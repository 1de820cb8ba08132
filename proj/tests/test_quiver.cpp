#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "oracle.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace testing;

namespace {

constexpr oracle::i64 kBigPrime = 1000003;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t oracle_dim(const Presentation& p, oracle::i64 prime = kBigPrime) { return oracle::Algebra(p, prime).dim(); }

}  // namespace

TEST_CASE("parser: directives and both composition conventions") {
  const auto fn = from_text("field Q\nvertices 1, 2, 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nnilpotency 3\n");
  CHECK(fn.algebra()->dim() == 6);
  // "b a" in function order is the path a then b
  const auto f = from_text(
      "field Q\ncomposition function\nvertices 1, 2, 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation b a\nnilpotency 3\n");
  const auto d = from_text(
      "field Q\ncomposition diagram\nvertices 1, 2, 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a b\nnilpotency 3\n");
  CHECK(f.algebra()->dim() == 5);
  CHECK(same_structure_by_labels(*f.algebra(), *d.algebra()));
}

TEST_CASE("parser: errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_presentation(text);
    } catch (const PresentationError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("field Q\nvertices 1\narrow a: 1 -> 2\nnilpotency 2\n") == 3);
  CHECK(line_of("field Q\nvertices 1, 2\narrow a: 1 -> 2\nrelation a a\nnilpotency 2\n") == 4);
  CHECK(line_of("field Q\nvertices 1\nbogus\n") == 3);
  CHECK(line_of("field F 4\n") == 1);
  CHECK_THROWS_AS(parse_presentation("field Q\nvertices 1\n"), PresentationError);  // no nilpotency
  CHECK_THROWS_AS(parse_presentation("field Q\nvertices 1, 1\nnilpotency 1\n"), PresentationError);
  // non-parallel relation
  CHECK_THROWS_AS(
      parse_presentation("field Q\nvertices 1, 2\narrow a: 1 -> 2\narrow b: 2 -> 1\narrow c: 1 -> 1\n"
                         "relation b a - c\nnilpotency 3\n"),
      PresentationError);
}

TEST_CASE("nilpotency bound must be certified") {
  // a loop with no relation is never nilpotent
  CHECK_THROWS_AS(build_algebra(parse_presentation("field Q\nvertices 1\narrow x: 1 -> 1\nnilpotency 3\n")),
                  PresentationError);
  CHECK_NOTHROW(build_algebra(parse_presentation("field Q\nvertices 1\narrow x: 1 -> 1\nrelation x x x\nnilpotency 3\n")));
}

TEST_CASE("every shipped fixture parses, validates and matches the brute-force dimension") {
  const std::filesystem::path dir = SINGEQUIV_FIXTURE_DIR;
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".qa") continue;
    ++seen;
    CAPTURE(entry.path().filename().string());
    const Presentation p = parse_presentation(read_file(entry.path()));
    const QuiverAlgebra qa = build_algebra(p);
    CHECK(validate(qa.algebra()->data()).ok());
    CHECK(qa.algebra()->dim() == oracle_dim(p));
  }
  CHECK(seen >= 6);
}

TEST_CASE("fixture files agree with the built-in sources") {
  const std::filesystem::path dir = SINGEQUIV_FIXTURE_DIR;
  for (const std::string id : {"dual", "a2", "e31", "e32"}) {
    CAPTURE(id);
    const auto file = build_algebra(parse_presentation(read_file(dir / (id + ".qa"))));
    CHECK(same_structure_by_labels(*file.algebra(), *fixture(id).algebra()));
  }
  const auto e33 = build_algebra(parse_presentation(read_file(dir / "e33_r2.qa")));
  CHECK(same_structure_by_labels(*e33.algebra(), *fixture("e33", 2).algebra()));
}

TEST_CASE("fixture dimensions against the oracle, over Q-like and F2") {
  for (const std::string id : {"dual", "a2", "e31", "e32", "e33"}) {
    CAPTURE(id);
    const Presentation p = fixtures::by_name(id, 2);
    const std::size_t d = build_algebra(p).algebra()->dim();
    CHECK(d == oracle_dim(p));
    CHECK(d == oracle_dim(p, 2));
    CHECK(build_algebra(with_field(p, Field::prime(2))).algebra()->dim() == d);
  }
  CHECK(fixture("e31").algebra()->dim() == 9);
  CHECK(fixture("e32").algebra()->dim() == 11);
  for (int r = 2; r <= 4; ++r) {
    const Presentation p = fixtures::by_name("e33", r);
    CHECK(build_algebra(p).algebra()->dim() == static_cast<std::size_t>(9 * r + 12));
    CHECK(oracle_dim(p) == static_cast<std::size_t>(9 * r + 12));
  }
}

TEST_CASE("structure constants agree with the oracle product") {
  for (const std::string id : {"e31", "e32", "e33"}) {
    CAPTURE(id);
    const Presentation p = fixtures::by_name(id, 2);
    const QuiverAlgebra qa = build_algebra(p);
    const oracle::Algebra o(p, kBigPrime);
    const auto& a = *qa.algebra();
    // map library basis to oracle coordinates through the basis paths
    std::vector<oracle::Vec> img;
    for (const auto& path : qa.basis_paths()) {
      oracle::Path op{path.source, path.target, path.arrows};
      img.push_back(o.path_vec(op));
    }
    auto to_oracle = [&](const Vector& x) {
      oracle::Vec out(o.dim(), 0);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const oracle::i64 c = oracle::md(mpz_class(x[i].get_num() % kBigPrime).get_si(), kBigPrime) *
                              oracle::inv(oracle::md(mpz_class(x[i].get_den() % kBigPrime).get_si(), kBigPrime),
                                          kBigPrime) %
                              kBigPrime;
        for (std::size_t k = 0; k < o.dim(); ++k) out[k] = oracle::md(out[k] + c * img[i][k], kBigPrime);
      }
      return out;
    };
    bool ok = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        ok = ok && to_oracle(a.multiply(a.basis_vector(i), a.basis_vector(j))) == o.mul(img[i], img[j]);
    CHECK(ok);
  }
}

TEST_CASE("algebra axioms on fixtures and random monomial algebras") {
  for (const std::string id : {"dual", "a2", "e31", "e32", "e33"}) {
    const auto a = fixture(id).algebra();
    CHECK(validate(a->data()).ok());
    CHECK(validate(a->opposite()->data()).ok());
    CHECK(a->opposite()->opposite()->same_as(*a));
  }
  Rng rng(5);
  for (int k = 0; k < 25; ++k) {
    const std::string src = random_monomial_source(rng, {});
    const Presentation p = parse_presentation(src);
    const auto qa = build_algebra(p);
    CAPTURE(src);
    CHECK(qa.algebra()->dim() == oracle_dim(p));
    CHECK(validate(qa.algebra()->data()).ok());
  }
}

TEST_CASE("ideals, quotients and corners") {
  const auto g = fixture("e31").algebra();
  const Ideal j = vertex_ideal_named(g, {"1"});
  CHECK(j.space.dim() == 4);
  CHECK(is_two_sided_ideal(*g, j.space));
  CHECK(product_space(*g, j.space, j.space) == j.space);
  const Quotient q = quotient_algebra(g, j);
  CHECK(q.algebra->dim() == 5);
  CHECK(validate(q.projection).ok());
  const Presentation target = parse_presentation(fixtures::e31_quotient_source());
  CHECK(quotient_presentation_check(q.algebra, target, generator_map_by_labels(*q.algebra, target)).ok);
  CHECK(q.algebra->radical_square().dim() == 0);
  const Corner c = corner(g, std::vector<std::size_t>{vx(*g, "c"), vx(*g, "2")});
  // e_c, e_2, x, delta, gamma and alpha beta = gamma delta
  CHECK(c.algebra->dim() == 6);
  // brute-force ideal dims for every vertex
  const oracle::Algebra o(fixtures::by_name("e31"), kBigPrime);
  for (std::size_t v = 0; v < g->vertex_count(); ++v) CHECK(vertex_ideal(g, {v}).space.dim() == o.vertex_ideal_dim({v}));
}

TEST_CASE("presentation check rejects a wrong target") {
  const auto g = fixture("e31").algebra();
  const auto q = quotient_algebra(g, vertex_ideal_named(g, {"1"})).algebra;
  // dropping x x from the expected presentation changes the dimension
  const Presentation wrong = parse_presentation(
      "field Q\nvertices c, 2\narrow delta: c -> 2\narrow gamma: 2 -> c\narrow x: c -> c\n"
      "relation x x x\nrelation delta x\nrelation x gamma\nrelation delta gamma\nrelation gamma delta\nnilpotency 3\n");
  CHECK_FALSE(quotient_presentation_check(q, wrong, generator_map_by_labels(*q, wrong)).ok);
}
