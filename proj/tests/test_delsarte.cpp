#include "doctest.h"

#include <random>

#include "bhcr/fixtures.hpp"
#include "support.hpp"

using namespace bhcr;
using testing::error_of;
using testing::poly;

TEST_CASE("parse the Fermat cubic") {
  auto p = poly("x0^3+x1^3+x2^3");
  CHECK(p.exponents() == IntMatrix{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  CHECK(p.var_names() == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK(p.determinant() == 27);
}

TEST_CASE("parse a single variable") {
  auto p = poly("x0^2");
  CHECK(p.exponents() == IntMatrix{{2}});
}

TEST_CASE("parse a loop") {
  auto p = poly("x0^2*x1+x1^2*x2+x2^2*x0");
  CHECK(p.exponents() == IntMatrix{{2, 1, 0}, {0, 2, 1}, {1, 0, 2}});
  CHECK(p.determinant() == 9);
}

TEST_CASE("parser accepts juxtaposition, spaces and signs") {
  auto p = poly(" x1^4 + x2^4 - y1^5y2 - y2^5 y3 - y3^6 ");
  CHECK(p.var_names() == std::vector<std::string>{"x1", "x2", "y1", "y2", "y3"});
  CHECK(p.coefficients() == std::vector<Integer>{1, 1, -1, -1, -1});
  CHECK(p.exponents() == IntMatrix{{4, 0, 0, 0, 0}, {0, 4, 0, 0, 0}, {0, 0, 5, 1, 0}, {0, 0, 0, 5, 1}, {0, 0, 0, 0, 6}});
}

TEST_CASE("variables sort numerically") {
  auto p = poly("x10^2+x2^3+x1^6");
  CHECK(p.var_names() == std::vector<std::string>{"x1", "x2", "x10"});
}

TEST_CASE("coefficients are recorded with a warning") {
  std::vector<std::string> warnings;
  auto p = parse_delsarte("3*x0^2+x1^2", &warnings);
  CHECK(p.coefficients() == std::vector<Integer>{3, 1});
  CHECK(warnings.size() == 1);
}

TEST_CASE("parser errors") {
  CHECK(error_of([] { poly("x0^2+x1^2+x0^3"); }) == ErrorKind::NonSquare);
  CHECK(error_of([] { poly("x0^2+x0^2"); }) == ErrorKind::NonSquare);
  CHECK(error_of([] { poly("x0^2*x1+x0^2*x1+x1^3"); }) == ErrorKind::NonSquare);
  CHECK(error_of([] { poly("x0*x1+x0*x1"); }) == ErrorKind::DuplicateMonomial);
  CHECK(error_of([] { poly("x0^2*x1^2+x0*x1"); }) == ErrorKind::SingularMatrix);
  CHECK(error_of([] { poly("x0^-2+x1^2"); }) == ErrorKind::NegativeOrMalformedExponent);
  CHECK(error_of([] { poly("x0^a+x1^2"); }) == ErrorKind::NegativeOrMalformedExponent);
  CHECK(error_of([] { poly("x0^2+"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { poly(""); }) == ErrorKind::ParseError);
  const std::vector<std::string> declared{"x0", "x1"};
  CHECK(error_of([&] { parse_delsarte("x0^2+x2^2", nullptr, &declared); }) == ErrorKind::UnknownVariable);
}

TEST_CASE("parse round trips through to_string") {
  for (const auto& row : elliptic_table()) {
    auto again = poly(row.potential.to_string());
    CHECK(again == row.potential);
  }
}

TEST_CASE("transpose examples") {
  CHECK(transpose(poly("x0^2+x1^3*x2+x2^4")).exponents() == poly("x0^2+x1^3+x1*x2^4").exponents());
  CHECK(transpose(poly("x0^3+x1^3+x2^3")) == poly("x0^3+x1^3+x2^3"));
  auto t = transpose(poly("x0^3+x1^2*x2+x2^3"));
  CHECK(t.exponents() == IntMatrix{{3, 0, 0}, {0, 2, 0}, {0, 1, 3}});
  CHECK(t.to_string() == "x0^3+x1^2+x1*x2^3");
}

TEST_CASE("transpose is an involution and preserves |det|") {
  std::mt19937 rng(7);
  int tried = 0;
  while (tried < 200) {
    std::uniform_int_distribution<int> dim(1, 4), ex(0, 4);
    const auto n = static_cast<std::size_t>(dim(rng));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? 1 + ex(rng) : (ex(rng) > 3 ? 1 : 0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    try {
      DelsartePolynomial p(m, names);
      ++tried;
      CHECK(transpose(transpose(p)) == p);
      CHECK(transpose(p).determinant() == p.determinant());
      CHECK(transpose(p).determinant() == oracle::det(testing::to_mat(p)));
    } catch (const Error&) {
    }
  }
}

TEST_CASE("equivalence up to permutation") {
  auto row4 = poly("x0^3+x1^2*x2+x2^3");
  auto row13 = poly("x0^2+x0*x2^3+x1^3");
  auto perm = equivalent_up_to_permutation(transpose(row4), row13);
  REQUIRE(perm);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(row13.exponents()(i, j) == transpose(row4).exponents()(perm->rows[i], perm->cols[j]));

  auto p = poly("x0^2*x1+x1^2*x2+x2^3");
  auto id = equivalent_up_to_permutation(p, p);
  REQUIRE(id);
  CHECK(id->rows == std::vector<std::size_t>{0, 1, 2});
  CHECK(id->cols == std::vector<std::size_t>{0, 1, 2});

  auto row7 = poly("x0^2+x0*x1^2+x1*x2^3");
  CHECK(equivalent_up_to_permutation(transpose(p), row7));
  CHECK_FALSE(equivalent_up_to_permutation(p, row7));
}

TEST_CASE("atomic decomposition examples") {
  auto fermat = atomic_decomposition(poly("x0^3+x1^3+x2^3"));
  REQUIRE(fermat.determined);
  CHECK(fermat.blocks.size() == 3);
  for (const auto& b : fermat.blocks) {
    CHECK(b.kind == AtomKind::Fermat);
    CHECK(b.exponents == std::vector<Integer>{3});
  }
  CHECK(atomic_decomposition(poly("x0^2*x1+x1^2*x2+x2^3")).to_string() == "chain(2,2,3)");
  auto loop = atomic_decomposition(poly("x0^2*x1+x1^2*x2+x2^2*x0"));
  REQUIRE(loop.blocks.size() == 1);
  CHECK(loop.blocks[0].kind == AtomKind::Loop);
  CHECK(loop.blocks[0].exponents == std::vector<Integer>{2, 2, 2});
  CHECK(atomic_decomposition(poly("y0^2+y1^5*y2+y2^5*y3+y3^6")).to_string() == "fermat(2) + chain(5,5,6)");
  CHECK_FALSE(atomic_decomposition(poly("x0^2*x1*x2+x1^3+x2^3")).determined);
}

TEST_CASE("every table row decomposes into atoms") {
  for (const auto& row : elliptic_table()) {
    auto dec = atomic_decomposition(row.potential);
    CHECK(dec.determined);
    std::vector<bool> seen(row.potential.size(), false);
    for (const auto& b : dec.blocks)
      for (auto v : b.variables) {
        CHECK_FALSE(seen[v]);
        seen[v] = true;
      }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}
