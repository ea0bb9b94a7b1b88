#include <doctest.h>

#include "asymcone/euler.hpp"
#include "asymcone/oracle.hpp"
#include "test_util.hpp"

using namespace asymcone;
using testutil::make;

TEST_CASE("central complements have Euler characteristic zero") {
  CHECK(complement_euler(testutil::boolean2()) == 0);
  CHECK(complement_euler(testutil::braid3()) == 0);
  CHECK(complement_euler(make(1, {{1}})) == 0);

  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    Arrangement a =
        testutil::random_arrangement(rng, 1 + rng() % 4, 1 + rng() % 6, true);
    CHECK(complement_euler(a) == 0);
  }
}

TEST_CASE("deconed complements of the fixtures") {
  CHECK(decone_euler(testutil::boolean2()) == 0);
  CHECK(decone_euler(testutil::three_lines()) == -1);
  CHECK(decone_euler(testutil::braid3()) == -1);
}

TEST_CASE("fiber Euler characteristics of the fixtures") {
  CHECK(milnor_euler(make(1, {{1}}, {3})) == 3);   // {x^3 = 1} is 3 points
  CHECK(milnor_euler(testutil::boolean2()) == 0);  // {xy = 1} is a torus
  CHECK(milnor_euler(testutil::three_lines()) == -3);
}

TEST_CASE("one variable: the fiber of a power is its degree") {
  for (long m = 1; m <= 10; ++m)
    CHECK(milnor_euler(make(1, {{1}}, {m})) == m);
}

TEST_CASE("milnor_euler scales exactly with the total degree") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    Arrangement a =
        testutil::random_arrangement(rng, 1 + rng() % 3, 1 + rng() % 5, true);
    Arrangement b = a;
    b.forms[rng() % b.forms.size()].mult += 1 + rng() % 3;
    // The lattice is unchanged, so the two fibers differ only through the
    // covering degree.
    CHECK(milnor_euler(b) * a.total_degree() ==
          milnor_euler(a) * b.total_degree());
  }
}

TEST_CASE("decone characteristic is independent of the slice") {
  std::mt19937_64 rng(9);
  std::vector<Arrangement> cases = {testutil::boolean2(), testutil::boolean3(),
                                    testutil::braid3(), testutil::three_lines()};
  for (int iter = 0; iter < 25; ++iter)
    cases.push_back(
        testutil::random_arrangement(rng, 1 + rng() % 3, 1 + rng() % 5, true));
  for (const Arrangement& a : cases) {
    Int expected = decone_euler(a);
    for (std::size_t i = 0; i < a.forms.size(); ++i)
      CHECK(oracle::affine_decone_euler(a, i) == expected);
  }
}
