#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "braidnomial/equation.hpp"

using namespace braidnomial;

TEST_CASE("quintic constants") {
  auto eq = build_equation(5, 3, 2, 7);
  CHECK(eq.m == 1); CHECK(eq.n == 5); CHECK(eq.p == 3); CHECK(eq.q == 2);
  CHECK(eq.N == 4); CHECK(eq.R == Rational(108, 3125));
}

TEST_CASE("non-coprime example") {
  auto eq = build_equation(6, 2, 1, 2);
  CHECK(eq.m == 2); CHECK(eq.n == 3); CHECK(eq.p == 1); CHECK(eq.q == 2);
  CHECK(eq.N == 1); CHECK(eq.R == Rational(4, 27));
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(build_equation(3, 1, 1, 1), NonConvexNewton);
}

TEST_CASE("coincidence pairs, quintic") {
  auto eq = build_equation(5, 3, 2, 7);
  CHECK(coincidence_pair(eq, 0) == std::pair<long,long>(2, 0));
  CHECK(coincidence_pair(eq, 1) == std::pair<long,long>(3, 1));
  CHECK(coincidence_pair(eq, 2) == std::pair<long,long>(4, 2));
  CHECK(coincidence_pair(eq, 3) == std::pair<long,long>(0, 3));
}

TEST_CASE("newton polygon") {
  CHECK(newton_polygon(build_equation(5, 3, 2, 7)).area_twice == 4);
  CHECK(newton_polygon(build_equation(4, 1, 2, 5)).area_twice == 7);
}
