#include <catch_amalgamated.hpp>

#include "raag/surface.hpp"

using namespace raag;

TEST_CASE("surface parsing and formatting") {
  SurfaceType n16 = parse_surface("N{1,6}");
  CHECK_FALSE(n16.orientable);
  CHECK(n16.genus == 1);
  CHECK(n16.marked == 6);
  CHECK(n16.boundary == 0);
  CHECK(format_surface(n16) == "N{1,6}");

  SurfaceType bordered = parse_surface("S{0,1}+3");
  CHECK(bordered.boundary == 3);
  CHECK(bordered.marked == 1);
  CHECK(format_surface(bordered) == "S{0,1}+3");

  CHECK_THROWS_AS(parse_surface("X{1,2}"), input_error);
  CHECK_THROWS_AS(parse_surface("N{0,2}"), input_error);
  CHECK_THROWS_AS(parse_surface("N{1,2}-3"), input_error);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(surface('N', 1, 0)) == 1);
  CHECK(euler_characteristic(surface('S', 0, 10)) == 2);
  CHECK(euler_characteristic(surface('N', 3, 3)) == -1);
  CHECK(euler_characteristic(surface('S', 0, 0, 2)) == 0);  // annulus
  CHECK(euler_characteristic(surface('N', 1, 0, 1)) == 0);  // moebius band
}

TEST_CASE("xi-two values") {
  CHECK(xi_two(surface('N', 1, 0)) == 0);
  CHECK(xi_two(surface('N', 1, 1)) == 0);
  CHECK(xi_two(surface('N', 2, 0)) == 1);
  CHECK(xi_two(surface('N', 1, 6)) == 4);
  CHECK(xi_two(surface('N', 3, 3)) == 4);
  CHECK(xi_two(surface('N', 5, 0)) == 4);
  CHECK(xi_two(surface('N', 1, 4)) == 2);
  CHECK_THROWS_AS(xi_two(surface('S', 1, 0)), input_error);
  // boundary circles count as marked points
  CHECK(xi_two(surface('N', 1, 3, 3)) == xi_two(surface('N', 1, 6)));
}

TEST_CASE("xi formula grid") {
  for (int g = 0; g <= 4; ++g)
    for (int m = 0; m <= 5; ++m) {
      CHECK(xi(surface('S', g, m)) == std::max(3 * g + m - 3, 0));
      if (g >= 1) CHECK(xi(surface('N', g, m)) == std::max(2 * g + m - 3, 0));
    }
  CHECK(xi(surface('S', 0, 4)) == 1);
  CHECK(xi(surface('S', 1, 1)) == 1);
  CHECK(xi(surface('N', 1, 3)) == 2);
}

TEST_CASE("zeta piece complexity") {
  CHECK(zeta(surface('N', 1, 3)) == 1);
  CHECK(zeta(surface('S', 0, 4)) == 1);
  CHECK(zeta(surface('N', 1, 4)) == 2);
  CHECK(zeta(surface('S', 0, 5)) == 2);
  CHECK(zeta(surface('S', 0, 2)) == 0);
  CHECK(zeta(surface('N', 1, 2)) == 0);
  CHECK(zeta(surface('N', 2, 1)) == 1);
  CHECK(zeta(surface('S', 1, 1)) == 1);
  CHECK(zeta(surface('N', 2, 2)) == 2);
  CHECK(zeta(surface('S', 1, 2)) == 2);
}

TEST_CASE("orientation double cover") {
  CHECK(orientation_double_cover(surface('N', 1, 4)) == surface('S', 0, 8));
  CHECK(orientation_double_cover(surface('N', 3, 3)) == surface('S', 2, 6));
  CHECK(orientation_double_cover(surface('N', 5, 0)) == surface('S', 4, 0));
  CHECK_THROWS_AS(orientation_double_cover(surface('S', 1, 0)), input_error);
  CHECK_THROWS_AS(orientation_double_cover(surface('N', 1, 0, 1)), input_error);

  for (int g = 1; g <= 6; ++g)
    for (int m = 0; m <= 4; ++m) {
      SurfaceType n = surface('N', g, m);
      CHECK(euler_characteristic(orientation_double_cover(n)) == 2 * euler_characteristic(n));
    }
}
