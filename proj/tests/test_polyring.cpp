#include "d4cr/polyring.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace d4cr;
using testsupport::evaluate;
using testsupport::random_point;
using testsupport::random_poly;

namespace {
Poly x(int i) { return Poly::var("x" + std::to_string(i)); }
}  // namespace

TEST_CASE("natural symbol order") {
  CHECK(compare_symbol_names("x5", "x10") < 0);
  CHECK(compare_symbol_names("x10", "x5") > 0);
  CHECK(compare_symbol_names("x10", "y") < 0);
  CHECK(compare_symbol_names("x9", "x9") == 0);
  CHECK(compare_symbol_names("a", "b") < 0);
}

TEST_CASE("rendering") {
  CHECK(Poly::zero().to_string() == "0");
  CHECK(Poly::one().to_string() == "1");
  CHECK(Poly::a().to_string() == "a");
  CHECK((Poly::a() * Poly::sqrt_a()).to_string() == "a*r");
  CHECK((Poly::var("y") + x(9)).to_string() == "y+x9");
  CHECK((x(5) * x(10) + Poly::a()).to_string() == "x5*x10+a");
  CHECK((x(9) * x(9)).to_string() == "x9^2");
  CHECK(Poly::unit("s").inverse().to_string() == "s^-1");
}

TEST_CASE("characteristic two") {
  CHECK((x(1) + x(1)).is_zero());
  CHECK(Poly::constant(2).is_zero());
  CHECK(Poly::constant(3).is_one());
  CHECK((x(1) + Poly::one()).pow(2) == x(1) * x(1) + Poly::one());
}

TEST_CASE("invertibility rules") {
  CHECK_THROWS_AS(x(1).pow(-1), PolyError);
  CHECK_THROWS_AS((Poly::unit("s") + Poly::one()).inverse(), PolyError);
  CHECK(Poly::unit("s").pow(-2) * Poly::unit("s").pow(2) == Poly::one());
  CHECK_THROWS_AS(Monomial({{Symbol{"x1", false}, -1}}), PolyError);
  CHECK_THROWS_AS(Poly::var("s") + Poly::unit("s"), PolyError);
  CHECK(Poly::unit("s").is_unit());
  CHECK_FALSE(x(1).is_unit());
}

TEST_CASE("substitution") {
  std::map<std::string, Poly> b{{"x1", x(2) + Poly::one()}};
  CHECK(substitute(x(1) * x(1) + x(3), b) == x(2) * x(2) + Poly::one() + x(3));
  // simultaneous
  std::map<std::string, Poly> swap{{"x1", x(2)}, {"x2", x(1)}};
  CHECK(substitute(x(1) + x(2) * x(2), swap) == x(2) + x(1) * x(1));
  CHECK_THROWS_AS(substitute(Poly::unit("s"), {{"s", x(1) + Poly::one()}}), PolyError);
  CHECK(substitute(Poly::unit("s").pow(-1), {{"s", Poly::unit("t")}}) == Poly::unit("t").pow(-1));
  CHECK(add(x(1), x(2)) == x(1) + x(2));
  CHECK(mul(x(1), x(2)) == x(1) * x(2));
}

TEST_CASE("k-rationality and square roots") {
  CHECK(is_k_rational(Poly::a()));
  CHECK(is_k_rational(x(1) * Poly::a() + Poly::one()));
  CHECK_FALSE(is_k_rational(Poly::sqrt_a()));
  CHECK(square_root_if_perfect_square(Poly::a()) == Poly::sqrt_a());
  CHECK(square_root_if_perfect_square(x(4) * x(4) + x(9) * x(9)) == x(4) + x(9));
  CHECK_FALSE(square_root_if_perfect_square(x(4) * x(5)).has_value());
  CHECK(square_root_if_perfect_square(Poly::zero()) == Poly::zero());
}

TEST_CASE("evaluation at GF(2^8) points is a ring homomorphism") {
  for (int i = 0; i < 300; ++i) {
    Poly p = random_poly(), q = random_poly();
    auto at = random_point();
    CHECK(evaluate(p + q, at) == (evaluate(p, at) ^ evaluate(q, at)));
    CHECK(evaluate(p * q, at) == testsupport::gf_mul(evaluate(p, at), evaluate(q, at)));
  }
}

TEST_CASE("canonical form: equal polynomials have equal terms") {
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(), q = random_poly();
    Poly s1 = p + q, s2 = q + p;
    CHECK(s1.terms() == s2.terms());
    CHECK(std::is_sorted(s1.terms().begin(), s1.terms().end()));
    CHECK(std::adjacent_find(s1.terms().begin(), s1.terms().end()) == s1.terms().end());
  }
}
