#include <doctest.h>

#include "nforge/errors.hpp"
#include "nforge/linalg.hpp"
#include "nforge/poly.hpp"

using namespace nforge;

TEST_CASE("poly parser: curve-file grammar") {
  CHECK(parse_poly("t") == Poly::variable());
  CHECK(parse_poly("t^4") == Poly::monomial(4));
  CHECK(parse_poly("t^5+t^7") == Poly::monomial(5) + Poly::monomial(7));
  CHECK(parse_poly("t*(t-1)^5") == Poly::variable() * (Poly::variable() - Poly(Rat(1))).pow(5));
  CHECK(parse_poly("2*t - 3") == Poly(std::vector<Rat>{Rat(-3), Rat(2)}));
  CHECK(parse_poly("1/2*t^2") == Poly(std::vector<Rat>{Rat(0), Rat(0), Rat(1, 2)}));
  CHECK(parse_poly("-t + t") == Poly());
  CHECK(parse_poly("(t-1)*(t+1)") == Poly::monomial(2) - Poly(Rat(1)));
  CHECK_THROWS_AS(parse_poly("t^"), Error);
  CHECK_THROWS_AS(parse_poly("t + "), Error);
  CHECK_THROWS_AS(parse_poly("y"), Error);
  CHECK_THROWS_AS(parse_poly("3/0"), Error);
}

TEST_CASE("expansion at a center: spec examples") {
  // t*(t-1)^3 at c=1, order 4: u^3 + u^4
  const Poly f = parse_poly("t*(t-1)^3");
  const auto e = f.expand_at(Rat(1), 4);
  CHECK(e == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)});

  // t at c=0
  CHECK(Poly::variable().expand_at(Rat(0), 2) == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});

  // t^2 at c=1, order 2: 1 + 2u + u^2
  CHECK(Poly::monomial(2).expand_at(Rat(1), 2) == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
}

TEST_CASE("orders and gcd") {
  CHECK(parse_poly("t^2*(t-1)^3").order_at(Rat(0)) == 2);
  CHECK(parse_poly("t^2*(t-1)^3").order_at(Rat(1)) == 3);
  CHECK(parse_poly("t^2*(t-1)^3").order_at(Rat(2)) == 0);
  const Poly g = poly_gcd(parse_poly("t^2*(t-1)"), parse_poly("t*(t-1)^2"));
  CHECK(g == parse_poly("t^2-t"));
}

TEST_CASE("rational roots") {
  const auto r = rational_roots(parse_poly("(t-1)*(2*t-3)*t"));
  CHECK(r == std::vector<Rat>{Rat(0), Rat(1), Rat(3, 2)});
}

TEST_CASE("exact ranks") {
  RatMatrix m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}};
  CHECK(rank_rational(m) == 2);

  IntMatrix z{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(rank_bareiss(z) == 2);
  IntMatrix id{{1, 0}, {0, 1}};
  CHECK(rank_bareiss(id) == 2);
  CHECK(rank_bareiss(IntMatrix{{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("incremental rank matches batch rank") {
  IncrementalRank inc;
  CHECK(inc.add_column({Rat(1), Rat(0), Rat(2)}));
  CHECK(inc.add_column({Rat(0), Rat(1), Rat(0)}));
  CHECK(!inc.add_column({Rat(2), Rat(3), Rat(4)}));  // 2*c1 + 3*c2
  CHECK(inc.rank() == 2);
}
