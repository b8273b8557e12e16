#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "oracle.hpp"
#include "thompson/generators.hpp"
#include "thompson/words.hpp"

using namespace thompson;
using oracle::rat;

namespace {

Dyadic dy(const std::string& s) { return Dyadic::parse(s); }

}  // namespace

TEST_CASE("gen_x matches the defining formula") {
  const PLMap x0 = gen_x(0);
  REQUIRE(x0.points().size() == 2);
  CHECK(x0.points()[0] == BreakPoint{dy("1/2^1"), dy("1/2^2")});
  CHECK(x0.points()[1] == BreakPoint{dy("3/2^2"), dy("1/2^1")});

  verify::WordSampler rng(3);
  for (long n = 0; n <= 6; ++n) {
    const PLMap xn = gen_x(n);
    // Identity on [0, 1-2^-n].
    const Dyadic cutoff = Dyadic(1) - Dyadic(1).mul_pow2(-n);
    for (int i = 0; i < 20; ++i) {
      const Dyadic t(mpz_class(rng.next_in(0, 255)), 8);  // t in [0,1)
      if (t <= cutoff) CHECK(xn(t) == t);
      CHECK(oracle::dyadic_of(oracle::eval_xn(n, oracle::rat_of(t))) == xn(t));
    }
  }
  CHECK(gen_x(2)(dy("15/2^4")) == dy("7/2^3"));
  CHECK_THROWS_AS(gen_x(-1), std::out_of_range);
}

TEST_CASE("gen_xt matches the real-line formula") {
  CHECK(gen_xt(0)(Dyadic(5)) == Dyadic(4));
  CHECK(gen_xt(1)(Dyadic(0)) == Dyadic(0));
  CHECK(gen_xt(1)(Dyadic(1)) == dy("1/2^1"));
  verify::WordSampler rng(5);
  for (long n = 0; n <= 5; ++n) {
    for (int i = 0; i < 20; ++i) {
      const Dyadic t(mpz_class(rng.next_in(-2000, 2000)), 6);
      CHECK(oracle::dyadic_of(oracle::eval_xtn(n, oracle::rat_of(t))) == gen_xt(n)(t));
    }
  }
  CHECK_THROWS_AS(gen_xt(-2), std::out_of_range);
}

TEST_CASE("conjugation carries x_n to xt_n") {
  for (long n = 0; n <= 6; ++n) CHECK(conj_phi(gen_x(n)) == gen_xt(n));
}

TEST_CASE("gen_y follows the recursion") {
  // y_0 is the conjugate of x_0 x_1 x_0^{-1}.
  const PLMap xbar0 = compose(compose(gen_x(0), gen_x(1)), gen_x(0).inverse());
  CHECK(gen_y(0) == conj_phi(xbar0));
  CHECK(gen_y(0)(Dyadic(0)) == dy("-1/2^1"));
  // y_j y_i = y_i y_{j+1} across the whole window.
  for (long i = -6; i <= 6; ++i)
    for (long j = i + 1; j <= 6; ++j)
      CHECK(compose(gen_y(j), gen_y(i)) == compose(gen_y(i), gen_y(j + 1)));
  // For n >= 1 the recursion lands back on the xt family.
  for (long n = 1; n <= 5; ++n) CHECK(gen_y(n) == gen_xt(n));
  // Conjugating by xt_0 shifts the whole family.
  for (long n = -3; n <= 3; ++n)
    CHECK(compose(compose(gen_xt(0).inverse(), gen_y(n)), gen_xt(0)) == gen_y(n + 1));
}

TEST_CASE("gen_Gt") {
  // The printed formula, checked pointwise through the direct evaluator.
  verify::WordSampler rng(9);
  for (int i = 0; i < 50; ++i) {
    const Dyadic t(mpz_class(rng.next_in(-300, 300)), 6);
    CHECK(oracle::dyadic_of(oracle::eval_Gt0(oracle::rat_of(t))) == gen_Gt(0)(t));
  }
  for (long i = -4; i <= 4; ++i) {
    CHECK(compose(compose(gen_xt(0).inverse(), gen_Gt(i)), gen_xt(0)) == gen_Gt(i + 1));
    CHECK(member_of(gen_Gt(i), GroupClass::FtildePrime));
    const auto supp = gen_Gt(i).support();
    REQUIRE(supp.has_value());
    CHECK(supp->lo == Dyadic(i - 1));
    CHECK(supp->hi == Dyadic(i + 1));
  }
  CHECK(member_of(gen_Gt(5), GroupClass::FtildePrime));
}

TEST_CASE("gen_g_finite") {
  for (long n = 4; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      PLMap prod = PLMap::identity(Domain::Unit);
      for (long j = k; j <= n; ++j) prod = compose(prod, gen_g_finite(j, n));
      CHECK(prod == gen_x(k));  // telescoping
    }
  const PLMap g0 = gen_g_finite(0, 5), g1 = gen_g_finite(1, 5), g2 = gen_g_finite(2, 5);
  CHECK(compose(compose(g0, g2), compose(g0.inverse(), g2.inverse())).is_identity());
  CHECK(compose(compose(g0, g1), g2) != compose(compose(g1, g0), g2));
  CHECK_THROWS_AS(gen_g_finite(5, 4), std::out_of_range);
  CHECK_THROWS_AS(gen_g_finite(-1, 5), std::out_of_range);
  CHECK_THROWS_AS(gen_g_finite(0, 3), std::out_of_range);
}

TEST_CASE("remark family") {
  CHECK(gen_remark_x(0)(Dyadic(2)) == Dyadic(1));
  verify::WordSampler rng(15);
  for (int i = 0; i < 30; ++i) {
    const Dyadic t(mpz_class(rng.next_in(-300, 300)), 5);
    CHECK(oracle::dyadic_of(oracle::eval_r32_x0(oracle::rat_of(t))) == gen_remark_x(0)(t));
  }
  const PLMap s = gen_remark_s();
  for (long i = -3; i <= 3; ++i) {
    CHECK(compose(compose(s.inverse(), gen_remark_G(i)), s) == gen_remark_G(i + 1));
    for (long j = i + 2; j <= i + 4; ++j) {
      const PLMap a = gen_remark_G(i), b = gen_remark_G(j);
      CHECK(compose(a, b) == compose(b, a));
    }
  }
}

TEST_CASE("conj_phi is a homomorphism compatible with inverses") {
  CHECK(conj_phi(PLMap()).is_identity());
  CHECK(conj_phi_inverse(PLMap::identity(Domain::Real)).is_identity());
  verify::WordSampler rng(21);
  for (int i = 0; i < 100; ++i) {
    const PLMap f = realize(oracle::random_x_word(rng, 4, 5));
    const PLMap g = realize(oracle::random_x_word(rng, 4, 5));
    CHECK(conj_phi(compose(f, g)) == compose(conj_phi(f), conj_phi(g)));
    CHECK(conj_phi(f.inverse()) == conj_phi(f).inverse());
    CHECK(conj_phi_inverse(conj_phi(f)) == f);  // injective both ways
  }
  // Steep endpoint germs exercise the grid window on both sides.
  for (long e = 1; e <= 8; ++e) {
    const PLMap steep = power(gen_x(0), e);
    CHECK(conj_phi(steep) == PLMap::translation(-e));
    CHECK(conj_phi_inverse(PLMap::translation(e)) == power(gen_x(0), -e));
  }
  CHECK_THROWS_AS(conj_phi(gen_xt(0)), std::invalid_argument);
  CHECK_THROWS_AS(conj_phi_inverse(gen_x(0)), std::invalid_argument);
}

TEST_CASE("conj_phi_n realizes the level isomorphism") {
  for (long n = 4; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      const PLMap image = conj_phi_n(gen_g_finite(k, n), n);
      CHECK(image == gen_Gt(k));
      CHECK(image(Dyadic(k)) == Dyadic(k) - dy("1/2^1"));
      CHECK(image(Dyadic(k) + dy("1/2^1")) == Dyadic(k));
      CHECK(conj_phi_n_inverse(image, n) == gen_g_finite(k, n));
    }
  // phi_n grid: s_k goes to k.
  const long n = 5;
  CHECK(phi_n_at(n, Dyadic(0)) == Dyadic(-1));
  for (long k = 0; k <= n; ++k)
    CHECK(phi_n_at(n, Dyadic(1) - Dyadic(1).mul_pow2(-k - 1)) == Dyadic(k));
  CHECK(phi_n_at(n, Dyadic(1)) == Dyadic(n + 1));
  CHECK(phi_n_at(n, Dyadic(-2)) == Dyadic(-3));
  CHECK(phi_n_at(n, Dyadic(3)) == Dyadic(3 + n));
  CHECK(phi_n_inv_at(n, phi_n_at(n, dy("7/2^4"))) == dy("7/2^4"));
  CHECK_THROWS_AS(conj_phi_n(gen_x(0), 3), std::out_of_range);

  verify::WordSampler rng(25);
  for (int i = 0; i < 50; ++i) {
    const PLMap f = realize(oracle::random_x_word(rng, 3, 4));
    const PLMap g = realize(oracle::random_x_word(rng, 3, 4));
    CHECK(conj_phi_n(compose(f, g), 4) == compose(conj_phi_n(f, 4), conj_phi_n(g, 4)));
    CHECK(conj_phi_n(f.inverse(), 4) == conj_phi_n(f, 4).inverse());
    CHECK(member_of_interval(conj_phi_n(f, 4), {Dyadic(-1), Dyadic(5)}));
  }
}

TEST_CASE("conj_phi_inf") {
  CHECK(conj_phi_inf(PLMap()).is_identity());
  // Images of the level-independent generators agree with the G family.
  for (long k = 0; k <= 6; ++k) CHECK(conj_phi_inf(gen_g_finite(k, 7)) == gen_Gt(k));
  CHECK_THROWS_AS(conj_phi_inf(gen_x(1)), std::invalid_argument);  // not trivial near 1
  verify::WordSampler rng(27);
  for (int i = 0; i < 100; ++i) {
    const PLMap f = realize(oracle::random_gfin_word(rng, 6, 4));
    const PLMap g = realize(oracle::random_gfin_word(rng, 6, 4));
    REQUIRE(member_of(f, GroupClass::D));
    CHECK(conj_phi_inf(compose(f, g)) == compose(conj_phi_inf(f), conj_phi_inf(g)));
    CHECK(conj_phi_inf(f.inverse()) == conj_phi_inf(f).inverse());
    const PLMap h = conj_phi_inf(f);
    CHECK(member_of(h, GroupClass::FtildePrime));
    const auto supp = h.support();
    if (supp) CHECK(supp->lo >= Dyadic(-1));
  }
  // phi_inf grid.
  CHECK(phi_inf_at(Dyadic(0)) == Dyadic(-1));
  for (long k = 0; k <= 5; ++k)
    CHECK(phi_inf_at(Dyadic(1) - Dyadic(1).mul_pow2(-k - 1)) == Dyadic(k));
  CHECK(phi_inf_inv_at(phi_inf_at(dy("3/2^2"))) == dy("3/2^2"));
}

TEST_CASE("gen_y matches its defining words") {
  // For n < 0 the family is given directly by x_0^{-(n-1)} x_1 x_0^{n-1}.
  for (long n = -4; n < 0; ++n) {
    const PLMap xbar = compose(compose(power(gen_x(0), -(n - 1)), gen_x(1)),
                               power(gen_x(0), n - 1));
    CHECK(gen_y(n) == conj_phi(xbar));
  }
  // And uniformly by conjugating x-bar_0 with powers of x_0.
  const PLMap xbar0 = compose(compose(gen_x(0), gen_x(1)), gen_x(0).inverse());
  for (long n = -3; n <= 3; ++n) {
    const PLMap xbar_n =
        compose(compose(power(gen_x(0), -n), xbar0), power(gen_x(0), n));
    CHECK(gen_y(n) == conj_phi(xbar_n));
  }
}

TEST_CASE("conjugations agree with pointwise grid transport") {
  verify::WordSampler rng(41);
  for (int i = 0; i < 60; ++i) {
    const PLMap f = realize(oracle::random_x_word(rng, 4, 5));
    const PLMap through_phi = conj_phi(f);
    const PLMap through_phi_n = conj_phi_n(f, 5);
    for (int j = 0; j < 12; ++j) {
      const Dyadic u(mpz_class(rng.next_in(-800, 800)), 6);
      CHECK(through_phi(u) == phi_at(f(phi_inv_at(u))));
      const Dyadic t = phi_n_inv_at(5, u);
      const Dyadic ft = (t >= Dyadic(0) && t <= Dyadic(1)) ? f(t) : t;
      CHECK(through_phi_n(u) == phi_n_at(5, ft));
    }
  }
  for (int i = 0; i < 60; ++i) {
    const PLMap f = realize(oracle::random_gfin_word(rng, 6, 4));
    const PLMap h = conj_phi_inf(f);
    for (int j = 0; j < 12; ++j) {
      const Dyadic u(mpz_class(rng.next_in(-700, 700)), 6);
      if (u < Dyadic(-1))
        CHECK(h(u) == u);
      else
        CHECK(h(u) == phi_inf_at(f(phi_inf_inv_at(u))));
    }
  }
}

TEST_CASE("x_0 translates the grid by one") {
  for (long m = -5; m <= 5; ++m)
    CHECK(gen_x(0)(phi_inv_at(Dyadic(m))) == phi_inv_at(Dyadic(m - 1)));
}

TEST_CASE("phi grid evaluation") {
  // phi(t_n) = n on both branches of the grid.
  CHECK(phi_at(dy("1/2^1")) == Dyadic(0));
  CHECK(phi_at(dy("3/2^2")) == Dyadic(1));
  CHECK(phi_at(dy("7/2^3")) == Dyadic(2));
  CHECK(phi_at(dy("1/2^2")) == Dyadic(-1));
  CHECK(phi_at(dy("1/2^3")) == Dyadic(-2));
  CHECK(phi_at(gen_x(0)(dy("1/2^1"))) == Dyadic(-1));  // x_0 shifts the grid down
  verify::WordSampler rng(31);
  for (int i = 0; i < 200; ++i) {
    const Dyadic t(mpz_class(2 * rng.next_in(0, 2047) + 1), 12);  // odd/2^12 in (0,1)
    CHECK(phi_inv_at(phi_at(t)) == t);
  }
}
