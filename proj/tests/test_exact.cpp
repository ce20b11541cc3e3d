#include <doctest.h>

#include "selfsim/ring.hpp"
#include "test_util.hpp"

using namespace selfsim;

TEST_CASE("rational canonical form") {
  Rat q = make_rat(Int(6), Int(-4));
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), ZeroDenominator);
}

TEST_CASE("prime field basics") {
  Fp a(7, 10ll);
  CHECK(a.value() == 3);
  Fp b(7, -1ll);
  CHECK(b.value() == 6);
  CHECK((a * b).value() == 4);  // 18 mod 7
  CHECK((a / a).value() == 1);
  CHECK_THROWS_AS(Fp(6, 1ll), NotPrime);
  CHECK_THROWS_AS(Fp(7, 0ll).inverse(), Error);
  CHECK_THROWS_AS(Fp(7, 1ll) + Fp(5, 1ll), ShapeMismatch);
}

TEST_CASE("is_prime_u64") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(7));
  CHECK(is_prime_u64(1000000007ull));
  CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));  // Carmichael
  CHECK_FALSE(is_prime_u64(3215031751ull));
}

TEST_CASE("polynomial arithmetic and invariants") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(z.deg() == -1);
  Poly p({Rat(1), Rat(0), Rat(-1)});  // 1 - t^2, coefficients ascending
  CHECK(p.deg() == 2);
  CHECK(p.eval(Rat(2)) == Rat(-3));
  CHECK((p - p).is_zero());

  Poly a({Rat(-4), Rat(-2)});  // -2t - 4
  Poly b = Poly::t();
  CHECK((a * b).coeff(1) == Rat(-4));
  auto [q, r] = Poly::divmod(a * b + Poly(Rat(3)), a);
  CHECK(q * a + r == a * b + Poly(Rat(3)));

  // trailing zeros are trimmed on construction
  CHECK(Poly({Rat(1), Rat(0)}).deg() == 0);
}

TEST_CASE("polynomial gcd clears common factors") {
  Poly t = Poly::t();
  Poly a = (t + Poly(Rat(1))) * (t - Poly(Rat(2)));
  Poly b = (t + Poly(Rat(1))) * (t + Poly(Rat(5)));
  Poly g = Poly::gcd(a, b);
  CHECK(g == t + Poly(Rat(1)));
  CHECK(Poly::gcd(Poly(), b) == b.monic());
  CHECK(Poly::gcd(Poly(), Poly()).is_zero());

  // gcd is monic and divides both operands
  testutil::Gen gen(101);
  for (int it = 0; it < 50; ++it) {
    Poly u = gen.poly(4);
    Poly v = gen.poly(4);
    Poly w = gen.nonzero_poly(2);
    if (u.is_zero() && v.is_zero()) continue;
    Poly gg = Poly::gcd(u * w, v * w);
    CHECK(rat_is_one(gg.leading()));
    CHECK(Poly::divmod(u * w, gg).second.is_zero());
    CHECK(Poly::divmod(v * w, gg).second.is_zero());
  }
}

TEST_CASE("ratfun_reduce examples") {
  Poly t = Poly::t();
  // (t^2 - 1, t - 1) -> t + 1
  RatFun f = RatFun::reduce(t * t - Poly(Rat(1)), t - Poly(Rat(1)));
  CHECK(f == RatFun(t + Poly(Rat(1)), Poly(Rat(1))));
  // (-2t - 4, t) is already reduced
  RatFun d2 = RatFun::reduce(Poly({Rat(-4), Rat(-2)}), t);
  CHECK(d2.num() == Poly({Rat(-4), Rat(-2)}));
  CHECK(d2.den() == t);
  // (0, t + 3) -> 0
  CHECK(RatFun::reduce(Poly(), t + Poly(Rat(3))).is_zero());
  CHECK_THROWS_AS(RatFun::reduce(t, Poly()), ZeroDenominator);
}

TEST_CASE("ratfun_reduce is canonical and idempotent") {
  testutil::Gen gen(202);
  for (int it = 0; it < 100; ++it) {
    Poly n = gen.poly(4);
    Poly d = gen.nonzero_poly(4);
    RatFun f = RatFun::reduce(n, d);
    if (!f.is_zero()) {
      CHECK(rat_is_one(f.den().leading()));
      CHECK(Poly::gcd(f.num(), f.den()).deg() <= 0);
    }
    RatFun again = RatFun::reduce(f.num(), f.den());
    CHECK(again == f);
  }
}

TEST_CASE("ratfun_reduce preserves values away from poles") {
  testutil::Gen gen(303);
  int checked = 0;
  while (checked < 100) {
    Poly n = gen.poly(4);
    Poly d = gen.nonzero_poly(4);
    RatFun f = RatFun::reduce(n, d);
    Rat x = gen.rat(20);
    if (rat_is_zero(d.eval(x)) || rat_is_zero(f.den().eval(x))) continue;
    CHECK(f.eval(x) == n.eval(x) / d.eval(x));
    ++checked;
  }
}

TEST_CASE("order_at_zero examples") {
  Poly t = Poly::t();
  auto ou = RatFun(t, Poly(Rat(1))).order_at_zero();
  CHECK(ou.order == 1);
  CHECK(ou.unit == Rat(1));

  // the lifted d(2) of the p=7 matrix: (-2t - 4)/t
  auto d2 = RatFun(Poly({Rat(-4), Rat(-2)}), t).order_at_zero();
  CHECK(d2.order == -1);
  CHECK(d2.unit == Rat(-4));

  // the lifted d(5): (-t - 8)/(2t - 20) evaluates to 2/5 at 0
  auto d5 = RatFun(Poly({Rat(-8), Rat(-1)}), Poly({Rat(-20), Rat(2)}))
                .order_at_zero();
  CHECK(d5.order == 0);
  CHECK(d5.unit == make_rat(Int(2), Int(5)));

  CHECK_THROWS_AS(RatFun().order_at_zero(), ZeroInput);
}

TEST_CASE("order_at_zero is multiplicative") {
  testutil::Gen gen(404);
  int checked = 0;
  while (checked < 100) {
    RatFun f = gen.ratfun();
    RatFun g = gen.ratfun();
    if (f.is_zero() || g.is_zero()) continue;
    auto of = f.order_at_zero();
    auto og = g.order_at_zero();
    auto ofg = (f * g).order_at_zero();
    CHECK(ofg.order == of.order + og.order);
    CHECK(ofg.unit == of.unit * og.unit);
    ++checked;
  }
}

TEST_CASE("ring_eval_at_zero examples") {
  Poly t = Poly::t();
  CHECK(RatFun(t * (t + Poly(Rat(5))), Poly(Rat(1))).eval_at_zero() == Rat(0));
  CHECK(RatFun(Poly({Rat(-8), Rat(-1)}), Poly({Rat(-20), Rat(2)}))
            .eval_at_zero() == make_rat(Int(2), Int(5)));
  CHECK_THROWS_AS(RatFun(Poly(Rat(1)), t).eval_at_zero(), PoleAtZero);
  CHECK(RatFun().eval_at_zero() == Rat(0));
}

namespace {

template <class T, class Make>
void check_field_axioms(Make make, int iterations) {
  for (int it = 0; it < iterations; ++it) {
    T a = make();
    T b = make();
    T c = make();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!ring_is_zero(a)) {
      T inv = ring_inv(a);
      CHECK(ring_is_one(a * inv));
    }
    T zero = ring_zero(a);
    T one = ring_one(a);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a + (-a) == zero);
  }
}

}  // namespace

TEST_CASE("field axioms hold for Q, GF(p), Q(t)") {
  testutil::Gen gen(505);
  check_field_axioms<Rat>([&] { return gen.rat(); }, 100);
  check_field_axioms<Fp>([&] { return gen.fp(97); }, 100);
  check_field_axioms<RatFun>([&] { return gen.ratfun(2, 3); }, 40);
}

TEST_CASE("ring_pow") {
  CHECK(rat_pow(Rat(-2), Int(3)) == Rat(-8));
  CHECK(rat_pow(Rat(-1), Int("123456789123456789123456789")) == Rat(-1));
  CHECK(rat_pow(make_rat(Int(2), Int(3)), Int(2)) == make_rat(Int(4), Int(9)));
  CHECK_THROWS_AS(rat_pow(Rat(2), Int("36893488147419103232")),
                  BitBudgetExceeded);
  Fp x(11, 2ll);
  CHECK(x.pow(Int(10)).value() == 1);  // Fermat
  CHECK(x.pow(Int("1000000000000000000000")).value() ==
        pow_mod_u64(2, mpz_get_ui(Int(Int("1000000000000000000000") % 10).get_mpz_t()), 11));
  RatFun t = RatFun::t();
  CHECK(ring_pow(t, Int(3)) ==
        RatFun(Poly({Rat(0), Rat(0), Rat(0), Rat(1)}), Poly(Rat(1))));
}
