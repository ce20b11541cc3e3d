#include <doctest.h>

#include "selfsim/factored_det.hpp"
#include "selfsim/oracle.hpp"
#include "selfsim/pascal.hpp"
#include "test_util.hpp"

using namespace selfsim;

namespace {

SquareMat<Rat> rat_grid(int n, const std::vector<std::vector<long>>& rows) {
  SquareMat<Rat> m(static_cast<std::size_t>(n), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          Rat(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  return m;
}

Defining<Rat> pascal2() { return pascal_defining(2, PascalKind::BinomLift); }
Defining<Rat> legendre(std::uint64_t p) {
  return pascal_defining(p, PascalKind::Legendre);
}

}  // namespace

TEST_CASE("digits") {
  auto d = digits(Int(11), 3);
  CHECK(d.digits == std::vector<int>{2, 0, 1});
  CHECK(digits(Int(0), 2).digits.empty());
  CHECK(digits(Int(35), 2).digits == std::vector<int>{1, 1, 0, 0, 0, 1});
  // minimal representation: no trailing zero digit
  testutil::Gen gen(1);
  for (int it = 0; it < 50; ++it) {
    int b = gen.int_in(2, 10);
    Int n(gen.int_in(0, 100000));
    auto dv = digits(n, b);
    Int back(0);
    Int place(1);
    for (int dig : dv.digits) {
      CHECK(dig >= 0);
      CHECK(dig < b);
      back += Int(dig) * place;
      place *= b;
    }
    CHECK(back == n);
    if (!dv.digits.empty()) CHECK(dv.digits.back() != 0);
  }
}

TEST_CASE("entry evaluation") {
  Defining<Rat> p2 = pascal2();
  // digits 5 = [1,0,1], 6 = [0,1,1]; the (1,1) factor kills the product
  CHECK(entry(p2, Int(5), Int(6)) == Rat(0));
  CHECK(entry(p2, Int(0), Int(0)) == Rat(1));
  // all factors along row 0 are seed entries (0, tau) = 1
  CHECK(entry(p2, Int(0), Int(7)) == Rat(1));
  // cross-check against binomial parity: C(11,5) = 462 even, C(7,0) = 1 odd
  CHECK(binom_mod_p(Int(11), Int(5), 2).value() == 0);
  CHECK(binom_mod_p(Int(7), Int(0), 2).value() == 1);
}

TEST_CASE("entry equals Lucas-reduced binomial for the Pascal seed") {
  Defining<Rat> p2 = pascal2();
  Defining<Rat> l3 = legendre(3);
  for (long s = 0; s < 40; ++s) {
    for (long t = 0; t < 40; ++t) {
      Rat expect(binom_mod_p(Int(s + t), Int(s), 2).value());
      CHECK(entry(p2, Int(s), Int(t)) == expect);
      int leg = binom_mod_p(Int(s + t), Int(s), 3).value() == 0
                    ? 0
                    : legendre_symbol(Int(binom_mod_p(Int(s + t), Int(s), 3).value()), 3);
      CHECK(entry(l3, Int(s), Int(t)) == Rat(leg));
    }
  }
}

TEST_CASE("dense golden values") {
  CHECK(dense(pascal2(), 4) ==
        rat_grid(4, {{1, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}}));
  CHECK(dense(pascal2(), 1) == rat_grid(1, {{1}}));
  CHECK(dense(legendre(3), 3) == legendre(3).tilde);  // M(b) is the seed
  CHECK_THROWS_AS(dense(pascal2(), 5000), SizeLimit);
}

TEST_CASE("entry multiplicativity vs dense") {
  testutil::Gen gen(42);
  for (int it = 0; it < 10; ++it) {
    int b = gen.int_in(2, 4);
    Defining<Rat> def = gen.defining(b, false, 3);
    std::size_t n = static_cast<std::size_t>(gen.int_in(1, 64));
    SquareMat<Rat> m = dense(def, n);
    for (int probes = 0; probes < 50; ++probes) {
      std::size_t s = static_cast<std::size_t>(gen.int_in(0, static_cast<int>(n) - 1));
      std::size_t t = static_cast<std::size_t>(gen.int_in(0, static_cast<int>(n) - 1));
      CHECK(m(s, t) == entry(def, Int(static_cast<long>(s)), Int(static_cast<long>(t))));
    }
  }
}

TEST_CASE("kron_power equals dense at powers of b") {
  CHECK(kron_power(pascal2(), 1) == pascal2().tilde);
  CHECK(kron_power(pascal2(), 2) == dense(pascal2(), 4));
  CHECK(kron_power(legendre(3), 2) == dense(legendre(3), 9));
  // Remark-style equivalence over random seeds
  testutil::Gen gen(7);
  for (int it = 0; it < 10; ++it) {
    int b = gen.int_in(2, 3);
    Defining<Rat> def = gen.defining(b, false, 3);
    for (int d = 1; d <= 4; ++d) {
      std::size_t size = 1;
      for (int i = 0; i < d; ++i) size *= static_cast<std::size_t>(b);
      if (size > 128) break;
      CHECK(kron_power(def, d) == dense(def, size));
    }
  }
  CHECK_THROWS_AS(kron_power(pascal2(), 13), SizeLimit);
}

TEST_CASE("ldu_defining on the paper seeds") {
  auto f3 = ldu_defining(legendre(3));
  CHECK(f3.diag == std::vector<Rat>{Rat(1), Rat(-2), make_rat(Int(-1), Int(2))});
  CHECK(f3.lower(2, 1) == make_rat(Int(1), Int(2)));
  CHECK(mul(mul(f3.lower, [&] {
          SquareMat<Rat> d(3, Rat(0));
          for (int k = 0; k < 3; ++k)
            d(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) =
                f3.diag[static_cast<std::size_t>(k)];
          return d;
        }()),
        f3.upper) == legendre(3).tilde);

  // identity seed factors trivially at any base
  for (int b : {2, 3, 5}) {
    Defining<Rat> id(b, SquareMat<Rat>::identity(static_cast<std::size_t>(b), Rat(1)));
    auto f = ldu_defining(id);
    CHECK(f.lower.is_identity());
    CHECK(f.upper.is_identity());
    for (const Rat& d : f.diag) CHECK(rat_is_one(d));
  }

  // p=7 Legendre: psi(C(2,1)) = psi(2) = 1 mod 7, so the 2x2 block is singular
  try {
    ldu_defining(legendre(7));
    FAIL("expected Degenerate");
  } catch (const Degenerate& d) {
    CHECK(d.minor_size == 2);
  }
}

TEST_CASE("ldu reconstruction property") {
  testutil::Gen gen(99);
  for (int it = 0; it < 30; ++it) {
    int b = gen.int_in(2, 5);
    Defining<Rat> def = gen.defining(b, true);
    auto f = ldu_defining(def);
    CHECK(f.lower.is_lower_triangular());
    CHECK(f.upper.is_upper_triangular());
    for (std::size_t i = 0; i < f.lower.dim(); ++i) {
      CHECK(rat_is_one(f.lower(i, i)));
      CHECK(rat_is_one(f.upper(i, i)));
    }
    CHECK(rat_is_one(f.diag[0]));
    // full dense reconstruction L(n) D(n) U(n) = M(n)
    std::size_t n = static_cast<std::size_t>(gen.int_in(1, 64));
    SquareMat<Rat> dmat(static_cast<std::size_t>(b), Rat(0));
    for (std::size_t k = 0; k < dmat.dim(); ++k) dmat(k, k) = f.diag[k];
    Defining<Rat> ld(b, f.lower), dd(b, std::move(dmat)), ud(b, f.upper);
    SquareMat<Rat> recon = mul(mul(dense(ld, n), dense(dd, n)), dense(ud, n));
    CHECK(recon == dense(def, n));
  }
}

TEST_CASE("d(k) equals the ratio of consecutive leading minors") {
  testutil::Gen gen(1234);
  for (int it = 0; it < 20; ++it) {
    int b = gen.int_in(2, 5);
    Defining<Rat> def = gen.defining(b, true);
    auto f = ldu_defining(def);
    auto minors = oracle::leading_principal_minors(def.tilde);
    Rat prev(1);
    for (std::size_t k = 0; k < static_cast<std::size_t>(b); ++k) {
      CHECK(f.diag[k] == minors[k] / prev);
      prev = minors[k];
    }
  }
}

TEST_CASE("compose_triangular examples") {
  auto unit_lower = [](std::vector<std::vector<long>> rows) {
    return Defining<Rat>(static_cast<int>(rows.size()),
                         rat_grid(static_cast<int>(rows.size()), rows));
  };
  // [[1,0],[1,1]] * [[1,0],[-1,1]] = I
  Defining<Rat> a = unit_lower({{1, 0}, {1, 1}});
  Defining<Rat> b = unit_lower({{1, 0}, {-1, 1}});
  CHECK(compose_triangular(a, b).tilde.is_identity());

  // the p=2 seed LD = [[1,0],[1,-1]] squares to the identity
  Defining<Rat> ld = unit_lower({{1, 0}, {1, -1}});
  CHECK(compose_triangular(ld, ld).tilde.is_identity());

  // binomial lower times its alternating-sign inverse, b=3
  CHECK(compose_triangular(binomial_lower_defining(3),
                           binomial_lower_defining(3, true))
            .tilde.is_identity());

  CHECK_THROWS_AS(compose_triangular(a, unit_lower({{1, 1}, {0, 1}})),
                  NotTriangular);
  CHECK_THROWS_AS(
      compose_triangular(a, unit_lower({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
      ShapeMismatch);
  CHECK_THROWS_AS(compose_triangular(a, unit_lower({{1, 0}, {1, 0}})),
                  SingularDiagonal);
}

TEST_CASE("invert_triangular examples") {
  Defining<Rat> l(2, rat_grid(2, {{1, 0}, {1, 1}}));
  CHECK(invert_triangular(l).tilde == rat_grid(2, {{1, 0}, {-1, 1}}));
  Defining<Rat> id(3, SquareMat<Rat>::identity(3, Rat(1)));
  CHECK(invert_triangular(id).tilde.is_identity());
  // unreduced binomial lower at b=5 inverts to the alternating-sign pattern
  CHECK(invert_triangular(binomial_lower_defining(5)).tilde ==
        binomial_lower_defining(5, true).tilde);

  CHECK_THROWS_AS(invert_triangular(pascal2()), NotTriangular);
  Defining<Rat> sing(2, rat_grid(2, {{1, 0}, {1, 0}}));
  CHECK_THROWS_AS(invert_triangular(sing), SingularDiagonal);
}

TEST_CASE("triangular group law") {
  testutil::Gen gen(77);
  for (int it = 0; it < 20; ++it) {
    int b = gen.int_in(2, 4);
    bool lower = gen.int_in(0, 1) == 1;
    Defining<Rat> r = gen.triangular_defining(b, lower);
    Defining<Rat> t = gen.triangular_defining(b, lower);
    Defining<Rat> rt = compose_triangular(r, t);
    std::size_t n = static_cast<std::size_t>(gen.int_in(1, 32));
    CHECK(dense(rt, n) == mul(dense(r, n), dense(t, n)));
    // inverse composes to the identity, at seed and at dense level
    Defining<Rat> rinv = invert_triangular(r);
    CHECK(compose_triangular(r, rinv).tilde.is_identity());
    CHECK(mul(dense(r, n), dense(rinv, n)).is_identity());
  }
}

TEST_CASE("inverse_dense examples") {
  CHECK(inverse_dense(pascal2(), 2) == rat_grid(2, {{0, 1}, {1, -1}}));
  CHECK(inverse_dense(pascal2(), 1) == rat_grid(1, {{1}}));
  SquareMat<Rat> inv8 = inverse_dense(pascal2(), 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Rat v = inv8(i, j);
      CHECK((v == Rat(0) || v == Rat(1) || v == Rat(-1)));
    }
  CHECK_THROWS_AS(inverse_dense(legendre(7), 4), Degenerate);
}

TEST_CASE("inverse_dense is a two-sided inverse") {
  testutil::Gen gen(555);
  for (int it = 0; it < 15; ++it) {
    int b = gen.int_in(2, 4);
    Defining<Rat> def = gen.defining(b, true);
    std::size_t n = static_cast<std::size_t>(gen.int_in(1, 64));
    SquareMat<Rat> m = dense(def, n);
    SquareMat<Rat> inv = inverse_dense(def, n);
    CHECK(mul(m, inv).is_identity());
    CHECK(mul(inv, m).is_identity());
  }
}

TEST_CASE("triangularity is inherited by every truncation") {
  testutil::Gen gen(888);
  for (int it = 0; it < 10; ++it) {
    int b = gen.int_in(2, 4);
    bool lower = gen.int_in(0, 1) == 1;
    Defining<Rat> t = gen.triangular_defining(b, lower);
    std::size_t n = static_cast<std::size_t>(gen.int_in(2, 32));
    SquareMat<Rat> m = dense(t, n);
    CHECK((lower ? m.is_lower_triangular() : m.is_upper_triangular()));

    // diagonal seeds induce diagonal truncations
    SquareMat<Rat> diag(static_cast<std::size_t>(b), Rat(0));
    for (int k = 0; k < b; ++k)
      diag(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) =
          gen.nonzero_rat();
    diag(0, 0) = Rat(1);
    Defining<Rat> dd(b, std::move(diag));
    CHECK(dense(dd, n).is_diagonal());

    // unipotent seeds induce unipotent truncations
    SquareMat<Rat> uni = t.tilde;
    for (int k = 0; k < b; ++k)
      uni(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = Rat(1);
    Defining<Rat> ud(b, std::move(uni));
    SquareMat<Rat> um = dense(ud, n);
    for (std::size_t k = 0; k < n; ++k) CHECK(rat_is_one(um(k, k)));
  }
}

TEST_CASE("defining matrix validation") {
  SquareMat<Rat> bad(2, Rat(0));
  bad(0, 0) = Rat(2);
  CHECK_THROWS_AS(Defining<Rat>(2, std::move(bad)), NormalizationError);
  SquareMat<Rat> wrong(3, Rat(1));
  CHECK_THROWS_AS(Defining<Rat>(2, std::move(wrong)), ShapeMismatch);
}
