#include <doctest.h>

#include "support.hpp"

using namespace garank;
using namespace garank::testsupport;

namespace {

MvFloat blade_f(const Signature& sig, std::uint32_t mask, FloatComplex c = {1, 0}) {
  return MvFloat::basis_blade(sig, mask, c);
}

bool approx_equal(const MvFloat& a, const MvFloat& b, double tol = 1e-12) {
  return (a - b).norm_approx() <=
         tol * std::max({1.0, a.norm_approx(), b.norm_approx()});
}

}  // namespace

TEST_CASE("blade product signs against the canonical reordering count") {
  Signature g10(1, 0), g01(0, 1), g20(2, 0);
  auto r = blade_product(1, 1, g10);
  CHECK(r.mask == 0);
  CHECK(r.sign == 1);
  r = blade_product(1, 1, g01);
  CHECK(r.mask == 0);
  CHECK(r.sign == -1);
  r = blade_product(2, 1, g20);  // e2 * e1 = -e12
  CHECK(r.mask == 3);
  CHECK(r.sign == -1);
  CHECK_THROWS_AS((void)blade_product(4, 1, g10), Error);
}

TEST_CASE("geometric product basics") {
  Signature g20(2, 0), g10(1, 0);
  // e12 * e12 = -e
  CHECK(blade_f(g20, 3) * blade_f(g20, 3) == MvFloat::scalar(g20, {-1, 0}));
  // (1+2i)e1 * 3e2 = (3+6i)e12
  CHECK(blade_f(g20, 1, {1, 2}) * blade_f(g20, 2, {3, 0}) == blade_f(g20, 3, {3, 6}));
  // (e+e1)(e-e1) = 0 in G_{1,0}
  MvFloat e = MvFloat::scalar(g10, {1, 0});
  MvFloat e1 = blade_f(g10, 1);
  CHECK(((e + e1) * (e - e1)).is_zero());
  // signature mismatch
  CHECK_THROWS_AS((void)(blade_f(g20, 1) * blade_f(g10, 1)), Error);
}

TEST_CASE("add and scale keep canonical form") {
  Signature g10(1, 0);
  MvFloat e = MvFloat::scalar(g10, {1, 0});
  MvFloat e1 = blade_f(g10, 1);
  CHECK((e1 + (-e1)).is_zero());
  MvFloat m = e + e1;
  CHECK(m.scaled({0, 0}).is_zero());
  CHECK(m.scaled({2, 0}) == MvFloat::from_terms(g10, {{0u, {2, 0}}, {1u, {2, 0}}}));
}

TEST_CASE("grade projection partitions the terms") {
  Signature g10(1, 0);
  MvFloat m = MvFloat::from_terms(g10, {{0u, {2, 0}}, {1u, {3, 0}}});
  CHECK(m.grade_projection(0) == MvFloat::scalar(g10, {2, 0}));
  CHECK(m.grade_projection(1) == blade_f(g10, 1, {3, 0}));
  CHECK_THROWS_AS((void)m.grade_projection(2), Error);

  Rng rng(11);
  Signature g21(2, 1);
  MvFloat r = random_float_mv(g21, rng);
  MvFloat sum = MvFloat::zero(g21);
  for (int k = 0; k <= g21.n(); ++k) sum = sum + r.grade_projection(k);
  CHECK(sum == r);
}

TEST_CASE("grade involution and reversion examples and homomorphisms") {
  Signature g20(2, 0);
  CHECK(blade_f(g20, 1).grade_involution() == blade_f(g20, 1, {-1, 0}));
  CHECK(blade_f(g20, 3).grade_involution() == blade_f(g20, 3));
  CHECK(blade_f(g20, 3).reversion() == blade_f(g20, 3, {-1, 0}));

  Rng rng(12);
  for (const Signature& sig : signatures_up_to(4)) {
    MvFloat m1 = random_float_mv(sig, rng);
    MvFloat m2 = random_float_mv(sig, rng);
    CHECK(approx_equal((m1 * m2).reversion(), m2.reversion() * m1.reversion()));
    CHECK(approx_equal((m1 * m2).grade_involution(),
                       m1.grade_involution() * m2.grade_involution()));
  }
}

TEST_CASE("complex conjugation is a homomorphism") {
  Signature g10(1, 0);
  CHECK(MvFloat::scalar(g10, {0, 1}).complex_conjugation() == MvFloat::scalar(g10, {0, -1}));
  CHECK(blade_f(g10, 1).complex_conjugation() == blade_f(g10, 1));

  Rng rng(13);
  Signature g21(2, 1);
  MvFloat m1 = random_float_mv(g21, rng);
  MvFloat m2 = random_float_mv(g21, rng);
  CHECK(approx_equal((m1 * m2).complex_conjugation(),
                     m1.complex_conjugation() * m2.complex_conjugation()));
}

TEST_CASE("hermitian conjugation flips blades to their inverses") {
  Signature g10(1, 0), g01(0, 1), g20(2, 0);
  CHECK(blade_f(g10, 1).hermitian_conjugation() == blade_f(g10, 1));
  CHECK(blade_f(g01, 1).hermitian_conjugation() == blade_f(g01, 1, {-1, 0}));
  // ((1+i)e12)† = -(1-i)e12 in G_{2,0}
  CHECK(blade_f(g20, 3, {1, 1}).hermitian_conjugation() == blade_f(g20, 3, {-1, 1}));

  Rng rng(14);
  for (const Signature& sig : signatures_up_to(4)) {
    MvFloat m1 = random_float_mv(sig, rng);
    MvFloat m2 = random_float_mv(sig, rng);
    CHECK(m1.hermitian_conjugation().hermitian_conjugation() == m1);
    CHECK(approx_equal((m1 * m2).hermitian_conjugation(),
                       m2.hermitian_conjugation() * m1.hermitian_conjugation()));
  }
}

TEST_CASE("equivalent dagger formulas through the volume blades") {
  Rng rng(15);
  for (const Signature& sig : signatures_up_to(5)) {
    MvFloat m = random_float_mv(sig, rng);
    MvFloat dag = m.hermitian_conjugation();
    const int p = sig.p(), q = sig.q(), n = sig.n();
    if (p >= 1) {
      const std::uint32_t pmask = (std::uint32_t{1} << p) - 1;
      MvFloat ep = blade_f(sig, pmask);
      MvFloat ep_inv = blade_f(sig, pmask, {double(blade_square_sign(pmask, sig)), 0});
      MvFloat core = (p % 2 == 1) ? m.reversion().complex_conjugation()
                                  : m.grade_involution().reversion().complex_conjugation();
      CHECK(ep * core * ep_inv == dag);
    }
    if (q >= 1) {
      const std::uint32_t qmask = (sig.blade_count() - 1u) ^ ((std::uint32_t{1} << p) - 1u);
      MvFloat eq = blade_f(sig, qmask);
      MvFloat eq_inv = blade_f(sig, qmask, {double(blade_square_sign(qmask, sig)), 0});
      MvFloat core = (q % 2 == 0) ? m.reversion().complex_conjugation()
                                  : m.grade_involution().reversion().complex_conjugation();
      CHECK(eq * core * eq_inv == dag);
    }
    (void)n;
  }
}

TEST_CASE("triangle conjugation signs per grade") {
  Signature g40(4, 0), g30(3, 0);
  CHECK(MvFloat::scalar(g40, {1, 0}).triangle_conjugation() == MvFloat::scalar(g40, {1, 0}));
  CHECK(blade_f(g40, 0xF).triangle_conjugation() == blade_f(g40, 0xF, {-1, 0}));
  CHECK(blade_f(g30, 0x7).triangle_conjugation() == blade_f(g30, 0x7));

  // stored witness pair: the triangle operation is not a homomorphism
  MvFloat m1 = blade_f(g40, 0x1);        // e1
  MvFloat m2 = blade_f(g40, 0xE);        // e234
  CHECK((m1 * m2).triangle_conjugation() != m1.triangle_conjugation() * m2.triangle_conjugation());
}

TEST_CASE("all five conjugations are involutive") {
  Rng rng(16);
  for (const Signature& sig : {Signature(2, 1), Signature(2, 2), Signature(1, 4)}) {
    MvFloat m = random_float_mv(sig, rng);
    CHECK(m.grade_involution().grade_involution() == m);
    CHECK(m.reversion().reversion() == m);
    CHECK(m.complex_conjugation().complex_conjugation() == m);
    CHECK(m.hermitian_conjugation().hermitian_conjugation() == m);
    CHECK(m.triangle_conjugation().triangle_conjugation() == m);
  }
}

TEST_CASE("scalar product and norm") {
  Signature g20(2, 0);
  MvFloat e = MvFloat::scalar(g20, {1, 0});
  CHECK(e.norm_approx() == doctest::Approx(1.0));
  CHECK(blade_f(g20, 3, {0, -2}).norm_approx() == doctest::Approx(2.0));

  Rng rng(17);
  MvFloat m1 = random_float_mv(g20, rng);
  MvFloat m2 = random_float_mv(g20, rng);
  MvFloat m3 = random_float_mv(g20, rng);

  // the closed form matches the definition <M1† M2>_0
  FloatComplex direct = scalar_product(m1, m2);
  FloatComplex definitional = (m1.hermitian_conjugation() * m2).scalar_part();
  CHECK(std::abs(direct - definitional) <= 1e-12);

  // conjugate symmetry, additivity, homogeneity in the second slot
  CHECK(std::abs(scalar_product(m1, m2) - std::conj(scalar_product(m2, m1))) <= 1e-12);
  CHECK(std::abs(scalar_product(m1 + m2, m3) -
                 (scalar_product(m1, m3) + scalar_product(m2, m3))) <= 1e-12);
  const FloatComplex lambda{0.7, -0.3};
  CHECK(std::abs(scalar_product(m1, m2.scaled(lambda)) - lambda * scalar_product(m1, m2)) <=
        1e-12);

  // positive definiteness
  CHECK(scalar_product(m1, m1).real() > 0.0);
  CHECK(std::abs(scalar_product(m1, m1).imag()) <= 1e-15);
  CHECK(MvFloat::zero(g20).norm_approx() == 0.0);
}

TEST_CASE("norm squared is exact in exact mode") {
  Signature g11(1, 1);
  MvExact m = MvExact::from_terms(
      g11, {{0u, {Rational(1, 2), Rational(0)}}, {3u, {Rational(0), Rational(-1, 3)}}});
  CHECK(m.norm_squared() == Rational(1, 4) + Rational(1, 9));
  CHECK(scalar_product(m, m) == GaussianRational{Rational(13, 36), Rational(0)});
}

TEST_CASE("unitarity of basis blades and the rotor example") {
  Rng rng(18);
  for (const Signature& sig : signatures_up_to(4)) {
    std::uniform_int_distribution<std::uint32_t> pick(0, sig.blade_count() - 1);
    CHECK(is_unitary(MvFloat::basis_blade(sig, pick(rng)), 1e-12));
  }
  Signature g20(2, 0);
  CHECK_FALSE(is_unitary(MvFloat::scalar(g20, {2, 0}), 1e-12));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  MvFloat rotor = MvFloat::from_terms(g20, {{0u, {inv_sqrt2, 0}}, {3u, {inv_sqrt2, 0}}});
  CHECK(is_unitary(rotor, 1e-12));
}

TEST_CASE("product signs agree with the matrix oracle for every blade pair, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Signature& sig : signatures_with_n(n)) {
      auto rep = Representation<FloatComplex>::build(sig);
      for (std::uint32_t a = 0; a < sig.blade_count(); ++a) {
        for (std::uint32_t b = 0; b < sig.blade_count(); ++b) {
          BladeProduct bp = blade_product(a, b, sig);
          Matrix<FloatComplex> lhs = rep.blade_matrix(a) * rep.blade_matrix(b);
          Matrix<FloatComplex> rhs =
              rep.blade_matrix(bp.mask).scaled({double(bp.sign), 0.0});
          REQUIRE(lhs.max_abs_diff(rhs) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("exact-mode conjugation identities hold with equality") {
  Rng rng(19);
  Signature g21(2, 1);
  MvExact m1 = random_exact_mv(g21, rng);
  MvExact m2 = random_exact_mv(g21, rng);
  CHECK((m1 * m2).reversion() == m2.reversion() * m1.reversion());
  CHECK((m1 * m2).grade_involution() == m1.grade_involution() * m2.grade_involution());
  CHECK((m1 * m2).hermitian_conjugation() ==
        m2.hermitian_conjugation() * m1.hermitian_conjugation());
  CHECK((m1 * m2).complex_conjugation() ==
        m1.complex_conjugation() * m2.complex_conjugation());
  CHECK((m1 + m2) - m2 == m1);
}

TEST_CASE("exact-mode unitarity is an equality test") {
  Signature g20(2, 0);
  CHECK(is_unitary(MvExact::basis_blade(g20, 3), 0.0));
  CHECK_FALSE(is_unitary(MvExact::scalar(g20, scalar_traits<GaussianRational>::from_int(2)), 0.0));
  // (e + e12)/sqrt(2) has no exact representation; its exact cousin
  // (e + e12)/2 is not unitary
  MvExact half = MvExact::from_terms(
      g20, {{0u, {Rational(1, 2), Rational(0)}}, {3u, {Rational(1, 2), Rational(0)}}});
  CHECK_FALSE(is_unitary(half, 0.0));
}
