#include <doctest.h>

#include <array>
#include <thread>

#include "support.hpp"

using namespace garank;
using namespace garank::testsupport;

TEST_CASE("generator matrices of the recursive construction") {
  // beta'(e1) = diag(1,-1) in G_{1,0}
  auto r10 = Representation<FloatComplex>::build(Signature(1, 0));
  CHECK(r10.generator(1)(0, 0) == FloatComplex{1, 0});
  CHECK(r10.generator(1)(1, 1) == FloatComplex{-1, 0});
  CHECK(r10.generator(1)(0, 1) == FloatComplex{0, 0});

  // beta'(e2) = [[0,1],[1,0]] in G_{2,0}
  auto r20 = Representation<FloatComplex>::build(Signature(2, 0));
  CHECK(r20.generator(2)(0, 1) == FloatComplex{1, 0});
  CHECK(r20.generator(2)(1, 0) == FloatComplex{1, 0});
  CHECK(r20.generator(2)(0, 0) == FloatComplex{0, 0});

  // beta'(e1) = diag(i,-i) in G_{0,1}
  auto r01 = Representation<FloatComplex>::build(Signature(0, 1));
  CHECK(r01.generator(1)(0, 0) == FloatComplex{0, 1});
  CHECK(r01.generator(1)(1, 1) == FloatComplex{0, -1});
}

TEST_CASE("representation invariants for all signatures up to n = 6") {
  // anticommutation and Hermiticity are asserted inside build; here the
  // build must simply succeed, and for odd n the generators must be
  // block-diagonal
  for (const Signature& sig : signatures_up_to(6)) {
    auto rep = Representation<FloatComplex>::build(sig);
    if (sig.n() % 2 == 1) {
      const int h = rep.rep_size() / 2;
      for (int a = 1; a <= sig.n(); ++a) {
        CHECK(rep.generator(a).block(0, h, h, h).max_abs() == 0.0);
        CHECK(rep.generator(a).block(h, 0, h, h).max_abs() == 0.0);
      }
    }
  }
}

TEST_CASE("represent is linear and multiplicative") {
  Rng rng(41);
  Signature g10(1, 0);
  auto rep = Representation<FloatComplex>::build(g10);
  // represent(e) = I
  CHECK(represent(rep, MvFloat::scalar(g10, {1, 0})).max_abs_diff(
            Matrix<FloatComplex>::identity(2)) == 0.0);
  // represent((e+e1)/2) = diag(1,0)
  MvFloat half = MvFloat::from_terms(g10, {{0u, {0.5, 0}}, {1u, {0.5, 0}}});
  Matrix<FloatComplex> d(2, 2);
  d(0, 0) = {1, 0};
  CHECK(represent(rep, half).max_abs_diff(d) == 0.0);

  for (const Signature& sig : signatures_up_to(5)) {
    auto r = Representation<FloatComplex>::build(sig);
    MvFloat m1 = random_float_mv(sig, rng);
    MvFloat m2 = random_float_mv(sig, rng);
    Matrix<FloatComplex> lhs = represent(r, m1 * m2);
    Matrix<FloatComplex> rhs = represent(r, m1) * represent(r, m2);
    CHECK(lhs.max_abs_diff(rhs) <= 1e-12 * std::max(1.0, rhs.max_abs()));
    // Hermitian conjugation consistency
    CHECK(represent(r, m1.hermitian_conjugation())
              .max_abs_diff(represent(r, m1).conjugate_transpose()) == 0.0);
  }
}

TEST_CASE("grade parity splits into the two odd-n block patterns") {
  Rng rng(42);
  for (const Signature& sig : {Signature(3, 0), Signature(1, 2), Signature(2, 3)}) {
    auto rep = Representation<FloatComplex>::build(sig);
    const int h = rep.rep_size() / 2;
    MvFloat m = random_float_mv(sig, rng);
    MvFloat even = MvFloat::zero(sig), odd = MvFloat::zero(sig);
    for (int k = 0; k <= sig.n(); ++k)
      if (k % 2 == 0)
        even = even + m.grade_projection(k);
      else
        odd = odd + m.grade_projection(k);
    Matrix<FloatComplex> me = represent(rep, even);
    Matrix<FloatComplex> mo = represent(rep, odd);
    CHECK(me.block(0, 0, h, h).max_abs_diff(me.block(h, h, h, h)) <= 1e-13);
    CHECK(mo.block(0, 0, h, h)
              .max_abs_diff(mo.block(h, h, h, h).scaled({-1, 0})) <= 1e-13);
    // rank is blind to the grade involution (the two representations differ
    // by a block swap)
    CHECK(matrix_rank(represent(rep, m)) ==
          matrix_rank(represent(rep, m.grade_involution())));
  }
}

TEST_CASE("unrepresent inverts represent") {
  Rng rng(43);
  Signature g10(1, 0);
  auto rep = Representation<FloatComplex>::build(g10);
  CHECK(unrepresent(rep, Matrix<FloatComplex>::identity(2)) == MvFloat::scalar(g10, {1, 0}));
  Matrix<FloatComplex> d(2, 2);
  d(0, 0) = {1, 0};
  MvFloat half = MvFloat::from_terms(g10, {{0u, {0.5, 0}}, {1u, {0.5, 0}}});
  CHECK((unrepresent(rep, d) - half).norm_approx() <= 1e-15);

  for (const Signature& sig : signatures_up_to(5)) {
    auto r = Representation<FloatComplex>::build(sig);
    MvFloat m = random_float_mv(sig, rng);
    CHECK((unrepresent(r, represent(r, m)) - m).norm_approx() <= 1e-12 * m.norm_approx());
  }

  // odd n rejects matrices with off-diagonal blocks
  Signature g30(3, 0);
  auto r30 = Representation<FloatComplex>::build(g30);
  Matrix<FloatComplex> bad(4, 4);
  bad(0, 2) = {1, 0};
  CHECK_THROWS_AS((void)unrepresent(r30, bad), Error);

  // exact mode round-trips exactly
  Signature g21(2, 1);
  auto re = Representation<GaussianRational>::build(g21);
  MvExact me = random_exact_mv(g21, rng);
  CHECK(unrepresent(re, represent(re, me)) == me);
}

TEST_CASE("matrix oracle kernels agree with each other") {
  Rng rng(44);

  // LU determinant vs FL charpoly det on random matrices
  for (int n : {2, 4, 8}) {
    Matrix<FloatComplex> a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = random_unit_complex(rng);
    FloatComplex lu = matrix_det(a);
    std::vector<FloatComplex> cp = matrix_charpoly(a);
    CHECK(std::abs(lu - (-cp.back())) <= 1e-9 * std::max(1.0, std::abs(lu)));
  }

  // Bareiss det vs exact FL det (det = (-1)^(N+1) C_N; representation sizes
  // are even, odd sizes only appear for raw matrices), echelon rank on a
  // constructed singular case
  Matrix<GaussianRational> b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      b(i, j) = {random_small_rational(rng), random_small_rational(rng)};
  std::vector<GaussianRational> cpb = matrix_charpoly(b);
  CHECK(matrix_det(b) == cpb.back());  // N = 3 odd
  Matrix<GaussianRational> b4(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      b4(i, j) = {random_small_rational(rng), random_small_rational(rng)};
  CHECK(matrix_det(b4) == -matrix_charpoly(b4).back());  // N = 4 even
  for (int j = 0; j < 3; ++j) b(2, j) = b(0, j) + b(1, j);  // force rank 2
  CHECK(echelon_rank(b) <= 2);
  CHECK(matrix_det(b).is_zero());
}

TEST_CASE("one-sided Jacobi SVD") {
  Rng rng(45);
  CHECK(matrix_rank(Matrix<FloatComplex>::identity(2)) == 2);

  Matrix<FloatComplex> d(2, 2);
  d(0, 0) = {1, 0};
  CHECK(matrix_rank(d) == 1);

  Matrix<FloatComplex> x(2, 2);
  x(0, 1) = {1, 0};
  x(1, 0) = {1, 0};
  MatrixSVD f = matrix_svd(x);
  CHECK(f.singular_values[0] == doctest::Approx(1.0));
  CHECK(f.singular_values[1] == doctest::Approx(1.0));

  for (int n : {2, 3, 5, 8}) {
    Matrix<FloatComplex> a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = random_unit_complex(rng);
    MatrixSVD svd = matrix_svd(a);
    const Matrix<FloatComplex> id = Matrix<FloatComplex>::identity(n);
    CHECK((svd.u.conjugate_transpose() * svd.u).max_abs_diff(id) <= 1e-12);
    CHECK((svd.v.conjugate_transpose() * svd.v).max_abs_diff(id) <= 1e-12);
    Matrix<FloatComplex> sig(n, n);
    for (int i = 0; i < n; ++i) sig(i, i) = {svd.singular_values[i], 0.0};
    CHECK((svd.u * sig * svd.v.conjugate_transpose()).max_abs_diff(a) <=
          1e-12 * std::max(1.0, a.max_abs()));
    for (std::size_t i = 1; i < svd.singular_values.size(); ++i)
      CHECK(svd.singular_values[i - 1] >= svd.singular_values[i]);
  }

  // rank-deficient: unitary completion still delivers unitary U
  Matrix<FloatComplex> z(4, 4);
  z(1, 2) = {3, 4};
  MatrixSVD svd = matrix_svd(z);
  CHECK(svd.singular_values[0] == doctest::Approx(5.0));
  CHECK(svd.singular_values[1] == doctest::Approx(0.0));
  CHECK((svd.u.conjugate_transpose() * svd.u)
            .max_abs_diff(Matrix<FloatComplex>::identity(4)) <= 1e-12);
  CHECK(matrix_rank(z) == 1);
}

TEST_CASE("SVD in the algebra") {
  // svd_ga(3e): U = V = e, Sigma = 3e
  Signature g20(2, 0);
  auto rep = Representation<FloatComplex>::build(g20);
  GASvd<FloatComplex> f = svd_ga(rep, MvFloat::scalar(g20, {3, 0}));
  CHECK((f.u - MvFloat::scalar(g20, {1, 0})).norm_approx() <= 1e-13);
  CHECK((f.v - MvFloat::scalar(g20, {1, 0})).norm_approx() <= 1e-13);
  CHECK((f.sigma - MvFloat::scalar(g20, {3, 0})).norm_approx() <= 1e-13);

  // svd_ga((e+e1)/2): singular values (1, 0)
  Signature g10(1, 0);
  auto rep10 = Representation<FloatComplex>::build(g10);
  MvFloat half = MvFloat::from_terms(g10, {{0u, {0.5, 0}}, {1u, {0.5, 0}}});
  GASvd<FloatComplex> fh = svd_ga(rep10, half);
  CHECK(fh.singular_values[0] == doctest::Approx(1.0));
  CHECK(fh.singular_values[1] == doctest::Approx(0.0).epsilon(1e-12));

  // contract on random multivectors, even and odd n
  Rng rng(46);
  for (const Signature& sig : signatures_up_to(4)) {
    auto r = Representation<FloatComplex>::build(sig);
    MvFloat m = random_float_mv(sig, rng);
    GASvd<FloatComplex> g = svd_ga(r, m);
    CHECK(is_unitary(g.u, 1e-10));
    CHECK(is_unitary(g.v, 1e-10));
    CHECK((g.sigma.hermitian_conjugation() - g.sigma).norm_approx() <= 1e-12);
    CHECK((g.u * g.sigma * g.v.hermitian_conjugation() - m).norm_approx() <=
          1e-9 * std::max(1.0, m.norm_approx()));
    // beta'(Sigma) diagonal, real, nonnegative; matches matrix_svd as a
    // sorted list
    Matrix<FloatComplex> sm = represent(r, g.sigma);
    std::vector<double> diag;
    for (int i = 0; i < r.rep_size(); ++i) {
      for (int j = 0; j < r.rep_size(); ++j)
        if (i != j) CHECK(std::abs(sm(i, j)) <= 1e-12);
      CHECK(sm(i, i).real() >= -1e-12);
      CHECK(std::abs(sm(i, i).imag()) <= 1e-12);
      diag.push_back(sm(i, i).real());
    }
    std::vector<double> oracle = matrix_svd(represent(r, m)).singular_values;
    std::sort(diag.rbegin(), diag.rend());
    for (int i = 0; i < r.rep_size(); ++i) CHECK(std::abs(diag[i] - oracle[i]) <= 1e-9);
  }

  // exact mode is rejected
  Signature g11(1, 1);
  auto re = Representation<GaussianRational>::build(g11);
  CHECK_THROWS_AS((void)svd_ga(re, MvExact::zero(g11)), Error);
}

TEST_CASE("dimension ceiling and shape guards") {
  CHECK_THROWS_AS(Signature(13, 0), Error);
  CHECK_THROWS_AS(Signature(-1, 2), Error);
  CHECK_THROWS_AS(Signature(0, 0), Error);

  Matrix<FloatComplex> rect(2, 3);
  CHECK_THROWS_AS((void)matrix_det(rect), Error);
  CHECK_THROWS_AS((void)matrix_charpoly(rect), Error);

  // unrepresent rejects wrongly sized matrices
  auto rep = Representation<FloatComplex>::build(Signature(2, 0));
  CHECK_THROWS_AS((void)unrepresent(rep, Matrix<FloatComplex>::identity(4)), Error);
}

TEST_CASE("concurrent use of immutable values and representation builds") {
  Rng rng(47);
  Signature g32(3, 2);
  MvFloat shared_m = random_float_mv(g32, rng);
  const int expected = rank(shared_m).rank;

  std::vector<std::thread> workers;
  std::array<int, 8> ranks{};
  std::array<Matrix<FloatComplex>, 4> blades;
  for (int i = 0; i < 8; ++i)
    workers.emplace_back([&, i] { ranks[i] = rank(shared_m).rank; });
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] {
      auto rep = Representation<FloatComplex>::build(Signature(3, 2));
      blades[i] = rep.blade_matrix(0x15);
    });
  for (auto& w : workers) w.join();

  for (int r : ranks) CHECK(r == expected);
  for (int i = 1; i < 4; ++i) CHECK(blades[i] == blades[0]);
}
