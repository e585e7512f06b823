#include "qslchan/matrix.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace qslchan;
using namespace qslchan::test;

TEST_CASE("kron identity and no-decay cases") {
  const CMat i2 = CMat::identity(2);
  CHECK(kron(i2, i2).max_abs_diff(CMat::identity(4)) == 0.0);

  // diag(1, sqrt(P)) at P = 1 is the identity
  const CMat b0(2, 2, {1.0, 0.0, 0.0, 1.0});
  CHECK(kron(b0, b0).max_abs_diff(CMat::identity(4)) == 0.0);
}

TEST_CASE("kron of sigma_x with itself is the antidiagonal") {
  const CMat sx(2, 2, {0.0, 1.0, 1.0, 0.0});
  CMat expect(4, 4);
  expect(0, 3) = expect(1, 2) = expect(2, 1) = expect(3, 0) = 1.0;
  CHECK(kron(sx, sx).max_abs_diff(expect) == 0.0);
}

TEST_CASE("kron rejects 4x4 factors") {
  CHECK_THROWS_AS(kron(CMat::identity(4), CMat::identity(2)), std::invalid_argument);
}

TEST_CASE("kron mixed-product property") {
  std::mt19937 rng(42);
  for (int i = 0; i < 30; ++i) {
    const CMat a = random_matrix(rng, 2), b = random_matrix(rng, 2);
    const CMat c = random_matrix(rng, 2), d = random_matrix(rng, 2);
    CHECK((kron(a, b) * kron(c, d)).max_abs_diff(kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("singular values of simple matrices") {
  const auto sv_i = singular_values(CMat::identity(4));
  for (double s : sv_i) CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  const auto sv_0 = singular_values(CMat::zero(4));
  for (double s : sv_0) CHECK(s == 0.0);
}

TEST_CASE("singular values reject non-finite input") {
  CMat m = CMat::zero(4);
  m(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(singular_values(m), std::domain_error);
}

TEST_CASE("singular values match the characteristic-polynomial oracle") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const CMat h = random_hermitian(rng, 4);
    const auto sv = singular_values(h);
    const auto oracle = charpoly_singular_values(h);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(sv[k] - oracle[k]) < 1e-10);
  }
}

TEST_CASE("singular values are invariant under unitary transforms") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const CMat m = random_matrix(rng, 4);
    const CMat u = random_unitary(rng, 4), v = random_unitary(rng, 4);
    const auto a = singular_values(m);
    const auto b = singular_values(u * m * v);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
  }
}

TEST_CASE("Hermitian eigenvalues: diagonal and projector cases") {
  CMat d = CMat::zero(4);
  d(0, 0) = 0.4;
  d(1, 1) = 0.3;
  d(2, 2) = 0.2;
  d(3, 3) = 0.1;
  const auto ev = eig_hermitian(d);
  CHECK(ev[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(ev[3] == doctest::Approx(0.1).epsilon(1e-14));

  // Bell projector: spectrum (1, 0, 0, 0)
  const double h = std::sqrt(0.5);
  CMat bell = CMat::zero(4);
  bell(0, 0) = bell(3, 3) = 0.5;
  bell(0, 3) = bell(3, 0) = 0.5;
  (void)h;
  const auto bv = eig_hermitian(bell);
  CHECK(bv[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(bv[k]) < 1e-12);
}

TEST_CASE("Hermitian eigenvalues reject a non-Hermitian matrix") {
  CMat m = CMat::zero(4);
  m(0, 1) = 1.0;  // missing conjugate partner
  CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
}

TEST_CASE("for Hermitian input, singular values equal |eigenvalues|") {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    const CMat h = random_hermitian(rng, 4);
    auto ev = eig_hermitian(h);
    for (double& x : ev) x = std::abs(x);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    const auto sv = singular_values(h);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(sv[k] - ev[k]) < 1e-10);
  }
}

TEST_CASE("Schatten norm ordering from sorted singular values") {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto sv = singular_values(random_matrix(rng, 4));
    double l1 = 0.0, l2 = 0.0;
    for (double s : sv) {
      l1 += s;
      l2 += s * s;
    }
    l2 = std::sqrt(l2);
    CHECK(l1 >= l2);
    CHECK(l2 >= sv.front());
  }
}

TEST_CASE("trace product") {
  CHECK(mat_trace_product(CMat::identity(4), CMat::identity(4)).real() ==
        doctest::Approx(4.0).epsilon(1e-15));
  // purity of a pure state
  CMat rho = CMat::zero(4);
  rho(0, 0) = 0.64;
  rho(3, 3) = 0.36;
  rho(0, 3) = rho(3, 0) = 0.48;
  CHECK(mat_trace_product(rho, rho).real() == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937 rng(9);
  const CMat a = random_matrix(rng, 4), b = random_matrix(rng, 4);
  const Complex direct = (a * b).trace();
  const Complex fast = mat_trace_product(a, b);
  CHECK(std::abs(direct - fast) < 1e-13);

  CHECK_THROWS_AS(mat_trace_product(CMat::identity(2), CMat::identity(2)),
                  std::invalid_argument);
}
