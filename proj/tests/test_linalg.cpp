// Copyright 2026 The gravcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "gravcoh/error.hpp"
#include "gravcoh/linalg.hpp"
#include "oracle/brute_force.hpp"
#include "test_helpers.hpp"

using namespace gravcoh;
using testing::kPi;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

void check_spectrum_invariants(const ComplexMatrix& a, const Spectrum& s) {
  const std::size_t n = a.rows();
  const ComplexMatrix& v = s.eigenvectors;
  CHECK(max_abs_diff(dagger(v) * v, ComplexMatrix::identity(n)) <= 1e-10);
  ComplexMatrix lambda(n, n);
  for (std::size_t k = 0; k < n; ++k) lambda(k, k) = s.eigenvalues[k];
  CHECK(max_abs_diff(v * lambda * dagger(v), a) <= 1e-10);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum += s.eigenvalues[k];
    if (k > 0) CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
  }
  CHECK_NEAR(sum, a.trace().real(), 1e-10);
}

}  // namespace

TEST_CASE("ComplexMatrix rejects malformed construction") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), InvalidInput);
  CHECK_THROWS_AS(ComplexMatrix(0, 2), InvalidInput);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), InvalidInput);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), InvalidInput);
  ComplexMatrix big{{1e308}};
  CHECK_THROWS_AS(big *= 10.0, InvalidInput);
}

TEST_CASE("matmul") {
  const ComplexMatrix m{{Complex(1, 2), Complex(3, -1)}, {Complex(0, 1), Complex(-2, 0.5)}};

  SUBCASE("identity and zero") {
    CHECK(matmul(ComplexMatrix::identity(2), m) == m);
    CHECK(matmul(ComplexMatrix(2, 2), m) == ComplexMatrix(2, 2));
  }

  SUBCASE("diagonal phase on a ket multiplies entrywise") {
    const double theta[] = {0.3, -1.7, 2.9, kPi};
    std::vector<Complex> diag, ket;
    for (int i = 0; i < 4; ++i) {
      diag.push_back(std::polar(1.0, theta[i]));
      ket.push_back(Complex(0.1 * (i + 1), -0.2 * i));
    }
    const ComplexMatrix out = matmul(ComplexMatrix::diagonal(diag), ComplexMatrix::column(ket));
    REQUIRE(out.rows() == 4);
    REQUIRE(out.cols() == 1);
    for (int i = 0; i < 4; ++i) {
      // (c + i s)(x + i y) = (cx - sy) + i(cy + sx)
      const double c = std::cos(theta[i]), s = std::sin(theta[i]);
      const double x = ket[i].real(), y = ket[i].imag();
      CHECK_NEAR(out(i, 0).real(), c * x - s * y, 1e-15);
      CHECK_NEAR(out(i, 0).imag(), c * y + s * x, 1e-15);
    }
  }

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), InvalidInput);
  }
}

TEST_CASE("kron ordering puts the first factor in the high-order index") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));

  const double h = 1.0 / std::sqrt(2.0);
  const ComplexMatrix plus = ComplexMatrix::column(std::vector<Complex>{h, h});
  const ComplexMatrix joint = kron(plus, plus);
  REQUIRE(joint.rows() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK_NEAR(std::abs(joint(i, 0) - 0.5), 0.0, 1e-15);

  const ComplexMatrix e_l = ComplexMatrix::column(std::vector<Complex>{1.0, 0.0});
  const ComplexMatrix e_r = ComplexMatrix::column(std::vector<Complex>{0.0, 1.0});
  const ComplexMatrix lr = kron(e_l, e_r);
  CHECK(lr(1, 0) == Complex(1.0));
  CHECK(std::abs(lr(0, 0)) + std::abs(lr(2, 0)) + std::abs(lr(3, 0)) == 0.0);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(rng, 2, 3);
    const auto b = random_matrix(rng, 3, 2);
    const auto c = random_matrix(rng, 2, 2);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
  }
}

TEST_CASE("dagger") {
  const ComplexMatrix herm{{2.0, Complex(1, -1)}, {Complex(1, 1), -3.0}};
  CHECK(dagger(herm) == herm);
  CHECK(dagger(ComplexMatrix{{Complex(0, 1)}}) == ComplexMatrix{{Complex(0, -1)}});
  std::mt19937_64 rng(5);
  const auto m = random_matrix(rng, 3, 2);
  CHECK(dagger(dagger(m)) == m);
}

TEST_CASE("hermitian_eig on small fixed cases") {
  SUBCASE("already diagonal") {
    const auto s = hermitian_eig(ComplexMatrix{{3.0, 0.0}, {0.0, 1.0}});
    CHECK(s.eigenvalues == std::vector<double>{3.0, 1.0});
  }
  SUBCASE("uniform 2x2 matches the characteristic polynomial") {
    const ComplexMatrix a = 0.5 * ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}};
    const auto expected = oracle::eigenvalues_2x2(oracle::from_matrix(a));
    CHECK_NEAR(expected[0], 1.0, 1e-15);
    CHECK_NEAR(expected[1], 0.0, 1e-15);
    const auto s = hermitian_eig(a);
    CHECK_NEAR(s.eigenvalues[0], 1.0, 1e-12);
    CHECK_NEAR(s.eigenvalues[1], 0.0, 1e-12);
    check_spectrum_invariants(a, s);
  }
  SUBCASE("rank-one uniform 4x4 projector") {
    ComplexMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = 0.25;
    CHECK(max_abs_diff(a * a, a) <= 1e-15);
    const auto s = hermitian_eig(a);
    CHECK_NEAR(s.eigenvalues[0], 1.0, 1e-12);
    for (int k = 1; k < 4; ++k) CHECK_NEAR(s.eigenvalues[k], 0.0, 1e-12);
    check_spectrum_invariants(a, s);
  }
  SUBCASE("complex off-diagonal phases") {
    const ComplexMatrix a{{1.0, Complex(0, 2)}, {Complex(0, -2), 1.0}};
    const auto s = hermitian_eig(a);
    CHECK_NEAR(s.eigenvalues[0], 3.0, 1e-12);
    CHECK_NEAR(s.eigenvalues[1], -1.0, 1e-12);
    check_spectrum_invariants(a, s);
  }
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), InvalidInput);
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}), InvalidInput);
  Tolerances tight;
  tight.jacobi_max_sweeps = 0;
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix{{1.0, 0.5}, {0.5, 1.0}}, tight), NumericalFailure);
}

TEST_CASE("hermitian_eig agrees with inertia-count bisection on random Hermitian matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::Mat h = oracle::random_hermitian(rng, 4);
    const ComplexMatrix a = oracle::to_matrix(h);
    const auto expected = oracle::eigenvalues_bisection(h);
    const auto s = hermitian_eig(a);
    for (int k = 0; k < 4; ++k) CHECK_NEAR(s.eigenvalues[k], expected[k], 1e-8);
    check_spectrum_invariants(a, s);
  }
}

TEST_CASE("hermitian_eig handles larger and degenerate matrices") {
  std::mt19937_64 rng(77);
  const ComplexMatrix a = oracle::to_matrix(oracle::random_hermitian(rng, 8));
  check_spectrum_invariants(a, hermitian_eig(a));
  check_spectrum_invariants(ComplexMatrix::identity(4), hermitian_eig(ComplexMatrix::identity(4)));
}

TEST_CASE("trace_norm") {
  CHECK_NEAR(trace_norm(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}), 2.0, 1e-15);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix rho = oracle::to_matrix(oracle::random_density(rng, 4));
    CHECK_NEAR(trace_norm(rho), 1.0, 1e-10);
    const ComplexMatrix h = oracle::to_matrix(oracle::random_hermitian(rng, 4));
    CHECK(trace_norm(h) >= std::abs(h.trace().real()) - 1e-12);
  }
}
