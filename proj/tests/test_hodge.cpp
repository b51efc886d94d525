#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "hodgerank/hodge.hpp"
#include "hodgerank/operators.hpp"
#include "oracles.hpp"

using hodgerank::DecompMode;
using hodgerank::HodgeComponents;
using hodgerank::boundary_operators;
using hodgerank::decompose;
using hodgerank::harmonic_dimension;
using hodgerank::hodge_laplacian;

namespace {

struct Fixture {
  hodgerank::SimplicialComplex k;
  hodgerank::BoundaryOperators ops;
  hodgerank::LaplacianBundle bundle;
  explicit Fixture(const hodgerank::SimplicialComplex& complex)
      : k(complex), ops(boundary_operators(k)), bundle(hodge_laplacian(ops)) {}
};

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_SUITE("hodge") {

TEST_CASE("worked example, unnormalized: frozen component values") {
  const Fixture f(oracles::worked_example());
  const HodgeComponents parts =
      decompose(oracles::reference_flow(), f.bundle, f.ops, DecompMode::unnormalized);

  const Eigen::VectorXd g = vec({58.0 / 21, 26.0 / 21, -32.0 / 21, 9.0 / 7, 59.0 / 21,
                                 40.0 / 21, -19.0 / 21});
  const Eigen::VectorXd c = vec({1.0 / 3, -1.0 / 3, 1.0 / 3, 0, -1, 1, -1});
  const Eigen::VectorXd h =
      vec({-2.0 / 21, 2.0 / 21, 4.0 / 21, -2.0 / 7, 4.0 / 21, 2.0 / 21, -2.0 / 21});
  CHECK(oracles::max_abs_diff(parts.gradient, g) < 1e-10);
  CHECK(oracles::max_abs_diff(parts.curl, c) < 1e-10);
  CHECK(oracles::max_abs_diff(parts.harmonic, h) < 1e-10);
  CHECK(parts.curl_norm == doctest::Approx(std::sqrt(10.0 / 3.0)).epsilon(1e-12));

  // d2 is all ones here, so every mode coincides.
  for (const DecompMode mode : {DecompMode::symmetric, DecompMode::weighted}) {
    const HodgeComponents same =
        decompose(oracles::reference_flow(), f.bundle, f.ops, mode);
    CHECK(oracles::max_abs_diff(same.gradient, g) < 1e-10);
    CHECK(oracles::max_abs_diff(same.curl, c) < 1e-10);
    CHECK(oracles::max_abs_diff(same.harmonic, h) < 1e-10);
  }
}

TEST_CASE("filled worked example: frozen values for all three modes") {
  const Fixture f(hodgerank::fill_triangles(oracles::worked_example()));
  const Eigen::VectorXd x = oracles::reference_flow();

  const HodgeComponents un = decompose(x, f.bundle, f.ops, DecompMode::unnormalized);
  CHECK(oracles::max_abs_diff(
            un.curl, vec({5.0 / 21, -5.0 / 21, 11.0 / 21, -2.0 / 7, -17.0 / 21,
                          23.0 / 21, -23.0 / 21})) < 1e-10);
  CHECK(un.harmonic_norm < 1e-10);

  const HodgeComponents sym = decompose(x, f.bundle, f.ops, DecompMode::symmetric);
  CHECK(oracles::max_abs_diff(
            sym.gradient,
            vec({2.5012522041356395, 1.49874779586435, -1.4177553305160724,
                 1.0920474583051316, 2.9621436568062567, 1.5472759332882173,
                 -0.5472759332882039})) < 1e-9);
  CHECK(oracles::max_abs_diff(
            sym.curl, vec({0.498747795864355, -0.498747795864355, 0.4177553305160743,
                           -0.09204745830513228, -0.9621436568062594,
                           1.4527240667117887, -1.4527240667117887})) < 1e-9);
  CHECK(sym.gradient_norm == doctest::Approx(4.813831548480485).epsilon(1e-10));
  CHECK(sym.curl_norm == doctest::Approx(2.4139233258026094).epsilon(1e-10));
  CHECK(sym.harmonic_norm < 1e-10);

  const HodgeComponents wtd = decompose(x, f.bundle, f.ops, DecompMode::weighted);
  CHECK(oracles::max_abs_diff(wtd.gradient,
                              vec({2.4, 1.6, -1.6, 1.0, 3.6, 1.4, -0.4})) < 1e-10);
  CHECK(oracles::max_abs_diff(wtd.curl,
                              vec({0.6, -0.6, 0.6, 0, -1.6, 1.6, -1.6})) < 1e-10);
  CHECK(wtd.gradient_norm == doctest::Approx(5.192301994298862).epsilon(1e-10));
  CHECK(wtd.curl_norm == doctest::Approx(2.959729717389749).epsilon(1e-10));
}

TEST_CASE("reconstruction and orthogonality on random complexes, all modes") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Fixture f(oracles::random_complex(400 + seed));
    hodgerank::Rng rng(777 + seed);
    Eigen::VectorXd x(f.ops.b1.cols());
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.normal();

    for (const DecompMode mode :
         {DecompMode::unnormalized, DecompMode::symmetric, DecompMode::weighted}) {
      CAPTURE(seed);
      CAPTURE(hodgerank::to_string(mode));
      const HodgeComponents parts = decompose(x, f.bundle, f.ops, mode);
      CHECK(oracles::max_abs_diff(parts.gradient + parts.curl + parts.harmonic, x) <
            1e-10);

      // Structural membership and orthogonality in the mode's inner product.
      const double scale = std::max(1.0, x.norm());
      if (mode == DecompMode::unnormalized) {
        CHECK(std::abs(parts.gradient.dot(parts.curl)) / scale < 1e-9);
        CHECK((hodgerank::SpMat(f.ops.b1) * parts.harmonic).norm() / scale < 1e-8);
        CHECK((hodgerank::SpMat(f.ops.b2).transpose() * parts.harmonic).norm() / scale <
              1e-8);
      } else if (mode == DecompMode::symmetric) {
        CHECK(std::abs(parts.gradient.dot(parts.curl)) / scale < 1e-9);
        CHECK(std::abs(parts.gradient.dot(parts.harmonic)) / scale < 1e-8);
        CHECK(std::abs(parts.curl.dot(parts.harmonic)) / scale < 1e-8);
      } else {
        const Eigen::VectorXd w = f.bundle.d2.cwiseInverse();
        CHECK(std::abs(parts.gradient.dot(w.asDiagonal() * parts.curl)) / scale < 1e-9);
        CHECK(std::abs(parts.gradient.dot(w.asDiagonal() * parts.harmonic)) / scale <
              1e-8);
        CHECK(std::abs(parts.curl.dot(w.asDiagonal() * parts.harmonic)) / scale < 1e-8);
      }

      // Dense pseudo-inverse oracle.
      const auto dense = oracles::dense_decompose(x, oracles::dense(f.ops.b1),
                                                  oracles::dense(f.ops.b2),
                                                  f.bundle.d2, mode);
      CHECK(oracles::max_abs_diff(parts.gradient, dense[0]) < 1e-8);
      CHECK(oracles::max_abs_diff(parts.curl, dense[1]) < 1e-8);
      CHECK(oracles::max_abs_diff(parts.harmonic, dense[2]) < 1e-8);
    }
  }
}

TEST_CASE("component norms are Euclidean norms of the returned parts") {
  const Fixture f(oracles::worked_example());
  const HodgeComponents parts =
      decompose(oracles::reference_flow(), f.bundle, f.ops, DecompMode::unnormalized);
  CHECK(parts.gradient_norm == parts.gradient.norm());
  CHECK(parts.curl_norm == parts.curl.norm());
  CHECK(parts.harmonic_norm == parts.harmonic.norm());
}

TEST_CASE("harmonic dimension: worked example 1, filled variant 0") {
  const Fixture plain(oracles::worked_example());
  CHECK(harmonic_dimension(plain.ops, plain.bundle) == 1);
  const Fixture filled(hodgerank::fill_triangles(oracles::worked_example()));
  CHECK(harmonic_dimension(filled.ops, filled.bundle) == 0);
}

TEST_CASE("harmonic dimension matches the rank arithmetic on random complexes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Fixture f(oracles::random_complex(500 + seed));
    const int e = static_cast<int>(f.ops.b1.cols());
    const int n = static_cast<int>(f.ops.b1.rows());
    const int components = static_cast<int>(
        hodgerank::connected_components(hodgerank::underlying_graph(f.k)));
    const int rank_b2 = oracles::dense_rank(oracles::dense(f.ops.b2));
    const int expected = e - (n - components) - rank_b2;
    CAPTURE(seed);
    CHECK(harmonic_dimension(f.ops, f.bundle) == expected);
  }
}

TEST_CASE("input validation") {
  const Fixture f(oracles::worked_example());
  Eigen::VectorXd wrong(3);
  wrong << 1, 2, 3;
  CHECK_THROWS_AS(decompose(wrong, f.bundle, f.ops, DecompMode::unnormalized),
                  std::invalid_argument);
  Eigen::VectorXd bad = oracles::reference_flow();
  bad[2] = std::nan("");
  CHECK_THROWS_AS(decompose(bad, f.bundle, f.ops, DecompMode::unnormalized),
                  std::invalid_argument);
}

TEST_CASE("mode names round-trip") {
  for (const DecompMode mode :
       {DecompMode::unnormalized, DecompMode::symmetric, DecompMode::weighted})
    CHECK(hodgerank::parse_mode(hodgerank::to_string(mode)) == mode);
  CHECK_THROWS_AS(hodgerank::parse_mode("bogus"), std::invalid_argument);
}

}  // TEST_SUITE
