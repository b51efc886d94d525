#include <doctest.h>

#include <Eigen/Dense>
#include <stdexcept>

#include "hodgerank/epr.hpp"
#include "hodgerank/hodge.hpp"
#include "hodgerank/operators.hpp"
#include "oracles.hpp"

using hodgerank::EprConfig;
using hodgerank::EprResult;
using hodgerank::boundary_operators;
using hodgerank::hodge_laplacian;
using hodgerank::personalized_epr;

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

// Dense direct solve of (beta I + l1_norm) pi = (beta - 2) x.
Eigen::VectorXd dense_epr(const hodgerank::LaplacianBundle& bundle, int seed,
                          double beta, bool reversed = false) {
  const Eigen::MatrixXd l = oracles::dense(bundle.l1_norm);
  const Eigen::MatrixXd a =
      beta * Eigen::MatrixXd::Identity(l.rows(), l.cols()) + l;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(l.rows());
  x[seed] = reversed ? -1.0 : 1.0;
  return Eigen::PartialPivLU<Eigen::MatrixXd>(a).solve((beta - 2.0) * x);
}

}  // namespace

TEST_SUITE("epr") {

TEST_CASE("single-edge complex gives pi = 1/7 at beta = 2.5") {
  const Fixture f(hodgerank::build_complex({{1, 2}}));
  const EprResult r = personalized_epr(f.ops, f.bundle, 0, EprConfig{});
  REQUIRE(r.pi.size() == 1);
  CHECK(r.pi[0] == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  CHECK(r.total == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  CHECK(r.residual <= 1e-10);
}

TEST_CASE("filled worked example, seed (1,2): frozen solution") {
  const Fixture f(hodgerank::fill_triangles(oracles::worked_example()));
  const EprResult r = personalized_epr(f.ops, f.bundle, 0, EprConfig{});
  const Eigen::VectorXd expected = vec(
      {0.15624140432836087, 0.0040261542000672428, -0.0036368494629364198,
       0.0062996584735715176, 0.00036315053706358053, 0.000026154200067243541,
       0.00024140432836085017});
  CHECK(oracles::max_abs_diff(r.pi, expected) < 1e-9);
  CHECK(r.total == doctest::Approx(0.1564630613066396).epsilon(1e-9));
  CHECK(r.components.gradient_norm == doctest::Approx(0.1259562070969216).epsilon(1e-8));
  CHECK(r.components.curl_norm == doctest::Approx(0.10454166899096068).epsilon(1e-8));
  CHECK(r.components.harmonic_norm < 1e-9);
  CHECK(r.seed_edge == 0);
  CHECK_FALSE(r.reversed);
}

TEST_CASE("filled worked example, seed (2,4): frozen solution") {
  const Fixture f(hodgerank::fill_triangles(oracles::worked_example()));
  const EprResult r = personalized_epr(f.ops, f.bundle, 3, EprConfig{});
  const Eigen::VectorXd expected =
      vec({0.00629965847357152, 0.00038930473713082, 0.00405230840013449,
           0.16278246713029323, 0.00405230840013449, 0.00038930473713082,
           0.00629965847357152});
  CHECK(oracles::max_abs_diff(r.pi, expected) < 1e-9);
  CHECK(r.total == doctest::Approx(0.16312770617491248).epsilon(1e-9));
  CHECK(r.components.gradient_norm == doctest::Approx(0.13147610725697453).epsilon(1e-8));
  CHECK(r.components.curl_norm == doctest::Approx(0.13908401511211546).epsilon(1e-8));
  CHECK(r.components.harmonic_norm < 1e-9);
}

TEST_CASE("worked example, seed (2,4): uncovered cycle edge carries harmonic mass") {
  const Fixture f(oracles::worked_example());
  const EprResult r = personalized_epr(f.ops, f.bundle, 3, EprConfig{});
  const Eigen::VectorXd expected =
      vec({0.00969162995594714, -0.00088105726872247, -0.0105726872246696,
           0.1788546255506608, -0.0105726872246696, -0.00088105726872247,
           0.00969162995594714});
  CHECK(oracles::max_abs_diff(r.pi, expected) < 1e-9);
  CHECK(r.total == doctest::Approx(0.18000541218917848).epsilon(1e-9));
  CHECK(r.components.gradient_norm == doctest::Approx(0.12352769436259586).epsilon(1e-8));
  CHECK(r.components.curl_norm < 1e-9);
  CHECK(r.components.harmonic_norm ==
        doctest::Approx(0.13093073414159542).epsilon(1e-8));
}

TEST_CASE("reversed seed negates the solution") {
  const Fixture f(oracles::worked_example());
  const EprResult fwd = personalized_epr(f.ops, f.bundle, 2, EprConfig{});
  const EprResult rev = personalized_epr(f.ops, f.bundle, 2, EprConfig{}, true);
  CHECK(rev.reversed);
  CHECK(oracles::max_abs_diff(rev.pi, -fwd.pi) < 1e-12);
  CHECK(rev.total == doctest::Approx(fwd.total).epsilon(1e-12));
}

TEST_CASE("dense-oracle agreement and residual bound on random complexes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Fixture f(oracles::random_complex(600 + seed));
    const int e = static_cast<int>(f.ops.b1.cols());
    hodgerank::Rng pick(seed);
    const int s = static_cast<int>(pick.bounded(static_cast<std::uint64_t>(e)));
    EprConfig cfg;
    const EprResult r = personalized_epr(f.ops, f.bundle, s, cfg);
    CAPTURE(seed);
    CHECK(oracles::max_abs_diff(r.pi, dense_epr(f.bundle, s, cfg.beta)) < 1e-9);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(e);
    x[s] = 1.0;
    const Eigen::VectorXd resid = cfg.beta * r.pi +
                                  oracles::dense(f.bundle.l1_norm) * r.pi -
                                  (cfg.beta - 2.0) * x;
    CHECK(resid.norm() <= cfg.tol * (1.0 + 1e-12));
    CHECK(r.residual <= cfg.tol);
  }
}

TEST_CASE("beta other than the default is honored") {
  const Fixture f(oracles::worked_example());
  EprConfig cfg;
  cfg.beta = 3.75;
  const EprResult r = personalized_epr(f.ops, f.bundle, 1, cfg);
  CHECK(oracles::max_abs_diff(r.pi, dense_epr(f.bundle, 1, 3.75)) < 1e-9);
}

TEST_CASE("dynamical iteration converges to the solver's fixed point") {
  const Fixture f(oracles::worked_example());
  const EprConfig cfg;
  for (int s : {0, 3, 5}) {
    const Eigen::VectorXd direct = dense_epr(f.bundle, s, cfg.beta);
    const Eigen::VectorXd iterated = hodgerank::epr_dynamical(f.bundle, s, cfg, 200);
    CHECK(oracles::max_abs_diff(iterated, direct) < 1e-8);
    // Few steps must NOT yet agree: the iteration really starts from zero.
    const Eigen::VectorXd early = hodgerank::epr_dynamical(f.bundle, s, cfg, 1);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(7);
    x[s] = 1.0;
    CHECK(oracles::max_abs_diff(early, (cfg.beta - 2.0) / cfg.beta * x) < 1e-15);
  }
}

TEST_CASE("harmonic part of pi is (beta-2)/beta times the harmonic seed part") {
  const Fixture f(oracles::worked_example());
  EprConfig cfg;  // weighted mode, beta = 2.5 -> factor 0.2
  for (int s = 0; s < 7; ++s) {
    const EprResult r = personalized_epr(f.ops, f.bundle, s, cfg);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(7);
    x[s] = 1.0;
    const auto xparts = hodgerank::decompose(x, f.bundle, f.ops, cfg.mode);
    CHECK(oracles::max_abs_diff(r.components.harmonic, 0.2 * xparts.harmonic) < 1e-9);
  }
}

TEST_CASE("epr_all_edges matches per-seed runs and is thread-count independent") {
  const Fixture f(oracles::worked_example());
  EprConfig one;
  one.threads = 1;
  EprConfig four;
  four.threads = 4;
  const auto a = hodgerank::epr_all_edges(f.ops, f.bundle, one);
  const auto b = hodgerank::epr_all_edges(f.ops, f.bundle, four);
  REQUIRE(a.size() == 7);
  REQUIRE(b.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(a[i].edge == i);
    CHECK(a[i].total == b[i].total);
    CHECK(a[i].gradient_norm == b[i].gradient_norm);
    CHECK(a[i].curl_norm == b[i].curl_norm);
    CHECK(a[i].harmonic_norm == b[i].harmonic_norm);
    const EprResult r = personalized_epr(f.ops, f.bundle, i, one);
    CHECK(a[i].total == doctest::Approx(r.total).epsilon(1e-12));
    CHECK(a[i].harmonic_norm ==
          doctest::Approx(r.components.harmonic_norm).epsilon(1e-12));
  }
}

TEST_CASE("configuration validation") {
  const Fixture f(oracles::worked_example());
  EprConfig bad;
  bad.beta = 2.0;
  CHECK_THROWS_AS(personalized_epr(f.ops, f.bundle, 0, bad), std::invalid_argument);
  EprConfig neg;
  neg.tol = 0.0;
  CHECK_THROWS_AS(personalized_epr(f.ops, f.bundle, 0, neg), std::invalid_argument);
  CHECK_THROWS_AS(personalized_epr(f.ops, f.bundle, 7, EprConfig{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(personalized_epr(f.ops, f.bundle, -1, EprConfig{}),
                  std::invalid_argument);
}

TEST_CASE("node PageRank: frozen worked-example scores") {
  const auto g = hodgerank::underlying_graph(oracles::worked_example());
  const Eigen::VectorXd pr = hodgerank::node_pagerank(g);
  const Eigen::VectorXd expected =
      vec({0.14905877833269304, 0.21240875912408752, 0.27706492508643854,
           0.21240875912408752, 0.14905877833269304});
  CHECK(oracles::max_abs_diff(pr, expected) < 1e-10);
  CHECK(pr.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("node PageRank: dangling nodes redistribute uniformly") {
  // Two connected nodes plus one isolated node. Closed form: the isolated
  // node holds 3/43 and each connected node 20/43.
  hodgerank::Graph g = hodgerank::Graph::from_edges(3, {{0, 1}});
  const Eigen::VectorXd pr = hodgerank::node_pagerank(g);
  CHECK(pr[0] == doctest::Approx(20.0 / 43.0).epsilon(1e-10));
  CHECK(pr[1] == doctest::Approx(20.0 / 43.0).epsilon(1e-10));
  CHECK(pr[2] == doctest::Approx(3.0 / 43.0).epsilon(1e-10));
}

TEST_CASE("node PageRank: personalized preference and validation") {
  const auto g = hodgerank::underlying_graph(oracles::worked_example());
  Eigen::VectorXd pref = Eigen::VectorXd::Zero(5);
  pref[0] = 1.0;
  const Eigen::VectorXd pr = hodgerank::node_pagerank(g, 0.85, &pref);
  CHECK(pr.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pr[0] > pr[4]);  // mass concentrates near the preferred node

  Eigen::VectorXd bad = Eigen::VectorXd::Constant(5, 0.5);
  CHECK_THROWS_AS(hodgerank::node_pagerank(g, 0.85, &bad), std::invalid_argument);
  Eigen::VectorXd negative = Eigen::VectorXd::Zero(5);
  negative[0] = 2.0;
  negative[1] = -1.0;
  CHECK_THROWS_AS(hodgerank::node_pagerank(g, 0.85, &negative), std::invalid_argument);
}

}  // TEST_SUITE
