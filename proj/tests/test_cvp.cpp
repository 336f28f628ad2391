#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "padic/cvp.hpp"
#include "padic/orthogonal.hpp"
#include "test_util.hpp"

using namespace padic;
using namespace testutil;

TEST_SUITE("cvp") {
  const FieldConfig q2 = FieldConfig::qp(2);

  TEST_CASE("lvp") {
    CHECK(lvp(Lattice(Matrix::identity(q2, 2)), Norm::sup()).norm == pv(0));
    const LvpResult r = lvp(Lattice(cyclotomic_basis()), cyclotomic_norm());
    CHECK(r.norm == pv(0));
    CHECK(cyclotomic_norm()(r.vector) == pv(0));
    CHECK(lvp(Lattice(cols({vec(q2, {"2", "0"}), vec(q2, {"0", "4"})})), Norm::sup()).norm == pv(1));
  }

  TEST_CASE("target in the lattice") {
    const Lattice l(cyclotomic_basis());
    const Vector t = vec(q2, {"3", "2", "16", "16"});
    const CvpResult r = cvp(l, cyclotomic_norm(), t);
    CHECK(r.distance.is_zero());
    CHECK(r.closest == t);
  }

  TEST_CASE("half-integral offset") {
    const Lattice l(cols({vec(q2, {"1", "0"})}));
    const Vector t = vec(q2, {"0", "1/2"});
    const CvpResult r = cvp(l, Norm::sup(), t);
    CHECK(r.distance == pv(-1));
    CHECK(is_zero(r.closest));
    CHECK(cvp_bruteforce(l, Norm::sup(), t, 3).distance == pv(-1));
    CHECK(oracle::naive_cvp_distance(l, Norm::sup(), t, 3) == pv(-1));
  }

  TEST_CASE("1 against the other powers of z") {
    const Lattice l(cols({vec(q2, {"0", "1", "0", "0"}), vec(q2, {"0", "0", "1", "0"}), vec(q2, {"0", "0", "0", "1"})}));
    const Vector t = unit_vector(q2, 4, 0);
    CHECK(cvp(l, cyclotomic_norm(), t).distance == pv(0));
    CHECK(cvp_bruteforce(l, cyclotomic_norm(), t, 3).distance == pv(0));
    CHECK(oracle::naive_cvp_distance(l, cyclotomic_norm(), t, 3) == pv(0));
  }

  TEST_CASE("bruteforce corner cases") {
    const FieldConfig q3 = FieldConfig::qp(3);
    const Lattice l(cols({vec(q3, {"1", "0"})}));
    CHECK(cvp_bruteforce(l, Norm::sup(), zero_vector(q3, 2), 2).distance.is_zero());
    CHECK(cvp_bruteforce(l, Norm::sup(), vec(q3, {"1/3", "0"}), 1).distance == pv(-1));
  }

  TEST_CASE("certified depth") {
    const Lattice l(cols({vec(q2, {"1", "0"})}));
    const CvpResult r = cvp(l, Norm::sup(), vec(q2, {"1/4", "0"}));
    CHECK(r.distance == pv(-2));
    CHECK(r.certified_depth == 1);
    CHECK(depth_sufficient(1, pv(0), pv(-2)));
    CHECK_FALSE(depth_sufficient(2, pv(0), pv(2)));
  }
}

TEST_SUITE("cvp properties") {
  TEST_CASE("membership, distance, and agreement with enumeration") {
    Rng rng(61);
    int compared = 0;
    for (const auto& f : {FieldConfig::qp(2), FieldConfig::qp(3), FieldConfig::fpt(2), FieldConfig::fpt(3)}) {
      for (int it = 0; it < 30; ++it) {
        const std::size_t m = 2 + it % 3;
        const std::size_t n = 1 + it % std::min<std::size_t>(m, 3);
        const Lattice l = random_lattice(f, m, n, rng, -1, 2);
        const Norm norms[] = {Norm::sup(), random_weighted_sup(m, rng), unramified_extension(f, m)};
        for (const auto& norm : norms) {
          const Vector t = random_vector(f, m, rng, -3, 2, 0.2);
          const CvpResult r = cvp(l, norm, t);
          REQUIRE(member(l, r.closest).has_value());
          CHECK(*member(l, r.closest) == r.coefficients);
          CHECK(norm(t - r.closest) == r.distance);
          if (!depth_sufficient(4, max_basis_norm(l, norm), r.distance)) continue;
          CHECK(cvp_bruteforce(l, norm, t, 4).distance == r.distance);
          if (n == 1 || (n == 2 && f.p == 2)) CHECK(oracle::naive_cvp_distance(l, norm, t, 4) == r.distance);
          ++compared;
        }
      }
    }
    CHECK(compared > 100);
  }

  TEST_CASE("bruteforce equals naive enumeration even when depth is short") {
    Rng rng(62);
    for (const auto& f : {FieldConfig::qp(2), FieldConfig::fpt(2), FieldConfig::qp(3)}) {
      for (int it = 0; it < 20; ++it) {
        const Lattice l = random_lattice(f, 2, 1 + it % 2, rng);
        const Vector t = random_vector(f, 2, rng, -2, 2, 0.2);
        const int depth = 1 + it % 3;
        CHECK(cvp_bruteforce(l, Norm::sup(), t, depth).distance == oracle::naive_cvp_distance(l, Norm::sup(), t, depth));
      }
    }
  }

  TEST_CASE("in-span targets") {
    Rng rng(63);
    for (const auto& f : all_fields()) {
      for (int it = 0; it < 20; ++it) {
        const Lattice l = random_lattice(f, 3, 1 + it % 3, rng, -1, 2);
        const Norm norm = it % 2 ? Norm::sup() : unramified_extension(f, 3);
        const Vector t = mat_vec(l.basis(), random_vector(f, l.rank(), rng, -2, 1, 0.2));
        const CvpResult r = cvp(l, norm, t);
        if (depth_sufficient(6, max_basis_norm(l, norm), r.distance)) {
          CHECK(cvp_bruteforce(l, norm, t, 6).distance == r.distance);
        }
        // Adding a lattice vector to the target shifts the answer.
        const Vector v = random_lattice_vector(l, rng);
        CHECK(cvp(l, norm, t + v).distance == r.distance);
      }
    }
  }

  TEST_CASE("distances to random lattice points form a finite set") {
    Rng rng(64);
    const FieldConfig f = FieldConfig::qp(3);
    const Lattice l = random_lattice(f, 3, 2, rng);
    const Norm norm = eisenstein_extension(f, 3);
    const Vector t = random_vector(f, 3, rng, -3, 1);
    const CvpResult best = cvp(l, norm, t);
    const NormValue far = std::max(norm(t), max_basis_norm(l, norm));
    std::set<NormValue> seen;
    for (int k = 0; k < 1000; ++k) {
      const NormValue d = norm(t - random_lattice_vector(l, rng));
      CHECK(d >= best.distance);
      CHECK(d <= far);
      seen.insert(d);
    }
    // Orders lie in [far, best] on the grid (1/3) Z.
    const Exponent span = best.distance.order() - far.order();
    CHECK(seen.size() <= static_cast<std::size_t>(boost::rational_cast<double>(span) * 3) + 1);
  }
}
