#include <doctest.h>

#include "oracles.hpp"
#include "padic/errors.hpp"
#include "padic/minkowski.hpp"
#include "padic/orthogonal.hpp"
#include "test_util.hpp"

using namespace padic;
using namespace testutil;

namespace {

std::vector<Norm> norms_for(const FieldConfig& f, std::size_t m, Rng& rng) {
  return {Norm::sup(), random_weighted_sup(m, rng), unramified_extension(f, m), eisenstein_extension(f, m)};
}

}  // namespace

TEST_SUITE("orthogonal") {
  const FieldConfig q2 = FieldConfig::qp(2);

  TEST_CASE("is_orthogonal") {
    const std::vector<Vector> std2{vec(q2, {"1", "0"}), vec(q2, {"0", "1"})};
    CHECK(is_orthogonal(std2, Norm::sup()));
    const std::vector<Vector> skew{vec(q2, {"1", "1"}), vec(q2, {"1", "-1"})};
    CHECK_FALSE(is_orthogonal(skew, Norm::sup()));
    const auto viol = find_violation(skew, Norm::sup());
    REQUIRE(viol.has_value());
    CHECK(viol->norm == pv(1));
    CHECK(viol->group_norm == pv(0));
    CHECK(is_orthogonal(cyclotomic_basis().columns(), cyclotomic_norm()));
  }

  TEST_CASE("orthogonalize") {
    const Lattice skew(cols({vec(q2, {"1", "1"}), vec(q2, {"1", "-1"})}));
    const OrthogonalBasis o = orthogonalize(skew, Norm::sup());
    CHECK(o.certified);
    CHECK(o.maxima == std::vector<NormValue>{pv(0), pv(1)});
    CHECK(same_lattice(Lattice(Matrix::from_columns(o.vectors)), skew));
    // Exhaustive digit-depth-3 search agrees on the first maximum.
    CHECK(oracle::naive_longest(skew, Norm::sup(), 3) == pv(0));
    CHECK(oracle::residue_class_maxima(skew, Norm::sup(), 3) == o.maxima);

    const Lattice l(cyclotomic_basis());
    CHECK(successive_maxima(l, cyclotomic_norm()) == std::vector<NormValue>{pv(0), pv(1), pv(4)});
    CHECK(successive_maxima(dual(l), cyclotomic_norm()) == std::vector<NormValue>{pv(-5), pv(-1), pv(0)});
    CHECK(successive_maxima(Lattice(Matrix::identity(q2, 2)), Norm::sup()) == std::vector<NormValue>{pv(0), pv(0)});
  }

  TEST_CASE("dependent input") {
    const std::vector<Vector> dep{vec(q2, {"1", "1"}), vec(q2, {"2", "2"})};
    CHECK_THROWS_AS(is_orthogonal(dep, Norm::sup()), MathError);
  }
}

TEST_SUITE("orthogonal properties") {
  TEST_CASE("certificate soundness on 500 combinations") {
    Rng rng(51);
    const auto fields = all_fields();
    int samples = 0;
    for (int it = 0; samples < 500; ++it) {
      const FieldConfig& f = fields[it % fields.size()];
      const std::size_t m = 2 + it % 3;
      const Lattice l = random_lattice(f, m, 1 + it % m, rng);
      for (const auto& n : norms_for(f, m, rng)) {
        const OrthogonalBasis o = orthogonalize(l, n);
        REQUIRE(o.certified);
        REQUIRE(same_lattice(Lattice(Matrix::from_columns(o.vectors)), l));
        for (int k = 0; k < 5; ++k, ++samples) {
          Vector sum = zero_vector(f, m);
          NormValue term_max = NormValue::zero();
          for (const auto& v : o.vectors) {
            const Scalar a = random_scalar(f, rng, 0, 3, 0.3);
            axpy(sum, a, v);
            term_max = std::max(term_max, n(a * v));
          }
          CHECK(n(sum) == term_max);
        }
      }
    }
  }

  TEST_CASE("uniqueness under re-basing, scaling, and the first maximum bound") {
    Rng rng(52);
    for (const auto& f : all_fields()) {
      for (int it = 0; it < 12; ++it) {
        const std::size_t m = 2 + it % 3;
        const Lattice l = random_lattice(f, m, 1 + it % m, rng);
        for (const auto& n : norms_for(f, m, rng)) {
          const auto maxima = successive_maxima(l, n);
          const Lattice r1(l.basis() * random_unimodular(f, l.rank(), rng));
          const Lattice r2(l.basis() * random_unimodular(f, l.rank(), rng));
          CHECK(successive_maxima(r1, n) == maxima);
          CHECK(successive_maxima(r2, n) == maxima);

          const Scalar x = random_scalar(f, rng, -3, 3);
          auto expect = maxima;
          for (auto& v : expect) v = v * x.abs();
          CHECK(successive_maxima(scaled(l, x), n) == expect);

          for (int k = 0; k < 10; ++k) CHECK(n(random_lattice_vector(l, rng)) <= maxima.front());
        }
      }
    }
  }

  TEST_CASE("norm products decrease and stay above the second-theorem bound") {
    Rng rng(53);
    std::size_t replaced = 0;
    for (const auto& f : all_fields()) {
      for (int it = 0; it < 12; ++it) {
        const std::size_t m = 2 + it % 3;
        const Lattice l = random_lattice(f, m, 1 + it % m, rng);
        for (const auto& n : norms_for(f, m, rng)) {
          const OrthogonalBasis o = orthogonalize(l, n);
          const auto c = equiv_constants(n, f, m).c_double_prime(l.rank());
          const NormValue floor = c * determinant(l);
          REQUIRE(o.norm_products.size() == o.replacements + 1);
          for (std::size_t i = 0; i + 1 < o.norm_products.size(); ++i) CHECK(o.norm_products[i + 1] < o.norm_products[i]);
          for (const auto& v : o.norm_products) CHECK(v >= floor);
          replaced += o.replacements;
        }
      }
    }
    CHECK(replaced > 0);
  }

  TEST_CASE("maxima agree with the residue-class oracle") {
    Rng rng(54);
    for (const auto& f : {FieldConfig::qp(2), FieldConfig::qp(3), FieldConfig::fpt(2), FieldConfig::fpt(3)}) {
      int checked = 0;
      for (int it = 0; checked < 5 && it < 50; ++it) {
        const std::size_t m = 2 + it % 2;
        const Lattice l = random_lattice(f, m, 1 + it % 2, rng, -1, 2);
        for (const auto& n : norms_for(f, m, rng)) {
          const auto expect = oracle::residue_class_maxima(l, n, 3);
          if (!expect) continue;
          CHECK(successive_maxima(l, n) == *expect);
          ++checked;
        }
      }
      CHECK(checked >= 5);
    }
  }
}
