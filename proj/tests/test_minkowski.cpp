#include <doctest.h>

#include "padic/minkowski.hpp"
#include "test_util.hpp"

using namespace padic;
using namespace testutil;

namespace {

NormValue sup_norm(const Vector& v) { return Norm::sup()(v); }

}  // namespace

TEST_SUITE("minkowski") {
  const FieldConfig q2 = FieldConfig::qp(2);

  TEST_CASE("equivalence constants") {
    for (std::size_t m : {1u, 2u, 4u}) {
      const auto c = equiv_constants(Norm::sup(), q2, m);
      CHECK(c.c1 == pv(0));
      CHECK(c.c2 == pv(0));
    }
    const auto w = equiv_constants(Norm::weighted_sup({pv(0), pv(1)}), q2, 2);
    CHECK(w.c1 == pv(0));
    CHECK(w.c2 == pv(-1));
    CHECK(w.per_basis_distances == std::vector<NormValue>{pv(0), pv(1)});
    const auto e = equiv_constants(cyclotomic_norm(), q2, 4);
    CHECK(e.c1 == pv(0));
    CHECK(e.c2 == pv(0));
    CHECK(e.per_basis_distances == std::vector<NormValue>(4, pv(0)));
  }

  TEST_CASE("derived constants") {
    const auto w = equiv_constants(Norm::weighted_sup({pv(0), pv(1)}), q2, 2);
    CHECK(w.kappa() == w.c2.inverse());
    CHECK(w.c_prime() == w.kappa() * w.kappa());
    CHECK(w.c_double_prime(3) == w.kappa() * w.kappa() * w.kappa());
  }

  TEST_CASE("inequalities on the identity") {
    const Lattice id(Matrix::identity(q2, 2));
    const auto c = equiv_constants(Norm::sup(), q2, 2);
    for (const auto& r : {minkowski_first(id, Norm::sup(), c), transference_first(id, Norm::sup(), c),
                          transference_maxima(id, Norm::sup(), c), minkowski_second(id, Norm::sup(), c),
                          corollary_products(id, Norm::sup(), c)}) {
      CHECK_MESSAGE(r.pass, r.name);
      CHECK(r.left == pv(0));
      CHECK(r.right == pv(0));
    }
  }

  TEST_CASE("inequalities on the cyclotomic lattice") {
    const Lattice l(cyclotomic_basis());
    const auto sup_c = equiv_constants(Norm::sup(), q2, 4);
    const auto mf = minkowski_first(l, Norm::sup(), sup_c);
    CHECK(mf.pass);
    CHECK(mf.left == pv(0));
    CHECK(mf.right == pv(11, 6));
    const auto ms = minkowski_second(l, Norm::sup(), sup_c);
    CHECK(ms.left == pv(5));
    CHECK(ms.right == pv(11, 2));

    const auto ext_c = equiv_constants(cyclotomic_norm(), q2, 4);
    const auto tf = transference_first(l, cyclotomic_norm(), ext_c);
    CHECK(tf.left == pv(-5));
    const auto tm = transference_maxima(l, cyclotomic_norm(), ext_c);
    CHECK(tm.left == pv(0));
    CHECK(tm.pass);
    const auto cp = corollary_products(l, cyclotomic_norm(), ext_c);
    CHECK(cp.left == pv(-1));
    CHECK(cp.pass);

    const VerificationReport v = verify(l, cyclotomic_norm());
    CHECK(v.passed());
    bool saw_dual = false;
    for (const auto& r : v.inequalities) {
      if (r.name == "transference_maxima_dual") {
        saw_dual = true;
        CHECK(r.left == pv(-1));
      }
    }
    CHECK(saw_dual);
  }

  TEST_CASE("skew lattice") {
    const Lattice l(cols({vec(q2, {"1", "1"}), vec(q2, {"1", "-1"})}));
    const auto r = minkowski_first(l, Norm::sup(), equiv_constants(Norm::sup(), q2, 2));
    CHECK(r.pass);
    CHECK(r.left == pv(0));
    CHECK(r.right == pv(1, 2));
  }
}

TEST_SUITE("minkowski properties") {
  TEST_CASE("sampled two-sided equivalence on 1000 vectors") {
    Rng rng(71);
    const auto fields = all_fields();
    for (int it = 0; it < 1000; ++it) {
      const FieldConfig& f = fields[it % fields.size()];
      const std::size_t m = 1 + it % 4;
      Norm n = Norm::sup();
      switch (it % 4) {
        case 1: n = random_weighted_sup(m, rng); break;
        case 2: n = unramified_extension(f, m); break;
        case 3: n = eisenstein_extension(f, m); break;
        default: break;
      }
      const auto c = equiv_constants(n, f, m);
      const Vector v = random_vector(f, m, rng, -4, 4, 0.2);
      CHECK(c.c1 * n(v) <= sup_norm(v));
      CHECK(sup_norm(v) <= c.c2 * n(v));
    }
  }

  TEST_CASE("verify passes on random lattices") {
    Rng rng(72);
    for (const auto& f : all_fields()) {
      for (int it = 0; it < 8; ++it) {
        const std::size_t m = 1 + it % 5;
        const Lattice l = random_lattice(f, m, 1 + it % m, rng);
        for (const Norm& n : {Norm::sup(), random_weighted_sup(m, rng), unramified_extension(f, m)}) {
          const VerificationReport r = verify(l, n);
          CHECK(r.passed());
          CHECK(r.inequalities.size() == 11);
          CHECK(r.invariants.size() == 3);
        }
      }
    }
  }
}
