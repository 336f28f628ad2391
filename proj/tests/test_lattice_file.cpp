#include <doctest.h>

#include "padic/errors.hpp"
#include "padic/lattice_file.hpp"
#include "test_util.hpp"

using namespace padic;
using namespace testutil;

TEST_SUITE("lattice_file") {
  TEST_CASE("bundled cyclotomic file matches the built-in example") {
    const LatticeFile file = load_lattice_file(PADIC_DATA_DIR "/cyclotomic_q2.lat");
    const LatticeFile ex = cyclotomic_example();
    CHECK(file.field.same_field(ex.field));
    CHECK(file.lattice.basis() == ex.lattice.basis());
    CHECK(file.norm.kind() == NormKind::Extension);
    CHECK(file.norm.min_poly() == ex.norm.min_poly());
    CHECK_FALSE(file.target.has_value());
  }

  TEST_CASE("every bundled file round-trips through the formatter") {
    for (const char* name : {"cyclotomic_q2.lat", "sup_f2t.lat", "weighted_q2.lat", "identity_q3.lat"}) {
      const LatticeFile a = load_lattice_file(std::string(PADIC_DATA_DIR "/") + name);
      const std::string text = format_lattice_file(a);
      const LatticeFile b = parse_lattice_file(text);
      CHECK_MESSAGE(b.lattice.basis() == a.lattice.basis(), name);
      CHECK(b.target == a.target);
      CHECK(b.depth == a.depth);
      CHECK(format_lattice_file(b) == text);
    }
  }

  TEST_CASE("weighted and function field files") {
    const LatticeFile w = load_lattice_file(PADIC_DATA_DIR "/weighted_q2.lat");
    CHECK(w.norm.weights() == std::vector<NormValue>{pv(0), pv(1)});
    CHECK(w.depth == 4);
    const LatticeFile f = load_lattice_file(PADIC_DATA_DIR "/sup_f2t.lat");
    CHECK(f.field.kind == FieldKind::FpT);
    CHECK(f.lattice.rank() == 2);
    CHECK(f.lattice.dimension() == 3);
  }

  TEST_CASE("malformed input") {
    const std::string head = "[field]\nkind = Qp\np = 2\n";
    CHECK_THROWS_AS(parse_lattice_file("[basis]\n1, 0\n"), ParseError);
    CHECK_THROWS_AS(parse_lattice_file(head), ParseError);
    CHECK_THROWS_AS(parse_lattice_file(head + "[basis]\n1, 0\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_lattice_file(head + "[basis]\n1, x\n"), ParseError);
    CHECK_THROWS_AS(parse_lattice_file(head + "[basis]\n1, 0\n[norm]\ntype = weighted\nweights = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_lattice_file(head + "[basis]\n1, 0\n[norm]\ntype = extension\npoly = 1, 1, 2\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_lattice_file(head + "[basis]\n1, 0\n[colors]\n"), ParseError);
    CHECK_THROWS_AS(parse_lattice_file("[field]\nkind = Qp\np = 4\n[basis]\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_lattice_file(head + "[basis]\n1, 0\n[target]\n1\n"), ParseError);
    CHECK_THROWS_AS(load_lattice_file("/nonexistent/file.lat"), ParseError);
  }

  TEST_CASE("dependent basis is a math error") {
    CHECK_THROWS_AS(parse_lattice_file("[field]\nkind = Qp\np = 2\n[basis]\n1, 2\n2, 4\n"), MathError);
  }
}
