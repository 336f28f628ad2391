// padic: command line front end for the lattice toolkit.
//
//   padic <command> [file] [--depth n] [--seed n] [--json] [--allow-uncertified]
//
// Exit status: 0 ok, 1 verification failure, 2 parse error, 3 math error.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "padic/cvp.hpp"
#include "padic/errors.hpp"
#include "padic/lattice_file.hpp"
#include "padic/minkowski.hpp"
#include "padic/orthogonal.hpp"
#include "padic/random.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace padic;

struct Options {
  std::string command;
  std::string file;
  std::optional<int> depth;
  std::optional<std::uint64_t> seed;
  bool json_out = false;
  bool allow_uncertified = false;
};

json vec_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json vecs_json(const std::vector<Vector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

json values_json(const std::vector<NormValue>& vs, std::uint64_t p) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(v.to_string(p));
  return a;
}

std::string join(const std::vector<NormValue>& vs, std::uint64_t p) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i].to_string(p);
  return s;
}

std::string vec_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

// Text and JSON are built side by side so both stay in sync.
struct Report {
  json data = json::object();
  std::ostringstream text;
};

void require_certified(const LatticeFile& f, const Options& opt) {
  if (f.norm.kind() == NormKind::Extension && !f.norm.certified_unramified() && !opt.allow_uncertified) {
    throw MathError("the extension polynomial does not reduce to an irreducible polynomial mod pi; "
                    "pass --allow-uncertified to use it anyway");
  }
}

int cmd_dual(const LatticeFile& f, Report& r) {
  const Lattice d = dual(f.lattice);
  r.data["dual_basis"] = vecs_json(d.basis_vectors());
  r.text << "dual basis (columns):\n";
  for (const auto& v : d.basis_vectors()) r.text << "  " << vec_text(v) << '\n';
  return 0;
}

int cmd_det(const LatticeFile& f, Report& r) {
  const NormValue d = determinant(f.lattice);
  r.data["det"] = d.to_string(f.field.p);
  r.text << "det = " << d.to_string(f.field.p) << '\n';
  return 0;
}

int cmd_ortho(const LatticeFile& f, const Options& opt, Report& r, bool with_vectors) {
  require_certified(f, opt);
  const auto p = f.field.p;
  const OrthogonalBasis o = orthogonalize(f.lattice, f.norm);
  if (with_vectors) {
    r.data["orthogonal_basis"] = vecs_json(o.vectors);
    r.data["replacements"] = o.replacements;
    r.text << "orthogonal basis (descending norm):\n";
    for (std::size_t i = 0; i < o.vectors.size(); ++i) {
      r.text << "  " << vec_text(o.vectors[i]) << "  N = " << o.maxima[i].to_string(p) << '\n';
    }
    r.text << "replacements: " << o.replacements << '\n';
  }
  r.data["maxima"] = values_json(o.maxima, p);
  r.data["certified"] = o.certified;
  r.text << "maxima: " << join(o.maxima, p) << '\n';
  r.text << "certified: " << (o.certified ? "yes" : "no") << '\n';
  if (opt.seed) {
    Rng rng(*opt.seed);
    const Matrix u = random_unimodular(f.field, f.lattice.rank(), rng);
    const auto rebased = successive_maxima(Lattice(f.lattice.basis() * u), f.norm);
    const bool same = rebased == o.maxima;
    r.data["rebased_maxima_match"] = same;
    r.text << "maxima after random re-basing (seed " << *opt.seed << "): " << (same ? "identical" : "DIFFERENT")
           << '\n';
    if (!same) return 1;
  }
  return o.certified ? 0 : 1;
}

int cmd_lvp(const LatticeFile& f, const Options& opt, Report& r) {
  require_certified(f, opt);
  const LvpResult res = lvp(f.lattice, f.norm);
  r.data["vector"] = vec_json(res.vector);
  r.data["norm"] = res.norm.to_string(f.field.p);
  r.text << "longest vector: " << vec_text(res.vector) << '\n' << "norm: " << res.norm.to_string(f.field.p) << '\n';
  return 0;
}

int cmd_cvp(const LatticeFile& f, const Options& opt, Report& r) {
  if (!f.target) throw ParseError("cvp needs a [target] block in the lattice file");
  require_certified(f, opt);
  const auto p = f.field.p;
  const CvpResult res = cvp(f.lattice, f.norm, *f.target);
  r.data["closest"] = vec_json(res.closest);
  r.data["coefficients"] = vec_json(res.coefficients);
  r.data["distance"] = res.distance.to_string(p);
  r.data["certified_depth"] = res.certified_depth;
  r.text << "closest: " << vec_text(res.closest) << '\n'
         << "coefficients: " << vec_text(res.coefficients) << '\n'
         << "distance: " << res.distance.to_string(p) << '\n'
         << "certified depth: " << res.certified_depth << '\n';
  const std::optional<int> depth = opt.depth ? opt.depth : f.depth;
  if (depth) {
    const CvpResult brute = cvp_bruteforce(f.lattice, f.norm, *f.target, *depth);
    const bool agree = brute.distance == res.distance;
    r.data["oracle"] = {{"depth", *depth},
                        {"distance", brute.distance.to_string(p)},
                        {"agrees", agree},
                        {"depth_sufficient", depth_sufficient(*depth, max_basis_norm(f.lattice, f.norm), res.distance)}};
    r.text << "enumeration at depth " << *depth << ": distance " << brute.distance.to_string(p)
           << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
    if (!agree && depth_sufficient(*depth, max_basis_norm(f.lattice, f.norm), res.distance)) return 1;
  }
  return 0;
}

json constants_json(const EquivConstants& c, std::uint64_t p, std::size_t n) {
  return {{"c1", c.c1.to_string(p)},
          {"c2", c.c2.to_string(p)},
          {"kappa", c.kappa().to_string(p)},
          {"c_prime", c.c_prime().to_string(p)},
          {"c_double_prime", c.c_double_prime(n).to_string(p)},
          {"per_basis_distances", values_json(c.per_basis_distances, p)}};
}

void constants_text(std::ostream& out, const EquivConstants& c, std::uint64_t p, std::size_t n) {
  out << "c1 = " << c.c1.to_string(p) << "\nc2 = " << c.c2.to_string(p) << "\nc' = " << c.c_prime().to_string(p)
      << "\nc'' = " << c.c_double_prime(n).to_string(p) << "\ndistances: " << join(c.per_basis_distances, p) << '\n';
}

int cmd_constants(const LatticeFile& f, const Options& opt, Report& r) {
  require_certified(f, opt);
  const EquivConstants c = equiv_constants(f.norm, f.field, f.lattice.dimension());
  r.data["constants"] = constants_json(c, f.field.p, f.lattice.rank());
  constants_text(r.text, c, f.field.p, f.lattice.rank());
  return 0;
}

int render_verification(const VerificationReport& v, Report& r) {
  const auto p = v.field.p;
  r.data["field"] = v.field.name();
  r.data["rank"] = v.rank;
  r.data["dimension"] = v.dimension;
  r.data["constants"] = constants_json(v.constants, p, v.rank);
  r.data["maxima"] = values_json(v.maxima, p);
  r.data["dual_maxima"] = values_json(v.dual_maxima, p);
  r.data["det"] = v.det.to_string(p);
  r.data["dual_det"] = v.dual_det.to_string(p);
  json ineq = json::array();
  r.text << "field " << v.field.name() << ", rank " << v.rank << ", dimension " << v.dimension << '\n';
  r.text << "maxima: " << join(v.maxima, p) << "\ndual maxima: " << join(v.dual_maxima, p) << '\n';
  r.text << "det = " << v.det.to_string(p) << ", dual det = " << v.dual_det.to_string(p) << '\n';
  for (const auto& rec : v.inequalities) {
    ineq.push_back({{"name", rec.name},
                    {"norm", rec.norm_label},
                    {"left", rec.left.to_string(p)},
                    {"right", rec.right.to_string(p)},
                    {"constant", rec.constant.to_string(p)},
                    {"pass", rec.pass}});
    r.text << (rec.pass ? "PASS " : "FAIL ") << rec.name << " [" << rec.norm_label << "]: " << rec.left.to_string(p)
           << " >= " << rec.right.to_string(p) << '\n';
  }
  r.data["inequalities"] = ineq;
  json inv = json::array();
  for (const auto& rec : v.invariants) {
    inv.push_back({{"name", rec.name}, {"pass", rec.pass}, {"detail", rec.detail}});
    r.text << (rec.pass ? "PASS " : "FAIL ") << rec.name << ": " << rec.detail << '\n';
  }
  r.data["invariants"] = inv;
  r.data["passed"] = v.passed();
  r.text << (v.passed() ? "all checks passed" : "verification FAILED") << '\n';
  return v.passed() ? 0 : 1;
}

int cmd_verify(const LatticeFile& f, const Options& opt, Report& r) {
  require_certified(f, opt);
  return render_verification(verify(f.lattice, f.norm), r);
}

// Reference values for the bundled cyclotomic example.
int cmd_selftest(Report& r) {
  const LatticeFile ex = cyclotomic_example();
  const FieldConfig& f = ex.field;
  const auto p = f.p;
  auto q = [&](long a, long b) { return Scalar::from_rational(f, mpq_class(a, b)); };
  auto ord = [](long long k) { return NormValue::pi_power(k); };
  json checks = json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"pass", ok}});
    r.text << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };

  const Matrix d = dual_basis(ex.lattice.basis());
  const Matrix expected_d = Matrix::from_columns(std::vector<Vector>{{q(1, 1), q(0, 1), q(0, 1), q(0, 1)},
                                                  {q(0, 1), q(1, 2), q(0, 1), q(0, 1)},
                                                  {q(0, 1), q(0, 1), q(1, 32), q(1, 32)}});
  check("dual basis entries 1, 1/2, 1/32", d == expected_d);

  const Lattice dl = dual(ex.lattice);
  const auto maxima = successive_maxima(ex.lattice, ex.norm);
  const auto dual_maxima = successive_maxima(dl, ex.norm);
  check("maxima (1, 1/2, 1/16)", maxima == std::vector<NormValue>{ord(0), ord(1), ord(4)});
  check("dual maxima (32, 2, 1)", dual_maxima == std::vector<NormValue>{ord(-5), ord(-1), ord(0)});
  check("first maximum times last dual maximum = 1", maxima.size() == 3 && maxima[0] * dual_maxima[2] == ord(0));
  check("first dual maximum times last maximum = 2", maxima.size() == 3 && dual_maxima[0] * maxima[2] == ord(-1));

  const Vector third = {q(0, 1), q(0, 1), q(16, 1), q(16, 1)};
  check("N(16z^2 + 16z^3) = 2^-4", ex.norm(third) == ord(4));
  check("basis is orthogonal", is_orthogonal(ex.lattice.basis_vectors(), ex.norm));
  check("extension polynomial certified", ex.norm.certified_unramified());
  check("longest vector has norm 1", lvp(ex.lattice, ex.norm).norm == ord(0));
  check("det = 2^-11/2", determinant(ex.lattice) == NormValue::from_order(Exponent(11, 2)));
  check("det(L) det(L*) = 1", determinant(ex.lattice) * determinant(dl) == ord(0));
  check("(L*)* = L", same_lattice(dual(dl), ex.lattice));
  const EquivConstants c = equiv_constants(ex.norm, f, 4);
  check("constants (c1, c2) = (1, 1)", c.c1 == ord(0) && c.c2 == ord(0));
  const VerificationReport v = verify(ex.lattice, ex.norm);
  check("verify passes", v.passed());

  r.data["field"] = f.name();
  r.data["maxima"] = values_json(maxima, p);
  r.data["dual_maxima"] = values_json(dual_maxima, p);
  r.data["checks"] = checks;
  r.data["passed"] = all;
  r.text << (all ? "selftest passed" : "selftest FAILED") << '\n';
  return all ? 0 : 1;
}

int run(const Options& opt, Report& r) {
  r.data["command"] = opt.command;
  if (opt.command == "selftest") return cmd_selftest(r);
  if (opt.file.empty()) throw ParseError(opt.command + " needs a lattice file");
  LatticeFile f = load_lattice_file(opt.file);
  r.data["field"] = f.field.name();
  r.data["norm_type"] = f.norm.describe(f.field);
  if (opt.command == "dual") return cmd_dual(f, r);
  if (opt.command == "det") return cmd_det(f, r);
  if (opt.command == "ortho") return cmd_ortho(f, opt, r, true);
  if (opt.command == "maxima") return cmd_ortho(f, opt, r, false);
  if (opt.command == "lvp") return cmd_lvp(f, opt, r);
  if (opt.command == "cvp") return cmd_cvp(f, opt, r);
  if (opt.command == "constants") return cmd_constants(f, opt, r);
  if (opt.command == "verify") return cmd_verify(f, opt, r);
  throw ParseError("unknown command " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-adic lattice toolkit over Q_p and F_p((T))"};
  Options opt;
  app.add_option("command", opt.command, "dual | det | ortho | maxima | lvp | cvp | constants | verify | selftest")
      ->required()
      ->check(CLI::IsMember({"dual", "det", "ortho", "maxima", "lvp", "cvp", "constants", "verify", "selftest"}));
  app.add_option("file", opt.file, "lattice description file");
  app.add_option("--depth", opt.depth, "enumeration depth for the brute-force CVP cross-check")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for the randomized re-basing check");
  app.add_flag("--json", opt.json_out, "print a JSON report");
  app.add_flag("--allow-uncertified", opt.allow_uncertified,
               "accept extension polynomials whose reduction is not irreducible");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report r;
  int status = 0;
  try {
    status = run(opt, r);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const MathError& e) {
    std::cerr << "math error: " << e.what() << '\n';
    return 3;
  }
  if (opt.json_out) {
    r.data["exit_status"] = status;
    std::cout << r.data.dump(2) << '\n';
  } else {
    std::cout << r.text.str();
  }
  return status;
}
