#include "padic/lattice_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "padic/errors.hpp"

namespace padic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? s.npos : next - pos)));
    if (next == std::string_view::npos) return out;
    pos = next + 1;
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <typename T>
T parse_number(std::string_view s, const std::string& where) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(where + ": expected a number, got '" + std::string(s) + "'");
  }
  return v;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string at(const Line& l) { return "line " + std::to_string(l.number); }

using Section = std::vector<Line>;

Vector parse_vector(const Line& line, const FieldConfig& f) {
  Vector v;
  for (auto entry : split(line.text, ',')) {
    if (entry.empty()) throw ParseError(at(line) + ": empty vector entry");
    try {
      v.push_back(parse_scalar(entry, f));
    } catch (const ParseError& e) {
      throw ParseError(at(line) + ": " + e.what());
    }
  }
  return v;
}

std::map<std::string, Line> parse_keys(const Section& section, const std::string& name) {
  std::map<std::string, Line> keys;
  for (const auto& line : section) {
    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos) throw ParseError(at(line) + ": expected 'key = value' in [" + name + "]");
    const std::string key = lower(trim(line.text.substr(0, eq)));
    if (!keys.emplace(key, Line{line.number, trim(line.text.substr(eq + 1))}).second) {
      throw ParseError(at(line) + ": duplicate key '" + key + "'");
    }
  }
  return keys;
}

}  // namespace

LatticeFile parse_lattice_file(std::string_view text) {
  std::map<std::string, Section> sections;
  std::string current;
  std::size_t number = 0;
  for (auto raw : split(text, '\n')) {
    ++number;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("line " + std::to_string(number) + ": unterminated block header");
      current = lower(trim(line.substr(1, line.size() - 2)));
      if (current != "field" && current != "basis" && current != "norm" && current != "target" && current != "options") {
        throw ParseError("line " + std::to_string(number) + ": unknown block [" + current + "]");
      }
      if (sections.count(current)) throw ParseError("line " + std::to_string(number) + ": repeated block [" + current + "]");
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError("line " + std::to_string(number) + ": content before the first block");
    sections[current].push_back({number, line});
  }

  if (!sections.count("field")) throw ParseError("missing [field] block");
  if (!sections.count("basis") || sections["basis"].empty()) throw ParseError("missing or empty [basis] block");

  FieldConfig field;
  {
    auto keys = parse_keys(sections["field"], "field");
    if (!keys.count("kind") || !keys.count("p")) throw ParseError("[field] needs 'kind' and 'p'");
    const std::string kind = lower(keys.at("kind").text);
    if (kind == "qp") {
      field.kind = FieldKind::Qp;
    } else if (kind == "fpt") {
      field.kind = FieldKind::FpT;
    } else {
      throw ParseError(at(keys.at("kind")) + ": field kind must be Qp or FpT");
    }
    field.p = parse_number<std::uint64_t>(keys.at("p").text, at(keys.at("p")));
    if (keys.count("display_depth")) {
      field.display_depth = parse_number<int>(keys.at("display_depth").text, at(keys.at("display_depth")));
    }
    for (const auto& [k, line] : keys) {
      if (k != "kind" && k != "p" && k != "display_depth") throw ParseError(at(line) + ": unknown key '" + k + "'");
    }
    try {
      field.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("[field]: ") + e.what());
    }
  }

  std::vector<Vector> columns;
  for (const auto& line : sections["basis"]) {
    columns.push_back(parse_vector(line, field));
    if (columns.back().size() != columns.front().size()) {
      throw ParseError(at(line) + ": basis vectors have different lengths");
    }
  }
  const std::size_t m = columns.front().size();

  Norm norm = Norm::sup();
  if (sections.count("norm")) {
    auto keys = parse_keys(sections["norm"], "norm");
    const std::string type = keys.count("type") ? lower(keys.at("type").text) : "sup";
    if (type == "sup") {
      // nothing else
    } else if (type == "weighted") {
      if (!keys.count("weights")) throw ParseError("[norm] weighted needs 'weights'");
      std::vector<NormValue> weights;
      for (auto w : split(keys.at("weights").text, ',')) {
        weights.push_back(NormValue::parse(w, field.p));
        if (weights.back().is_zero()) throw ParseError(at(keys.at("weights")) + ": weights must be nonzero");
      }
      if (weights.size() != m) throw ParseError(at(keys.at("weights")) + ": need one weight per coordinate");
      norm = Norm::weighted_sup(std::move(weights));
    } else if (type == "extension") {
      if (!keys.count("poly")) throw ParseError("[norm] extension needs 'poly'");
      Vector poly = parse_vector(keys.at("poly"), field);
      if (poly.size() != m + 1) throw ParseError(at(keys.at("poly")) + ": polynomial degree must equal the dimension");
      if (!poly.back().is_one()) throw ParseError(at(keys.at("poly")) + ": polynomial must be monic");
      norm = Norm::extension(std::move(poly));
    } else {
      throw ParseError(at(keys.count("type") ? keys.at("type") : sections["norm"].front()) + ": unknown norm type '" + type + "'");
    }
  }

  std::optional<Vector> target;
  if (sections.count("target")) {
    const Section& s = sections["target"];
    if (s.size() != 1) throw ParseError("[target] must hold exactly one vector line");
    target = parse_vector(s.front(), field);
    if (target->size() != m) throw ParseError(at(s.front()) + ": target has the wrong dimension");
  }

  std::optional<int> depth;
  std::optional<std::uint64_t> seed;
  if (sections.count("options")) {
    for (const auto& [k, line] : parse_keys(sections["options"], "options")) {
      if (k == "depth") {
        depth = parse_number<int>(line.text, at(line));
        if (*depth < 1) throw ParseError(at(line) + ": depth must be at least 1");
      } else if (k == "seed") {
        seed = parse_number<std::uint64_t>(line.text, at(line));
      } else {
        throw ParseError(at(line) + ": unknown option '" + k + "'");
      }
    }
  }

  return LatticeFile{field, Lattice(Matrix::from_columns(columns)), std::move(norm), std::move(target), depth, seed};
}

LatticeFile load_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice_file(buf.str());
}

std::string format_lattice_file(const LatticeFile& file) {
  std::ostringstream out;
  auto vec_line = [&](const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].to_string();
    out << '\n';
  };
  out << "[field]\nkind = " << (file.field.kind == FieldKind::Qp ? "Qp" : "FpT") << "\np = " << file.field.p
      << "\ndisplay_depth = " << file.field.display_depth << "\n\n[basis]\n";
  for (const auto& b : file.lattice.basis_vectors()) vec_line(b);
  out << "\n[norm]\n";
  switch (file.norm.kind()) {
    case NormKind::Sup:
      out << "type = sup\n";
      break;
    case NormKind::WeightedSup:
      out << "type = weighted\nweights = ";
      for (std::size_t i = 0; i < file.norm.weights().size(); ++i) {
        out << (i ? ", " : "") << file.norm.weights()[i].to_string(file.field.p);
      }
      out << '\n';
      break;
    case NormKind::Extension:
      out << "type = extension\npoly = ";
      vec_line(file.norm.min_poly());
      break;
  }
  if (file.target) {
    out << "\n[target]\n";
    vec_line(*file.target);
  }
  if (file.depth || file.seed) {
    out << "\n[options]\n";
    if (file.depth) out << "depth = " << *file.depth << '\n';
    if (file.seed) out << "seed = " << *file.seed << '\n';
  }
  return out.str();
}

LatticeFile cyclotomic_example() {
  const FieldConfig f = FieldConfig::qp(2);
  auto s = [&](long long v) { return Scalar::from_integer(f, v); };
  const std::vector<Vector> cols{{s(1), s(0), s(0), s(0)}, {s(0), s(2), s(0), s(0)}, {s(0), s(0), s(16), s(16)}};
  return LatticeFile{f, Lattice(Matrix::from_columns(cols)), Norm::extension({s(1), s(1), s(1), s(1), s(1)}),
                     std::nullopt, std::nullopt, std::nullopt};
}

}  // namespace padic
