#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "padic/lattice.hpp"
#include "padic/norm.hpp"

namespace padic {

/// Parsed lattice description file.
///
/// The format is line based. Blank lines and text after '#' are ignored.
/// Blocks start with a header in brackets:
///
///   [field]    kind = Qp | FpT,  p = <prime>,  display_depth = <n> (optional)
///   [basis]    one basis vector per line, entries separated by ','
///   [norm]     type = sup | weighted | extension (default sup)
///              weights = p^e, p^e, ...     (weighted)
///              poly = c0, c1, ..., 1       (extension, lowest degree first)
///   [target]   one vector line (optional)
///   [options]  depth = <n>, seed = <n> (optional)
///
/// Scalars are always written as strings in the scalar grammar, never as
/// native numbers, so rationals and rational functions round-trip exactly.
struct LatticeFile {
  FieldConfig field;
  Lattice lattice;
  Norm norm;
  std::optional<Vector> target;
  std::optional<int> depth;
  std::optional<std::uint64_t> seed;
};

/// Throws ParseError for malformed text and MathError when the basis is
/// dependent or dimensions disagree.
LatticeFile parse_lattice_file(std::string_view text);
LatticeFile load_lattice_file(const std::filesystem::path& path);

/// Renders a file that parse_lattice_file reads back to the same data.
std::string format_lattice_file(const LatticeFile& file);

/// The lattice L(1, 2z, 16z^2 + 16z^3) in K = Q_2(z), z a primitive 5th
/// root of unity, with the 2-adic absolute value of K as its norm.
LatticeFile cyclotomic_example();

}  // namespace padic
