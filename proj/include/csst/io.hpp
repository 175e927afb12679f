#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "csst/css.hpp"
#include "csst/linear_code.hpp"

namespace csst {

/// Code file: a line `n k`, then k rows of n characters from {0,1}. Lines
/// starting with '#' are comments. The rows must be independent.
LinearCode parse_code(std::istream& in, const std::string& where = "<input>");
LinearCode load_code(const std::string& path);
std::string format_code(const LinearCode& c);

/// `n;bits` with the generator polynomial written low degree first.
LinearCode parse_poly_spec(const std::string& spec);

struct NamedCode {
  std::string name;
  LinearCode code;
  std::size_t line = 0;
};

/// Blocks in code file format separated by blank lines, each headed by
/// `# name n k selfdual`. Every entry is re-checked for self-duality.
std::vector<NamedCode> parse_selfdual_db(std::istream& in, const std::string& where = "<input>");
std::vector<NamedCode> load_selfdual_db(const std::string& path);

/// Two code blocks, C1 then C2, separated by a blank line.
CssPair parse_css_pair(std::istream& in, const std::string& where = "<input>");
CssPair load_css_pair(const std::string& path);
std::string format_css_pair(const CssPair& p);

}  // namespace csst
