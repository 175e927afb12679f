#include "csst/io.hpp"

#include <fstream>
#include <sstream>

#include "csst/errors.hpp"

namespace csst {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits into blank-line separated blocks; comment lines stay in place.
std::vector<std::vector<Line>> read_blocks(std::istream& in) {
  std::vector<std::vector<Line>> blocks(1);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string t = trim(raw);
    if (t.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    blocks.back().push_back({number, std::move(t)});
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

LinearCode parse_block(const std::vector<Line>& block, const std::string& where) {
  std::vector<Line> body;
  for (const auto& l : block)
    if (l.text[0] != '#') body.push_back(l);
  if (body.empty()) throw ParseError(where, block.empty() ? 0 : block.front().number, "missing `n k` header");
  std::istringstream header(body[0].text);
  long n = -1;
  long k = -1;
  std::string extra;
  if (!(header >> n >> k) || (header >> extra) || n <= 0 || k < 0)
    throw ParseError(where, body[0].number, "expected `n k` with n > 0 and k >= 0");
  if (body.size() != static_cast<std::size_t>(k) + 1)
    throw ParseError(where, body[0].number, "expected " + std::to_string(k) + " rows, found " +
                                                std::to_string(body.size() - 1));
  BitMatrix rows(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < body.size(); ++i) {
    const auto& l = body[i];
    if (l.text.size() != static_cast<std::size_t>(n))
      throw ParseError(where, l.number, "row has length " + std::to_string(l.text.size()) + ", expected " +
                                            std::to_string(n));
    if (l.text.find_first_not_of("01") != std::string::npos)
      throw ParseError(where, l.number, "row contains characters other than 0 and 1");
    rows.push_back(BitVector::from_string(l.text));
  }
  LinearCode c = LinearCode::from_rows(rows);
  if (c.k() != static_cast<std::size_t>(k)) throw ParseError(where, body[0].number, "rows are linearly dependent");
  return c;
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path, 0, "cannot open file");
  return f;
}

}  // namespace

LinearCode parse_code(std::istream& in, const std::string& where) {
  const auto blocks = read_blocks(in);
  if (blocks.size() != 1) throw ParseError(where, 0, "expected exactly one code block");
  return parse_block(blocks[0], where);
}

LinearCode load_code(const std::string& path) {
  auto f = open(path);
  return parse_code(f, path);
}

std::string format_code(const LinearCode& c) {
  std::string out = std::to_string(c.n()) + " " + std::to_string(c.k()) + "\n";
  for (const auto& r : c.generator().rows()) out += r.to_string() + "\n";
  return out;
}

LinearCode parse_poly_spec(const std::string& spec) {
  const auto semi = spec.find(';');
  if (semi == std::string::npos) throw ParseError("poly-spec", 1, "expected `n;bits`");
  std::size_t n = 0;
  try {
    n = static_cast<std::size_t>(std::stoul(spec.substr(0, semi)));
  } catch (const std::exception&) {
    throw ParseError("poly-spec", 1, "bad length '" + spec.substr(0, semi) + "'");
  }
  const std::string bits = trim(spec.substr(semi + 1));
  if (bits.empty() || bits.find_first_not_of("01") != std::string::npos)
    throw ParseError("poly-spec", 1, "coefficients must be a 0/1 string");
  return cyclic_code(n, Gf2Poly::from_string(bits));
}

std::vector<NamedCode> parse_selfdual_db(std::istream& in, const std::string& where) {
  std::vector<NamedCode> out;
  for (const auto& block : read_blocks(in)) {
    const Line& head = block.front();
    std::istringstream hs(head.text);
    std::string hash;
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    std::string tag;
    if (!(hs >> hash >> name >> n >> k >> tag) || hash != "#" || tag != "selfdual")
      throw ParseError(where, head.number, "expected header `# name n k selfdual`");
    LinearCode c = parse_block(block, where);
    if (c.n() != n || c.k() != k) throw ParseError(where, head.number, "header does not match the code block");
    if (!classify(c).is_self_dual) throw ParseError(where, head.number, "selfdual check failed for " + name);
    out.push_back({name, std::move(c), head.number});
  }
  return out;
}

std::vector<NamedCode> load_selfdual_db(const std::string& path) {
  auto f = open(path);
  return parse_selfdual_db(f, path);
}

CssPair parse_css_pair(std::istream& in, const std::string& where) {
  const auto blocks = read_blocks(in);
  if (blocks.size() != 2) throw ParseError(where, 0, "expected two code blocks (C1, then C2)");
  return make_css(parse_block(blocks[0], where), parse_block(blocks[1], where));
}

CssPair load_css_pair(const std::string& path) {
  auto f = open(path);
  return parse_css_pair(f, path);
}

std::string format_css_pair(const CssPair& p) {
  return "# c1\n" + format_code(p.c1) + "\n# c2\n" + format_code(p.c2);
}

}  // namespace csst
