#include "slocc/state_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "slocc/errors.hpp"

namespace slocc {
namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment and CR stripped, trimmed
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, std::size_t line, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'",
                     line, 1);
  return v;
}

Complex scalar_at(const std::string& tok, std::size_t line) {
  try {
    return parse_scalar(tok);
  } catch (const ParseError& e) {
    throw ParseError("malformed scalar '" + tok + "': " + e.what(), line, e.column());
  }
}

// Splits operation / point files into `party <j>` blocks.
struct Block {
  int party;
  std::size_t header_line;
  std::vector<Line> rows;
};

std::vector<Block> party_blocks(std::string_view text, const TensorFormat& format) {
  std::vector<Block> blocks;
  std::set<int> seen;
  for (auto& line : meaningful_lines(text)) {
    const auto toks = split_ws(line.text);
    if (toks.front() == "party") {
      if (toks.size() != 2)
        throw ParseError("expected 'party <j>'", line.number, 1);
      const int j = parse_int(toks[1], line.number, "party");
      if (j < 1 || j > format.parties())
        throw ParseError("party " + toks[1] + " out of range", line.number, 1);
      if (!seen.insert(j).second)
        throw ParseError("duplicate block for party " + toks[1], line.number, 1);
      blocks.push_back({j - 1, line.number, {}});
    } else {
      if (blocks.empty())
        throw ParseError("expected 'party <j>' header", line.number, 1);
      blocks.back().rows.push_back(std::move(line));
    }
  }
  return blocks;
}

Vector<Complex> parse_row(const Line& line, int expected) {
  const auto toks = split_ws(line.text);
  if (static_cast<int>(toks.size()) != expected)
    throw ParseError("expected " + std::to_string(expected) + " scalars, got " +
                         std::to_string(toks.size()),
                     line.number, 1);
  Vector<Complex> v(expected);
  for (int k = 0; k < expected; ++k) v(k) = scalar_at(toks[k], line.number);
  return v;
}

}  // namespace

State parse_state(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("missing 'format:' line", 1, 1);

  const Line& head = lines.front();
  const auto colon = head.text.find(':');
  if (colon == std::string::npos || trim(head.text.substr(0, colon)) != "format")
    throw ParseError("first line must be 'format: d1 ... dn'", head.number, 1);
  std::vector<int> dims;
  for (const auto& tok : split_ws(head.text.substr(colon + 1))) {
    const int d = parse_int(tok, head.number, "dimension");
    if (d < 2) throw ParseError("dimension must be >= 2", head.number, 1);
    dims.push_back(d);
  }
  if (dims.empty()) throw ParseError("format lists no dimensions", head.number, 1);

  State a{TensorFormat(dims)};
  std::set<std::size_t> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto sep = line.text.find(':');
    if (sep == std::string::npos)
      throw ParseError("expected 'i1 ... in : <scalar>'", line.number, 1);
    const auto index_toks = split_ws(line.text.substr(0, sep));
    if (index_toks.size() == 1 && !index_toks[0].empty() &&
        !std::isdigit(static_cast<unsigned char>(index_toks[0][0])))
      throw ParseError("unknown key '" + index_toks[0] + "'", line.number, 1);
    if (index_toks.size() != dims.size())
      throw ParseError("index has " + std::to_string(index_toks.size()) +
                           " entries, format has " + std::to_string(dims.size()),
                       line.number, 1);
    MultiIndex index;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      const int i = parse_int(index_toks[j], line.number, "index");
      if (i < 0 || i >= dims[j])
        throw ParseError("index " + index_toks[j] + " out of range for party " +
                             std::to_string(j + 1),
                         line.number, 1);
      index.push_back(i);
    }
    if (!seen.insert(a.format().linear_index(index)).second)
      throw ParseError("duplicate index line", line.number, 1);
    const std::string value = trim(line.text.substr(sep + 1));
    if (value.empty() || value.find_first_of(" \t") != std::string::npos)
      throw ParseError("expected a single scalar token", line.number, sep + 2);
    a[index] = scalar_at(value, line.number);
  }
  return a;
}

std::string serialize_state(const State& a) {
  std::ostringstream os;
  os << "format:";
  for (int d : a.format().dims()) os << ' ' << d;
  os << '\n';
  MultiIndex index(static_cast<std::size_t>(a.parties()), 0);
  do {
    const Complex& v = a[index];
    if (v.is_zero()) continue;
    for (std::size_t j = 0; j < index.size(); ++j) os << (j ? " " : "") << index[j];
    os << " : " << v << '\n';
  } while (next_index(index, a.format().dims()));
  return os.str();
}

ComplexOperation parse_operation(std::string_view text, const TensorFormat& format) {
  ComplexOperation op = ComplexOperation::identity(format);
  for (const auto& block : party_blocks(text, format)) {
    const int d = format.dim(block.party);
    if (static_cast<int>(block.rows.size()) != d)
      throw ParseError("party " + std::to_string(block.party + 1) + " needs " +
                           std::to_string(d) + " rows",
                       block.header_line, 1);
    ComplexMatrix m(d, d);
    for (int r = 0; r < d; ++r) m.row(r) = parse_row(block.rows[r], d).transpose();
    op.factors[block.party] = std::move(m);
  }
  return op;
}

std::string serialize_operation(const ComplexOperation& op) {
  std::ostringstream os;
  for (std::size_t j = 0; j < op.factors.size(); ++j) {
    os << "party " << j + 1 << '\n';
    const auto& m = op.factors[j];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
      os << '\n';
    }
  }
  return os.str();
}

PartyVectors<Complex> parse_point(std::string_view text, const TensorFormat& format) {
  PartyVectors<Complex> x(static_cast<std::size_t>(format.parties()));
  std::vector<bool> filled(x.size(), false);
  for (const auto& block : party_blocks(text, format)) {
    if (block.rows.size() != 1)
      throw ParseError("point block needs exactly one row", block.header_line, 1);
    x[block.party] = parse_row(block.rows.front(), format.dim(block.party));
    filled[block.party] = true;
  }
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!filled[j])
      throw ParseError("point file lacks party " + std::to_string(j + 1), 0, 1);
  return x;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long SplitMix64::symmetric(long bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(next() % span) - bound;
}

State random_state(const TensorFormat& format, SplitMix64& rng, long bound) {
  if (bound < 1) throw DomainError("random_state bound must be >= 1");
  State a(format);
  do {
    for (Eigen::Index k = 0; k < a.coeffs().size(); ++k) {
      const long re = rng.symmetric(bound);
      const long im = rng.symmetric(bound);
      a.coeffs()(k) = Complex(Rational(re), Rational(im));
    }
  } while (a.is_zero());
  return a;
}

State random_state(const TensorFormat& format, std::uint64_t seed, long bound) {
  SplitMix64 rng(seed);
  return random_state(format, rng, bound);
}

ComplexOperation random_invertible_operation(const TensorFormat& format,
                                             SplitMix64& rng, long bound) {
  ComplexOperation op;
  for (int d : format.dims()) {
    ComplexMatrix m(d, d);
    do {
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
          m(r, c) = Complex(Rational(rng.symmetric(bound)), Rational(rng.symmetric(bound)));
    } while (is_zero(determinant(m)));
    op.factors.push_back(std::move(m));
  }
  return op;
}

}  // namespace slocc
