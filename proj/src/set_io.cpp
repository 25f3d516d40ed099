#include "freiman/set_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "freiman/errors.hpp"

namespace freiman {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Word parse_hex(const std::string& tok, std::size_t line) {
  std::string digits = tok;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) digits = digits.substr(2);
  if (digits.empty() || digits.size() > 16) throw ParseError(line, "malformed point '" + tok + "'");
  Word v = 0;
  for (char c : digits) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw ParseError(line, "malformed point '" + tok + "'");
    v = (v << 4) | static_cast<Word>(d);
  }
  return v;
}

}  // namespace

PointSet read_set(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  int dim = -1;
  std::vector<Word> pts;
  std::unordered_set<Word> seen;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    if (dim < 0) {
      if (text.rfind("dim", 0) != 0) throw ParseError(line, "expected 'dim <n>' header");
      const std::string num = trim(text.substr(3));
      try {
        std::size_t used = 0;
        dim = std::stoi(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        throw ParseError(line, "malformed dimension '" + num + "'");
      }
      if (dim < 1 || dim > kMaxAmbientDim) throw ParseError(line, "dimension must be in 1..64");
      continue;
    }
    if (text.find_first_of(" \t") != std::string::npos) throw ParseError(line, "one point per line");
    const Word p = parse_hex(text, line);
    if (p & ~dim_mask(dim)) throw ParseError(line, "point " + text + " out of range for dim " + std::to_string(dim));
    if (!seen.insert(p).second) throw ParseError(line, "duplicate point " + text);
    pts.push_back(p);
  }
  if (dim < 0) throw ParseError(line, "missing 'dim <n>' header");
  return PointSet(dim, std::move(pts));
}

PointSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return read_set(in);
}

void write_set(std::ostream& out, const PointSet& a) {
  out << "dim " << a.dim() << '\n';
  for (Word p : a.words()) out << to_hex(p) << '\n';
}

void write_set_file(const std::string& path, const PointSet& a) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  write_set(out, a);
}

}  // namespace freiman
