/*
 * Pattern parsing and rendering.  The grid text format lists the top row
 * first; internally rows are stored bottom-up so that (x, y) coordinates
 * match the usual mathematical orientation.
 */

#include "seasq/pattern.hpp"

#include <sstream>

namespace seasq {

char symbol_to_char(Alphabet a, std::uint8_t sym) {
  if (a == Alphabet::binary) {
    if (sym == 0) return '.';
    if (sym == 1) return '#';
    throw std::invalid_argument("binary symbol out of range");
  }
  if (sym >= y_alphabet_size)
    throw std::invalid_argument("y symbol out of range");
  return y_ascii[sym];
}

std::uint8_t char_to_symbol(Alphabet a, char c) {
  if (a == Alphabet::binary) {
    if (c == '.' || c == '0') return 0;
    if (c == '#' || c == '1') return 1;
    throw std::runtime_error(std::string("unknown binary cell character '") +
                             c + "'");
  }
  for (int i = 0; i < y_alphabet_size; ++i)
    if (y_ascii[i] == c) return static_cast<std::uint8_t>(i);
  throw std::runtime_error(std::string("unknown y cell character '") + c +
                           "'");
}

Pattern parse_pattern(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("pattern: empty input");
  std::istringstream hs(header);
  std::string tag, alpha;
  int w = 0, h = 0;
  if (!(hs >> tag >> w >> h >> alpha) || tag != "pattern")
    throw std::runtime_error("pattern: bad header line \"" + header + "\"");
  if (w <= 0 || h <= 0)
    throw std::runtime_error("pattern: dimensions must be positive");
  Alphabet a;
  if (alpha == "bin")
    a = Alphabet::binary;
  else if (alpha == "y")
    a = Alphabet::y;
  else
    throw std::runtime_error("pattern: unknown alphabet \"" + alpha + "\"");

  Pattern p(w, h, a);
  for (int row = 0; row < h; ++row) {
    std::string line;
    if (!std::getline(in, line))
      throw std::runtime_error("pattern: expected " + std::to_string(h) +
                               " grid lines, got " + std::to_string(row));
    // Trim a trailing carriage return so CRLF files parse too.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != w)
      throw std::runtime_error("pattern: grid line " + std::to_string(row) +
                               " has length " + std::to_string(line.size()) +
                               ", expected " + std::to_string(w));
    const int y = h - 1 - row;
    for (int x = 0; x < w; ++x) p.at(x, y) = char_to_symbol(a, line[x]);
  }
  return p;
}

Pattern parse_pattern(const std::string& text) {
  std::istringstream in(text);
  Pattern p = parse_pattern(in);
  // The string form holds exactly one pattern; trailing non-whitespace is a
  // mistake (the stream form is the one for embedding in larger files).
  char c;
  while (in.get(c)) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n')
      throw std::runtime_error("pattern: trailing content after grid");
  }
  return p;
}

std::string render_pattern(const Pattern& p) {
  std::ostringstream out;
  out << "pattern " << p.width << ' ' << p.height << ' '
      << (p.alphabet == Alphabet::binary ? "bin" : "y") << '\n';
  for (int y = p.height - 1; y >= 0; --y) {
    for (int x = 0; x < p.width; ++x)
      out << symbol_to_char(p.alphabet, p.at(x, y));
    out << '\n';
  }
  return out.str();
}

}  // namespace seasq
