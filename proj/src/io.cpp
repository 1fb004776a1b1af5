#include "lagmat/io.hpp"

#include <fstream>
#include <sstream>

namespace lagmat {

const Representation<Rat>& MatrixDocument::rational() const {
  if (!rat)
    throw domain_error("operation requires a rational-field document; "
                       "signs do not exist over GF(2)");
  return *rat;
}

namespace {

// Content lines, comments and blanks stripped.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(begin, end - begin + 1));
  }
  return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

template <class F>
Matrix<F> parse_block(const std::vector<std::string>& lines, std::size_t& at,
                      int n, F (*parse)(const std::string&)) {
  Matrix<F> m(n, n);
  for (int r = 0; r < n; ++r) {
    if (at >= lines.size())
      throw parse_error("matrix document: missing row " + std::to_string(r + 1));
    const auto tokens = split_tokens(lines[at++]);
    if (static_cast<int>(tokens.size()) != n)
      throw parse_error("matrix document: expected " + std::to_string(n) +
                        " entries per row, got " +
                        std::to_string(tokens.size()));
    for (int c = 0; c < n; ++c) m.at(r, c) = parse(tokens[c]);
  }
  return m;
}

template <class F>
void finish(MatrixDocument& doc, const std::vector<std::string>& lines,
            std::size_t at, F (*parse)(const std::string&),
            std::optional<Representation<F>>& slot) {
  Matrix<F> left = parse_block(lines, at, doc.n, parse);
  Matrix<F> right = Matrix<F>::identity(doc.n);
  if (at < lines.size()) {
    if (lines[at] != "right")
      throw parse_error("matrix document: expected 'right', got \"" +
                        lines[at] + "\"");
    ++at;
    right = parse_block(lines, at, doc.n, parse);
  }
  if (at < lines.size())
    throw parse_error("matrix document: trailing content \"" + lines[at] + "\"");
  slot = Representation<F>::make(std::move(left), std::move(right));
}

}  // namespace

MatrixDocument parse_matrix_document(std::istream& in) {
  const auto lines = content_lines(in);
  std::size_t at = 0;
  const auto next = [&](const char* what) -> const std::string& {
    if (at >= lines.size())
      throw parse_error(std::string("matrix document: missing ") + what);
    return lines[at++];
  };

  MatrixDocument doc;
  {
    const auto tokens = split_tokens(next("field line"));
    if (tokens.size() != 2 || tokens[0] != "field")
      throw parse_error("matrix document: first line must be 'field Q|GF2'");
    if (tokens[1] == "Q") doc.field = MatrixDocument::Field::Q;
    else if (tokens[1] == "GF2") doc.field = MatrixDocument::Field::GF2;
    else throw parse_error("matrix document: unknown field \"" + tokens[1] + "\"");
  }
  {
    const auto tokens = split_tokens(next("size line"));
    if (tokens.size() != 2 || tokens[0] != "n")
      throw parse_error("matrix document: second line must be 'n <int>'");
    try {
      doc.n = std::stoi(tokens[1]);
    } catch (const std::exception&) {
      throw parse_error("matrix document: bad ground size \"" + tokens[1] + "\"");
    }
    if (doc.n < 1 || doc.n > kMaxGround)
      throw parse_error("matrix document: ground size out of range 1.." +
                        std::to_string(kMaxGround));
  }
  if (next("'left' marker") != "left")
    throw parse_error("matrix document: expected 'left'");
  if (doc.field == MatrixDocument::Field::Q)
    finish(doc, lines, at, &parse_rational, doc.rat);
  else
    finish(doc, lines, at, &parse_gf2, doc.gf2);
  return doc;
}

MatrixDocument load_matrix_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open matrix file \"" + path + "\"");
  return parse_matrix_document(in);
}

}  // namespace lagmat
