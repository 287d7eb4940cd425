#include "branchnum/matrix_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include "branchnum/errors.hpp"

namespace branchnum {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  Parser(std::string_view text, std::string_view source) : text_(text), source_(source) {}

  MatrixFile parse();

 private:
  [[noreturn]] void fail(const Token& at, const std::string& msg, ErrorCode code = ErrorCode::Parse) const {
    std::ostringstream os;
    os << source_ << ':' << at.line << ':' << at.column << ": " << msg;
    throw Error(code, os.str());
  }
  [[noreturn]] void fail_line(std::size_t line, const std::string& msg) const {
    fail(Token{{}, line, 1}, msg);
  }

  std::uint64_t parse_decimal(const Token& t) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v, 10);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) fail(t, "expected a decimal integer, got '" + std::string(t.text) + "'");
    return v;
  }

  std::uint64_t parse_integer(const Token& t, bool hex_default) const {
    const bool marked_hex = t.text.starts_with("0x") || t.text.starts_with("0X") ||
                            t.text.ends_with("_x") || t.text.ends_with("_X");
    if (!marked_hex && !hex_default) return parse_decimal(t);
    try {
      return parse_hex_element(t.text);
    } catch (const std::invalid_argument&) {
      fail(t, "expected a hex integer, got '" + std::string(t.text) + "'");
    }
  }

  std::vector<std::vector<Token>> tokenize() const;

  std::string_view text_;
  std::string_view source_;
};

std::vector<std::vector<Token>> Parser::tokenize() const {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text_.size()) {
    const std::size_t eol = std::min(text_.find('\n', pos), text_.size());
    std::string_view line = text_.substr(pos, eol - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t begin = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > begin) tokens.push_back(Token{line.substr(begin, i - begin), line_no, begin + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (eol == text_.size()) break;
    pos = eol + 1;
  }
  return lines;
}

MatrixFile Parser::parse() {
  const auto lines = tokenize();
  FieldPtr field;
  std::optional<std::size_t> order;
  bool hex = true;
  std::vector<Element> entries;
  std::size_t rows = 0;
  std::size_t last_line = lines.empty() ? 1 : lines.back().front().line;

  for (const auto& tokens : lines) {
    const Token& head = tokens.front();
    if (head.text == "field") {
      if (field) fail(head, "duplicate 'field' line");
      if (tokens.size() != 4) fail(head, "expected 'field <p> <m> <poly>'");
      const auto p = parse_decimal(tokens[1]);
      const auto m = parse_decimal(tokens[2]);
      if (p > UINT32_MAX || m > 64) fail(tokens[1], "field parameters out of range");
      const auto poly = parse_integer(tokens[3], false);
      try {
        field = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), poly);
      } catch (const Error& e) {
        fail(tokens[3], e.what(), e.code());
      }
    } else if (head.text == "n") {
      if (order) fail(head, "duplicate 'n' line");
      if (tokens.size() != 2) fail(head, "expected 'n <order>'");
      order = parse_decimal(tokens[1]);
      if (*order == 0 || *order > 64) fail(tokens[1], "order must be in [1, 64]");
    } else if (head.text == "format") {
      if (tokens.size() != 2 || (tokens[1].text != "hex" && tokens[1].text != "dec")) {
        fail(head, "expected 'format hex' or 'format dec'");
      }
      if (rows > 0) fail(head, "'format' must precede the matrix rows");
      hex = tokens[1].text == "hex";
    } else {
      if (!field) fail(head, "matrix row before the 'field' line");
      if (!order) fail(head, "matrix row before the 'n' line");
      if (rows == *order) fail(head, "more than n = " + std::to_string(*order) + " rows");
      if (tokens.size() != *order) {
        fail(head, "row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(*order));
      }
      for (const auto& t : tokens) {
        const auto v = parse_integer(t, hex);
        if (!field->contains(v)) {
          fail(t, "entry '" + std::string(t.text) + "' is not an element of " + field->describe(),
               ErrorCode::EntryOutOfField);
        }
        entries.push_back(static_cast<Element>(v));
      }
      ++rows;
    }
  }
  if (!field) fail_line(last_line, "missing 'field' line");
  if (!order) fail_line(last_line, "missing 'n' line");
  if (rows != *order) {
    fail_line(last_line, "found " + std::to_string(rows) + " rows, expected " + std::to_string(*order));
  }
  return MatrixFile{field, FqMatrix(field, *order, std::move(entries))};
}

}  // namespace

MatrixFile parse_matrix_text(std::string_view text, std::string_view source) {
  return Parser(text, source).parse();
}

MatrixFile parse_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str(), path.string());
}

std::string format_matrix_file(const FqMatrix& m) {
  const Field& f = m.field();
  std::ostringstream os;
  os << "field " << f.characteristic() << ' ' << f.degree() << " 0x" << std::uppercase << std::hex
     << f.encoded_poly() << std::dec << '\n';
  os << "n " << m.order() << '\n';
  int width = 1;
  for (std::uint64_t top = f.order() - 1; top >= 16; top >>= 4) ++width;
  width = std::max(width, 2);
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) os << ' ';
      os << std::setw(width) << std::setfill('0') << std::hex << std::uppercase << m(i, j) << "_x";
    }
    os << std::dec << '\n';
  }
  return os.str();
}

}  // namespace branchnum
