#include "paracr/dsl.hpp"

#include <cctype>

namespace paracr::dsl {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t i = 0;
    while (i < line.size() && is_blank(line[i]))
      ++i;
    if (i < line.size()) {
      std::size_t k = i;
      while (k < line.size() && is_ident(line[k]))
        ++k;
      if (k == i)
        throw ParseError(line_no, static_cast<int>(i) + 1, "expected a keyword");
      Statement st;
      st.keyword.assign(line.substr(i, k - i));
      st.line = line_no;
      while (k < line.size() && is_blank(line[k]))
        ++k;
      st.column = static_cast<int>(k) + 1;
      std::string_view rest = line.substr(k);
      while (!rest.empty() && is_blank(rest.back()))
        rest.remove_suffix(1);
      st.argument.assign(rest);
      out.push_back(std::move(st));
    }
    if (end == text.size())
      break;
    start = end + 1;
  }
  return out;
}

void Scanner::skip_blank() {
  while (pos_ < st_.argument.size() && is_blank(st_.argument[pos_]))
    ++pos_;
}

bool Scanner::at_end() {
  skip_blank();
  return pos_ >= st_.argument.size();
}

bool Scanner::accept_word(std::string_view word) {
  skip_blank();
  std::string_view rest = std::string_view(st_.argument).substr(pos_);
  if (rest.substr(0, word.size()) != word)
    return false;
  if (rest.size() > word.size() && is_ident(rest[word.size()]))
    return false;
  pos_ += word.size();
  return true;
}

void Scanner::expect_word(std::string_view word) {
  if (!accept_word(word))
    error("expected '" + std::string(word) + "'");
}

bool Scanner::accept_char(char c) {
  skip_blank();
  if (pos_ < st_.argument.size() && st_.argument[pos_] == c) {
    ++pos_;
    return true;
  }
  return false;
}

void Scanner::expect_char(char c) {
  if (!accept_char(c))
    error(std::string("expected '") + c + "'");
}

int Scanner::read_int() {
  skip_blank();
  std::size_t begin = pos_;
  while (pos_ < st_.argument.size() && std::isdigit(static_cast<unsigned char>(st_.argument[pos_])))
    ++pos_;
  if (begin == pos_)
    error("expected a vertex index");
  if (pos_ - begin > 4)
    error_at(st_.column + static_cast<int>(begin), "vertex index too large");
  return std::stoi(st_.argument.substr(begin, pos_ - begin));
}

VertexSet Scanner::read_set() {
  expect_char('{');
  VertexSet s;
  if (accept_char('}'))
    return s;
  do {
    skip_blank();
    int col = column();
    int v = read_int();
    if (v < 1 || v > VertexSet::kMaxVertex)
      error_at(col, "vertex index " + std::to_string(v) + " out of range");
    if (s.contains(v))
      error_at(col, "vertex " + std::to_string(v) + " listed twice");
    s.insert(v);
  } while (accept_char(','));
  expect_char('}');
  return s;
}

std::vector<std::pair<int, int>> Scanner::read_pairs() {
  expect_char('{');
  std::vector<std::pair<int, int>> out;
  if (accept_char('}'))
    return out;
  do {
    expect_char('(');
    int a = read_int();
    expect_char(',');
    int b = read_int();
    expect_char(')');
    out.emplace_back(a, b);
  } while (accept_char(','));
  expect_char('}');
  return out;
}

void Scanner::expect_end() {
  if (!at_end())
    error("unexpected trailing text");
}

void Scanner::error(const std::string& msg) const { error_at(column(), msg); }

void Scanner::error_at(int column, const std::string& msg) const {
  throw ParseError(st_.line, column, msg);
}

} // namespace paracr::dsl
