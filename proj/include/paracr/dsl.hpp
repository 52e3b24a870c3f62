// Line-oriented statement syntax shared by input documents and the Satake
// catalog:
//
//   # comment
//   algebra E6
//   realform su(2,2)
//   satake black {2,3} arrows {(1,6),(3,5)}
//   pi1 {1,4,6}
//   split plus {1,3} minus {2}
//   mode classify
//
// Each non-blank line is one statement: a keyword followed by its argument.

#ifndef PARACR_DSL_HPP_
#define PARACR_DSL_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paracr/error.hpp"
#include "paracr/vertex_set.hpp"

namespace paracr::dsl {

class ParseError : public InputError {
public:
  ParseError(int line, int column, const std::string& msg)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   msg),
        line_(line), column_(column), detail_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

private:
  int line_;
  int column_;
  std::string detail_;
};

struct Statement {
  std::string keyword;
  std::string argument; // trimmed rest of the line
  int line = 0;
  int column = 0;       // 1-based column of the argument
};

std::vector<Statement> split_statements(std::string_view text);

// Cursor over one statement argument, reporting errors at absolute columns.
class Scanner {
public:
  explicit Scanner(const Statement& st) : st_(st) {}

  void skip_blank();
  bool at_end();
  // Consumes `word` (followed by a non-identifier character) if present.
  bool accept_word(std::string_view word);
  void expect_word(std::string_view word);
  void expect_char(char c);
  bool accept_char(char c);
  int read_int();
  // "{1,2,3}" or "{}".
  VertexSet read_set();
  // "{(1,6),(3,5)}" or "{}".
  std::vector<std::pair<int, int>> read_pairs();
  void expect_end();

  int column() const { return st_.column + static_cast<int>(pos_); }
  [[noreturn]] void error(const std::string& msg) const;
  [[noreturn]] void error_at(int column, const std::string& msg) const;

private:
  const Statement& st_;
  std::size_t pos_ = 0;
};

} // namespace paracr::dsl

#endif
