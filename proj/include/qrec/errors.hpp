#pragma once

#include <stdexcept>
#include <string>

namespace qrec {

// Syntax error in a system document or polynomial expression.  Positions are
// 1-based; for errors inside an embedded expression string the column refers
// to that string and the message names the entry.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        raw_(msg),
        line_(line),
        column_(column) {}

  const std::string& raw() const { return raw_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string raw_;
  int line_;
  int column_;
};

// Well-formed input that violates a semantic requirement (bad q, inconsistent
// dimensions, ...).
class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested operation is mathematically impossible for this input
// (rank-deficient system, singular trailing/leading determinant, ...).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qrec
