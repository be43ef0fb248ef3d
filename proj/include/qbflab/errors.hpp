#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbflab {

// Root of every error the library raises on bad input or exhausted limits.
class QbfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingVariableError : public QbfError {
 public:
  explicit MissingVariableError(std::uint32_t var)
      : QbfError("assignment does not cover variable " + std::to_string(var)), var_(var) {}
  std::uint32_t var() const noexcept { return var_; }

 private:
  std::uint32_t var_;
};

class ArityOverflowError : public QbfError {
 public:
  ArityOverflowError(std::size_t arity, std::size_t cap)
      : QbfError("arity " + std::to_string(arity) + " exceeds cap " + std::to_string(cap)),
        arity_(arity),
        cap_(cap) {}
  std::size_t arity() const noexcept { return arity_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t arity_;
  std::size_t cap_;
};

class OpenFormulaError : public QbfError {
 public:
  explicit OpenFormulaError(std::uint32_t var)
      : QbfError("matrix variable " + std::to_string(var) + " is not quantified"), var_(var) {}
  std::uint32_t var() const noexcept { return var_; }

 private:
  std::uint32_t var_;
};

class PrefixError : public QbfError {
 public:
  using QbfError::QbfError;
};

class CertificateMismatchError : public QbfError {
 public:
  using QbfError::QbfError;
};

// The candidate space is reported as log2 of its size; it is doubly
// exponential in the universal count and overflows any fixed-width integer.
class BudgetExceededError : public QbfError {
 public:
  BudgetExceededError(double log2_candidates, double log2_budget)
      : QbfError("certificate space of 2^" + format_log2(log2_candidates) +
                 " candidates exceeds budget of 2^" + format_log2(log2_budget)),
        log2_candidates_(log2_candidates),
        log2_budget_(log2_budget) {}
  double log2_candidates() const noexcept { return log2_candidates_; }
  double log2_budget() const noexcept { return log2_budget_; }

 private:
  static std::string format_log2(double v) {
    auto s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }
  double log2_candidates_;
  double log2_budget_;
};

class ParseError : public QbfError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message,
             std::vector<std::string> expected = {})
      : QbfError(render(line, column, message, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string render(std::size_t line, std::size_t column, const std::string& message,
                            const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

class CorpusError : public QbfError {
 public:
  using QbfError::QbfError;
};

}  // namespace qbflab
