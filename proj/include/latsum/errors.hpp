#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace latsum {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by the zero element of a scalar field.
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error("division by zero: " + what) {}
};

/// A weight or rational function was evaluated where a denominator vanishes.
class PoleError : public Error {
 public:
  PoleError(std::string at, std::string denominator, std::string context = {})
      : Error(compose(at, denominator, context)),
        at_(std::move(at)),
        denominator_(std::move(denominator)),
        context_(std::move(context)) {}

  const std::string& at() const noexcept { return at_; }
  const std::string& denominator() const noexcept { return denominator_; }
  const std::string& context() const noexcept { return context_; }

  PoleError with_context(const std::string& ctx) const {
    return PoleError(at_, denominator_, context_.empty() ? ctx : ctx + ", " + context_);
  }

 private:
  static std::string compose(const std::string& at, const std::string& den, const std::string& ctx) {
    std::string msg = "pole at x = " + at + ": denominator " + den + " vanishes";
    if (!ctx.empty()) msg += " (" + ctx + ")";
    return msg;
  }

  std::string at_;
  std::string denominator_;
  std::string context_;
};

/// Argument outside the domain of an operation (e.g. f2(i, j) with i >= j).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Refusal to run an exponential enumeration past the configured cap.
class LimitError : public Error {
 public:
  LimitError(std::int64_t requested, std::int64_t limit)
      : Error("p = " + std::to_string(requested) + " exceeds the enumeration limit " +
              std::to_string(limit) + "; it would visit 2^" + std::to_string(requested - 1) +
              " chains (raise the limit explicitly to proceed)"),
        requested_(requested),
        limit_(limit) {}

  std::int64_t requested() const noexcept { return requested_; }
  std::int64_t limit() const noexcept { return limit_; }

 private:
  std::int64_t requested_;
  std::int64_t limit_;
};

/// Too few sequence terms for the requested recurrence search.
class InsufficientTerms : public Error {
 public:
  InsufficientTerms(std::size_t have, std::size_t need)
      : Error("need at least " + std::to_string(need) + " terms, got " + std::to_string(have)),
        have_(have),
        need_(need) {}

  std::size_t have() const noexcept { return have_; }
  std::size_t need() const noexcept { return need_; }

 private:
  std::size_t have_;
  std::size_t need_;
};

/// The leading coefficient of a recurrence vanished while stepping it forward.
class SingularLeadingCoefficient : public Error {
 public:
  explicit SingularLeadingCoefficient(std::int64_t n)
      : Error("leading recurrence coefficient vanishes at n = " + std::to_string(n)), n_(n) {}

  std::int64_t n() const noexcept { return n_; }

 private:
  std::int64_t n_;
};

}  // namespace latsum
