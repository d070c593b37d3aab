#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "latsum/errors.hpp"

namespace latsum {

using Index = std::int64_t;

/// A strictly increasing tuple j_1 < ... < j_q of positive integers,
/// i.e. a nonempty subset of the positive integers listed in order.
class Chain {
 public:
  explicit Chain(std::vector<Index> entries) : e_(std::move(entries)) { validate(); }
  Chain(std::initializer_list<Index> entries) : e_(entries) { validate(); }

  std::size_t size() const noexcept { return e_.size(); }
  std::span<const Index> entries() const noexcept { return e_; }
  Index operator[](std::size_t k) const { return e_[k]; }
  Index front() const { return e_.front(); }
  Index max() const { return e_.back(); }

  /// The chain with its maximum removed (must have at least two entries).
  Chain without_max() const {
    if (e_.size() < 2) throw ArgumentError("cannot drop the maximum of a singleton chain");
    return Chain(std::vector<Index>(e_.begin(), e_.end() - 1));
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < e_.size(); ++k) s += (k ? "," : "") + std::to_string(e_[k]);
    return s + "]";
  }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  void validate() const {
    if (e_.empty()) throw ArgumentError("chain must be nonempty");
    if (e_.front() < 1) throw ArgumentError("chain entries must be >= 1");
    for (std::size_t k = 1; k < e_.size(); ++k)
      if (e_[k] <= e_[k - 1]) throw ArgumentError("chain must be strictly increasing: " + str());
  }

  std::vector<Index> e_;
};

}  // namespace latsum
