// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hopfcat {

/// Row-major multi-index over a tensor product of spaces; the leftmost factor
/// varies slowest. Every structure map in the library uses this flattening.
class TensorIndex {
 public:
  TensorIndex() = default;
  explicit TensorIndex(std::vector<std::size_t> factor_dims) : dims_(std::move(factor_dims)) {}

  const std::vector<std::size_t>& factor_dims() const noexcept { return dims_; }
  std::size_t rank() const noexcept { return dims_.size(); }

  std::size_t size() const noexcept {
    std::size_t n = 1;
    for (auto d : dims_) n *= d;
    return n;
  }

  std::size_t flatten(std::span<const std::size_t> multi) const {
    if (multi.size() != dims_.size()) throw std::out_of_range("multi-index has wrong arity");
    std::size_t flat = 0;
    for (std::size_t f = 0; f < dims_.size(); ++f) {
      if (multi[f] >= dims_[f]) throw std::out_of_range("multi-index component out of range");
      flat = flat * dims_[f] + multi[f];
    }
    return flat;
  }

  std::size_t flatten(std::initializer_list<std::size_t> multi) const {
    return flatten(std::span<const std::size_t>(multi.begin(), multi.size()));
  }

  std::vector<std::size_t> unflatten(std::size_t flat) const {
    if (flat >= size()) throw std::out_of_range("flat index out of range");
    std::vector<std::size_t> multi(dims_.size());
    for (std::size_t f = dims_.size(); f-- > 0;) {
      multi[f] = flat % dims_[f];
      flat /= dims_[f];
    }
    return multi;
  }

 private:
  std::vector<std::size_t> dims_;
};

}  // namespace hopfcat
