// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/linmap.hpp"
#include "hopfcat/tensor_index.hpp"

namespace hopfcat {

enum class Status { pass, fail, note };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::note: return "note";
  }
  return "?";
}

/// One checked axiom instance. `witness` is the multi-index of the first
/// failing basis element of the domain; `failures` counts all failing ones.
struct Finding {
  std::string axiom;
  std::vector<std::string> objects;
  Status status = Status::pass;
  std::optional<std::vector<std::size_t>> witness;
  std::string detail;
  std::size_t failures = 0;
};

class Report {
 public:
  const std::vector<Finding>& items() const noexcept { return items_; }
  bool passed() const {
    for (const auto& f : items_) {
      if (f.status == Status::fail) return false;
    }
    return true;
  }

  void add(Finding f) { items_.push_back(std::move(f)); }

  void pass(std::string axiom, std::vector<std::string> objects, std::string detail = {}) {
    items_.push_back({std::move(axiom), std::move(objects), Status::pass, std::nullopt,
                      std::move(detail), 0});
  }

  void fail(std::string axiom, std::vector<std::string> objects, std::string detail,
            std::optional<std::vector<std::size_t>> witness = std::nullopt) {
    items_.push_back({std::move(axiom), std::move(objects), Status::fail, std::move(witness),
                      std::move(detail), 1});
  }

  void note(std::string axiom, std::vector<std::string> objects, std::string detail) {
    items_.push_back({std::move(axiom), std::move(objects), Status::note, std::nullopt,
                      std::move(detail), 0});
  }

  /// Records pass/fail of a boolean condition.
  void expect(bool ok, std::string axiom, std::vector<std::string> objects, std::string detail) {
    if (ok) {
      pass(std::move(axiom), std::move(objects), std::move(detail));
    } else {
      fail(std::move(axiom), std::move(objects), std::move(detail));
    }
  }

  /// Compares two maps on every basis element of the domain, whose tensor
  /// factors have dimensions `domain_factors`.
  bool check_equal(const std::string& axiom, std::vector<std::string> objects, const LinMap& lhs,
                   const LinMap& rhs, std::vector<std::size_t> domain_factors);

  void merge(const Report& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  /// Number of failed findings.
  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& f : items_) n += f.status == Status::fail ? 1 : 0;
    return n;
  }

  const Finding* first_failure() const {
    for (const auto& f : items_) {
      if (f.status == Status::fail) return &f;
    }
    return nullptr;
  }

  /// Findings whose axiom id matches exactly.
  std::vector<const Finding*> find(const std::string& axiom) const {
    std::vector<const Finding*> out;
    for (const auto& f : items_) {
      if (f.axiom == axiom) out.push_back(&f);
    }
    return out;
  }

 private:
  std::vector<Finding> items_;
};

/// Accumulates basis-by-basis comparisons for one (axiom, objects) instance.
class Check {
 public:
  Check(std::string axiom, std::vector<std::string> objects, std::vector<std::size_t> factors)
      : index_(std::move(factors)) {
    finding_.axiom = std::move(axiom);
    finding_.objects = std::move(objects);
  }

  /// Compares the images of the basis element with flat index `flat`.
  bool compare(std::size_t flat, const Vec& lhs, const Vec& rhs) {
    if (lhs.size() != rhs.size()) throw MalformedData(finding_.axiom + ": sides differ in length");
    std::string residual;
    for (std::size_t r = 0; r < lhs.size(); ++r) {
      if (lhs[r] == rhs[r]) continue;
      if (!residual.empty()) residual += ", ";
      residual += "[" + std::to_string(r) + "]=" + (lhs[r] - rhs[r]).to_string();
    }
    if (residual.empty()) return true;
    mismatch(flat, "residual " + residual);
    return false;
  }

  /// Records a failure at `flat` with a free-form description.
  void mismatch(std::size_t flat, std::string detail) {
    if (finding_.failures++ == 0) {
      finding_.status = Status::fail;
      finding_.witness = index_.unflatten(flat);
      finding_.detail = std::move(detail);
    }
  }

  bool ok() const noexcept { return finding_.failures == 0; }

  /// Detail text kept if the check passes.
  void describe(std::string detail) {
    if (ok()) finding_.detail = std::move(detail);
  }

  void finish(Report& r) { r.add(std::move(finding_)); }

 private:
  TensorIndex index_;
  Finding finding_;
};

inline bool Report::check_equal(const std::string& axiom, std::vector<std::string> objects,
                                const LinMap& lhs, const LinMap& rhs,
                                std::vector<std::size_t> domain_factors) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw MalformedData(axiom + ": sides have shapes " + lhs.shape() + " and " + rhs.shape());
  }
  if (TensorIndex(domain_factors).size() != lhs.cols()) {
    throw MalformedData(axiom + ": domain factors do not match");
  }
  Check check(axiom, std::move(objects), std::move(domain_factors));
  for (std::size_t c = 0; c < lhs.cols(); ++c) check.compare(c, lhs.col(c), rhs.col(c));
  const bool ok = check.ok();
  check.finish(*this);
  return ok;
}

}  // namespace hopfcat
