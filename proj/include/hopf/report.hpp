#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopf/field.hpp"

namespace hopf {

// One failed instance of an identity: which identity, at which basis indices,
// and the difference between the two sides.
struct Failure {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::vector<std::string> discrepancy;
};

class Report {
 public:
  void fail(std::string axiom, std::vector<std::size_t> indices, const Vector& discrepancy = {});
  void fail(std::string axiom, std::vector<std::size_t> indices, const Scalar& discrepancy);
  void merge(const Report& other, const std::string& prefix = "");
  void note_check(const std::string& name) { checks_.push_back(name); }

  bool ok() const { return failures_.empty(); }
  const std::vector<Failure>& failures() const { return failures_; }
  const std::vector<std::string>& checks() const { return checks_; }
  bool has_failure(const std::string& axiom) const;
  std::size_t count(const std::string& axiom) const;

  std::string summary(std::size_t max_lines = 20) const;
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<Failure> failures_;
  std::vector<std::string> checks_;
};

// Compare two vectors; record a failure with their difference if unequal.
void expect_equal(Report& r, const std::string& axiom, std::vector<std::size_t> indices,
                  const Vector& lhs, const Vector& rhs);
void expect_equal(Report& r, const std::string& axiom, std::vector<std::size_t> indices,
                  const Scalar& lhs, const Scalar& rhs);

}  // namespace hopf
