#include "hopf/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

void Report::fail(std::string axiom, std::vector<std::size_t> indices, const Vector& discrepancy) {
  failures_.push_back({std::move(axiom), std::move(indices), to_strings(discrepancy)});
}

void Report::fail(std::string axiom, std::vector<std::size_t> indices, const Scalar& discrepancy) {
  failures_.push_back({std::move(axiom), std::move(indices), {discrepancy.to_string()}});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& f : other.failures_) {
    Failure g = f;
    if (!prefix.empty()) g.axiom = prefix + ": " + g.axiom;
    failures_.push_back(std::move(g));
  }
  for (const auto& c : other.checks_) checks_.push_back(prefix.empty() ? c : prefix + ": " + c);
}

bool Report::has_failure(const std::string& axiom) const { return count(axiom) > 0; }

std::size_t Report::count(const std::string& axiom) const {
  return static_cast<std::size_t>(std::count_if(failures_.begin(), failures_.end(), [&](const Failure& f) {
    return f.axiom == axiom || (f.axiom.size() > axiom.size() &&
                                f.axiom.compare(f.axiom.size() - axiom.size(), axiom.size(), axiom) == 0 &&
                                f.axiom[f.axiom.size() - axiom.size() - 1] == ' ');
  }));
}

std::string Report::summary(std::size_t max_lines) const {
  std::ostringstream os;
  if (ok()) {
    os << "ok (" << checks_.size() << " checks)";
    return os.str();
  }
  os << failures_.size() << " failure(s)";
  std::size_t shown = 0;
  for (const auto& f : failures_) {
    if (shown++ == max_lines) {
      os << "\n  ...";
      break;
    }
    os << "\n  " << f.axiom << " at (";
    for (std::size_t i = 0; i < f.indices.size(); ++i) os << (i ? "," : "") << f.indices[i];
    os << ")";
    if (!f.discrepancy.empty()) {
      os << " diff [";
      for (std::size_t i = 0; i < f.discrepancy.size(); ++i) os << (i ? " " : "") << f.discrepancy[i];
      os << "]";
    }
  }
  return os.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  j["checks"] = checks_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : failures_) {
    nlohmann::ordered_json e;
    e["axiom"] = f.axiom;
    e["indices"] = f.indices;
    e["discrepancy"] = f.discrepancy;
    arr.push_back(std::move(e));
  }
  j["failures"] = std::move(arr);
  return j;
}

void expect_equal(Report& r, const std::string& axiom, std::vector<std::size_t> indices,
                  const Vector& lhs, const Vector& rhs) {
  if (lhs != rhs) r.fail(axiom, std::move(indices), sub(lhs, rhs));
}

void expect_equal(Report& r, const std::string& axiom, std::vector<std::size_t> indices,
                  const Scalar& lhs, const Scalar& rhs) {
  if (lhs != rhs) r.fail(axiom, std::move(indices), lhs - rhs);
}

}  // namespace hopf
