#pragma once

#include <string>
#include <utility>
#include <vector>

namespace d4cr {

enum class Status { Pass, Fail, Error };

std::string to_string(Status s);

struct Report {
  std::string scenario;
  std::string claim;
  Status status = Status::Pass;
  std::vector<std::string> paper_refs;
  std::vector<std::pair<std::string, std::string>> details;  // insertion order is kept
  std::vector<std::string> notes;

  void detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
  }
  const std::string* find_detail(const std::string& key) const;
};

enum class Format { Text, Json };

/// Deterministic rendering.  JSON is an array of objects with the fields
/// scenario, claim, status, paper_refs, details, notes.
std::string emit(const std::vector<Report>& reports, Format format);

}  // namespace d4cr
