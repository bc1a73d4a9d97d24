#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace coverlat {

/// A finite, indexed ground set. Elements are the indices 0..size()-1;
/// labels only matter for input and display.
class Universe {
 public:
  /// Throws `Errc::ParseError` on an empty or repeated label list.
  explicit Universe(std::vector<std::string> labels);

  /// Universe labelled "1", "2", ..., "n".
  static Universe of_size(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t index) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace coverlat
