#include "coverlat/universe.hpp"

#include "coverlat/errors.hpp"

namespace coverlat {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(Errc::ParseError, "universe must have at least one element");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(Errc::ParseError, "repeated universe label '" + labels_[i] + "'");
    }
  }
}

Universe Universe::of_size(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Universe(std::move(labels));
}

const std::string& Universe::label(std::size_t index) const {
  if (index >= labels_.size()) {
    throw Error(Errc::UnknownElement, "element index " + std::to_string(index));
  }
  return labels_[index];
}

std::optional<std::size_t> Universe::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace coverlat
