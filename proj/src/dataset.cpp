#include "basla/dataset.hpp"

#include <algorithm>
#include <cmath>

namespace basla {

Dataset::Dataset(std::string name, std::vector<double> values, std::string source_note)
    : name_(std::move(name)), values_(std::move(values)), source_note_(std::move(source_note)) {
  if (values_.empty()) throw DataError("dataset '" + name_ + "' is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("dataset '" + name_ + "': non-finite value at index " + std::to_string(i));
    }
  }
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_ = *lo;
  max_ = *hi;
}

double median(std::span<const double> xs) {
  if (xs.empty()) throw DataError("median of empty data");
  std::vector<double> v(xs.begin(), xs.end());
  const auto mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double upper = v[mid];
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

}  // namespace basla
