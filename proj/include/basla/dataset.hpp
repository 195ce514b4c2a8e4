#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace basla {

/// Raised for data that cannot support a fit: empty, non-finite or with no
/// spread.
class DataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered, finite, nonempty observations.
class Dataset {
 public:
  Dataset(std::string name, std::vector<double> values, std::string source_note = {});

  const std::string& name() const noexcept { return name_; }
  const std::string& source_note() const noexcept { return source_note_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  double range() const noexcept { return max_ - min_; }

 private:
  std::string name_;
  std::vector<double> values_;
  std::string source_note_;
  double min_;
  double max_;
};

double median(std::span<const double> xs);

}  // namespace basla
