#ifndef LOTSIZER_TYPES_HPP
#define LOTSIZER_TYPES_HPP

#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lotsizer {

// Absolute tolerance on quantities (units, days).
inline constexpr double kQuantityTol = 1e-6;
// Relative tolerance on money comparisons.
inline constexpr double kMoneyRelTol = 1e-9;

/// Raised when an instance, schedule or model violates its own invariants.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a schedule cannot be costed (e.g. shortage without shortage cost).
class InfeasibleScheduleError : public std::runtime_error {
 public:
  explicit InfeasibleScheduleError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major matrix of doubles, indexed (row, col) = (period, product).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Shortest decimal string that round-trips to the same double ("52.5", "864").
inline std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace lotsizer

#endif  // LOTSIZER_TYPES_HPP
