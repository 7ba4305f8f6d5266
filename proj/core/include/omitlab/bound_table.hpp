#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace omitlab {

struct BoundRow {
  std::size_t n = 0;
  std::string parameters;  // "k=3;d=2" style, keys in grid order
  std::string quantity;    // what was measured
  double measured = 0.0;
  std::string benchmark;   // name of the comparison curve
  double benchmark_value = 0.0;
  double ratio = 0.0;      // measured / benchmark_value
};

// Measured quantities next to asymptotic comparison curves. Ratios are trend
// indicators only; constants in the curves are unspecified.
class BoundTable {
 public:
  void add(std::size_t n, std::string parameters, std::string quantity, double measured,
           std::string benchmark, double benchmark_value);
  void append(const BoundTable& other);

  const std::vector<BoundRow>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  bool ratios_finite_positive() const;

  // Header "n,parameters,quantity,measured,benchmark,benchmark_value,ratio";
  // numbers printed with %.10g so output is byte-stable.
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;

 private:
  std::vector<BoundRow> rows_;
};

}  // namespace omitlab
