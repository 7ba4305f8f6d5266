#include "omitlab/bound_table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace omitlab {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

void BoundTable::add(std::size_t n, std::string parameters, std::string quantity,
                     double measured, std::string benchmark, double benchmark_value) {
  BoundRow r;
  r.n = n;
  r.parameters = std::move(parameters);
  r.quantity = std::move(quantity);
  r.measured = measured;
  r.benchmark = std::move(benchmark);
  r.benchmark_value = benchmark_value;
  r.ratio = measured / benchmark_value;
  rows_.push_back(std::move(r));
}

void BoundTable::append(const BoundTable& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

bool BoundTable::ratios_finite_positive() const {
  for (const auto& r : rows_)
    if (!std::isfinite(r.ratio) || !(r.ratio > 0.0)) return false;
  return true;
}

void BoundTable::write_csv(std::ostream& out) const {
  out << "n,parameters,quantity,measured,benchmark,benchmark_value,ratio\n";
  for (const auto& r : rows_) {
    out << r.n << ',' << r.parameters << ',' << r.quantity << ',' << fmt(r.measured) << ','
        << r.benchmark << ',' << fmt(r.benchmark_value) << ',' << fmt(r.ratio) << '\n';
  }
}

std::string BoundTable::to_csv() const {
  std::ostringstream s;
  write_csv(s);
  return s.str();
}

}  // namespace omitlab
