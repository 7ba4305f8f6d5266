#include "omitlab/field.hpp"

#include <string>

#include "omitlab/error.hpp"

namespace omitlab {

bool is_prime(std::uint64_t q) noexcept {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

FieldPoly::FieldPoly(std::uint32_t modulus, std::vector<std::uint32_t> coefficients)
    : q(modulus), coeffs(std::move(coefficients)) {
  if (!is_prime(q)) {
    throw UnsupportedModulus("GF(q) arithmetic needs a prime modulus, got " +
                             std::to_string(q));
  }
  for (auto c : coeffs)
    if (c >= q) throw InputError("polynomial coefficient not reduced mod q");
}

std::uint32_t poly_eval(const FieldPoly& p, std::uint32_t x) {
  if (x >= p.q) throw InputError("evaluation point outside GF(q)");
  std::uint64_t acc = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = (acc * x + *it) % p.q;
  }
  return static_cast<std::uint32_t>(acc);
}

FieldPoly polynomial_from_index(std::uint32_t q, std::size_t length, std::uint64_t index) {
  std::vector<std::uint32_t> c(length, 0);
  for (std::size_t j = length; j-- > 0;) {
    c[j] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  if (index != 0) throw InputError("polynomial index out of range");
  return FieldPoly(q, std::move(c));
}

std::uint64_t polynomial_index(const FieldPoly& p) {
  std::uint64_t idx = 0;
  for (auto c : p.coeffs) idx = idx * p.q + c;
  return idx;
}

}  // namespace omitlab
