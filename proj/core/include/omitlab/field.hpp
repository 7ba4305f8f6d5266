#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace omitlab {

bool is_prime(std::uint64_t q) noexcept;

// Polynomial over the prime field GF(q). coeffs[j] is the coefficient of x^j;
// the representation has a fixed length (trailing zeros kept) so that
// enumeration by index is a bijection.
struct FieldPoly {
  std::uint32_t q = 2;
  std::vector<std::uint32_t> coeffs;

  // Validates q prime and all coefficients in [0, q).
  FieldPoly(std::uint32_t modulus, std::vector<std::uint32_t> coefficients);
};

// Horner evaluation at x in [0, q); throws InputError when x >= q.
std::uint32_t poly_eval(const FieldPoly& p, std::uint32_t x);

// Polynomials of degree <= length-1 are enumerated in lexicographic order of
// the coefficient list (c0, c1, ..., c_{length-1}), c0 most significant.
FieldPoly polynomial_from_index(std::uint32_t q, std::size_t length, std::uint64_t index);
std::uint64_t polynomial_index(const FieldPoly& p);

}  // namespace omitlab
