#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "omitlab/bipartite.hpp"

namespace omitlab {

// Dense row-major square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t size) : n(size), data(size * size, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

struct JacobiOptions {
  int max_sweeps = 100;
  // Converged once the off-diagonal Frobenius norm drops below
  // tolerance * max(1, ||A||_F).
  double tolerance = 1e-12;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  DenseMatrix eigenvectors;         // column j belongs to eigenvalues[j]
  int sweeps = 0;
  double off_norm = 0.0;
};

// Cyclic Jacobi eigensolver for a symmetric matrix. Throws SolverError with
// the off-diagonal residual when max_sweeps is exhausted.
EigenDecomposition jacobi_eigen(DenseMatrix a, const JacobiOptions& options = {});

// max |A - Q diag(w) Q^T| over all entries.
double reconstruction_residual(const DenseMatrix& a, const EigenDecomposition& eig);

struct SpectrumOptions {
  double tolerance = 1e-9;
  std::size_t max_dimension = 2000;  // budget on left + right
  double zero_threshold = 1e-7;      // singular values below this count as zero
  JacobiOptions jacobi;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;  // full adjacency spectrum, descending
  double lambda2 = 0.0;             // second largest eigenvalue
  double tolerance = 0.0;
  std::size_t rank = 0;             // rank of the biadjacency matrix
  double gram_residual = 0.0;
  int sweeps = 0;
};

// Spectrum of the (m + n) x (m + n) adjacency matrix of a bipartite graph,
// assembled as {+-sigma_i} plus zeros from the singular values of the
// biadjacency matrix (Jacobi on the smaller Gram matrix).
SpectrumReport spectrum(const BipartiteGraph& g, const SpectrumOptions& options = {});

// Groups a sorted spectrum into (value, multiplicity) runs; consecutive values
// within `tol` of the run's first value are merged.
std::vector<std::pair<double, std::size_t>> group_eigenvalues(
    const std::vector<double>& sorted_values, double tol);

// CSV "eigenvalue,multiplicity", descending.
void write_spectrum_csv(std::ostream& out, const SpectrumReport& report,
                        double group_tol = 1e-6);

// The closed-form spectrum of G(q^l, q^2, 2, l), descending:
// +-q^{l/2} once, +-q^{(l-1)/2} with multiplicity q^2 - q each, zeros for the
// remaining q^l + q^2 - 2(q^2 - q) - 2 positions (l >= 2). For l = 1 the
// graph is q disjoint stars K_{1,q}: +-sqrt(q) with multiplicity q each.
std::vector<double> polynomial_graph_spectrum(std::uint32_t q, std::size_t l);

}  // namespace omitlab
