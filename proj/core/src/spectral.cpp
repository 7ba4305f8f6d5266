#include "omitlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>

#include "omitlab/error.hpp"

namespace omitlab {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.n; ++r)
    for (std::size_t c = 0; c < a.n; ++c)
      if (r != c) s += a(r, c) * a(r, c);
  return std::sqrt(s);
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.data) s += v * v;
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(DenseMatrix a, const JacobiOptions& options) {
  const std::size_t n = a.n;
  EigenDecomposition out;
  out.eigenvectors = DenseMatrix(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, i) = 1.0;
  DenseMatrix& v = out.eigenvectors;

  const double threshold = options.tolerance * std::max(1.0, frobenius_norm(a));
  double off = off_diagonal_norm(a);
  int sweep = 0;
  while (off >= threshold) {
    if (sweep == options.max_sweeps) {
      throw SolverError("Jacobi did not converge in " + std::to_string(sweep) + " sweeps",
                        off);
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rotation angle from the symmetric Schur decomposition of the 2x2 block.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  DenseMatrix sorted_v(n);
  out.eigenvalues.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    for (std::size_t k = 0; k < n; ++k) sorted_v(k, j) = v(k, order[j]);
  }
  out.eigenvectors = std::move(sorted_v);
  out.sweeps = sweep;
  out.off_norm = off;
  return out;
}

double reconstruction_residual(const DenseMatrix& a, const EigenDecomposition& eig) {
  const std::size_t n = a.n;
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        s += eig.eigenvectors(r, j) * eig.eigenvalues[j] * eig.eigenvectors(c, j);
      worst = std::max(worst, std::abs(a(r, c) - s));
    }
  }
  return worst;
}

SpectrumReport spectrum(const BipartiteGraph& g, const SpectrumOptions& options) {
  const std::size_t m = g.left_count();
  const std::size_t n = g.right_count();
  if (m + n > options.max_dimension) {
    throw InputError("spectrum: " + std::to_string(m + n) +
                     " vertices exceed the dense solver budget of " +
                     std::to_string(options.max_dimension));
  }
  SpectrumReport rep;
  rep.tolerance = options.tolerance;
  if (m + n == 0) return rep;

  // Gram matrix on the smaller side: B^T B (right) or B B^T (left).
  const bool right_side = n <= m;
  const std::size_t dim = right_side ? n : m;
  DenseMatrix gram(dim);
  if (right_side) {
    for (std::size_t l = 0; l < m; ++l) {
      const auto nb = g.neighbors(l);
      for (Vertex r : nb)
        for (Vertex s : nb) gram(r, s) += 1.0;
    }
  } else {
    const auto by_right = g.transpose();
    for (const auto& col : by_right)
      for (Vertex a : col)
        for (Vertex b : col) gram(a, b) += 1.0;
  }

  std::vector<double> sigma;
  if (dim > 0) {
    const EigenDecomposition eig = jacobi_eigen(gram, options.jacobi);
    rep.sweeps = eig.sweeps;
    rep.gram_residual = reconstruction_residual(gram, eig);
    for (double mu : eig.eigenvalues) {
      const double s = std::sqrt(std::max(mu, 0.0));
      if (s >= options.zero_threshold) sigma.push_back(s);
    }
    // A Gram eigenvalue error of delta moves sigma by at most delta / (2 sigma).
    const double delta = std::max(rep.gram_residual, eig.off_norm);
    if (!sigma.empty()) {
      const double smallest = *std::min_element(sigma.begin(), sigma.end());
      if (delta / (2.0 * smallest) > options.tolerance) {
        throw SolverError("spectrum accuracy " + std::to_string(delta / (2.0 * smallest)) +
                              " worse than requested tolerance",
                          delta);
      }
    }
  }
  rep.rank = sigma.size();
  rep.eigenvalues.reserve(m + n);
  for (double s : sigma) {
    rep.eigenvalues.push_back(s);
    rep.eigenvalues.push_back(-s);
  }
  rep.eigenvalues.resize(m + n, 0.0);
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(), std::greater<>());
  rep.lambda2 = rep.eigenvalues.size() > 1 ? rep.eigenvalues[1] : 0.0;
  return rep;
}

std::vector<std::pair<double, std::size_t>> group_eigenvalues(
    const std::vector<double>& sorted_values, double tol) {
  std::vector<std::pair<double, std::size_t>> runs;
  for (double v : sorted_values) {
    if (!runs.empty() && std::abs(v - runs.back().first) <= tol) {
      ++runs.back().second;
    } else {
      runs.emplace_back(v, 1);
    }
  }
  return runs;
}

void write_spectrum_csv(std::ostream& out, const SpectrumReport& report, double group_tol) {
  out << "eigenvalue,multiplicity\n";
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::setprecision(12) << std::fixed;
  for (const auto& [value, mult] : group_eigenvalues(report.eigenvalues, group_tol)) {
    const double shown = std::abs(value) < 5e-13 ? 0.0 : value;
    out << shown << ',' << mult << '\n';
  }
  out.flags(flags);
  out.precision(prec);
}

std::vector<double> polynomial_graph_spectrum(std::uint32_t q, std::size_t l) {
  const double qd = static_cast<double>(q);
  const std::size_t left = static_cast<std::size_t>(std::llround(std::pow(qd, static_cast<double>(l))));
  const std::size_t right = static_cast<std::size_t>(q) * q;
  const std::size_t mid = static_cast<std::size_t>(q) * q - q;
  std::vector<double> out;
  out.reserve(left + right);
  if (l == 1) {
    // q disjoint stars K_{1,q}.
    const double s = std::sqrt(qd);
    out.insert(out.end(), q, s);
    out.insert(out.end(), left + right - 2 * q, 0.0);
    out.insert(out.end(), q, -s);
    return out;
  }
  const double top = std::pow(qd, static_cast<double>(l) / 2.0);
  const double second = std::pow(qd, (static_cast<double>(l) - 1.0) / 2.0);
  out.push_back(top);
  out.insert(out.end(), mid, second);
  out.insert(out.end(), left + right - 2 * mid - 2, 0.0);
  out.insert(out.end(), mid, -second);
  out.push_back(-top);
  return out;
}

}  // namespace omitlab
