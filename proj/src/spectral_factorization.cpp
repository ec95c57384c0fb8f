#include "anzai/spectral_factorization.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "anzai/detail/format.hpp"
#include "anzai/detail/parallel.hpp"
#include "anzai/error.hpp"
#include "anzai/torus_fourier.hpp"

namespace anzai {

namespace {

complex horner(const std::vector<complex>& c, complex z) {
  complex acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

complex horner_derivative(const std::vector<complex>& c, complex z) {
  complex acc{};
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

complex polish(const std::vector<complex>& c, complex z) {
  for (int it = 0; it < 4; ++it) {
    const complex p = horner(c, z);
    const complex dp = horner_derivative(c, z);
    if (dp == complex{}) break;
    const complex next = z - p / dp;
    if (!(std::abs(horner(c, next)) < std::abs(p))) break;
    z = next;
  }
  return z;
}

double grid_min_real(const LaurentPoly& q, int grid_size) {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid_size; ++j) m = std::min(m, q.evaluate(z_node(j, grid_size)).real());
  return m;
}

double grid_max_real(const LaurentPoly& q, int grid_size) {
  double m = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid_size; ++j) m = std::max(m, q.evaluate(z_node(j, grid_size)).real());
  return m;
}

}  // namespace

std::vector<complex> polynomial_roots(const std::vector<complex>& coeffs) {
  if (coeffs.empty() || coeffs.back() == complex{}) {
    throw Error(ErrorTag::kInvalidArgument, "polynomial needs a nonzero leading coefficient");
  }
  const auto n = static_cast<Eigen::Index>(coeffs.size() - 1);
  if (n == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    companion(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorTag::kRootCount, "companion eigenvalue iteration did not converge");
  }
  std::vector<complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) roots.push_back(polish(coeffs, solver.eigenvalues()(i)));
  return roots;
}

std::vector<complex> poly_from_roots(const std::vector<complex>& roots, complex c) {
  std::vector<complex> out{c};
  for (const auto& r : roots) {
    out.push_back(0.0);
    for (std::size_t i = out.size() - 1; i > 0; --i) out[i] = out[i - 1] - r * out[i];
    out[0] *= -r;
  }
  return out;
}

double verify_factorization(const LaurentPoly& q, const std::vector<complex>& g, int grid_size) {
  if (grid_size < 1) throw Error(ErrorTag::kInvalidArgument, "grid must be nonempty");
  double d = 0.0;
  for (int j = 0; j < grid_size; ++j) {
    const complex z = z_node(j, grid_size);
    d = std::max(d, std::abs(std::norm(horner(g, z)) - q.evaluate(z)));
  }
  return d;
}

AnalyticFactor fejer_riesz_scalar(const LaurentPoly& q, double tol, int grid_size) {
  if (!(tol > 0.0)) throw Error(ErrorTag::kInvalidArgument, "tolerance must be positive");
  for (const auto& [k, c] : q.coeffs()) {
    if (std::abs(q.coeff(-k) - std::conj(c)) > tol) {
      throw Error(ErrorTag::kInvalidArgument,
                  "coefficients are not Hermitian at k = " + std::to_string(k));
    }
  }
  int K = 0;
  for (const auto& [k, c] : q.coeffs()) {
    if (std::abs(c) > tol) K = std::max(K, std::abs(k));
  }
  const double qmin = grid_min_real(q, grid_size);
  if (!(qmin > tol)) {
    throw Error(ErrorTag::kNotPositive,
                "grid minimum " + detail::format_double(qmin) + " is not above tol");
  }

  AnalyticFactor out;
  out.degree = K;
  if (K == 0) {
    out.coeffs = {std::sqrt(q.coeff(0).real())};
    out.residual = verify_factorization(q, out.coeffs, grid_size);
    return out;
  }

  // z^K q(z) as an ordinary polynomial of degree 2K.
  std::vector<complex> shifted(static_cast<std::size_t>(2 * K + 1));
  for (int j = 0; j <= 2 * K; ++j) shifted[static_cast<std::size_t>(j)] = q.coeff(j - K);
  const auto all_roots = polynomial_roots(shifted);

  complex prod = 1.0;
  for (const auto& r : all_roots) {
    const double m = std::abs(r);
    if (std::abs(m - 1.0) <= tol) {
      throw Error(ErrorTag::kRootOnCircle,
                  "root of modulus " + detail::format_double(m) + " on the unit circle");
    }
    if (m > 1.0) {
      out.roots.push_back(r);
      prod *= r;
    }
  }
  if (static_cast<int>(out.roots.size()) != K) {
    throw Error(ErrorTag::kRootCount, "selected " + std::to_string(out.roots.size()) +
                                          " roots outside the disk, expected " +
                                          std::to_string(K));
  }
  std::sort(out.roots.begin(), out.roots.end(), [](complex a, complex b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : std::arg(a) < std::arg(b);
  });

  const double lead = std::sqrt(std::abs(q.coeff(K) / prod));
  out.coeffs = poly_from_roots(out.roots, lead);
  const complex a0 = out.coeffs.front();
  const complex phase = std::conj(a0) / std::abs(a0);
  for (auto& c : out.coeffs) c *= phase;
  out.coeffs.front() = std::abs(a0);
  out.residual = verify_factorization(q, out.coeffs, grid_size);
  return out;
}

LaurentPoly evaluate_parametric(const BaseSystem& sys, const ParametricTrigPoly& p,
                                const BasePoint& x) {
  LaurentPoly out;
  for (const auto& [k, b] : p.coeffs) out.set(k, evaluate_base(sys, b, x));
  return out;
}

ParametricFactorTable fejer_riesz_parametric(const BaseSystem& sys, const ParametricTrigPoly& p,
                                             const std::vector<BasePoint>& grid, double tol,
                                             int grid_size) {
  ParametricFactorTable table;
  for (const auto& [k, b] : p.coeffs) table.degree = std::max(table.degree, std::abs(k));
  std::vector<LaurentPoly> qs;
  qs.reserve(grid.size());
  for (const auto& x : grid) {
    qs.push_back(evaluate_parametric(sys, p, x));
    table.sup_p = std::max(table.sup_p, grid_max_real(qs.back(), grid_size));
  }

  table.rows.resize(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t i) {
    ParametricRow& row = table.rows[i];
    row.x = grid[i];
    try {
      row.factor = fejer_riesz_scalar(qs[i], tol, grid_size);
    } catch (const Error& e) {
      throw Error(e.tag(), "at x = " + format_point(grid[i]) + ": " + e.what());
    }
    row.stratum = row.factor.degree;
  });

  const double root_sup = std::sqrt(table.sup_p);
  for (auto& row : table.rows) {
    table.max_residual = std::max(table.max_residual, row.factor.residual);
    double amax = 0.0;
    for (const auto& a : row.factor.coeffs) amax = std::max(amax, std::abs(a));
    row.coefficient_bound_ok = amax <= root_sup + 1e-8;
    double gmax = 0.0;
    for (int j = 0; j < grid_size; ++j) {
      gmax = std::max(gmax, std::abs(horner(row.factor.coeffs, z_node(j, grid_size))));
    }
    row.sup_bound_ok = gmax <= (table.degree + 1) * root_sup + 1e-8;
  }
  return table;
}

}  // namespace anzai
