#pragma once

#include <map>
#include <vector>

#include "anzai/base_system.hpp"
#include "anzai/laurent.hpp"

namespace anzai {

inline constexpr int kFactorGridSize = 4096;

/// g(z) = sum_{k=0}^{K} coeffs[k] z^k with every root outside the closed unit disk.
struct AnalyticFactor {
  std::vector<complex> coeffs;
  std::vector<complex> roots;  // the K selected roots, |z_i| > 1
  double residual = 0.0;       // max over the grid of ||g|^2 - q|
  int degree = 0;              // K after trimming
};

/// Roots of sum_k coeffs[k] z^k (ascending order, nonzero leading coefficient) as
/// companion-matrix eigenvalues, polished by Newton steps.
std::vector<complex> polynomial_roots(const std::vector<complex>& coeffs);

/// Expands c * prod (z - r_i) into ascending coefficients.
std::vector<complex> poly_from_roots(const std::vector<complex>& roots, complex c = 1.0);

/// Factor q = |g|^2 on T for a strictly positive trigonometric polynomial q.
/// `tol` governs degree trimming (|b_K| <= tol), the positivity margin and the
/// root-on-circle band [1 - tol, 1 + tol]. The factor is normalized so a_0 > 0.
AnalyticFactor fejer_riesz_scalar(const LaurentPoly& q, double tol = 1e-9,
                                  int grid_size = kFactorGridSize);

/// max over `grid_size` circle nodes of ||g(z)|^2 - q(z)|.
double verify_factorization(const LaurentPoly& q, const std::vector<complex>& g,
                            int grid_size = kFactorGridSize);

/// p(x, z) = sum_k b_k(x) z^k.
struct ParametricTrigPoly {
  std::map<int, BaseFunction> coeffs;
};

LaurentPoly evaluate_parametric(const BaseSystem& sys, const ParametricTrigPoly& p,
                                const BasePoint& x);

struct ParametricRow {
  BasePoint x;
  int stratum = 0;  // effective degree after trimming
  AnalyticFactor factor;
  bool coefficient_bound_ok = false;  // max_l |a_l(x)| <= sqrt(sup p)
  bool sup_bound_ok = false;          // max_z |g(x, z)| <= (K + 1) sqrt(sup p)
};

struct ParametricFactorTable {
  int degree = 0;       // K of the input
  double sup_p = 0.0;   // sup over the grid points and circle nodes
  double max_residual = 0.0;
  std::vector<ParametricRow> rows;  // ordered like the input grid
};

/// Pointwise factorization over a base grid. Scalar errors are rethrown with the
/// offending point in the message.
ParametricFactorTable fejer_riesz_parametric(const BaseSystem& sys, const ParametricTrigPoly& p,
                                             const std::vector<BasePoint>& grid,
                                             double tol = 1e-9,
                                             int grid_size = kFactorGridSize);

}  // namespace anzai
