#pragma once

#include <complex>
#include <map>

namespace anzai {

using complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// e^{2 pi i x}
inline complex turn(double x) {
  return std::polar(1.0, kTwoPi * x);
}

/// z^n by repeated squaring; exact for values like +-1, +-i.
inline complex ipow(complex z, long long n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

/// Finitely supported Laurent polynomial sum_k c_k z^k with complex coefficients.
/// Missing keys are zero. Used for C(T) elements, characters chi_k and trigonometric
/// polynomials alike.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, complex> coeffs);

  static LaurentPoly constant(complex c) { return monomial(0, c); }
  static LaurentPoly monomial(int k, complex c = 1.0);

  const std::map<int, complex>& coeffs() const { return coeffs_; }
  complex coeff(int k) const;
  void set(int k, complex c);
  void add_to(int k, complex c);

  bool empty() const { return coeffs_.empty(); }
  int min_power() const;
  int max_power() const;
  /// max |k| over the support; 0 for the zero polynomial.
  int degree() const;

  complex evaluate(complex z) const;

  /// Coefficients of the function conj(p(z)) for |z| = 1: c_k -> conj(c_{-k}).
  LaurentPoly circle_conjugate() const;
  /// Drops coefficients with |c| <= tol.
  LaurentPoly pruned(double tol = 0.0) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(complex s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, complex s) { return a *= s; }
  friend LaurentPoly operator*(complex s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  std::map<int, complex> coeffs_;
};

/// max_k |a_k - b_k|
double coefficient_distance(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace anzai
