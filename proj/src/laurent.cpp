#include "anzai/laurent.hpp"

#include <algorithm>
#include <cstdlib>

namespace anzai {

LaurentPoly::LaurentPoly(std::map<int, complex> coeffs) : coeffs_(std::move(coeffs)) {}

LaurentPoly LaurentPoly::monomial(int k, complex c) {
  LaurentPoly p;
  p.coeffs_[k] = c;
  return p;
}

complex LaurentPoly::coeff(int k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? complex{} : it->second;
}

void LaurentPoly::set(int k, complex c) { coeffs_[k] = c; }

void LaurentPoly::add_to(int k, complex c) { coeffs_[k] += c; }

int LaurentPoly::min_power() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

int LaurentPoly::max_power() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

int LaurentPoly::degree() const {
  if (coeffs_.empty()) return 0;
  return std::max(std::abs(min_power()), std::abs(max_power()));
}

complex LaurentPoly::evaluate(complex z) const {
  if (coeffs_.empty()) return {};
  // Horner in z over [min, max] then shift by z^min.
  const int lo = min_power();
  const int hi = max_power();
  complex acc{};
  for (int k = hi; k >= lo; --k) acc = acc * z + coeff(k);
  return acc * ipow(z, lo);
}

LaurentPoly LaurentPoly::circle_conjugate() const {
  LaurentPoly out;
  for (const auto& [k, c] : coeffs_) out.coeffs_[-k] = std::conj(c);
  return out;
}

LaurentPoly LaurentPoly::pruned(double tol) const {
  LaurentPoly out;
  for (const auto& [k, c] : coeffs_) {
    if (std::abs(c) > tol) out.coeffs_[k] = c;
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.coeffs_) coeffs_[k] += c;
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.coeffs_) coeffs_[k] -= c;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(complex s) {
  for (auto& [k, c] : coeffs_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [i, x] : a.coeffs_) {
    for (const auto& [j, y] : b.coeffs_) out.coeffs_[i + j] += x * y;
  }
  return out;
}

double coefficient_distance(const LaurentPoly& a, const LaurentPoly& b) {
  double d = 0.0;
  for (const auto& [k, c] : a.coeffs()) d = std::max(d, std::abs(c - b.coeff(k)));
  for (const auto& [k, c] : b.coeffs()) d = std::max(d, std::abs(c - a.coeff(k)));
  return d;
}

}  // namespace anzai
