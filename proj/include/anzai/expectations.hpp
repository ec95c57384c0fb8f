#pragma once

#include <functional>
#include <string>
#include <vector>

#include "anzai/cohomology.hpp"
#include "anzai/laurent.hpp"
#include "anzai/skew_product.hpp"

namespace anzai {

/// Positive semidefinite k x k matrix with unit trace, stored row-major.
class ExpectationMatrix {
 public:
  /// Validates size, PSD (min eigenvalue >= -1e-10) and trace 1 (to 1e-12).
  static ExpectationMatrix make(int k, std::vector<complex> entries);
  static ExpectationMatrix scalar_identity(int k);  // I / k

  int k() const { return k_; }
  complex operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * k_ + j)]; }
  const std::vector<complex>& entries() const { return entries_; }

 private:
  ExpectationMatrix(int k, std::vector<complex> entries) : k_(k), entries_(std::move(entries)) {}
  int k_;
  std::vector<complex> entries_;
};

/// Sum along the l-th superdiagonal, 0 <= l < k.
complex l_trace(const ExpectationMatrix& A, int l);
/// Sum along the l-th subdiagonal, 0 <= l < k (the conjugate of l_trace for Hermitian A).
complex sub_trace(const ExpectationMatrix& A, int l);

/// Square matrix over Laurent polynomials in z.
class PolyMatrix {
 public:
  explicit PolyMatrix(int k) : k_(k), entries_(static_cast<std::size_t>(k * k)) {}
  static PolyMatrix identity(int k);

  int k() const { return k_; }
  LaurentPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i * k_ + j)]; }
  const LaurentPoly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * k_ + j)]; }

  /// Transpose with entrywise circle conjugation (z* = z^{-1}).
  PolyMatrix adjoint() const;
  PolyMatrix pruned() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  int k_;
  std::vector<LaurentPoly> entries_;
};

/// U_k: ones on the subdiagonal and z in the top-right corner; U_1 = [z].
PolyMatrix shift_unitary(int k);

/// p(U_k), using U_k^{-1} = U_k^* for negative powers.
PolyMatrix embed_pi_k(int k, const LaurentPoly& p);

/// Closed form of F_A on C(T): chi_{mk} is fixed and chi_{mk + l'} (0 < l' < k) maps to
/// tr_{l'}(A) chi_{mk} + sub_{k-l'}(A) chi_{(m+1)k}.
LaurentPoly f_a(const ExpectationMatrix& A, const LaurentPoly& p);

/// The same map through matrices: Tr(A p(U_k)) with z replaced by z^k.
LaurentPoly f_a_matrix(const ExpectationMatrix& A, const LaurentPoly& p);

/// sum_l c_l (u(x) z^{n_o})^l.
struct A1Element {
  LaurentPoly coeffs;
  int n_o = 0;
  UnimodularFunction u;
};

/// sum_l c_l (v(x) z^{m_o})^l, an element of the fixed-point algebra. With m_o = 0 the
/// element is the scalar coeffs[0].
struct FixedPointElement {
  LaurentPoly coeffs;
  int m_o = 0;
  UnimodularFunction v;
  std::vector<std::string> notes;
};

complex evaluate_element(const BaseSystem& sys, const A1Element& a, const BasePoint& x, complex z);
complex evaluate_element(const BaseSystem& sys, const FixedPointElement& e, const BasePoint& x,
                         complex z);

/// Exact observable expansion; NOT_REPRESENTABLE when the generator has no finite
/// base representation.
TorusObservable to_observable(const BaseSystem& sys, const A1Element& a);
TorusObservable to_observable(const BaseSystem& sys, const FixedPointElement& e);

/// Coefficient l is the integral of h_{l n_o} u^{-l} against mu_o. Requires n_o >= 1.
A1Element t_map(const SkewSystem& sys, const CohomologyReport& report, const TorusObservable& h);

/// chi_{k_o l} -> (v z^{m_o})^l. Requires k_o >= 1 and support in k_o Z.
FixedPointElement sigma_expand(const CohomologyReport& report, const LaurentPoly& b);

/// sigma o F_A o rho_1 o T. Requires m_o >= 1 and A of size k_o.
FixedPointElement e_a(const SkewSystem& sys, const CohomologyReport& report,
                      const ExpectationMatrix& A, const TorusObservable& h);

/// E_{I/k_o} when m_o >= 1, otherwise the scalar integral against mu_o x Haar (with a
/// note when n_o >= 1, where invariant states are not unique).
FixedPointElement canonical_expectation(const SkewSystem& sys, const CohomologyReport& report,
                                        const TorusObservable& h);

FixedPointElement add(const FixedPointElement& a, const FixedPointElement& b);
FixedPointElement scale(const FixedPointElement& a, complex s);
/// max_l |a_l - b_l| over generator powers.
double element_distance(const FixedPointElement& a, const FixedPointElement& b);

/// tr_l(A) == tr_l(B) for l in [1, k-1] to 1e-12.
bool expectations_equal(const ExpectationMatrix& A, const ExpectationMatrix& B);

/// Slotwise max |E_can(E_{m_o}(h)) - E_can(h)|. Requires m_o >= 1.
double check_absorption(const SkewSystem& sys, const CohomologyReport& report,
                        const TorusObservable& h);

struct DominationResult {
  double min_value = 0.0;
  bool passed = false;
};

/// min over the grid of Re(m_o E_can(h) - E_A(h)); passed when >= -tol. h must be
/// nonnegative on the grid (to tol), else NOT_POSITIVE.
DominationResult check_domination(const SkewSystem& sys, const CohomologyReport& report,
                                  const ExpectationMatrix& A, const TorusObservable& h,
                                  const std::vector<BasePoint>& xs, int z_size, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Conditional-expectation axioms

using ObservableMap = std::function<TorusObservable(const TorusObservable&)>;

/// An expectation under test together with the group actions it must be invariant
/// under and sample elements of its range for the module property.
struct ExpectationUnderTest {
  std::string name;
  ObservableMap apply;
  std::vector<ObservableMap> actions;
  std::vector<TorusObservable> range_samples;
};

struct AxiomSamples {
  std::vector<TorusObservable> h;  // idempotence, module, invariance inputs
  std::vector<TorusObservable> p;  // positivity inputs, tested as |p|^2
  std::vector<BasePoint> xs;
  int z_size = 64;
};

struct AxiomCheck {
  std::string axiom;
  double worst = 0.0;
  double tol = 0.0;
  bool passed = false;
};

struct AxiomReport {
  std::string name;
  std::vector<AxiomCheck> checks;

  bool passed() const;
  const AxiomCheck* find(const std::string& axiom) const;
};

/// Slotwise checks to `exact_tol`: idempotence, unitality, module, invariance and
/// invariance of the range. Positivity is the grid minimum of min(Re v, -|Im v|) for
/// v = E(|p|^2), against -positivity_tol.
AxiomReport ce_axiom_suite(const BaseSystem& sys, const ExpectationUnderTest& E,
                           const AxiomSamples& samples, double exact_tol = 1e-12,
                           double positivity_tol = 1e-9);

/// E_A with koopman invariance and powers of the fixed-point generator as range samples.
ExpectationUnderTest e_a_under_test(const SkewSystem& sys, const CohomologyReport& report,
                                    const ExpectationMatrix& A);
ExpectationUnderTest canonical_under_test(const SkewSystem& sys, const CohomologyReport& report);
/// (m_o E_can - E_A) / (m_o - 1). Requires m_o >= 2.
ExpectationUnderTest convex_complement_under_test(const SkewSystem& sys,
                                                  const CohomologyReport& report,
                                                  const ExpectationMatrix& A);
/// E_n with invariance under the dual rotations by l/n of a turn.
ExpectationUnderTest periodic_under_test(const BaseSystem& sys, int n);

}  // namespace anzai
