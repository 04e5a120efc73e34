#ifndef WRONSK_ODE_HPP
#define WRONSK_ODE_HPP

#include <cstddef>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/matrix.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

/// Coefficients of A^(n) = p_1 A^(n-1) + p_2 A^(n-2) + ... + p_n A.
/// `p[k]` holds p_{k+1}, which multiplies A^(n-1-k).
struct OdeCoeffs {
  std::size_t order = 0;
  std::vector<RatFunc> p;
};

/// Recovers the order-n linear ODE satisfied by every component of a generic A.
inline OdeCoeffs ode_coefficients(const VecSection& a) {
  const std::size_t n = a.size();
  const RatMatrix w = wronskian_matrix(a);
  if (det(w).is_zero()) throw NotGenericError("ODE coefficients need a generic section");
  // Component j gives sum_i c_i a_j^(i) = a_j^(n); the system matrix is W(A)^T
  // and c_i = p_{n-i}.
  RatMatrix rhs(n, 1);
  for (std::size_t j = 0; j < n; ++j) rhs(j, 0) = w(n - 1, j).derivative();
  const RatMatrix c = solve(w.transpose(), rhs);
  OdeCoeffs out{n, std::vector<RatFunc>(n)};
  for (std::size_t i = 0; i < n; ++i) out.p[n - 1 - i] = c(i, 0);
  return out;
}

/// Abel's identity w' = p_1 w.
struct AbelCertificate {
  RatFunc p1;
  RatFunc w;
  RatFunc w_prime;
  RatFunc residual;  // w' - p_1 w

  bool passed() const { return residual.is_zero(); }
};

inline AbelCertificate abel_check(const VecSection& a) {
  OdeCoeffs ode = ode_coefficients(a);
  AbelCertificate cert;
  cert.p1 = ode.p[0];
  cert.w = wronskian_det(a);
  cert.w_prime = cert.w.derivative();
  cert.residual = cert.w_prime - cert.p1 * cert.w;
  return cert;
}

/// Liouville's formula Tr(Φ^-1 Φ') = (det Φ)' / det Φ.
struct LiouvilleCertificate {
  RatFunc trace_side;
  RatFunc dlog_det;
  RatFunc residual;

  bool passed() const { return residual.is_zero(); }
};

inline LiouvilleCertificate liouville_check(const RatMatrix& phi) {
  phi.require_square("Liouville check");
  const RatFunc d = det(phi);
  if (d.is_zero()) throw SingularMatrixError("Liouville check needs an invertible matrix");
  LiouvilleCertificate cert;
  cert.trace_side = solve(phi, phi.derivative()).trace();
  cert.dlog_det = d.derivative() / d;
  cert.residual = cert.trace_side - cert.dlog_det;
  return cert;
}

}  // namespace wronsk

#endif  // WRONSK_ODE_HPP
