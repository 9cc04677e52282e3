#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidbench {

using Rat = mpq_class;

/// Error thrown by scalar arithmetic (modulus mismatch, division by zero, ...).
struct cyc_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree,
/// computed by iterated exact division of x^n - 1 by Phi_d for d | n, d < n.
const std::vector<mpz_class>& cyclotomic_poly(unsigned n);

/// An element of Q(zeta_n), stored in the power basis 1, z, ..., z^{phi(n)-1}
/// of Q[x]/(Phi_n). Values are immutable in spirit: all operations return
/// fresh objects and the representation is always fully reduced, so equality
/// of coordinate vectors is equality in the field.
class Cyc {
 public:
  Cyc() : n_(1), coeffs_(1, Rat(0)) {}
  Cyc(unsigned n, std::vector<Rat> coeffs);  // reduces mod Phi_n

  static Cyc zero(unsigned n);
  static Cyc one(unsigned n);
  static Cyc from_rat(unsigned n, const Rat& r);
  /// The canonical primitive n-th root zeta_n (1 for n = 1).
  static Cyc root(unsigned n);
  /// zeta_n^k, k may be negative.
  static Cyc root_pow(unsigned n, long k);

  unsigned order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat rational_part() const { return coeffs_[0]; }

  Cyc operator-() const;
  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(const Cyc& a, const Cyc& b);
  Cyc inv() const;
  Cyc pow(long k) const;

  friend bool operator==(const Cyc& a, const Cyc& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Report form: polynomial in z with rational coefficients, e.g. "1/2 + 3*z^2".
  std::string str() const;
  /// Inverse of str().
  static Cyc parse(unsigned n, const std::string& text);

 private:
  static void check_same_order(const Cyc& a, const Cyc& b);

  unsigned n_;
  std::vector<Rat> coeffs_;  // length phi(n)
};

/// Gaussian binomial coefficient binom(m,k)_q by the division-free Pascal
/// recurrence C(m,k) = C(m-1,k-1) + q^k C(m-1,k).
Cyc qbinom(unsigned m, unsigned k, const Cyc& q);

}  // namespace braidbench
