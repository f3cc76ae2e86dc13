#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace fga {

/// Integer polynomial helpers, coefficients stored lowest degree first.
namespace poly {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p);
Poly mul(const Poly& a, const Poly& b);
/// Exact division by a monic divisor; throws if the remainder is nonzero.
Poly divide_exact(const Poly& num, const Poly& monic_den);
/// Remainder modulo a monic polynomial.
Poly reduce(Poly p, const Poly& monic_mod);
/// n-th cyclotomic polynomial, obtained from x^n - 1 by dividing out every
/// Phi_d with d | n, d < n.
Poly cyclotomic(int n);

}  // namespace poly

/// Z[zeta_N] with N = 2L, presented as Z[x] / Phi_N(x). Elements used by the
/// reflection representation only ever need integer coefficients.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
  const poly::Poly& modulus() const noexcept { return modulus_; }

 private:
  int order_;
  poly::Poly modulus_;
};

class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(std::shared_ptr<const CyclotomicRing> ring, std::int64_t value);

  /// zeta^k + zeta^-k, i.e. 2 cos(pi k / L) for ring order 2L.
  static ExactReal two_cos(std::shared_ptr<const CyclotomicRing> ring, int k);

  ExactReal operator+(const ExactReal& o) const;
  ExactReal operator-(const ExactReal& o) const;
  ExactReal operator*(const ExactReal& o) const;
  ExactReal operator-() const;
  bool operator==(const ExactReal& o) const { return coeffs_ == o.coeffs_; }
  bool is_zero() const;

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

 private:
  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<std::int64_t> coeffs_;  // always length ring_->degree()
};

}  // namespace fga
