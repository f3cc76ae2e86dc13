#include "fga/exact_real.hpp"

#include <stdexcept>

#include "fga/error.hpp"

namespace fga {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::GroupFile: return "GroupFileError";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotASimplex: return "NotASimplex";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

namespace {

// Long division by a monic polynomial; returns quotient, leaves remainder in num.
Poly long_divide(Poly& num, const Poly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {};
  Poly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  trim(q);
  return q;
}

}  // namespace

Poly divide_exact(const Poly& num, const Poly& monic_den) {
  Poly rem = num;
  Poly q = long_divide(rem, monic_den);
  if (!rem.empty()) throw std::logic_error("poly::divide_exact: nonzero remainder");
  return q;
}

Poly reduce(Poly p, const Poly& monic_mod) {
  long_divide(p, monic_mod);
  return p;
}

Poly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: order must be positive");
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic(d));
  }
  return p;
}

}  // namespace poly

CyclotomicRing::CyclotomicRing(int order) : order_(order), modulus_(poly::cyclotomic(order)) {}

ExactReal::ExactReal(std::shared_ptr<const CyclotomicRing> ring, std::int64_t value)
    : ring_(std::move(ring)), coeffs_(static_cast<std::size_t>(ring_->degree()), 0) {
  if (!coeffs_.empty()) coeffs_[0] = value;
}

ExactReal ExactReal::two_cos(std::shared_ptr<const CyclotomicRing> ring, int k) {
  const int n = ring->order();
  const int a = ((k % n) + n) % n;
  const int b = ((-k % n) + n) % n;
  poly::Poly p(static_cast<std::size_t>(n), 0);
  p[static_cast<std::size_t>(a)] += 1;
  p[static_cast<std::size_t>(b)] += 1;
  p = poly::reduce(p, ring->modulus());
  ExactReal r(ring, 0);
  for (std::size_t i = 0; i < p.size(); ++i) r.coeffs_[i] = p[i];
  return r;
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
  ExactReal r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

ExactReal ExactReal::operator-(const ExactReal& o) const {
  ExactReal r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

ExactReal ExactReal::operator-() const {
  ExactReal r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExactReal ExactReal::operator*(const ExactReal& o) const {
  poly::Poly p = poly::reduce(poly::mul(coeffs_, o.coeffs_), ring_->modulus());
  ExactReal r(ring_, 0);
  for (std::size_t i = 0; i < p.size(); ++i) r.coeffs_[i] = p[i];
  return r;
}

bool ExactReal::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

}  // namespace fga
