#include "fga/artin.hpp"

namespace fga {

std::size_t GVertexHash::operator()(const GVertex& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Atom a : v.pos.atoms()) h = (h ^ static_cast<std::size_t>(a.elt)) * 0x100000001b3ull;
  return h;
}

namespace {

PositiveElement bar_power(const Garside& g, const PositiveElement& p, std::int64_t k) {
  return (k % 2 == 0) ? p : g.bar(p);
}

}  // namespace

ArtinElement ArtinGroup::from_atom(Atom a) const { return canonical(0, std::span<const Atom>(&a, 1)); }

ArtinElement ArtinGroup::canonical(std::int64_t k, std::span<const Atom> word) const {
  PositiveElement nf = g_->normalize(word);
  const std::size_t j = g_->leading_deltas(nf);
  if (j == 0) return ArtinElement{k, std::move(nf)};
  std::vector<Atom> rest(nf.atoms().begin() + static_cast<std::ptrdiff_t>(j), nf.atoms().end());
  return ArtinElement{k + static_cast<std::int64_t>(j), g_->from_normal(std::move(rest))};
}

ArtinElement ArtinGroup::mul(const ArtinElement& x, const ArtinElement& y) const {
  // Delta^a p Delta^b q = Delta^(a+b) bar^b(p) q
  std::vector<Atom> word = bar_power(*g_, x.pos, y.k).atoms();
  word.insert(word.end(), y.pos.atoms().begin(), y.pos.atoms().end());
  return canonical(x.k + y.k, word);
}

ArtinElement ArtinGroup::inv(const ArtinElement& x) const {
  // p p~ = Delta^m, so (Delta^k p)^-1 = p~ Delta^-(m+k) = Delta^-(m+k) bar^(m+k)(p~)
  const auto m = static_cast<std::int64_t>(x.pos.size());
  const PositiveElement tilde = g_->complement_to_delta_power(x.pos, static_cast<int>(m));
  const std::int64_t shift = m + x.k;
  return canonical(-shift, bar_power(*g_, tilde, shift).atoms());
}

ArtinElement ArtinGroup::pow(const ArtinElement& x, std::int64_t n) const {
  ArtinElement base = n < 0 ? inv(x) : x;
  if (n < 0) n = -n;
  ArtinElement acc = identity();
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

ArtinElement ArtinGroup::conj(const ArtinElement& x, const ArtinElement& y) const { return mul(mul(x, y), inv(x)); }

std::int64_t ArtinGroup::length_hom(const ArtinElement& x) const {
  return x.k * g_->delta_length() + g_->word_length(x.pos);
}

std::int64_t ArtinGroup::mod_2delta(const ArtinElement& x) const {
  const std::int64_t m = 2 * static_cast<std::int64_t>(g_->delta_length());
  return ((length_hom(x) % m) + m) % m;
}

bool ArtinGroup::equal_in_G(const ArtinElement& x, const ArtinElement& y) const {
  return ((x.k - y.k) % 2 == 0) && x.pos == y.pos;
}

ArtinElement ArtinGroup::reduce_in_G(const ArtinElement& x) const {
  return ArtinElement{((x.k % 2) + 2) % 2, x.pos};
}

GVertex ArtinGroup::to_vertex(const ArtinElement& x) const { return GVertex{bar_power(*g_, x.pos, x.k)}; }

}  // namespace fga
