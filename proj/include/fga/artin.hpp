#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fga/garside.hpp"

namespace fga {

/// Canonical form Delta^k * pos of an element of the Artin group, pos a
/// Delta-free left-greedy normal form.
struct ArtinElement {
  std::int64_t k = 0;
  PositiveElement pos;

  friend bool operator==(const ArtinElement&, const ArtinElement&) = default;
  friend auto operator<=>(const ArtinElement& a, const ArtinElement& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.pos <=> b.pos;
  }
};

/// A vertex of X(G): the special (Delta-free) representative of a coset
/// g<Delta>.
struct GVertex {
  PositiveElement pos;

  friend bool operator==(const GVertex&, const GVertex&) = default;
  friend auto operator<=>(const GVertex& a, const GVertex& b) { return a.pos <=> b.pos; }
};

struct GVertexHash {
  std::size_t operator()(const GVertex& v) const noexcept;
};

/// Group arithmetic in A and in G = A / <Delta^2>.
class ArtinGroup {
 public:
  explicit ArtinGroup(const Garside& garside) : g_(&garside) {}

  const Garside& garside() const noexcept { return *g_; }
  const CoxeterSystem& system() const noexcept { return g_->system(); }
  int delta_length() const noexcept { return g_->delta_length(); }

  ArtinElement identity() const { return {}; }
  ArtinElement delta_power(std::int64_t k) const { return ArtinElement{k, {}}; }
  ArtinElement from_atom(Atom a) const;
  /// Delta^k times an arbitrary product of atoms, brought into canonical form.
  ArtinElement canonical(std::int64_t k, std::span<const Atom> word) const;
  ArtinElement from_positive(const PositiveElement& p) const { return canonical(0, p.atoms()); }

  ArtinElement mul(const ArtinElement& x, const ArtinElement& y) const;
  ArtinElement inv(const ArtinElement& x) const;
  ArtinElement pow(const ArtinElement& x, std::int64_t n) const;
  /// x y x^-1
  ArtinElement conj(const ArtinElement& x, const ArtinElement& y) const;

  std::int64_t length_hom(const ArtinElement& x) const;
  std::int64_t mod_2delta(const ArtinElement& x) const;

  /// Equality in G (Delta^2 is central and trivial there).
  bool equal_in_G(const ArtinElement& x, const ArtinElement& y) const;
  bool is_identity_in_G(const ArtinElement& x) const { return x.k % 2 == 0 && x.pos.empty(); }
  /// Representative with k in {0, 1}.
  ArtinElement reduce_in_G(const ArtinElement& x) const;

  GVertex to_vertex(const ArtinElement& x) const;
  ArtinElement lift(const GVertex& v) const { return ArtinElement{0, v.pos}; }
  GVertex act(const ArtinElement& g, const GVertex& v) const { return to_vertex(mul(g, lift(v))); }
  GVertex base_vertex() const { return {}; }

  std::size_t atomnorm(const GVertex& v) const { return v.pos.size(); }
  int wordnorm(const GVertex& v) const { return g_->word_length(v.pos); }

 private:
  const Garside* g_;
};

}  // namespace fga
