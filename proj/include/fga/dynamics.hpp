#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fga/complex.hpp"

namespace fga {

/// Directed graph on the atoms other than 1 and Delta with an edge x -> y
/// whenever x.y is a normal form. Nodes follow proper_atoms() order.
struct CharneyGraph {
  std::vector<Atom> nodes;
  std::vector<std::vector<int>> out;  // sorted successor indices
  std::vector<int> component;         // strongly connected component per node
  int component_count = 0;
  std::vector<int> slot;              // W element -> node index, or -1

  std::size_t edge_count() const;
  bool strongly_connected() const { return component_count == 1; }
  int index_of(Atom a) const;  // -1 if not a node
};

std::string charney_dot(const Garside& g, const CharneyGraph& graph);

/// Image of an itinerary prefix: the first `guaranteed` atoms of g(X) are
/// determined by the given prefix; `stripped` counts the Delta's removed.
struct PrefixImage {
  std::vector<Atom> prefix;
  int guaranteed = 0;
  int stripped = 0;
};

enum class TorsionKind { Type1, Type2 };

/// <g> is conjugate, by `conjugator`, to the group generated by B (Type 1,
/// B^m = Delta, order 2m) or by B*Delta (Type 2, m odd, order m).
struct TorsionClass {
  TorsionKind kind = TorsionKind::Type1;
  Atom b;
  int m = 0;
  int order = 0;
  ArtinElement conjugator;
  std::vector<GVertex> simplex;  // invariant simplex of <g>, in cyclic order
};

struct TranslationBounds {
  std::vector<std::int64_t> a;  // a[n-1] = d_wd(*, g^n(*))
  std::int64_t inf_num = 0;     // min a_n / n as a reduced fraction
  std::int64_t inf_den = 1;
};

class Dynamics {
 public:
  explicit Dynamics(const Complex& x);

  const Complex& complex() const noexcept { return *x_; }
  const ArtinGroup& group() const noexcept { return x_->group(); }
  const Garside& garside() const noexcept { return x_->garside(); }
  /// Built on first use.
  const CharneyGraph& charney() const;

  /// Shortest directed path from x to y ([x] when x = y); throws
  /// NotConnected.
  std::vector<Atom> connect_atoms(Atom x, Atom y) const;
  /// Shortest directed path from x to y with at least one edge.
  std::vector<Atom> walk(Atom x, Atom y) const;

  PrefixImage act_prefix(const ArtinElement& g, std::span<const Atom> itinerary) const;

  /// Order of g in G, or nullopt when g has infinite order.
  std::optional<int> order_in_G(const ArtinElement& g) const;
  /// Throws NotTorsion for elements of infinite order or the identity.
  TorsionClass classify_torsion(const ArtinElement& g) const;
  /// Generator B or B*Delta of the standard form of a class.
  ArtinElement standard_generator(const TorsionClass& c) const;
  /// Elements of <g> in G, reduced (k in {0,1}) and sorted.
  std::vector<ArtinElement> cyclic_subgroup(const ArtinElement& g) const;

  TranslationBounds translation_bounds(const ArtinElement& g, int n) const;

  /// g with g(X) beginning with `target` for every itinerary X starting
  /// with `head`.
  ArtinElement density_witness(std::span<const Atom> target, Atom head) const;

  /// An itinerary prefix (x^oo or x.y^oo shape) whose image under g differs
  /// from it within the guaranteed part, if one exists.
  std::optional<std::vector<Atom>> moved_itinerary(const ArtinElement& g) const;

  /// Delta-free normal forms with at most n atoms, in (size, atoms) order.
  std::vector<PositiveElement> delta_free_forms(int n) const;

 private:
  const Complex* x_;
  mutable std::once_flag graph_once_;
  mutable CharneyGraph graph_;
};

/// Length of the common prefix; the metric on itineraries is 2^-length.
std::size_t common_prefix(std::span<const Atom> x, std::span<const Atom> y);

}  // namespace fga
