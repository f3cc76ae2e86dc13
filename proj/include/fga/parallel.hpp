#pragma once

// OpenMP kernels. Each takes an Exec switch; Exec::Serial runs the plain
// loop and serves as the reference the parallel path is tested against.
// Results are identical and deterministically ordered either way.

#include <optional>
#include <span>
#include <vector>

#include "fga/complex.hpp"
#include "fga/dynamics.hpp"

namespace fga {

enum class Exec { Serial, Parallel };

/// Ball by BFS; each frontier layer's neighbour lists are computed in
/// parallel and merged in sorted order.
Ball build_ball(const Complex& x, const GVertex& center, int radius, Exec exec);

/// Pairwise d_at and d_wd, row-major.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<int> d_at, d_wd;

  int at(std::size_t i, std::size_t j) const { return d_at[i * n + j]; }
  int wd(std::size_t i, std::size_t j) const { return d_wd[i * n + j]; }
};
DistanceMatrix distance_matrix(const Complex& x, std::span<const GVertex> vs, Exec exec);

CenterResult center_search(const Complex& x, std::span<const GVertex> t, const Ball& search, Exec exec);
MinsetResult minset_search(const Complex& x, const ArtinElement& g, const Ball& search, Exec exec);

struct LinkRecord {
  GVertex vertex;
  Atom pivot;
  HomologyProfile ascending;
  HomologyProfile descending;
  /// The pivot lies in the descending link and divides every member.
  bool descending_cone = false;
};
std::vector<LinkRecord> link_census(const Complex& x, std::span<const GVertex> vs, Exec exec);

struct TorsionRecord {
  ArtinElement element;
  std::optional<int> order;  // nullopt: infinite
  std::optional<TorsionClass> cls;
};
std::vector<TorsionRecord> torsion_census(const Dynamics& dyn, std::span<const ArtinElement> elements, Exec exec);

}  // namespace fga
