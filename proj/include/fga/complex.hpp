#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fga/artin.hpp"
#include "fga/homology.hpp"

namespace fga {

inline constexpr std::size_t kDefaultVertexCap = 2'000'000;

/// All vertices within atom distance `radius` of `center`, in BFS order
/// (layers sorted), with every edge of X(G) between them.
struct Ball {
  GVertex center;
  int radius = 0;
  std::vector<GVertex> vertices;
  std::vector<int> dist;                   // d_at from the center
  std::vector<std::vector<int>> adjacency;  // sorted neighbour indices
  /// Edges (u, v) oriented so that wordnorm(u) < wordnorm(v).
  std::vector<std::pair<int, int>> edges;
  std::unordered_map<GVertex, int, GVertexHash> index;

  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(const GVertex& v) const { return index.count(v) != 0; }
  int index_of(const GVertex& v) const;  // -1 if absent
};

/// Link of a vertex v restricted to neighbours v*B on one side of the
/// wordnorm Morse function. Members are atoms, adjacency is that of the
/// neighbour vertices.
struct LinkComplex {
  bool ascending = true;
  std::vector<Atom> members;
  std::vector<std::pair<int, int>> edges;  // indices into members

  FlagComplex complex() const { return flag_complex(static_cast<int>(members.size()), edges); }
};

struct Links {
  Atom pivot;  // C with: Delta < v B  <=>  C < B
  LinkComplex ascending;
  LinkComplex descending;
};

struct CenterResult {
  int radius = 0;
  std::vector<GVertex> centers;  // sorted
  /// Every center lies strictly inside the search ball.
  bool interior = false;
};

struct MinsetResult {
  int displacement = 0;
  std::vector<GVertex> vertices;  // sorted
  bool interior = false;
};

/// The complex X(G): vertices are cosets g<Delta>, simplices are sets of
/// pairwise atom-distance-1 vertices.
class Complex {
 public:
  explicit Complex(const ArtinGroup& group, std::size_t vertex_cap = kDefaultVertexCap);

  const ArtinGroup& group() const noexcept { return *grp_; }
  const Garside& garside() const noexcept { return grp_->garside(); }
  std::size_t vertex_cap() const noexcept { return cap_; }

  /// Special representative of v^-1 w.
  GVertex relative(const GVertex& v, const GVertex& w) const;
  int d_at(const GVertex& v, const GVertex& w) const { return static_cast<int>(relative(v, w).pos.size()); }
  int d_wd(const GVertex& v, const GVertex& w) const { return grp_->wordnorm(relative(v, w)); }
  int wordnorm(const GVertex& v) const { return grp_->wordnorm(v); }

  std::vector<GVertex> geodesic(const GVertex& v, const GVertex& w) const;
  /// The vertices v*B for the proper atoms B, in proper_atoms() order.
  std::vector<GVertex> neighbours(const GVertex& v) const;

  /// Built by the parallel frontier kernel; throws CapExceeded when the
  /// ball would exceed the vertex cap.
  Ball ball(const GVertex& center, int radius) const;

  bool is_simplex(std::span<const GVertex> vs) const;
  /// Cyclic order of a simplex, starting at vs[0]; throws NotASimplex.
  std::vector<GVertex> cyclic_order(std::span<const GVertex> vs) const;

  Links links(const GVertex& v) const;
  /// Adjacency of proper atoms as vertices of X(G) (d_at = 1), indexed like
  /// proper_atoms(). Computed once.
  const std::vector<std::vector<char>>& atom_adjacency() const;

  /// Minimise max_t d_wd(t, z) over z in the search ball; throws EmptyInput.
  CenterResult center(std::span<const GVertex> t, const Ball& search) const;
  /// Centers over all of X(G), by descent from `start`: a vertex with no
  /// neighbour of smaller radius is a center (strict convexity of d_wd
  /// along geodesics), and the other centers are among its neighbours.
  CenterResult global_center(std::span<const GVertex> t, const GVertex& start) const;
  int displacement(const ArtinElement& g, const GVertex& v) const { return d_wd(v, grp_->act(g, v)); }
  MinsetResult minset_in(const ArtinElement& g, const Ball& search) const;

 private:
  const ArtinGroup* grp_;
  std::size_t cap_;
  mutable std::once_flag adj_once_;
  mutable std::vector<std::vector<char>> atom_adj_;
};

/// DOT digraph of the ball: vertices labelled by normal forms, edges in the
/// wordnorm direction.
std::string ball_dot(const Garside& g, const Ball& ball);
/// CSV of pairwise distances: from,to,d_at,d_wd for all ordered pairs.
std::string ball_csv(const Complex& x, const Ball& ball);

}  // namespace fga
