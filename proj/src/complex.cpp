#include "fga/complex.hpp"

#include <algorithm>
#include <sstream>

#include "fga/error.hpp"
#include "fga/parallel.hpp"
#include "fga/text.hpp"

namespace fga {

int Ball::index_of(const GVertex& v) const {
  auto it = index.find(v);
  return it == index.end() ? -1 : it->second;
}

Complex::Complex(const ArtinGroup& group, std::size_t vertex_cap) : grp_(&group), cap_(vertex_cap) {}

GVertex Complex::relative(const GVertex& v, const GVertex& w) const {
  return grp_->to_vertex(grp_->mul(grp_->inv(grp_->lift(v)), grp_->lift(w)));
}

std::vector<GVertex> Complex::geodesic(const GVertex& v, const GVertex& w) const {
  const GVertex x = relative(v, w);
  const ArtinElement lv = grp_->lift(v);
  std::vector<GVertex> path{v};
  std::vector<Atom> prefix;
  for (Atom a : x.pos.atoms()) {
    prefix.push_back(a);
    path.push_back(grp_->act(lv, GVertex{garside().from_normal(prefix)}));
  }
  return path;
}

std::vector<GVertex> Complex::neighbours(const GVertex& v) const {
  std::vector<GVertex> out;
  const auto& atoms = garside().proper_atoms();
  out.reserve(atoms.size());
  std::vector<Atom> word = v.pos.atoms();
  word.push_back(Atom{});
  for (Atom b : atoms) {
    word.back() = b;
    out.push_back(grp_->to_vertex(grp_->canonical(0, word)));
  }
  return out;
}

Ball Complex::ball(const GVertex& center, int radius) const { return build_ball(*this, center, radius, Exec::Parallel); }

bool Complex::is_simplex(std::span<const GVertex> vs) const {
  if (vs.empty()) throw Error(ErrorKind::EmptyInput, "a simplex needs at least one vertex");
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (d_at(vs[i], vs[j]) != 1) return false;
  return true;
}

std::vector<GVertex> Complex::cyclic_order(std::span<const GVertex> vs) const {
  if (!is_simplex(vs)) throw Error(ErrorKind::NotASimplex, "vertices are not pairwise adjacent");
  // Translate vs[0] to the base vertex; the others become a chain of atoms
  // ordered by length.
  const ArtinElement h = grp_->inv(grp_->lift(vs[0]));
  std::vector<std::pair<int, std::size_t>> keyed;
  for (std::size_t i = 0; i < vs.size(); ++i) keyed.emplace_back(grp_->wordnorm(grp_->act(h, vs[i])), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<GVertex> out;
  for (auto [norm, i] : keyed) out.push_back(vs[i]);
  return out;
}

const std::vector<std::vector<char>>& Complex::atom_adjacency() const {
  std::call_once(adj_once_, [this] {
    const auto& atoms = garside().proper_atoms();
    const std::size_t n = atoms.size();
    atom_adj_.assign(n, std::vector<char>(n, 0));
    std::vector<GVertex> vs;
    vs.reserve(n);
    for (Atom a : atoms) vs.push_back(GVertex{garside().from_normal({a})});
    const DistanceMatrix dm = distance_matrix(*this, vs, Exec::Parallel);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) atom_adj_[i][j] = dm.at(i, j) == 1;
  });
  return atom_adj_;
}

Links Complex::links(const GVertex& v) const {
  const Garside& g = garside();
  const auto& atoms = g.proper_atoms();
  const auto& adj = atom_adjacency();
  Links out;
  out.pivot = g.complement_under(g.delta(), v.pos);
  out.ascending.ascending = true;
  out.descending.ascending = false;
  std::vector<int> slot(atoms.size(), -1);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    LinkComplex& side = g.atom_divides(out.pivot, atoms[i]) ? out.descending : out.ascending;
    slot[i] = static_cast<int>(side.members.size());
    side.members.push_back(atoms[i]);
  }
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (!adj[i][j]) continue;
      const bool di = g.atom_divides(out.pivot, atoms[i]);
      const bool dj = g.atom_divides(out.pivot, atoms[j]);
      if (di != dj) continue;
      (di ? out.descending : out.ascending).edges.emplace_back(slot[i], slot[j]);
    }
  return out;
}

CenterResult Complex::center(std::span<const GVertex> t, const Ball& search) const {
  return center_search(*this, t, search, Exec::Parallel);
}

CenterResult Complex::global_center(std::span<const GVertex> t, const GVertex& start) const {
  if (t.empty()) throw Error(ErrorKind::EmptyInput, "center of an empty set");
  auto radius_at = [&](const GVertex& z) {
    int worst = 0;
    for (const auto& v : t) worst = std::max(worst, d_wd(v, z));
    return worst;
  };
  GVertex cur = start;
  int best = radius_at(cur);
  for (bool moved = true; moved;) {
    moved = false;
    for (auto& z : neighbours(cur)) {
      const int r = radius_at(z);
      if (r < best) {
        best = r;
        cur = std::move(z);
        moved = true;
        break;
      }
    }
  }
  CenterResult out;
  out.radius = best;
  out.interior = true;
  out.centers.push_back(cur);
  for (auto& z : neighbours(cur))
    if (radius_at(z) == best) out.centers.push_back(std::move(z));
  std::sort(out.centers.begin(), out.centers.end());
  return out;
}

MinsetResult Complex::minset_in(const ArtinElement& g, const Ball& search) const {
  return minset_search(*this, g, search, Exec::Parallel);
}

std::string ball_dot(const Garside& g, const Ball& ball) {
  std::ostringstream out;
  out << "digraph ball {\n";
  for (std::size_t i = 0; i < ball.size(); ++i)
    out << "  v" << i << " [label=\"" << render(g, ball.vertices[i]) << "\"];\n";
  for (auto [u, v] : ball.edges) out << "  v" << u << " -> v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string ball_csv(const Complex& x, const Ball& ball) {
  const DistanceMatrix dm = distance_matrix(x, ball.vertices, Exec::Parallel);
  std::ostringstream out;
  out << "from,to,d_at,d_wd\n";
  std::vector<std::string> labels;
  for (const auto& v : ball.vertices) labels.push_back(render(x.garside(), v));
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = 0; j < ball.size(); ++j)
      out << labels[i] << ',' << labels[j] << ',' << dm.at(i, j) << ',' << dm.wd(i, j) << '\n';
  return out.str();
}

}  // namespace fga
