#include "fga/parallel.hpp"

#include <algorithm>
#include <exception>
#include <limits>

#include "fga/error.hpp"

namespace fga {

namespace {

// Runs body(i) for i in [0, n), in parallel when asked. An exception
// escaping an OpenMP region would terminate, so the first one is carried out.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
  const auto count = static_cast<std::int64_t>(n);
  if (exec == Exec::Parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(fga_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  }
}

}  // namespace

Ball build_ball(const Complex& x, const GVertex& center, int radius, Exec exec) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "ball radius must be non-negative");
  Ball b;
  b.center = center;
  b.radius = radius;
  b.vertices.push_back(center);
  b.dist.push_back(0);
  b.index.emplace(center, 0);
  std::vector<std::vector<GVertex>> nbrs;
  std::size_t layer_begin = 0;
  for (int r = 0; r <= radius; ++r) {
    const std::size_t layer_end = b.vertices.size();
    nbrs.resize(layer_end);
    for_each_index(layer_end - layer_begin, exec,
                   [&](std::size_t i) { nbrs[layer_begin + i] = x.neighbours(b.vertices[layer_begin + i]); });
    if (r == radius) break;
    std::vector<GVertex> fresh;
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (const auto& w : nbrs[i])
        if (!b.index.count(w)) fresh.push_back(w);
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    if (b.vertices.size() + fresh.size() > x.vertex_cap())
      throw Error(ErrorKind::CapExceeded, "ball exceeds the vertex cap of " + std::to_string(x.vertex_cap()));
    for (auto& w : fresh) {
      b.index.emplace(w, static_cast<int>(b.vertices.size()));
      b.vertices.push_back(std::move(w));
      b.dist.push_back(r + 1);
    }
    layer_begin = layer_end;
  }
  const std::size_t n = b.vertices.size();
  b.adjacency.assign(n, {});
  std::vector<int> norm(n);
  for_each_index(n, exec, [&](std::size_t i) { norm[i] = x.wordnorm(b.vertices[i]); });
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& w : nbrs[i]) {
      const int j = b.index_of(w);
      if (j >= 0) b.adjacency[i].push_back(j);
    }
    std::sort(b.adjacency[i].begin(), b.adjacency[i].end());
    for (int j : b.adjacency[i])
      if (static_cast<std::size_t>(j) > i) {
        const int u = static_cast<int>(i);
        b.edges.emplace_back(norm[i] < norm[static_cast<std::size_t>(j)] ? std::pair{u, j} : std::pair{j, u});
      }
  }
  return b;
}

DistanceMatrix distance_matrix(const Complex& x, std::span<const GVertex> vs, Exec exec) {
  DistanceMatrix dm;
  dm.n = vs.size();
  dm.d_at.assign(dm.n * dm.n, 0);
  dm.d_wd.assign(dm.n * dm.n, 0);
  for_each_index(dm.n, exec, [&](std::size_t i) {
    for (std::size_t j = 0; j < dm.n; ++j) {
      const GVertex r = x.relative(vs[i], vs[j]);
      dm.d_at[i * dm.n + j] = static_cast<int>(r.pos.size());
      dm.d_wd[i * dm.n + j] = x.wordnorm(r);
    }
  });
  return dm;
}

CenterResult center_search(const Complex& x, std::span<const GVertex> t, const Ball& search, Exec exec) {
  if (t.empty()) throw Error(ErrorKind::EmptyInput, "center of an empty set");
  const std::size_t n = search.size();
  std::vector<int> score(n, 0);
  for_each_index(n, exec, [&](std::size_t i) {
    int worst = 0;
    for (const auto& v : t) worst = std::max(worst, x.d_wd(v, search.vertices[i]));
    score[i] = worst;
  });
  CenterResult out;
  out.radius = *std::min_element(score.begin(), score.end());
  out.interior = true;
  for (std::size_t i = 0; i < n; ++i)
    if (score[i] == out.radius) {
      out.centers.push_back(search.vertices[i]);
      out.interior = out.interior && search.dist[i] < search.radius;
    }
  std::sort(out.centers.begin(), out.centers.end());
  return out;
}

MinsetResult minset_search(const Complex& x, const ArtinElement& g, const Ball& search, Exec exec) {
  const std::size_t n = search.size();
  std::vector<int> disp(n, 0);
  for_each_index(n, exec, [&](std::size_t i) { disp[i] = x.displacement(g, search.vertices[i]); });
  MinsetResult out;
  out.displacement = *std::min_element(disp.begin(), disp.end());
  out.interior = true;
  for (std::size_t i = 0; i < n; ++i)
    if (disp[i] == out.displacement) {
      out.vertices.push_back(search.vertices[i]);
      out.interior = out.interior && search.dist[i] < search.radius;
    }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

std::vector<LinkRecord> link_census(const Complex& x, std::span<const GVertex> vs, Exec exec) {
  x.atom_adjacency();  // build the shared table before fanning out
  std::vector<LinkRecord> out(vs.size());
  const Garside& g = x.garside();
  for_each_index(vs.size(), exec, [&](std::size_t i) {
    const Links l = x.links(vs[i]);
    LinkRecord& rec = out[i];
    rec.vertex = vs[i];
    rec.pivot = l.pivot;
    rec.ascending = reduced_homology(l.ascending.complex());
    rec.descending = reduced_homology(l.descending.complex());
    const auto& mem = l.descending.members;
    rec.descending_cone = std::find(mem.begin(), mem.end(), l.pivot) != mem.end() &&
                          std::all_of(mem.begin(), mem.end(), [&](Atom b) { return g.atom_divides(l.pivot, b); });
  });
  return out;
}

std::vector<TorsionRecord> torsion_census(const Dynamics& dyn, std::span<const ArtinElement> elements, Exec exec) {
  std::vector<TorsionRecord> out(elements.size());
  for_each_index(elements.size(), exec, [&](std::size_t i) {
    TorsionRecord& rec = out[i];
    rec.element = elements[i];
    rec.order = dyn.order_in_G(elements[i]);
    if (rec.order && *rec.order > 1) rec.cls = dyn.classify_torsion(elements[i]);
  });
  return out;
}

}  // namespace fga
