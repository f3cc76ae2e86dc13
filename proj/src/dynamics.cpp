#include "fga/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "fga/error.hpp"
#include "fga/text.hpp"

namespace fga {

std::size_t CharneyGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& o : out) n += o.size();
  return n;
}

int CharneyGraph::index_of(Atom a) const {
  if (a.elt < 0 || static_cast<std::size_t>(a.elt) >= slot.size()) return -1;
  return slot[static_cast<std::size_t>(a.elt)];
}

std::string charney_dot(const Garside& g, const CharneyGraph& graph) {
  std::ostringstream out;
  out << "digraph charney {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << render_atom(g, graph.nodes[i]) << "\"];\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    for (int j : graph.out[i]) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

// Tarjan's algorithm.
void tarjan(CharneyGraph& gr) {
  const int n = static_cast<int>(gr.nodes.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  gr.component.assign(static_cast<std::size_t>(n), -1);
  gr.component_count = 0;
  int counter = 0;
  std::function<void(int)> visit = [&](int v) {
    const auto uv = static_cast<std::size_t>(v);
    index[uv] = low[uv] = counter++;
    stack.push_back(v);
    on_stack[uv] = 1;
    for (int w : gr.out[uv]) {
      const auto uw = static_cast<std::size_t>(w);
      if (index[uw] < 0) {
        visit(w);
        low[uv] = std::min(low[uv], low[uw]);
      } else if (on_stack[uw]) {
        low[uv] = std::min(low[uv], index[uw]);
      }
    }
    if (low[uv] == index[uv]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = 0;
        gr.component[static_cast<std::size_t>(w)] = gr.component_count;
      } while (w != v);
      ++gr.component_count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[static_cast<std::size_t>(v)] < 0) visit(v);
}

}  // namespace

Dynamics::Dynamics(const Complex& x) : x_(&x) {}

const CharneyGraph& Dynamics::charney() const {
  std::call_once(graph_once_, [this] {
    const Garside& g = garside();
    graph_.nodes = g.proper_atoms();
    const std::size_t n = graph_.nodes.size();
    graph_.out.assign(n, {});
    graph_.slot.assign(g.system().order(), -1);
    for (std::size_t i = 0; i < n; ++i) graph_.slot[static_cast<std::size_t>(graph_.nodes[i].elt)] = static_cast<int>(i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (g.is_normal_pair(graph_.nodes[i], graph_.nodes[j])) graph_.out[i].push_back(static_cast<int>(j));
    tarjan(graph_);
  });
  return graph_;
}

namespace {

// BFS from the given sources; returns the path ending at target or empty.
std::vector<int> bfs_path(const CharneyGraph& gr, const std::vector<int>& sources, int target,
                          const std::vector<int>& prefix) {
  const std::size_t n = gr.nodes.size();
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int s : sources)
    if (parent[static_cast<std::size_t>(s)] == -2) {
      parent[static_cast<std::size_t>(s)] = -1;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == target) {
      std::vector<int> path;
      for (int u = v; u >= 0; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
      path.insert(path.end(), prefix.rbegin(), prefix.rend());
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : gr.out[static_cast<std::size_t>(v)])
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  return {};
}

}  // namespace

std::vector<Atom> Dynamics::connect_atoms(Atom x, Atom y) const {
  const int xi = charney().index_of(x), yi = charney().index_of(y);
  if (xi < 0 || yi < 0) throw Error(ErrorKind::InvalidArgument, "atoms 1 and Delta are not nodes of the Charney graph");
  if (xi == yi) return {x};
  const auto path = bfs_path(charney(), {xi}, yi, {});
  if (path.empty())
    throw Error(ErrorKind::NotConnected, "no directed path from " + render_atom(garside(), x) + " to " +
                                             render_atom(garside(), y));
  std::vector<Atom> out;
  for (int i : path) out.push_back(charney().nodes[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<Atom> Dynamics::walk(Atom x, Atom y) const {
  const int xi = charney().index_of(x), yi = charney().index_of(y);
  if (xi < 0 || yi < 0) throw Error(ErrorKind::InvalidArgument, "atoms 1 and Delta are not nodes of the Charney graph");
  const auto path = bfs_path(charney(), charney().out[static_cast<std::size_t>(xi)], yi, {xi});
  if (path.empty())
    throw Error(ErrorKind::NotConnected, "no directed path from " + render_atom(garside(), x) + " to " +
                                             render_atom(garside(), y));
  std::vector<Atom> out;
  for (int i : path) out.push_back(charney().nodes[static_cast<std::size_t>(i)]);
  return out;
}

PrefixImage Dynamics::act_prefix(const ArtinElement& g, std::span<const Atom> itinerary) const {
  const Garside& gs = garside();
  std::vector<Atom> word = g.pos.atoms();
  word.insert(word.end(), itinerary.begin(), itinerary.end());
  const PositiveElement nf = gs.normalize(word);
  const std::size_t k = std::min(itinerary.size(), nf.size());
  std::size_t j = 0;
  while (j < k && nf[j] == gs.delta()) ++j;
  PrefixImage out;
  out.stripped = static_cast<int>(j);
  out.guaranteed = static_cast<int>(k - j);
  const bool flip = ((g.k + static_cast<std::int64_t>(j)) % 2) != 0;
  for (std::size_t i = j; i < k; ++i) out.prefix.push_back(flip ? gs.bar(nf[i]) : nf[i]);
  return out;
}

std::optional<int> Dynamics::order_in_G(const ArtinElement& g) const {
  const ArtinGroup& grp = group();
  // Torsion orders are bounded by 2 delta (the kernel of length mod 2 delta
  // is torsion-free).
  const int cutoff = 2 * grp.delta_length();
  ArtinElement p = g;
  for (int n = 1; n <= cutoff; ++n) {
    if (grp.is_identity_in_G(p)) return n;
    p = grp.mul(p, g);
  }
  return std::nullopt;
}

ArtinElement Dynamics::standard_generator(const TorsionClass& c) const {
  const ArtinElement b = group().from_atom(c.b);
  return c.kind == TorsionKind::Type1 ? b : group().mul(b, group().delta_power(1));
}

std::vector<ArtinElement> Dynamics::cyclic_subgroup(const ArtinElement& g) const {
  const ArtinGroup& grp = group();
  std::set<ArtinElement> seen;
  ArtinElement p = grp.identity();
  const int cutoff = 2 * grp.delta_length();
  for (int n = 0; n <= cutoff; ++n) {
    if (!seen.insert(grp.reduce_in_G(p)).second) break;
    p = grp.mul(p, g);
  }
  return {seen.begin(), seen.end()};
}

TorsionClass Dynamics::classify_torsion(const ArtinElement& g) const {
  const ArtinGroup& grp = group();
  const Complex& x = complex();
  const auto ord = order_in_G(g);
  if (!ord) throw Error(ErrorKind::NotTorsion, "element has infinite order in G");
  if (*ord == 1) throw Error(ErrorKind::NotTorsion, "element is trivial in G");

  // Orbit of the base vertex.
  std::vector<GVertex> orbit;
  {
    ArtinElement p = grp.identity();
    std::set<GVertex> seen;
    for (int i = 0; i < *ord; ++i) {
      if (seen.insert(grp.to_vertex(p)).second) orbit.push_back(grp.to_vertex(p));
      p = grp.mul(p, g);
    }
  }
  const CenterResult cr = x.global_center(orbit, grp.base_vertex());
  const GVertex c = cr.centers.front();
  const ArtinElement conj = grp.lift(c);
  const ArtinElement gp = grp.mul(grp.mul(grp.inv(conj), g), conj);
  std::vector<GVertex> face;
  {
    ArtinElement p = grp.identity();
    std::set<GVertex> seen;
    for (int i = 0; i < *ord; ++i) {
      if (seen.insert(grp.to_vertex(p)).second) face.push_back(grp.to_vertex(p));
      p = grp.mul(p, gp);
    }
  }

  TorsionClass out;
  out.conjugator = conj;
  if (face.size() == 1) {
    // <g'> fixes *, so it is <Delta>.
    out.kind = TorsionKind::Type1;
    out.b = garside().delta();
    out.m = 1;
  } else {
    const auto cyc = x.cyclic_order(face);
    const GVertex next = cyc[1];
    // The element of <g'> rotating * onto the next vertex is B or B*Delta;
    // prefer the atom when both are present.
    std::optional<ArtinElement> h;
    ArtinElement p = gp;
    for (int i = 1; i < *ord; ++i) {
      if (grp.to_vertex(p) == next) {
        const ArtinElement r = grp.reduce_in_G(p);
        if (!h || r.k == 0) h = r;
      }
      p = grp.mul(p, gp);
    }
    if (!h) throw std::logic_error("classify_torsion: no rotation of the invariant face");
    out.m = static_cast<int>(face.size());
    out.b = next.pos[0];
    out.kind = h->k == 0 ? TorsionKind::Type1 : TorsionKind::Type2;
  }
  out.order = out.kind == TorsionKind::Type1 ? 2 * out.m : out.m;
  if (out.order != *ord) throw std::logic_error("classify_torsion: order mismatch");
  for (const auto& v : x.cyclic_order(face)) out.simplex.push_back(grp.act(conj, v));
  return out;
}

TranslationBounds Dynamics::translation_bounds(const ArtinElement& g, int n) const {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "translation bounds need n >= 1");
  const ArtinGroup& grp = group();
  TranslationBounds out;
  ArtinElement p = g;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t a = grp.wordnorm(grp.to_vertex(p));
    out.a.push_back(a);
    if (i == 1 || a * out.inf_den < out.inf_num * i) {
      out.inf_num = a;
      out.inf_den = i;
    }
    p = grp.mul(p, g);
  }
  const std::int64_t d = std::gcd(out.inf_num, out.inf_den);
  if (d > 1) out.inf_num /= d, out.inf_den /= d;
  if (out.inf_num == 0) out.inf_den = 1;
  return out;
}

ArtinElement Dynamics::density_witness(std::span<const Atom> target, Atom head) const {
  if (target.empty()) throw Error(ErrorKind::EmptyInput, "density witness needs a nonempty target");
  for (Atom a : target)
    if (charney().index_of(a) < 0) throw Error(ErrorKind::InvalidArgument, "target atoms must differ from 1 and Delta");
  if (!garside().is_normal(target)) throw Error(ErrorKind::InvalidArgument, "target is not a normal form");
  const auto path = walk(target.back(), head);
  std::vector<Atom> word(target.begin(), target.end());
  word.insert(word.end(), path.begin() + 1, path.end() - 1);
  return group().canonical(0, word);
}

std::optional<std::vector<Atom>> Dynamics::moved_itinerary(const ArtinElement& g) const {
  const Garside& gs = garside();
  const std::size_t len = g.pos.size() + 6;
  auto try_prefix = [&](const std::vector<Atom>& x) -> bool {
    const PrefixImage img = act_prefix(g, x);
    return !std::equal(img.prefix.begin(), img.prefix.end(), x.begin());
  };
  for (Atom y : charney().nodes) {
    if (!gs.is_normal_pair(y, y)) continue;
    std::vector<Atom> x(len, y);
    if (try_prefix(x)) return x;
  }
  for (Atom h : charney().nodes)
    for (Atom y : charney().nodes) {
      if (h == y || !gs.is_normal_pair(h, y) || !gs.is_normal_pair(y, y)) continue;
      std::vector<Atom> x(len, y);
      x[0] = h;
      if (try_prefix(x)) return x;
    }
  return std::nullopt;
}

std::vector<PositiveElement> Dynamics::delta_free_forms(int n) const {
  std::vector<PositiveElement> out{PositiveElement{}};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= n; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& path : layer) {
      if (path.empty()) {
        for (std::size_t i = 0; i < charney().nodes.size(); ++i) next.push_back({static_cast<int>(i)});
        continue;
      }
      for (int j : charney().out[static_cast<std::size_t>(path.back())]) {
        next.push_back(path);
        next.back().push_back(j);
      }
    }
    for (const auto& path : next) {
      std::vector<Atom> atoms;
      for (int i : path) atoms.push_back(charney().nodes[static_cast<std::size_t>(i)]);
      out.push_back(garside().from_normal(std::move(atoms)));
    }
    layer = std::move(next);
  }
  return out;
}

std::size_t common_prefix(std::span<const Atom> x, std::span<const Atom> y) {
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  return i;
}

}  // namespace fga
