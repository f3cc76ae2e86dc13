#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fga/error.hpp"
#include "fga/parallel.hpp"
#include "fixtures.hpp"
#include "oracle/coset_graph.hpp"

using namespace fga;
using fixtures::make;

TEST_CASE("distance examples") {
  auto G = make(fixtures::kA2);
  const auto& x = G->cx;
  const auto star = G->grp.base_vertex();
  CHECK(x.d_at(star, G->v("a.ab")) == 2);
  CHECK(x.d_at(G->v("a.ab"), G->v("a.ab")) == 0);
  CHECK(x.d_wd(star, G->v("a")) == 1);
  CHECK(x.d_wd(G->v("a"), star) == 2);
  CHECK(x.d_wd(star, G->v("a.ab")) == 3);
  CHECK(x.d_wd(G->v("a.ab"), star) == 3);
  CHECK(x.d_wd(G->v("ba"), G->v("ba")) == 0);
  // a^-1 b = D^-1 . ab.b, whose special representative is ba.a.
  CHECK(G->str(x.relative(G->v("a"), G->v("b"))) == "ba.a");
  CHECK(x.d_at(G->v("a"), G->v("b")) == 2);
}

TEST_CASE("the coset-graph oracle agrees on d_at(a, b) in A2") {
  auto G = make(fixtures::kA2);
  oracle::WordMonoid wm(G->sys.matrix());
  oracle::CosetGraph cg(wm);
  // a and b are both adjacent to *, and not to each other.
  const auto na = cg.neighbours("a");
  CHECK(std::count(na.begin(), na.end(), oracle::Word{}) == 1);
  CHECK(std::count(na.begin(), na.end(), "b") == 0);
  const auto nb = cg.neighbours("b");
  CHECK(std::count(nb.begin(), nb.end(), oracle::Word{}) == 1);
  CHECK(G->cx.d_at(G->v("a"), G->v("b")) == 2);
}

TEST_CASE("geodesic examples") {
  auto G = make(fixtures::kA2);
  const auto& x = G->cx;
  const auto star = G->grp.base_vertex();
  const auto path = x.geodesic(star, G->v("a.ab"));
  REQUIRE(path.size() == 3);
  CHECK(G->str(path[0]) == "*");
  CHECK(G->str(path[1]) == "a");
  CHECK(G->str(path[2]) == "a.ab");
  CHECK(x.geodesic(G->v("ab"), G->v("ab")) == std::vector<GVertex>{G->v("ab")});
  auto back = x.geodesic(star, G->v("a"));
  std::reverse(back.begin(), back.end());
  CHECK(x.geodesic(G->v("a"), star) == back);
}

TEST_CASE("ball sizes") {
  auto G = make(fixtures::kA2);
  const auto star = G->grp.base_vertex();
  CHECK(G->cx.ball(star, 0).size() == 1);
  const auto b1 = G->cx.ball(star, 1);
  CHECK(b1.size() == 5);
  std::set<std::string> names;
  for (const auto& v : b1.vertices) names.insert(G->str(v));
  CHECK(names == std::set<std::string>{"*", "a", "b", "ab", "ba"});
  const auto b2 = G->cx.ball(star, 2);
  CHECK(b2.size() == 13);
  std::set<std::string> outer;
  for (std::size_t i = 0; i < b2.size(); ++i)
    if (b2.dist[i] == 2) outer.insert(G->str(b2.vertices[i]));
  CHECK(outer == std::set<std::string>{"a.a", "a.ab", "ab.b", "ab.ba", "b.b", "b.ba", "ba.a", "ba.ab"});
}

TEST_CASE("balls agree with the coset-graph oracle") {
  struct Case {
    const char* text;
    int radius;
  };
  for (auto [text, radius] : {Case{fixtures::kA2, 3}, Case{fixtures::kI24, 2}, Case{fixtures::kZ2, 3}}) {
    auto G = make(text);
    oracle::WordMonoid wm(G->sys.matrix());
    oracle::CosetGraph cg(wm);
    const auto expect = cg.ball(radius);
    const auto b = G->cx.ball(G->grp.base_vertex(), radius);
    std::map<oracle::Word, int> got;
    for (std::size_t i = 0; i < b.size(); ++i) got.emplace(wm.canonical(oracle::to_word(G->g, b.vertices[i].pos)), b.dist[i]);
    CHECK(got == expect);
  }
}

TEST_CASE("ball edges and orientation") {
  for (auto text : {fixtures::kA2, fixtures::kI24, fixtures::kA3}) {
    auto G = make(text);
    const auto& x = G->cx;
    const auto b = x.ball(G->grp.base_vertex(), 2);
    std::set<std::pair<int, int>> edges(b.edges.begin(), b.edges.end());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const bool adjacent = x.d_at(b.vertices[i], b.vertices[j]) == 1;
        const int u = static_cast<int>(i), v = static_cast<int>(j);
        CHECK(adjacent == (edges.count({u, v}) + edges.count({v, u}) == 1));
      }
    for (auto [u, v] : b.edges)
      CHECK(x.wordnorm(b.vertices[static_cast<std::size_t>(u)]) < x.wordnorm(b.vertices[static_cast<std::size_t>(v)]));
    // The d_at from the centre is the atom count of the representative.
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.dist[i] == static_cast<int>(b.vertices[i].pos.size()));
  }
}

TEST_CASE("ball around another centre is a translate") {
  auto G = make(fixtures::kA2);
  const auto c = G->v("a.ab");
  const auto b = G->cx.ball(c, 2);
  const auto b0 = G->cx.ball(G->grp.base_vertex(), 2);
  CHECK(b.size() == b0.size());
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(G->cx.d_at(c, b.vertices[i]) == b.dist[i]);
}

TEST_CASE("vertex cap") {
  auto G = make(fixtures::kA3);
  Complex small(G->grp, 50);
  CHECK_THROWS_AS(small.ball(G->grp.base_vertex(), 2), Error);
  try {
    small.ball(G->grp.base_vertex(), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("metric identities on balls") {
  for (auto text : {fixtures::kA2, fixtures::kI24, fixtures::kI25, fixtures::kA3}) {
    auto G = make(text);
    const auto& x = G->cx;
    const int delta = G->sys.delta_length();
    const auto b = x.ball(G->grp.base_vertex(), 2);
    const auto dm = distance_matrix(x, b.vertices, Exec::Parallel);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        CHECK(dm.wd(i, j) + dm.wd(j, i) == delta * dm.at(i, j));
        CHECK(dm.at(i, j) == dm.at(j, i));
        CHECK(dm.at(i, j) <= dm.wd(i, j));
        CHECK(dm.wd(i, j) <= delta * dm.at(i, j));
        CHECK(dm.wd(j, i) <= delta * dm.wd(i, j));
      }
  }
}

TEST_CASE("triangle inequalities") {
  std::mt19937 rng(31);
  auto G = make(fixtures::kA3);
  const auto& x = G->cx;
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = fixtures::random_vertex(*G, rng, 3);
    const auto v = fixtures::random_vertex(*G, rng, 3);
    const auto w = fixtures::random_vertex(*G, rng, 3);
    CHECK(x.d_at(u, w) <= x.d_at(u, v) + x.d_at(v, w));
    CHECK(x.d_wd(u, w) <= x.d_wd(u, v) + x.d_wd(v, w));
  }
}

TEST_CASE("geodesics: reversal, additivity, down-and-up, convexity") {
  std::mt19937 rng(37);
  for (auto text : {fixtures::kA2, fixtures::kI25, fixtures::kA3}) {
    auto G = make(text);
    const auto& x = G->cx;
    for (int trial = 0; trial < 200; ++trial) {
      const auto v = fixtures::random_vertex(*G, rng, 3);
      const auto w = fixtures::random_vertex(*G, rng, 3);
      const auto u = fixtures::random_vertex(*G, rng, 3);
      const auto path = x.geodesic(v, w);
      CHECK(static_cast<int>(path.size()) == x.d_at(v, w) + 1);
      auto back = x.geodesic(w, v);
      std::reverse(back.begin(), back.end());
      CHECK(back == path);
      int sum = 0;
      for (std::size_t i = 1; i < path.size(); ++i) {
        CHECK(x.d_at(path[i - 1], path[i]) == 1);
        sum += x.d_wd(path[i - 1], path[i]);
      }
      CHECK(sum == x.d_wd(v, w));
      // Seen from u the wordnorm first falls, then rises.
      bool rising = false;
      for (std::size_t i = 1; i < path.size(); ++i) {
        const int a = x.d_wd(u, path[i - 1]), b = x.d_wd(u, path[i]);
        CHECK(a != b);
        if (b > a) rising = true;
        else CHECK_FALSE(rising);
      }
      // Non-positive curvature along the interior.
      const int at_max = std::max(x.d_at(u, v), x.d_at(u, w));
      const int wd_max = std::max(x.d_wd(u, v), x.d_wd(u, w));
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const auto& p = path[i];
        CHECK(x.d_at(u, p) <= at_max);
        CHECK(x.d_wd(u, p) < wd_max);
        CHECK(x.d_wd(u, p) <= wd_max - std::min(x.d_at(v, p), x.d_at(w, p)));
      }
    }
  }
}

TEST_CASE("geodesics extend in both directions") {
  for (auto text : {fixtures::kA2, fixtures::kI25}) {
    auto G = make(text);
    const auto& x = G->cx;
    const auto b2 = x.ball(G->grp.base_vertex(), 2);
    const auto b4 = x.ball(G->grp.base_vertex(), 4);
    for (std::size_t i = 0; i < b2.size(); ++i)
      for (std::size_t j = 0; j < b2.size(); ++j) {
        if (i == j) continue;
        const auto& v = b2.vertices[i];
        const auto& w = b2.vertices[j];
        const int d = x.d_at(v, w);
        // Some neighbour z of w has d_at(v, z) = d + 1, and symmetrically at v.
        const auto& adj_w = b4.adjacency[static_cast<std::size_t>(b4.index_of(w))];
        const auto& adj_v = b4.adjacency[static_cast<std::size_t>(b4.index_of(v))];
        CHECK(std::any_of(adj_w.begin(), adj_w.end(),
                          [&](int z) { return x.d_at(v, b4.vertices[static_cast<std::size_t>(z)]) == d + 1; }));
        CHECK(std::any_of(adj_v.begin(), adj_v.end(),
                          [&](int z) { return x.d_at(w, b4.vertices[static_cast<std::size_t>(z)]) == d + 1; }));
      }
  }
}

TEST_CASE("simplices and cyclic order") {
  auto G = make(fixtures::kA2);
  const auto& x = G->cx;
  const auto star = G->grp.base_vertex();
  CHECK_FALSE(x.is_simplex(std::vector<GVertex>{star, G->v("a"), G->v("a.ab")}));
  const std::vector<GVertex> tri{star, G->v("ab"), G->v("a")};
  CHECK(x.is_simplex(tri));
  const auto cyc = x.cyclic_order(tri);
  CHECK(cyc == std::vector<GVertex>{star, G->v("a"), G->v("ab")});
  CHECK_THROWS_AS(x.cyclic_order(std::vector<GVertex>{star, G->v("a.a")}), Error);
  CHECK_THROWS_AS(x.is_simplex(std::vector<GVertex>{}), Error);

  // Translating the simplex rotates its cyclic order.
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = fixtures::random_element(*G, rng, 3);
    std::vector<GVertex> moved;
    for (const auto& v : cyc) moved.push_back(G->grp.act(h, v));
    std::rotate(moved.begin(), moved.begin() + trial % 3, moved.end());
    const auto c2 = x.cyclic_order(moved);
    std::vector<GVertex> expect;
    for (const auto& v : cyc) expect.push_back(G->grp.act(h, v));
    auto it = std::find(expect.begin(), expect.end(), c2[0]);
    std::rotate(expect.begin(), it, expect.end());
    CHECK(c2 == expect);
  }
}

TEST_CASE("dimension of the complex") {
  for (auto text : {fixtures::kA2, fixtures::kI24, fixtures::kA3}) {
    auto G = make(text);
    const auto l = G->cx.links(G->grp.base_vertex());
    // Simplices through * are chains of atoms; the top one has delta vertices.
    CHECK(l.ascending.complex().dimension() + 2 == G->sys.delta_length());
  }
}

TEST_CASE("link examples") {
  auto G = make(fixtures::kA2);
  const auto& x = G->cx;
  const auto at_star = x.links(G->grp.base_vertex());
  CHECK(at_star.pivot == G->g.delta());
  CHECK(at_star.descending.members.empty());
  REQUIRE(at_star.ascending.members.size() == 4);
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : at_star.ascending.edges) {
    auto a = G->str(at_star.ascending.members[static_cast<std::size_t>(u)]);
    auto b = G->str(at_star.ascending.members[static_cast<std::size_t>(v)]);
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  CHECK(edges == std::set<std::pair<std::string, std::string>>{{"a", "ab"}, {"b", "ba"}});
  const auto h = reduced_homology(at_star.ascending.complex());
  CHECK(h.sphere(0));
  CHECK(h.betti == std::vector<std::int64_t>{1, 0});
  CHECK(reduced_homology(at_star.descending.complex()).empty);

  const auto at_a = x.links(G->v("a"));
  CHECK(G->str(at_a.pivot) == "ba");
  REQUIRE(at_a.descending.members.size() == 1);
  CHECK(G->str(at_a.descending.members[0]) == "ba");
  CHECK(reduced_homology(at_a.descending.complex()).acyclic());
}

TEST_CASE("links: pivots, cones and homology") {
  for (auto text : {fixtures::kA2, fixtures::kI24, fixtures::kA3}) {
    auto G = make(text);
    const auto& x = G->cx;
    const int d = G->sys.rank() - 1;
    const auto b = x.ball(G->grp.base_vertex(), 2);
    const auto census = link_census(x, b.vertices, Exec::Parallel);
    for (const auto& rec : census) {
      // Descending membership matches the wordnorm drop.
      const auto l = x.links(rec.vertex);
      for (Atom m : l.descending.members) {
        const auto nb = G->grp.act(G->grp.lift(rec.vertex), GVertex{G->g.from_normal({m})});
        CHECK(x.wordnorm(nb) < x.wordnorm(rec.vertex));
      }
      for (Atom m : l.ascending.members) {
        const auto nb = G->grp.act(G->grp.lift(rec.vertex), GVertex{G->g.from_normal({m})});
        CHECK(x.wordnorm(nb) > x.wordnorm(rec.vertex));
      }
      if (rec.vertex.pos.empty()) {
        CHECK(rec.descending.empty);
      } else {
        CHECK(rec.descending_cone);
        CHECK(rec.descending.acyclic());
      }
      CHECK((rec.ascending.acyclic() || rec.ascending.sphere(d - 1)));
    }
  }
}

TEST_CASE("ascending link shape is decided by the support of the pivot") {
  // full support: sphere of dimension rank-2; otherwise a cone (acyclic)
  for (const char* text : {fixtures::kA2, fixtures::kA3, fixtures::kI25}) {
    auto G = make(text);
    const Ball b = G->cx.ball(G->grp.base_vertex(), 2);
    const int rank = G->sys.rank();
    int spheres = 0, cones = 0;
    for (const auto& v : b.vertices) {
      const Links l = G->cx.links(v);
      std::set<int> support(G->sys.word(l.pivot.elt).begin(), G->sys.word(l.pivot.elt).end());
      const auto h = reduced_homology(l.ascending.complex());
      if (static_cast<int>(support.size()) == rank) {
        CHECK(h.sphere(rank - 2));
        ++spheres;
      } else {
        CHECK(!h.empty);
        CHECK(h.acyclic());
        ++cones;
      }
    }
    CHECK(spheres > 0);
    CHECK(cones > 0);
  }
}

TEST_CASE("link census: serial and parallel agree") {
  auto G = make(fixtures::kA3);
  const auto b = G->cx.ball(G->grp.base_vertex(), 1);
  const auto s = link_census(G->cx, b.vertices, Exec::Serial);
  const auto p = link_census(G->cx, b.vertices, Exec::Parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].vertex == p[i].vertex);
    CHECK(s[i].pivot == p[i].pivot);
    CHECK(s[i].ascending.betti == p[i].ascending.betti);
    CHECK(s[i].descending.betti == p[i].descending.betti);
  }
}

TEST_CASE("centers") {
  auto G = make(fixtures::kA2);
  const auto& x = G->cx;
  const auto star = G->grp.base_vertex();
  const auto search = x.ball(star, 2);
  const auto one = x.center(std::vector<GVertex>{star}, search);
  CHECK(one.radius == 0);
  CHECK(one.centers == std::vector<GVertex>{star});
  CHECK(one.interior);
  const auto two = x.center(std::vector<GVertex>{star, G->v("a")}, search);
  CHECK(two.radius == 1);
  CHECK(std::count(two.centers.begin(), two.centers.end(), G->v("a")) == 1);
  CHECK(x.is_simplex(two.centers));
  CHECK_THROWS_AS(x.center(std::vector<GVertex>{}, search), Error);

  // Orbit of * under the order-3 element aD.
  const auto g = G->el("aD");
  std::vector<GVertex> orbit;
  for (int i = 0; i < 3; ++i) orbit.push_back(G->grp.to_vertex(G->grp.pow(g, i)));
  const auto c = x.center(orbit, search);
  CHECK(x.is_simplex(c.centers));
  for (const auto& v : c.centers) CHECK(std::count(c.centers.begin(), c.centers.end(), G->grp.act(g, v)) == 1);
}

TEST_CASE("centers: exhaustive search agrees") {
  std::mt19937 rng(43);
  auto G = make(fixtures::kA2);
  const auto& x = G->cx;
  const auto search = x.ball(G->grp.base_vertex(), 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<GVertex> t;
    for (int i = 0; i < 3; ++i) t.push_back(fixtures::random_vertex(*G, rng, 1));
    const auto got = center_search(x, t, search, Exec::Parallel);
    const auto ref = center_search(x, t, search, Exec::Serial);
    CHECK(got.radius == ref.radius);
    CHECK(got.centers == ref.centers);
    int best = 1 << 30;
    for (const auto& z : search.vertices) {
      int worst = 0;
      for (const auto& v : t) worst = std::max(worst, x.d_wd(v, z));
      best = std::min(best, worst);
    }
    CHECK(got.radius == best);
    if (got.centers.size() > 1) CHECK(x.is_simplex(got.centers));
    // Every center is within d_at <= radius of *, hence inside the search
    // ball, so descent must find the same set.
    const auto global = x.global_center(t, G->grp.base_vertex());
    CHECK(global.radius == got.radius);
    CHECK(global.centers == got.centers);
  }
}

TEST_CASE("displacement and minsets") {
  auto G = make(fixtures::kA2);
  const auto& x = G->cx;
  const auto star = G->grp.base_vertex();
  CHECK(x.displacement(G->el("a"), star) == 1);
  const auto search = x.ball(star, 2);
  const auto ms = x.minset_in(G->el("a"), search);
  CHECK(ms.displacement == 1);
  CHECK(std::count(ms.vertices.begin(), ms.vertices.end(), star) == 1);

  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = fixtures::random_element(*G, rng, 2);
    const int d0 = x.displacement(g, star);
    for (const auto& v : search.vertices) CHECK((x.displacement(g, v) - d0) % 3 == 0);
    const auto m = minset_search(x, g, search, Exec::Parallel);
    CHECK(m.vertices == minset_search(x, g, search, Exec::Serial).vertices);
    // Geodesics between minset members stay in the minset.
    std::set<GVertex> members(m.vertices.begin(), m.vertices.end());
    for (const auto& v : m.vertices)
      for (const auto& w : m.vertices)
        for (const auto& p : x.geodesic(v, w))
          if (search.contains(p)) CHECK(members.count(p) == 1);
  }
}

TEST_CASE("ball kernels: serial and parallel agree") {
  auto G = make(fixtures::kA3);
  const auto s = build_ball(G->cx, G->v("ab"), 2, Exec::Serial);
  const auto p = build_ball(G->cx, G->v("ab"), 2, Exec::Parallel);
  CHECK(s.vertices == p.vertices);
  CHECK(s.dist == p.dist);
  CHECK(s.adjacency == p.adjacency);
  CHECK(s.edges == p.edges);
  const auto ds = distance_matrix(G->cx, s.vertices, Exec::Serial);
  const auto dp = distance_matrix(G->cx, s.vertices, Exec::Parallel);
  CHECK(ds.d_at == dp.d_at);
  CHECK(ds.d_wd == dp.d_wd);
}

TEST_CASE("exports") {
  auto G = make(fixtures::kA2);
  const auto b = G->cx.ball(G->grp.base_vertex(), 1);
  const auto dot = ball_dot(G->g, b);
  CHECK(dot.rfind("digraph ball {", 0) == 0);
  CHECK(dot.find("label=\"ab\"") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(b.edges.size()));
  const auto csv = ball_csv(G->cx, b);
  CHECK(csv.rfind("from,to,d_at,d_wd\n", 0) == 0);
  CHECK(csv.find("\n*,a,1,1\n") != std::string::npos);
  CHECK(csv.find("\na,*,1,2\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 26);
}
