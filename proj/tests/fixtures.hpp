#pragma once

#include <memory>
#include <random>
#include <string>

#include "fga/artin.hpp"
#include "fga/dynamics.hpp"
#include "fga/text.hpp"

namespace fixtures {

inline constexpr const char* kA1 = "generators: a\n";
inline constexpr const char* kA2 = "generators: a b\nm: a b 3\n";
inline constexpr const char* kA3 = "generators: a b c\nm: a b 3\nm: b c 3\n";
inline constexpr const char* kI24 = "generators: a b\nm: a b 4\n";
inline constexpr const char* kI25 = "generators: a b\nm: a b 5\n";
inline constexpr const char* kZ2 = "generators: a b\n";
inline constexpr const char* kB3 = "generators: a b c\nm: a b 4\nm: b c 3\n";
inline constexpr const char* kH3 = "generators: a b c\nm: a b 5\nm: b c 3\n";

/// System, normal-form calculus, group arithmetic, complex and dynamics
/// bundled together; each layer points into the previous one, so the bundle
/// is pinned in place.
struct Group {
  explicit Group(const char* text)
      : sys(fga::build_system(fga::parse_group_string(text))), g(sys), grp(g), cx(grp), dyn(cx) {}
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  fga::ArtinElement el(const std::string& s) const { return fga::parse_element(grp, s); }
  fga::GVertex v(const std::string& s) const { return fga::parse_vertex(grp, s); }
  fga::Atom atom(const std::string& word) const {
    fga::Element e = fga::kIdentity;
    for (int s : fga::parse_generator_word(sys.matrix(), word)) e = sys.right_mult(e, s);
    return fga::Atom{e};
  }
  fga::PositiveElement pos(const std::string& s) const {
    auto x = el(s);
    std::vector<fga::Atom> w(static_cast<std::size_t>(x.k), g.delta());
    w.insert(w.end(), x.pos.atoms().begin(), x.pos.atoms().end());
    return g.normalize(w);
  }
  std::string str(const fga::PositiveElement& p) const { return fga::render(g, p); }
  std::string str(const fga::ArtinElement& x) const { return fga::render(g, x); }
  std::string str(const fga::GVertex& x) const { return fga::render(g, x); }
  std::string str(fga::Atom a) const { return fga::render_atom(g, a); }

  fga::CoxeterSystem sys;
  fga::Garside g;
  fga::ArtinGroup grp;
  fga::Complex cx;
  fga::Dynamics dyn;
};

inline std::unique_ptr<Group> make(const char* text) { return std::make_unique<Group>(text); }

/// Random element Delta^k * (product of `atoms` random atoms).
inline fga::ArtinElement random_element(const Group& G, std::mt19937& rng, int atoms, int kmin = -2, int kmax = 2) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(G.sys.order()) - 1);
  std::uniform_int_distribution<int> kd(kmin, kmax);
  std::vector<fga::Atom> word;
  for (int i = 0; i < atoms; ++i) word.push_back(fga::Atom{pick(rng)});
  return G.grp.canonical(kd(rng), word);
}

inline fga::GVertex random_vertex(const Group& G, std::mt19937& rng, int atoms) {
  return G.grp.to_vertex(random_element(G, rng, atoms, 0, 0));
}

}  // namespace fixtures
