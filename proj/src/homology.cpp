#include "fga/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fga {

namespace {

struct Overflow {};

// a - q * b, with overflow detection on the machine-word path.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t p = 0, r = 0;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

template <class T>
T abs_of(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Diagonal of a diagonalisation by unimodular row and column operations.
template <class T>
std::vector<T> diagonalise(std::vector<std::vector<T>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<T> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: least nonzero absolute value in the remaining block.
    std::size_t pi = m, pj = n;
    T best = 0;
    for (std::size_t i = t; i < m && !(best == 1); ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == m || abs_of(a[i][j]) < best)) {
          pi = i, pj = j, best = abs_of(a[i][j]);
          if (best == 1) break;
        }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = t; i < m; ++i) std::swap(a[i][t], a[i][pj]);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const T q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j)
          if (a[t][j] != 0) a[i][j] = sub_mul(a[i][j], q, a[t][j]);
        dirty |= a[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const T q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i)
          if (a[i][t] != 0) a[i][j] = sub_mul(a[i][j], q, a[i][t]);
        dirty |= a[t][j] != 0;
      }
      if (!dirty) break;
      // A remainder survived; it is smaller than the pivot, so swap it in.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < m; ++i)
        if (a[i][t] != 0 && abs_of(a[i][t]) < abs_of(a[bi][bj])) bi = i, bj = t;
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[t][j] != 0 && abs_of(a[t][j]) < abs_of(a[bi][bj])) bi = t, bj = j;
      if (bi != t) std::swap(a[t], a[bi]);
      if (bj != t)
        for (std::size_t i = t; i < m; ++i) std::swap(a[i][t], a[i][bj]);
    }
    diag.push_back(abs_of(a[t][t]));
  }
  return diag;
}

// Turn a diagonal into invariant factors by replacing pairs with (gcd, lcm).
std::vector<BigInt> invariant_factors(std::vector<BigInt> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] == 1) break;
      BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      if (g == d[i]) continue;
      d[j] = d[i] / g * d[j];
      d[i] = g;
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::vector<BigInt> smith_invariants(IntMatrix a) {
  std::vector<BigInt> diag;
  // Boundary matrices rarely leave machine range; try that first.
  try {
    std::vector<std::vector<std::int64_t>> small(a.size());
    bool fits = true;
    for (std::size_t i = 0; i < a.size() && fits; ++i) {
      small[i].reserve(a[i].size());
      for (const auto& x : a[i]) {
        if (x > INT32_MAX || x < INT32_MIN) {
          fits = false;
          break;
        }
        small[i].push_back(static_cast<std::int64_t>(x));
      }
    }
    if (!fits) throw Overflow{};
    for (auto x : diagonalise(std::move(small))) diag.emplace_back(x);
  } catch (const Overflow&) {
    diag = diagonalise(std::move(a));
  }
  return invariant_factors(std::move(diag));
}

FlagComplex flag_complex(int n, const std::vector<std::pair<int, int>>& edges) {
  FlagComplex fc;
  fc.vertex_count = n;
  if (n == 0) return fc;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  fc.simplices.emplace_back();
  for (int v = 0; v < n; ++v) fc.simplices[0].push_back({v});
  while (true) {
    std::vector<std::vector<int>> next;
    for (const auto& s : fc.simplices.back())
      for (int v = s.back() + 1; v < n; ++v) {
        bool ok = true;
        for (int u : s) ok = ok && adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (!ok) continue;
        next.push_back(s);
        next.back().push_back(v);
      }
    if (next.empty()) break;
    fc.simplices.push_back(std::move(next));
  }
  return fc;
}

bool HomologyProfile::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

bool HomologyProfile::acyclic() const {
  return !empty && torsion_free() && std::all_of(betti.begin(), betti.end(), [](auto b) { return b == 0; });
}

bool HomologyProfile::sphere(int k) const {
  if (k < 0) return empty;
  if (empty || !torsion_free()) return false;
  for (std::size_t i = 0; i < betti.size(); ++i)
    if (betti[i] != (static_cast<int>(i) == k ? 1 : 0)) return false;
  return static_cast<std::size_t>(k) < betti.size();
}

HomologyProfile reduced_homology(const FlagComplex& fc) {
  HomologyProfile out;
  if (fc.vertex_count == 0) {
    out.empty = true;
    return out;
  }
  const int top = fc.dimension();
  // ranks[k] = rank of the boundary C_k -> C_{k-1}; k = 0 is the augmentation.
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top + 2), 0);
  out.torsion.assign(static_cast<std::size_t>(top + 1), {});
  ranks[0] = 1;
  for (int k = 1; k <= top; ++k) {
    const auto& faces = fc.simplices[static_cast<std::size_t>(k - 1)];
    const auto& cells = fc.simplices[static_cast<std::size_t>(k)];
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
    IntMatrix d(faces.size(), std::vector<BigInt>(cells.size(), 0));
    for (std::size_t j = 0; j < cells.size(); ++j)
      for (std::size_t i = 0; i < cells[j].size(); ++i) {
        auto face = cells[j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        d[index.at(face)][j] = (i % 2 == 0) ? 1 : -1;
      }
    const auto inv = smith_invariants(std::move(d));
    ranks[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(inv.size());
    for (const auto& x : inv)
      if (x > 1) out.torsion[static_cast<std::size_t>(k - 1)].push_back(x);
  }
  for (int k = 0; k <= top; ++k)
    out.betti.push_back(static_cast<std::int64_t>(fc.count(k)) - ranks[static_cast<std::size_t>(k)] -
                        ranks[static_cast<std::size_t>(k + 1)]);
  return out;
}

}  // namespace fga
