#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fga {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero invariant factors of an integer matrix (Smith normal form
/// diagonal, each dividing the next). Elimination pivots on the entry of
/// least absolute value; entries stay exact.
std::vector<BigInt> smith_invariants(IntMatrix a);

/// Clique complex of a graph on vertices 0..n-1. simplices[k] lists the
/// k-simplices as sorted vertex lists, in lexicographic order.
struct FlagComplex {
  int vertex_count = 0;
  std::vector<std::vector<std::vector<int>>> simplices;

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t count(int k) const {
    return k >= 0 && k <= dimension() ? simplices[static_cast<std::size_t>(k)].size() : 0;
  }
};

FlagComplex flag_complex(int n, const std::vector<std::pair<int, int>>& edges);

/// Reduced integral homology. For the empty complex only `empty` is set
/// (its reduced homology is Z in degree -1).
struct HomologyProfile {
  bool empty = false;
  std::vector<std::int64_t> betti;          // reduced Betti numbers, degree 0 upward
  std::vector<std::vector<BigInt>> torsion;  // torsion coefficients per degree

  bool torsion_free() const;
  /// All reduced groups vanish (homology of a point).
  bool acyclic() const;
  /// Reduced homology of S^k: Z in degree k, nothing else.
  bool sphere(int k) const;
};

HomologyProfile reduced_homology(const FlagComplex& complex);

}  // namespace fga
