#include "fga/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "fga/error.hpp"
#include "fga/exact_real.hpp"

namespace fga {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators)
    : names_(std::move(generators)), m_(names_.size() * names_.size(), 2) {
  if (names_.empty()) throw Error(ErrorKind::GroupFile, "at least one generator is required");
  if (rank() > kMaxGenerators) throw Error(ErrorKind::GroupFile, "too many generators");
  for (int s = 0; s < rank(); ++s) m_[static_cast<std::size_t>(s * rank() + s)] = 1;
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error(ErrorKind::GroupFile, "duplicate generator '" + names_[i] + "'");
}

void CoxeterMatrix::set(int s, int t, int m) {
  if (s < 0 || t < 0 || s >= rank() || t >= rank()) throw Error(ErrorKind::GroupFile, "generator index out of range");
  if (s == t) throw Error(ErrorKind::GroupFile, "m(s,s) is fixed at 1");
  if (m < 2) throw Error(ErrorKind::GroupFile, "m(s,t) must be >= 2 for s != t");
  m_[static_cast<std::size_t>(s * rank() + t)] = m;
  m_[static_cast<std::size_t>(t * rank() + s)] = m;
}

int CoxeterMatrix::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Irreducibility is_irreducible(const CoxeterMatrix& matrix) {
  const int n = matrix.rank();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  Irreducibility out;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.components.size());
    std::vector<int> members;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      members.push_back(s);
      for (int t = 0; t < n; ++t) {
        if (t != s && matrix(s, t) >= 3 && comp[static_cast<std::size_t>(t)] < 0) {
          comp[static_cast<std::size_t>(t)] = id;
          stack.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  out.irreducible = out.components.size() == 1;
  return out;
}

std::string classify_component(const CoxeterMatrix& matrix, std::span<const int> component) {
  const int n = static_cast<int>(component.size());
  auto fail = [&](const std::string& why) -> std::string {
    throw Error(ErrorKind::NotFiniteType, "Coxeter diagram is not of finite type: " + why);
  };
  if (n == 1) return "A1";
  if (n == 2) {
    const int m = matrix(component[0], component[1]);
    if (m == 3) return "A2";
    if (m == 4) return "B2";
    if (m == 6) return "G2";
    return "I2(" + std::to_string(m) + ")";
  }
  // Local adjacency over the component.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  int edges = 0;
  std::vector<int> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = matrix(component[static_cast<std::size_t>(i)], component[static_cast<std::size_t>(j)]);
      if (m >= 3) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
        ++edges;
        labels.push_back(m);
      }
    }
  if (edges != n - 1) return fail("diagram contains a cycle");
  int big = 0;
  int big_label = 3;
  for (int m : labels)
    if (m > 3) {
      ++big;
      big_label = m;
    }
  if (big > 1) return fail("more than one edge label above 3");
  std::vector<int> deg(static_cast<std::size_t>(n));
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    deg[static_cast<std::size_t>(i)] = static_cast<int>(adj[static_cast<std::size_t>(i)].size());
    if (deg[static_cast<std::size_t>(i)] > 3) return fail("vertex of degree above 3");
    if (deg[static_cast<std::size_t>(i)] == 3) {
      if (branch >= 0) return fail("more than one branch point");
      branch = i;
    }
  }
  auto label = [&](int i, int j) {
    return matrix(component[static_cast<std::size_t>(i)], component[static_cast<std::size_t>(j)]);
  };
  if (branch >= 0) {
    if (big > 0) return fail("branched diagram with a label above 3");
    std::vector<int> arms;
    for (int nb : adj[static_cast<std::size_t>(branch)]) {
      int len = 1, prev = branch, cur = nb;
      while (deg[static_cast<std::size_t>(cur)] == 2) {
        int next = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                                : adj[static_cast<std::size_t>(cur)][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    // Finite iff 1/(p+1) + 1/(q+1) + 1/(r+1) > 1.
    const long p = arms[0] + 1, q = arms[1] + 1, r = arms[2] + 1;
    if (q * r + p * r + p * q <= p * q * r) return fail("branched diagram of affine or hyperbolic type");
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    return "E" + std::to_string(n);
  }
  // A path: find an end and walk it.
  int end = 0;
  while (deg[static_cast<std::size_t>(end)] != 1) ++end;
  std::vector<int> path{end};
  int prev = -1, cur = end;
  while (true) {
    int next = -1;
    for (int nb : adj[static_cast<std::size_t>(cur)])
      if (nb != prev) next = nb;
    if (next < 0) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  if (big == 0) return "A" + std::to_string(n);
  int pos = -1;  // edge index along the path carrying the big label
  for (int i = 0; i + 1 < n; ++i)
    if (label(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)]) > 3) pos = i;
  const bool at_end = pos == 0 || pos == n - 2;
  if (big_label == 4) {
    if (at_end) return "B" + std::to_string(n);
    if (n == 4) return "F4";
    return fail("label 4 in the interior of a long path");
  }
  if (big_label == 5 && at_end && (n == 3 || n == 4)) return "H" + std::to_string(n);
  return fail("label " + std::to_string(big_label) + " on a diagram with " + std::to_string(n) + " nodes");
}

namespace {

using Matrix = std::vector<ExactReal>;  // row-major rank x rank

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<std::int64_t> key_of(const Matrix& m) {
  std::vector<std::int64_t> key;
  for (const auto& x : m) key.insert(key.end(), x.coefficients().begin(), x.coefficients().end());
  return key;
}

}  // namespace

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::size_t cap) : matrix_(std::move(matrix)) {
  const auto irr = is_irreducible(matrix_);
  for (const auto& comp : irr.components) classify_component(matrix_, comp);
  components_ = irr.components;
  enumerate(cap);
  derive_tables();
}

std::string CoxeterSystem::type_name() const {
  std::string out;
  for (const auto& comp : components_) {
    if (!out.empty()) out += " x ";
    out += classify_component(matrix_, comp);
  }
  return out;
}

void CoxeterSystem::enumerate(std::size_t cap) {
  const int n = rank();
  const auto un = static_cast<std::size_t>(n);
  int L = 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (matrix_(s, t) >= 3) L = std::lcm(L, matrix_(s, t));
  auto ring = std::make_shared<const CyclotomicRing>(2 * L);

  // c[s][t] = 2 cos(pi / m(s,t)), zero for commuting pairs.
  std::vector<ExactReal> c(un * un, ExactReal(ring, 0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t && matrix_(s, t) >= 3) c[static_cast<std::size_t>(s * n + t)] = ExactReal::two_cos(ring, L / matrix_(s, t));

  const ExactReal zero(ring, 0), one(ring, 1);
  Matrix ident(un * un, zero);
  for (std::size_t i = 0; i < un; ++i) ident[i * un + i] = one;

  std::vector<Matrix> mats{ident};
  std::unordered_map<std::vector<std::int64_t>, Element, KeyHash> index;
  index.emplace(key_of(ident), 0);
  length_.push_back(0);

  // Right multiplication by s: column t += c(s,t) * column s, column s negated.
  auto times_gen = [&](const Matrix& m, int s) {
    Matrix r = m;
    const auto us = static_cast<std::size_t>(s);
    for (std::size_t row = 0; row < un; ++row) {
      const ExactReal& ms = m[row * un + us];
      for (std::size_t t = 0; t < un; ++t) {
        if (t == us) r[row * un + t] = -ms;
        else if (!c[us * un + t].is_zero()) r[row * un + t] = m[row * un + t] + c[us * un + t] * ms;
      }
    }
    return r;
  };
  // Left multiplication by s: row s becomes -row s + sum_t c(s,t) row t.
  auto gen_times = [&](int s, const Matrix& m) {
    Matrix r = m;
    const auto us = static_cast<std::size_t>(s);
    for (std::size_t col = 0; col < un; ++col) {
      ExactReal acc = -m[us * un + col];
      for (std::size_t t = 0; t < un; ++t)
        if (t != us && !c[us * un + t].is_zero()) acc = acc + c[us * un + t] * m[t * un + col];
      r[us * un + col] = acc;
    }
    return r;
  };

  right_.clear();
  for (std::size_t w = 0; w < mats.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      Matrix next = times_gen(mats[w], s);
      auto key = key_of(next);
      auto it = index.find(key);
      Element id;
      if (it == index.end()) {
        if (mats.size() >= cap)
          throw Error(ErrorKind::CapExceeded, "Coxeter group has more than " + std::to_string(cap) + " elements");
        id = static_cast<Element>(mats.size());
        index.emplace(std::move(key), id);
        mats.push_back(std::move(next));
        length_.push_back(length_[w] + 1);
      } else {
        id = it->second;
      }
      right_.push_back(id);
    }
  }
  left_.assign(right_.size(), 0);
  for (std::size_t w = 0; w < mats.size(); ++w)
    for (int s = 0; s < n; ++s) {
      auto it = index.find(key_of(gen_times(s, mats[w])));
      left_[w * un + static_cast<std::size_t>(s)] = it->second;
    }
}

void CoxeterSystem::derive_tables() {
  const std::size_t N = length_.size();
  const int n = rank();
  left_desc_.assign(N, 0);
  right_desc_.assign(N, 0);
  delta_ = 0;
  for (std::size_t w = 0; w < N; ++w) {
    for (int s = 0; s < n; ++s) {
      if (length_[static_cast<std::size_t>(right_mult(static_cast<Element>(w), s))] < length_[w])
        right_desc_[w] |= GenSet{1} << s;
      if (length_[static_cast<std::size_t>(left_mult(s, static_cast<Element>(w)))] < length_[w])
        left_desc_[w] |= GenSet{1} << s;
    }
    if (length_[w] > length_[static_cast<std::size_t>(delta_)]) delta_ = static_cast<Element>(w);
  }

  // Generators ranked by name for the lexicographically least reduced words.
  std::vector<int> by_name(static_cast<std::size_t>(n));
  std::iota(by_name.begin(), by_name.end(), 0);
  std::sort(by_name.begin(), by_name.end(),
            [&](int a, int b) { return matrix_.generators()[static_cast<std::size_t>(a)] < matrix_.generators()[static_cast<std::size_t>(b)]; });

  std::vector<Element> by_length(N);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](Element a, Element b) { return length_[static_cast<std::size_t>(a)] < length_[static_cast<std::size_t>(b)]; });
  words_.assign(N, {});
  for (Element w : by_length) {
    if (w == kIdentity) continue;
    for (int s : by_name) {
      if (left_desc_[static_cast<std::size_t>(w)] & (GenSet{1} << s)) {
        auto& word = words_[static_cast<std::size_t>(w)];
        word.push_back(s);
        const auto& rest = words_[static_cast<std::size_t>(left_mult(s, w))];
        word.insert(word.end(), rest.begin(), rest.end());
        break;
      }
    }
  }

  inverse_.assign(N, 0);
  for (std::size_t w = 0; w < N; ++w) {
    Element acc = kIdentity;
    const auto& word = words_[w];
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = right_mult(acc, *it);
    inverse_[w] = acc;
  }
  bar_.assign(N, 0);
  for (std::size_t w = 0; w < N; ++w) bar_[w] = mul(mul(delta_, static_cast<Element>(w)), delta_);
  gen_bar_.assign(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    const Element b = bar(generator(s));
    for (int t = 0; t < n; ++t)
      if (generator(t) == b) gen_bar_[static_cast<std::size_t>(s)] = t;
  }
}

Element CoxeterSystem::mul(Element u, Element v) const {
  for (int s : word(v)) u = right_mult(u, s);
  return u;
}

bool CoxeterSystem::weak_le(Element u, Element w) const {
  return length(mul(inverse(u), w)) == length(w) - length(u);
}

std::string CoxeterSystem::word_string(Element w) const {
  std::string out;
  for (int s : word(w)) out += matrix_.generators()[static_cast<std::size_t>(s)];
  return out;
}

CoxeterSystem build_system(const CoxeterMatrix& matrix, std::size_t cap) { return CoxeterSystem(matrix, cap); }

}  // namespace fga
