#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fga {

using Element = std::int32_t;   // dense index into W, identity is 0
using GenSet = std::uint32_t;   // bitmask over generators

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultCap = 200'000;
inline constexpr int kMaxGenerators = 32;

/// Symmetric Coxeter matrix over named generators.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Every unordered pair defaults to m = 2.
  explicit CoxeterMatrix(std::vector<std::string> generators);

  void set(int s, int t, int m);
  int operator()(int s, int t) const { return m_[static_cast<std::size_t>(s * rank() + t)]; }
  int rank() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generators() const noexcept { return names_; }
  int index_of(const std::string& name) const;  // -1 if absent

 private:
  std::vector<std::string> names_;
  std::vector<int> m_;
};

struct Irreducibility {
  bool irreducible = false;
  std::vector<std::vector<int>> components;  // generator indices, each sorted
};

/// Connected components of the Coxeter diagram (edges where m >= 3).
Irreducibility is_irreducible(const CoxeterMatrix& matrix);

/// Name of the finite type of one connected diagram component (e.g. "A3",
/// "I2(5)"); throws NotFiniteType if the component is not of finite type.
std::string classify_component(const CoxeterMatrix& matrix, std::span<const int> component);

enum class Side { Left, Right };

/// A fully enumerated finite Coxeter group. Immutable after construction.
class CoxeterSystem {
 public:
  CoxeterSystem(CoxeterMatrix matrix, std::size_t cap = kDefaultCap);

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  int rank() const noexcept { return matrix_.rank(); }
  std::size_t order() const noexcept { return length_.size(); }
  Element delta() const noexcept { return delta_; }
  int delta_length() const noexcept { return length_[static_cast<std::size_t>(delta_)]; }
  std::string type_name() const;
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  bool irreducible() const noexcept { return components_.size() == 1; }

  Element generator(int s) const { return right_mult(kIdentity, s); }
  Element right_mult(Element w, int s) const { return right_[idx(w, s)]; }
  Element left_mult(int s, Element w) const { return left_[idx(w, s)]; }
  Element mul(Element u, Element v) const;
  Element inverse(Element w) const { return inverse_[static_cast<std::size_t>(w)]; }
  int length(Element w) const { return length_[static_cast<std::size_t>(w)]; }

  GenSet descents(Element w, Side side) const {
    return side == Side::Left ? left_desc_[static_cast<std::size_t>(w)]
                              : right_desc_[static_cast<std::size_t>(w)];
  }
  Element bar(Element w) const { return bar_[static_cast<std::size_t>(w)]; }
  int bar_generator(int s) const { return gen_bar_[static_cast<std::size_t>(s)]; }

  /// Lexicographically least reduced word, as generator indices.
  const std::vector<int>& word(Element w) const { return words_[static_cast<std::size_t>(w)]; }
  std::string word_string(Element w) const;

  /// Right weak order: u <= w iff l(u) + l(u^-1 w) = l(w), i.e. u is a
  /// prefix of w as a positive atom.
  bool weak_le(Element u, Element w) const;

 private:
  std::size_t idx(Element w, int s) const {
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(s);
  }
  void enumerate(std::size_t cap);
  void derive_tables();

  CoxeterMatrix matrix_;
  std::vector<std::vector<int>> components_;
  std::vector<Element> right_, left_, inverse_, bar_;
  std::vector<int> length_;
  std::vector<GenSet> left_desc_, right_desc_;
  std::vector<int> gen_bar_;
  std::vector<std::vector<int>> words_;
  Element delta_ = 0;
};

/// Build and enumerate W; fails with NotFiniteType or CapExceeded.
CoxeterSystem build_system(const CoxeterMatrix& matrix, std::size_t cap = kDefaultCap);

}  // namespace fga
