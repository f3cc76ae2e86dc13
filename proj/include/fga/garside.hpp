#pragma once

#include <atomic>
#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "fga/coxeter.hpp"

namespace fga {

/// A simple element of the positive monoid, identified with its image in W.
struct Atom {
  Element elt = kIdentity;

  constexpr Atom() = default;
  constexpr explicit Atom(Element e) : elt(e) {}
  friend constexpr auto operator<=>(Atom, Atom) = default;
};

/// Left-greedy normal form of an element of the positive monoid. Any Delta
/// atoms sit in a prefix; the identity is the empty list.
class PositiveElement {
 public:
  PositiveElement() = default;

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  Atom operator[](std::size_t i) const { return atoms_[i]; }

  friend bool operator==(const PositiveElement&, const PositiveElement&) = default;
  friend auto operator<=>(const PositiveElement& a, const PositiveElement& b) { return a.atoms_ <=> b.atoms_; }

 private:
  friend class Garside;
  explicit PositiveElement(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<Atom> atoms_;
};

/// Normal-form calculus on the positive monoid of the Artin group attached to
/// a CoxeterSystem. Holds a reference to the system, which must outlive it.
class Garside {
 public:
  explicit Garside(const CoxeterSystem& system);

  const CoxeterSystem& system() const noexcept { return *sys_; }
  Atom delta() const noexcept { return Atom{sys_->delta()}; }
  Atom identity() const noexcept { return Atom{kIdentity}; }
  Atom generator(int s) const { return Atom{sys_->generator(s)}; }
  int delta_length() const noexcept { return sys_->delta_length(); }
  int length(Atom a) const { return sys_->length(a.elt); }

  /// All atoms other than 1 and Delta, sorted by (length, word).
  const std::vector<Atom>& proper_atoms() const noexcept { return proper_atoms_; }

  // Atom lattice (right weak order on W).
  bool atom_divides(Atom a, Atom b) const { return sys_->weak_le(a.elt, b.elt); }
  Atom atom_meet(Atom a, Atom b) const;
  Atom atom_join(Atom a, Atom b) const;
  Atom right_complement(Atom a) const;  // a * a^* = Delta
  Atom left_complement(Atom a) const;   // ^*a * a = Delta
  Atom bar(Atom a) const { return Atom{sys_->bar(a.elt)}; }

  /// right_descents(A) contains left_descents(B).
  bool is_normal_pair(Atom a, Atom b) const;
  bool is_normal(std::span<const Atom> atoms) const;

  /// Maximal atom left-dividing the product of the list.
  Atom alpha(std::span<const Atom> word) const;
  PositiveElement normalize(std::span<const Atom> word) const;
  /// Wraps a list already known to be a normal form (checked).
  PositiveElement from_normal(std::vector<Atom> atoms) const;
  PositiveElement from_generators(std::span<const int> gens) const;
  PositiveElement delta_power(int k) const;
  PositiveElement concat(const PositiveElement& x, const PositiveElement& y) const;

  PositiveElement meet(const PositiveElement& x, const PositiveElement& y) const;
  PositiveElement join(const PositiveElement& x, const PositiveElement& y) const;
  bool divides(const PositiveElement& x, const PositiveElement& y) const;
  /// x with the atom a cancelled on the left; requires a to divide x.
  PositiveElement cancel_left(const PositiveElement& x, Atom a) const;
  /// z with x = y z; requires y to divide x.
  PositiveElement cancel_left(const PositiveElement& x, const PositiveElement& y) const;
  /// The atom C with (A < b u  <=>  C < u) for every positive u.
  Atom complement_under(Atom a, const PositiveElement& b) const;
  /// z with x z = Delta^k; requires x to have at most k atoms.
  PositiveElement complement_to_delta_power(const PositiveElement& x, int k) const;

  PositiveElement reverse(const PositiveElement& x) const;
  PositiveElement bar(const PositiveElement& x) const;

  int word_length(const PositiveElement& x) const;
  std::size_t leading_deltas(const PositiveElement& x) const;

 private:
  // Make (p, q) a normal pair by sliding generators from q into p; returns
  // true if anything moved.
  bool slide(Atom& p, Atom& q) const;

  const CoxeterSystem* sys_;
  std::vector<Atom> proper_atoms_;
  // Write-once memo for atom meets; -1 means not yet computed. Only used
  // for small groups.
  std::unique_ptr<std::atomic<Element>[]> meet_memo_;
  std::size_t memo_n_ = 0;
};

}  // namespace fga
