#include "fga/garside.hpp"

#include <algorithm>
#include <stdexcept>

namespace fga {

namespace {
constexpr std::size_t kMemoLimit = 1024;
}

Garside::Garside(const CoxeterSystem& system) : sys_(&system) {
  const auto N = system.order();
  for (std::size_t w = 0; w < N; ++w) {
    const auto e = static_cast<Element>(w);
    if (e != kIdentity && e != system.delta()) proper_atoms_.push_back(Atom{e});
  }
  const auto& names = system.matrix().generators();
  std::sort(proper_atoms_.begin(), proper_atoms_.end(), [&](Atom a, Atom b) {
    if (system.length(a.elt) != system.length(b.elt)) return system.length(a.elt) < system.length(b.elt);
    const auto& wa = system.word(a.elt);
    const auto& wb = system.word(b.elt);
    return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end(), [&](int s, int t) {
      return names[static_cast<std::size_t>(s)] < names[static_cast<std::size_t>(t)];
    });
  });
  if (N <= kMemoLimit) {
    memo_n_ = N;
    meet_memo_ = std::make_unique<std::atomic<Element>[]>(N * N);
    for (std::size_t i = 0; i < N * N; ++i) meet_memo_[i].store(-1, std::memory_order_relaxed);
  }
}

Atom Garside::atom_meet(Atom a, Atom b) const {
  std::atomic<Element>* cell = nullptr;
  if (meet_memo_) {
    cell = &meet_memo_[static_cast<std::size_t>(a.elt) * memo_n_ + static_cast<std::size_t>(b.elt)];
    const Element cached = cell->load(std::memory_order_acquire);
    if (cached >= 0) return Atom{cached};
  }
  // Greedy ascent along covers of the weak order; the common lower bounds
  // form the interval [1, a ^ b], so the ascent stops exactly at the meet.
  Element d = kIdentity;
  bool grew = true;
  while (grew) {
    grew = false;
    const GenSet desc = sys_->descents(d, Side::Right);
    for (int s = 0; s < sys_->rank(); ++s) {
      if (desc & (GenSet{1} << s)) continue;
      const Element up = sys_->right_mult(d, s);
      if (sys_->weak_le(up, a.elt) && sys_->weak_le(up, b.elt)) {
        d = up;
        grew = true;
        break;
      }
    }
  }
  if (cell) cell->store(d, std::memory_order_release);
  return Atom{d};
}

Atom Garside::atom_join(Atom a, Atom b) const {
  // w -> w * w0 reverses the right weak order.
  const Element w0 = sys_->delta();
  const Atom m = atom_meet(Atom{sys_->mul(a.elt, w0)}, Atom{sys_->mul(b.elt, w0)});
  return Atom{sys_->mul(m.elt, w0)};
}

Atom Garside::right_complement(Atom a) const { return Atom{sys_->mul(sys_->inverse(a.elt), sys_->delta())}; }

Atom Garside::left_complement(Atom a) const { return Atom{sys_->mul(sys_->delta(), sys_->inverse(a.elt))}; }

bool Garside::is_normal_pair(Atom a, Atom b) const {
  const GenSet r = sys_->descents(a.elt, Side::Right);
  const GenSet l = sys_->descents(b.elt, Side::Left);
  return (l & ~r) == 0;
}

bool Garside::is_normal(std::span<const Atom> atoms) const {
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i)
    if (!is_normal_pair(atoms[i], atoms[i + 1])) return false;
  for (Atom a : atoms)
    if (a.elt == kIdentity) return false;
  return true;
}

bool Garside::slide(Atom& p, Atom& q) const {
  bool moved = false;
  while (true) {
    const GenSet movable = sys_->descents(q.elt, Side::Left) & ~sys_->descents(p.elt, Side::Right);
    if (movable == 0) return moved;
    int s = 0;
    while (!(movable & (GenSet{1} << s))) ++s;
    p.elt = sys_->right_mult(p.elt, s);
    q.elt = sys_->left_mult(s, q.elt);
    moved = true;
  }
}

Atom Garside::alpha(std::span<const Atom> word) const {
  if (word.empty()) return identity();
  Atom acc = word.back();
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    Atom p = word[i];
    slide(p, acc);
    acc = p;
  }
  return acc;
}

PositiveElement Garside::normalize(std::span<const Atom> word) const {
  std::vector<Atom> atoms;
  atoms.reserve(word.size());
  for (Atom a : word)
    if (a.elt != kIdentity) atoms.push_back(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < atoms.size();) {
      if (slide(atoms[i], atoms[i + 1])) {
        changed = true;
        if (atoms[i + 1].elt == kIdentity) {
          atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i + 1));
          continue;
        }
      }
      ++i;
    }
  }
  return PositiveElement(std::move(atoms));
}

PositiveElement Garside::from_normal(std::vector<Atom> atoms) const {
  if (!is_normal(atoms)) throw std::invalid_argument("from_normal: list is not a left-greedy normal form");
  return PositiveElement(std::move(atoms));
}

PositiveElement Garside::from_generators(std::span<const int> gens) const {
  std::vector<Atom> atoms;
  atoms.reserve(gens.size());
  for (int s : gens) atoms.push_back(generator(s));
  return normalize(atoms);
}

PositiveElement Garside::delta_power(int k) const {
  return PositiveElement(std::vector<Atom>(static_cast<std::size_t>(std::max(k, 0)), delta()));
}

PositiveElement Garside::concat(const PositiveElement& x, const PositiveElement& y) const {
  std::vector<Atom> all = x.atoms();
  all.insert(all.end(), y.atoms().begin(), y.atoms().end());
  return normalize(all);
}

PositiveElement Garside::cancel_left(const PositiveElement& x, Atom a) const {
  if (a.elt == kIdentity) return x;
  if (x.empty() || !atom_divides(a, x[0])) throw std::invalid_argument("cancel_left: atom does not divide");
  std::vector<Atom> rest = x.atoms();
  rest[0] = Atom{sys_->mul(sys_->inverse(a.elt), x[0].elt)};
  return normalize(rest);
}

PositiveElement Garside::cancel_left(const PositiveElement& x, const PositiveElement& y) const {
  PositiveElement r = x;
  for (Atom a : y.atoms()) r = cancel_left(r, a);
  return r;
}

PositiveElement Garside::meet(const PositiveElement& x, const PositiveElement& y) const {
  std::vector<Atom> acc;
  PositiveElement xs = x, ys = y;
  while (!xs.empty() && !ys.empty()) {
    const Atom d = atom_meet(xs[0], ys[0]);
    if (d.elt == kIdentity) break;
    acc.push_back(d);
    xs = cancel_left(xs, d);
    ys = cancel_left(ys, d);
  }
  return normalize(acc);
}

bool Garside::divides(const PositiveElement& x, const PositiveElement& y) const {
  PositiveElement ys = y;
  for (Atom a : x.atoms()) {
    if (ys.empty() || !atom_divides(a, ys[0])) return false;
    ys = cancel_left(ys, a);
  }
  return true;
}

PositiveElement Garside::complement_to_delta_power(const PositiveElement& x, int k) const {
  if (static_cast<int>(x.size()) > k) throw std::invalid_argument("complement_to_delta_power: too many atoms");
  std::vector<Atom> padded = x.atoms();
  padded.resize(static_cast<std::size_t>(k), identity());
  std::vector<Atom> out;
  out.reserve(padded.size());
  for (int i = 1; i <= k; ++i) {
    Atom c = right_complement(padded[static_cast<std::size_t>(k - i)]);
    out.push_back(i % 2 == 0 ? bar(c) : c);
  }
  return normalize(out);
}

PositiveElement Garside::join(const PositiveElement& x, const PositiveElement& y) const {
  const int k = static_cast<int>(std::max(x.size(), y.size()));
  if (k == 0) return {};
  const PositiveElement xt = complement_to_delta_power(x, k);
  const PositiveElement yt = complement_to_delta_power(y, k);
  const PositiveElement m = meet(reverse(xt), reverse(yt));
  return reverse(complement_to_delta_power(m, k));
}

Atom Garside::complement_under(Atom a, const PositiveElement& b) const {
  PositiveElement pa = a.elt == kIdentity ? PositiveElement{} : PositiveElement(std::vector<Atom>{a});
  const PositiveElement c = cancel_left(join(pa, b), b);
  if (c.size() > 1) throw std::logic_error("complement_under: result is not an atom");
  return c.empty() ? identity() : c[0];
}

PositiveElement Garside::reverse(const PositiveElement& x) const {
  std::vector<Atom> r;
  r.reserve(x.size());
  for (auto it = x.atoms().rbegin(); it != x.atoms().rend(); ++it) r.push_back(Atom{sys_->inverse(it->elt)});
  return normalize(r);
}

PositiveElement Garside::bar(const PositiveElement& x) const {
  std::vector<Atom> r;
  r.reserve(x.size());
  for (Atom a : x.atoms()) r.push_back(bar(a));
  return PositiveElement(std::move(r));
}

int Garside::word_length(const PositiveElement& x) const {
  int total = 0;
  for (Atom a : x.atoms()) total += length(a);
  return total;
}

std::size_t Garside::leading_deltas(const PositiveElement& x) const {
  std::size_t j = 0;
  while (j < x.size() && x[j] == delta()) ++j;
  return j;
}

}  // namespace fga
