#ifndef WRONSK_SQUAREFREE_HPP
#define WRONSK_SQUAREFREE_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/poly.hpp"

namespace wronsk {

struct SquarefreeFactor {
  Poly factor;  // monic, squarefree, degree >= 1
  int multiplicity;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// p = unit * prod(factor^multiplicity), factors pairwise coprime.
struct SquarefreeDecomposition {
  Rat unit;
  std::vector<SquarefreeFactor> factors;  // ascending multiplicity

  Poly expand() const {
    Poly p(unit);
    for (const auto& f : factors) p *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
    return p;
  }
};

/// Yun's squarefree decomposition over Q.
inline SquarefreeDecomposition squarefree_factor(const Poly& p) {
  if (p.is_zero()) throw ZeroDivisionError("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out{p.leading(), {}};
  const Poly f = p.monic();
  if (f.is_constant()) return out;

  const Poly fp = f.derivative();
  const Poly a0 = gcd(f, fp);
  Poly b = f.exact_div(a0);
  Poly c = fp.exact_div(a0);
  Poly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    Poly a = gcd(b, d);
    if (!a.is_constant()) out.factors.push_back({a, i});
    b = b.exact_div(a);
    c = d.exact_div(a);
    d = c - b.derivative();
  }
  return out;
}

/// Refines monic squarefree inputs into a pairwise coprime basis by repeated
/// gcd splitting. Every input is a product of some of the returned elements.
inline std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs) {
  std::vector<Poly> basis;
  for (const auto& p : inputs) {
    if (!p.is_constant()) basis.push_back(p.monic());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        Poly g = gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        Poly a = basis[i].exact_div(g);
        Poly b = basis[j].exact_div(g);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        for (Poly* q : {&a, &b, &g}) {
          if (!q->is_constant()) basis.push_back(std::move(*q));
        }
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace wronsk

#endif  // WRONSK_SQUAREFREE_HPP
