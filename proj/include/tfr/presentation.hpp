#pragma once

#include "tfr/complexes.hpp"
#include "tfr/ideal.hpp"

#include <vector>

namespace tfr {

/// Presentation of the toric face ring as a quotient of k[X_1..X_n]: the
/// squarefree monomial part generated by the minimal non-faces of the nerve,
/// the pure-binomial part generated by the embedded facet toric ideals, and
/// their sum, the full presentation ideal.
struct Presentation {
  MonoidalComplex complex;
  PresentedIdeal ideal;         // I = A + sum of embedded facet toric ideals
  PresentedIdeal monomial_part; // A
  PresentedIdeal binomial_part; // B
  std::vector<PresentedIdeal> facet_ideals; // I_C in the facet's own variables
  std::vector<std::vector<int>> min_non_faces;
};

Presentation presentation_ideal(const MonoidalComplex& cx);

/// Variables of S_C for facet i (ascending global indices).
inline const std::vector<int>& facet_variables(const Presentation& p, int i) {
  return p.complex.facet(i).gens;
}

} // namespace tfr
