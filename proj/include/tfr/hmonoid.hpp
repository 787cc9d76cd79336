#pragma once

#include "tfr/presentation.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace tfr {

/// Class of the associated monoid H = N^n / ~, represented by the canonical
/// exponent vector (the Groebner normal form of its monomials modulo the
/// pure-binomial part).
struct HElement {
  Expo v;
  int deg = 0;

  bool operator==(const HElement& o) const { return v == o.v; }
  bool operator<(const HElement& o) const {
    if (deg != o.deg) return deg < o.deg;
    return v < o.v;
  }
  bool is_zero() const { return deg == 0; }
};

/// Presentation plus a fixed term order and the reduced basis of the
/// binomial part. Representatives depend on the order; every observable
/// answer (class equality, degree, J-membership, divisibility) does not.
class HContext {
public:
  explicit HContext(Presentation pres);
  HContext(Presentation pres, TermOrder order);

  const Presentation& presentation() const { return pres_; }
  const TermOrder& order() const { return order_; }
  const GroebnerBasis& binomial_basis() const { return gb_; }
  int nvars() const { return pres_.ideal.nvars(); }

  HElement zero() const { return HElement{Expo(nvars(), 0), 0}; }
  HElement generator_class(int j) const;
  HElement canonical(const Expo& a) const;
  HElement add(const HElement& a, const HElement& b) const;

  /// True iff the monomial vanishes in the toric face ring: the support of
  /// the canonical vector is a non-face of the nerve.
  bool in_j(const HElement& x) const;

  /// All classes of total degree j, sorted; includes classes inside J.
  const std::vector<HElement>& elements_of_degree(int j) const;

  /// First witness delta with gamma + delta = lambda in H, or absent.
  std::optional<HElement> divides(const HElement& gamma, const HElement& lambda) const;
  std::vector<HElement> all_witnesses(const HElement& gamma, const HElement& lambda) const;

  /// Hilbert function of the toric face ring: number of non-J classes.
  int hilbert(int j) const;

private:
  Presentation pres_;
  TermOrder order_;
  GroebnerBasis gb_;
  NerveComplex nerve_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<HElement>> degrees_;
};

/// Order complex pair of the open interval (0, lambda): all chains (faces,
/// as ascending vertex index lists, the empty chain included) and the flag
/// marking membership in the subcomplex Delta_{lambda,J} (some consecutive
/// difference, endpoints 0 and lambda included, lies in J).
struct DivisorPair {
  HElement lambda;
  std::vector<HElement> interval;
  std::vector<std::vector<int>> faces;
  std::vector<bool> in_sub;
};

/// Builds the pair; throws WitnessDisagreementError if two witnesses for the
/// same difference disagree on J-membership (never happens by Lemma-level
/// well-definedness; checked rather than assumed) and BoundExceededError when
/// the face count passes `max_faces`.
DivisorPair divisor_pair(const HContext& ctx, const HElement& lambda,
                         long max_faces = 2000000);

} // namespace tfr
