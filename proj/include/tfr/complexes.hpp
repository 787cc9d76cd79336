#pragma once

#include "tfr/polyhedral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tfr {

/// Per-facet data of a monoidal complex: the indices of the global
/// generators lying in the facet monoid, the facet cone, and a rational
/// grading functional taking the value 1 on each of those generators.
struct FacetData {
  std::vector<int> gens; // ascending global indices
  Cone cone;
  std::vector<Rat> grading;
};

/// A monoidal complex with a homogeneous system of generators: a fan, a
/// global generator list, and one affine monoid per facet. Face monoids are
/// never materialized; face-level questions reduce to membership tests.
class MonoidalComplex {
public:
  int ambient_dim() const { return ambient_dim_; }
  int generator_count() const { return int(generators_.size()); }
  const std::vector<IVec>& generators() const { return generators_; }
  const IVec& generator(int j) const { return generators_[j]; }
  const std::vector<FacetData>& facets() const { return facets_; }
  const FacetData& facet(int i) const { return facets_[i]; }
  int facet_count() const { return int(facets_.size()); }
  const Fan& fan() const { return fan_; }

  std::vector<IVec> facet_generator_vectors(int i) const;
  Rat facet_degree(int i, const IVec& v) const; // value of the grading functional

private:
  MonoidalComplex(int d, std::vector<IVec> gens, std::vector<FacetData> facets, Fan fan)
      : ambient_dim_(d), generators_(std::move(gens)), facets_(std::move(facets)),
        fan_(std::move(fan)) {}

  int ambient_dim_;
  std::vector<IVec> generators_;
  std::vector<FacetData> facets_;
  Fan fan_;

  friend MonoidalComplex build_complex(int, std::vector<IVec>, std::vector<std::vector<int>>);
};

/// Builds and checks a monoidal complex from ambient dimension, generator
/// vectors and 0-based facet index sets. Cones are generated by the listed
/// facet generators; throws FanViolationError, NotHomogeneousError,
/// GenerationFailureError or NotPointedError.
MonoidalComplex build_complex(int ambient_dim, std::vector<IVec> generators,
                              std::vector<std::vector<int>> facet_gens);

/// Degree-bounded compatibility check: shared faces induce the same monoid
/// from both facets, and every bounded-degree element on a shared face
/// decomposes over the generators lying in that face.
struct ValidationReport {
  bool ok = true;
  int degree_bound = 0;
  std::string message;
  std::optional<std::pair<int, int>> facet_pair;
  std::optional<IVec> witness;
};
ValidationReport validate(const MonoidalComplex& cx, int degree_bound);

/// The simplicial complex of generator sets lying in a common facet monoid.
class NerveComplex {
public:
  NerveComplex(int n, std::vector<std::vector<int>> facet_sets);

  int vertex_count() const { return n_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  bool is_face(const std::vector<int>& set) const; // set ascending
  /// Minimal non-faces, sorted by (size, lex); these generate the monomial
  /// part of the presentation ideal.
  std::vector<std::vector<int>> minimal_non_faces() const;
  bool is_flag() const;

private:
  int n_;
  std::vector<std::vector<int>> facets_;
};

NerveComplex nerve(const MonoidalComplex& cx);

/// Decides v in M_C for facet `facet` by grading-guided exhaustive search;
/// returns the sorted multiset of generator indices of a decomposition.
/// Absent when the grading value is not a nonnegative integer or no
/// decomposition exists (searching degrees above `bound` is cut off).
std::optional<std::vector<int>> monoid_membership(const MonoidalComplex& cx, int facet,
                                                  const IVec& v,
                                                  std::optional<int> bound = std::nullopt);

/// All degree-m elements of facet i's monoid, deduplicated and sorted.
std::vector<IVec> facet_elements_of_degree(const MonoidalComplex& cx, int facet, int deg);

MonoidalComplex veronese(const MonoidalComplex& cx, int m);
MonoidalComplex tensor_join(const MonoidalComplex& a, const MonoidalComplex& b);
MonoidalComplex fiber_union(const MonoidalComplex& a, const MonoidalComplex& b);
MonoidalComplex segre(const MonoidalComplex& a, const MonoidalComplex& b);

struct RestrictedSubcomplexResult {
  MonoidalComplex complex;
  bool is_restricted;
  std::vector<int> generator_map; // new index -> original index
};

/// Induced subcomplex on the face closure of the selected fan cones (indices
/// into cx.fan().cones()). `is_restricted` checks the retract condition at
/// the nerve level.
RestrictedSubcomplexResult restricted_subcomplex(const MonoidalComplex& cx,
                                                 const std::vector<int>& cone_indices);

} // namespace tfr
