#pragma once

#include "tfr/errors.hpp"
#include "tfr/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tfr {

using IVec = std::vector<Int>;

IVec primitive(IVec v); // divide by the gcd of the entries, keep direction
Int dot(const IVec& a, const IVec& b);

/// Halfspace description of the cone generated by a vector list, via
/// Fourier-Motzkin elimination on the lifted system {x = V*lambda, lambda >= 0}.
/// `facets` are the irredundant inequality normals, `span_eqs` a lattice basis
/// of the functionals vanishing on the linear span, `extremal` the extremal
/// generators (primitive, deduplicated, sorted).
struct HRep {
  std::vector<IVec> facets;
  std::vector<IVec> span_eqs;
  std::vector<IVec> extremal;
  int dim = 0; // dimension of the linear span
};

HRep vrep_to_hrep(int ambient_dim, const std::vector<IVec>& generators);

/// Rational pointed cone with both descriptions. Rays are extremal primitive
/// generators in lexicographic order, which makes equality canonical.
class Cone {
public:
  static Cone from_rays(int ambient_dim, const std::vector<IVec>& rays);
  static Cone zero(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool is_zero() const { return rays_.empty(); }
  const std::vector<IVec>& rays() const { return rays_; }
  /// Inequality normals; the cone is exactly {x : h(x) >= 0 for all h}.
  /// Span equalities appear as +/- pairs.
  const std::vector<IVec>& halfspaces() const { return halfspaces_; }

  bool contains(const IVec& v) const;
  bool contains(const Cone& other) const;

  bool operator==(const Cone& o) const { return ambient_dim_ == o.ambient_dim_ && rays_ == o.rays_; }
  std::string key() const;

private:
  Cone() = default;
  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<IVec> rays_;
  std::vector<IVec> halfspaces_;
};

/// All faces of c including the zero cone and c itself, sorted by dimension
/// then by canonical key.
std::vector<Cone> faces(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// Fan: a face-closed family of cones with pairwise intersections being
/// common faces. Cones are stored sorted (dimension, key); `facets` indexes
/// the maximal ones.
class Fan {
public:
  Fan(int ambient_dim, std::vector<Cone> cones);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<int>& facet_indices() const { return facets_; }
  const Cone& cone(int i) const { return cones_[i]; }

  int index_of(const Cone& c) const; // -1 if absent
  bool leq(int i, int j) const { return leq_[i][j]; }

private:
  int ambient_dim_;
  std::vector<Cone> cones_;
  std::vector<int> facets_;
  std::vector<std::vector<bool>> leq_;
};

struct FanBuildResult {
  std::optional<Fan> fan;
  std::optional<std::pair<Cone, Cone>> violation; // first offending pair
};

/// Closes the list under faces and checks the fan axioms; on success returns
/// the fan with its face lattice, otherwise the first violating pair.
FanBuildResult validate_fan(const std::vector<Cone>& cones);

/// validate_fan that throws FanViolationError on failure.
Fan fan_from_cones(const std::vector<Cone>& cones);

} // namespace tfr
