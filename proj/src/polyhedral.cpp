#include "tfr/polyhedral.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace tfr {

IVec primitive(IVec v) {
  Int g = vector_gcd(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

bool is_zero_vec(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Rows are linear functionals over a working variable list. Equalities are
// eliminated by exact pivoting, the remaining variables by Fourier-Motzkin.
struct LinearSystem {
  std::vector<IVec> eqs;
  std::vector<IVec> ineqs;

  void eliminate(int var) {
    int pivot = -1;
    for (int i = 0; i < int(eqs.size()); ++i) {
      if (eqs[i][var] == 0) continue;
      if (pivot < 0 || abs(eqs[i][var]) < abs(eqs[pivot][var])) pivot = i;
    }
    if (pivot >= 0) {
      IVec p = eqs[pivot];
      eqs.erase(eqs.begin() + pivot);
      auto substitute = [&](IVec& r) {
        if (r[var] == 0) return;
        Int g = p[var];
        Int scale = abs(g);
        Int mult = r[var] * (g > 0 ? 1 : -1);
        for (size_t c = 0; c < r.size(); ++c) r[c] = scale * r[c] - mult * p[c];
        r = primitive(std::move(r));
      };
      for (IVec& r : eqs) substitute(r);
      for (IVec& r : ineqs) substitute(r);
      std::erase_if(eqs, is_zero_vec);
      std::erase_if(ineqs, is_zero_vec);
      return;
    }
    std::vector<IVec> pos, neg, zero;
    for (IVec& r : ineqs) {
      if (r[var] > 0) pos.push_back(std::move(r));
      else if (r[var] < 0) neg.push_back(std::move(r));
      else zero.push_back(std::move(r));
    }
    std::set<IVec> out(zero.begin(), zero.end());
    for (const IVec& p : pos)
      for (const IVec& n : neg) {
        IVec r(p.size());
        for (size_t c = 0; c < r.size(); ++c) r[c] = p[var] * n[c] - n[var] * p[c];
        if (is_zero_vec(r)) continue;
        out.insert(primitive(std::move(r)));
      }
    ineqs.assign(out.begin(), out.end());
  }
};

} // namespace

HRep vrep_to_hrep(int d, const std::vector<IVec>& generators) {
  if (d < 1) throw DimensionMismatchError("ambient dimension must be >= 1");
  for (const IVec& g : generators)
    if (int(g.size()) != d) throw DimensionMismatchError("generator dimension mismatch");

  HRep rep;

  // Extremal candidates: primitive, deduplicated, sorted.
  {
    std::set<IVec> seen;
    for (const IVec& g : generators) {
      if (is_zero_vec(g)) continue;
      seen.insert(primitive(g));
    }
    rep.extremal.assign(seen.begin(), seen.end());
  }
  std::vector<IVec> gens = rep.extremal;
  int m = int(gens.size());

  // Span equalities from the integer kernel of the generator rows.
  if (!gens.empty()) {
    rep.span_eqs = integer_kernel(IntMatrix::from_rows(gens));
    rep.dim = d - int(rep.span_eqs.size());
  } else {
    rep.dim = 0;
    for (int i = 0; i < d; ++i) {
      IVec e(d, 0);
      e[i] = 1;
      rep.span_eqs.push_back(std::move(e));
    }
    return rep; // zero cone: no facets
  }

  // Lifted system over (x_0..x_{d-1}, l_0..l_{m-1}).
  LinearSystem sys;
  for (int i = 0; i < d; ++i) {
    IVec row(d + m, 0);
    row[i] = 1;
    for (int j = 0; j < m; ++j) row[d + j] = -gens[j][i];
    sys.eqs.push_back(std::move(row));
  }
  for (int j = 0; j < m; ++j) {
    IVec row(d + m, 0);
    row[d + j] = 1;
    sys.ineqs.push_back(std::move(row));
  }
  for (int var = d + m - 1; var >= d; --var) sys.eliminate(var);

  std::vector<IVec> candidates;
  {
    std::set<IVec> seen;
    for (const IVec& r : sys.ineqs) {
      for (int j = 0; j < m; ++j) assert(r[d + j] == 0);
      IVec h(r.begin(), r.begin() + d);
      if (is_zero_vec(h)) continue;
      bool on_span = true;
      for (const IVec& g : gens)
        if (dot(h, g) != 0) { on_span = false; break; }
      if (on_span) continue; // implied by the span equalities
      seen.insert(primitive(std::move(h)));
    }
    candidates.assign(seen.begin(), seen.end());
  }

  // Lineality: nonzero vectors with every constraint tight. Faces of the
  // cone always contain it, so face dimensions can be measured from the
  // generators lying on the face whether or not the cone is pointed.
  bool pointed;
  {
    std::vector<IVec> all = candidates;
    all.insert(all.end(), rep.span_eqs.begin(), rep.span_eqs.end());
    pointed = !all.empty() &&
              field_rank(IntMatrix::from_rows(all), FieldChoice::rationals()) == d;
  }

  // Facets: inequalities cutting a face of dimension dim-1; one
  // representative per zero-set signature on the generators.
  std::map<std::vector<int>, IVec> by_signature;
  for (const IVec& h : candidates) {
    std::vector<int> sig;
    std::vector<IVec> on_face;
    for (int i = 0; i < m; ++i)
      if (dot(h, gens[i]) == 0) {
        sig.push_back(i);
        on_face.push_back(gens[i]);
      }
    int face_dim = on_face.empty() ? 0 : field_rank(IntMatrix::from_rows(on_face), FieldChoice::rationals());
    if (face_dim != rep.dim - 1) continue;
    auto it = by_signature.find(sig);
    if (it == by_signature.end() || h < it->second) by_signature[sig] = h;
  }
  for (auto& [sig, h] : by_signature) rep.facets.push_back(h);
  std::sort(rep.facets.begin(), rep.facets.end());

  // Extremality only makes sense for pointed cones: a generator spans a
  // 1-dimensional face iff the constraints active at it have rank d-1.
  if (pointed) {
    std::vector<IVec> keep;
    for (const IVec& r : gens) {
      std::vector<IVec> active = rep.span_eqs;
      for (const IVec& h : rep.facets)
        if (dot(h, r) == 0) active.push_back(h);
      if (active.empty() ? (d == 1)
                         : field_rank(IntMatrix::from_rows(active), FieldChoice::rationals()) == d - 1)
        keep.push_back(r);
    }
    rep.extremal = std::move(keep);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cone

Cone Cone::zero(int ambient_dim) {
  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.dim_ = 0;
  for (int i = 0; i < ambient_dim; ++i) {
    IVec e(ambient_dim, 0);
    e[i] = 1;
    c.halfspaces_.push_back(e);
    for (Int& x : e) x = -x;
    c.halfspaces_.push_back(std::move(e));
  }
  std::sort(c.halfspaces_.begin(), c.halfspaces_.end());
  return c;
}

Cone Cone::from_rays(int ambient_dim, const std::vector<IVec>& rays) {
  if (ambient_dim < 1) throw DimensionMismatchError("ambient dimension must be >= 1");
  for (const IVec& r : rays) {
    if (int(r.size()) != ambient_dim) throw DimensionMismatchError("ray dimension mismatch");
    if (is_zero_vec(r)) throw std::invalid_argument("zero vector is not a ray");
  }
  if (rays.empty()) return zero(ambient_dim);

  HRep rep = vrep_to_hrep(ambient_dim, rays);
  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.dim_ = rep.dim;
  c.rays_ = rep.extremal;
  c.halfspaces_ = rep.facets;
  for (const IVec& z : rep.span_eqs) {
    c.halfspaces_.push_back(z);
    IVec neg = z;
    for (Int& x : neg) x = -x;
    c.halfspaces_.push_back(std::move(neg));
  }
  std::sort(c.halfspaces_.begin(), c.halfspaces_.end());

  std::vector<IVec> normals = rep.facets;
  normals.insert(normals.end(), rep.span_eqs.begin(), rep.span_eqs.end());
  if (normals.empty() ||
      field_rank(IntMatrix::from_rows(normals), FieldChoice::rationals()) != ambient_dim)
    throw NotPointedError("cone contains a line");
  return c;
}

bool Cone::contains(const IVec& v) const {
  if (int(v.size()) != ambient_dim_) throw DimensionMismatchError("point dimension mismatch");
  for (const IVec& h : halfspaces_)
    if (dot(h, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  for (const IVec& r : other.rays())
    if (!contains(r)) return false;
  return true;
}

std::string Cone::key() const {
  std::ostringstream os;
  os << ambient_dim_ << ':';
  for (const IVec& r : rays_) {
    os << '[';
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ']';
  }
  return os.str();
}

std::vector<Cone> faces(const Cone& c) {
  std::vector<Cone> out;
  if (c.is_zero()) {
    out.push_back(c);
    return out;
  }
  int n = int(c.rays().size());
  std::vector<int> full(n);
  for (int i = 0; i < n; ++i) full[i] = i;

  // Ray index sets of the facets; every face is an intersection of facets.
  std::set<std::vector<int>> facet_sets;
  for (const IVec& h : c.halfspaces()) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (dot(h, c.rays()[i]) == 0) s.push_back(i);
    if (int(s.size()) != n) facet_sets.insert(std::move(s));
  }
  std::set<std::vector<int>> closed;
  closed.insert(full);
  std::vector<std::vector<int>> work(facet_sets.begin(), facet_sets.end());
  for (size_t w = 0; w < work.size(); ++w) {
    if (!closed.insert(work[w]).second) continue;
    for (const auto& s : closed) {
      std::vector<int> inter;
      std::set_intersection(s.begin(), s.end(), work[w].begin(), work[w].end(),
                            std::back_inserter(inter));
      work.push_back(std::move(inter));
    }
  }
  for (const auto& s : closed) {
    if (s.empty()) {
      out.push_back(Cone::zero(c.ambient_dim()));
    } else {
      std::vector<IVec> rays;
      for (int i : s) rays.push_back(c.rays()[i]);
      out.push_back(Cone::from_rays(c.ambient_dim(), rays));
    }
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatchError("intersect: ambient dims differ");
  int d = a.ambient_dim();
  std::set<IVec> normals(a.halfspaces().begin(), a.halfspaces().end());
  normals.insert(b.halfspaces().begin(), b.halfspaces().end());

  // {x : h(x) >= 0} is dual to the cone spanned by the normals, so its
  // generators are that cone's halfspace normals.
  HRep dual = vrep_to_hrep(d, std::vector<IVec>(normals.begin(), normals.end()));
  if (dual.dim < d) throw NotPointedError("intersection contains a line");
  if (dual.facets.empty()) return Cone::zero(d);
  return Cone::from_rays(d, dual.facets);
}

// ---------------------------------------------------------------------------
// Fan

Fan::Fan(int ambient_dim, std::vector<Cone> cones)
    : ambient_dim_(ambient_dim), cones_(std::move(cones)) {
  std::sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
  });
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
  int n = int(cones_.size());
  leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq_[i][j] = cones_[j].contains(cones_[i]);
  for (int i = 0; i < n; ++i) {
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j)
      if (j != i && leq_[i][j]) maximal = false;
    if (maximal) facets_.push_back(i);
  }
}

int Fan::index_of(const Cone& c) const {
  for (int i = 0; i < int(cones_.size()); ++i)
    if (cones_[i] == c) return i;
  return -1;
}

FanBuildResult validate_fan(const std::vector<Cone>& cones) {
  FanBuildResult res;
  if (cones.empty()) {
    res.fan = Fan(0, {});
    return res;
  }
  int d = cones.front().ambient_dim();
  for (const Cone& c : cones)
    if (c.ambient_dim() != d) throw DimensionMismatchError("fan cones have mixed ambient dimension");

  std::map<std::string, Cone> all;
  for (const Cone& c : cones)
    for (const Cone& f : faces(c)) all.emplace(f.key(), f);
  all.emplace(Cone::zero(d).key(), Cone::zero(d));

  std::vector<Cone> members;
  for (auto& [k, c] : all) members.push_back(c);

  for (size_t i = 0; i < members.size(); ++i) {
    auto faces_i = faces(members[i]);
    for (size_t j = i + 1; j < members.size(); ++j) {
      Cone inter = intersect(members[i], members[j]);
      bool face_of_i = std::find(faces_i.begin(), faces_i.end(), inter) != faces_i.end();
      auto faces_j = faces(members[j]);
      bool face_of_j = std::find(faces_j.begin(), faces_j.end(), inter) != faces_j.end();
      if (!face_of_i || !face_of_j) {
        res.violation = {members[i], members[j]};
        return res;
      }
    }
  }
  res.fan = Fan(d, std::move(members));
  return res;
}

Fan fan_from_cones(const std::vector<Cone>& cones) {
  FanBuildResult r = validate_fan(cones);
  if (!r.fan) {
    std::ostringstream os;
    os << "fan axiom violated by cones " << r.violation->first.key() << " and "
       << r.violation->second.key();
    throw FanViolationError(os.str());
  }
  return *std::move(r.fan);
}

} // namespace tfr
