#include "tfr/complexes.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace tfr {

namespace {

Rat dot_rat(const std::vector<Rat>& w, const IVec& v) {
  Rat s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * Rat(v[i]);
  return s;
}

std::string vec_str(const IVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

} // namespace

std::vector<IVec> MonoidalComplex::facet_generator_vectors(int i) const {
  std::vector<IVec> out;
  for (int j : facets_[i].gens) out.push_back(generators_[j]);
  return out;
}

Rat MonoidalComplex::facet_degree(int i, const IVec& v) const {
  return dot_rat(facets_[i].grading, v);
}

MonoidalComplex build_complex(int ambient_dim, std::vector<IVec> generators,
                              std::vector<std::vector<int>> facet_gens) {
  int n = int(generators.size());
  if (ambient_dim < 1) throw DimensionMismatchError("ambient dimension must be >= 1");
  if (n == 0) throw GenerationFailureError("a monoidal complex needs at least one generator");
  std::set<IVec> distinct;
  for (const IVec& g : generators) {
    if (int(g.size()) != ambient_dim) throw DimensionMismatchError("generator dimension mismatch");
    if (std::all_of(g.begin(), g.end(), [](const Int& x) { return x == 0; }))
      throw GenerationFailureError("zero generator");
    if (!distinct.insert(g).second)
      throw GenerationFailureError("duplicate generator " + vec_str(g));
  }
  if (facet_gens.empty()) throw GenerationFailureError("no facets listed");

  std::vector<bool> covered(n, false);
  std::vector<FacetData> facets;
  for (auto& set : facet_gens) {
    if (set.empty()) throw GenerationFailureError("empty facet generator set");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<IVec> vecs;
    for (int j : set) {
      if (j < 0 || j >= n) throw GenerationFailureError("facet generator index out of range");
      covered[j] = true;
      vecs.push_back(generators[j]);
    }
    Cone cone = Cone::from_rays(ambient_dim, vecs); // throws NotPointedError
    // Grading functional with value 1 on every listed generator.
    IntMatrix rows = IntMatrix::from_rows(vecs);
    auto w = solve_rational(rows, std::vector<Rat>(vecs.size(), Rat(1)));
    if (!w) throw NotHomogeneousError("facet admits no degree-1 grading functional");
    facets.push_back(FacetData{set, std::move(cone), *std::move(w)});
  }
  for (int j = 0; j < n; ++j)
    if (!covered[j])
      throw GenerationFailureError("generator " + vec_str(generators[j]) + " lies in no facet");

  for (size_t i = 0; i < facets.size(); ++i)
    for (size_t j = 0; j < facets.size(); ++j)
      if (i != j && facets[i].cone.contains(facets[j].cone))
        throw FanViolationError("listed facet cone is contained in another listed facet cone");

  std::vector<Cone> cones;
  for (const FacetData& f : facets) cones.push_back(f.cone);
  Fan fan = fan_from_cones(cones); // throws FanViolationError

  MonoidalComplex cx(ambient_dim, std::move(generators), std::move(facets), std::move(fan));

  // A generator covered by a facet cone must be a degree-1 element there or
  // stay outside that facet monoid; a decomposable generator of higher
  // degree breaks the global grading.
  for (int i = 0; i < cx.facet_count(); ++i) {
    const FacetData& f = cx.facet(i);
    for (int j = 0; j < n; ++j) {
      if (std::binary_search(f.gens.begin(), f.gens.end(), j)) continue;
      const IVec& g = cx.generator(j);
      if (!f.cone.contains(g)) continue;
      Rat deg = cx.facet_degree(i, g);
      if (deg == 1)
        throw NotHomogeneousError("degree-1 lattice point " + vec_str(g) +
                                  " of a facet cone is not listed in that facet");
      if (denominator(deg) == 1 && deg > 1 && monoid_membership(cx, i, g))
        throw NotHomogeneousError("generator " + vec_str(g) +
                                  " decomposes with degree > 1 in a covering facet");
    }
  }
  return cx;
}

std::optional<std::vector<int>> monoid_membership(const MonoidalComplex& cx, int facet,
                                                  const IVec& v, std::optional<int> bound) {
  const FacetData& f = cx.facet(facet);
  Rat deg = cx.facet_degree(facet, v);
  if (denominator(deg) != 1 || deg < 0) return std::nullopt;
  if (bound && deg > *bound) return std::nullopt;
  long count = numerator(deg).convert_to<long>();

  std::vector<int> witness;
  std::vector<int> chosen;
  IVec rest = v;
  auto in_cone = [&](const IVec& x) { return f.cone.contains(x); };
  bool found = false;

  std::function<void(size_t, long)> dfs = [&](size_t min_pos, long remaining) {
    if (found) return;
    if (remaining == 0) {
      if (std::all_of(rest.begin(), rest.end(), [](const Int& x) { return x == 0; })) {
        witness = chosen;
        found = true;
      }
      return;
    }
    for (size_t p = min_pos; p < f.gens.size() && !found; ++p) {
      const IVec& g = cx.generator(f.gens[p]);
      for (size_t c = 0; c < rest.size(); ++c) rest[c] -= g[c];
      if (in_cone(rest)) {
        chosen.push_back(f.gens[p]);
        dfs(p, remaining - 1);
        chosen.pop_back();
      }
      for (size_t c = 0; c < rest.size(); ++c) rest[c] += g[c];
    }
  };
  if (!in_cone(rest)) return std::nullopt;
  dfs(0, count);
  if (!found) return std::nullopt;
  return witness;
}

std::vector<IVec> facet_elements_of_degree(const MonoidalComplex& cx, int facet, int deg) {
  std::set<IVec> level;
  level.insert(IVec(cx.ambient_dim(), Int(0)));
  for (int k = 0; k < deg; ++k) {
    std::set<IVec> next;
    for (const IVec& e : level)
      for (int j : cx.facet(facet).gens) {
        IVec s = e;
        const IVec& g = cx.generator(j);
        for (size_t c = 0; c < s.size(); ++c) s[c] += g[c];
        next.insert(std::move(s));
      }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

ValidationReport validate(const MonoidalComplex& cx, int degree_bound) {
  if (degree_bound < 2) throw std::invalid_argument("degree bound must be >= 2");
  ValidationReport rep;
  rep.degree_bound = degree_bound;

  for (int i = 0; i < cx.facet_count(); ++i) {
    for (int j = i + 1; j < cx.facet_count(); ++j) {
      Cone shared = intersect(cx.facet(i).cone, cx.facet(j).cone);
      auto on_face = [&](int facet_idx) {
        std::set<IVec> out;
        for (int deg = 1; deg <= degree_bound; ++deg)
          for (IVec& e : facet_elements_of_degree(cx, facet_idx, deg))
            if (shared.contains(e)) out.insert(std::move(e));
        return out;
      };
      std::set<IVec> ei = on_face(i), ej = on_face(j);
      if (ei != ej) {
        rep.ok = false;
        rep.facet_pair = {i, j};
        std::vector<IVec> diff;
        std::set_symmetric_difference(ei.begin(), ei.end(), ej.begin(), ej.end(),
                                      std::back_inserter(diff));
        rep.witness = diff.front();
        rep.message = "facets " + std::to_string(i) + " and " + std::to_string(j) +
                      " induce different monoids on their shared face; witness " +
                      vec_str(diff.front());
        return rep;
      }
      // Every bounded-degree element on the shared face must decompose over
      // the generators lying in the face.
      std::vector<int> face_gens;
      for (int g : cx.facet(i).gens)
        if (shared.contains(cx.generator(g))) face_gens.push_back(g);
      for (const IVec& e : ei) {
        // greedy-free exhaustive check via a small DFS over face_gens
        std::function<bool(size_t, IVec&)> dfs = [&](size_t min_pos, IVec& r) -> bool {
          if (std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; })) return true;
          for (size_t p = min_pos; p < face_gens.size(); ++p) {
            const IVec& g = cx.generator(face_gens[p]);
            bool fits = true;
            IVec nr = r;
            for (size_t c = 0; c < nr.size(); ++c) nr[c] -= g[c];
            fits = shared.contains(nr);
            if (fits && dfs(p, nr)) return true;
          }
          return false;
        };
        IVec r = e;
        if (!dfs(0, r)) {
          rep.ok = false;
          rep.facet_pair = {i, j};
          rep.witness = e;
          rep.message = "element " + vec_str(e) +
                        " on the face shared by facets " + std::to_string(i) + " and " +
                        std::to_string(j) + " does not decompose over the face generators";
          return rep;
        }
      }
    }
  }
  rep.message = "valid up to degree " + std::to_string(degree_bound);
  return rep;
}

// ---------------------------------------------------------------------------
// Nerve

NerveComplex::NerveComplex(int n, std::vector<std::vector<int>> facet_sets) : n_(n) {
  for (auto& s : facet_sets) std::sort(s.begin(), s.end());
  std::sort(facet_sets.begin(), facet_sets.end());
  facet_sets.erase(std::unique(facet_sets.begin(), facet_sets.end()), facet_sets.end());
  // keep only maximal sets
  for (size_t i = 0; i < facet_sets.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < facet_sets.size() && maximal; ++j) {
      if (i == j) continue;
      if (std::includes(facet_sets[j].begin(), facet_sets[j].end(), facet_sets[i].begin(),
                        facet_sets[i].end()) &&
          facet_sets[i] != facet_sets[j])
        maximal = false;
    }
    if (maximal) facets_.push_back(facet_sets[i]);
  }
}

bool NerveComplex::is_face(const std::vector<int>& set) const {
  for (const auto& f : facets_)
    if (std::includes(f.begin(), f.end(), set.begin(), set.end())) return true;
  return false;
}

std::vector<std::vector<int>> NerveComplex::minimal_non_faces() const {
  std::vector<std::vector<int>> out;
  for (int size = 2; size <= n_; ++size) {
    std::vector<int> idx(size);
    std::function<void(int, int)> rec = [&](int pos, int start) {
      if (pos == size) {
        std::vector<int> s(idx.begin(), idx.end());
        if (is_face(s)) return;
        for (int drop = 0; drop < size; ++drop) {
          std::vector<int> sub;
          for (int k = 0; k < size; ++k)
            if (k != drop) sub.push_back(s[k]);
          if (!is_face(sub)) return; // a smaller non-face exists inside
        }
        out.push_back(std::move(s));
        return;
      }
      for (int v = start; v < n_; ++v) {
        idx[pos] = v;
        rec(pos + 1, v + 1);
      }
    };
    rec(0, 0);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool NerveComplex::is_flag() const {
  for (const auto& nf : minimal_non_faces())
    if (nf.size() > 2) return false;
  return true;
}

NerveComplex nerve(const MonoidalComplex& cx) {
  std::vector<std::vector<int>> sets;
  for (const FacetData& f : cx.facets()) sets.push_back(f.gens);
  return NerveComplex(cx.generator_count(), std::move(sets));
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

IVec embed(const IVec& v, int offset, int total) {
  IVec r(total, Int(0));
  for (size_t i = 0; i < v.size(); ++i) r[offset + int(i)] = v[i];
  return r;
}

} // namespace

MonoidalComplex veronese(const MonoidalComplex& cx, int m) {
  if (m < 1) throw std::invalid_argument("veronese factor must be >= 1");
  std::set<IVec> all;
  std::vector<std::set<IVec>> per_facet(cx.facet_count());
  for (int i = 0; i < cx.facet_count(); ++i) {
    auto elems = facet_elements_of_degree(cx, i, m);
    per_facet[i] = std::set<IVec>(elems.begin(), elems.end());
    all.insert(elems.begin(), elems.end());
  }
  std::vector<IVec> gens(all.begin(), all.end());
  std::map<IVec, int> index;
  for (int k = 0; k < int(gens.size()); ++k) index[gens[k]] = k;
  std::vector<std::vector<int>> facet_sets(cx.facet_count());
  for (int i = 0; i < cx.facet_count(); ++i)
    for (const IVec& v : per_facet[i]) facet_sets[i].push_back(index[v]);
  return build_complex(cx.ambient_dim(), std::move(gens), std::move(facet_sets));
}

MonoidalComplex tensor_join(const MonoidalComplex& a, const MonoidalComplex& b) {
  int d = a.ambient_dim() + b.ambient_dim();
  int na = a.generator_count();
  std::vector<IVec> gens;
  for (const IVec& g : a.generators()) gens.push_back(embed(g, 0, d));
  for (const IVec& g : b.generators()) gens.push_back(embed(g, a.ambient_dim(), d));
  std::vector<std::vector<int>> facet_sets;
  for (const FacetData& fa : a.facets())
    for (const FacetData& fb : b.facets()) {
      std::vector<int> s = fa.gens;
      for (int j : fb.gens) s.push_back(na + j);
      facet_sets.push_back(std::move(s));
    }
  return build_complex(d, std::move(gens), std::move(facet_sets));
}

MonoidalComplex fiber_union(const MonoidalComplex& a, const MonoidalComplex& b) {
  int d = a.ambient_dim() + b.ambient_dim();
  int na = a.generator_count();
  std::vector<IVec> gens;
  for (const IVec& g : a.generators()) gens.push_back(embed(g, 0, d));
  for (const IVec& g : b.generators()) gens.push_back(embed(g, a.ambient_dim(), d));
  std::vector<std::vector<int>> facet_sets;
  for (const FacetData& fa : a.facets()) facet_sets.push_back(fa.gens);
  for (const FacetData& fb : b.facets()) {
    std::vector<int> s;
    for (int j : fb.gens) s.push_back(na + j);
    facet_sets.push_back(std::move(s));
  }
  return build_complex(d, std::move(gens), std::move(facet_sets));
}

MonoidalComplex segre(const MonoidalComplex& a, const MonoidalComplex& b) {
  int d = a.ambient_dim() + b.ambient_dim();
  int nb = b.generator_count();
  std::vector<IVec> gens;
  for (const IVec& ga : a.generators())
    for (const IVec& gb : b.generators()) {
      IVec v = embed(ga, 0, d);
      for (size_t c = 0; c < gb.size(); ++c) v[a.ambient_dim() + int(c)] = gb[c];
      gens.push_back(std::move(v));
    }
  std::vector<std::vector<int>> facet_sets;
  for (const FacetData& fa : a.facets())
    for (const FacetData& fb : b.facets()) {
      std::vector<int> s;
      for (int i : fa.gens)
        for (int j : fb.gens) s.push_back(i * nb + j);
      facet_sets.push_back(std::move(s));
    }
  return build_complex(d, std::move(gens), std::move(facet_sets));
}

RestrictedSubcomplexResult restricted_subcomplex(const MonoidalComplex& cx,
                                                 const std::vector<int>& cone_indices) {
  const Fan& fan = cx.fan();
  int total = int(fan.cones().size());
  for (int idx : cone_indices)
    if (idx < 0 || idx >= total) throw NotASubfanError("cone index out of range");

  // Face closure of the selection inside the fan.
  std::vector<bool> in_gamma(total, false);
  for (int idx : cone_indices)
    for (int k = 0; k < total; ++k)
      if (fan.leq(k, idx)) in_gamma[k] = true;

  // Maximal cones of the subfan.
  std::vector<int> maximal;
  for (int i = 0; i < total; ++i) {
    if (!in_gamma[i]) continue;
    bool top = true;
    for (int j = 0; j < total && top; ++j)
      if (j != i && in_gamma[j] && fan.leq(i, j)) top = false;
    if (top) maximal.push_back(i);
  }

  // Generators lying in the subfan; membership in the induced monoid of a
  // subfan cone uses any original facet containing that cone.
  std::vector<std::vector<int>> facet_sets;
  std::set<int> kept_set;
  for (int ci : maximal) {
    const Cone& cone = fan.cone(ci);
    if (cone.is_zero()) throw NotASubfanError("the zero cone alone induces no complex");
    int parent = -1;
    for (int p = 0; p < cx.facet_count(); ++p)
      if (cx.facet(p).cone.contains(cone)) { parent = p; break; }
    if (parent < 0) throw NotASubfanError("subfan cone lies in no facet of the complex");
    std::vector<int> s;
    for (int j : cx.facet(parent).gens)
      if (cone.contains(cx.generator(j))) s.push_back(j);
    for (int j : s) kept_set.insert(j);
    facet_sets.push_back(std::move(s));
  }
  std::vector<int> kept(kept_set.begin(), kept_set.end());
  std::vector<int> local(cx.generator_count(), -1);
  for (int k = 0; k < int(kept.size()); ++k) local[kept[k]] = k;

  std::vector<IVec> gens;
  for (int j : kept) gens.push_back(cx.generator(j));
  for (auto& s : facet_sets)
    for (int& j : s) j = local[j];

  MonoidalComplex sub = build_complex(cx.ambient_dim(), std::move(gens), std::move(facet_sets));

  // Retract condition at the nerve level: any nerve face of cx supported on
  // the kept generators must be a nerve face of the subcomplex.
  NerveComplex big = nerve(cx);
  NerveComplex small = nerve(sub);
  bool restricted = true;
  int nk = int(kept.size());
  for (unsigned mask = 1; mask < (1u << nk) && restricted; ++mask) {
    std::vector<int> orig, loc;
    for (int k = 0; k < nk; ++k)
      if (mask & (1u << k)) {
        orig.push_back(kept[k]);
        loc.push_back(k);
      }
    if (big.is_face(orig) && !small.is_face(loc)) restricted = false;
  }
  return RestrictedSubcomplexResult{std::move(sub), restricted, std::move(kept)};
}

} // namespace tfr
