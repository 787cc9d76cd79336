#include "tfr/presentation.hpp"

#include <future>

namespace tfr {

Presentation presentation_ideal(const MonoidalComplex& cx) {
  int n = cx.generator_count();

  NerveComplex nv = nerve(cx);
  std::vector<std::vector<int>> non_faces = nv.minimal_non_faces();
  std::vector<IdealElement> a_gens;
  for (const auto& nf : non_faces) {
    Expo e(n, 0);
    for (int j : nf) e[j] = 1;
    a_gens.emplace_back(std::move(e));
  }
  PresentedIdeal a_part(n, a_gens);

  // Facet toric ideals are independent of each other.
  std::vector<std::future<PresentedIdeal>> jobs;
  for (int i = 0; i < cx.facet_count(); ++i)
    jobs.push_back(std::async(std::launch::deferred | std::launch::async,
                              [&cx, i] { return toric_ideal(cx.facet_generator_vectors(i)); }));
  std::vector<PresentedIdeal> facet_ideals;
  for (auto& j : jobs) facet_ideals.push_back(j.get());

  std::vector<IdealElement> b_gens;
  for (int i = 0; i < cx.facet_count(); ++i) {
    PresentedIdeal embedded = embed_ideal(facet_ideals[i], n, cx.facet(i).gens);
    for (const IdealElement& e : embedded.generators()) b_gens.push_back(e);
  }
  std::sort(b_gens.begin(), b_gens.end());
  b_gens.erase(std::unique(b_gens.begin(), b_gens.end()), b_gens.end());
  PresentedIdeal b_part(n, b_gens);

  std::vector<IdealElement> i_gens = a_gens;
  i_gens.insert(i_gens.end(), b_gens.begin(), b_gens.end());
  PresentedIdeal full(n, std::move(i_gens));

  return Presentation{cx, std::move(full), std::move(a_part), std::move(b_part),
                      std::move(facet_ideals), std::move(non_faces)};
}

} // namespace tfr
