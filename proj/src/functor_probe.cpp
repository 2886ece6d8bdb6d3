#include "algtype/functor_probe.hpp"

#include <algorithm>
#include <string>

#include "algtype/error.hpp"

namespace algtype {

namespace {

bool is_surjective(std::span<const Element> map, std::size_t codomain) {
  std::vector<bool> hit(codomain, false);
  for (Element v : map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_injective(std::span<const Element> map) {
  std::vector<Element> sorted(map.begin(), map.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

SectionReport every_epi_has_section(const FiniteAlgebra& p, std::span<const FiniteAlgebra> pool) {
  SectionReport report;
  for (std::size_t i = 0; i < pool.size() && report.holds; ++i) {
    const FiniteAlgebra& a = pool[i];
    require_same_signature(p, a);
    const auto sections = enumerate_homomorphisms(p, a);
    for_each_homomorphism(a, p, [&](const Homomorphism& h) {
      if (!is_surjective(h, p.carrier_size())) return true;
      const bool split = std::any_of(sections.begin(), sections.end(), [&](const Homomorphism& g) {
        for (std::size_t v = 0; v < g.size(); ++v) {
          if (h[g[v]] != v) return false;
        }
        return true;
      });
      if (!split) {
        report.holds = false;
        report.witness = SectionWitness{i, h};
        return false;
      }
      return true;
    });
  }
  return report;
}

MonoReport all_endos_mono(const FiniteAlgebra& p) {
  MonoReport report;
  for_each_homomorphism(p, p, [&](const Homomorphism& h) {
    if (is_injective(h)) return true;
    report.holds = false;
    report.witness = h;
    return false;
  });
  return report;
}

Element GeneratorHom::operator()(const FiniteAlgebra& target, const Term& t) const {
  const Element assignment[] = {image};
  return evaluate(target, t, assignment);
}

std::vector<GeneratorHom> hom_set_bijection(const FiniteAlgebra& a) {
  std::vector<GeneratorHom> out(a.carrier_size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v].image = static_cast<Element>(v);
  return out;
}

bool naturality_check(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> h,
                      std::span<const Term> samples) {
  require_same_signature(a, b);
  if (h.size() != a.carrier_size()) throw LoadError("map size does not match the domain carrier");
  const auto via_a = hom_set_bijection(a);
  for (std::size_t v = 0; v < a.carrier_size(); ++v) {
    // Post-composing the generator hom at v with h gives the generator hom at h(v).
    const GeneratorHom pushed{h[v]};
    for (const auto& t : samples) {
      if (h[via_a[v](a, t)] != pushed(b, t)) return false;
    }
  }
  return true;
}

FiniteAlgebra free_rank_one_constants_only(const Signature& sig) {
  std::vector<std::vector<Element>> tables;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (sig[s].arity != 0) {
      throw LoadError("symbol '" + sig[s].name + "' has positive arity; the free algebra is infinite");
    }
    tables.push_back({static_cast<Element>(s)});
  }
  return FiniteAlgebra(sig, sig.size() + 1, std::move(tables));
}

Element free_generator(const Signature& sig) { return static_cast<Element>(sig.size()); }

}  // namespace algtype
