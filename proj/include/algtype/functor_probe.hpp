#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "algtype/finite_algebra.hpp"
#include "algtype/term.hpp"

namespace algtype {

// Checks for the categorical characterisation of free rank-1 algebras,
// restricted to finite algebras. Epimorphisms are tested as surjective
// homomorphisms and monomorphisms as injective ones.

struct SectionWitness {
  std::size_t pool_index = 0;  // which pool algebra is the domain
  Homomorphism surjection;     // pool[pool_index] -> p, with no section
};

struct SectionReport {
  bool holds = true;
  std::optional<SectionWitness> witness;
};

// Every surjective homomorphism from a pool algebra onto p has a right
// inverse homomorphism.
SectionReport every_epi_has_section(const FiniteAlgebra& p, std::span<const FiniteAlgebra> pool);

struct MonoReport {
  bool holds = true;
  std::optional<Homomorphism> witness;  // a non-injective endomorphism
};

// Every endomorphism of p is injective.
MonoReport all_endos_mono(const FiniteAlgebra& p);

// A homomorphism out of the free algebra on one generator x0, determined by
// the image of the generator.
struct GeneratorHom {
  Element image = 0;

  // Value of the induced homomorphism on a one-variable term.
  Element operator()(const FiniteAlgebra& target, const Term& t) const;
};

// mor(P, a) listed in carrier order: one homomorphism per element of a.
std::vector<GeneratorHom> hom_set_bijection(const FiniteAlgebra& a);

// For each v in a and each sample term t over x0:
//   h(t^a(v)) == t^b(h(v)).
// That is the naturality square between mor(P, -) and the underlying set
// functor at h, checked on the samples.
bool naturality_check(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> h,
                      std::span<const Term> samples);

// The free algebra on one generator over a constants-only signature: carrier
// {0 .. c-1} for the constants in signature order, then c for the generator.
// Throws LoadError if some symbol has positive arity.
FiniteAlgebra free_rank_one_constants_only(const Signature& sig);

// Index of the generator in free_rank_one_constants_only(sig).
Element free_generator(const Signature& sig);

}  // namespace algtype
