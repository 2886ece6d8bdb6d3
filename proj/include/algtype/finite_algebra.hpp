#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "algtype/operation_table.hpp"
#include "algtype/signature.hpp"
#include "algtype/term.hpp"

namespace algtype {

// A finite algebra of a given type on the carrier {0..n-1}, n >= 1, with one
// operation table per symbol (in signature order).
class FiniteAlgebra {
 public:
  FiniteAlgebra(Signature sig, std::size_t carrier_size, std::vector<std::vector<Element>> tables);

  const Signature& signature() const { return sig_; }
  std::size_t carrier_size() const { return carrier_; }
  const OperationTable& operation(std::size_t symbol) const { return ops_[symbol]; }
  const OperationTable& operation(std::string_view name) const;

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  Signature sig_;
  std::size_t carrier_;
  std::vector<OperationTable> ops_;
};

// Values of the basis variables; index i holds the image of x<i>.
using Assignment = std::vector<Element>;

// A total map between carriers, as images of 0..n-1.
using Homomorphism = std::vector<Element>;

// Value of t in alg under the assignment. Throws SignatureMismatch if t uses
// a symbol alg does not interpret with the same arity, LoadError if the
// assignment misses a variable of t or holds a value outside the carrier.
Element evaluate(const FiniteAlgebra& alg, const Term& t, std::span<const Element> assignment);

// The basis_size-ary term operation of t on alg.
OperationTable term_operation_table(const FiniteAlgebra& alg, const Term& t, std::size_t basis_size);

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> map);

// Calls visit for every homomorphism a -> b in lexicographic order of
// (h(0), h(1), ...). Stops early when visit returns false.
void for_each_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                           const std::function<bool(const Homomorphism&)>& visit);

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Throws SignatureMismatch unless the two types are identical symbol lists.
void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace algtype
