#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "algtype/error.hpp"
#include "algtype/signature.hpp"
#include "algtype/term.hpp"

namespace algtype {

using Handle = std::size_t;

// Category-level view of a finite fragment of a free algebra F(X). Handles
// are opaque; the only available facts are which handles are basis
// elements, whether some endomorphism of F carries one element onto another,
// and which subsets of X determine an element's term operation.
//
// Required: maps_onto is reflexive and transitive, depends_only_on(h, X) is
// true, and depends_only_on is monotone in the subset.
class FreeAlgebraOracle {
 public:
  virtual ~FreeAlgebraOracle() = default;

  virtual std::size_t basis_size() const = 0;
  virtual std::vector<Handle> elements() const = 0;
  virtual bool is_basis_element(Handle h) const = 0;
  virtual bool maps_onto(Handle from, Handle to) const = 0;
  // `subset` lists basis positions 0..basis_size()-1.
  virtual bool depends_only_on(Handle h, std::span<const std::size_t> subset) const = 0;
};

// Oracle over an explicit list of terms; handle i is terms[i].
class TermFragmentOracle final : public FreeAlgebraOracle {
 public:
  TermFragmentOracle(std::vector<Term> terms, std::size_t basis_size);

  std::size_t basis_size() const override { return basis_; }
  std::vector<Handle> elements() const override;
  bool is_basis_element(Handle h) const override;
  bool maps_onto(Handle from, Handle to) const override;
  bool depends_only_on(Handle h, std::span<const std::size_t> subset) const override;

  // Looks behind the barrier. Recovery code never calls this.
  const Term& term(Handle h) const { return terms_.at(h); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<Term> terms_;
  std::vector<std::vector<std::size_t>> vars_;
  std::size_t basis_;
};

// Oracle over enumerate_terms(sig, basis_size, depth, cap). depth >= 1.
TermFragmentOracle build_fragment(const Signature& sig, std::size_t basis_size, std::size_t depth,
                                  std::size_t cap = kDefaultTermCap);

// Partition of the non-basis handles Y into the classes of the least
// equivalence relation containing "maps onto". Classes are ordered by their
// first handle and list handles in elements() order.
struct SClasses {
  std::vector<std::vector<Handle>> classes;
};

// Uses the preorder structure of maps_onto: every element is linked to the
// maximal elements above it, which needs |Y| * |frontier| queries.
SClasses compute_classes(const FreeAlgebraOracle& oracle);

// Reference version: all |Y|^2 maps_onto queries merged by union-find.
SClasses compute_classes_exhaustive(const FreeAlgebraOracle& oracle);

// No member of a class maps onto all the others; the basis or depth is too
// small to contain a most general element.
class NoGeneralRepresentative : public Error {
 public:
  using Error::Error;
};

// The first handle of cls (in the order given) that maps onto every member.
Handle most_general_representative(const FreeAlgebraOracle& oracle, std::span<const Handle> cls);

// Least size of a subset A of X with depends_only_on(y, A).
std::size_t representative_essential_rank(const FreeAlgebraOracle& oracle, Handle y);

struct RecoveredClass {
  Handle representative = 0;
  std::size_t rank = 0;
  std::size_t size = 0;
};

struct RecoveredType {
  std::vector<std::size_t> arities;  // sorted ascending
  std::vector<RecoveredClass> classes;
  std::size_t basis_size = 0;
  std::size_t depth = 0;
};

// One round of the pipeline on a fixed oracle: nothing if some class lacks a
// general representative or some rank reaches the basis size. Before
// computing classes it checks that every element is the image of some
// element of rank below the basis size, which every successful round
// implies; small bases fail there cheaply.
std::optional<RecoveredType> recover_at_basis(const FreeAlgebraOracle& oracle, std::size_t depth);

// Supplies an oracle for a requested basis size.
using OracleFactory = std::function<std::unique_ptr<FreeAlgebraOracle>(std::size_t basis_size)>;

// Adaptive pipeline: starting from basis size 1, build a fragment, split Y
// into classes, pick most general representatives and measure their
// essential ranks. If some rank equals the basis size or a class has no
// general representative, double the basis size and repeat.
RecoveredType recover_type(const OracleFactory& factory, std::size_t depth,
                           std::size_t initial_basis = 1);

// recover_type over term fragments of sig; sig is only read by build_fragment.
RecoveredType recover_type(const Signature& sig, std::size_t depth,
                           std::size_t cap = kDefaultTermCap, std::size_t initial_basis = 1);

// A signature whose arities are the recovered multiset.
Signature as_signature(const RecoveredType& recovered);

bool verify_roundtrip(const Signature& sig, std::size_t depth, std::size_t cap = kDefaultTermCap);

}  // namespace algtype
