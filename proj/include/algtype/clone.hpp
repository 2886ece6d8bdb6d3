#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algtype/finite_algebra.hpp"
#include "algtype/operation_table.hpp"
#include "algtype/signature.hpp"
#include "algtype/term.hpp"

namespace algtype {

// Sorted, duplicate-free argument positions of an operation.
using CoordinateSet = std::vector<std::size_t>;

// True iff op's value is determined by the restriction of its argument tuple
// to `subset`. Throws LoadError if subset names a position >= arity.
bool is_support(const OperationTable& op, std::span<const std::size_t> subset);

// Coordinates i such that two tuples differing only at i take different
// values. This is the least support: the support family is closed under
// supersets and intersections.
CoordinateSet minimal_support(const OperationTable& op);

std::size_t essential_rank(const OperationTable& op);

// Supremum of essential ranks for an absolutely free class: either a finite
// number or countably infinite.
class RankEstimate {
 public:
  static RankEstimate finite(std::size_t value) { return RankEstimate(value); }
  static RankEstimate countably_infinite() { return RankEstimate(std::nullopt); }

  bool is_finite() const { return value_.has_value(); }
  std::size_t value() const { return *value_; }
  std::string to_string() const;

  bool operator==(const RankEstimate&) const = default;

 private:
  explicit RankEstimate(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

RankEstimate variety_rank_estimate(const Signature& sig);

// A bounded fragment of the clone H^X(A): the distinct term operations of
// depth-bounded terms, each with the first term (in enumeration order) that
// generates it.
struct CloneFragment {
  struct Entry {
    OperationTable table;
    Term generator;
  };

  std::size_t basis_size = 0;
  std::size_t max_depth = 0;
  std::vector<Entry> entries;

  // Index of the entry holding `table`, if any.
  std::optional<std::size_t> find(const OperationTable& table) const;
};

CloneFragment generate_clone_fragment(const FiniteAlgebra& alg, std::size_t basis_size,
                                      std::size_t max_depth, std::size_t cap = kDefaultTermCap);

}  // namespace algtype
