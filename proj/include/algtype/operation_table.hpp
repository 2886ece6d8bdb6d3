#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace algtype {

using Element = std::uint32_t;

// A k-ary operation on {0..n-1} stored as an exhaustive value table. The
// argument tuple (a_0, ..., a_{k-1}) lives at index sum a_j * n^(k-1-j), i.e.
// the leftmost argument is most significant. k = 0 gives a single entry.
class OperationTable {
 public:
  OperationTable(std::size_t arity, std::size_t carrier_size, std::vector<Element> values);

  std::size_t arity() const { return arity_; }
  std::size_t carrier_size() const { return carrier_; }
  std::span<const Element> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  Element operator()(std::span<const Element> args) const { return values_[index_of(args)]; }
  Element at(std::size_t index) const { return values_[index]; }

  std::size_t index_of(std::span<const Element> args) const;
  // Inverse of index_of.
  std::vector<Element> tuple_at(std::size_t index) const;

  bool operator==(const OperationTable&) const = default;

 private:
  std::size_t arity_;
  std::size_t carrier_;
  std::vector<Element> values_;
};

// n^k, throwing LoadError if it does not fit in memory-sized arithmetic.
std::size_t table_length(std::size_t carrier_size, std::size_t arity);

// The j-th projection of arity k.
OperationTable projection(std::size_t carrier_size, std::size_t arity, std::size_t coordinate);

// Pointwise composition outer(inner_1, ..., inner_k) as an operation of the
// given arity; every inner table must have that arity and
// outer.arity() == inner.size().
OperationTable compose_tables(const OperationTable& outer, std::span<const OperationTable> inner,
                              std::size_t arity);

}  // namespace algtype
