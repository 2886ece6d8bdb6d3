#include "algtype/operation_table.hpp"

#include <limits>
#include <string>

#include "algtype/error.hpp"

namespace algtype {

std::size_t table_length(std::size_t carrier_size, std::size_t arity) {
  std::size_t len = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (carrier_size != 0 && len > (std::numeric_limits<std::size_t>::max() >> 8) / carrier_size) {
      throw LoadError("table of arity " + std::to_string(arity) + " over " +
                      std::to_string(carrier_size) + " elements is too large");
    }
    len *= carrier_size;
  }
  return len;
}

OperationTable::OperationTable(std::size_t arity, std::size_t carrier_size,
                               std::vector<Element> values)
    : arity_(arity), carrier_(carrier_size), values_(std::move(values)) {
  if (carrier_ == 0) throw LoadError("carrier size must be positive");
  const std::size_t expected = table_length(carrier_, arity_);
  if (values_.size() != expected) {
    throw LoadError("table length " + std::to_string(values_.size()) + ", expected " +
                    std::to_string(expected));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= carrier_) {
      throw LoadError("table entry " + std::to_string(i) + " = " + std::to_string(values_[i]) +
                      " is outside the carrier");
    }
  }
}

std::size_t OperationTable::index_of(std::span<const Element> args) const {
  std::size_t idx = 0;
  for (Element a : args) idx = idx * carrier_ + a;
  return idx;
}

std::vector<Element> OperationTable::tuple_at(std::size_t index) const {
  std::vector<Element> out(arity_);
  for (std::size_t j = arity_; j-- > 0;) {
    out[j] = static_cast<Element>(index % carrier_);
    index /= carrier_;
  }
  return out;
}

OperationTable projection(std::size_t carrier_size, std::size_t arity, std::size_t coordinate) {
  if (coordinate >= arity) throw LoadError("projection coordinate out of range");
  const std::size_t len = table_length(carrier_size, arity);
  std::size_t stride = table_length(carrier_size, arity - 1 - coordinate);
  std::vector<Element> values(len);
  for (std::size_t i = 0; i < len; ++i) {
    values[i] = static_cast<Element>((i / stride) % carrier_size);
  }
  return OperationTable(arity, carrier_size, std::move(values));
}

OperationTable compose_tables(const OperationTable& outer, std::span<const OperationTable> inner,
                              std::size_t arity) {
  if (inner.size() != outer.arity()) throw LoadError("composition arity mismatch");
  const std::size_t n = outer.carrier_size();
  for (const auto& t : inner) {
    if (t.arity() != arity || t.carrier_size() != n) {
      throw LoadError("composition components disagree on arity or carrier");
    }
  }
  const std::size_t len = table_length(n, arity);
  std::vector<Element> values(len);
  std::vector<Element> args(inner.size());
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < inner.size(); ++j) args[j] = inner[j].at(i);
    values[i] = outer(args);
  }
  return OperationTable(arity, n, std::move(values));
}

}  // namespace algtype
