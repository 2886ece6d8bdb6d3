#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algtype {

struct Symbol {
  std::string name;
  std::size_t arity = 0;

  bool operator==(const Symbol&) const = default;
};

// A finite algebra type: an ordered list of operation symbols with finite
// arities. Symbol names are unique and must be usable as bare atoms in the
// term syntax (no whitespace or parentheses, and not of the form x<digits>).
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t max_arity() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

// True iff the name would be read as a variable by the term parser.
bool is_variable_name(std::string_view name);

// One entry per symbol, sorted ascending.
std::vector<std::size_t> arity_multiset(const Signature& sig);

// Two finite types are equivalent iff their arity multisets coincide.
bool are_equivalent(const Signature& a, const Signature& b);

// Builds a signature with generated names s0, s1, ... for the given arities.
Signature signature_from_arities(const std::vector<std::size_t>& arities);

}  // namespace algtype
