#include "algtype/signature.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "algtype/error.hpp"

namespace algtype {

namespace {

void check_name(const std::string& name) {
  if (name.empty()) throw LoadError("symbol name is empty");
  for (unsigned char ch : name) {
    if (std::isspace(ch) || ch == '(' || ch == ')') {
      throw LoadError("symbol name '" + name + "' contains a reserved character");
    }
  }
  if (is_variable_name(name)) {
    throw LoadError("symbol name '" + name + "' collides with variable syntax");
  }
}

}  // namespace

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    check_name(s.name);
    if (!seen.insert(s.name).second) {
      throw LoadError("duplicate symbol name '" + s.name + "'");
    }
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::max_arity() const {
  std::size_t best = 0;
  for (const auto& s : symbols_) best = std::max(best, s.arity);
  return best;
}

bool is_variable_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::vector<std::size_t> arity_multiset(const Signature& sig) {
  std::vector<std::size_t> out;
  out.reserve(sig.size());
  for (const auto& s : sig.symbols()) out.push_back(s.arity);
  std::sort(out.begin(), out.end());
  return out;
}

bool are_equivalent(const Signature& a, const Signature& b) {
  return arity_multiset(a) == arity_multiset(b);
}

Signature signature_from_arities(const std::vector<std::size_t>& arities) {
  std::vector<Symbol> symbols;
  symbols.reserve(arities.size());
  for (std::size_t i = 0; i < arities.size(); ++i) {
    symbols.push_back({"s" + std::to_string(i), arities[i]});
  }
  return Signature(std::move(symbols));
}

}  // namespace algtype
