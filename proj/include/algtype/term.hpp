#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algtype/signature.hpp"

namespace algtype {

// Default bound on the number of terms a single enumeration may produce.
inline constexpr std::size_t kDefaultTermCap = 100'000;

// An element of the absolutely free algebra F(X): either a basis variable
// x<i> or a symbol applied to exactly arity-many argument terms. Terms are
// immutable and share structure; copying is cheap.
class Term {
 public:
  static Term variable(std::size_t index);
  static Term apply(const Signature& sig, std::size_t symbol, std::vector<Term> args);
  static Term apply(const Signature& sig, std::string_view name, std::vector<Term> args);
  // Same head symbol as `head` (an application), new arguments of equal count.
  static Term with_arguments(const Term& head, std::vector<Term> args);

  bool is_variable() const;
  std::size_t variable_index() const;
  const std::string& symbol() const;
  // Index of the head symbol in the signature the term was built against.
  std::size_t symbol_index() const;
  std::span<const Term> arguments() const;
  // 0 for variables and nullary applications.
  std::size_t depth() const;
  std::size_t hash() const;

  // Identity of the shared node; equal ids imply equal terms.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  static Term make_application(std::size_t symbol, const std::string& name, std::vector<Term> args);
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  bool variable = false;
  std::size_t index = 0;  // variable index or symbol index
  std::string symbol;
  std::vector<Term> args;
  std::size_t depth = 0;
  std::size_t hash = 0;
};

inline bool Term::is_variable() const { return node_->variable; }
inline std::size_t Term::variable_index() const { return node_->index; }
inline const std::string& Term::symbol() const { return node_->symbol; }
inline std::size_t Term::symbol_index() const { return node_->index; }
inline std::span<const Term> Term::arguments() const { return node_->args; }
inline std::size_t Term::depth() const { return node_->depth; }
inline std::size_t Term::hash() const { return node_->hash; }

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// The variables occurring in t.
std::set<std::size_t> vars(const Term& t);

// An endomorphism of F(X), given by the images of the basis variables.
// Variables without an explicit image are mapped to themselves.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::vector<Term> images) : images_(std::move(images)) {}

  static Substitution identity(std::size_t basis_size);

  Term image(std::size_t var) const;
  void set(std::size_t var, Term image);
  // Number of explicitly stored images (variables 0 .. size-1).
  std::size_t size() const { return images_.size(); }

  friend bool operator==(const Substitution& a, const Substitution& b);

 private:
  std::vector<Term> images_;
};

// The homomorphic extension of s applied to t.
Term substitute(const Substitution& s, const Term& t);

// (outer ∘ inner)(x) = substitute(outer, inner(x)).
Substitution compose(const Substitution& outer, const Substitution& inner);

// One-way matching: a substitution s with substitute(s, pattern) == target,
// bound on vars(pattern) and identity elsewhere, or nothing.
std::optional<Substitution> match(const Term& pattern, const Term& target);

// match(pattern, target).has_value(), without building the substitution.
bool matches(const Term& pattern, const Term& target);

// Number of terms of depth <= max_depth over the basis, saturating at SIZE_MAX.
std::size_t count_terms(const Signature& sig, std::size_t basis_size, std::size_t max_depth);

// All terms of depth <= max_depth over x0..x{basis_size-1}, each once, ordered
// by depth, then symbol order, then lexicographically by argument positions
// in the order of the previous levels. Throws CapExceeded if the count would
// exceed cap.
std::vector<Term> enumerate_terms(const Signature& sig, std::size_t basis_size,
                                  std::size_t max_depth, std::size_t cap = kDefaultTermCap);

// Prefix s-expression syntax: variables x<i>, nullary symbols bare, other
// applications as (f a b ...).
std::string to_string(const Term& t);
Term parse_term(const Signature& sig, std::string_view text);

}  // namespace algtype
