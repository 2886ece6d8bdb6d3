#include "algtype/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <limits>

#include "algtype/error.hpp"

namespace algtype {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    out *= base;
  }
  return out;
}

bool next_tuple(std::vector<std::size_t>& idx, std::size_t radix) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < radix) return true;
    idx[pos] = 0;
  }
  return false;
}

}  // namespace

Term Term::variable(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->variable = true;
  node->index = index;
  node->hash = mix(0x51ed270b, index);
  return Term(std::move(node));
}

Term Term::apply(const Signature& sig, std::size_t symbol, std::vector<Term> args) {
  if (symbol >= sig.size()) throw SignatureMismatch("symbol index out of range");
  const Symbol& s = sig[symbol];
  if (args.size() != s.arity) {
    throw SignatureMismatch("symbol '" + s.name + "' expects " + std::to_string(s.arity) +
                            " arguments, got " + std::to_string(args.size()));
  }
  return make_application(symbol, s.name, std::move(args));
}

Term Term::apply(const Signature& sig, std::string_view name, std::vector<Term> args) {
  auto idx = sig.find(name);
  if (!idx) throw SignatureMismatch("unknown symbol '" + std::string(name) + "'");
  return apply(sig, *idx, std::move(args));
}

Term Term::with_arguments(const Term& head, std::vector<Term> args) {
  if (head.is_variable() || args.size() != head.arguments().size()) {
    throw SignatureMismatch("with_arguments: arity mismatch for '" + head.symbol() + "'");
  }
  return make_application(head.symbol_index(), head.symbol(), std::move(args));
}

Term Term::make_application(std::size_t symbol, const std::string& name, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->index = symbol;
  node->symbol = name;
  std::size_t h = std::hash<std::string>{}(name);
  std::size_t depth = 0;
  for (const auto& a : args) {
    depth = std::max(depth, a.depth() + 1);
    h = mix(h, a.hash());
  }
  node->depth = depth;
  node->hash = h;
  node->args = std::move(args);
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.variable != y.variable || x.depth != y.depth) return false;
  if (x.variable) return x.index == y.index;
  return x.symbol == y.symbol && x.args == y.args;
}

std::set<std::size_t> vars(const Term& t) {
  std::set<std::size_t> out;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->is_variable()) {
      out.insert(cur->variable_index());
    } else {
      for (const auto& a : cur->arguments()) stack.push_back(&a);
    }
  }
  return out;
}

Substitution Substitution::identity(std::size_t basis_size) {
  std::vector<Term> images;
  images.reserve(basis_size);
  for (std::size_t i = 0; i < basis_size; ++i) images.push_back(Term::variable(i));
  return Substitution(std::move(images));
}

Term Substitution::image(std::size_t var) const {
  return var < images_.size() ? images_[var] : Term::variable(var);
}

void Substitution::set(std::size_t var, Term image) {
  while (images_.size() <= var) images_.push_back(Term::variable(images_.size()));
  images_[var] = std::move(image);
}

bool operator==(const Substitution& a, const Substitution& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.image(i) == b.image(i))) return false;
  }
  return true;
}

namespace {

// Rebuilds only the spine above changed variables; untouched subterms are shared.
Term substitute_impl(const Substitution& s, const Term& t) {
  if (t.is_variable()) return t.variable_index() < s.size() ? s.image(t.variable_index()) : t;
  auto args = t.arguments();
  if (args.empty()) return t;
  std::vector<Term> out;
  out.reserve(args.size());
  bool changed = false;
  for (const auto& a : args) {
    out.push_back(substitute_impl(s, a));
    changed = changed || out.back().id() != a.id();
  }
  if (!changed) return t;
  return Term::with_arguments(t, std::move(out));
}

}  // namespace

Term substitute(const Substitution& s, const Term& t) { return substitute_impl(s, t); }

Substitution compose(const Substitution& outer, const Substitution& inner) {
  const std::size_t n = std::max(outer.size(), inner.size());
  std::vector<Term> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(substitute(outer, inner.image(i)));
  return Substitution(std::move(images));
}

namespace {

bool match_impl(const Term& p, const Term& t, std::vector<std::optional<Term>>& bound) {
  if (p.is_variable()) {
    auto& slot = bound[p.variable_index()];
    if (!slot) {
      slot = t;
      return true;
    }
    return *slot == t;
  }
  if (t.is_variable() || p.symbol() != t.symbol()) return false;
  auto pa = p.arguments();
  auto ta = t.arguments();
  if (pa.size() != ta.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!match_impl(pa[i], ta[i], bound)) return false;
  }
  return true;
}

// Same walk as match_impl with borrowed bindings; no allocation for small
// patterns.
bool matches_impl(const Term& p, const Term& t, std::span<const Term*> bound) {
  if (p.is_variable()) {
    const Term*& slot = bound[p.variable_index()];
    if (slot == nullptr) {
      slot = &t;
      return true;
    }
    return *slot == t;
  }
  if (t.is_variable() || p.symbol() != t.symbol()) return false;
  auto pa = p.arguments();
  auto ta = t.arguments();
  if (pa.size() != ta.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!matches_impl(pa[i], ta[i], bound)) return false;
  }
  return true;
}

std::size_t max_var_plus_one(const Term& t) {
  if (t.is_variable()) return t.variable_index() + 1;
  std::size_t m = 0;
  for (const auto& a : t.arguments()) m = std::max(m, max_var_plus_one(a));
  return m;
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  if (pattern.depth() > target.depth()) return std::nullopt;
  std::vector<std::optional<Term>> bound(max_var_plus_one(pattern));
  if (!match_impl(pattern, target, bound)) return std::nullopt;
  std::vector<Term> images;
  images.reserve(bound.size());
  for (std::size_t i = 0; i < bound.size(); ++i) {
    images.push_back(bound[i] ? *bound[i] : Term::variable(i));
  }
  return Substitution(std::move(images));
}

bool matches(const Term& pattern, const Term& target) {
  if (pattern.depth() > target.depth()) return false;
  const std::size_t n = max_var_plus_one(pattern);
  std::array<const Term*, 16> small{};
  if (n <= small.size()) return matches_impl(pattern, target, std::span<const Term*>(small.data(), n));
  std::vector<const Term*> large(n, nullptr);
  return matches_impl(pattern, target, large);
}

std::size_t count_terms(const Signature& sig, std::size_t basis_size, std::size_t max_depth) {
  std::size_t base = basis_size;
  for (const auto& s : sig.symbols()) {
    if (s.arity == 0) base = saturating_add(base, 1);
  }
  std::size_t level = base;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::size_t next = base;
    for (const auto& s : sig.symbols()) {
      if (s.arity > 0) next = saturating_add(next, saturating_pow(level, s.arity));
    }
    if (next == level) break;  // no symbol of positive arity, or nothing to build from
    level = next;
  }
  return level;
}

std::vector<Term> enumerate_terms(const Signature& sig, std::size_t basis_size,
                                  std::size_t max_depth, std::size_t cap) {
  const std::size_t total = count_terms(sig, basis_size, max_depth);
  if (total > cap) throw CapExceeded(total, cap);

  std::vector<Term> all;
  all.reserve(total);
  for (std::size_t i = 0; i < basis_size; ++i) all.push_back(Term::variable(i));
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (sig[s].arity == 0) all.push_back(Term::apply(sig, s, {}));
  }

  // level_end[j] = number of terms of depth <= j.
  std::vector<std::size_t> level_end{all.size()};
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t pool = level_end[d - 1];
    const std::size_t shallow = d >= 2 ? level_end[d - 2] : 0;
    if (pool == 0) break;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t k = sig[s].arity;
      if (k == 0) continue;
      std::vector<std::size_t> idx(k, 0);
      do {
        // Emit only tuples with an argument of depth exactly d-1.
        if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= shallow; })) {
          std::vector<Term> args;
          args.reserve(k);
          for (std::size_t i : idx) args.push_back(all[i]);
          all.push_back(Term::apply(sig, s, std::move(args)));
        }
      } while (next_tuple(idx, pool));
    }
    if (all.size() == pool) break;
    level_end.push_back(all.size());
  }
  return all;
}

// ---------------------------------------------------------------------------
// Text syntax.

namespace {

void print_impl(const Term& t, std::string& out) {
  if (t.is_variable()) {
    out += 'x';
    out += std::to_string(t.variable_index());
    return;
  }
  auto args = t.arguments();
  if (args.empty()) {
    out += t.symbol();
    return;
  }
  out += '(';
  out += t.symbol();
  for (const auto& a : args) {
    out += ' ';
    print_impl(a, out);
  }
  out += ')';
}

class TermParser {
 public:
  TermParser(const Signature& sig, std::string_view text) : sig_(sig), text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw LoadError("term syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view atom() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected an atom");
    return text_.substr(start, pos_ - start);
  }

  Term term() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') {
      const std::size_t start = pos_;
      std::string_view name = atom();
      if (is_variable_name(name)) {
        if (name.size() > 2 && name[1] == '0') {
          pos_ = start;
          fail("variable index has a leading zero");
        }
        std::size_t index = 0;
        for (char c : name.substr(1)) {
          if (index > (std::numeric_limits<std::size_t>::max() - 9) / 10) {
            pos_ = start;
            fail("variable index too large");
          }
          index = index * 10 + static_cast<std::size_t>(c - '0');
        }
        return Term::variable(index);
      }
      auto sym = sig_.find(name);
      if (!sym) {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      if (sig_[*sym].arity != 0) {
        pos_ = start;
        fail("symbol '" + std::string(name) + "' has arity " + std::to_string(sig_[*sym].arity) +
             " and must be applied");
      }
      return Term::apply(sig_, *sym, {});
    }
    ++pos_;  // '('
    const std::size_t head_pos = pos_;
    std::string_view name = atom();
    auto sym = sig_.find(name);
    if (!sym) {
      pos_ = head_pos;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    std::vector<Term> args;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("missing ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      args.push_back(term());
    }
    const std::size_t arity = sig_[*sym].arity;
    if (arity == 0) {
      pos_ = head_pos;
      fail("nullary symbol '" + std::string(name) + "' must be written bare");
    }
    if (args.size() != arity) {
      pos_ = head_pos;
      fail("symbol '" + std::string(name) + "' expects " + std::to_string(arity) +
           " arguments, got " + std::to_string(args.size()));
    }
    return Term::apply(sig_, *sym, std::move(args));
  }

  const Signature& sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_impl(t, out);
  return out;
}

Term parse_term(const Signature& sig, std::string_view text) { return TermParser(sig, text).parse(); }

}  // namespace algtype
