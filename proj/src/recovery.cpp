#include "algtype/recovery.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "union_find.hpp"

namespace algtype {

TermFragmentOracle::TermFragmentOracle(std::vector<Term> terms, std::size_t basis_size)
    : terms_(std::move(terms)), basis_(basis_size) {
  vars_.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto v = vars(t);
    for (std::size_t x : v) {
      if (x >= basis_) {
        throw LoadError("fragment term " + to_string(t) + " lies outside the basis");
      }
    }
    vars_.emplace_back(v.begin(), v.end());
  }
}

std::vector<Handle> TermFragmentOracle::elements() const {
  std::vector<Handle> out(terms_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

bool TermFragmentOracle::is_basis_element(Handle h) const { return terms_.at(h).is_variable(); }

bool TermFragmentOracle::maps_onto(Handle from, Handle to) const {
  return matches(terms_.at(from), terms_.at(to));
}

bool TermFragmentOracle::depends_only_on(Handle h, std::span<const std::size_t> subset) const {
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  const auto& v = vars_.at(h);
  return std::includes(sorted.begin(), sorted.end(), v.begin(), v.end());
}

TermFragmentOracle build_fragment(const Signature& sig, std::size_t basis_size, std::size_t depth,
                                  std::size_t cap) {
  if (depth < 1) throw LoadError("fragment depth must be at least 1");
  return TermFragmentOracle(enumerate_terms(sig, basis_size, depth, cap), basis_size);
}

namespace {

std::vector<Handle> non_basis_elements(const FreeAlgebraOracle& oracle) {
  std::vector<Handle> y;
  for (Handle h : oracle.elements()) {
    if (!oracle.is_basis_element(h)) y.push_back(h);
  }
  return y;
}

// Positions (into `items`) of elements not strictly below an earlier kept
// one. Contains a member of every maximal equivalence class of the preorder,
// in particular the first of each.
std::vector<std::size_t> frontier(const FreeAlgebraOracle& oracle, std::span<const Handle> items) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t c) {
      return oracle.maps_onto(items[c], items[i]);
    });
    if (dominated) continue;
    // Nothing kept maps onto items[i]; drop whatever items[i] strictly covers.
    std::erase_if(kept, [&](std::size_t c) { return oracle.maps_onto(items[i], items[c]); });
    kept.push_back(i);
  }
  return kept;
}

SClasses collect(const std::vector<Handle>& y, detail::UnionFind& uf) {
  SClasses out;
  std::vector<std::size_t> class_of_root(y.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::size_t root = uf.find(i);
    if (class_of_root[root] == std::numeric_limits<std::size_t>::max()) {
      class_of_root[root] = out.classes.size();
      out.classes.emplace_back();
    }
    out.classes[class_of_root[root]].push_back(y[i]);
  }
  return out;
}

// A round succeeds only if each class has a general member of rank below the
// basis size, and that member maps onto every element of its class. So if
// some element of Y is the image of no such low-rank element, the round
// fails; this is decided without splitting Y into classes.
bool every_element_covered(const FreeAlgebraOracle& oracle, const std::vector<Handle>& y) {
  std::vector<Handle> low;
  for (Handle h : y) {
    if (representative_essential_rank(oracle, h) < oracle.basis_size()) low.push_back(h);
  }
  // Covers that worked recently, most recent first; neighbours in Y tend to
  // share one.
  constexpr std::size_t kRecent = 16;
  std::vector<Handle> recent;
  for (Handle target : y) {
    auto hit = std::find_if(recent.begin(), recent.end(),
                            [&](Handle c) { return oracle.maps_onto(c, target); });
    if (hit != recent.end()) {
      std::rotate(recent.begin(), hit, hit + 1);
      continue;
    }
    auto found = std::find_if(low.begin(), low.end(), [&](Handle c) { return oracle.maps_onto(c, target); });
    if (found == low.end()) return false;
    recent.insert(recent.begin(), *found);
    if (recent.size() > kRecent) recent.pop_back();
  }
  return true;
}

}  // namespace

SClasses compute_classes(const FreeAlgebraOracle& oracle) {
  const auto y = non_basis_elements(oracle);
  const auto top = frontier(oracle, y);
  // With maps_onto a preorder, a R b implies every c above a is above b, so
  // linking each element to all frontier elements above it yields the same
  // components as the full symmetric closure.
  detail::UnionFind uf(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t c : top) {
      if (oracle.maps_onto(y[c], y[i])) uf.unite(c, i);
    }
  }
  return collect(y, uf);
}

SClasses compute_classes_exhaustive(const FreeAlgebraOracle& oracle) {
  const auto y = non_basis_elements(oracle);
  detail::UnionFind uf(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (i != j && oracle.maps_onto(y[i], y[j])) uf.unite(i, j);
    }
  }
  return collect(y, uf);
}

Handle most_general_representative(const FreeAlgebraOracle& oracle, std::span<const Handle> cls) {
  if (cls.empty()) throw NoGeneralRepresentative("empty class");
  // A general element is maximal, and the first one in order is never
  // dominated by an earlier one, so only frontier members need checking.
  for (std::size_t c : frontier(oracle, cls)) {
    const bool general = std::all_of(cls.begin(), cls.end(),
                                     [&](Handle z) { return oracle.maps_onto(cls[c], z); });
    if (general) return cls[c];
  }
  throw NoGeneralRepresentative("no element of a class of size " + std::to_string(cls.size()) +
                                " maps onto all others");
}

std::size_t representative_essential_rank(const FreeAlgebraOracle& oracle, Handle y) {
  // Supports are closed under intersection, so greedy removal reaches the
  // least one.
  std::vector<std::size_t> support(oracle.basis_size());
  for (std::size_t i = 0; i < support.size(); ++i) support[i] = i;
  for (std::size_t x = 0; x < oracle.basis_size(); ++x) {
    std::vector<std::size_t> smaller;
    smaller.reserve(support.size());
    for (std::size_t s : support) {
      if (s != x) smaller.push_back(s);
    }
    if (oracle.depends_only_on(y, smaller)) support = std::move(smaller);
  }
  return support.size();
}

std::optional<RecoveredType> recover_at_basis(const FreeAlgebraOracle& oracle, std::size_t depth) {
  RecoveredType out;
  out.basis_size = oracle.basis_size();
  out.depth = depth;
  if (!every_element_covered(oracle, non_basis_elements(oracle))) return std::nullopt;
  for (const auto& cls : compute_classes(oracle).classes) {
    Handle rep;
    try {
      rep = most_general_representative(oracle, cls);
    } catch (const NoGeneralRepresentative&) {
      return std::nullopt;
    }
    const std::size_t rank = representative_essential_rank(oracle, rep);
    if (rank >= oracle.basis_size()) return std::nullopt;
    out.classes.push_back({rep, rank, cls.size()});
    out.arities.push_back(rank);
  }
  std::sort(out.arities.begin(), out.arities.end());
  return out;
}

RecoveredType recover_type(const OracleFactory& factory, std::size_t depth,
                           std::size_t initial_basis) {
  std::size_t basis = std::max<std::size_t>(initial_basis, 1);
  while (true) {
    auto oracle = factory(basis);
    if (auto result = recover_at_basis(*oracle, depth)) return *result;
    if (basis > std::numeric_limits<std::size_t>::max() / 2) {
      throw Error("basis size overflow during recovery");
    }
    basis *= 2;
  }
}

RecoveredType recover_type(const Signature& sig, std::size_t depth, std::size_t cap,
                           std::size_t initial_basis) {
  OracleFactory factory = [&](std::size_t basis) -> std::unique_ptr<FreeAlgebraOracle> {
    return std::make_unique<TermFragmentOracle>(build_fragment(sig, basis, depth, cap));
  };
  return recover_type(factory, depth, initial_basis);
}

Signature as_signature(const RecoveredType& recovered) {
  return signature_from_arities(recovered.arities);
}

bool verify_roundtrip(const Signature& sig, std::size_t depth, std::size_t cap) {
  return are_equivalent(sig, as_signature(recover_type(sig, depth, cap)));
}

}  // namespace algtype
