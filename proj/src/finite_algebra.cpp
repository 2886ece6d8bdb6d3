#include "algtype/finite_algebra.hpp"

#include <algorithm>
#include <string>

#include "algtype/error.hpp"

namespace algtype {

FiniteAlgebra::FiniteAlgebra(Signature sig, std::size_t carrier_size,
                             std::vector<std::vector<Element>> tables)
    : sig_(std::move(sig)), carrier_(carrier_size) {
  if (carrier_ == 0) throw LoadError("carrier: must be positive");
  if (tables.size() != sig_.size()) {
    throw LoadError("tables: expected " + std::to_string(sig_.size()) + " tables, got " +
                    std::to_string(tables.size()));
  }
  ops_.reserve(tables.size());
  for (std::size_t s = 0; s < tables.size(); ++s) {
    try {
      ops_.emplace_back(sig_[s].arity, carrier_, std::move(tables[s]));
    } catch (const LoadError& e) {
      throw LoadError("tables." + sig_[s].name + ": " + e.what());
    }
  }
}

const OperationTable& FiniteAlgebra::operation(std::string_view name) const {
  auto idx = sig_.find(name);
  if (!idx) throw SignatureMismatch("algebra has no symbol '" + std::string(name) + "'");
  return ops_[*idx];
}

void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature())) {
    throw SignatureMismatch("algebras have different signatures");
  }
}

namespace {

std::size_t resolve_symbol(const Signature& sig, const Term& t) {
  const std::size_t k = t.arguments().size();
  std::size_t idx = t.symbol_index();
  if (idx >= sig.size() || sig[idx].name != t.symbol()) {
    auto found = sig.find(t.symbol());
    if (!found) throw SignatureMismatch("symbol '" + t.symbol() + "' is not interpreted");
    idx = *found;
  }
  if (sig[idx].arity != k) {
    throw SignatureMismatch("symbol '" + t.symbol() + "' has arity " +
                            std::to_string(sig[idx].arity) + " in the algebra, " +
                            std::to_string(k) + " in the term");
  }
  return idx;
}

Element eval_impl(const FiniteAlgebra& alg, const Term& t, std::span<const Element> assignment) {
  if (t.is_variable()) {
    const std::size_t v = t.variable_index();
    if (v >= assignment.size()) {
      throw LoadError("assignment does not cover x" + std::to_string(v));
    }
    return assignment[v];
  }
  const OperationTable& op = alg.operation(resolve_symbol(alg.signature(), t));
  auto args = t.arguments();
  // Horner-style index accumulation avoids a temporary argument vector.
  std::size_t idx = 0;
  for (const auto& a : args) idx = idx * alg.carrier_size() + eval_impl(alg, a, assignment);
  return op.at(idx);
}

}  // namespace

Element evaluate(const FiniteAlgebra& alg, const Term& t, std::span<const Element> assignment) {
  for (Element v : assignment) {
    if (v >= alg.carrier_size()) {
      throw LoadError("assignment value " + std::to_string(v) + " is outside the carrier");
    }
  }
  return eval_impl(alg, t, assignment);
}

OperationTable term_operation_table(const FiniteAlgebra& alg, const Term& t, std::size_t basis_size) {
  for (std::size_t v : vars(t)) {
    if (v >= basis_size) {
      throw LoadError("basis of size " + std::to_string(basis_size) + " does not cover x" +
                      std::to_string(v));
    }
  }
  const std::size_t n = alg.carrier_size();
  const std::size_t len = table_length(n, basis_size);
  std::vector<Element> values(len);
  Assignment assignment(basis_size, 0);
  for (std::size_t i = 0; i < len; ++i) {
    values[i] = eval_impl(alg, t, assignment);
    // Advance the assignment like an odometer, x0 most significant.
    for (std::size_t j = basis_size; j-- > 0;) {
      if (++assignment[j] < n) break;
      assignment[j] = 0;
    }
  }
  return OperationTable(basis_size, n, std::move(values));
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> map) {
  require_same_signature(a, b);
  if (map.size() != a.carrier_size()) return false;
  for (Element v : map) {
    if (v >= b.carrier_size()) return false;
  }
  std::vector<Element> image;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const auto& fa = a.operation(s);
    const auto& fb = b.operation(s);
    for (std::size_t i = 0; i < fa.size(); ++i) {
      auto tuple = fa.tuple_at(i);
      image.assign(tuple.size(), 0);
      for (std::size_t j = 0; j < tuple.size(); ++j) image[j] = map[tuple[j]];
      if (map[fa.at(i)] != fb(image)) return false;
    }
  }
  return true;
}

namespace {

// Backtracking search over h(0), h(1), ... with forward propagation: once
// every argument of an operation application in `a` is mapped, the image of
// its result is forced.
class HomSearch {
 public:
  static constexpr long kUnassigned = -1;

  HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b,
            const std::function<bool(const Homomorphism&)>& visit)
      : a_(a), b_(b), visit_(visit), h_(a.carrier_size(), kUnassigned), occurrences_(a.carrier_size()) {
    for (std::size_t s = 0; s < a.signature().size(); ++s) {
      const auto& op = a.operation(s);
      if (op.arity() == 0) continue;
      for (std::size_t i = 0; i < op.size(); ++i) {
        auto tuple = op.tuple_at(i);
        const std::size_t id = apps_.size();
        apps_.push_back({s, i, tuple});
        std::sort(tuple.begin(), tuple.end());
        tuple.erase(std::unique(tuple.begin(), tuple.end()), tuple.end());
        for (Element e : tuple) occurrences_[e].push_back(id);
      }
    }
  }

  void run() {
    // Nullary symbols pin their interpretations before any branching.
    std::vector<Element> queue;
    for (std::size_t s = 0; s < a_.signature().size(); ++s) {
      if (a_.operation(s).arity() != 0) continue;
      if (!force(a_.operation(s).at(0), b_.operation(s).at(0), queue)) return;
    }
    if (!propagate(queue)) return;
    search();
  }

 private:
  struct Application {
    std::size_t symbol;
    std::size_t index;
    std::vector<Element> args;
  };

  bool force(Element target, Element value, std::vector<Element>& queue) {
    if (h_[target] == kUnassigned) {
      h_[target] = value;
      trail_.push_back(target);
      queue.push_back(target);
      return true;
    }
    return h_[target] == static_cast<long>(value);
  }

  bool propagate(std::vector<Element>& queue) {
    std::vector<Element> image;
    while (!queue.empty()) {
      const Element e = queue.back();
      queue.pop_back();
      for (std::size_t id : occurrences_[e]) {
        const auto& app = apps_[id];
        image.clear();
        bool complete = true;
        for (Element x : app.args) {
          if (h_[x] == kUnassigned) {
            complete = false;
            break;
          }
          image.push_back(static_cast<Element>(h_[x]));
        }
        if (!complete) continue;
        const Element result = a_.operation(app.symbol).at(app.index);
        if (!force(result, b_.operation(app.symbol)(image), queue)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      h_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  void search() {
    if (stopped_) return;
    auto next = std::find(h_.begin(), h_.end(), kUnassigned);
    if (next == h_.end()) {
      Homomorphism out(h_.begin(), h_.end());
      if (!visit_(out)) stopped_ = true;
      return;
    }
    const auto e = static_cast<Element>(next - h_.begin());
    for (std::size_t v = 0; v < b_.carrier_size() && !stopped_; ++v) {
      const std::size_t mark = trail_.size();
      std::vector<Element> queue;
      if (force(e, static_cast<Element>(v), queue) && propagate(queue)) search();
      undo(mark);
    }
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  const std::function<bool(const Homomorphism&)>& visit_;
  std::vector<long> h_;
  std::vector<Element> trail_;
  std::vector<Application> apps_;
  std::vector<std::vector<std::size_t>> occurrences_;
  bool stopped_ = false;
};

}  // namespace

void for_each_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                           const std::function<bool(const Homomorphism&)>& visit) {
  require_same_signature(a, b);
  HomSearch(a, b, visit).run();
}

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<Homomorphism> out;
  for_each_homomorphism(a, b, [&](const Homomorphism& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

}  // namespace algtype
