// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Extra INFO lines carry diagnostics.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algtype/cli.hpp"
#include "algtype/clone.hpp"
#include "algtype/error.hpp"
#include "algtype/finite_algebra.hpp"
#include "algtype/functor_probe.hpp"
#include "algtype/recovery.hpp"
#include "generators.hpp"
#include "golden_cases.hpp"

using namespace algtype;
using algtype::testing::Rng;
using algtype::testing::uniform;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(int id, const std::string& detail) {
  std::printf("INFO criterion %d: %s\n", id, detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string describe(const Signature& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + s[i].name + ":" + std::to_string(s[i].arity);
  }
  return out + "}";
}

// Recovered type, or nothing when the fragment exceeds the term cap.
std::optional<RecoveredType> try_recover(const Signature& sig, std::size_t depth,
                                         std::size_t initial_basis = 1) {
  try {
    return recover_type(sig, depth, kDefaultTermCap, initial_basis);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

std::vector<Signature> roundtrip_signatures() {
  Rng rng(1001);
  std::vector<Signature> out;
  for (int i = 0; i < 100; ++i) out.push_back(algtype::testing::random_signature(rng, 1, 6, 3, "s"));
  return out;
}

struct RoundTrip {
  Signature sig;
  std::optional<RecoveredType> recovered;
};

std::vector<RoundTrip> criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<RoundTrip> runs;
  std::size_t passed = 0;
  std::size_t capped = 0;
  std::size_t wrong = 0;
  std::string first_capped;
  for (const auto& sig : roundtrip_signatures()) {
    auto r = try_recover(sig, 2);
    if (!r) {
      ++capped;
      if (first_capped.empty()) first_capped = describe(sig);
    } else if (are_equivalent(sig, as_signature(*r))) {
      ++passed;
    } else {
      ++wrong;
    }
    runs.push_back({sig, std::move(r)});
  }
  const double secs = seconds_since(t0);
  const bool ok = passed == runs.size() && secs < 30.0;
  report(1, ok,
         std::to_string(passed) + "/" + std::to_string(runs.size()) + " round-tripped in " +
             std::to_string(secs) + " s; " + std::to_string(capped) + " exceeded the " +
             std::to_string(kDefaultTermCap) + "-term fragment cap, " + std::to_string(wrong) +
             " recovered a different multiset");
  if (capped > 0) info(1, "first capped signature " + first_capped);
  if (passed + wrong > 0) {
    info(1, "within the cap: " + std::to_string(passed) + "/" + std::to_string(passed + wrong) + " correct");
  }
  return runs;
}

void criterion_2() {
  std::size_t pairs = 0;
  std::size_t separated = 0;
  std::size_t capped = 0;
  auto check_pair = [&](const Signature& a, const Signature& b) {
    ++pairs;
    const auto ra = try_recover(a, 2);
    const auto rb = try_recover(b, 2);
    if (!ra || !rb) {
      ++capped;
      return false;
    }
    const bool differ = ra->arities != rb->arities;
    if (differ) ++separated;
    return differ;
  };
  const bool named = check_pair(Signature({{"f", 2}}), Signature({{"g", 1}, {"h", 1}})) &
                     check_pair(Signature({{"c", 0}}), Signature{});
  Rng rng(2002);
  while (pairs < 52) {
    const auto a = algtype::testing::random_signature(rng, 1, 6, 3, "a");
    const auto b = algtype::testing::random_signature(rng, 1, 6, 3, "b");
    if (are_equivalent(a, b)) continue;
    check_pair(a, b);
  }
  report(2, named && separated == pairs,
         std::to_string(separated) + "/" + std::to_string(pairs) + " pairs separated (named pairs " +
             (named ? "separated" : "not separated") + "); " + std::to_string(capped) +
             " pairs had a side exceeding the fragment cap");
  if (pairs > capped) {
    info(2, "within the cap: " + std::to_string(separated) + "/" + std::to_string(pairs - capped) + " separated");
  }
}

CoordinateSet subset_of(std::size_t mask, std::size_t k) {
  CoordinateSet out;
  for (std::size_t j = 0; j < k; ++j) {
    if (mask & (std::size_t{1} << j)) out.push_back(j);
  }
  return out;
}

void criterion_3() {
  Rng rng(3003);
  std::size_t mismatches = 0;
  std::size_t violations = 0;
  const std::size_t tables = 250;
  for (std::size_t i = 0; i < tables; ++i) {
    const auto op = algtype::testing::random_table(rng, uniform(rng, 0, 4), uniform(rng, 1, 3));
    const std::size_t k = op.arity();
    const std::size_t subsets = std::size_t{1} << k;
    std::vector<bool> supp(subsets);
    std::optional<CoordinateSet> best;
    for (std::size_t m = 0; m < subsets; ++m) {
      supp[m] = is_support(op, subset_of(m, k));
      if (supp[m] && (!best || subset_of(m, k).size() < best->size())) best = subset_of(m, k);
    }
    if (!best || minimal_support(op) != *best || essential_rank(op) != best->size()) ++mismatches;
    for (std::size_t a = 0; a < subsets; ++a) {
      if (!supp[a]) continue;
      for (std::size_t b = 0; b < subsets; ++b) {
        if ((a & b) == a && !supp[b]) ++violations;
        if (supp[b] && !supp[a & b]) ++violations;
      }
    }
  }
  report(3, mismatches == 0 && violations == 0,
         std::to_string(tables) + " tables, " + std::to_string(mismatches) + " scan mismatches, " +
             std::to_string(violations) + " filter-law violations");
}

void criterion_4() {
  Rng rng(4004);
  const std::size_t basis = 4;
  std::size_t terms = 0;
  std::size_t bad_rank = 0;
  std::size_t subsets_tested = 0;
  std::size_t missing_witness = 0;
  while (terms < 220) {
    const Signature sig = algtype::testing::random_signature(rng, 1, 4, 3, "t");
    if (sig.max_arity() == 0) continue;
    const Term t = algtype::testing::random_term(rng, sig, basis, 3);
    ++terms;
    const TermFragmentOracle oracle({t}, basis);
    const auto v = vars(t);
    if (representative_essential_rank(oracle, 0) != v.size()) ++bad_rank;
    // Every subset missing some variable of t must fail, witnessed by two
    // assignments that agree on the subset and give different images.
    for (std::size_t mask = 0; mask < (std::size_t{1} << basis); ++mask) {
      const auto a = subset_of(mask, basis);
      std::optional<std::size_t> outside;
      for (std::size_t x : v) {
        if (!(mask & (std::size_t{1} << x))) outside = x;
      }
      if (!outside) continue;
      ++subsets_tested;
      Substitution alpha = Substitution::identity(basis);
      Substitution beta = Substitution::identity(basis);
      beta.set(*outside, Term::variable(basis));
      const bool agree = std::all_of(a.begin(), a.end(), [&](std::size_t x) { return alpha.image(x) == beta.image(x); });
      const bool witnessed = agree && !(substitute(alpha, t) == substitute(beta, t));
      if (!witnessed || oracle.depends_only_on(0, a)) ++missing_witness;
    }
  }
  report(4, bad_rank == 0 && missing_witness == 0,
         std::to_string(terms) + " terms, " + std::to_string(bad_rank) + " rank mismatches, " +
             std::to_string(subsets_tested) + " proper subsets each with a two-assignment witness check, " +
             std::to_string(missing_witness) + " without one");
}

void criterion_5() {
  Rng rng(5005);
  std::size_t algebras = 0;
  std::size_t composites = 0;
  std::size_t violations = 0;
  while (algebras < 24) {
    const Signature sig = algtype::testing::random_signature(rng, 1, 3, 2, "o");
    if (sig.max_arity() == 0) continue;
    const auto alg = algtype::testing::random_algebra(rng, sig, uniform(rng, 1, 3));
    ++algebras;
    for (const auto& t : enumerate_terms(sig, 2, 2)) {
      if (t.is_variable()) continue;
      ++composites;
      std::vector<OperationTable> parts;
      for (const auto& a : t.arguments()) parts.push_back(term_operation_table(alg, a, 2));
      if (!(term_operation_table(alg, t, 2) == compose_tables(alg.operation(t.symbol_index()), parts, 2))) {
        ++violations;
      }
    }
  }
  report(5, violations == 0,
         std::to_string(algebras) + " algebras, " + std::to_string(composites) + " composite terms, " +
             std::to_string(violations) + " violations");
}

void criterion_6() {
  Rng rng(6006);
  std::size_t discrepancies = 0;
  std::size_t homs = 0;
  const std::size_t pairs = 60;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Signature sig = algtype::testing::random_signature(rng, 0, 3, 2, "h");
    const auto a = algtype::testing::random_algebra(rng, sig, uniform(rng, 1, 3));
    const auto b = algtype::testing::random_algebra(rng, sig, uniform(rng, 1, 3));
    std::vector<Homomorphism> brute;
    for (const auto& m : algtype::testing::all_maps(a.carrier_size(), b.carrier_size())) {
      if (is_homomorphism(a, b, m)) brute.push_back(m);
    }
    const auto found = enumerate_homomorphisms(a, b);
    homs += found.size();
    if (found != brute) ++discrepancies;
  }
  report(6, discrepancies == 0,
         std::to_string(pairs) + " pairs, " + std::to_string(homs) + " homomorphisms, " +
             std::to_string(discrepancies) + " discrepancies");
}

void criterion_7() {
  Rng rng(7007);
  std::size_t algebras = 0;
  std::size_t squares = 0;
  std::size_t violations = 0;
  for (int group = 0; group < 5; ++group) {
    const Signature sig = algtype::testing::random_signature(rng, 1, 2, 2, "n");
    const auto samples = enumerate_terms(sig, 1, 2);
    std::vector<FiniteAlgebra> algs;
    for (int i = 0; i < 5; ++i) algs.push_back(algtype::testing::random_algebra(rng, sig, uniform(rng, 1, 3)));
    algebras += algs.size();
    for (const auto& a : algs) {
      if (hom_set_bijection(a).size() != a.carrier_size()) ++violations;
      for (const auto& b : algs) {
        for (const auto& h : enumerate_homomorphisms(a, b)) {
          ++squares;
          if (!naturality_check(a, b, h, samples)) ++violations;
        }
      }
    }
  }
  report(7, violations == 0,
         std::to_string(algebras) + " algebras, " + std::to_string(squares) +
             " homomorphisms checked on all depth <= 2 terms, " + std::to_string(violations) + " violations");
}

void criterion_8() {
  const Signature c({{"c", 0}});
  const FiniteAlgebra p = free_rank_one_constants_only(c);
  const auto r = all_endos_mono(p);
  const Element generator = free_generator(c);
  const Element c_value = p.operation(0).at(0);
  const bool ok = !r.holds && r.witness && r.witness->at(generator) == c_value &&
                  *r.witness == Homomorphism{0, 0};
  std::string w = "none";
  if (r.witness) w = "[" + std::to_string(r.witness->at(0)) + "," + std::to_string(r.witness->at(1)) + "]";
  report(8, ok, std::string("all_endos_mono on the free rank-1 algebra over {c:0} = ") +
                    (r.holds ? "true" : "false") + ", witness " + w + " (x -> c)");
}

void criterion_9(const std::vector<RoundTrip>& runs) {
  std::size_t stable = 0;
  std::size_t capped = 0;
  std::size_t unstable = 0;
  for (const auto& run : runs) {
    if (!run.recovered) {
      ++capped;
      continue;
    }
    const auto deeper = try_recover(run.sig, 3);
    const auto wider = try_recover(run.sig, 2, run.recovered->basis_size + 1);
    if (!deeper || !wider) {
      ++capped;
    } else if (deeper->arities == run.recovered->arities && wider->arities == run.recovered->arities) {
      ++stable;
    } else {
      ++unstable;
    }
  }
  report(9, stable == runs.size(),
         std::to_string(stable) + "/" + std::to_string(runs.size()) +
             " stable under depth 2->3 and basis m->m+1; " + std::to_string(capped) +
             " exceeded the fragment cap, " + std::to_string(unstable) + " changed");
  if (stable + unstable > 0) {
    info(9, "within the cap: " + std::to_string(stable) + "/" + std::to_string(stable + unstable) + " stable");
  }
}

void criterion_10() {
  const auto saved = std::filesystem::current_path();
  std::filesystem::current_path(ALGTYPE_GOLDEN_DIR);
  const auto cases = algtype::testing::read_golden_cases("cases.txt");
  std::size_t bad = 0;
  std::vector<std::string> subcommands;
  for (const auto& c : cases) {
    const auto a = cli::run(c.args);
    const auto b = cli::run(c.args);
    const std::string want = algtype::testing::read_file("expected/" + c.name + ".out");
    if (a.out != b.out || a.exit_code != b.exit_code || a.exit_code != c.exit_code || a.out != want) {
      ++bad;
      info(10, "golden case " + c.name + " differs");
    }
    if (c.exit_code == 0 && !c.args.empty() &&
        std::find(subcommands.begin(), subcommands.end(), c.args[0]) == subcommands.end()) {
      subcommands.push_back(c.args[0]);
    }
  }
  std::filesystem::current_path(saved);
  report(10, bad == 0 && subcommands.size() == 8 && !cases.empty(),
         std::to_string(cases.size()) + " golden cases over " + std::to_string(subcommands.size()) +
             " subcommands, " + std::to_string(bad) + " not byte-identical");
}

}  // namespace

int main() {
  const auto runs = criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9(runs);
  criterion_10();
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
