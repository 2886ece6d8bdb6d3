#include "algtype/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "algtype/clone.hpp"
#include "algtype/error.hpp"
#include "algtype/finite_algebra.hpp"
#include "algtype/functor_probe.hpp"
#include "algtype/json_io.hpp"
#include "algtype/recovery.hpp"
#include "algtype/signature.hpp"
#include "algtype/term.hpp"

namespace algtype::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// What a subcommand produced: payload plus exit code.
struct Outcome {
  ordered_json payload;
  int exit_code = kSuccess;
};

using Action = std::function<Outcome()>;

ordered_json error_payload(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

// "x0=1,x1=0" -> {0: 1, 1: 0}
std::map<std::size_t, Element> parse_assignment(const std::string& text) {
  std::map<std::size_t, Element> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || !is_variable_name(item.substr(0, eq))) {
      throw LoadError("--assign: malformed entry '" + item + "', expected x<i>=<value>");
    }
    std::size_t var = 0;
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      var = std::stoul(item.substr(1, eq - 1));
      const std::string rhs = item.substr(eq + 1);
      value = std::stoul(rhs, &used);
      if (used != rhs.size() || rhs.empty() || rhs[0] == '-') throw std::invalid_argument(rhs);
    } catch (const std::logic_error&) {
      throw LoadError("--assign: malformed entry '" + item + "'");
    }
    if (!out.emplace(var, static_cast<Element>(value)).second) {
      throw LoadError("--assign: x" + std::to_string(var) + " assigned twice");
    }
  }
  return out;
}

std::vector<std::pair<std::string, FiniteAlgebra>> load_pool(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw LoadError(dir.string() + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, FiniteAlgebra>> pool;
  for (const auto& f : files) pool.emplace_back(f.filename().string(), load_algebra(f));
  return pool;
}

ordered_json coordinates(const CoordinateSet& c) { return ordered_json(c); }

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Universal-algebra toolkit: supports, clones, homomorphisms and type recovery",
               "algtype"};
  app.require_subcommand(1);
  Action action;

  // equiv
  std::string sig_a;
  std::string sig_b;
  auto* equiv = app.add_subcommand("equiv", "Decide whether two signatures are equivalent types");
  equiv->add_option("a", sig_a, "First signature file")->required();
  equiv->add_option("b", sig_b, "Second signature file")->required();
  equiv->callback([&] {
    action = [&] {
      const bool eq = are_equivalent(load_signature(sig_a), load_signature(sig_b));
      return Outcome{{{"equivalent", eq}}, eq ? kSuccess : kNegative};
    };
  });

  // recover
  std::string recover_sig;
  std::size_t depth = 2;
  std::size_t max_terms = kDefaultTermCap;
  auto* recover = app.add_subcommand("recover", "Recover the arity multiset from free-algebra data");
  recover->add_option("signature", recover_sig, "Signature file")->required();
  recover->add_option("--depth", depth, "Fragment depth (>= 1)")->check(CLI::PositiveNumber);
  recover->add_option("--max-terms", max_terms, "Cap on fragment size");
  recover->callback([&] {
    action = [&] {
      const Signature sig = load_signature(recover_sig);
      return Outcome{to_json(recover_type(sig, depth, max_terms))};
    };
  });

  // rank
  std::string rank_sig;
  auto* rank = app.add_subcommand("rank", "Rank of the absolutely free class of a signature");
  rank->add_option("signature", rank_sig, "Signature file")->required();
  rank->callback([&] {
    action = [&] {
      const RankEstimate r = variety_rank_estimate(load_signature(rank_sig));
      ordered_json value = r.is_finite() ? ordered_json(r.value()) : ordered_json(r.to_string());
      return Outcome{{{"rank", value}}};
    };
  });

  // support
  std::string support_file;
  std::string op_name;
  auto* support = app.add_subcommand("support", "Minimal support and essential rank of an operation");
  support->add_option("file", support_file, "Algebra file or operation-table file")->required();
  support->add_option("--op", op_name, "Operation symbol (algebra files)");
  support->callback([&] {
    action = [&] {
      const json j = read_json_file(support_file);
      const OperationTable op = [&] {
        if (j.is_object() && j.contains("tables")) {
          if (op_name.empty()) throw LoadError("--op: required for algebra files");
          const FiniteAlgebra alg = algebra_from_json(j);
          if (!alg.signature().find(op_name)) {
            throw LoadError("--op: no symbol '" + op_name + "' in " + support_file);
          }
          return alg.operation(op_name);
        }
        return operation_table_from_json(j);
      }();
      const CoordinateSet s = minimal_support(op);
      return Outcome{{{"minimal_support", coordinates(s)}, {"essential_rank", s.size()}}};
    };
  });

  // clone
  std::string clone_file;
  std::size_t clone_basis = 1;
  std::size_t clone_depth = 1;
  std::size_t clone_max_terms = kDefaultTermCap;
  auto* clone = app.add_subcommand("clone", "Distinct term operations of bounded depth");
  clone->add_option("algebra", clone_file, "Algebra file")->required();
  clone->add_option("--basis", clone_basis, "Number of variables")->required();
  clone->add_option("--depth", clone_depth, "Maximum term depth")->required();
  clone->add_option("--max-terms", clone_max_terms, "Cap on enumerated terms");
  clone->callback([&] {
    action = [&] {
      const FiniteAlgebra alg = load_algebra(clone_file);
      const CloneFragment frag = generate_clone_fragment(alg, clone_basis, clone_depth, clone_max_terms);
      ordered_json ops = ordered_json::array();
      for (const auto& e : frag.entries) {
        const auto values = e.table.values();
        ops.push_back({{"term", to_string(e.generator)},
                       {"table", std::vector<Element>(values.begin(), values.end())}});
      }
      return Outcome{{{"basis", frag.basis_size},
                      {"depth", frag.max_depth},
                      {"count", frag.entries.size()},
                      {"operations", ops}}};
    };
  });

  // homs
  std::string homs_a;
  std::string homs_b;
  bool homs_list = false;
  auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms between two finite algebras");
  homs->add_option("a", homs_a, "Domain algebra file")->required();
  homs->add_option("b", homs_b, "Codomain algebra file")->required();
  homs->add_flag("--list", homs_list, "Print every homomorphism");
  homs->callback([&] {
    action = [&] {
      const auto found = enumerate_homomorphisms(load_algebra(homs_a), load_algebra(homs_b));
      ordered_json payload = {{"count", found.size()}};
      if (homs_list) payload["homomorphisms"] = found;
      return Outcome{payload};
    };
  });

  // probe-free
  std::string probe_file;
  std::string pool_dir;
  auto* probe = app.add_subcommand("probe-free", "Free rank-1 detection predicates on a finite algebra");
  probe->add_option("algebra", probe_file, "Candidate algebra file")->required();
  probe->add_option("--pool", pool_dir, "Directory of *.json algebras to draw epimorphisms from");
  probe->callback([&] {
    action = [&] {
      const FiniteAlgebra p = load_algebra(probe_file);
      std::vector<std::pair<std::string, FiniteAlgebra>> named;
      if (pool_dir.empty()) {
        named.emplace_back(fs::path(probe_file).filename().string(), p);
      } else {
        named = load_pool(pool_dir);
      }
      std::vector<FiniteAlgebra> pool;
      for (const auto& [name, alg] : named) pool.push_back(alg);

      const SectionReport sections = every_epi_has_section(p, pool);
      const MonoReport mono = all_endos_mono(p);
      ordered_json witness = {{"epi_section", nullptr}, {"endos_mono", nullptr}};
      if (sections.witness) {
        witness["epi_section"] = {{"pool", named[sections.witness->pool_index].first},
                                  {"surjection", sections.witness->surjection}};
      }
      if (mono.witness) witness["endos_mono"] = {{"endomorphism", *mono.witness}};
      ordered_json payload = {{"epi_section", sections.holds},
                              {"endos_mono", mono.holds},
                              {"witness", witness},
                              {"tested_as", {{"epi", "surjective"}, {"mono", "injective"}}},
                              {"pool_size", pool.size()}};
      return Outcome{payload, sections.holds && mono.holds ? kSuccess : kNegative};
    };
  });

  // eval
  std::string eval_file;
  std::string term_text;
  std::string assign_text;
  auto* eval = app.add_subcommand("eval", "Evaluate a term in a finite algebra");
  eval->add_option("algebra", eval_file, "Algebra file")->required();
  eval->add_option("--term", term_text, "Term in prefix syntax, e.g. \"(f x0 (g c))\"")->required();
  eval->add_option("--assign", assign_text, "Variable values, e.g. \"x0=1,x1=0\"");
  eval->callback([&] {
    action = [&] {
      const FiniteAlgebra alg = load_algebra(eval_file);
      const Term t = parse_term(alg.signature(), term_text);
      const auto given = parse_assignment(assign_text);
      Assignment a;
      for (std::size_t v : vars(t)) {
        auto it = given.find(v);
        if (it == given.end()) throw LoadError("--assign: missing a value for x" + std::to_string(v));
        if (it->second >= alg.carrier_size()) {
          throw LoadError("--assign: x" + std::to_string(v) + " is outside the carrier");
        }
        if (a.size() <= v) a.resize(v + 1, 0);
        a[v] = it->second;
      }
      return Outcome{{{"value", evaluate(alg, t, a)}}};
    };
  });

  CommandResult result;
  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && app.get_subcommand_no_throw(args[0]) == nullptr) {
    result.exit_code = kUsageOrIo;
    result.out = error_payload("usage", "unknown subcommand '" + args[0] + "'").dump() + "\n";
    result.err = "error: unknown subcommand '" + args[0] + "'\n";
    return result;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    if (code == 0) {
      result.out = out.str();
      return result;
    }
    result.exit_code = kUsageOrIo;
    result.out = error_payload("usage", e.what()).dump() + "\n";
    result.err = err.str();
    return result;
  }

  try {
    Outcome o = action();
    result.exit_code = o.exit_code;
    result.out = o.payload.dump() + "\n";
  } catch (const CapExceeded& e) {
    result.exit_code = kResourceCap;
    ordered_json payload = error_payload("cap", e.what());
    payload["error"]["required"] = e.required();
    payload["error"]["cap"] = e.cap();
    result.out = payload.dump() + "\n";
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kUsageOrIo;
    result.out = error_payload("input", e.what()).dump() + "\n";
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace algtype::cli
