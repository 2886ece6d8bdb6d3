#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "algtype/cli.hpp"
#include "algtype/clone.hpp"
#include "algtype/error.hpp"
#include "algtype/finite_algebra.hpp"
#include "algtype/functor_probe.hpp"
#include "algtype/json_io.hpp"
#include "algtype/recovery.hpp"
#include "algtype/signature.hpp"
#include "algtype/term.hpp"

namespace py = pybind11;
using namespace algtype;

namespace {

Signature make_signature(const std::vector<std::pair<std::string, std::size_t>>& symbols) {
  std::vector<Symbol> out;
  out.reserve(symbols.size());
  for (const auto& [name, arity] : symbols) out.push_back({name, arity});
  return Signature(std::move(out));
}

FiniteAlgebra make_algebra(const Signature& sig, std::size_t carrier,
                           const std::map<std::string, std::vector<Element>>& tables) {
  std::vector<std::vector<Element>> ordered;
  for (const auto& s : sig.symbols()) {
    auto it = tables.find(s.name);
    if (it == tables.end()) throw LoadError("tables." + s.name + ": missing");
    ordered.push_back(it->second);
  }
  if (tables.size() != sig.size()) throw LoadError("tables: unknown symbol present");
  return FiniteAlgebra(sig, carrier, std::move(ordered));
}

py::dict recovered_to_dict(const RecoveredType& r) {
  py::list classes;
  for (const auto& c : r.classes) {
    py::dict d;
    d["size"] = c.size;
    d["rank"] = c.rank;
    classes.append(d);
  }
  py::dict out;
  out["arities"] = r.arities;
  out["basis"] = r.basis_size;
  out["depth"] = r.depth;
  out["classes"] = classes;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Universal-algebra toolkit: supports, clones, homomorphisms and type recovery";

  auto error = py::register_exception<Error>(m, "AlgtypeError");
  py::register_exception<LoadError>(m, "LoadError", error.ptr());
  py::register_exception<SignatureMismatch>(m, "SignatureMismatch", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<NoGeneralRepresentative>(m, "NoGeneralRepresentative", error.ptr());

  m.attr("DEFAULT_TERM_CAP") = kDefaultTermCap;

  py::class_<Signature>(m, "Signature")
      .def(py::init(&make_signature), py::arg("symbols"),
           "Build from a list of (name, arity) pairs.")
      .def_property_readonly("symbols",
                             [](const Signature& s) {
                               std::vector<std::pair<std::string, std::size_t>> out;
                               for (const auto& sym : s.symbols()) out.emplace_back(sym.name, sym.arity);
                               return out;
                             })
      .def("__len__", &Signature::size)
      .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; })
      .def("__repr__", [](const Signature& s) { return "Signature(" + to_json(s).dump() + ")"; });

  m.def("arity_multiset", &arity_multiset, py::arg("sig"));
  m.def("are_equivalent", &are_equivalent, py::arg("a"), py::arg("b"));

  py::class_<Term>(m, "Term")
      .def_property_readonly("depth", &Term::depth)
      .def_property_readonly("is_variable", &Term::is_variable)
      .def("vars", [](const Term& t) { return vars(t); })
      .def("__str__", [](const Term& t) { return to_string(t); })
      .def("__repr__", [](const Term& t) { return "Term(" + to_string(t) + ")"; })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", &Term::hash);

  m.def("parse_term", &parse_term, py::arg("sig"), py::arg("text"));
  m.def("variable", &Term::variable, py::arg("index"));
  m.def(
      "substitute",
      [](const std::map<std::size_t, Term>& images, const Term& t) {
        Substitution s;
        for (const auto& [v, img] : images) s.set(v, img);
        return substitute(s, t);
      },
      py::arg("images"), py::arg("term"));
  m.def(
      "match",
      [](const Term& pattern, const Term& target) -> std::optional<std::map<std::size_t, Term>> {
        auto s = match(pattern, target);
        if (!s) return std::nullopt;
        std::map<std::size_t, Term> out;
        for (std::size_t v : vars(pattern)) out.emplace(v, s->image(v));
        return out;
      },
      py::arg("pattern"), py::arg("target"));
  m.def("enumerate_terms", &enumerate_terms, py::arg("sig"), py::arg("basis_size"),
        py::arg("max_depth"), py::arg("cap") = kDefaultTermCap);

  py::class_<OperationTable>(m, "OperationTable")
      .def(py::init<std::size_t, std::size_t, std::vector<Element>>(), py::arg("arity"),
           py::arg("carrier_size"), py::arg("values"))
      .def_property_readonly("arity", &OperationTable::arity)
      .def_property_readonly("carrier_size", &OperationTable::carrier_size)
      .def_property_readonly("values",
                             [](const OperationTable& t) {
                               auto v = t.values();
                               return std::vector<Element>(v.begin(), v.end());
                             })
      .def("__eq__", [](const OperationTable& a, const OperationTable& b) { return a == b; });

  m.def("is_support", [](const OperationTable& op, const std::vector<std::size_t>& subset) {
    return is_support(op, subset);
  }, py::arg("op"), py::arg("subset"));
  m.def("minimal_support", &minimal_support, py::arg("op"));
  m.def("essential_rank", &essential_rank, py::arg("op"));
  m.def(
      "variety_rank_estimate",
      [](const Signature& sig) -> py::object {
        const RankEstimate r = variety_rank_estimate(sig);
        if (r.is_finite()) return py::int_(r.value());
        return py::str(r.to_string());
      },
      py::arg("sig"), "An int, or 'countably_infinite'.");

  py::class_<FiniteAlgebra>(m, "FiniteAlgebra")
      .def(py::init(&make_algebra), py::arg("sig"), py::arg("carrier_size"), py::arg("tables"))
      .def_property_readonly("signature", &FiniteAlgebra::signature)
      .def_property_readonly("carrier_size", &FiniteAlgebra::carrier_size)
      .def("operation", py::overload_cast<std::string_view>(&FiniteAlgebra::operation, py::const_),
           py::arg("name"))
      .def_static("from_json",
                  [](const std::string& text) { return algebra_from_json(nlohmann::json::parse(text)); })
      .def("to_json", [](const FiniteAlgebra& a) { return to_json(a).dump(); });

  m.def("evaluate", [](const FiniteAlgebra& alg, const Term& t, const std::vector<Element>& a) {
    return evaluate(alg, t, a);
  }, py::arg("alg"), py::arg("term"), py::arg("assignment"));
  m.def("term_operation_table", &term_operation_table, py::arg("alg"), py::arg("term"),
        py::arg("basis_size"));
  m.def("enumerate_homomorphisms", &enumerate_homomorphisms, py::arg("a"), py::arg("b"));
  m.def("is_homomorphism", [](const FiniteAlgebra& a, const FiniteAlgebra& b,
                              const std::vector<Element>& h) { return is_homomorphism(a, b, h); });

  m.def(
      "generate_clone_fragment",
      [](const FiniteAlgebra& alg, std::size_t basis, std::size_t depth, std::size_t cap) {
        std::vector<std::pair<std::string, OperationTable>> out;
        for (const auto& e : generate_clone_fragment(alg, basis, depth, cap).entries) {
          out.emplace_back(to_string(e.generator), e.table);
        }
        return out;
      },
      py::arg("alg"), py::arg("basis_size"), py::arg("max_depth"), py::arg("cap") = kDefaultTermCap,
      "List of (generating term, table) in first-generation order.");

  m.def(
      "recover_type",
      [](const Signature& sig, std::size_t depth, std::size_t cap) {
        return recovered_to_dict(recover_type(sig, depth, cap));
      },
      py::arg("sig"), py::arg("depth") = 2, py::arg("cap") = kDefaultTermCap);
  m.def("verify_roundtrip", &verify_roundtrip, py::arg("sig"), py::arg("depth") = 2,
        py::arg("cap") = kDefaultTermCap);

  m.def(
      "every_epi_has_section",
      [](const FiniteAlgebra& p, const std::vector<FiniteAlgebra>& pool) -> py::tuple {
        const auto r = every_epi_has_section(p, pool);
        if (!r.witness) return py::make_tuple(r.holds, py::none());
        return py::make_tuple(r.holds, py::make_tuple(r.witness->pool_index, r.witness->surjection));
      },
      py::arg("p"), py::arg("pool"), "(holds, None | (pool_index, surjection)).");
  m.def(
      "all_endos_mono",
      [](const FiniteAlgebra& p) -> py::tuple {
        const auto r = all_endos_mono(p);
        if (!r.witness) return py::make_tuple(r.holds, py::none());
        return py::make_tuple(r.holds, *r.witness);
      },
      py::arg("p"), "(holds, None | non-injective endomorphism).");
  m.def(
      "hom_set_bijection",
      [](const FiniteAlgebra& a) {
        std::vector<Element> out;
        for (const auto& g : hom_set_bijection(a)) out.push_back(g.image);
        return out;
      },
      py::arg("a"), "Generator images, one per carrier element.");
  m.def("naturality_check",
        [](const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<Element>& h,
           const std::vector<Term>& samples) { return naturality_check(a, b, h, samples); },
        py::arg("a"), py::arg("b"), py::arg("h"), py::arg("samples"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        const auto r = cli::run(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "(exit_code, stdout, stderr) of one algtype subcommand.");
}
