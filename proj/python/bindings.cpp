#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "thinlie/combinatorics.hpp"
#include "thinlie/freelie_oracle.hpp"
#include "thinlie/identity_verifier.hpp"
#include "thinlie/presets.hpp"
#include "thinlie/thinanalysis.hpp"

namespace py = pybind11;
using namespace thinlie;

namespace {

std::vector<std::string> coords_strings(const HomElement& e) {
  std::vector<std::string> out;
  out.reserve(e.coords.size());
  for (const auto& c : e.coords) out.push_back(c.str());
  return out;
}

VContext context_for(const GradedAlgebra& a, const std::set<unsigned>& mu0) {
  return VContext(a.presentation().q >= 3 ? a.presentation().q : 7, mu0);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "graded Lie algebra workbench: exact degree-by-degree construction over "
            "GF(p^k), central quotients, diamond classification, identity suites";

  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def(py::init([](std::uint64_t p, unsigned k) {
             return std::const_pointer_cast<Field>(Field::make(p, k));
           }),
           py::arg("p"), py::arg("k") = 1)
      .def(py::init([](std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
             return std::const_pointer_cast<Field>(Field::make(p, k, std::move(modulus)));
           }),
           py::arg("p"), py::arg("k"), py::arg("modulus"))
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("k", &Field::k)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", [](const Field& f, const std::string& a, const std::string& b) {
        return (f.parse(a) + f.parse(b)).str();
      })
      .def("mul", [](const Field& f, const std::string& a, const std::string& b) {
        return (f.parse(a) * f.parse(b)).str();
      })
      .def("neg", [](const Field& f, const std::string& a) { return (-f.parse(a)).str(); })
      .def("inv", [](const Field& f, const std::string& a) { return f.parse(a).inv().str(); })
      .def("element", [](const Field& f, const std::string& a) { return f.parse(a).str(); })
      .def("__repr__", [](const Field& f) {
        return "Field(p=" + std::to_string(f.p()) + ", k=" + std::to_string(f.k()) + ")";
      });

  py::class_<Presentation>(m, "Presentation")
      .def_property_readonly("q", [](const Presentation& p) { return p.q; })
      .def_property_readonly("s", [](const Presentation& p) { return p.s; })
      .def_property_readonly("label", [](const Presentation& p) { return p.label; })
      .def_property_readonly("lambda_", [](const Presentation& p) {
        return p.lambda ? p.lambda->str() : "0";
      })
      .def_property_readonly("field", [](const Presentation& p) {
        return std::const_pointer_cast<Field>(p.field);
      })
      .def_property_readonly("relators", [](const Presentation& p) {
        std::vector<std::string> out;
        for (const auto& r : p.relators) out.push_back(emit_expr(r));
        return out;
      })
      .def("to_string", &presentation_to_string)
      .def("__repr__", [](const Presentation& p) {
        return "Presentation(" + (p.label.empty() ? "unlabeled" : p.label) + ", " +
               std::to_string(p.relators.size()) + " relators)";
      });

  py::class_<ThinReport>(m, "ThinReport")
      .def_property_readonly("horizon", [](const ThinReport& r) { return r.horizon; })
      .def_property_readonly("classified_to", [](const ThinReport& r) { return r.classified_to; })
      .def_property_readonly("dims", [](const ThinReport& r) { return r.dims; })
      .def_property_readonly("diamond_degrees", &ThinReport::diamond_degrees)
      .def_property_readonly("thin", [](const ThinReport& r) { return r.verdicts.thin; })
      .def_property_readonly("pattern",
                             [](const ThinReport& r) { return r.verdicts.pattern; })
      .def("to_json", [](const ThinReport& r) { return report_to_json(r).dump(); });

  py::class_<GradedAlgebra>(m, "GradedAlgebra")
      .def_property_readonly("computed_to", &GradedAlgebra::computed_to)
      .def_property_readonly("finite_at", [](const GradedAlgebra& a) -> py::object {
        return a.finite_at() ? py::cast(*a.finite_at()) : py::none();
      })
      .def_property_readonly("is_quotient", &GradedAlgebra::is_quotient)
      .def_property_readonly("warnings", &GradedAlgebra::warnings)
      .def_property_readonly("presentation", &GradedAlgebra::presentation)
      .def("extend_to", &GradedAlgebra::extend_to, py::arg("degree"))
      .def("dim", &GradedAlgebra::dim, py::arg("degree"))
      .def("dims", &GradedAlgebra::dims)
      .def("basis_word",
           [](const GradedAlgebra& a, unsigned d, std::size_t i) {
             return a.basis_word(d, i).pretty();
           })
      .def("evaluate",
           [](const GradedAlgebra& a, const std::string& text, std::set<unsigned> mu0) {
             auto e = a.evaluate(parse_expr(text, context_for(a, mu0), a.field()));
             return py::make_tuple(e.degree, coords_strings(e));
           },
           py::arg("expr"), py::arg("mu0_steps") = std::set<unsigned>{})
      .def("bracket",
           [](const GradedAlgebra& a, const std::string& ta, const std::string& tb,
              std::set<unsigned> mu0) {
             const VContext ctx = context_for(a, mu0);
             auto e = a.bracket(a.evaluate(parse_expr(ta, ctx, a.field())),
                                a.evaluate(parse_expr(tb, ctx, a.field())));
             return py::make_tuple(e.degree, coords_strings(e));
           },
           py::arg("a"), py::arg("b"), py::arg("mu0_steps") = std::set<unsigned>{})
      .def("graded_centre_dim",
           [](const GradedAlgebra& a, unsigned d) { return a.graded_centre(d).size(); },
           py::arg("degree"))
      .def("central_quotient", &GradedAlgebra::central_quotient, py::arg("horizon"),
           py::arg("iterations") = 1)
      .def("dump_json", [](const GradedAlgebra& a) { return a.dump().dump(); })
      .def_static("load_json", [](const std::string& text) {
        return GradedAlgebra::load(nlohmann::ordered_json::parse(text));
      })
      .def("__repr__", [](const GradedAlgebra& a) {
        return "GradedAlgebra(computed_to=" + std::to_string(a.computed_to()) + ")";
      });

  m.def("binom_mod_p", &binom_mod_p, py::arg("n"), py::arg("m"), py::arg("p"));
  m.def("lyndon_words", [](unsigned d) {
    std::vector<std::string> out;
    for (const auto& w : lyndon_words(d)) out.push_back(word_to_string(w));
    return out;
  });
  m.def("free_dims", &free_dims, py::arg("degree"));
  m.def("brute_quotient_dims",
        [](const Presentation& p, unsigned maxd) { return brute_quotient_dims(p, maxd); },
        py::arg("presentation"), py::arg("maxd"));

  m.def("nottingham_mixed",
        [](std::uint64_t p, std::uint64_t q, std::uint64_t s, const std::string& lam, unsigned k) {
          auto f = Field::make(p, k);
          return nottingham_mixed({p, q, s, f->parse(lam), f});
        },
        py::arg("p"), py::arg("q"), py::arg("s"), py::arg("lam"), py::arg("k") = 1);
  m.def("nottingham_mixed_lambda0",
        [](std::uint64_t p, std::uint64_t q, std::uint64_t s) {
          return nottingham_mixed_lambda0(p, q, s);
        },
        py::arg("p"), py::arg("q"), py::arg("s"));
  m.def("parse_presentation", [](const std::string& text) {
    std::istringstream is(text);
    return read_presentation(is);
  });
  m.def("read_presentation_file", &read_presentation_file, py::arg("path"));

  m.def("build",
        [](const Presentation& pres, unsigned max_degree, bool full_consistency) {
          auto a = GradedAlgebra::create(pres, {full_consistency, 4096});
          a.extend_to(max_degree);
          return a;
        },
        py::arg("presentation"), py::arg("max_degree"), py::arg("full_consistency") = false);

  m.def("diamond_report",
        [](const GradedAlgebra& l, bool match_pattern) {
          auto rep = diamond_report(l, l.presentation().q);
          const auto& pres = l.presentation();
          if (match_pattern && pres.s >= 1 && pres.lambda)
            match_expected_pattern(rep, pres.field->p(), pres.q, pres.s, *pres.lambda);
          return rep;
        },
        py::arg("quotient"), py::arg("match_pattern") = true);

  m.def("suite_names", [] { return suite_names(); });
  m.def("verify_suite",
        [](const GradedAlgebra& l, const GradedAlgebra* n, const ThinReport& rep,
           const std::string& suite, std::optional<unsigned> at) {
          return suites_to_json({verify_suite(l, n, rep, suite, at)}).dump();
        },
        py::arg("quotient"), py::arg("pre_quotient"), py::arg("report"), py::arg("suite"),
        py::arg("at") = py::none());

  m.def("gen_jacobi_expand",
        [](const std::string& a, const std::string& b, const std::string& c, unsigned n,
           const std::shared_ptr<Field>& field_arg, std::uint64_t q) {
          const FieldPtr field = field_arg;
          const VContext ctx(q);
          auto ea = parse_expr(a, ctx, field), eb = parse_expr(b, ctx, field);
          if (ea.terms().size() != 1 || eb.terms().size() != 1)
            throw std::invalid_argument("gen_jacobi_expand expects single bracket words");
          const Gen g = c == "x" ? Gen::x : Gen::y;
          return emit_expr(
              gen_jacobi_expand(ea.terms()[0].word, eb.terms()[0].word, g, n, field));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"), py::arg("field"),
        py::arg("q") = 7);
}
