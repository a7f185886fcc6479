// Python bindings for the core operations.  Structured results cross the
// boundary as JSON strings so the Python side stays dependency-free.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fincat/cli.hpp"
#include "fincat/exreg.hpp"
#include "fincat/factorize.hpp"
#include "fincat/hom.hpp"
#include "fincat/propcheck.hpp"
#include "fincat/torsion.hpp"

namespace py = pybind11;
using namespace fincat;

namespace {

// ObjPtr is shared_ptr-to-const, which pybind11 cannot use as a holder,
// so Python sees objects through this thin handle.
struct Handle {
  ObjPtr p;
};

CategoryId category_id(const std::string& s) {
  for (CategoryId c : {CategoryId::FinSet, CategoryId::FinPtSet,
                       CategoryId::FinGrp, CategoryId::FinAb,
                       CategoryId::FinCRng, CategoryId::Norm, CategoryId::XMod})
    if (s == category_name(c)) return c;
  throw UnknownName("no instance category named '" + s + "'");
}

TorsionInstance torsion_id(const std::string& s) {
  if (s.rfind("p-primary(", 0) == 0 && s.back() == ')')
    return p_primary(std::stoi(s.substr(10)));
  if (s == "nil-red") return nil_red();
  if (s == "ab-norm") return ab_norm();
  throw UnknownName("no torsion instance named '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(fincat_core, m) {
  m.doc() = "finite instance verification core";

  py::register_exception<Error>(m, "FincatError");

  py::class_<Handle>(m, "Object")
      .def_property_readonly("category",
                             [](const Handle& o) {
                               return std::string(
                                   category_name(o.p->category()));
                             })
      .def_property_readonly("sorts",
                             [](const Handle& o) { return o.p->sorts(); })
      .def("order", [](const Handle& o, int s) { return o.p->order(s); },
           py::arg("sort") = 0)
      .def("key", [](const Handle& o) { return o.p->key(); })
      .def("to_json", [](const Handle& o) { return o.p->to_json().dump(); })
      .def("__eq__", [](const Handle& a, const Handle& b) {
        return a.p->key() == b.p->key();
      })
      .def("__hash__", [](const Handle& o) {
        return py::hash(py::str(o.p->key()));
      })
      .def("__repr__", [](const Handle& o) {
        return "<Object " + std::string(category_name(o.p->category())) + " " +
               o.p->key() + ">";
      });

  py::class_<Morphism>(m, "Morphism")
      .def_property_readonly("dom", [](const Morphism& f) { return Handle{f.dom}; })
      .def_property_readonly("cod", [](const Morphism& f) { return Handle{f.cod}; })
      .def_readonly("maps", &Morphism::maps)
      .def("injective", &Morphism::injective)
      .def("surjective", &Morphism::surjective)
      .def("is_identity", &Morphism::is_identity);

  m.def("builtin", [](const std::string& cat, const std::string& name) {
    return Handle{builtin(category_id(cat), name)};
  });
  m.def("generate_all", [](const std::string& cat, int max_order) {
    std::vector<Handle> out;
    for (ObjPtr& o : generate_all(category_id(cat), max_order).items)
      out.push_back({std::move(o)});
    return out;
  });
  m.def("hom", [](const Handle& a, const Handle& b, size_t cap) {
    return hom_enumerate(a.p, b.p, cap).items;
  }, py::arg("a"), py::arg("b"), py::arg("cap") = 2000);
  m.def("compose", [](const Morphism& g, const Morphism& f) {
    return compose(g, f);
  });

  m.def("relation_lemma_holds", [](const Morphism& f) {
    RelationLemmaReport r = check_relation_lemma(f);
    return r.kernel_pair_ok && r.regular_epi_iff;
  });
  m.def("maltsev", [](const std::string& cat, int max_order) {
    RunConfig cfg;
    cfg.max_order = max_order;
    cfg.categories = {category_id(cat)};
    return cmd_maltsev(cfg).dump();
  });
  m.def("protomodular", [](const std::string& cat, int max_order) {
    RunConfig cfg;
    cfg.max_order = max_order;
    cfg.categories = {category_id(cat)};
    return cmd_protomodular(cfg).dump();
  });

  m.def("reflect_congruence",
        [](const Handle& base, const std::vector<PairSet>& pairs) {
          ExObject a =
              make_ex_object(base.p, make_relation(base.p, base.p, pairs));
          return Handle{ex_reflect(a).obj};
        });
  m.def("norm_to_xmod",
        [](const Handle& base, const std::vector<PairSet>& pairs) {
          return Handle{norm_to_xmod(
              make_ex_object(base.p, make_relation(base.p, base.p, pairs)))};
        });
  m.def("xmod_to_norm_base", [](const Handle& xm) {
    return Handle{xmod_to_norm_witness(xm.p).base};
  });

  m.def("torsion_part", [](const std::string& inst, const Handle& c) {
    return torsion_part(torsion_id(inst), c.p).subsets;
  });
  m.def("reflect", [](const std::string& inst, const Handle& c) {
    return Handle{reflect(torsion_id(inst), c.p).obj};
  });
  m.def("verify_ses", [](const std::string& inst, const Handle& c) {
    return verify_ses(torsion_id(inst), c.p);
  });

  m.def("verify_all",
        [](int max_order, int jobs, const std::string& corpus) {
          RunConfig cfg;
          cfg.max_order = max_order;
          cfg.jobs = jobs;
          cfg.corpus_path = corpus;
          return cmd_verify_all(cfg).dump();
        },
        py::arg("max_order") = 6, py::arg("jobs") = 1,
        py::arg("corpus") = std::string());
}
