#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wdlkit/canonical.hpp"
#include "wdlkit/concept_algebra.hpp"
#include "wdlkit/concepts.hpp"
#include "wdlkit/enumerate.hpp"
#include "wdlkit/io.hpp"

namespace py = pybind11;
using namespace wdlkit;

namespace {

std::vector<std::string> to_names(const FiniteLattice& l, const IndexSet& s) {
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(l.name(i)); });
    return out;
}

IndexSet from_names(const FiniteLattice& l, const std::vector<std::string>& names) {
    IndexSet s(l.size());
    for (const auto& n : names) s.set(static_cast<std::size_t>(l.index_of(n)));
    return s;
}

py::object opt_name(const FiniteLattice& l, std::optional<int> v) {
    if (!v) return py::none();
    return py::cast(l.name(*v));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite lattices, formal concept analysis and weak dicomplementations";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", PyExc_ValueError);
    py::register_exception<UnknownProperty>(m, "UnknownProperty", PyExc_ValueError);

    py::class_<FiniteLattice>(m, "Lattice")
        .def_static("from_covers", &FiniteLattice::from_covers, py::arg("names"), py::arg("covers"))
        .def_static("chain", &FiniteLattice::chain, py::arg("n"))
        .def_static("boolean", &FiniteLattice::boolean_cube, py::arg("atoms"))
        .def("__len__", &FiniteLattice::size)
        .def_property_readonly("names", &FiniteLattice::names)
        .def_property_readonly("bottom", [](const FiniteLattice& l) { return l.name(l.bottom()); })
        .def_property_readonly("top", [](const FiniteLattice& l) { return l.name(l.top()); })
        .def("leq", [](const FiniteLattice& l, const std::string& a, const std::string& b) {
            return l.leq(l.index_of(a), l.index_of(b));
        })
        .def("meet", [](const FiniteLattice& l, const std::string& a, const std::string& b) {
            return l.name(l.meet(l.index_of(a), l.index_of(b)));
        })
        .def("join", [](const FiniteLattice& l, const std::string& a, const std::string& b) {
            return l.name(l.join(l.index_of(a), l.index_of(b)));
        })
        .def("join_irreducibles", [](const FiniteLattice& l) { return to_names(l, l.join_irreducibles()); })
        .def("meet_irreducibles", [](const FiniteLattice& l) { return to_names(l, l.meet_irreducibles()); })
        .def("pseudocomplement", [](const FiniteLattice& l, const std::string& x) {
            return opt_name(l, l.pseudocomplement(l.index_of(x)));
        })
        .def("dual_pseudocomplement", [](const FiniteLattice& l, const std::string& x) {
            return opt_name(l, l.dual_pseudocomplement(l.index_of(x)));
        })
        .def("is_distributive", &FiniteLattice::is_distributive)
        .def("distributivity_witness", [](const FiniteLattice& l) -> py::object {
            auto w = l.distributivity_witness();
            if (!w) return py::none();
            return py::make_tuple(l.name(w->x), l.name(w->y), l.name(w->z));
        })
        .def("complemented_elements", [](const FiniteLattice& l) { return to_names(l, l.complemented_elements()); })
        .def("__repr__", [](const FiniteLattice& l) {
            return "<Lattice of " + std::to_string(l.size()) + " elements>";
        });

    m.def("find_isomorphism", [](const FiniteLattice& a, const FiniteLattice& b) -> py::object {
        auto iso = find_isomorphism(a, b);
        if (!iso) return py::none();
        py::dict out;
        for (std::size_t x = 0; x < a.size(); ++x)
            out[py::cast(a.name(static_cast<int>(x)))] = b.name((*iso)[x]);
        return out;
    });

    py::class_<FormalContext>(m, "Context")
        .def(py::init([](std::vector<std::string> objects, std::vector<std::string> attributes,
                         const std::vector<std::vector<std::string>>& rows) {
                 std::vector<IndexSet> bits;
                 std::vector<std::string> attrs = attributes;
                 FormalContext probe(objects, attributes, std::vector<IndexSet>(objects.size(), IndexSet(attributes.size())));
                 for (const auto& row : rows) {
                     IndexSet r(attrs.size());
                     for (const auto& a : row) r.set(static_cast<std::size_t>(probe.attribute_index(a)));
                     bits.push_back(std::move(r));
                 }
                 return FormalContext(std::move(objects), std::move(attrs), std::move(bits));
             }),
             py::arg("objects"), py::arg("attributes"), py::arg("rows"))
        .def_property_readonly("objects", &FormalContext::objects)
        .def_property_readonly("attributes", &FormalContext::attributes)
        .def("incident", [](const FormalContext& k, const std::string& g, const std::string& m2) {
            return k.incident(k.object_index(g), k.attribute_index(m2));
        })
        .def("intent", [](const FormalContext& k, const std::vector<std::string>& objs) {
            IndexSet a(k.object_count());
            for (const auto& g : objs) a.set(static_cast<std::size_t>(k.object_index(g)));
            std::vector<std::string> out;
            k.intent_of(a).for_each([&](int m2) { out.push_back(k.attribute_name(m2)); });
            return out;
        })
        .def("extent", [](const FormalContext& k, const std::vector<std::string>& attrs) {
            IndexSet b(k.attribute_count());
            for (const auto& a : attrs) b.set(static_cast<std::size_t>(k.attribute_index(a)));
            std::vector<std::string> out;
            k.extent_of(b).for_each([&](int g) { out.push_back(k.object_name(g)); });
            return out;
        })
        .def("clarify", [](const FormalContext& k) { return clarify(k).context; })
        .def("reduce", [](const FormalContext& k) { return reduce(k); })
        .def("__repr__", [](const FormalContext& k) {
            return "<Context " + std::to_string(k.object_count()) + "x" + std::to_string(k.attribute_count()) + ">";
        });

    py::class_<ConceptLatticeView>(m, "ConceptView")
        .def("__len__", &ConceptLatticeView::concept_count)
        .def_property_readonly("lattice", &ConceptLatticeView::lattice)
        .def("concepts", [](const ConceptLatticeView& v) {
            py::list out;
            const FormalContext& k = v.context();
            for (const auto& c : v.concepts()) {
                std::vector<std::string> ext, intn;
                c.extent.for_each([&](int g) { ext.push_back(k.object_name(g)); });
                c.intent.for_each([&](int m2) { intn.push_back(k.attribute_name(m2)); });
                out.append(py::make_tuple(ext, intn));
            }
            return out;
        })
        .def("to_dot", [](const ConceptLatticeView& v, bool reduced) { return to_dot(v, reduced); },
             py::arg("reduced") = false);

    py::class_<AxiomReport>(m, "Report")
        .def_property_readonly("all_passed", &AxiomReport::all_passed)
        .def_property_readonly("entries", [](const AxiomReport& r) {
            py::list out;
            for (const auto& e : r.entries) {
                py::dict d;
                d["id"] = e.id;
                d["passed"] = e.passed;
                py::dict w;
                for (const auto& [var, val] : e.witness) w[py::cast(var)] = val;
                d["witness"] = w;
                d["lhs"] = e.lhs;
                d["rhs"] = e.rhs;
                out.append(d);
            }
            return out;
        })
        .def("__str__", [](const AxiomReport& r) { return to_text(r); });

    py::class_<Dicomplementation>(m, "Dicomplementation")
        .def_property_readonly("lattice", [](const Dicomplementation& d) { return d.lattice; })
        .def("up", [](const Dicomplementation& d, const std::string& x) {
            return d.lattice.name(d.up_of(d.lattice.index_of(x)));
        })
        .def("down", [](const Dicomplementation& d, const std::string& x) {
            return d.lattice.name(d.down_of(d.lattice.index_of(x)));
        })
        .def("__repr__", [](const Dicomplementation& d) {
            return "<Dicomplementation on " + std::to_string(d.lattice.size()) + " elements>";
        });

    py::class_<ConceptAlgebraView>(m, "ConceptAlgebra")
        .def_property_readonly("base", &ConceptAlgebraView::base)
        .def_property_readonly("report", &ConceptAlgebraView::report)
        .def("weak_negation", &ConceptAlgebraView::weak_negation_of, py::arg("concept_index"))
        .def("weak_opposition", &ConceptAlgebraView::weak_opposition_of, py::arg("concept_index"))
        .def("as_dicomplementation", &ConceptAlgebraView::as_dicomplementation)
        .def("table_dump", &ConceptAlgebraView::table_dump);

    m.def("enumerate_concepts", &enumerate_concepts, py::arg("context"));
    m.def("standard_context", &standard_context, py::arg("lattice"));
    m.def("build_concept_algebra", &build_concept_algebra, py::arg("context"));

    m.def("check_axioms", [](const Dicomplementation& d) { return check_axioms(d); });
    m.def("check_derived_properties", &check_derived_properties);
    m.def("trivial_dicomplementation", &trivial_dicomplementation);
    m.def("from_generators", [](const FiniteLattice& l, const std::vector<std::string>& g,
                                const std::vector<std::string>& h) {
        return from_generators(l, from_names(l, g), from_names(l, h));
    });
    m.def("boolean_duplication", &boolean_duplication);
    m.def("double_p_tables", [](const FiniteLattice& l) -> py::object {
        auto d = double_p_tables(l);
        if (!d) return py::none();
        return py::cast(*d);
    });
    m.def("derive_bounds", [](const Dicomplementation& d) {
        DerivedBounds b = derive_bounds(d);
        return py::make_tuple(d.lattice.name(b.bottom), d.lattice.name(b.top));
    });
    m.def("is_with_negation", &is_with_negation);
    m.def("boolean_collapse", [](const Dicomplementation& d) -> py::object {
        auto v = boolean_collapse(d);
        if (!v) return py::none();
        py::dict out;
        for (std::size_t x = 0; x < d.lattice.size(); ++x)
            out[py::cast(d.lattice.name(static_cast<int>(x)))] = d.lattice.name(v->complement[x]);
        return out;
    });
    m.def("boolean_part", [](const Dicomplementation& d) { return to_names(d.lattice, boolean_part(d)); });
    m.def("skeleton", [](const Dicomplementation& d) { return to_names(d.lattice, skeleton(d)); });
    m.def("dual_skeleton", [](const Dicomplementation& d) { return to_names(d.lattice, dual_skeleton(d)); });
    m.def("diagnostics", [](const Dicomplementation& d) {
        SkeletonDiagnostics s = boolean_part_diagnostics(d);
        py::dict out;
        out["boolean_part"] = to_names(d.lattice, s.boolean_part);
        out["skeleton"] = to_names(d.lattice, s.skeleton);
        out["dual_skeleton"] = to_names(d.lattice, s.dual_skeleton);
        out["skeleton_intersection"] = to_names(d.lattice, s.skeleton_intersection);
        out["complemented"] = to_names(d.lattice, s.complemented);
        out["part_equals_intersection"] = s.part_equals_intersection;
        out["exchange_condition"] = s.exchange_condition;
        out["part_equals_complemented"] = s.part_equals_complemented;
        out["skeleton_subalgebra"] = s.skeleton_subalgebra;
        out["dual_skeleton_subalgebra"] = s.dual_skeleton_subalgebra;
        return out;
    });

    m.def("primary_filters", [](const Dicomplementation& d) {
        PrimaryFilterSet p = primary_filters(d);
        std::vector<std::string> f, i;
        for (int x : p.filter_generators) f.push_back(d.lattice.name(x));
        for (int y : p.ideal_generators) i.push_back(d.lattice.name(y));
        return py::make_tuple(f, i);
    });
    m.def("extend_to_primary_filter", [](const Dicomplementation& d, const std::string& f, const std::string& i) {
        return d.lattice.name(extend_to_primary_filter(d, d.lattice.index_of(f), d.lattice.index_of(i)));
    });
    m.def("canonical_context", &canonical_context);
    m.def("canonical_embedding", [](const Dicomplementation& d) {
        EmbeddingReport r = canonical_embedding(d);
        py::dict out;
        out["all_ok"] = r.all_ok();
        out["injective"] = r.injective;
        out["preserves_meet"] = r.preserves_meet;
        out["preserves_join"] = r.preserves_join;
        out["preserves_bounds"] = r.preserves_bounds;
        out["derivations_ok"] = r.derivations_ok;
        out["chain_ok"] = r.chain_ok;
        out["text"] = to_text(r);
        return out;
    });
    m.def("stone_representation", [](const Dicomplementation& d) {
        StoneView v = stone_representation(d);
        py::dict out;
        std::vector<std::string> ultra;
        for (int g : v.ultrafilter_generators) ultra.push_back(d.lattice.name(g));
        out["ultrafilters"] = ultra;
        py::dict image;
        for (std::size_t x = 0; x < v.element_image.size(); ++x) {
            std::vector<std::string> members;
            v.element_image[x].for_each([&](int i) { members.push_back(ultra[static_cast<std::size_t>(i)]); });
            image[py::cast(d.lattice.name(static_cast<int>(x)))] = members;
        }
        out["image"] = image;
        out["concept_count"] = v.concept_count;
        out["onto"] = v.onto;
        return out;
    });

    m.def("enumerate_lattices", &enumerate_lattices, py::arg("n"));
    m.def("enumerate_dicomplementations", &enumerate_dicomplementations, py::arg("lattice"));
    m.def("counterexample_properties", [] { return counterexample_properties(); });
    m.def("find_counterexample", [](const std::string& property, std::size_t max_size) -> py::object {
        auto hit = find_counterexample(property, max_size);
        if (!hit) return py::none();
        return py::make_tuple(hit->structure, hit->description);
    }, py::arg("property"), py::arg("max_size") = 6);

    m.def("parse_lat", [](const std::string& text) { return parse_lat(text); });
    m.def("load_lat", [](const std::string& path) { return load_lat(path); });
    m.def("to_lat", [](const Dicomplementation& d) { return to_lat(d); });
    m.def("parse_cxt", [](const std::string& text) { return parse_cxt(text); });
    m.def("load_cxt", [](const std::string& path) { return load_cxt(path); });
    m.def("to_cxt", &to_cxt);
}
