#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "linrel/decompose.hpp"
#include "linrel/suites.hpp"

namespace py = pybind11;
using namespace linrel;

namespace {

using Entry = std::variant<long, std::string>;

Scalar entry_to_scalar(const FieldSpec& field, const Entry& e) {
    if (const long* v = std::get_if<long>(&e)) return Scalar::from_int(field, *v);
    return Scalar::parse(field, std::get<std::string>(e));
}

Matrix make_matrix(const FieldSpec& field, std::size_t cols,
                   const std::vector<std::vector<Entry>>& rows) {
    std::vector<std::vector<Scalar>> scalar_rows;
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        for (const Entry& e : row) r.push_back(entry_to_scalar(field, e));
        scalar_rows.push_back(std::move(r));
    }
    return Matrix::from_rows(field, cols, scalar_rows);
}

std::vector<std::vector<std::string>> rows_as_strings(const Matrix& m) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        out.push_back(std::move(row));
    }
    return out;
}

py::dict suite_result_to_dict(const SuiteResult& r) {
    py::dict d;
    d["name"] = r.name;
    d["seed"] = r.seed;
    d["cases"] = r.cases;
    d["passes"] = r.passes;
    py::list failures;
    for (const CaseFailure& f : r.failures) {
        py::dict fd;
        fd["case"] = f.index;
        fd["case_seed"] = f.case_seed;
        fd["message"] = f.message;
        failures.append(fd);
    }
    d["failures"] = failures;
    return d;
}

}  // namespace

PYBIND11_MODULE(pylinrel, m) {
    m.doc() = "Exact linear relations, isotropic/coisotropic/lagrangian relations "
              "between symplectic vector spaces, and the Wehrheim-Woodward "
              "central extension with its defect/excess indices.";

    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<FieldSpec>(m, "FieldSpec")
        .def_static("rationals", &FieldSpec::rationals)
        .def_static("prime_field", &FieldSpec::prime_field, py::arg("p"))
        .def_static("parse", &FieldSpec::parse, py::arg("text"))
        .def_property_readonly("characteristic", &FieldSpec::characteristic)
        .def("__str__", &FieldSpec::str)
        .def("__repr__", &FieldSpec::str)
        .def(py::self == py::self);

    py::class_<Matrix>(m, "Matrix")
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def("entries", &rows_as_strings)
        .def(py::self == py::self);
    m.def("matrix", &make_matrix, py::arg("field"), py::arg("cols"), py::arg("rows"),
          "Build a matrix from integer or string entries.");
    m.def("rref", py::overload_cast<const Matrix&>(&rref));
    m.def("rank", &rank);

    py::class_<Subspace>(m, "Subspace")
        .def_static("span", py::overload_cast<const Matrix&>(&Subspace::span))
        .def_static("zero", &Subspace::zero)
        .def_static("full", &Subspace::full)
        .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
        .def_property_readonly("dim", &Subspace::dim)
        .def("basis", [](const Subspace& s) { return rows_as_strings(s.basis()); })
        .def(py::self == py::self);
    m.def("sum", py::overload_cast<const Subspace&, const Subspace&>(&sum));
    m.def("intersect", &intersect);
    m.def("annihilator", &annihilator);
    m.def("subspace_contains", &subspace_contains);
    m.def("direct_sum", &direct_sum);
    m.def("pivot_complement", &pivot_complement);

    py::class_<VectorSpaceObj>(m, "VectorSpaceObj")
        .def(py::init([](std::size_t dim, const FieldSpec& field, const std::string& name) {
                 return VectorSpaceObj{dim, field, name};
             }),
             py::arg("dim"), py::arg("field"), py::arg("name") = "")
        .def_readonly("dim", &VectorSpaceObj::dim)
        .def_readonly("name", &VectorSpaceObj::name);

    py::class_<IsoInvariants>(m, "IsoInvariants")
        .def_readonly("dim_target", &IsoInvariants::dim_target)
        .def_readonly("dim_source", &IsoInvariants::dim_source)
        .def_readonly("dim_dom", &IsoInvariants::dim_dom)
        .def_readonly("dim_ker", &IsoInvariants::dim_ker)
        .def_readonly("dim_im", &IsoInvariants::dim_im)
        .def_readonly("dim_indet", &IsoInvariants::dim_indet);

    py::class_<LinearRelation>(m, "LinearRelation")
        .def(py::init<VectorSpaceObj, VectorSpaceObj, Subspace>(), py::arg("target"),
             py::arg("source"), py::arg("space"))
        .def_static("identity", &LinearRelation::identity)
        .def_static("zero", &LinearRelation::zero)
        .def_static("full", &LinearRelation::full)
        .def_static("graph_of_map", &LinearRelation::graph_of_map)
        .def_property_readonly("target", &LinearRelation::target)
        .def_property_readonly("source", &LinearRelation::source)
        .def_property_readonly("space", &LinearRelation::space)
        .def_property_readonly("dim", &LinearRelation::dim)
        .def(py::self == py::self);

    m.def("compose", py::overload_cast<const LinearRelation&, const LinearRelation&>(&compose));
    m.def("transpose", py::overload_cast<const LinearRelation&>(&transpose));
    m.def("kernel", &kernel);
    m.def("indeterminacy", &indeterminacy);
    m.def("domain", &domain);
    m.def("image", &image);
    m.def("dual", &dual);
    m.def("excess_pair",
          py::overload_cast<const LinearRelation&, const LinearRelation&>(&excess_pair));
    m.def("defect_pair",
          py::overload_cast<const LinearRelation&, const LinearRelation&>(&defect_pair));
    m.def("is_injective", &is_injective);
    m.def("is_coinjective", &is_coinjective);
    m.def("is_surjective", &is_surjective);
    m.def("is_cosurjective", &is_cosurjective);
    m.def("is_reduction", &is_reduction);
    m.def("is_coreduction", &is_coreduction);
    m.def("is_monic", &is_monic);
    m.def("is_transversal", &is_transversal);
    m.def("is_strongly_transversal", &is_strongly_transversal);
    m.def("iso_invariants", &iso_invariants);
    m.def("tensor", py::overload_cast<const LinearRelation&, const LinearRelation&>(&tensor));
    m.def("graph_of", &graph_of);
    m.def("ungraph", &ungraph);

    py::class_<RelationChain>(m, "RelationChain")
        .def(py::init<std::vector<LinearRelation>>())
        .def_property_readonly("links", &RelationChain::links);
    m.def("compose_chain", py::overload_cast<const RelationChain&>(&compose_chain));
    m.def("excess_seq", py::overload_cast<const RelationChain&>(&excess_seq));
    m.def("defect_seq", py::overload_cast<const RelationChain&>(&defect_seq));

    py::class_<NaturalFactorization>(m, "NaturalFactorization")
        .def_readonly("coreduction", &NaturalFactorization::coreduction)
        .def_readonly("iso", &NaturalFactorization::iso)
        .def_readonly("reduction", &NaturalFactorization::reduction);
    m.def("natural_factorization", &natural_factorization);

    py::class_<StFactorization>(m, "StFactorization")
        .def_readonly("a", &StFactorization::a)
        .def_readonly("b", &StFactorization::b);
    m.def("st_factorization", &st_factorization);

    py::class_<SymplecticSpace>(m, "SymplecticSpace")
        .def_static("standard", &SymplecticSpace::standard, py::arg("n"), py::arg("field"))
        .def_static("with_form", &SymplecticSpace::with_form)
        .def_property_readonly("dim", &SymplecticSpace::dim)
        .def("form", [](const SymplecticSpace& s) { return rows_as_strings(s.form()); })
        .def("opposite", &SymplecticSpace::opposite)
        .def(py::self == py::self);
    m.def("product", &product);
    m.def("symp_orthogonal", &symp_orthogonal);
    m.def("is_isotropic", &is_isotropic);
    m.def("is_coisotropic", &is_coisotropic);
    m.def("is_lagrangian", &is_lagrangian);

    py::enum_<CategoryTag>(m, "CategoryTag")
        .value("LREL", CategoryTag::LREL)
        .value("SLREL", CategoryTag::SLREL)
        .value("ILREL", CategoryTag::ILREL)
        .value("CLREL", CategoryTag::CLREL);

    py::class_<SympRelation>(m, "SympRelation")
        .def(py::init<SymplecticSpace, SymplecticSpace, Subspace>(), py::arg("target"),
             py::arg("source"), py::arg("space"))
        .def_static("identity", &SympRelation::identity)
        .def_static("zero", &SympRelation::zero)
        .def_property_readonly("target", &SympRelation::target)
        .def_property_readonly("source", &SympRelation::source)
        .def_property_readonly("space", &SympRelation::space)
        .def("as_linear", &SympRelation::as_linear)
        .def(py::self == py::self);
    m.def("check_morphism", &check_morphism);
    m.def("compose", py::overload_cast<const SympRelation&, const SympRelation&>(&compose));
    m.def("transpose", py::overload_cast<const SympRelation&>(&transpose));
    m.def("tensor", py::overload_cast<const SympRelation&, const SympRelation&>(&tensor));
    m.def("excess_pair",
          py::overload_cast<const SympRelation&, const SympRelation&>(&excess_pair));
    m.def("defect_pair",
          py::overload_cast<const SympRelation&, const SympRelation&>(&defect_pair));
    m.def("iso_coiso_dual", &iso_coiso_dual);
    m.def("coiso_iso_dual", &coiso_iso_dual);
    m.def("cotangent", &cotangent);

    py::class_<SympChain>(m, "SympChain")
        .def(py::init<std::vector<SympRelation>>())
        .def_property_readonly("links", &SympChain::links);
    m.def("compose_chain", py::overload_cast<const SympChain&>(&compose_chain));
    m.def("excess_seq", py::overload_cast<const SympChain&>(&excess_seq));
    m.def("defect_seq", py::overload_cast<const SympChain&>(&defect_seq));

    auto any_to_py = [](const AnyRelation& r) -> py::object {
        if (const auto* lin = std::get_if<LinearRelation>(&r)) return py::cast(*lin);
        return py::cast(std::get<SympRelation>(r));
    };

    py::class_<WWMorphism>(m, "WWMorphism")
        .def(py::init([](CategoryTag tag, const LinearRelation& shadow, std::size_t defect,
                         std::size_t excess) { return WWMorphism(tag, shadow, defect, excess); }),
             py::arg("tag"), py::arg("shadow"), py::arg("defect"), py::arg("excess"))
        .def(py::init([](CategoryTag tag, const SympRelation& shadow, std::size_t defect,
                         std::size_t excess) { return WWMorphism(tag, shadow, defect, excess); }),
             py::arg("tag"), py::arg("shadow"), py::arg("defect"), py::arg("excess"))
        .def_property_readonly("tag", &WWMorphism::tag)
        .def_property_readonly("shadow",
                               [any_to_py](const WWMorphism& m) { return any_to_py(m.shadow()); })
        .def_property_readonly("defect", &WWMorphism::defect)
        .def_property_readonly("excess", &WWMorphism::excess)
        .def(py::self == py::self);
    m.def("ww_embed", py::overload_cast<const LinearRelation&>(&ww_embed));
    m.def("ww_embed", py::overload_cast<const SympRelation&, CategoryTag>(&ww_embed));
    m.def("ww_compose", &ww_compose);
    m.def("ww_from_chain",
          py::overload_cast<const RelationChain&, CategoryTag>(&ww_from_chain),
          py::arg("chain"), py::arg("tag") = CategoryTag::LREL);
    m.def("ww_from_chain", py::overload_cast<const SympChain&, CategoryTag>(&ww_from_chain));
    m.def("ww_transpose", &ww_transpose);
    m.def("ww_tensor", &ww_tensor);

    py::class_<TwoTermRep>(m, "TwoTermRep")
        .def_property_readonly("a",
                               [any_to_py](const TwoTermRep& r) { return any_to_py(r.a); })
        .def_property_readonly("b",
                               [any_to_py](const TwoTermRep& r) { return any_to_py(r.b); });
    m.def("ww_two_term", &ww_two_term);

    py::class_<UnitEndo>(m, "UnitEndo")
        .def(py::init([](CategoryTag tag, std::size_t defect, std::size_t excess) {
                 return UnitEndo{tag, defect, excess};
             }),
             py::arg("tag"), py::arg("defect"), py::arg("excess"))
        .def_readonly("tag", &UnitEndo::tag)
        .def_readonly("defect", &UnitEndo::defect)
        .def_readonly("excess", &UnitEndo::excess)
        .def(py::self == py::self);
    m.def("unit_generators", &unit_generators);
    m.def("decompose_unit", &decompose_unit);
    m.def("compose_unit", &compose_unit);

    py::class_<TripleMultiplicities>(m, "TripleMultiplicities")
        .def_readonly("n1", &TripleMultiplicities::n1)
        .def_readonly("n2", &TripleMultiplicities::n2)
        .def_readonly("n4", &TripleMultiplicities::n4)
        .def_readonly("n6", &TripleMultiplicities::n6)
        .def_readonly("n7", &TripleMultiplicities::n7)
        .def_readonly("n8", &TripleMultiplicities::n8);
    py::class_<IsoPairMultiplicities>(m, "IsoPairMultiplicities")
        .def_readonly("n1", &IsoPairMultiplicities::n1)
        .def_readonly("n2", &IsoPairMultiplicities::n2)
        .def_readonly("n3", &IsoPairMultiplicities::n3)
        .def_readonly("n4", &IsoPairMultiplicities::n4)
        .def_readonly("n5", &IsoPairMultiplicities::n5);
    py::class_<WWIndices>(m, "WWIndices")
        .def_readonly("defect", &WWIndices::defect)
        .def_readonly("excess", &WWIndices::excess)
        .def_readonly("shadow_dim", &WWIndices::shadow_dim);
    m.def("triple_multiplicities", &triple_multiplicities);
    m.def("isotropic_pair_multiplicities", &isotropic_pair_multiplicities);
    m.def("ww_indices_from_multiplicities",
          py::overload_cast<const TripleMultiplicities&>(&ww_indices_from_multiplicities));
    m.def("ww_indices_from_multiplicities",
          py::overload_cast<const IsoPairMultiplicities&>(&ww_indices_from_multiplicities));

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, std::size_t cases, const std::string& field,
           std::size_t max_dim) {
            SuiteParams params{seed, cases, FieldSpec::parse(field), max_dim};
            return suite_result_to_dict(run_suite(name, params));
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("cases") = 100, py::arg("field") = "gf:7",
        py::arg("max_dim") = 4,
        "Run one of the seeded invariant suites and return its tally.");
    m.def("suite_names", [] { return suite_names(); });
}
