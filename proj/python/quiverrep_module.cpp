// Python bindings: thin JSON-string wrappers over the C++ core so the
// python side stays schema-compatible with the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverrep/io_json.hpp"

namespace py = pybind11;
using namespace quiverrep;

namespace {

Json parse(const std::string& text) { return Json::parse(text); }

std::string classify_graph_json(const std::string& quiver) {
    return graph_type_to_json(classify_graph(quiver_from_json(parse(quiver)))).dump();
}

std::vector<std::vector<long long>> positive_roots(const std::string& quiver) {
    RootSet roots = enumerate_roots(quiver_from_json(parse(quiver)));
    std::vector<std::vector<long long>> out;
    for (const auto& r : roots.roots)
        if (is_positive(r)) out.push_back(r);
    return out;
}

long long euler(const std::string& quiver, const std::vector<long long>& x,
                const std::vector<long long>& y) {
    return euler_form(form_data(quiver_from_json(parse(quiver))), x, y);
}

long long tits(const std::string& quiver, const std::vector<long long>& x) {
    return quadratic(form_data(quiver_from_json(parse(quiver))), x);
}

long long defect_of(const std::string& quiver, const std::vector<long long>& x) {
    return defect(quiver_from_json(parse(quiver)), x);
}

std::vector<long long> coxeter(const std::string& quiver, const std::vector<long long>& x) {
    return coxeter_transform(quiver_from_json(parse(quiver)), x);
}

std::string indecomposables_json(const std::string& quiver, const std::string& field) {
    Json out = Json::array();
    for (const auto& rec :
         dynkin_indecomposables(Field::parse(field), quiver_from_json(parse(quiver)))) {
        Json entry = record_to_json(rec);
        entry["rep"] = rep_to_json(rec.rep);
        out.push_back(std::move(entry));
    }
    return out.dump();
}

std::string decompose_json(const std::string& rep) {
    return decomposition_to_json(krs_decompose(rep_from_json(parse(rep)))).dump();
}

long long hom_dim_json(const std::string& x, const std::string& y) {
    return hom_dim(rep_from_json(parse(x)), rep_from_json(parse(y)));
}

long long ext_dim_json(const std::string& z, const std::string& x) {
    return ext_dim(rep_from_json(parse(z)), rep_from_json(parse(x)));
}

std::string reflect_json(const std::string& rep, const std::string& word) {
    return rep_to_json(apply_word(rep_from_json(parse(rep)), word_from_json(parse(word)))).dump();
}

std::string coxeter_power_json(const std::string& rep, int power) {
    return rep_to_json(coxeter_power(rep_from_json(parse(rep)), power)).dump();
}

std::string kronecker_make_json(const std::string& kind, int r, int p, const std::string& point,
                                const std::string& field) {
    Field f = Field::parse(field);
    KroneckerIndec which;
    if (kind == "P")
        which = {KroneckerKind::P, r, 1, {Scalar(), Scalar()}};
    else if (kind == "I")
        which = {KroneckerKind::I, r, 1, {Scalar(), Scalar()}};
    else if (kind == "R") {
        auto sep = point.find(':');
        if (sep == std::string::npos) throw validation_error("point must look like \"a:b\"");
        which = {KroneckerKind::R, 0, p,
                 ProjectivePoint::make(Scalar::parse(f, point.substr(0, sep)),
                                       Scalar::parse(f, point.substr(sep + 1)))};
    } else
        throw validation_error("kind must be P, I or R");
    return rep_to_json(kronecker_indec(f, which)).dump();
}

std::string kronecker_classify_json(const std::string& rep) {
    return kronecker_list_to_json(kronecker_classify(rep_from_json(parse(rep)))).dump();
}

std::string klein_classify_json(const std::string& grouprep) {
    return klein_list_to_json(klein_classify(group_rep_from_json(parse(grouprep)))).dump();
}

std::string separated_json(const std::string& rep) {
    return rep_to_json(separated_S(rep_from_json(parse(rep)))).dump();
}

long long mesh_dim(const std::string& quiver, int i, int r, int j, int s) {
    return mesh_hom_dim(quiver_from_json(parse(quiver)), i, r, j, s);
}

std::string wild_embed_json(const std::string& rep, const std::string& target) {
    Representation x = rep_from_json(parse(rep));
    if (target == "gamma2") return rep_to_json(embed_E(x)).dump();
    if (target == "k3") return rep_to_json(embed_FQ(x)).dump();
    if (target == "subspace") return rep_to_json(embed_Fr(x)).dump();
    throw validation_error("target must be k3, gamma2 or subspace");
}

} // namespace

PYBIND11_MODULE(_quiverrep, m) {
    m.doc() = "exact quiver representation toolkit (JSON-string interface)";

    py::register_exception<validation_error>(m, "ValidationError");
    py::register_exception<incomplete_error>(m, "IncompleteError");

    m.def("classify_graph", &classify_graph_json, py::arg("quiver_json"));
    m.def("positive_roots", &positive_roots, py::arg("quiver_json"));
    m.def("euler_form", &euler, py::arg("quiver_json"), py::arg("x"), py::arg("y"));
    m.def("quadratic", &tits, py::arg("quiver_json"), py::arg("x"));
    m.def("defect", &defect_of, py::arg("quiver_json"), py::arg("x"));
    m.def("coxeter_transform", &coxeter, py::arg("quiver_json"), py::arg("x"));
    m.def("dynkin_indecomposables", &indecomposables_json, py::arg("quiver_json"),
          py::arg("field") = "Q");
    m.def("decompose", &decompose_json, py::arg("rep_json"));
    m.def("hom_dim", &hom_dim_json, py::arg("x_json"), py::arg("y_json"));
    m.def("ext_dim", &ext_dim_json, py::arg("z_json"), py::arg("x_json"));
    m.def("reflect", &reflect_json, py::arg("rep_json"), py::arg("word_json"));
    m.def("coxeter_power", &coxeter_power_json, py::arg("rep_json"), py::arg("power"));
    m.def("kronecker_make", &kronecker_make_json, py::arg("kind"), py::arg("r") = 0,
          py::arg("p") = 1, py::arg("point") = "0:1", py::arg("field") = "Q");
    m.def("kronecker_classify", &kronecker_classify_json, py::arg("rep_json"));
    m.def("klein_classify", &klein_classify_json, py::arg("grouprep_json"));
    m.def("separated", &separated_json, py::arg("rep_json"));
    m.def("mesh_hom_dim", &mesh_dim, py::arg("quiver_json"), py::arg("i"), py::arg("r"),
          py::arg("j"), py::arg("s"));
    m.def("wild_embed", &wild_embed_json, py::arg("rep_json"), py::arg("target") = "k3");
}
