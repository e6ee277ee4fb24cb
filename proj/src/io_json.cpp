#include "quiverrep/io_json.hpp"

namespace quiverrep {

Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back(Json{{"label", a.label}, {"from", a.from}, {"to", a.to}});
    return Json{{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw validation_error("quiver JSON needs \"vertices\" and \"arrows\"");
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
        if (!a.contains("label") || !a.contains("from") || !a.contains("to"))
            throw validation_error("arrow JSON needs \"label\", \"from\", \"to\"");
        arrows.push_back({a.at("label").get<std::string>(), a.at("from").get<int>(),
                          a.at("to").get<int>()});
    }
    return Quiver(j.at("vertices").get<int>(), std::move(arrows));
}

namespace {

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return Json(s.residue());
    const mpq_class& q = s.rat();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(q.get_str());
}

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return Scalar::of_int(f, j.get<long long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw validation_error("matrix entries must be integers or \"a/b\" strings");
}

} // namespace

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) throw validation_error("matrix JSON must be an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : j) {
        std::vector<Scalar> out;
        for (const auto& e : row) out.push_back(scalar_from_json(f, e));
        rows.push_back(std::move(out));
    }
    return Matrix::from_rows(f, rows);
}

Json rep_to_json(const Representation& x) {
    Json mats = Json::object();
    for (const auto& a : x.quiver().arrows()) mats[a.label] = matrix_to_json(x.arrow_matrix(a.label));
    Json dims = Json::array();
    for (auto d : x.dims()) dims.push_back(d);
    return Json{{"quiver", quiver_to_json(x.quiver())},
                {"field", x.field().to_string()},
                {"dims", dims},
                {"matrices", mats}};
}

Representation rep_from_json(const Json& j, const JsonResolver& resolver) {
    if (!j.is_object()) throw validation_error("representation JSON must be an object");
    for (const char* key : {"quiver", "field", "dims", "matrices"})
        if (!j.contains(key))
            throw validation_error(std::string("representation JSON needs \"") + key + "\"");
    Json qj = j.at("quiver");
    if (qj.is_string()) {
        if (!resolver) throw validation_error("quiver path reference without a resolver");
        qj = resolver(qj.get<std::string>());
    }
    Quiver q = quiver_from_json(qj);
    Field f = Field::parse(j.at("field").get<std::string>());
    DimVector dims;
    for (const auto& d : j.at("dims")) dims.push_back(d.get<long long>());
    Representation x(f, q, dims);
    const Json& mats = j.at("matrices");
    for (const auto& a : q.arrows()) {
        // absent matrices are zero maps; empty shapes lose their row or
        // column count in nested-array form, so fall back to the declared
        // dimensions for them
        if (!mats.contains(a.label)) continue;
        if (dims[a.to - 1] == 0 || dims[a.from - 1] == 0) {
            const Json& entry = mats.at(a.label);
            bool all_empty = entry.empty();
            for (const auto& row : entry) all_empty = all_empty || row.empty();
            if (!all_empty)
                throw validation_error("arrow '" + a.label + "' carries entries but a zero shape");
            continue;
        }
        Matrix m = matrix_from_json(f, mats.at(a.label));
        x.set_arrow_matrix(a.label, std::move(m));
    }
    return x;
}

Json morphism_to_json(const Morphism& phi) {
    Json comps = Json::array();
    for (const auto& c : phi.components()) comps.push_back(matrix_to_json(c));
    return Json{{"components", comps}};
}

Json group_rep_to_json(const GroupRep& x) {
    Json gamma = Json::array();
    for (const auto& g : x.gamma) gamma.push_back(matrix_to_json(g));
    Json group;
    if (x.generators == 2 && x.group_prime == 2)
        group = "klein4";
    else
        group = Json{{"C_p^r", Json{{"p", x.group_prime}, {"r", x.generators}}}};
    return Json{{"group", group},
                {"field", x.field.to_string()},
                {"dim", x.dim},
                {"gamma", gamma}};
}

GroupRep group_rep_from_json(const Json& j) {
    for (const char* key : {"group", "field", "dim", "gamma"})
        if (!j.contains(key))
            throw validation_error(std::string("group representation JSON needs \"") + key + "\"");
    int r;
    std::int64_t p;
    const Json& g = j.at("group");
    if (g.is_string() && g.get<std::string>() == "klein4") {
        r = 2;
        p = 2;
    } else if (g.is_object() && g.contains("C_p^r")) {
        r = g.at("C_p^r").at("r").get<int>();
        p = g.at("C_p^r").at("p").get<std::int64_t>();
    } else {
        throw validation_error("group must be \"klein4\" or {\"C_p^r\": {\"p\":..,\"r\":..}}");
    }
    Field f = Field::parse(j.at("field").get<std::string>());
    std::vector<Matrix> gamma;
    for (const auto& m : j.at("gamma")) gamma.push_back(matrix_from_json(f, m));
    GroupRep out = make_group_rep(r, p, f, std::move(gamma));
    if (out.dim != j.at("dim").get<long long>())
        throw validation_error("declared dim does not match the gamma matrices");
    return out;
}

Json graph_type_to_json(const GraphType& t) {
    switch (t.family) {
        case GraphFamily::A:
        case GraphFamily::D:
        case GraphFamily::E: {
            std::string fam(1, t.family == GraphFamily::A ? 'A'
                               : t.family == GraphFamily::D ? 'D' : 'E');
            return Json{{"type", "dynkin"}, {"family", fam}, {"n", t.n}};
        }
        case GraphFamily::A_tilde:
        case GraphFamily::D_tilde:
        case GraphFamily::E_tilde: {
            std::string fam = t.family == GraphFamily::A_tilde ? "A~"
                              : t.family == GraphFamily::D_tilde ? "D~" : "E~";
            Json delta = Json::array();
            for (auto v : *t.delta) delta.push_back(v);
            return Json{{"type", "euclidean"}, {"family", fam}, {"m", t.n}, {"delta", delta}};
        }
        default:
            return Json{{"type", "other"}};
    }
}

Json dim_vector_to_json(const DimVector& d) {
    Json out = Json::array();
    for (auto v : d) out.push_back(v);
    return out;
}

Json root_set_to_json(const RootSet& roots, bool positive_only) {
    Json list = Json::array();
    for (const auto& r : roots.roots) {
        if (positive_only && !is_positive(r)) continue;
        list.push_back(dim_vector_to_json(r));
        if (!positive_only && roots.type.is_dynkin()) list.push_back(dim_vector_to_json(negate(r)));
    }
    if (!positive_only && roots.type.is_dynkin()) {
        // re-sort after adding mirrors
        std::vector<DimVector> all;
        for (const auto& r : roots.roots) {
            all.push_back(r);
            all.push_back(negate(r));
        }
        std::sort(all.begin(), all.end());
        list = Json::array();
        for (const auto& r : all) list.push_back(dim_vector_to_json(r));
    }
    Json out{{"type", graph_type_to_json(roots.type)}, {"roots", list}};
    return out;
}

Json word_to_json(const ReflectionWord& w) {
    Json out = Json::array();
    for (const auto& step : w) out.push_back(Json::array({std::string(1, step.sign), step.vertex}));
    return out;
}

ReflectionWord word_from_json(const Json& j) {
    ReflectionWord out;
    if (!j.is_array()) throw validation_error("reflection word must be an array of [sign, vertex]");
    for (const auto& step : j) {
        if (!step.is_array() || step.size() != 2)
            throw validation_error("reflection word steps are [\"+\"|\"-\", vertex]");
        std::string sign = step.at(0).get<std::string>();
        if (sign != "+" && sign != "-") throw validation_error("reflection sign must be + or -");
        out.push_back({sign[0], step.at(1).get<int>()});
    }
    return out;
}

Json record_to_json(const ClassificationRecord& r) {
    const char* tag = r.tag == IndecTag::preprojective ? "preprojective"
                      : r.tag == IndecTag::preinjective ? "preinjective" : "regular";
    return Json{{"dims", dim_vector_to_json(r.dims)},
                {"tag", tag},
                {"vertex", r.index_vertex},
                {"power", r.power},
                {"start_vertex", r.start_vertex},
                {"word", word_to_json(r.word)}};
}

Json decomposition_to_json(const Decomposition& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts) {
        Json entry{{"dims", dim_vector_to_json(p.indec.dims())},
                   {"multiplicity", p.multiplicity},
                   {"rep", rep_to_json(p.indec)}};
        parts.push_back(std::move(entry));
    }
    Json witness = Json::array();
    for (const auto& c : d.witness.components()) witness.push_back(matrix_to_json(c));
    return Json{{"summands", parts}, {"witness", witness}};
}

Json kronecker_indec_to_json(const KroneckerIndec& k) {
    switch (k.kind) {
        case KroneckerKind::P: return Json{{"kind", "P"}, {"r", k.r}};
        case KroneckerKind::I: return Json{{"kind", "I"}, {"r", k.r}};
        default:
            return Json{{"kind", "R"},
                        {"p", k.p},
                        {"point", Json::array({k.point.l0.to_string(), k.point.l1.to_string()})}};
    }
}

Json kronecker_list_to_json(const std::vector<std::pair<KroneckerIndec, long long>>& list) {
    Json out = Json::array();
    for (const auto& [k, m] : list) {
        Json entry = kronecker_indec_to_json(k);
        entry["multiplicity"] = m;
        out.push_back(std::move(entry));
    }
    return out;
}

Json klein_list_to_json(const std::vector<std::pair<KleinSummand, long long>>& list) {
    Json out = Json::array();
    for (const auto& [k, m] : list) {
        Json entry;
        switch (k.kind) {
            case KleinSummand::Kind::kG: entry = Json{{"kind", "kG"}}; break;
            case KleinSummand::Kind::TP: entry = Json{{"kind", "TP"}, {"r", k.r}}; break;
            case KleinSummand::Kind::TI: entry = Json{{"kind", "TI"}, {"r", k.r}}; break;
            default:
                entry = Json{{"kind", "TR"},
                             {"p", k.p},
                             {"point", Json::array({k.point.l0.to_string(), k.point.l1.to_string()})}};
        }
        entry["multiplicity"] = m;
        out.push_back(std::move(entry));
    }
    return out;
}

Representation convert_field(const Representation& x, const Field& target) {
    if (x.field() == target) return x;
    if (!(x.field().is_rationals() && target.is_prime_field()))
        throw validation_error("lossy field conversion from " + x.field().to_string() + " to " +
                               target.to_string());
    Representation out(target, x.quiver(), x.dims());
    for (std::size_t ai = 0; ai < x.quiver().arrows().size(); ++ai) {
        const Matrix& m = x.arrow_matrix(ai);
        Matrix c(target, m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                mpq_class v = m.at(i, j).rat();
                if (mpz_class(v.get_den() % target.prime()) == 0)
                    throw validation_error("denominator not invertible modulo " +
                                           std::to_string(target.prime()));
                c.set(i, j, Scalar::parse(target, v.get_str()));
            }
        out.set_arrow_matrix(ai, std::move(c));
    }
    return out;
}

} // namespace quiverrep
