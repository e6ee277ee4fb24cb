// Command line front end: every verb reads/writes the JSON schemas of the
// library and prints deterministic JSON to stdout.
//
// Exit codes: 0 success, 2 validation/usage error, 3 the computation
// declared itself incomplete (e.g. an eigenvalue outside the field).

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "quiverrep/io_json.hpp"

namespace fs = std::filesystem;
using namespace quiverrep;

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw validation_error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

JsonResolver resolver_for(const std::string& rep_path) {
    fs::path base = fs::path(rep_path).parent_path();
    return [base](const std::string& ref) { return load_json((base / ref).string()); };
}

Representation load_rep(const std::string& path, const std::string& field_override) {
    Representation x = rep_from_json(load_json(path), resolver_for(path));
    if (!field_override.empty()) x = convert_field(x, Field::parse(field_override));
    return x;
}

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

std::pair<int, int> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw validation_error("expected \"i,r\", got '" + text + "'");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

ProjectivePoint parse_point(const Field& f, const std::string& text) {
    auto sep = text.find_first_of(",:");
    if (sep == std::string::npos)
        throw validation_error("expected a point \"a,b\" or \"a:b\", got '" + text + "'");
    return ProjectivePoint::make(Scalar::parse(f, text.substr(0, sep)),
                                 Scalar::parse(f, text.substr(sep + 1)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quiver representation toolkit"};
    app.require_subcommand(1);
    std::string field_override;
    bool pretty = false;
    app.add_option("--field", field_override, "override the field of input files (Q or GF:p)");
    app.add_flag("--pretty", pretty, "indent JSON output");

    // classify-graph <q>
    std::string cg_quiver;
    auto* cg = app.add_subcommand("classify-graph", "classify the underlying graph");
    cg->add_option("quiver", cg_quiver)->required();

    // roots <q> [--positive]
    std::string roots_quiver;
    bool roots_positive = false;
    auto* roots_cmd = app.add_subcommand("roots", "enumerate the root system");
    roots_cmd->add_option("quiver", roots_quiver)->required();
    roots_cmd->add_flag("--positive", roots_positive, "positive roots only");

    // indecomposables <q>
    std::string ind_quiver;
    auto* ind = app.add_subcommand("indecomposables", "all indecomposables of a Dynkin quiver");
    ind->add_option("quiver", ind_quiver)->required();

    // series <q> --max-r N [--preinjective]
    std::string series_quiver;
    int series_max_r = 0;
    bool series_preinj = false;
    auto* series_cmd = app.add_subcommand("series", "preprojective/preinjective series");
    series_cmd->add_option("quiver", series_quiver)->required();
    series_cmd->add_option("--max-r", series_max_r)->required();
    series_cmd->add_flag("--preinjective", series_preinj);

    // reflect <q> <rep> --word ...
    std::string refl_quiver, refl_rep, refl_word;
    auto* refl = app.add_subcommand("reflect", "apply a reflection word");
    refl->add_option("quiver", refl_quiver)->required();
    refl->add_option("rep", refl_rep)->required();
    refl->add_option("--word", refl_word, "inline JSON or @file")->required();

    // coxeter <q> <rep> --power r
    std::string cox_quiver, cox_rep;
    int cox_power = 1;
    auto* cox = app.add_subcommand("coxeter", "apply a Coxeter functor power");
    cox->add_option("quiver", cox_quiver)->required();
    cox->add_option("rep", cox_rep)->required();
    cox->add_option("--power", cox_power);

    // decompose <rep>
    std::string dec_rep;
    auto* dec = app.add_subcommand("decompose", "Krull-Remak-Schmidt decomposition");
    dec->add_option("rep", dec_rep)->required();

    // hom <x> <y> [--rad n --universe dir]
    std::string hom_x, hom_y, hom_universe;
    int hom_rad = -1;
    auto* hom_cmd = app.add_subcommand("hom", "morphism space (optionally a radical power)");
    hom_cmd->add_option("x", hom_x)->required();
    hom_cmd->add_option("y", hom_y)->required();
    hom_cmd->add_option("--rad", hom_rad);
    hom_cmd->add_option("--universe", hom_universe, "directory of indecomposable rep files");

    // ext <z> <x>
    std::string ext_z, ext_x;
    auto* ext_cmd = app.add_subcommand("ext", "extension space dimension");
    ext_cmd->add_option("z", ext_z)->required();
    ext_cmd->add_option("x", ext_x)->required();

    // kronecker make|classify
    auto* kron = app.add_subcommand("kronecker", "Kronecker quiver families");
    kron->require_subcommand(1);
    std::string kron_kind = "P", kron_point = "0,1", kron_field = "Q";
    int kron_r = 0, kron_p = 1;
    auto* kron_make = kron->add_subcommand("make", "build a canonical indecomposable");
    kron_make->add_option("--kind", kron_kind, "P, I or R");
    kron_make->add_option("--r", kron_r);
    kron_make->add_option("--p", kron_p);
    kron_make->add_option("--point", kron_point);
    kron_make->add_option("--make-field", kron_field, "field of the new representation");
    std::string kron_rep;
    auto* kron_classify = kron->add_subcommand("classify", "classify a Kronecker representation");
    kron_classify->add_option("rep", kron_rep)->required();

    // jordan make|hom
    auto* jordan = app.add_subcommand("jordan", "Jordan quiver families");
    jordan->require_subcommand(1);
    int jordan_p = 1, jordan_q = 1;
    std::string jordan_lambda = "0", jordan_mu, jordan_field = "Q";
    auto* jordan_make = jordan->add_subcommand("make", "build J_{p,lambda}");
    jordan_make->add_option("--p", jordan_p);
    jordan_make->add_option("--lambda", jordan_lambda);
    jordan_make->add_option("--make-field", jordan_field);
    auto* jordan_hom = jordan->add_subcommand("hom", "standard basis of Hom(J_p, J_q)");
    jordan_hom->add_option("--p", jordan_p);
    jordan_hom->add_option("--q", jordan_q);
    jordan_hom->add_option("--lambda", jordan_lambda);
    jordan_hom->add_option("--mu", jordan_mu, "defaults to lambda");
    jordan_hom->add_option("--make-field", jordan_field);

    // separated <q> [rep]
    std::string sep_quiver, sep_rep;
    auto* sep = app.add_subcommand("separated", "separated quiver / functor S");
    sep->add_option("quiver", sep_quiver)->required();
    sep->add_option("rep", sep_rep);

    // klein make|classify
    auto* klein = app.add_subcommand("klein", "Klein four group representations");
    klein->require_subcommand(1);
    std::string klein_kind = "kG", klein_point = "1,1";
    int klein_r = 1, klein_p = 1;
    auto* klein_make = klein->add_subcommand("make", "build an indecomposable (char 2)");
    klein_make->add_option("--kind", klein_kind, "kG, TP, TI or TR");
    klein_make->add_option("--r", klein_r);
    klein_make->add_option("--p", klein_p);
    klein_make->add_option("--point", klein_point);
    std::string klein_rep;
    auto* klein_classify_cmd = klein->add_subcommand("classify", "classify a group representation");
    klein_classify_cmd->add_option("rep", klein_rep)->required();

    // wild embed <q> <rep> --target ...
    auto* wild = app.add_subcommand("wild", "wild embeddings");
    wild->require_subcommand(1);
    std::string wild_quiver, wild_rep, wild_target = "k3";
    auto* wild_embed = wild->add_subcommand("embed", "embed a representation");
    wild_embed->add_option("quiver", wild_quiver)->required();
    wild_embed->add_option("rep", wild_rep)->required();
    wild_embed->add_option("--target", wild_target, "k3, gamma2 or subspace");

    // mesh-hom <q> --from i,r --to j,s
    std::string mesh_quiver, mesh_from, mesh_to;
    auto* mesh = app.add_subcommand("mesh-hom", "morphism dimension through the mesh quiver");
    mesh->add_option("quiver", mesh_quiver)->required();
    mesh->add_option("--from", mesh_from)->required();
    mesh->add_option("--to", mesh_to)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        Field make_field = Field::rationals();
        if (!field_override.empty()) make_field = Field::parse(field_override);

        if (*cg) {
            Quiver q = quiver_from_json(load_json(cg_quiver));
            emit(graph_type_to_json(classify_graph(q)), pretty);
        } else if (*roots_cmd) {
            Quiver q = quiver_from_json(load_json(roots_quiver));
            RootSet roots = enumerate_roots(q);
            if (roots_positive) {
                Json list = Json::array();
                for (const auto& r : roots.roots)
                    if (is_positive(r)) list.push_back(dim_vector_to_json(r));
                emit(list, pretty);
            } else {
                emit(root_set_to_json(roots, false), pretty);
            }
        } else if (*ind) {
            Quiver q = quiver_from_json(load_json(ind_quiver));
            Json out = Json::array();
            for (const auto& rec : dynkin_indecomposables(make_field, q)) {
                Json entry = record_to_json(rec);
                entry["rep"] = rep_to_json(rec.rep);
                out.push_back(std::move(entry));
            }
            emit(out, pretty);
        } else if (*series_cmd) {
            Quiver q = quiver_from_json(load_json(series_quiver));
            Json out = Json::array();
            for (const auto& rec : euclidean_series(make_field, q, series_max_r, true)) {
                bool preinj = rec.tag == IndecTag::preinjective;
                if (preinj != series_preinj) continue;
                out.push_back(record_to_json(rec));
            }
            emit(out, pretty);
        } else if (*refl) {
            Quiver q = quiver_from_json(load_json(refl_quiver));
            Representation x = load_rep(refl_rep, field_override);
            if (!(x.quiver() == q))
                throw validation_error("representation does not live over the given quiver");
            Json wj = refl_word.rfind('@', 0) == 0 ? load_json(refl_word.substr(1))
                                                   : Json::parse(refl_word);
            emit(rep_to_json(apply_word(x, word_from_json(wj))), pretty);
        } else if (*cox) {
            Quiver q = quiver_from_json(load_json(cox_quiver));
            Representation x = load_rep(cox_rep, field_override);
            if (!(x.quiver() == q))
                throw validation_error("representation does not live over the given quiver");
            emit(rep_to_json(coxeter_power(x, cox_power)), pretty);
        } else if (*dec) {
            Representation x = load_rep(dec_rep, field_override);
            emit(decomposition_to_json(krs_decompose(x)), pretty);
        } else if (*hom_cmd) {
            Representation x = load_rep(hom_x, field_override);
            Representation y = load_rep(hom_y, field_override);
            if (hom_rad < 0) {
                auto basis = hom_basis(x, y);
                Json bj = Json::array();
                for (const auto& m : basis) bj.push_back(morphism_to_json(m));
                emit(Json{{"dim", basis.size()}, {"basis", bj}}, pretty);
            } else {
                std::vector<Representation> universe;
                if (!hom_universe.empty()) {
                    std::vector<fs::path> files;
                    for (const auto& entry : fs::directory_iterator(hom_universe))
                        if (entry.path().extension() == ".json") files.push_back(entry.path());
                    std::sort(files.begin(), files.end());
                    for (const auto& p : files) universe.push_back(load_rep(p.string(), field_override));
                }
                auto basis = radn_hom(x, y, hom_rad, universe);
                emit(Json{{"dim", basis.size()}, {"rad", hom_rad}}, pretty);
            }
        } else if (*ext_cmd) {
            Representation z = load_rep(ext_z, field_override);
            Representation x = load_rep(ext_x, field_override);
            emit(Json{{"dim", ext_dim(z, x)}}, pretty);
        } else if (*kron) {
            if (*kron_make) {
                Field f = field_override.empty() ? Field::parse(kron_field) : make_field;
                KroneckerIndec which;
                if (kron_kind == "P")
                    which = {KroneckerKind::P, kron_r, 1, {Scalar(), Scalar()}};
                else if (kron_kind == "I")
                    which = {KroneckerKind::I, kron_r, 1, {Scalar(), Scalar()}};
                else if (kron_kind == "R")
                    which = {KroneckerKind::R, 0, kron_p, parse_point(f, kron_point)};
                else
                    throw validation_error("kronecker kind must be P, I or R");
                emit(rep_to_json(kronecker_indec(f, which)), pretty);
            } else {
                Representation x = load_rep(kron_rep, field_override);
                emit(kronecker_list_to_json(kronecker_classify(x)), pretty);
            }
        } else if (*jordan) {
            Field f = field_override.empty() ? Field::parse(jordan_field) : make_field;
            if (*jordan_make) {
                emit(rep_to_json(jordan_rep(f, jordan_p, Scalar::parse(f, jordan_lambda))), pretty);
            } else {
                Scalar lambda = Scalar::parse(f, jordan_lambda);
                Scalar mu = jordan_mu.empty() ? lambda : Scalar::parse(f, jordan_mu);
                auto basis = jordan_hom_basis(f, jordan_p, lambda, jordan_q, mu);
                Json bj = Json::array();
                for (const auto& m : basis) bj.push_back(morphism_to_json(m));
                emit(Json{{"dim", basis.size()}, {"basis", bj}}, pretty);
            }
        } else if (*sep) {
            Quiver q = quiver_from_json(load_json(sep_quiver));
            if (sep_rep.empty()) {
                emit(quiver_to_json(q.separated()), pretty);
            } else {
                Representation x = load_rep(sep_rep, field_override);
                if (!(x.quiver() == q))
                    throw validation_error("representation does not live over the given quiver");
                emit(rep_to_json(separated_S(x)), pretty);
            }
        } else if (*klein) {
            if (*klein_make) {
                Field f = Field::gf(2);
                GroupRep out = trivial_group_rep(2, 2, f);
                if (klein_kind == "kG")
                    out = regular_group_rep(2, 2, f);
                else if (klein_kind == "TP")
                    out = klein_T(kronecker_indec(f, {KroneckerKind::P, klein_r, 1, {Scalar(), Scalar()}}));
                else if (klein_kind == "TI")
                    out = klein_T(kronecker_indec(f, {KroneckerKind::I, klein_r, 1, {Scalar(), Scalar()}}));
                else if (klein_kind == "TR")
                    out = klein_T(kronecker_indec(
                        f, {KroneckerKind::R, 0, klein_p, parse_point(f, klein_point)}));
                else
                    throw validation_error("klein kind must be kG, TP, TI or TR");
                emit(group_rep_to_json(out), pretty);
            } else {
                GroupRep x = group_rep_from_json(load_json(klein_rep));
                emit(klein_list_to_json(klein_classify(x)), pretty);
            }
        } else if (*wild) {
            Quiver q = quiver_from_json(load_json(wild_quiver));
            Representation x = load_rep(wild_rep, field_override);
            if (!(x.quiver() == q))
                throw validation_error("representation does not live over the given quiver");
            if (wild_target == "gamma2")
                emit(rep_to_json(embed_E(x)), pretty);
            else if (wild_target == "k3")
                emit(rep_to_json(embed_FQ(x)), pretty);
            else if (wild_target == "subspace")
                emit(rep_to_json(embed_Fr(x)), pretty);
            else
                throw validation_error("wild target must be k3, gamma2 or subspace");
        } else if (*mesh) {
            Quiver q = quiver_from_json(load_json(mesh_quiver));
            auto [i, r] = parse_pair(mesh_from);
            auto [j, s] = parse_pair(mesh_to);
            emit(Json{{"dim", mesh_hom_dim(q, i, r, j, s)}}, pretty);
        }
        return 0;
    } catch (const incomplete_error& e) {
        std::cerr << "incomplete: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
