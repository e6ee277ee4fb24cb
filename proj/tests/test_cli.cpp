#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "quiverrep/io_json.hpp"

using namespace quiverrep;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const char* cli = std::getenv("QUIVER_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "QUIVER_CLI must point at the built binary");
    std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    INFO("command: ", cmd, "\noutput: ", out);
    return {WEXITSTATUS(status), out};
}

fs::path write_temp(const std::string& name, const Json& j) {
    fs::path dir = fs::temp_directory_path() / "quiverrep_cli_tests";
    fs::create_directories(dir);
    fs::path file = dir / name;
    std::ofstream(file) << j.dump();
    return file;
}

} // namespace

TEST_CASE("classify-graph golden output") {
    fs::path kron = write_temp("kron.json", quiver_to_json(kronecker_quiver(2)));
    CliResult r = run_cli("classify-graph " + kron.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"type\":\"euclidean\",\"family\":\"A~\",\"m\":1,\"delta\":[1,1]}\n");

    fs::path a3 = write_temp("a3.json", quiver_to_json(linear_quiver(3)));
    CliResult r2 = run_cli("classify-graph " + a3.string());
    CHECK(r2.exit_code == 0);
    CHECK(r2.output == "{\"type\":\"dynkin\",\"family\":\"A\",\"n\":3}\n");
}

TEST_CASE("roots golden output") {
    fs::path a2 = write_temp("a2.json", quiver_to_json(linear_quiver(2)));
    CliResult r = run_cli("roots " + a2.string() + " --positive");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[[0,1],[1,0],[1,1]]\n");
}

TEST_CASE("decompose on the zero representation") {
    Field f = Field::rationals();
    fs::path rep =
        write_temp("zero.json", rep_to_json(Representation(f, kronecker_quiver(2), {0, 0})));
    CliResult r = run_cli("decompose " + rep.string());
    CHECK(r.exit_code == 0);
    Json parsed = Json::parse(r.output);
    CHECK(parsed.at("summands").empty());
}

TEST_CASE("reflect and coxeter round trip through files") {
    Field f = Field::rationals();
    Quiver kron = kronecker_quiver(2);
    fs::path q = write_temp("kron2.json", quiver_to_json(kron));
    fs::path rep = write_temp("p2.json", rep_to_json(projective(f, kron, 2)));

    CliResult r = run_cli("coxeter " + q.string() + " " + rep.string() + " --power -1");
    CHECK(r.exit_code == 0);
    Json parsed = Json::parse(r.output);
    CHECK(parsed.at("dims") == Json::array({2, 3}));

    // output is consumable by the next verb
    fs::path next = write_temp("p2_shift.json", parsed);
    CliResult again = run_cli("coxeter " + q.string() + " " + next.string() + " --power 1");
    CHECK(again.exit_code == 0);
    CHECK(Json::parse(again.output).at("dims") == Json::array({0, 1}));

    CliResult refl = run_cli("reflect " + q.string() + " " + rep.string() +
                             " --word \"[[\\\"-\\\",2]]\"");
    CHECK(refl.exit_code == 2); // 2 is a sink, the '-' step is invalid

    CliResult refl2 = run_cli("reflect " + q.string() + " " + rep.string() +
                              " --word \"[[\\\"+\\\",2]]\"");
    CHECK(refl2.exit_code == 0);
}

TEST_CASE("hom, ext and kronecker verbs") {
    Field f = Field::rationals();
    Quiver kron = kronecker_quiver(2);
    fs::path x = write_temp("s1.json", rep_to_json(simple(f, kron, 1)));
    fs::path y = write_temp("s2.json", rep_to_json(simple(f, kron, 2)));

    CliResult hom = run_cli("hom " + x.string() + " " + y.string());
    CHECK(hom.exit_code == 0);
    CHECK(Json::parse(hom.output).at("dim") == 0);

    CliResult ext = run_cli("ext " + x.string() + " " + y.string());
    CHECK(ext.exit_code == 0);
    CHECK(Json::parse(ext.output).at("dim") == 2);

    CliResult make = run_cli("kronecker make --kind R --p 2 --point 5,1");
    CHECK(make.exit_code == 0);
    fs::path reg = write_temp("r2.json", Json::parse(make.output));
    CliResult classify = run_cli("kronecker classify " + reg.string());
    CHECK(classify.exit_code == 0);
    Json list = Json::parse(classify.output);
    REQUIRE(list.size() == 1);
    CHECK(list[0].at("kind") == "R");
    CHECK(list[0].at("p") == 2);

    // irrational eigenvalue: declared incompleteness, exit 3
    Representation irr(f, kron, {2, 2});
    irr.set_arrow_matrix(std::size_t{0}, Matrix::from_ints(f, {{0, 2}, {1, 0}}));
    irr.set_arrow_matrix(std::size_t{1}, Matrix::identity(f, 2));
    fs::path irr_file = write_temp("irr.json", rep_to_json(irr));
    CHECK(run_cli("kronecker classify " + irr_file.string()).exit_code == 3);
}

TEST_CASE("klein and separated verbs") {
    CliResult make = run_cli("klein make --kind TR --p 2 --point 1,1");
    CHECK(make.exit_code == 0);
    fs::path tr = write_temp("tr.json", Json::parse(make.output));
    CliResult classify = run_cli("klein classify " + tr.string());
    CHECK(classify.exit_code == 0);
    Json list = Json::parse(classify.output);
    REQUIRE(list.size() == 1);
    CHECK(list[0].at("kind") == "TR");

    fs::path loop2 = write_temp("gamma2.json", quiver_to_json(loop_quiver(2)));
    CliResult sep = run_cli("separated " + loop2.string());
    CHECK(sep.exit_code == 0);
    CHECK(Json::parse(sep.output).at("vertices") == 2);
}

TEST_CASE("mesh-hom and wild verbs") {
    fs::path a2 = write_temp("a2m.json", quiver_to_json(linear_quiver(2)));
    CliResult mesh = run_cli("mesh-hom " + a2.string() + " --from 2,0 --to 1,0");
    CHECK(mesh.exit_code == 0);
    CHECK(Json::parse(mesh.output).at("dim") == 1);

    Field f = Field::rationals();
    Quiver kron = kronecker_quiver(2);
    fs::path q = write_temp("kron3.json", quiver_to_json(kron));
    fs::path rep = write_temp("s1w.json", rep_to_json(simple(f, kron, 1)));
    CliResult wild = run_cli("wild embed " + q.string() + " " + rep.string() + " --target gamma2");
    CHECK(wild.exit_code == 0);
    CHECK(Json::parse(wild.output).at("dims") == Json::array({6}));
}

TEST_CASE("series, indecomposables and jordan verbs") {
    fs::path kron = write_temp("kron_s.json", quiver_to_json(kronecker_quiver(2)));
    CliResult series = run_cli("series " + kron.string() + " --max-r 1");
    CHECK(series.exit_code == 0);
    Json list = Json::parse(series.output);
    CHECK(list.size() == 4); // two vertices, r = 0 and 1
    for (const auto& rec : list) CHECK(rec.at("tag") == "preprojective");

    CliResult preinj = run_cli("series " + kron.string() + " --max-r 1 --preinjective");
    CHECK(preinj.exit_code == 0);
    for (const auto& rec : Json::parse(preinj.output)) CHECK(rec.at("tag") == "preinjective");

    fs::path a2 = write_temp("a2_ind.json", quiver_to_json(linear_quiver(2)));
    CliResult ind = run_cli("indecomposables " + a2.string());
    CHECK(ind.exit_code == 0);
    CHECK(Json::parse(ind.output).size() == 3);

    CliResult jordan = run_cli("jordan hom --p 3 --q 2 --lambda 5");
    CHECK(jordan.exit_code == 0);
    CHECK(Json::parse(jordan.output).at("dim") == 2);
    CliResult jordan_cross = run_cli("jordan hom --p 3 --q 2 --lambda 5 --mu 7");
    CHECK(Json::parse(jordan_cross.output).at("dim") == 0);
}

TEST_CASE("radical hom through a universe directory") {
    Field f = Field::rationals();
    Quiver a2 = linear_quiver(2);
    fs::path dir = fs::temp_directory_path() / "quiverrep_cli_tests" / "universe";
    fs::create_directories(dir);
    int k = 0;
    for (const auto& rec : dynkin_indecomposables(f, a2))
        std::ofstream(dir / ("u" + std::to_string(k++) + ".json")) << rep_to_json(rec.rep).dump();

    fs::path p1 = write_temp("radp1.json", rep_to_json(projective(f, a2, 1)));
    fs::path s1 = write_temp("rads1.json", rep_to_json(simple(f, a2, 1)));
    CliResult rad1 = run_cli("hom " + p1.string() + " " + s1.string() + " --rad 1 --universe " +
                             dir.string());
    CHECK(rad1.exit_code == 0);
    CHECK(Json::parse(rad1.output).at("dim") == 1);
    CliResult rad2 = run_cli("hom " + p1.string() + " " + s1.string() + " --rad 2 --universe " +
                             dir.string());
    CHECK(rad2.exit_code == 0);
    CHECK(Json::parse(rad2.output).at("dim") == 0);
}

TEST_CASE("pretty output carries the same data") {
    fs::path a2 = write_temp("a2p.json", quiver_to_json(linear_quiver(2)));
    CliResult compact = run_cli("classify-graph " + a2.string());
    CliResult pretty = run_cli("--pretty classify-graph " + a2.string());
    CHECK(compact.exit_code == 0);
    CHECK(pretty.exit_code == 0);
    CHECK(Json::parse(compact.output) == Json::parse(pretty.output));
    CHECK(pretty.output.find('\n') != std::string::npos);
}

TEST_CASE("validation failures exit with code 2") {
    CHECK(run_cli("no-such-verb").exit_code == 2);
    CHECK(run_cli("classify-graph /nonexistent/file.json").exit_code == 2);

    fs::path jordan = write_temp("loop.json", quiver_to_json(loop_quiver(1)));
    CHECK(run_cli("roots " + jordan.string()).exit_code == 0); // A~0 is fine
    fs::path wildq = write_temp("k3.json", quiver_to_json(kronecker_quiver(3)));
    CHECK(run_cli("roots " + wildq.string()).exit_code == 2);
}

TEST_CASE("field override") {
    Field f = Field::rationals();
    Quiver kron = kronecker_quiver(2);
    Representation half(f, kron, {1, 1});
    half.set_arrow_matrix(std::size_t{0},
                          Matrix::from_rows(f, {{Scalar::of_rational(1, 2)}}));
    fs::path rep = write_temp("half.json", rep_to_json(half));
    fs::path other = write_temp("one.json", rep_to_json(simple(f, kron, 1)));

    CliResult ok = run_cli("--field GF:7 hom " + rep.string() + " " + rep.string());
    CHECK(ok.exit_code == 0);
    // denominator 2 dies modulo 2
    CliResult lossy = run_cli("--field GF:2 hom " + rep.string() + " " + rep.string());
    CHECK(lossy.exit_code == 2);
}
