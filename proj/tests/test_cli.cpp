#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "tptri/embedded_graph.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TPTRI_CLI_PATH) + " " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path work_dir() {
    auto dir = fs::temp_directory_path() / "tptri_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("gen, validate and classify") {
    auto dir = work_dir();
    auto file = (dir / "i16_1.pprs").string();

    auto gen = run_cli("gen i16 1 --output " + file);
    REQUIRE(gen.exit_code == 0);
    REQUIRE(gen.out.find("NAME: I16[1]") != std::string::npos);
    REQUIRE(gen.out.find("VERTICES: 7") != std::string::npos);

    auto val = run_cli("validate --input " + file);
    REQUIRE(val.exit_code == 0);
    REQUIRE(val.out.find("VALID: true") != std::string::npos);
    REQUIRE(val.out.find("EULER_CHARACTERISTIC: 1") != std::string::npos);

    // an odd number of h1 pieces: t-imperfect, exit 1, wheel certificate shown
    auto cls = run_cli("classify --input " + file);
    REQUIRE(cls.exit_code == 1);
    REQUIRE(cls.out.find("T_PERFECT: false") != std::string::npos);
    REQUIRE(cls.out.find("LOOSE_ODD_WHEEL: {") != std::string::npos);

    auto file2 = (dir / "i16_11.pprs").string();
    REQUIRE(run_cli("gen i16 1,1 --output " + file2).exit_code == 0);
    auto cls2 = run_cli("classify --input " + file2);
    REQUIRE(cls2.exit_code == 0);
    REQUIRE(cls2.out.find("T_PERFECT: true") != std::string::npos);
    REQUIRE(cls2.out.find("PERFECT_WITHOUT_K4: true") != std::string::npos);

    auto js = run_cli("classify --json --input " + file2);
    REQUIRE(js.exit_code == 0);
    REQUIRE(js.out.find("\"t_perfect\":true") != std::string::npos);
}

TEST_CASE("validate rejects a sphere embedding with exit 2") {
    auto dir = work_dir();
    auto file = dir / "sphere.pprs";
    std::ofstream(file) << tptri::write_pprs(tptri::fixtures::tetrahedron_sphere());
    auto val = run_cli("validate --input " + file.string());
    REQUIRE(val.exit_code == 2);
    REQUIRE(val.out.find("chi = 2") != std::string::npos);
}

TEST_CASE("oracle on W5 and on a catalog instance") {
    auto dir = work_dir();
    auto w5_file = dir / "w5.pprs";
    {
        // any rotation system carries the graph; the oracle uses the skeleton
        std::vector<std::vector<tptri::HalfEdge>> rot(6);
        for (int i = 0; i < 5; ++i) {
            rot[i] = {{(i + 1) % 5, 0}, {(i + 4) % 5, 0}, {5, 0}};
            rot[5].push_back({i, 0});
        }
        std::ofstream(w5_file) << tptri::write_pprs(tptri::EmbeddedGraph::from_rotations(6, std::move(rot)));
    }
    auto res = run_cli("oracle tperfect --input " + w5_file.string());
    REQUIRE(res.exit_code == 1);
    REQUIRE(res.out.find("T_PERFECT_BRUTEFORCE: false") != std::string::npos);
    REQUIRE(res.out.find("FRACTIONAL_VERTEX:") != std::string::npos);

    auto file = (dir / "i16_11b.pprs").string();
    REQUIRE(run_cli("gen i16 1,1 --output " + file).exit_code == 0);
    auto agree = run_cli("oracle tperfect --input " + file);
    REQUIRE(agree.exit_code == 0);
    REQUIRE(agree.out.find("AGREEMENT: agree") != std::string::npos);

    auto perfect = run_cli("oracle perfect --input " + file);
    REQUIRE(perfect.exit_code == 0);
    REQUIRE(perfect.out.find("PERFECT_BRUTEFORCE: true") != std::string::npos);
    REQUIRE(perfect.out.find("AGREEMENT: agree") != std::string::npos);

    auto capped = run_cli("oracle tperfect --cap 5 --input " + file);
    REQUIRE(capped.exit_code == 3);
}

TEST_CASE("split, contract, reduce and replay round trip through files") {
    auto dir = work_dir();
    auto base = (dir / "base.pprs").string();
    REQUIRE(run_cli("gen i16 1 --output " + base).exit_code == 0);

    // split the apex at its opposite link gates
    auto split_file = (dir / "split.pprs").string();
    auto sp = run_cli("split --input " + base + " --at 0 --gate 1,3 --output " + split_file);
    REQUIRE(sp.exit_code == 0);
    REQUIRE(sp.out.find("VERTICES: 9") != std::string::npos);
    REQUIRE(sp.out.find("CREATED: 7 8") != std::string::npos);

    auto back_file = (dir / "back.pprs").string();
    auto ct = run_cli("contract --input " + split_file + " --site 0,7,8 --output " + back_file);
    REQUIRE(ct.exit_code == 0);
    REQUIRE(ct.out.find("VERTICES: 7") != std::string::npos);

    auto log_file = (dir / "reduce.log").string();
    auto red_file = (dir / "reduced.pprs").string();
    auto red = run_cli("reduce --input " + split_file + " --log " + log_file + " --output " + red_file);
    REQUIRE(red.exit_code == 0);
    REQUIRE(red.out.find("IRREDUCIBLE: true") != std::string::npos);

    auto replay_file = (dir / "replayed.pprs").string();
    auto rp = run_cli("replay --input " + split_file + " --log " + log_file + " --output " + replay_file);
    REQUIRE(rp.exit_code == 0);
    std::ifstream a(red_file), b(replay_file);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    REQUIRE(sa == sb);

    // octahedron attach and delete
    auto octa_file = (dir / "octa.pprs").string();
    auto at = run_cli("octa --input " + base + " --attach 0,1,2 --output " + octa_file);
    REQUIRE(at.exit_code == 0);
    REQUIRE(at.out.find("VERTICES: 10") != std::string::npos);
    auto del = run_cli("octa --input " + octa_file + " --delete 0,1,2 --output -");
    REQUIRE(del.exit_code == 0);
    REQUIRE(del.out.find("pprs 1") != std::string::npos);
}

TEST_CASE("export-dot annotates certificates") {
    auto dir = work_dir();
    auto file = (dir / "i18.pprs").string();
    REQUIRE(run_cli("gen i18 1 --output " + file).exit_code == 0);
    auto dot = run_cli("export-dot --input " + file + " --output -");
    REQUIRE(dot.exit_code == 0);
    REQUIRE(dot.out.find("graph g {") != std::string::npos);
    REQUIRE(dot.out.find("color=\"red\"") != std::string::npos);  // the wheel hub
}

TEST_CASE("bad invocations exit with 2") {
    REQUIRE(run_cli("classify --input /nonexistent.pprs").exit_code == 2);
    REQUIRE(run_cli("frobnicate").exit_code == 2);
    REQUIRE(run_cli("classify --input x --bogus-flag").exit_code == 2);
    auto dir = work_dir();
    auto file = (dir / "g.pprs").string();
    REQUIRE(run_cli("gen i16 1 --output " + file).exit_code == 0);
    REQUIRE(run_cli("gen i16 2 --output " + file).exit_code == 2);  // degenerate parameters
    REQUIRE(run_cli("split --input " + file + " --at 0 --gate 1,2").exit_code == 2);  // even arcs
    REQUIRE(run_cli("contract --input " + file + " --site 0,1,2").exit_code == 2);    // no such site
}
