// End-to-end checks of the command-line binary: documented exit codes,
// document round trips, the data-dir override.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <catch2/catch_amalgamated.hpp>

#include "treecode/io.hpp"

namespace fs = std::filesystem;
using namespace treecode;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("treecode_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args, const std::string& extra_env = "") {
    std::string cmd = extra_env + " " + std::string(TREECODE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args, int expected_exit = 0) {
    TempDir tmp;
    std::string out_file = tmp.file("stdout.txt");
    std::string cmd = std::string(TREECODE_CLI_PATH) + " " + args + " >" + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WEXITSTATUS(status) == expected_exit);
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("construct then verify") {
    TempDir tmp;
    SECTION("triple paths at p=5") {
        std::string out = tmp.file("c.json");
        REQUIRE(run("construct --family affine-n4 --p 5 -o " + out) == 0);
        CodeDocument doc = read_document_file(out);
        CHECK(doc.n == 15);
        CHECK(doc.trees.size() == 8);
        CHECK(run("verify " + out + " --expect-distance 11") == 0);
        CHECK(run("verify " + out + " --expect-distance 12") == 1);
    }
    SECTION("two-center stars") {
        std::string out = tmp.file("bibd.json");
        REQUIRE(run("construct --family bibd-8-28-5 -o " + out) == 0);
        CHECK(read_document_file(out).trees.size() == 28);
        CHECK(run("verify " + out + " --expect-distance 5") == 0);
    }
    SECTION("the 35-tree code verifies at 8") {
        std::string out = tmp.file("f.json");
        REQUIRE(run("construct --family furedi-11-35-8 -o " + out) == 0);
        CHECK(run("verify " + out + " --expect-distance 8") == 0);
    }
    SECTION("stars to stdout") {
        std::string text = run_capture("construct --family stars --n 3");
        CodeDocument doc = parse_document(text);
        CHECK(doc.trees.size() == 3);
    }
    SECTION("stars(6) fall short of distance 5") {
        std::string out = tmp.file("s6.json");
        REQUIRE(run("construct --family stars --n 6 -o " + out) == 0);
        CHECK(run("verify " + out + " --expect-distance 5") == 1);
        CHECK(run("verify " + out + " --expect-distance 4") == 0);
    }
    SECTION("construction is byte stable across runs") {
        std::string a = tmp.file("a.json"), b = tmp.file("b.json");
        REQUIRE(run("construct --family cubic-n13 --q 9 -o " + a) == 0);
        REQUIRE(run("construct --family cubic-n13 --q 9 -o " + b) == 0);
        CHECK(slurp(a) == slurp(b));
    }
    SECTION("bad parameters exit 2") {
        CHECK(run("construct --family affine-n4 --p 6 -o " + tmp.file("x.json")) == 2);
        CHECK(run("construct --family cubic-n13 --q 10 -o " + tmp.file("x.json")) == 2);
        CHECK(run("construct --family unknown -o " + tmp.file("x.json")) == 2);
        CHECK(run("construct --family stars -o " + tmp.file("x.json")) == 2);  // missing --n
    }
}

TEST_CASE("verify failure modes") {
    TempDir tmp;
    SECTION("malformed file exits 2") {
        std::string bad = tmp.file("bad.json");
        std::ofstream(bad) << "{ not json";
        CHECK(run("verify " + bad + " --expect-distance 1") == 2);
    }
    SECTION("single-tree document has no distance: exit 2") {
        CodeDocument doc;
        doc.n = 4;
        doc.family = "adhoc";
        doc.trees = {{{{0, 1}}, {{1, 2}}, {{2, 3}}}};
        write_document_file(doc, tmp.file("one.json"));
        CHECK(run("verify " + tmp.file("one.json") + " --expect-distance 1") == 2);
    }
    SECTION("document with a non-tree row exits 3") {
        std::ofstream(tmp.file("broken.json"))
            << R"({"format":"treecode/v1","n":4,"family":"x","trees":[[[0,1],[1,2],[2,3]],[[0,1],[1,2],[0,2]]]})";
        CHECK(run("verify " + tmp.file("broken.json") + " --expect-distance 1") == 3);
    }
}

TEST_CASE("decode exit codes") {
    TempDir tmp;
    std::string code_file = tmp.file("stars4.json");
    REQUIRE(run("construct --family stars --n 4 -o " + code_file) == 0);

    SECTION("unique erasure decode") {
        std::ofstream(tmp.file("rx.json")) << R"({"n":4,"edges":[[2,0],[2,1]]})";
        std::string out = run_capture("decode --code " + code_file + " --received " + tmp.file("rx.json") +
                                      " --mode erasure");
        CHECK(out.find("\"candidates\"") != std::string::npos);
    }
    SECTION("ambiguous fragment exits 4 in both modes") {
        std::ofstream(tmp.file("rx.json")) << R"({"n":4,"edges":[[0,1]]})";
        CHECK(run("decode --code " + code_file + " --received " + tmp.file("rx.json") + " --mode erasure") == 4);
        CHECK(run("decode --code " + code_file + " --received " + tmp.file("rx.json") +
                  " --mode erasure --permissive") == 4);
    }
    SECTION("empty received set is maximally ambiguous") {
        std::ofstream(tmp.file("rx.json")) << R"({"n":4,"edges":[]})";
        CHECK(run("decode --code " + code_file + " --received " + tmp.file("rx.json") + " --mode erasure") == 4);
    }
    SECTION("non-fragment exits 1") {
        // two vertex-disjoint edges cannot both sit in one star
        std::ofstream(tmp.file("rx.json")) << R"({"n":4,"edges":[[0,1],[2,3]]})";
        CHECK(run("decode --code " + code_file + " --received " + tmp.file("rx.json") + " --mode erasure") == 1);
    }
    SECTION("error decode recovers a clean codeword") {
        std::ofstream(tmp.file("rx.json")) << R"({"n":4,"edges":[[0,1],[0,2],[0,3]]})";
        std::string out = run_capture("decode --code " + code_file + " --received " + tmp.file("rx.json") +
                                      " --mode error");
        CHECK(out.find("\"distance\": 0") != std::string::npos);
    }
    SECTION("error-decode tie exits 4") {
        std::ofstream(tmp.file("rx.json")) << R"({"n":4,"edges":[[0,1],[0,2],[1,3]]})";
        CHECK(run("decode --code " + code_file + " --received " + tmp.file("rx.json") + " --mode error") == 4);
    }
}

TEST_CASE("bounds and curves output") {
    std::string table = run_capture("bounds --n 8 --d 5");
    CHECK(table.find("128") != std::string::npos);           // forest-double-count
    CHECK(table.find("witness-bibd-8-28-5") != std::string::npos);

    std::string json = run_capture("bounds --n 8 --d 5 --json");
    CHECK(json.find("\"sphere-packing\"") != std::string::npos);

    TempDir tmp;
    REQUIRE(run("curves --from 0.5 --to 0.5 --step 0.01 --out " + tmp.file("c.csv")) == 0);
    std::string csv = slurp(tmp.file("c.csv"));
    CHECK(csv.rfind("delta,C_delta,c_delta\n", 0) == 0);
    CHECK(csv.find("0.679570") != std::string::npos);
    CHECK(csv.find("0.125") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
    std::string forests = run_capture("oracle forests --n 4 --d 2");
    CHECK(forests.find("\"forests\": 15") != std::string::npos);

    std::string rooted = run_capture("oracle rooted-forests --n 4 --roots 0,1");
    CHECK(rooted.find("\"forests\": 8") != std::string::npos);
    CHECK(rooted.find("\"closed_form\": 8") != std::string::npos);

    std::string containing = run_capture("oracle trees-containing --n 4 --edges [[0,1]]");
    CHECK(containing.find("\"trees_containing\": 8") != std::string::npos);

    std::string exact = run_capture("oracle exact-a --n 4 --d 2");
    CHECK(exact.find("\"value\": 4") != std::string::npos);
    CHECK(exact.find("\"certified\": true") != std::string::npos);

    CHECK(run("oracle exact-a --n 6 --d 4") == 2);  // needs --allow-large

    std::string greedy = run_capture("oracle greedy --n 5 --d 3 --seed 7");
    CHECK(greedy.find("\"size\"") != std::string::npos);
}

TEST_CASE("dot export") {
    TempDir tmp;
    std::string code_file = tmp.file("stars4.json");
    REQUIRE(run("construct --family stars --n 4 -o " + code_file) == 0);
    std::string dot = run_capture("export --dot -i " + code_file + " --index 0");
    CHECK(dot.find("graph treecode {") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(run("export --dot -i " + code_file + " --index 99") == 2);
}

TEST_CASE("data dir override") {
    TempDir tmp;
    SECTION("valid copies load fine") {
        std::ofstream(tmp.path / kBlockTableFile) << block_table_to_json(two_center_star_blocks()).dump(2);
        std::ofstream(tmp.path / kAffineTreeFile) << affine_tree_rows_to_json(affine_tree_rows()).dump(2);
        CHECK(run("construct --family bibd-8-28-5 -o " + tmp.file("c.json"),
                  "TREECODE_DATA_DIR=" + tmp.path.string()) == 0);
        CHECK(run("construct --family furedi-11-35-8 -o " + tmp.file("f.json"),
                  "TREECODE_DATA_DIR=" + tmp.path.string()) == 0);
    }
    SECTION("a corrupted table exits 3") {
        Json j = block_table_to_json(two_center_star_blocks());
        j["blocks"][0][1][0] = 5;
        std::ofstream(tmp.path / kBlockTableFile) << j.dump(2);
        CHECK(run("construct --family bibd-8-28-5 -o " + tmp.file("c.json"),
                  "TREECODE_DATA_DIR=" + tmp.path.string()) == 3);
    }
    SECTION("repository data files work as an override source") {
        CHECK(run("construct --family bibd-8-28-5 -o " + tmp.file("c.json"),
                  "TREECODE_DATA_DIR=" + std::string(TREECODE_REPO_DATA_DIR)) == 0);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("bogus-subcommand") == 2);
    CHECK(run("bounds --n 8") == 2);  // missing --d
}
