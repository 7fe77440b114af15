#include <catch2/catch_amalgamated.hpp>

#include "treecode/constructions.hpp"
#include "treecode/io.hpp"

using namespace treecode;

TEST_CASE("document round trip is byte stable") {
    TreeCode code = bibd_two_star_code();
    CodeDocument doc = document_from_code(code);
    doc.meta["note"] = "round trip";
    std::string first = serialize_document(doc);
    CodeDocument reread = parse_document(first);
    std::string second = serialize_document(reread);
    CHECK(first == second);

    TreeCode rebuilt = code_from_document(reread);
    REQUIRE(rebuilt.codewords.size() == code.codewords.size());
    for (std::size_t i = 0; i < code.codewords.size(); ++i) REQUIRE(rebuilt.codewords[i] == code.codewords[i]);
    CHECK(rebuilt.claimed_distance == code.claimed_distance);
    CHECK(rebuilt.family == code.family);
}

TEST_CASE("tampered documents are rejected") {
    CodeDocument doc = document_from_code(stars(4));
    std::string text = serialize_document(doc);

    SECTION("hash mismatch") {
        Json j = Json::parse(text);
        j["trees"][0][0][1] = 2;  // content changed, stale hash left in meta
        CHECK_THROWS_AS(parse_document(j.dump()), Error);
    }
    SECTION("invalid JSON") { CHECK_THROWS_AS(parse_document("{"), Error); }
    SECTION("wrong format marker") { CHECK_THROWS_AS(parse_document("{\"format\":\"other/v1\"}"), Error); }
    SECTION("non-tree row is named") {
        CodeDocument broken;
        broken.n = 4;
        broken.family = "adhoc";
        broken.trees = {{{{0, 1}}, {{1, 2}}, {{2, 3}}}, {{{0, 1}}, {{1, 2}}, {{0, 2}}}};
        CHECK_THROWS_WITH(code_from_document(broken), Catch::Matchers::ContainsSubstring("tree 1"));
    }
    SECTION("duplicate trees are named") {
        CodeDocument dup;
        dup.n = 4;
        dup.trees = {{{{0, 1}}, {{1, 2}}, {{2, 3}}}, {{{0, 1}}, {{1, 2}}, {{2, 3}}}};
        CHECK_THROWS_WITH(code_from_document(dup), Catch::Matchers::ContainsSubstring("identical"));
    }
}

TEST_CASE("received word fragment") {
    auto [n, edges] = parse_received(R"({"n": 6, "edges": [[3,1],[0,5]]})");
    CHECK(n == 6);
    CHECK(edges.contains(Edge{1, 3}));
    CHECK(edges.contains(Edge{0, 5}));
    CHECK_THROWS_AS(parse_received(R"({"edges": []})"), Error);
}

TEST_CASE("dot export") {
    LabeledTree star4 = stars(4).codewords[0];
    std::string dot = dot_export(star4.edge_set());
    CHECK(dot.find("graph treecode {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("0 -- 2;") != std::string::npos);
    CHECK(dot.find("0 -- 3;") != std::string::npos);
    // exactly 3 edge lines
    std::size_t lines = 0, pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++lines;
        pos += 4;
    }
    CHECK(lines == 3);

    std::string labeled = dot_export(star4.edge_set(), triple_path_vertex_labels(5));
    CHECK(labeled.find("label=\"(1,0)\"") != std::string::npos);
}

TEST_CASE("table JSON round trips match the embedded data") {
    SECTION("block table") {
        Json j = block_table_to_json(two_center_star_blocks());
        BlockTable t = block_table_from_json(j);
        CHECK(canonical_string(t) == canonical_string(two_center_star_blocks()));
    }
    SECTION("tree rows") {
        Json j = affine_tree_rows_to_json(affine_tree_rows());
        std::vector<AffineTreeRow> rows = affine_tree_rows_from_json(j);
        CHECK(canonical_string(rows) == canonical_string(affine_tree_rows()));
    }
    SECTION("a modified block is rejected") {
        Json j = block_table_to_json(two_center_star_blocks());
        j["blocks"][0][1][0] = 5;
        CHECK_THROWS_AS(block_table_from_json(j), Error);
    }
    SECTION("a modified row is rejected even with a recomputed file hash") {
        Json j = affine_tree_rows_to_json(affine_tree_rows());
        j["rows"][0]["edges"][0] = Json::array({1, 4});
        // fix up the file-level hash so only the embedded gate can catch it
        std::vector<AffineTreeRow> rows;
        for (const Json& row : j["rows"]) {
            AffineTreeRow r{};
            r.a = row["a"].get<int>();
            r.b = row["b"].get<int>();
            for (std::size_t k = 0; k < 10; ++k)
                r.edges[k] = {row["edges"][k][0].get<int>(), row["edges"][k][1].get<int>()};
            rows.push_back(r);
        }
        j["content_hash"] = fnv1a64_hex(canonical_string(rows));
        CHECK_THROWS_AS(affine_tree_rows_from_json(j), Error);
    }
}

TEST_CASE("repository data files agree with the embedded tables") {
    const std::string dir = TREECODE_REPO_DATA_DIR;
    SECTION("block table file") {
        BlockTable t = block_table_from_json(read_json_file(dir + "/" + kBlockTableFile));
        CHECK(canonical_string(t) == canonical_string(two_center_star_blocks()));
    }
    SECTION("tree rows file") {
        std::vector<AffineTreeRow> rows = affine_tree_rows_from_json(read_json_file(dir + "/" + kAffineTreeFile));
        CHECK(canonical_string(rows) == canonical_string(affine_tree_rows()));
    }
}
