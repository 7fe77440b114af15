#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "treecode/code.hpp"
#include "treecode/graph.hpp"
#include "treecode/tables.hpp"

namespace treecode {

using Json = nlohmann::json;  // keys serialize sorted, which keeps dumps canonical

inline constexpr const char* kDocumentFormat = "treecode/v1";
inline constexpr const char* kTableFormat = "treecode-table/v1";
inline constexpr const char* kDataDirEnvVar = "TREECODE_DATA_DIR";
inline constexpr const char* kBlockTableFile = "two_center_star_blocks.json";
inline constexpr const char* kAffineTreeFile = "relabeled_affine_trees.json";

// On-disk form of a code: schema "treecode/v1", trees as sorted [u,v] edge
// lists, 0-based labels, free-form meta (generator parameters, content hash).
struct CodeDocument {
    int n = 0;
    std::optional<int> claimed_distance;
    std::string family;
    std::vector<std::vector<std::array<int, 2>>> trees;
    Json meta = Json::object();
};

inline CodeDocument document_from_code(const TreeCode& code) {
    CodeDocument doc;
    doc.n = code.n;
    doc.claimed_distance = code.claimed_distance;
    doc.family = code.family;
    for (const LabeledTree& t : code.codewords) {
        std::vector<std::array<int, 2>> edges;
        for (const Edge& e : t.edges()) edges.push_back({e.u, e.v});
        doc.trees.push_back(std::move(edges));
    }
    return doc;
}

// Validates every tree and pairwise distinctness; errors name the offending
// row so table transcription slips stay debuggable.
inline TreeCode code_from_document(const CodeDocument& doc) {
    TreeCode code{doc.n, {}, doc.claimed_distance, doc.family};
    for (std::size_t i = 0; i < doc.trees.size(); ++i) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : doc.trees[i]) pairs.emplace_back(e[0], e[1]);
        try {
            code.codewords.push_back(LabeledTree::from_pairs(doc.n, pairs));
        } catch (const Error& err) {
            fail(ErrorKind::structure, "tree " + std::to_string(i) + ": " + err.what());
        }
    }
    for (std::size_t i = 0; i < code.codewords.size(); ++i)
        for (std::size_t j = i + 1; j < code.codewords.size(); ++j)
            if (code.codewords[i] == code.codewords[j])
                fail(ErrorKind::structure,
                     "trees " + std::to_string(i) + " and " + std::to_string(j) + " are identical");
    return code;
}

inline Json document_to_json(const CodeDocument& doc) {
    Json j;
    j["format"] = kDocumentFormat;
    j["n"] = doc.n;
    if (doc.claimed_distance) j["claimed_distance"] = *doc.claimed_distance;
    j["family"] = doc.family;
    Json trees = Json::array();
    for (const auto& tree : doc.trees) {
        Json edges = Json::array();
        std::vector<std::array<int, 2>> sorted = tree;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& e : sorted) edges.push_back(Json::array({e[0], e[1]}));
        trees.push_back(std::move(edges));
    }
    j["trees"] = std::move(trees);
    j["meta"] = doc.meta;
    return j;
}

// Hash of the canonical dump with the hash field itself removed.
inline std::string document_content_hash(const CodeDocument& doc) {
    Json j = document_to_json(doc);
    j["meta"].erase("content_hash");
    return "fnv1a64:" + fnv1a64_hex(j.dump());
}

inline std::string serialize_document(const CodeDocument& doc) {
    CodeDocument stamped = doc;
    stamped.meta["content_hash"] = document_content_hash(doc);
    return document_to_json(stamped).dump(2) + "\n";
}

inline CodeDocument parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorKind::format, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != kDocumentFormat)
        fail(ErrorKind::format, std::string("expected a ") + kDocumentFormat + " document");
    CodeDocument doc;
    try {
        doc.n = j.at("n").get<int>();
        if (j.contains("claimed_distance")) doc.claimed_distance = j["claimed_distance"].get<int>();
        doc.family = j.value("family", "");
        for (const Json& tree : j.at("trees")) {
            std::vector<std::array<int, 2>> edges;
            for (const Json& e : tree) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
            doc.trees.push_back(std::move(edges));
        }
        if (j.contains("meta")) doc.meta = j["meta"];
    } catch (const Json::exception& e) {
        fail(ErrorKind::format, std::string("malformed document: ") + e.what());
    }
    if (doc.meta.contains("content_hash")) {
        std::string claimed = doc.meta["content_hash"].get<std::string>();
        if (claimed != document_content_hash(doc))
            fail(ErrorKind::data_integrity, "document content hash mismatch: file claims " + claimed);
    }
    return doc;
}

inline void write_document_file(const CodeDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::format, "cannot open " + path + " for writing");
    out << serialize_document(doc);
}

inline CodeDocument read_document_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::format, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

// Received words travel as a bare {"n": N, "edges": [[u,v], ...]} fragment.
inline std::pair<int, EdgeSet> parse_received(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorKind::format, std::string("invalid JSON: ") + e.what());
    }
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> pairs;
        for (const Json& e : j.at("edges")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return {n, EdgeSet::from_pairs(n, pairs)};
    } catch (const Json::exception& e) {
        fail(ErrorKind::format, std::string("malformed received word: ") + e.what());
    }
}

inline std::pair<int, EdgeSet> read_received_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::format, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_received(buf.str());
}

// One `graph` block, node ids as labels (or the caller's label strings).
inline std::string dot_export(const EdgeSet& edges, const std::vector<std::string>& labels = {}) {
    std::ostringstream out;
    out << "graph treecode {\n";
    if (!labels.empty())
        for (int v = 0; v < edges.n(); ++v) out << "  " << v << " [label=\"" << labels[v] << "\"];\n";
    for (const Edge& e : edges.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

// ---- static table files ------------------------------------------------

inline Json block_table_to_json(const BlockTable& t) {
    Json j;
    j["format"] = kTableFormat;
    j["table"] = "two-center-star-blocks";
    j["label_base"] = 0;
    Json blocks = Json::array();
    for (int i = 0; i < BlockTable::order; ++i) {
        Json row = Json::array();
        for (int jcol = 0; jcol < BlockTable::order; ++jcol) {
            if (i == jcol)
                row.push_back(nullptr);
            else
                row.push_back(Json::array({t.at(i, jcol)[0], t.at(i, jcol)[1], t.at(i, jcol)[2]}));
        }
        blocks.push_back(std::move(row));
    }
    j["blocks"] = std::move(blocks);
    j["content_hash"] = fnv1a64_hex(canonical_string(t));
    return j;
}

inline BlockTable block_table_from_json(const Json& j) {
    if (j.value("format", "") != kTableFormat || j.value("table", "") != "two-center-star-blocks")
        fail(ErrorKind::format, "not a two-center-star-blocks table document");
    BlockTable t{};
    try {
        const Json& blocks = j.at("blocks");
        for (int i = 0; i < BlockTable::order; ++i)
            for (int jcol = 0; jcol < BlockTable::order; ++jcol) {
                if (i == jcol) {
                    t.blocks[i][jcol] = {-1, -1, -1};
                    continue;
                }
                const Json& b = blocks.at(i).at(jcol);
                t.blocks[i][jcol] = {b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>()};
            }
    } catch (const Json::exception& e) {
        fail(ErrorKind::format, std::string("malformed block table: ") + e.what());
    }
    if (j.value("content_hash", "") != fnv1a64_hex(canonical_string(t)))
        fail(ErrorKind::data_integrity, "block table file hash does not match its contents");
    validate_block_table(t);  // includes the embedded-hash gate
    return t;
}

inline Json affine_tree_rows_to_json(const std::vector<AffineTreeRow>& rows) {
    Json j;
    j["format"] = kTableFormat;
    j["table"] = "relabeled-affine-trees";
    j["label_base"] = 0;
    Json out_rows = Json::array();
    for (const AffineTreeRow& row : rows) {
        Json edges = Json::array();
        for (const auto& e : row.edges) edges.push_back(Json::array({e[0], e[1]}));
        out_rows.push_back(Json{{"a", row.a}, {"b", row.b}, {"edges", std::move(edges)}});
    }
    j["rows"] = std::move(out_rows);
    j["content_hash"] = fnv1a64_hex(canonical_string(rows));
    return j;
}

inline std::vector<AffineTreeRow> affine_tree_rows_from_json(const Json& j) {
    if (j.value("format", "") != kTableFormat || j.value("table", "") != "relabeled-affine-trees")
        fail(ErrorKind::format, "not a relabeled-affine-trees table document");
    std::vector<AffineTreeRow> rows;
    try {
        for (const Json& row : j.at("rows")) {
            AffineTreeRow r{};
            r.a = row.at("a").get<int>();
            r.b = row.at("b").get<int>();
            const Json& edges = row.at("edges");
            for (std::size_t k = 0; k < 10; ++k)
                r.edges[k] = {edges.at(k).at(0).get<int>(), edges.at(k).at(1).get<int>()};
            rows.push_back(r);
        }
    } catch (const Json::exception& e) {
        fail(ErrorKind::format, std::string("malformed tree table: ") + e.what());
    }
    if (j.value("content_hash", "") != fnv1a64_hex(canonical_string(rows)))
        fail(ErrorKind::data_integrity, "tree table file hash does not match its contents");
    validate_affine_tree_rows(rows);  // includes the embedded-hash gate
    return rows;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::format, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorKind::format, path + ": invalid JSON: " + e.what());
    }
}

}  // namespace treecode
