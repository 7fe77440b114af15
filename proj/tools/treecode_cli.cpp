// Command-line front end: construct/verify/decode the tree codes, evaluate
// bounds, run the brute-force oracles and the reproduction battery.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treecode/treecode.hpp"

namespace {

using namespace treecode;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ambiguity:
            return 4;
        case ErrorKind::structure:
        case ErrorKind::data_integrity:
        case ErrorKind::inconsistency:
            return 3;
        case ErrorKind::no_candidate:
            return 1;
        default:
            return 2;  // usage, format, parameter, domain, dimension, resource, undefined
    }
}

// Optional TREECODE_DATA_DIR override; contents must still pass the embedded
// content-hash gates, so the override swaps the source, never the data.
BlockTable load_block_table() {
    if (const char* dir = std::getenv(kDataDirEnvVar))
        return block_table_from_json(read_json_file(std::string(dir) + "/" + kBlockTableFile));
    return two_center_star_blocks();
}

std::vector<AffineTreeRow> load_affine_tree_rows() {
    if (const char* dir = std::getenv(kDataDirEnvVar))
        return affine_tree_rows_from_json(read_json_file(std::string(dir) + "/" + kAffineTreeFile));
    return affine_tree_rows();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(ErrorKind::format, "cannot open " + out_path + " for writing");
    out << text;
}

Json bound_to_json(const BoundValue& b) {
    Json j;
    j["name"] = b.name;
    j["kind"] = b.kind == BoundKind::upper ? "upper" : "lower";
    j["rounded"] = b.rounded.str();
    if (b.exact) {
        j["exact_numerator"] = boost::multiprecision::numerator(*b.exact).str();
        j["exact_denominator"] = boost::multiprecision::denominator(*b.exact).str();
    }
    j["log10"] = b.log10_value;
    j["applicable"] = b.applicable;
    if (!b.applicability.empty()) j["applicability"] = b.applicability;
    if (!b.note.empty()) j["note"] = b.note;
    return j;
}

int cmd_construct(const std::string& family, int n, int p, int q, const std::string& out_path, int threads) {
    TreeCode code;
    Json meta = Json::object();
    if (family == "stars") {
        if (n <= 0) fail(ErrorKind::parameter, "--n required for stars");
        code = stars(n);
    } else if (family == "ham-paths") {
        if (n <= 0) fail(ErrorKind::parameter, "--n required for ham-paths");
        code = hamiltonian_paths(n);
    } else if (family == "paths-stars") {
        if (n <= 0) fail(ErrorKind::parameter, "--n required for paths-stars");
        code = paths_and_stars(n);
    } else if (family == "affine-n4") {
        if (p <= 0) fail(ErrorKind::parameter, "--p required for affine-n4");
        code = affine_triple_paths(p);
        meta["p"] = p;
    } else if (family == "cubic-n13") {
        if (q <= 0) fail(ErrorKind::parameter, "--q required for cubic-n13 (a power of 3, at least 9)");
        int m = 0, rest = q;
        while (rest % 3 == 0) {
            rest /= 3;
            ++m;
        }
        if (rest != 1 || m < 2) fail(ErrorKind::parameter, "--q must be 3^m with m >= 2");
        Field field = Field::gf3(m);
        code = cubic_pp_trees(field);
        meta["q"] = q;
        meta["field"] = field.to_string();
    } else if (family == "bibd-8-28-5") {
        code = bibd_two_star_code(load_block_table());
    } else if (family == "furedi-11-35-8") {
        code = code_11_35_8(load_affine_tree_rows());
    } else {
        fail(ErrorKind::parameter, "unknown family: " + family);
    }

    VerifyReport report = verify(code, *code.claimed_distance, threads);
    if (!report.ok)
        fail(ErrorKind::structure, "generated code failed distance validation: min distance " +
                                       std::to_string(report.distance.min_distance) + " < " +
                                       std::to_string(*code.claimed_distance));
    CodeDocument doc = document_from_code(code);
    doc.meta = meta;
    doc.meta["min_distance_checked"] = report.distance.min_distance;
    emit(serialize_document(doc), out_path);
    if (!out_path.empty())
        std::cerr << "wrote " << code.codewords.size() << " trees (n=" << code.n << ", min distance "
                  << report.distance.min_distance << ") to " << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& path, int expect_distance, int threads) {
    TreeCode code = code_from_document(read_document_file(path));
    VerifyReport report = verify(code, expect_distance, threads);
    std::cout << "codewords:        " << code.codewords.size() << "\n"
              << "n:                " << code.n << "\n"
              << "min distance:     " << report.distance.min_distance << "\n"
              << "max shared edges: " << report.distance.max_shared_edges << "\n"
              << "argmin pair:      (" << report.distance.argmin_pair.first << ", "
              << report.distance.argmin_pair.second << ")\n"
              << "pairs checked:    " << report.distance.pair_count_checked << "\n"
              << "expected >=:      " << expect_distance << " -> " << (report.ok ? "OK" : "FAIL") << "\n";
    return report.ok ? 0 : 1;
}

int cmd_decode(const std::string& code_path, const std::string& received_path, const std::string& mode,
               bool permissive) {
    TreeCode code = code_from_document(read_document_file(code_path));
    auto [n, received] = read_received_file(received_path);
    if (n != code.n) fail(ErrorKind::dimension, "received word n differs from code n");

    Json out;
    if (mode == "erasure") {
        ErasureDecodeResult result =
            decode_erasures(code, Forest(n, received), permissive ? DecodeMode::permissive : DecodeMode::strict);
        out["mode"] = "erasure";
        out["candidates"] = result.candidates;
        if (result.unique()) {
            Json edges = Json::array();
            for (const Edge& e : code.codewords[result.candidates[0]].edges())
                edges.push_back(Json::array({e.u, e.v}));
            out["tree"] = std::move(edges);
        }
        std::cout << out.dump(2) << "\n";
        return result.unique() ? 0 : 4;
    }
    if (mode == "error") {
        ErrorDecodeResult result = decode_errors(code, received);
        out["mode"] = "error";
        out["candidates"] = result.candidates;
        out["distance"] = result.distance;
        if (result.unique()) {
            Json edges = Json::array();
            for (const Edge& e : code.codewords[result.candidates[0]].edges())
                edges.push_back(Json::array({e.u, e.v}));
            out["tree"] = std::move(edges);
        }
        std::cout << out.dump(2) << "\n";
        return result.unique() ? 0 : 4;
    }
    fail(ErrorKind::parameter, "--mode must be erasure or error");
}

int cmd_bounds(long long n, long long d, bool as_json, bool witnesses) {
    std::vector<BoundValue> table = bounds_table(n, d, witnesses);
    if (as_json) {
        Json j = Json::array();
        for (const BoundValue& b : table) j.push_back(bound_to_json(b));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "bounds for n=" << n << ", d=" << d << "\n";
    for (const BoundValue& b : table) {
        std::cout << (b.kind == BoundKind::lower ? "  lower  " : "  upper  ") << b.name << " = " << b.rounded
                  << "  (log10 " << b.log10_value << ")";
        if (!b.applicable) std::cout << "  [inapplicable: needs " << b.applicability << "]";
        if (!b.note.empty()) std::cout << "  -- " << b.note;
        std::cout << "\n";
    }
    return 0;
}

int cmd_curves(double from, double to, double step, const std::string& out_path) {
    if (!(from > 0.0 && to < 1.0 && from <= to && step > 0.0))
        fail(ErrorKind::parameter, "need 0 < from <= to < 1 and step > 0");
    std::ostringstream csv;
    csv << "delta,C_delta,c_delta\n";
    csv.precision(12);
    for (int i = 0;; ++i) {
        double delta = from + i * step;
        if (delta > to + 1e-12) break;
        DeltaCurvePoint pt = delta_constants(delta);
        csv << pt.delta << "," << pt.C_delta << "," << pt.c_delta << "\n";
    }
    emit(csv.str(), out_path);
    return 0;
}

int cmd_export_dot(const std::string& in_path, int index, bool labels, const std::string& out_path) {
    CodeDocument doc = read_document_file(in_path);
    TreeCode code = code_from_document(doc);
    if (index < 0 || index >= static_cast<int>(code.codewords.size()))
        fail(ErrorKind::parameter, "--index out of range");
    std::vector<std::string> label_strings;
    if (labels) {
        if (code.family == "affine-n4" && doc.meta.contains("p"))
            label_strings = triple_path_vertex_labels(doc.meta["p"].get<int>());
        else if (code.family == "cubic-n13" && doc.meta.contains("q")) {
            int q = doc.meta["q"].get<int>(), m = 0;
            while (q % 3 == 0) {
                q /= 3;
                ++m;
            }
            label_strings = cubic_tree_vertex_labels(Field::gf3(m));
        }
    }
    emit(dot_export(code.codewords[index].edge_set(), label_strings), out_path);
    return 0;
}

int cmd_oracle_forests(int n, int d) {
    Json j;
    j["n"] = n;
    j["d"] = d;
    j["forests"] = count_forests(n, d);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_oracle_rooted(int n, const std::vector<int>& roots) {
    Json j;
    j["n"] = n;
    j["roots"] = roots;
    j["forests"] = count_rooted_forests(n, roots);
    long long d = static_cast<long long>(roots.size());
    long long formula = 1;
    if (d < n) {
        formula = d;
        for (long long e = 0; e < n - 1 - d; ++e) formula *= n;
    }
    j["closed_form"] = formula;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_oracle_containing(int n, const std::string& edges_json) {
    Json parsed;
    try {
        parsed = Json::parse(edges_json);
    } catch (const Json::exception& e) {
        fail(ErrorKind::format, std::string("--edges: ") + e.what());
    }
    std::vector<std::pair<int, int>> pairs;
    for (const Json& e : parsed) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Forest f = Forest::from_pairs(n, pairs);
    Json j;
    j["n"] = n;
    j["edges"] = parsed;
    j["trees_containing"] = count_trees_containing(f);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_oracle_exact_a(int n, int d, std::uint64_t budget, bool allow_large) {
    if (n > 5 && !allow_large)
        fail(ErrorKind::resource,
             "exact search for n >= 6 can take a long time; pass --allow-large to run it anyway");
    ExactAResult r = exact_A(n, d, SearchBudget{budget});
    Json j;
    j["n"] = n;
    j["d"] = d;
    j["value"] = r.value;
    j["certified"] = r.certified;
    j["nodes_expanded"] = r.nodes_expanded;
    j["budget"] = budget;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_oracle_greedy(int n, int d, std::uint64_t seed, int cap, const std::string& out_path) {
    TreeCode code = greedy_code(n, d, seed, cap);
    Json j;
    j["n"] = n;
    j["d"] = d;
    j["seed"] = seed;
    j["size"] = code.codewords.size();
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) {
        CodeDocument doc = document_from_code(code);
        doc.meta["seed"] = seed;
        write_document_file(doc, out_path);
    }
    return 0;
}

int cmd_repro(const std::string& out_path) {
    std::vector<CheckResult> results = run_acceptance_checks();
    std::ostringstream md;
    md << "# Reproduction report\n\n| check | what | result | time (s) |\n|---|---|---|---|\n";
    bool all_pass = true;
    for (const CheckResult& r : results) {
        md << "| " << r.id << " | " << r.title << " | " << (r.pass ? "PASS" : "FAIL") << " | ";
        md.precision(2);
        md << std::fixed << r.seconds << " |\n";
        md.unsetf(std::ios::fixed);
        all_pass &= r.pass;
    }
    md << "\n";
    for (const CheckResult& r : results)
        if (!r.detail.empty()) md << "- **" << r.id << "**: " << r.detail << "\n";
    emit(md.str(), out_path);
    for (const CheckResult& r : results)
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " (" << r.seconds << "s)\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes over labelled trees: constructions, bounds, decoding, exact search"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for pairwise scans")->default_val(1);

    // construct
    auto* construct = app.add_subcommand("construct", "generate a code family and write it as JSON");
    std::string family, out_path;
    int n = 0, p = 0, q = 0;
    construct->add_option("--family", family, "stars|ham-paths|paths-stars|affine-n4|cubic-n13|bibd-8-28-5|furedi-11-35-8")
        ->required();
    construct->add_option("--n", n, "node count (stars, ham-paths, paths-stars)");
    construct->add_option("--p", p, "prime parameter (affine-n4)");
    construct->add_option("--q", q, "field size 3^m, m >= 2 (cubic-n13)");
    construct->add_option("-o,--out", out_path, "output file (stdout if omitted)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check the minimum distance of a code document");
    std::string verify_path;
    int expect_distance = 0;
    verify_cmd->add_option("file", verify_path, "code document")->required();
    verify_cmd->add_option("--expect-distance", expect_distance, "required minimum distance")->required();

    // decode
    auto* decode = app.add_subcommand("decode", "decode a received word against a code");
    std::string decode_code, decode_received, decode_mode = "erasure";
    bool permissive = false;
    decode->add_option("--code", decode_code, "code document")->required();
    decode->add_option("--received", decode_received, "received word JSON {\"n\":..,\"edges\":[[u,v],..]}")
        ->required();
    decode->add_option("--mode", decode_mode, "erasure|error")->required();
    decode->add_flag("--permissive", permissive, "report candidate lists instead of failing on ambiguity");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every applicable bound at (n, d)");
    long long bn = 0, bd = 0;
    bool bounds_json = false, no_witnesses = false;
    bounds_cmd->add_option("--n", bn)->required();
    bounds_cmd->add_option("--d", bd)->required();
    bounds_cmd->add_flag("--json", bounds_json, "machine-readable output");
    bounds_cmd->add_flag("--no-witnesses", no_witnesses, "omit construction witnesses");

    // curves
    auto* curves = app.add_subcommand("curves", "emit the delta constant curves as CSV");
    double cfrom = 0.01, cto = 0.99, cstep = 0.01;
    std::string curves_out;
    curves->add_option("--from", cfrom)->default_val(0.01);
    curves->add_option("--to", cto)->default_val(0.99);
    curves->add_option("--step", cstep)->default_val(0.01);
    curves->add_option("--out", curves_out, "output CSV (stdout if omitted)");

    // export
    auto* export_cmd = app.add_subcommand("export", "export one tree of a code document");
    std::string export_in, export_out;
    int export_index = 0;
    bool export_dot = false, export_labels = false;
    export_cmd->add_flag("--dot", export_dot, "DOT graph output")->required();
    export_cmd->add_option("-i,--in", export_in, "code document")->required();
    export_cmd->add_option("--index", export_index, "tree index inside the document")->default_val(0);
    export_cmd->add_flag("--labels", export_labels, "label nodes with their construction coordinates");
    export_cmd->add_option("-o,--out", export_out, "output file (stdout if omitted)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->require_subcommand(1);
    auto* o_forests = oracle->add_subcommand("forests", "count forests with d components");
    int on = 0, od = 0;
    o_forests->add_option("--n", on)->required();
    o_forests->add_option("--d", od)->required();
    auto* o_rooted = oracle->add_subcommand("rooted-forests", "count forests rooted at a vertex set");
    int rn = 0;
    std::vector<int> roots;
    o_rooted->add_option("--n", rn)->required();
    o_rooted->add_option("--roots", roots, "root vertices")->required()->delimiter(',');
    auto* o_containing = oracle->add_subcommand("trees-containing", "count spanning trees containing a forest");
    int cn = 0;
    std::string edges_json;
    o_containing->add_option("--n", cn)->required();
    o_containing->add_option("--edges", edges_json, "JSON edge list, e.g. [[0,1],[2,3]]")->required();
    auto* o_exact = oracle->add_subcommand("exact-a", "exact maximum code size by branch and bound");
    int an = 0, ad = 0;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    bool allow_large = false;
    o_exact->add_option("--n", an)->required();
    o_exact->add_option("--d", ad)->required();
    o_exact->add_option("--budget", budget, "node-expansion budget");
    o_exact->add_flag("--allow-large", allow_large, "permit n >= 6 (n=6 minutes to hours, n=7 impractical)");
    auto* o_greedy = oracle->add_subcommand("greedy", "maximal code by seeded greedy scan");
    int gn = 0, gd = 0, gcap = kDefaultEnumerationCap;
    std::uint64_t gseed = 1;
    std::string greedy_out;
    o_greedy->add_option("--n", gn)->required();
    o_greedy->add_option("--d", gd)->required();
    o_greedy->add_option("--seed", gseed)->default_val(1);
    o_greedy->add_option("--cap", gcap, "enumeration cap override");
    o_greedy->add_option("-o,--out", greedy_out, "write the code as a document");

    // repro
    auto* repro = app.add_subcommand("repro", "run the full reproduction battery and emit a markdown report");
    std::string repro_out;
    repro->add_option("--out", repro_out, "report file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(family, n, p, q, out_path, threads);
        if (verify_cmd->parsed()) return cmd_verify(verify_path, expect_distance, threads);
        if (decode->parsed()) return cmd_decode(decode_code, decode_received, decode_mode, permissive);
        if (bounds_cmd->parsed()) return cmd_bounds(bn, bd, bounds_json, !no_witnesses);
        if (curves->parsed()) return cmd_curves(cfrom, cto, cstep, curves_out);
        if (export_cmd->parsed()) return cmd_export_dot(export_in, export_index, export_labels, export_out);
        if (oracle->parsed()) {
            if (o_forests->parsed()) return cmd_oracle_forests(on, od);
            if (o_rooted->parsed()) return cmd_oracle_rooted(rn, roots);
            if (o_containing->parsed()) return cmd_oracle_containing(cn, edges_json);
            if (o_exact->parsed()) return cmd_oracle_exact_a(an, ad, budget, allow_large);
            if (o_greedy->parsed()) return cmd_oracle_greedy(gn, gd, gseed, gcap, greedy_out);
        }
        if (repro->parsed()) return cmd_repro(repro_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
