// Command-line front end: construct labelings of caterpillars, hairy cycles,
// coronas and cycles, rewrite them, develop them into cyclic decompositions,
// and verify or export every artifact as JSON/DOT.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "divgrace/cycle.hpp"
#include "divgrace/json_io.hpp"
#include "divgrace/oracle.hpp"

using namespace divgrace;
using nlohmann::json;

namespace {

int exit_usage(const Error& e) {
    json j;
    j["error"]["code"] = errc_name(e.code());
    j["error"]["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 2;
}

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) fail(Errc::io_error, "cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::io_error, "input is not valid JSON");
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) fail(Errc::io_error, "cannot open " + path);
    out << text;
}

std::vector<int> parse_spec(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

json with_provenance(json labeling, const Provenance& prov) {
    labeling["provenance"] = provenance_to_json(prov);
    return labeling;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisible graceful labelings and cyclic graph decompositions"};
    app.require_subcommand(1);

    std::string out_path, in_path, spec_csv, graph_path, labeling_path, op_str, dot_path;
    int t = 0, lambda = 0, d = 0, edges = 0, s_idx = 0, n_copies = 1;
    std::optional<int> c_choice, j_idx;
    bool odd = false, alpha = false, do_verify = false, no_materialize = false;
    bool transform_route = false;
    std::uint64_t limit = 16;

    auto* construct = app.add_subcommand("construct", "build a verified labeling");
    construct->require_subcommand(1);

    auto* ccat = construct->add_subcommand("caterpillar", "standard labeling of a caterpillar");
    ccat->add_option("--spec", spec_csv, "pendant counts n1,m1,...")->required();
    ccat->add_option("--d", d, "divisor of the edge count")->default_val(1);
    ccat->add_option("-o,--output", out_path);

    auto* chairy = construct->add_subcommand("hairy", "odd labeling of a bipartite hairy cycle");
    chairy->add_option("--spec", spec_csv, "pendant counts n1,m1,...")->required();
    chairy->add_flag("--odd", odd, "e-divisible (odd) labeling");
    chairy->add_option("--d", d, "must equal the edge count when given");
    chairy->add_flag("--transform-route", transform_route, "construct-then-rewrite instead of closed forms");
    chairy->add_option("-o,--output", out_path);

    auto* ccorona = construct->add_subcommand("corona", "d-divisible labeling of H(2t,lambda)");
    ccorona->add_option("--t", t)->required();
    ccorona->add_option("--lambda", lambda)->required();
    ccorona->add_option("--d", d)->required();
    ccorona->add_option("-o,--output", out_path);

    auto* ccycle = construct->add_subcommand("cycle", "d-divisible labeling of C_{4k}");
    ccycle->add_option("--edges", edges, "cycle length 4k")->required();
    ccycle->add_option("--d", d)->required();
    ccycle->add_option("--c", c_choice, "closing difference, when two are valid");
    ccycle->add_option("-o,--output", out_path);

    auto* tf = app.add_subcommand("transform", "apply one rewriting operation");
    tf->add_option("--op", op_str, "O1|O2|O3|O4|O5|O5_4")->required();
    tf->add_option("--s", s_idx, "spine index");
    tf->add_option("--j", j_idx, "pendant index (O5_4)");
    tf->add_option("-i,--input", in_path);
    tf->add_option("-o,--output", out_path);

    auto* vf = app.add_subcommand("verify", "check a labeling");
    vf->add_option("--d", d, "check d-divisibility");
    vf->add_flag("--alpha", alpha, "require the part separation");
    vf->add_option("-i,--input", in_path);

    auto* dc = app.add_subcommand("decompose", "develop a labeling into a cyclic decomposition");
    dc->add_option("--labeling", labeling_path, "labeling JSON file");
    dc->add_option("-i,--input", in_path);
    dc->add_option("--d", d, "divisor; defaults to the labeling's d field");
    dc->add_option("--n", n_copies)->default_val(1);
    dc->add_flag("--verify", do_verify);
    dc->add_flag("--no-materialize", no_materialize, "emit base blocks and a certificate only");
    dc->add_option("-o,--output", out_path);

    auto* sc = app.add_subcommand("search", "exhaustive labeling search");
    sc->add_option("--graph", graph_path, "graph JSON file")->required();
    sc->add_option("--d", d)->required();
    sc->add_flag("--alpha", alpha);
    sc->add_option("--limit", limit)->default_val(16);
    sc->add_option("-o,--output", out_path);

    auto* ex = app.add_subcommand("export", "DOT export");
    ex->add_option("--graph", graph_path);
    ex->add_option("--labeling", labeling_path);
    ex->add_option("--dot", dot_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ccat->parsed()) {
            CaterpillarSpec spec{parse_spec(spec_csv)};
            OrderedBipartiteGraph g = build_caterpillar(spec);
            Labeling l = standard_alpha_s(g, divisible_label_set(g.edge_count(), d));
            if (!verify_d_divisible(l, d, true).holds) return 1;
            Provenance prov;
            prov.construction = "caterpillar/standard";
            write_output(out_path, canonical_dump(with_provenance(labeling_to_json(l, d), prov)));
        } else if (chairy->parsed()) {
            CaterpillarSpec spec{parse_spec(spec_csv)};
            OrderedBipartiteGraph g = build_hairy_cycle(spec);
            const int e = g.edge_count();
            if (!odd && d == 0)
                fail(Errc::invalid_request, "pass --odd (general hairy cycles take d = e only)");
            if (d != 0 && d != e)
                fail(Errc::not_admissible, "general hairy cycles take d = e only");
            LabeledResult r = odd_alpha_hairy(
                g, transform_route ? OddRoute::construct_transform : OddRoute::closed_form);
            write_output(out_path, canonical_dump(with_provenance(labeling_to_json(r.labeling, e),
                                                                  r.provenance)));
        } else if (ccorona->parsed()) {
            LabeledResult r = corona_d_divisible(t, lambda, d);
            write_output(out_path, canonical_dump(with_provenance(labeling_to_json(r.labeling, d),
                                                                  r.provenance)));
        } else if (ccycle->parsed()) {
            if (edges % 4 != 0)
                fail(Errc::not_admissible, "alpha-labelings of cycles need length 4k");
            LabeledResult r = cycle_d_divisible(edges / 4, d, c_choice);
            write_output(out_path, canonical_dump(with_provenance(labeling_to_json(r.labeling, d),
                                                                  r.provenance)));
        } else if (tf->parsed()) {
            json in = read_input(in_path);
            Labeling l = labeling_from_json(in);
            TransformRequest req{op_from_name(op_str), s_idx, j_idx};
            Labeling g2 = apply_transform(l, req);
            json out = labeling_to_json(g2);
            if (in.contains("d")) out["d"] = in.at("d");
            write_output(out_path, canonical_dump(out));
        } else if (vf->parsed()) {
            json j = read_input(in_path);
            Labeling l = labeling_from_json(j);
            VerifyReport rep;
            if (d > 0) {
                rep = verify_d_divisible(l, d, alpha);
            } else {
                rep = verify_alpha_s(l, LabelSet(l.sorted_differences()));
            }
            write_output(out_path, canonical_dump(report_to_json(rep)));
            return rep.holds ? 0 : 1;
        } else if (dc->parsed()) {
            json j = read_input(!labeling_path.empty() ? labeling_path : in_path);
            Labeling l = labeling_from_json(j);
            int dd = d;
            if (dd == 0 && j.contains("d")) dd = j.at("d").get<int>();
            if (dd == 0) fail(Errc::invalid_request, "no d given and none recorded in the labeling");
            Decomposition dec = decompose(l, dd, n_copies, !no_materialize);
            json out = decomposition_to_json(dec, !no_materialize);
            if (do_verify || no_materialize) {
                DecompositionReport rep = verify_decomposition(dec, l.host);
                out["certificate"] = report_to_json(rep);
                write_output(out_path, canonical_dump(out));
                return rep.holds ? 0 : 1;
            }
            write_output(out_path, canonical_dump(out));
        } else if (sc->parsed()) {
            OrderedBipartiteGraph g = graph_from_json(read_input(graph_path));
            auto results = search_labelings(g, divisible_label_set(g.edge_count(), d), alpha, limit);
            json arr = json::array();
            for (const Labeling& l : results) arr.push_back(labeling_to_json(l));
            write_output(out_path, canonical_dump(arr));
        } else if (ex->parsed()) {
            if (!labeling_path.empty())
                write_output(dot_path, to_dot(labeling_from_json(read_input(labeling_path))));
            else if (!graph_path.empty())
                write_output(dot_path, to_dot(graph_from_json(read_input(graph_path))));
            else
                fail(Errc::invalid_request, "export needs --graph or --labeling");
        }
        return 0;
    } catch (const Error& e) {
        return exit_usage(e);
    } catch (const std::exception& e) {
        return exit_usage(Error(Errc::io_error, e.what()));
    }
}
