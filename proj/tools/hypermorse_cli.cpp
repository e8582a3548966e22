// Command-line front end: face census, matching construction, verification,
// parameter sweeps, Hasse diagram export and integer homology.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypermorse/face_lattice.hpp"
#include "hypermorse/hasse.hpp"
#include "hypermorse/homology.hpp"
#include "hypermorse/json_io.hpp"
#include "hypermorse/matching.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct Options {
    int n = 0;
    int k = 0;
    std::optional<int> m0;
    std::optional<int> m1;
    std::string format;
    std::string out_path;
    long long seed = 0;  // reserved for seeded randomized checks
    bool boundary = false;
    std::string subcomplex_path;
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(opt.out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + opt.out_path);
    os << payload;
}

std::string render_json(const hypermorse::Json& j) { return j.dump(2) + "\n"; }

int run_faces(const Options& opt) {
    using namespace hypermorse;
    const HypersimplexParams p(opt.n, opt.k);
    const FaceSet faces = enumerate_faces(p);

    bool consistent = faces.of_dim(0).size() == binomial(p.n, p.k);
    for (int d = 1; d <= faces.top_dimension(); ++d)
        if (faces.of_dim(d).size() != face_count_formula(p, d)) consistent = false;

    if (opt.format == "json") {
        Json j;
        j["n"] = p.n;
        j["k"] = p.k;
        Json dims = Json::array();
        for (int d = -1; d <= faces.top_dimension(); ++d) {
            Json e;
            e["dim"] = d;
            e["count"] = faces.of_dim(d).size();
            if (d == 0)
                e["formula"] = binomial(p.n, p.k);
            else if (d >= 1)
                e["formula"] = face_count_formula(p, d);
            else
                e["formula"] = 1;
            dims.push_back(std::move(e));
        }
        j["dims"] = std::move(dims);
        j["total_cells"] = faces.total_cells();
        j["consistent"] = consistent;
        Json records = Json::array();
        for (int d = -1; d <= faces.top_dimension(); ++d)
            for (const FaceLabel& f : faces.of_dim(d)) records.push_back(face_record(p, f));
        j["faces"] = std::move(records);
        emit(opt, render_json(j));
    } else {
        std::ostringstream os;
        os << "J(" << p.n << "," << p.k << ") face census\n";
        os << "dim  count  closed-form\n";
        for (int d = -1; d <= faces.top_dimension(); ++d) {
            unsigned long long formula = 1;
            if (d == 0) formula = binomial(p.n, p.k);
            if (d >= 1) formula = face_count_formula(p, d);
            char line[64];
            std::snprintf(line, sizeof(line), "%3d  %5zu  %11llu\n", d, faces.of_dim(d).size(),
                          formula);
            os << line;
        }
        os << "total cells: " << faces.total_cells() << "\n";
        os << "enumeration vs closed form: " << (consistent ? "ok" : "MISMATCH") << "\n";
        emit(opt, os.str());
    }
    return consistent ? exit_ok : exit_check_failed;
}

int run_match(const Options& opt) {
    using namespace hypermorse;
    const HypersimplexParams p(opt.n, opt.k);
    const MatchParams mp{*opt.m0, *opt.m1};
    const MorseMatching matching = build_matching(p, mp);

    if (opt.format == "json") {
        emit(opt, render_json(matching_json(p, mp, matching)));
    } else {
        std::ostringstream os;
        os << "J(" << p.n << "," << p.k << ") matching, m0=" << mp.m0 << " m1=" << mp.m1
           << ", " << matching.size() << " pairs\n";
        for (const auto& pr : matching.pairs()) {
            os << to_text(pr.lower) << "  <->  " << to_text(pr.upper);
            if (pr.rule) os << "   " << rule_name(*pr.rule);
            os << "\n";
        }
        emit(opt, os.str());
    }
    return exit_ok;
}

int run_verify(const Options& opt) {
    using namespace hypermorse;
    const HypersimplexParams p(opt.n, opt.k);
    const MatchParams mp{*opt.m0, *opt.m1};
    const MorseMatching matching = build_matching(p, mp);
    const VerificationReport report = verify_matching(p, mp, matching);
    const HasseDiagram diagram = build_hasse(p, matching);
    const auto witness = detect_cycle(diagram);
    const MorseCensus census = unmatched_census(p, matching, {});
    const bool pass = report.all_ok() && !witness.has_value();

    if (opt.format == "json") {
        Json j;
        j["n"] = p.n;
        j["k"] = p.k;
        j["m0"] = mp.m0;
        j["m1"] = mp.m1;
        j["report"] = report_json(report);
        j["verdict"] = verdict_json(witness, census);
        j["pass"] = pass;
        emit(opt, render_json(j));
    } else {
        std::ostringstream os;
        os << "J(" << p.n << "," << p.k << ") matching, m0=" << mp.m0 << " m1=" << mp.m1
           << "\n";
        auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
        os << "complete:         " << flag(report.complete) << "\n";
        os << "involution:       " << flag(report.involution) << "\n";
        os << "codimension:      " << flag(report.codimension) << "\n";
        os << "anchor:           " << flag(report.anchor) << "\n";
        os << "type constraints: " << flag(report.type_constraints) << "\n";
        os << "acyclic:          " << flag(!witness.has_value()) << "\n";
        if (witness) {
            os << "cycle witness:";
            for (const FaceLabel& f : *witness) os << " " << to_text(f);
            os << "\n";
        }
        for (const std::string& problem : report.problems) os << "  ! " << problem << "\n";
        os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
        emit(opt, os.str());
    }
    return pass ? exit_ok : exit_check_failed;
}

int run_sweep(const Options& opt) {
    using namespace hypermorse;
    const HypersimplexParams p(opt.n, opt.k);
    if (p.k < 2) {
        MatchParams probe{0, 0};
        validate_match_params(p, probe);  // throws the descriptive k=1 error
    }

    struct Cell {
        int m0;
        int m1;
        bool complete;
        bool acyclic;
    };
    std::vector<std::future<Cell>> futures;
    for (int m0 = 0; m0 <= p.n - p.k - 1; ++m0) {
        for (int m1 = 1; m1 <= p.k - 1; ++m1) {
            futures.push_back(std::async(std::launch::async, [p, m0, m1]() {
                const MatchParams mp{m0, m1};
                const MorseMatching matching = build_matching(p, mp);
                const VerificationReport report = verify_matching(p, mp, matching);
                const auto witness = detect_cycle(build_hasse(p, matching));
                return Cell{m0, m1, report.all_ok(), !witness.has_value()};
            }));
        }
    }
    std::vector<Cell> cells;
    cells.reserve(futures.size());
    for (auto& f : futures) cells.push_back(f.get());

    bool pass = true;
    for (const Cell& c : cells) pass = pass && c.complete && c.acyclic;

    if (opt.format == "json") {
        Json j;
        j["n"] = p.n;
        j["k"] = p.k;
        Json list = Json::array();
        for (const Cell& c : cells) {
            Json e;
            e["m0"] = c.m0;
            e["m1"] = c.m1;
            e["complete"] = c.complete;
            e["acyclic"] = c.acyclic;
            list.push_back(std::move(e));
        }
        j["cells"] = std::move(list);
        j["pass"] = pass;
        emit(opt, render_json(j));
    } else {
        std::ostringstream os;
        os << "J(" << p.n << "," << p.k << ") sweep over m0=0.." << p.n - p.k - 1
           << ", m1=1.." << p.k - 1 << " (" << cells.size() << " cells)\n";
        for (const Cell& c : cells) {
            os << "m0=" << c.m0 << " m1=" << c.m1 << ": "
               << (c.complete ? "complete" : "INCOMPLETE") << "+"
               << (c.acyclic ? "acyclic" : "CYCLIC") << "\n";
        }
        os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
        emit(opt, os.str());
    }
    return pass ? exit_ok : exit_check_failed;
}

int run_hasse(const Options& opt) {
    using namespace hypermorse;
    const HypersimplexParams p(opt.n, opt.k);
    if (opt.m0.has_value() != opt.m1.has_value())
        throw CLI::ValidationError("hasse needs either both of --m0/--m1 or neither");
    std::string dot;
    if (opt.m0) {
        const MatchParams mp{*opt.m0, *opt.m1};
        dot = to_dot(build_hasse(p, build_matching(p, mp)));
    } else {
        dot = to_dot(build_hasse(p));
    }
    emit(opt, dot);
    return exit_ok;
}

int run_homology(const Options& opt) {
    using namespace hypermorse;
    const HypersimplexParams p(opt.n, opt.k);

    Subcomplex sub;
    std::string source = "full";
    std::size_t closure_added = 0;
    if (!opt.subcomplex_path.empty()) {
        std::ifstream is(opt.subcomplex_path);
        if (!is) throw std::runtime_error("cannot open subcomplex file " + opt.subcomplex_path);
        std::vector<FaceLabel> seeds;
        std::string line;
        while (std::getline(is, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            seeds.push_back(parse_label(line, p.n));
        }
        sub = downward_closure(p, seeds, &closure_added);
        source = "file:" + opt.subcomplex_path;
        if (opt.boundary) throw CLI::ValidationError("--boundary and --subcomplex are exclusive");
    } else if (opt.boundary) {
        sub = proper_faces(p);
        source = "boundary";
    } else {
        sub = full_complex(p);
    }

    const OrderComplex oc = order_complex(p, sub);
    const ChainComplex cc = boundary_matrices(oc);
    bool dd_zero = true;
    for (std::size_t d = 1; d < cc.boundary.size(); ++d)
        dd_zero = dd_zero && composes_to_zero(cc.boundary[d - 1], cc.boundary[d]);

    const auto groups = reduced_homology(p, sub);
    const long long chi = euler_characteristic(p, sub);

    if (opt.format == "json") {
        Json j;
        j["n"] = p.n;
        j["k"] = p.k;
        j["subcomplex"] = source;
        j["closure_added"] = closure_added;
        j["groups"] = homology_json(groups);
        j["euler"] = chi;
        j["boundary_squares_to_zero"] = dd_zero;
        emit(opt, render_json(j));
    } else {
        std::ostringstream os;
        os << "J(" << p.n << "," << p.k << ") reduced homology (" << source << ")\n";
        if (closure_added > 0)
            os << "note: downward closure added " << closure_added << " faces\n";
        os << "degree  betti  torsion\n";
        for (const auto& [degree, group] : groups) {
            char head[32];
            std::snprintf(head, sizeof(head), "%6d  %5lld  ", degree, group.betti);
            os << head;
            if (group.torsion.empty()) {
                os << "-";
            } else {
                for (std::size_t i = 0; i < group.torsion.size(); ++i)
                    os << (i ? " " : "") << "Z/" << group.torsion[i];
            }
            os << "\n";
        }
        os << "euler characteristic: " << chi << "\n";
        emit(opt, os.str());
    }
    return dd_zero ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morse matchings, face lattices and homology of hypersimplices"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_match, bool match_required) {
        cmd->add_option("--n", opt.n, "ambient dimension n")->required();
        cmd->add_option("--k", opt.k, "coordinate sum k")->required();
        if (with_match) {
            auto* m0 = cmd->add_option("--m0", opt.m0, "matching parameter m0");
            auto* m1 = cmd->add_option("--m1", opt.m1, "matching parameter m1");
            if (match_required) {
                m0->required();
                m1->required();
            }
        }
        cmd->add_option("--out", opt.out_path, "write output to this path");
        cmd->add_option("--seed", opt.seed, "seed for randomized checks");
        return cmd;
    };
    auto add_format = [&](CLI::App* cmd, std::string def) {
        opt.format = def;
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
    };

    auto* faces_cmd = add_common(app.add_subcommand("faces", "face census per dimension"),
                                 false, false);
    add_format(faces_cmd, "text");

    auto* match_cmd = add_common(
        app.add_subcommand("match", "construct the matching and list its pairs"), true, true);
    add_format(match_cmd, "text");

    auto* verify_cmd = add_common(
        app.add_subcommand("verify", "verify matching invariants and acyclicity"), true, true);
    add_format(verify_cmd, "text");

    auto* sweep_cmd = add_common(
        app.add_subcommand("sweep", "verdicts for every valid (m0, m1)"), false, false);
    add_format(sweep_cmd, "text");

    auto* hasse_cmd = add_common(
        app.add_subcommand("hasse", "export the directed Hasse diagram as DOT"), true, false);
    add_format(hasse_cmd, "dot");

    auto* homology_cmd = add_common(
        app.add_subcommand("homology", "reduced integer homology of a subcomplex"), false,
        false);
    add_format(homology_cmd, "text");
    homology_cmd->add_flag("--boundary", opt.boundary, "drop the top cell");
    homology_cmd->add_option("--subcomplex", opt.subcomplex_path,
                             "newline-delimited label file; the downward closure is taken");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        auto reject_dot = [&](const char* name) {
            if (opt.format == "dot")
                throw CLI::ValidationError(std::string(name) + " does not support --format dot");
        };
        if (faces_cmd->parsed()) {
            reject_dot("faces");
            return run_faces(opt);
        }
        if (match_cmd->parsed()) {
            reject_dot("match");
            return run_match(opt);
        }
        if (verify_cmd->parsed()) {
            reject_dot("verify");
            return run_verify(opt);
        }
        if (sweep_cmd->parsed()) {
            reject_dot("sweep");
            return run_sweep(opt);
        }
        if (hasse_cmd->parsed()) {
            if (opt.format != "dot")
                throw CLI::ValidationError("hasse only supports --format dot");
            return run_hasse(opt);
        }
        if (homology_cmd->parsed()) {
            reject_dot("homology");
            return run_homology(opt);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
