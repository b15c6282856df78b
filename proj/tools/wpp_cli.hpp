#ifndef WPP_TOOLS_CLI_HPP
#define WPP_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 ok, 1 semantic failure (invalid
// sequence, failed check, refused bound), 2 I/O or parse failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wpp/wpp.hpp"

namespace wpp::cli {

inline constexpr int kOk = 0;
inline constexpr int kSemantic = 1;
inline constexpr int kInput = 2;

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::string ring = "Z";
    std::string degrees;
    std::string format = "json";
    std::string out_path;
    int max_exp = 1;
    std::uint64_t seed = 1;
    // ring
    bool table = false;
    std::optional<int> poincare;
    bool check = false;
    std::uint64_t samples = 2000;
    // phi
    bool raw = false;
    // lemmas
    int m = 3;
    std::string prime = "2";
    int n_max = 100;
};

namespace detail {

inline std::vector<int> parse_degrees(const std::string& text, int m) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int d = std::stoi(item, &used);
            if (used != item.size() || d < 1) {
                throw std::invalid_argument(item);
            }
            out.push_back(d);
        } catch (const std::exception&) {
            throw ParseError("--degrees: '" + item + "' is not a positive integer");
        }
    }
    if (out.size() != static_cast<std::size_t>(m)) {
        throw ParseError("--degrees: expected " + std::to_string(m) + " degrees, got " + std::to_string(out.size()));
    }
    return out;
}

struct Output {
    std::ostream& stdout_;
    std::string path;
    std::string buffer;

    void write(const std::string& text) { buffer += text; }

    void flush() {
        if (path.empty()) {
            stdout_ << buffer;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << buffer)) {
            throw ParseError("cannot write '" + path + "'");
        }
    }
};

inline std::string json_text(const io::Json& j) { return j.dump(2) + "\n"; }

inline int cmd_validate_ps(const RunConfig& cfg, Output& out) {
    PowerTable t = io::power_table_from_json(io::read_json_file(cfg.inputs.at(0)));
    auto result = validate_power_sequence(t);
    if (cfg.format == "json") {
        io::Json j;
        j["valid"] = result.ok();
        j["in_phi_domain"] = result.ok() && result.value->normalized_on_vertices();
        io::Json v = io::Json::array();
        for (const auto& x : result.violations) {
            v.push_back(io::to_json(x));
        }
        j["violations"] = std::move(v);
        out.write(json_text(j));
    } else {
        if (result.ok()) {
            out.write(std::string("valid power sequence") +
                      (result.value->normalized_on_vertices() ? "" : " (outside the domain of phi)") + "\n");
        } else {
            for (const auto& x : result.violations) {
                out.write(x.describe() + "\n");
            }
        }
    }
    return result.ok() ? kOk : kSemantic;
}

inline int cmd_validate_cs(const RunConfig& cfg, Output& out) {
    CoefficientTable t = io::coefficient_table_from_json(io::read_json_file(cfg.inputs.at(0)));
    CoefficientRing ring = CoefficientRing::parse(cfg.ring);
    auto result = validate_coefficient_sequence(t, ring);
    if (cfg.format == "json") {
        io::Json j;
        j["valid"] = result.ok();
        j["ring"] = io::to_json(ring);
        io::Json v = io::Json::array();
        for (const auto& x : result.violations) {
            v.push_back(io::to_json(x));
        }
        j["violations"] = std::move(v);
        out.write(json_text(j));
    } else {
        if (result.ok()) {
            out.write("valid coefficient sequence over " + ring.to_string() + "\n");
        } else {
            for (const auto& x : result.violations) {
                out.write(x.describe() + "\n");
            }
        }
    }
    return result.ok() ? kOk : kSemantic;
}

inline int cmd_phi(const RunConfig& cfg, Output& out, std::ostream& err) {
    PowerTable t = io::power_table_from_json(io::read_json_file(cfg.inputs.at(0)));
    auto result = validate_power_sequence(t);
    if (!result.ok()) {
        for (const auto& x : result.violations) {
            err << x.describe() << "\n";
        }
        return kSemantic;
    }
    CoefficientTable cs;
    if (cfg.raw) {
        cs = phi_table(*result.value);
        if (!result.value->normalized_on_vertices()) {
            err << "wpp: note: c_i^{i} != 1 at vertex " << result.value->first_unnormalized_vertex()
                << "; the product table is not a coefficient sequence\n";
        }
    } else {
        cs = phi(*result.value).table();
    }
    if (cfg.format == "json") {
        out.write(json_text(io::to_json(cs)));
    } else {
        for (FaceMask f : ordered_subsets(cs.m)) {
            out.write(Simplex::from_mask(f).to_string() + " " + cs.at(f).str() + "\n");
        }
    }
    return kOk;
}

inline int cmd_preimage(const RunConfig& cfg, Output& out, std::ostream& err) {
    CoefficientTable t = io::coefficient_table_from_json(io::read_json_file(cfg.inputs.at(0)));
    auto result = validate_coefficient_sequence(t, CoefficientRing::parse(cfg.ring));
    if (!result.ok()) {
        for (const auto& x : result.violations) {
            err << x.describe() << "\n";
        }
        return kSemantic;
    }
    PreimageResult r = phi_preimage_search(*result.value);
    if (!r.found()) {
        out.write("NONE (search complete)\n");
        return kOk;
    }
    if (cfg.format == "json") {
        out.write(json_text(io::to_json(*r.witness)));
    } else {
        for (FaceMask f : ordered_subsets(r.witness->m())) {
            std::string row;
            for (int i = 1; i <= r.witness->m(); ++i) {
                row += (i > 1 ? "," : "") + r.witness->entry(f, i).str();
            }
            out.write(Simplex::from_mask(f).to_string() + " (" + row + ")\n");
        }
    }
    return kOk;
}

inline int cmd_ring(const RunConfig& cfg, Output& out) {
    SimplicialComplex k = io::complex_from_json(io::read_json_file(cfg.inputs.at(0)));
    PowerTable t = io::power_table_from_json(io::read_json_file(cfg.inputs.at(1)));
    if (t.m != k.m()) {
        throw ParseError("complex has m=" + std::to_string(k.m()) + " but power sequence has m=" +
                         std::to_string(t.m));
    }
    std::vector<int> degrees = parse_degrees(cfg.degrees, k.m());
    PowerSequence c = PowerSequence::from_table(t);
    WeightedAlgebra a(GeneratorSpec::spheres(degrees), c, k, CoefficientRing::parse(cfg.ring));

    if (cfg.table) {
        out.write(io::structure_table_csv(structure_table(a)));
        return kOk;
    }
    if (cfg.poincare) {
        std::vector<Integer> series = poincare_series(a, *cfg.poincare);
        if (cfg.format == "json") {
            io::Json j;
            io::Json v = io::Json::array();
            for (const auto& x : series) {
                v.push_back(io::integer_to_json(x));
            }
            j["poincare"] = std::move(v);
            out.write(json_text(j));
        } else {
            std::size_t last = series.size();
            while (last > 1 && series[last - 1] == 0) {
                --last;
            }
            std::string line;
            for (std::size_t n = 0; n < last; ++n) {
                line += (n ? "," : "") + series[n].str();
            }
            out.write(line + "\n");
        }
        return kOk;
    }
    if (cfg.check) {
        std::vector<oracle::OracleReport> reports;
        for (auto p : {oracle::Property::associativity, oracle::Property::graded_commutativity,
                       oracle::Property::eta_ring_hom, oracle::Property::restriction_ring_hom,
                       oracle::Property::restriction_inclusion_identity, oracle::Property::integrality}) {
            reports.push_back(oracle::exhaustive_check(a, p));
        }
        reports.push_back(oracle::check_associativity_sampled(structure_table(a), cfg.samples, cfg.seed,
                                                              "sampled seed=" + std::to_string(cfg.seed)));
        bool all = true;
        io::Json j = io::Json::array();
        for (const auto& r : reports) {
            all = all && r.pass;
            if (cfg.format == "json") {
                j.push_back(io::to_json(r));
            } else {
                out.write(io::to_text(r) + "\n");
            }
        }
        if (cfg.format == "json") {
            out.write(json_text(j));
        }
        return all ? kOk : kSemantic;
    }
    // Default: the additive basis with degrees.
    if (cfg.format == "json") {
        io::Json j = io::Json::array();
        for (const auto& b : a.basis()) {
            io::Json e;
            e["element"] = io::to_json(AlgebraElement::basis(b.key));
            e["degree"] = b.degree;
            j.push_back(std::move(e));
        }
        out.write(json_text(j));
    } else {
        for (const auto& b : a.basis()) {
            out.write(b.key.label() + " " + std::to_string(b.degree) + "\n");
        }
    }
    return kOk;
}

inline int cmd_lemmas(const RunConfig& cfg, Output& out) {
    Integer p = parse_integer(cfg.prime);
    auto checks = run_all(cfg.m, p, cfg.n_max, cfg.max_exp);
    bool all = true;
    io::Json j = io::Json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        if (cfg.format == "json") {
            j.push_back(io::to_json(c));
        } else {
            out.write(std::string(c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n");
        }
    }
    if (cfg.format == "json") {
        out.write(json_text(j));
    }
    return all ? kOk : kSemantic;
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted polyhedral product algebra toolkit", "wpp"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", cfg.out_path, "Write output to this path instead of stdout");
    };

    auto* vps = app.add_subcommand("validate-ps", "Validate a power sequence");
    vps->add_option("file", cfg.inputs, "Power sequence JSON")->required()->expected(1);
    add_common(vps);

    auto* vcs = app.add_subcommand("validate-cs", "Validate a coefficient sequence over a ring");
    vcs->add_option("file", cfg.inputs, "Coefficient sequence JSON")->required()->expected(1);
    vcs->add_option("--ring", cfg.ring, "Z, Q or Z[1/p,...]");
    add_common(vcs);

    auto* phi_cmd = app.add_subcommand("phi", "Coefficient sequence of a power sequence");
    phi_cmd->add_option("file", cfg.inputs, "Power sequence JSON")->required()->expected(1);
    phi_cmd->add_flag("--raw", cfg.raw, "Accept c_i^{i} != 1 and print the plain product table");
    add_common(phi_cmd);

    auto* pre = app.add_subcommand("preimage", "Search for a power sequence with the given image");
    pre->add_option("file", cfg.inputs, "Coefficient sequence JSON")->required()->expected(1);
    pre->add_option("--ring", cfg.ring, "Z, Q or Z[1/p,...]");
    add_common(pre);

    auto* ring = app.add_subcommand("ring", "Cohomology algebra of a weighted polyhedral product of spheres");
    ring->add_option("files", cfg.inputs, "Complex JSON and power sequence JSON")->required()->expected(2);
    ring->add_option("--degrees", cfg.degrees, "Sphere dimension per vertex, e.g. 2,4,6")->required();
    ring->add_option("--ring", cfg.ring, "Z, Q or Z[1/p,...]");
    auto* table_flag = ring->add_flag("--table", cfg.table, "Structure-constant table as CSV");
    auto* poincare_opt = ring->add_option("--poincare", cfg.poincare, "Poincare series up to degree N");
    auto* check_flag = ring->add_flag("--check", cfg.check, "Run the algebra property suite");
    table_flag->excludes(poincare_opt)->excludes(check_flag);
    poincare_opt->excludes(check_flag);
    ring->add_option("--seed", cfg.seed, "Seed for the sampled associativity sweep");
    ring->add_option("--samples", cfg.samples, "Triples in the sampled associativity sweep");
    add_common(ring);

    auto* lem = app.add_subcommand("lemmas", "Check the realizability statements about phi");
    lem->add_option("--m", cfg.m, "Number of vertices")->check(CLI::Range(1, kMaxVertices));
    lem->add_option("--p", cfg.prime, "Prime");
    lem->add_option("--n-max", cfg.n_max, "Largest edge value in the two-vertex realizability sweep")
        ->check(CLI::Range(1, 100000));
    lem->add_option("--max-exp", cfg.max_exp, "Exponent bound of the phi-image enumeration")
        ->check(CLI::NonNegativeNumber);
    add_common(lem);

    std::vector<std::string> argv_store{"wpp"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "wpp: " << e.what() << "\n";
        return kInput;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    detail::Output output{out, cfg.out_path, {}};
    try {
        int code = kOk;
        if (cfg.subcommand == "validate-ps") {
            code = detail::cmd_validate_ps(cfg, output);
        } else if (cfg.subcommand == "validate-cs") {
            code = detail::cmd_validate_cs(cfg, output);
        } else if (cfg.subcommand == "phi") {
            code = detail::cmd_phi(cfg, output, err);
        } else if (cfg.subcommand == "preimage") {
            code = detail::cmd_preimage(cfg, output, err);
        } else if (cfg.subcommand == "ring") {
            code = detail::cmd_ring(cfg, output);
        } else {
            code = detail::cmd_lemmas(cfg, output);
        }
        output.flush();
        return code;
    } catch (const ParseError& e) {
        err << "wpp: " << e.what() << "\n";
        return kInput;
    } catch (const Error& e) {
        err << "wpp: " << e.what() << "\n";
        return kSemantic;
    }
}

}  // namespace wpp::cli

#endif  // WPP_TOOLS_CLI_HPP
