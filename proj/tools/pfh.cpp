// pfh: command-line front end. Reports go to stdout, diagnostics and timing to stderr.
// Exit codes: 0 ok, 2 parse, 3 invalid, 4 not stabilized, 5 reproduction failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfh/pfh.hpp"

namespace {

using pfh::Json;

constexpr const char* tool_version = "pfh 1.0.0";

enum Exit { ok = 0, parse_failure = 2, invalid = 3, not_stabilized = 4, reproduction_failure = 5 };

// FNV-1a over the file bytes; stable across platforms.
std::string digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pfh::ParseError("cannot open " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char ch;
    while (in.get(ch)) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Report {
    std::vector<std::string> command;
    std::vector<std::pair<std::string, std::string>> inputs;
    Json results = Json::object();
    std::vector<std::string> lines;

    void input(const std::string& path) { inputs.emplace_back(path, digest(path)); }
    void line(std::string s) { lines.push_back(std::move(s)); }

    void print(bool json) const {
        if (json) {
            Json j;
            j["tool"] = tool_version;
            j["command"] = command;
            j["inputs"] = Json::array();
            for (const auto& [p, d] : inputs) j["inputs"].push_back({{"path", p}, {"fnv1a64", d}});
            j["results"] = results;
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::string echo;
        for (const auto& a : command) echo += (echo.empty() ? "" : " ") + a;
        std::cout << tool_version << "\ncommand: " << echo << "\n";
        for (const auto& [p, d] : inputs) std::cout << "input: " << p << " fnv1a64=" << d << "\n";
        for (const auto& l : lines) std::cout << l << "\n";
    }
};

struct CoefficientFlags {
    std::string eta;
    bool trivial = false;
    bool generic = false;

    void attach(CLI::App* app) {
        auto* e = app->add_option("--eta", eta, "perturbation class, comma-separated rationals");
        auto* t = app->add_flag("--trivial", trivial, "trivial class Omega = 0");
        auto* g = app->add_flag("--generic", generic, "generic class over the group ring (default)");
        e->excludes(t, g);
        t->excludes(g);
    }
    pfh::Specialization get() const {
        if (!eta.empty()) return pfh::Specialization::custom(pfh::PerturbationClass::parse(eta));
        if (trivial) return pfh::Specialization::trivial();
        return pfh::Specialization::generic();
    }
};

std::vector<std::int64_t> parse_domain(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw pfh::ParseError("domain coefficient '" + item + "' is not an integer");
        }
        if (used != item.size()) throw pfh::ParseError("domain coefficient '" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

Json decomposition_json(const pfh::UModuleDecomposition& d) {
    Json j;
    j["summary"] = d.str();
    j["torsion"] = Json::array();
    for (const auto& [t, n] : d.counts())
        j["torsion"].push_back({{"k", t.k}, {"parity", pfh::parity_name(t.parity)}, {"multiplicity", n}});
    j["chi"] = pfh::euler_characteristic(d);
    return j;
}

void cmd_hat(Report& r, const std::string& file, const CoefficientFlags& flags, bool all) {
    r.input(file);
    const auto c = pfh::load_complex(file);
    pfh::require_valid(c);
    const auto s = flags.get();
    const auto rank = pfh::hat_rank(c, s);
    r.results["coefficients"] = s.str();
    r.results["rank"] = rank;
    r.line("coefficients: " + s.str());
    r.line("rank: " + std::to_string(rank));
    if (!all) return;
    const auto omega = pfh::hat_rank(c, pfh::Mode::generic), Omega = pfh::hat_rank(c, pfh::Mode::trivial);
    const bool holds = omega <= rank && rank <= Omega;
    r.results["r_omega"] = omega;
    r.results["r_eta"] = rank;
    r.results["r_Omega"] = Omega;
    r.results["inequality"] = holds;
    r.line("r_omega: " + std::to_string(omega));
    r.line("r_eta: " + std::to_string(rank));
    r.line("r_Omega: " + std::to_string(Omega));
    r.line(std::string("inequality r_omega <= r_eta <= r_Omega: ") + (holds ? "holds" : "FAILS"));
}

void cmd_plus(Report& r, const std::string& file, const CoefficientFlags& flags, const std::string& spinc,
              std::size_t max_truncation) {
    r.input(file);
    const auto c = pfh::load_complex(file);
    pfh::require_valid(c);
    const auto s = flags.get();
    auto labels = c.spinc_labels();
    std::sort(labels.begin(), labels.end());
    if (!spinc.empty()) labels = {spinc};
    r.results["coefficients"] = s.str();
    r.results["spinc"] = Json::object();
    r.line("coefficients: " + s.str());
    for (const auto& label : labels) {
        const auto d = pfh::plus_decomposition(c, s, label, max_truncation);
        r.results["spinc"][label] = decomposition_json(d);
        std::string parts;
        for (const auto& [t, n] : d.counts())
            parts += (parts.empty() ? "" : ", ") + std::to_string(n) + " x U^" + std::to_string(t.k) + " " +
                     pfh::parity_name(t.parity);
        r.line("spinc " + label + ": " + d.str() + (parts.empty() ? "" : " [" + parts + "]") +
               ", chi = " + std::to_string(pfh::euler_characteristic(d)));
    }
}

void cmd_diagram(Report& r, const std::string& file, const std::string& what, const std::string& domain,
                 const std::string& generator) {
    r.input(file);
    const auto d = pfh::load_diagram(file);
    pfh::require_valid(d);
    std::string names;
    for (std::size_t i = 0; i < d.regions.size(); ++i) names += (i ? " " : "") + d.region_name(i);
    r.results["regions"] = names;
    r.line("regions: " + names);
    if (what == "generators") {
        const auto gens = pfh::enumerate_generators(d);
        const auto part = pfh::spin_c_partition(d, gens);
        r.results["count"] = gens.size();
        r.results["spinc_classes"] = part.count;
        r.results["generators"] = Json::array();
        r.line("generators: " + std::to_string(gens.size()));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto name = pfh::generator_name(d, gens[i]);
            const auto parity = pfh::generator_parity(d, gens[i]);
            r.results["generators"].push_back({{"name", name}, {"parity", parity}, {"spinc", part.label(i)}});
            r.line("  " + name + " parity " + std::to_string(parity) + " spinc " + part.label(i));
        }
        r.line("spinc classes: " + std::to_string(part.count));
    } else if (what == "periodic") {
        const auto lattice = pfh::periodic_domain_lattice(d);
        r.results["rank"] = lattice.size();
        r.results["basis"] = Json::array();
        r.line("periodic domains: rank " + std::to_string(lattice.size()));
        for (const auto& p : lattice) {
            r.results["basis"].push_back(p.coefficients);
            r.line("  " + p.str());
        }
    } else if (what == "admissible") {
        const auto a = pfh::is_weakly_admissible(d);
        r.results["weakly_admissible"] = a.admissible;
        if (a.admissible) {
            r.line("weakly admissible");
        } else {
            r.results["witness"] = a.witness->coefficients;
            r.line("NOT weakly admissible, witness " + a.witness->str());
        }
    } else {
        const pfh::RegionDomain p{parse_domain(domain)};
        std::optional<pfh::GeneratorTuple> y;
        for (const auto& x : pfh::enumerate_generators(d))
            if (pfh::generator_name(d, x) == generator) y = x;
        if (!y) throw pfh::ValidationError("no generator named " + generator);
        const auto c1 = pfh::chern_number(d, p, *y);
        r.results["chern"] = c1;
        r.line("chern " + p.str() + " at " + generator + ": " + std::to_string(c1));
    }
}

void cmd_reproduce(Report& r, const pfh::SuiteResult& s) {
    r.results = s.to_json();
    for (const auto& l : s.checks)
        r.line(std::string(l.pass ? "PASS " : "FAIL ") + l.claim + (l.detail.empty() ? "" : ": " + l.detail));
}

void cmd_export(Report& r, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(dir) / "complexes");
    fs::create_directories(fs::path(dir) / "diagrams");
    r.results["written"] = Json::array();
    auto write = [&](const std::string& rel, const std::string& text) {
        pfh::save_text((fs::path(dir) / rel).string(), text);
        r.results["written"].push_back(rel);
        r.line("wrote " + rel);
    };
    for (const auto& f : pfh::complex_fixtures()) {
        const auto c = f.build();
        pfh::require_valid(c);
        write("complexes/" + f.name + ".json", pfh::complex_to_string(c));
    }
    for (const auto& f : pfh::diagram_fixtures()) {
        const auto d = f.build();
        pfh::require_valid(d);
        write("diagrams/" + f.name + ".json", pfh::diagram_to_string(d));
    }
    write("manifest.json", pfh::fixtures_manifest().dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perturbed Floer homology computations over the Novikov field"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "structured report");

    std::string file;
    CoefficientFlags hat_flags, plus_flags;
    bool all = false;
    auto* hat = app.add_subcommand("hat", "rank of HF-hat");
    hat->add_option("complex", file, "twisted complex file")->required();
    hat_flags.attach(hat);
    hat->add_flag("--all", all, "also report generic and trivial ranks and the rank inequality");

    std::string spinc;
    std::size_t max_truncation = pfh::default_max_truncation;
    auto* plus = app.add_subcommand("plus", "U-module decomposition of HF+");
    plus->add_option("complex", file, "twisted complex file")->required();
    plus_flags.attach(plus);
    plus->add_option("--spinc", spinc, "one spin^c label (default: all)");
    plus->add_option("--max-truncation", max_truncation, "largest truncation level")->check(CLI::Range(1, 4096));

    std::uint64_t seed = 1, first_seed = 0;
    std::size_t samples = 0, seeds = 200;
    int g = 0, k = 0, gmax = 20;
    auto* rep = app.add_subcommand("reproduce", "run a reproduction suite, PASS/FAIL per claim");
    rep->require_subcommand(1);
    auto* t3 = rep->add_subcommand("t3", "T^3 ranks across perturbation classes");
    t3->add_option("--seed", seed, "seed for random classes");
    t3->add_option("--samples", samples, "random classes (default 100)");
    auto* sigma = rep->add_subcommand("sigma", "Sigma_g x S^1 in spin^c k");
    sigma->add_option("--g", g, "genus")->required();
    sigma->add_option("--k", k, "spin^c index")->required();
    sigma->add_option("--seed", seed, "seed for conjugation and random classes");
    sigma->add_option("--samples", samples, "random classes (default 10)");
    auto* identity = rep->add_subcommand("identity", "binomial identities");
    identity->add_option("--gmax", gmax, "largest genus")->check(CLI::Range(1, 30));
    auto* inequality = rep->add_subcommand("inequality", "rank inequality on random complexes");
    inequality->add_option("--seeds", seeds, "number of complexes")->required();
    inequality->add_option("--first-seed", first_seed, "first seed");
    inequality->add_option("--samples", samples, "classes per complex (default 5)");

    std::string what = "generators", domain, generator;
    auto* diagram = app.add_subcommand("diagram", "combinatorics of a pointed Heegaard diagram");
    diagram->add_option("diagram", file, "diagram file")->required();
    diagram->add_option("query", what, "generators | periodic | admissible | chern")
        ->check(CLI::IsMember({"generators", "periodic", "admissible", "chern"}));
    auto* dom = diagram->add_option("--domain", domain, "periodic domain, comma-separated integers");
    auto* gen = diagram->add_option("--generator", generator, "generator name");

    std::string out_dir;
    auto* exp = app.add_subcommand("export", "write shipped fixtures and the manifest");
    exp->add_option("dir", out_dir, "data directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : parse_failure;
    }
    if (what == "chern" && (dom->count() == 0 || gen->count() == 0)) {
        std::cerr << "error: chern needs --domain and --generator\n";
        return parse_failure;
    }

    Report report;
    for (int i = 1; i < argc; ++i) report.command.emplace_back(argv[i]);
    const auto start = std::chrono::steady_clock::now();
    int code = ok;
    try {
        if (hat->parsed()) {
            cmd_hat(report, file, hat_flags, all);
        } else if (plus->parsed()) {
            cmd_plus(report, file, plus_flags, spinc, max_truncation);
        } else if (diagram->parsed()) {
            cmd_diagram(report, file, what, domain, generator);
        } else if (exp->parsed()) {
            cmd_export(report, out_dir);
        } else {
            pfh::SuiteResult s;
            if (t3->parsed()) s = pfh::reproduce_t3(seed, samples ? samples : 100);
            if (sigma->parsed()) s = pfh::reproduce_sigma(pfh::SigmaParams(g, k), seed, samples ? samples : 10);
            if (identity->parsed()) s = pfh::reproduce_identity(gmax);
            if (inequality->parsed()) s = pfh::reproduce_inequality(seeds, samples ? samples : 5, first_seed);
            cmd_reproduce(report, s);
            if (!s.passed()) code = reproduction_failure;
        }
    } catch (const pfh::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_failure;
    } catch (const pfh::ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return invalid;
    } catch (const pfh::DomainError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return invalid;
    } catch (const pfh::NotStabilized& e) {
        std::cerr << "not stabilized: " << e.what() << "\n";
        return not_stabilized;
    }
    report.print(json);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "time: " << elapsed.count() << " s\n";
    return code;
}
