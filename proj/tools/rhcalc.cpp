// rhcalc: rational homotopy of mapping spaces and gauge groups over finite
// simplicial complexes and inverse limits of them.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <rhcalc/io.hpp>
#include <rhcalc/rhcalc.hpp>

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace rhcalc;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string complex_path;
    std::string system_path;
    std::size_t window = 2;
    std::string group;
    unsigned n = 0;
    int p = 0;
    int max_degree = 0;  // 0: no cap (verify defaults to 40)
    std::string output = "table";
    bool quiet = false;
    std::string corpus;
};

// Cohomology of X from either a complex or a direct system.
struct SpaceInput {
    GradedDims cohomology;
    std::optional<ColimitReport> colimit;
};

SpaceInput resolve_space(const Options& o) {
    if (!o.complex_path.empty() && !o.system_path.empty())
        throw InputError("give either --complex or --system, not both");
    if (!o.complex_path.empty()) return {betti(*io::load_complex(o.complex_path).complex), std::nullopt};
    if (!o.system_path.empty()) {
        auto report = colimit_dims(io::load_system(o.system_path), o.window);
        return {report.dims(), report};
    }
    throw InputError("missing --complex or --system");
}

GradedDims cap(const GradedDims& g, int max_degree) {
    if (max_degree <= 0) return g;
    GradedDims out;
    for (const auto& [d, v] : g.entries())
        if (d <= max_degree) out.set(d, v);
    return out;
}

const char* status_name(ColimitStatus s) { return s == ColimitStatus::Stable ? "STABLE" : "NOT_STABILIZED"; }

io::Json colimit_json(const ColimitReport& r) {
    io::Json j = io::Json::object();
    j["window"] = r.window;
    io::Json degrees = io::Json::object();
    for (const auto& [d, c] : r.degrees) {
        io::Json e = io::Json::object();
        e["status"] = status_name(c.status);
        e["dimension"] = c.dimension;
        e["rank_sequence"] = c.rank_sequence;
        degrees[std::to_string(d)] = std::move(e);
    }
    j["degrees"] = std::move(degrees);
    j["note"] = "stabilization is a finite-window heuristic; NOT_STABILIZED dimensions are lower bounds";
    return j;
}

void print_colimit_table(const ColimitReport& r) {
    std::cout << "colimit (window " << r.window << ")\n";
    for (const auto& [d, c] : r.degrees) {
        std::cout << "  H^" << d << "  " << (c.status == ColimitStatus::Stable ? "" : "≥") << c.dimension << "  "
                  << status_name(c.status) << "  ranks (";
        for (std::size_t i = 0; i < c.rank_sequence.size(); ++i)
            std::cout << (i ? ", " : "") << c.rank_sequence[i];
        std::cout << ")\n";
    }
}

int run_cohomology(const Options& o) {
    const auto in = resolve_space(o);
    if (o.output == "json") {
        io::Json j = io::Json::object();
        j["cohomology"] = io::to_json(in.cohomology);
        if (in.colimit) j["colimit"] = colimit_json(*in.colimit);
        std::cout << j.dump(2) << "\n";
    } else if (o.output == "series") {
        std::cout << poincare_series(in.cohomology) << "\n";
    } else {
        std::cout << "degree  dim\n";
        const int top = in.cohomology.max_degree().value_or(0);
        for (int d = 0; d <= top; ++d) std::cout << d << "       " << in.cohomology[d].str() << "\n";
        if (in.colimit && !o.quiet) print_colimit_table(*in.colimit);
    }
    return kExitOk;
}

void print_report_table(const HomotopyReport& r, const std::string& title, int max_degree, bool quiet) {
    std::cout << title << "\n";
    int top = r.identity_component.max_degree().value_or(0);
    if (max_degree > 0) top = std::min(top, max_degree);
    std::cout << "degree  dim(pi_k) (x) Q\n";
    for (int k = 1; k <= top; ++k) std::cout << "pi_" << k << "    " << r.identity_component[k].str() << "\n";
    std::cout << "degree 0 (" << r.degree_zero_label << "): " << r.degree_zero.str() << "\n";
    std::cout << "contributions (generator degree d, cohomology degree n -> pi_{d-n}):\n";
    for (const auto& c : r.contributions) {
        if (max_degree > 0 && c.homotopy_degree() > max_degree) continue;
        std::cout << "  d=" << c.generator_degree << " n=" << c.cohomology_degree << " -> pi_" << c.homotopy_degree()
                  << " : " << c.multiplicity.str() << "\n";
    }
    std::cout << "Samelson bracket: zero\n";
    std::cout << "H-type: " << r.h_type << "\n";
    if (!quiet)
        for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
}

int run_gauge_family(const std::string& command, const Options& o) {
    const auto in = resolve_space(o);
    HomotopyReport r;
    std::string title;
    if (command == "ua") {
        if (o.n == 0) throw InputError("ua needs --n N with N >= 1");
        r = ua_homotopy(in.cohomology, o.n);
        title = "pi_*((UA_zeta)_0) (x) Q, n = " + std::to_string(o.n);
    } else {
        if (o.group.empty()) throw InputError(command + " needs --group SPEC");
        const auto g = parse_group(o.group);
        if (command == "mapping-space") r = mapping_space_homotopy(in.cohomology, g);
        else if (command == "gauge") r = gauge_group_homotopy(in.cohomology, g);
        else r = projective_gauge_homotopy(in.cohomology, g);
        title = command + ", G = " + g.spec;
    }
    if (in.colimit && !in.colimit->all_stable())
        r.notes.push_back("input cohomology did not stabilize within window " + std::to_string(in.colimit->window));

    if (o.max_degree > 0) {
        r.identity_component = cap(r.identity_component, o.max_degree);
        std::erase_if(r.contributions, [&](const Contribution& c) { return c.homotopy_degree() > o.max_degree; });
    }
    if (o.output == "json") {
        std::cout << io::to_json(r, !o.quiet).dump(2) << "\n";
    } else if (o.output == "series") {
        std::cout << poincare_series(r.identity_component) << "\n";
    } else {
        print_report_table(r, title, o.max_degree, o.quiet);
        if (in.colimit && !o.quiet) print_colimit_table(*in.colimit);
    }
    return kExitOk;
}

int run_thom(const Options& o) {
    const auto in = resolve_space(o);
    const auto t = thom_homotopy(in.cohomology, o.p);
    if (o.output == "json") {
        std::cout << io::to_json(t).dump(2) << "\n";
    } else if (o.output == "series") {
        std::cout << poincare_series(t) << "\n";
    } else {
        std::cout << "pi_q(F(X, K(Q," << o.p << "))) (x) Q = H^{" << o.p << "-q}(X;Q)\n";
        for (int q = 0; q <= o.p; ++q) std::cout << "pi_" << q << "    " << t[q].str() << "\n";
    }
    return kExitOk;
}

int run_colimit(const Options& o) {
    if (o.system_path.empty()) throw InputError("colimit needs --system PATH");
    const auto r = colimit_dims(io::load_system(o.system_path), o.window);
    if (o.output == "json") std::cout << colimit_json(r).dump(2) << "\n";
    else if (o.output == "series") std::cout << poincare_series(r.dims()) << "\n";
    else print_colimit_table(r);
    return kExitOk;
}

int run_verify(const Options& o) {
    const int max_degree = o.max_degree == 0 ? 40 : o.max_degree;
    if (max_degree < 1) throw InputError("--max-degree must be at least 1");
    if (o.corpus.empty()) throw InputError("verify needs --corpus DIR");
    if (!fs::is_directory(o.corpus)) throw InputError("corpus directory " + o.corpus + " does not exist");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(o.corpus))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("corpus directory " + o.corpus + " has no .json complex files");

    std::vector<VerifyCase> cases;
    for (const auto& f : files) {
        auto cf = io::load_complex(f);
        cases.push_back({f.filename().string(), betti(*cf.complex), cf.expected_betti});
    }
    std::vector<LieGroupModel> groups;
    for (const auto& s : default_verify_groups()) groups.push_back(parse_group(s));

    const auto outcome = run_verify_checks(cases, groups, max_degree);
    if (outcome.passed()) {
        std::cout << "PASS: " << outcome.checks << " checks over " << cases.size() << " complexes x " << groups.size()
                  << " groups, degrees 1.." << max_degree << "\n";
        return kExitOk;
    }
    const auto& f = outcome.failures.front();
    std::cout << "FAIL: " << outcome.failures.size() << " failing check(s); first counterexample:\n"
              << "  complex " << f.case_name << ", group " << f.group << ", check " << f.check << "\n  " << f.detail
              << "\n";
    return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational homotopy calculator for mapping spaces and gauge groups"};
    app.require_subcommand(1);
    Options o;

    auto add_space = [&](CLI::App* sub) {
        sub->add_option("--complex", o.complex_path, "complex JSON file");
        sub->add_option("--system", o.system_path, "direct system JSON file (matrix or tower form)");
        sub->add_option("--window", o.window, "stability window for --system")->capture_default_str();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", o.output, "table, json or series")
            ->check(CLI::IsMember({"table", "json", "series"}))
            ->capture_default_str();
        sub->add_flag("--quiet", o.quiet, "suppress provenance notes");
    };

    auto* cohomology = app.add_subcommand("cohomology", "rational cohomology dimensions of X");
    add_space(cohomology);
    add_output(cohomology);

    std::vector<CLI::App*> family;
    for (const char* name : {"mapping-space", "gauge", "projective-gauge", "ua"}) {
        auto* sub = app.add_subcommand(name, std::string("rational homotopy of ") + name);
        add_space(sub);
        add_output(sub);
        if (std::string(name) == "ua") sub->add_option("--n", o.n, "matrix size n of the PU(n)-bundle")->required();
        else sub->add_option("--group", o.group, "group spec, e.g. \"U(2)xT^1\"")->required();
        sub->add_option("--max-degree", o.max_degree, "highest homotopy degree to report");
        family.push_back(sub);
    }

    auto* thom = app.add_subcommand("thom", "pi_*(F(X, K(Q,p)))");
    add_space(thom);
    add_output(thom);
    thom->add_option("--p", o.p, "Eilenberg-MacLane degree p >= 1")->required();

    auto* colimit = app.add_subcommand("colimit", "colimit of a direct system of cohomologies");
    colimit->add_option("--system", o.system_path, "direct system JSON file")->required();
    colimit->add_option("--window", o.window, "stability window")->capture_default_str();
    add_output(colimit);

    auto* verify = app.add_subcommand("verify", "cross-check the calculator over a corpus of complexes");
    verify->add_option("--corpus", o.corpus, "directory of complex JSON files")->required();
    verify->add_option("--max-degree", o.max_degree, "highest degree to check (default 40)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (cohomology->parsed()) return run_cohomology(o);
        for (auto* sub : family)
            if (sub->parsed()) return run_gauge_family(sub->get_name(), o);
        if (thom->parsed()) return run_thom(o);
        if (colimit->parsed()) return run_colimit(o);
        if (verify->parsed()) {
            if (verify->count("--max-degree") && o.max_degree < 1)
                throw InputError("--max-degree must be at least 1");
            return run_verify(o);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
