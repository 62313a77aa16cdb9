#include "report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

using namespace sphorb::cli;

namespace {

struct Shared {
    std::string n_range = "4..10";
    std::optional<int> k;
    std::optional<int> eps;
    std::string format = "text";
};

void add_selection(CLI::App* cmd, Shared& s, const std::string& default_range) {
    s.n_range = default_range;
    cmd->add_option("-n,--n-range", s.n_range, "single n or a range lo..hi")->capture_default_str();
    cmd->add_option("-k", s.k, "restrict to one k");
    cmd->add_option("--epsilon", s.eps, "restrict sign-carrying orbits to one epsilon")->check(CLI::IsMember({-1, 1}));
    cmd->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

Options resolve(const Shared& s, Options base) {
    auto [lo, hi] = parse_range(s.n_range);
    base.n_lo = lo;
    base.n_hi = hi;
    base.k = s.k;
    base.eps = s.eps;
    return base;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical nilpotent orbits of sl_n(R): catalog, tables and verification suites"};
    app.require_subcommand(1);

    Shared orbits_sel, verify_sel, table_sel, stab_sel, classify_sel;
    Options base;
    base.jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* orbits = app.add_subcommand("orbits", "list the catalog with partitions, dimensions and representatives");
    add_selection(orbits, orbits_sel, "6");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    add_selection(verify, verify_sel, "4..10");
    verify->add_option("--seed", base.seed, "seed for randomized samples")->capture_default_str();
    verify->add_option("--rmax", base.rmax, "last series index")->capture_default_str();
    verify->add_option("--samples", base.samples, "random samples per case")->capture_default_str();
    verify->add_option("-j,--jobs", base.jobs, "worker threads");
    verify->add_flag("--timing", base.timing, "append wall-clock time (output is then not reproducible)");

    std::string table;
    auto* tab = app.add_subcommand("table", "render a deterministic table");
    tab->add_option("name", table, "table name")->required()->check(CLI::IsMember(table_names()));
    add_selection(tab, table_sel, "4..10");

    auto* stab = app.add_subcommand("stab", "centralizer decomposition with basis names and dimension audit");
    add_selection(stab, stab_sel, "6");

    auto* classify = app.add_subcommand("classify", "the induced/unipotent classification table");
    add_selection(classify, classify_sel, "4..10");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*orbits) {
            std::cout << render_orbits(resolve(orbits_sel, base), orbits_sel.format == "json");
        } else if (*verify) {
            VerificationReport r = run_suite(suite, resolve(verify_sel, base));
            std::cout << (verify_sel.format == "json" ? to_json(r).dump(2) + "\n" : render_text(r));
            return r.pass() ? 0 : 1;
        } else if (*tab) {
            std::cout << render_table(table, resolve(table_sel, base), table_sel.format == "json");
        } else if (*stab) {
            std::cout << render_stab(resolve(stab_sel, base), stab_sel.format == "json");
        } else if (*classify) {
            std::cout << render_table("cor4.3", resolve(classify_sel, base), classify_sel.format == "json");
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
