#include "report.hpp"

#include "sphorb/fourier.hpp"
#include "sphorb/parab.hpp"
#include "sphorb/realization.hpp"
#include "sphorb/series.hpp"
#include "sphorb/stab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace sphorb::cli {

using json = nlohmann::ordered_json;

namespace {

std::string rat(const Rational& q) { return q.get_str(); }

std::string eps_label(const OrbitDescriptor& d) {
    if (!d.has_sign()) return "±";
    return d.eps > 0 ? "+1" : "-1";
}

CaseResult make_case(const OrbitDescriptor& d, int sub, std::string label, bool pass, json detail = json::object()) {
    CaseResult c;
    c.order = {d.n, d.k, -d.eps, sub, label};
    c.key = d.key() + (label.empty() ? "" : " " + label);
    c.pass = pass;
    c.detail = std::move(detail);
    return c;
}

json string_list(const std::vector<std::string>& v) { return json(v); }

using Task = std::function<std::vector<CaseResult>()>;

/// Runs tasks on opt.jobs threads; the caller sorts, so completion order does not matter.
std::vector<CaseResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<std::vector<CaseResult>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) slots[t] = tasks[t]();
    };
    unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < count; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<CaseResult> out;
    for (auto& s : slots)
        for (auto& c : s) out.push_back(std::move(c));
    return out;
}

/// Wraps a per-orbit task so an exception becomes a failed case instead of a crash.
Task guarded(const OrbitDescriptor& d, std::function<std::vector<CaseResult>()> body) {
    return [d, body] {
        try {
            return body();
        } catch (const std::exception& e) {
            return std::vector<CaseResult>{make_case(d, 0, "error", false, json{{"exception", e.what()}})};
        }
    };
}

std::vector<Task> prop32_tasks(const Options& opt) {
    std::vector<Task> tasks;
    for (const auto& d : selected_orbits(opt))
        tasks.push_back(guarded(d, [d] {
            int sign = orientation_sign(d);
            int expected = d.n % 2 == 0 ? 1 : -1;
            LagrangianReport lag = lagrangian_check(d);
            CharacterSet chars = admissibility_set(d.n, d.k);
            std::vector<ExactScalar> want = d.n % 2 == 0
                                                ? std::vector<ExactScalar>{ExactScalar(1), ExactScalar(-1)}
                                                : std::vector<ExactScalar>{ExactScalar::i(), -ExactScalar::i()};
            json values = json::array();
            for (const auto& v : chars.values) values.push_back(v.pretty());
            json detail{{"orientation_sign", sign},
                        {"expected_sign", expected},
                        {"lagrangian", lag.ok()},
                        {"characters", values}};
            return std::vector<CaseResult>{make_case(d, 0, "", sign == expected && lag.ok() && chars.values == want, detail)};
        }));
    return tasks;
}

std::vector<Task> prop42_tasks(const Options& opt) {
    std::vector<Task> tasks;
    for (const auto& d : selected_orbits(opt))
        for (int i = 1; i < d.n; ++i)
            tasks.push_back(guarded(d, [d, i] {
                WitnessReport w = verify_witness(d, i);
                json detail = w.ok() ? json{{"checks", w.checks.size()}} : json{{"failures", string_list(w.failures())}};
                return std::vector<CaseResult>{make_case(d, i, "i=" + std::to_string(i), w.ok(), detail)};
            }));
    return tasks;
}

std::vector<Task> cor43_tasks(const Options& opt) {
    std::vector<Task> tasks;
    for (const auto& d : selected_orbits(opt))
        tasks.push_back(guarded(d, [d] {
            DufloParameters t = duflo_classification(d);
            std::vector<std::string> bad;
            std::string branches;
            for (const auto& e : t.entries) {
                bool inside = d.k <= e.i && e.i <= d.n - d.k;
                const DufloEntry& m = t.entries.at(static_cast<std::size_t>(d.n - e.i - 1));
                if (e.unipotent_type != inside) bad.push_back("unipotent type at i=" + std::to_string(e.i));
                if ((e.branch == DufloBranch::Unipotent) != inside) bad.push_back("branch at i=" + std::to_string(e.i));
                if (e.mirror != d.n - e.i || m.branch != e.branch || m.chain.dim() != e.chain.dim())
                    bad.push_back("mirror at i=" + std::to_string(e.i));
                branches += (e.branch == DufloBranch::Unipotent ? 'U' : 'I');
            }
            json detail{{"branches", branches}};
            if (!bad.empty()) detail["failures"] = bad;
            return std::vector<CaseResult>{make_case(d, 0, "", bad.empty(), detail)};
        }));
    return tasks;
}

/// Random atom-free operator on the given variables, for the homomorphism samples.
WeylOp random_operator(std::mt19937_64& g, const std::vector<Var>& vars) {
    std::uniform_int_distribution<int> exp(0, 2), coef(-4, 4), den(1, 3);
    WeylOp out;
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        for (const auto& v : vars) {
            if (int a = exp(g)) m.coords[v] = a;
            if (int b = exp(g)) m.derivs[v] = b;
        }
        out += WeylOp::monomial(ExactScalar(frac(coef(g), den(g))), m);
    }
    return out;
}

CaseResult fourier_case(const OrbitDescriptor& d, const RealizationSpec& s, const Options& opt) {
    FourierMap fm = build_fourier(s);
    std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(d.n),
                      static_cast<std::uint64_t>(d.k), static_cast<std::uint64_t>(d.eps + 1)};
    std::mt19937_64 g(seq);
    int broken = 0;
    json first;
    for (int trial = 0; trial < opt.samples && !fm.source.empty(); ++trial) {
        std::uniform_int_distribution<std::size_t> pick(0, fm.source.size() - 1);
        std::vector<Var> vars{fm.source[pick(g)], fm.source[pick(g)]};
        for (const auto& v : fm.fixed) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        WeylOp a = random_operator(g, vars), b = random_operator(g, vars);
        if (fourier_conjugate(a * b, fm) != fourier_conjugate(a, fm) * fourier_conjugate(b, fm)) {
            if (!broken) first = json{{"a", a.str()}, {"b", b.str()}};
            ++broken;
        }
    }
    json detail{{"pairs", fm.pairs.size()}, {"samples", opt.samples}};
    if (!fm.ok()) detail["conflicts"] = fm.conflicts;
    if (broken) detail["counterexample"] = first;
    return make_case(d, 0, "fourier", fm.ok() && broken == 0, detail);
}

std::vector<CaseResult> realization_cases(const OrbitDescriptor& d, const Options& opt) {
    RealizationSpec s = realization_spec(d);
    std::vector<CaseResult> out;
    out.push_back(fourier_case(d, s, opt));
    int sub = 1;
    for (const auto& z : printed_psi_generators(s)) {
        MatchReport m = verify_matching(z, s);
        json detail = m.ok() ? json{{"operator", m.printed.str()}}
                             : json{{"transported", m.transported.str()}, {"printed", m.printed.str()}, {"difference", m.difference.str()}};
        out.push_back(make_case(d, sub++, "match " + z.label(), m.ok(), detail));
    }
    BracketReport br = verify_bracket_relations(s);
    json detail{{"pairs", br.cases.size()}};
    if (!br.ok()) {
        json bad = json::array();
        for (const auto& c : br.cases)
            if (!c.ok())
                bad.push_back(json{{"left", c.left.label()},
                                   {"right", c.right.label()},
                                   {"commutator", c.commutator.str()},
                                   {"expected", c.expected.str()}});
        detail["counterexamples"] = bad;
    }
    out.push_back(make_case(d, 1000, "brackets", br.ok(), detail));
    return out;
}

std::vector<Task> realization_tasks(const Options& opt, RealizationCase want) {
    std::vector<Task> tasks;
    for (const auto& d : selected_orbits(opt))
        if (d.realization_case() == want) tasks.push_back(guarded(d, [d, opt] { return realization_cases(d, opt); }));
    return tasks;
}

std::vector<Task> thm68_tasks(const Options& opt) {
    std::vector<Task> tasks;
    for (const auto& d : selected_orbits(opt))
        tasks.push_back(guarded(d, [d] {
            GkAudit a = gk_dimension_audit(d);
            json checks = json::object();
            for (const auto& [name, pass] : a.checks) checks[name] = pass;
            json detail{{"case", to_string(d.realization_case())},
                        {"orbit_dim", a.orbit_dim},
                        {"variety_dim", a.variety_dim},
                        {"complement_dim", a.complement_dim},
                        {"checks", checks}};
            return std::vector<CaseResult>{make_case(d, 0, "", a.ok(), detail)};
        }));
    return tasks;
}

std::vector<CaseResult> series_cases(const Options& opt) {
    if (opt.rmax < 1) throw UsageError("--rmax must be at least 1");
    SeriesCoefficients s = series_coefficients(opt.rmax);
    std::vector<CaseResult> out;
    for (int r = 0; r <= opt.rmax; ++r) {
        const Rational& b = s.b[static_cast<std::size_t>(r)];
        const Rational& c = s.c[static_cast<std::size_t>(r)];
        bool pass;
        if (r == 0)
            pass = b == 1 && c == 1;
        else if (r == 1)
            pass = b == frac(1, 2) && c == frac(-1, 2);
        else
            pass = b == c && (r % 2 == 0 || b == 0);
        CaseResult cr;
        cr.order = {0, 0, 0, r, ""};
        cr.key = "r=" + std::to_string(r);
        cr.pass = pass;
        cr.detail = json{{"b", rat(b)}, {"c", rat(c)}};
        out.push_back(std::move(cr));
    }
    return out;
}

const std::map<std::string, std::function<std::vector<Task>(const Options&)>>& suites() {
    static const std::map<std::string, std::function<std::vector<Task>(const Options&)>> table{
        {"prop3.2", prop32_tasks},
        {"prop4.2", prop42_tasks},
        {"cor4.3", cor43_tasks},
        {"lemma6.6", [](const Options& o) { return realization_tasks(o, RealizationCase::Generic); }},
        {"lemma6.7", [](const Options& o) { return realization_tasks(o, RealizationCase::EvenMaximal); }},
        {"thm6.8", thm68_tasks},
        {"series7.2", [](const Options& o) { return std::vector<Task>{[o] { return series_cases(o); }}; }},
    };
    return table;
}

/// Fixed-width columns separated by two spaces, trailing blanks trimmed.
std::string columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    auto len = [](const std::string& s) {
        // display width: count code points, not bytes
        return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
    };
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], len(r[c]));
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - len(r[c]) + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw UsageError("bad n-range '" + text + "'");
        return v;
    };
    auto dots = text.find("..");
    std::pair<int, int> r = dots == std::string::npos ? std::pair{to_int(text), to_int(text)}
                                                      : std::pair{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
    if (r.first > r.second) throw UsageError("empty n-range '" + text + "'");
    if (r.first < 4) throw UsageError("n must be at least 4");
    return r;
}

std::vector<OrbitDescriptor> selected_orbits(const Options& opt) {
    std::vector<OrbitDescriptor> out;
    for (int n = opt.n_lo; n <= opt.n_hi; ++n)
        for (const auto& d : catalog(n)) {
            if (opt.k && d.k != *opt.k) continue;
            if (opt.eps && d.has_sign() && d.eps != *opt.eps) continue;
            out.push_back(d);
        }
    return out;
}

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : suites()) out.push_back(name);
    return out;
}

VerificationReport run_suite(const std::string& suite, const Options& opt) {
    auto it = suites().find(suite);
    if (it == suites().end()) throw UsageError("unknown suite '" + suite + "'");
    auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.suite = suite;
    r.options = opt;
    r.cases = run_tasks(it->second(opt), opt.jobs);
    std::sort(r.cases.begin(), r.cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.order < b.order; });
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

json to_json(const VerificationReport& r) {
    json params{{"n_range", json::array({r.options.n_lo, r.options.n_hi})}, {"seed", r.options.seed}};
    if (r.options.k) params["k"] = *r.options.k;
    if (r.options.eps) params["epsilon"] = *r.options.eps;
    if (r.suite == "series7.2") params["rmax"] = r.options.rmax;
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(json{{"key", c.key}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    json out{{"schema", kSchemaId},
             {"suite", r.suite},
             {"parameters", params},
             {"status", r.pass() ? "pass" : "fail"},
             {"summary", json{{"cases", r.cases.size()}, {"failures", r.failures()}}},
             {"cases", cases}};
    if (r.options.timing) out["timing"] = json{{"seconds", r.seconds}};
    return out;
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "  n=" << r.options.n_lo << ".." << r.options.n_hi;
    if (r.options.k) os << "  k=" << *r.options.k;
    if (r.options.eps) os << "  eps=" << *r.options.eps;
    if (r.suite == "series7.2") os << "  rmax=" << r.options.rmax;
    os << "  seed=" << r.options.seed << "\n";
    for (const auto& c : r.cases) {
        os << (c.pass ? "PASS  " : "FAIL  ") << c.key << "\n";
        if (!c.pass) os << "      " << c.detail.dump() << "\n";
    }
    os << r.cases.size() << " cases, " << r.failures() << " failures: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    if (r.options.timing) os << "time " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
    return os.str();
}

std::vector<std::string> table_names() { return {"chain", "cor4.3", "dims"}; }

std::string render_table(const std::string& name, const Options& opt, bool as_json) {
    json rows = json::array();
    std::string text;
    if (name == "cor4.3") {
        for (const auto& d : selected_orbits(opt)) {
            DufloParameters t = duflo_classification(d);
            std::vector<std::vector<std::string>> grid{{"i", "mirror", "branch", "unipotent_type", "chain_dim"}};
            json entries = json::array();
            for (const auto& e : t.entries) {
                grid.push_back({std::to_string(e.i), std::to_string(e.mirror), to_string(e.branch),
                                e.unipotent_type ? "yes" : "no", std::to_string(e.chain.dim())});
                entries.push_back(json{{"i", e.i},
                                       {"mirror", e.mirror},
                                       {"branch", to_string(e.branch)},
                                       {"unipotent_type", e.unipotent_type},
                                       {"chain_dim", e.chain.dim()}});
            }
            text += "# " + d.key() + "\n" + columns(grid);
            rows.push_back(json{{"n", d.n}, {"k", d.k}, {"epsilon", d.eps}, {"entries", entries}});
        }
    } else if (name == "dims") {
        for (int n = opt.n_lo; n <= opt.n_hi; ++n) {
            Options one = opt;
            one.n_lo = one.n_hi = n;
            std::vector<std::vector<std::string>> grid{{"k", "eps", "partition", "2k(n-k)", "n^2-1-dim g(X)"}};
            for (const auto& d : selected_orbits(one)) {
                int formula = 2 * d.k * (n - d.k);
                int computed = n * n - 1 - static_cast<int>(centralizer(representative_X(d)).dim());
                grid.push_back({std::to_string(d.k), eps_label(d), to_string(spherical_partition(d.k, n)),
                                std::to_string(formula), std::to_string(computed)});
                rows.push_back(json{{"n", n}, {"k", d.k}, {"epsilon", d.eps}, {"dim", formula}, {"computed", computed}});
            }
            text += "# n=" + std::to_string(n) + "\n" + columns(grid);
        }
    } else if (name == "chain") {
        for (const auto& d : selected_orbits(opt)) {
            ChainReport c = recursion_chain(d);
            std::vector<std::vector<std::string>> grid{{"i", "dim", "rank", "expected_rank"}};
            json entries = json::array();
            for (std::size_t i = 0; i < c.algebras.size(); ++i) {
                grid.push_back({std::to_string(i + 1), std::to_string(c.algebras[i].dim()), std::to_string(c.ranks[i]),
                                std::to_string(c.expected_ranks[i])});
                entries.push_back(json{{"i", i + 1}, {"dim", c.algebras[i].dim()}, {"rank", c.ranks[i]}, {"expected_rank", c.expected_ranks[i]}});
            }
            text += "# " + d.key() + (c.ok() ? "" : "  MISMATCH") + "\n" + columns(grid);
            rows.push_back(json{{"n", d.n}, {"k", d.k}, {"epsilon", d.eps}, {"ok", c.ok()}, {"chain", entries}});
        }
    } else {
        throw UsageError("unknown table '" + name + "'");
    }
    if (!as_json) return text;
    return dump(json{{"schema", kSchemaId}, {"table", name}, {"rows", rows}});
}

std::string render_orbits(const Options& opt, bool as_json) {
    json rows = json::array();
    std::string text;
    for (int n = opt.n_lo; n <= opt.n_hi; ++n) {
        Options one = opt;
        one.n_lo = one.n_hi = n;
        std::vector<std::vector<std::string>> grid{{"k", "eps", "partition", "dim", "X", "Y"}};
        for (const auto& d : selected_orbits(one)) {
            std::string x = representative_X(d).name(), y = representative_Y(d).name();
            grid.push_back({std::to_string(d.k), eps_label(d), to_string(spherical_partition(d.k, n)),
                            std::to_string(orbit_dimension(d)), x, y});
            json row{{"n", n}, {"k", d.k}, {"epsilon", d.has_sign() ? json(d.eps) : json(nullptr)},
                     {"partition", spherical_partition(d.k, n)}, {"dim", orbit_dimension(d)},
                     {"representative_X", x}, {"representative_Y", y}};
            rows.push_back(row);
        }
        text += "# n=" + std::to_string(n) + "\n" + columns(grid);
    }
    if (!as_json) return text;
    return dump(json{{"schema", kSchemaId}, {"table", "orbits"}, {"rows", rows}});
}

std::string render_stab(const Options& opt, bool as_json) {
    json rows = json::array();
    std::ostringstream os;
    for (const auto& d : selected_orbits(opt)) {
        StabilizerDecomposition s = verify_stabilizer_decomposition(d);
        const int n = d.n;
        int expect = n * n - 1 - 2 * d.k * (n - d.k);
        std::vector<std::pair<std::string, const Subalgebra*>> parts{
            {"middle", &s.middle}, {"twisted", &s.twisted}, {"outer", &s.outer}, {"inner", &s.inner}};
        os << "# " << d.key() << "\n";
        json pieces = json::object();
        for (const auto& [label, sub] : parts) {
            os << label << " (" << sub->dim() << "): ";
            std::vector<std::string> names = sub->names();
            for (std::size_t b = 0; b < names.size(); ++b) os << (b ? ", " : "") << names[b];
            os << "\n";
            pieces[label] = json{{"dim", sub->dim()}, {"basis", sub->names()}};
        }
        int borel = borel_stabilizer_dimension(d);
        bool open = b_orbit_open(d);
        os << "audit dim g(X) = " << s.full.dim() << ", n^2-1-2k(n-k) = " << expect << "\n";
        os << "audit reductive " << s.reductive.dim() << " + unipotent " << s.unipotent.dim() << " = "
           << s.reductive.dim() + s.unipotent.dim() << "\n";
        os << "audit dim b(X) = " << borel << ", B-orbit open: " << (open ? "yes" : "no") << "\n";
        for (const auto& f : s.failures) os << "failure " << f << "\n";
        rows.push_back(json{{"n", n}, {"k", d.k}, {"epsilon", d.eps}, {"pieces", pieces},
                            {"centralizer_dim", s.full.dim()}, {"expected_dim", expect},
                            {"borel_stabilizer_dim", borel}, {"b_orbit_open", open}, {"failures", s.failures}});
    }
    if (!as_json) return os.str();
    return dump(json{{"schema", kSchemaId}, {"table", "stab"}, {"rows", rows}});
}

}  // namespace sphorb::cli
