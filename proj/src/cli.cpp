#include "mtc/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mtc/classes.hpp"
#include "mtc/falsify.hpp"
#include "mtc/quad.hpp"
#include "mtc/theorems.hpp"

namespace mtc::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitWitness = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::holds_on_samples: return "holds_on_samples";
    case CheckStatus::fails: return "fails";
    case CheckStatus::undefined_encountered: return "undefined_encountered";
    }
    return "?";
}

struct ReportRow {
    std::string id;
    bool is_class = false; // emit "class_id" instead of "theorem_id"
    bool has_values = true;
    double lhs = 0.0, rhs = 0.0, margin = 0.0;
    double lhs_error = 0.0, rhs_error = 0.0;
    std::string status;
    std::optional<Witness> witness;
    long long evals = 0;
    std::uint64_t seed = 0;
    std::string note; // human format only
};

ReportRow row_from_report(const TheoremReport& r, std::uint64_t seed) {
    ReportRow row;
    row.id = theorem_id_name(r.id);
    row.lhs = r.lhs;
    row.rhs = r.rhs;
    row.margin = r.margin;
    row.lhs_error = r.lhs_error;
    row.rhs_error = r.rhs_error;
    row.status = theorem_status_name(r.status);
    row.evals = r.evaluations;
    row.seed = seed;
    if (!r.precondition_ok) row.note = "precondition: " + r.precondition_note;
    if (!r.quadrature_converged)
        row.note += (row.note.empty() ? "" : "; ") + std::string("quadrature did not converge");
    return row;
}

ReportRow row_from_verdict(const std::string& id, const Verdict& v, std::uint64_t seed) {
    ReportRow row;
    row.id = id;
    row.is_class = true;
    if (v.extreme) {
        row.lhs = v.extreme->lhs;
        row.rhs = v.extreme->rhs;
        row.margin = v.extreme->margin;
    } else {
        row.has_values = false;
    }
    row.status = check_status_name(v.status);
    row.witness = v.witness;
    row.evals = v.evaluations;
    row.seed = seed;
    return row;
}

void append_number(std::string& out, bool present, double v) {
    out += present ? fmt17(v) : "null";
}

std::string emit_machine(const std::vector<ReportRow>& rows) {
    if (rows.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& r = rows[i];
        out += "{\"";
        out += r.is_class ? "class_id" : "theorem_id";
        out += "\":\"" + r.id + "\",\"lhs\":";
        append_number(out, r.has_values, r.lhs);
        out += ",\"rhs\":";
        append_number(out, r.has_values, r.rhs);
        out += ",\"margin\":";
        append_number(out, r.has_values, r.margin);
        out += ",\"lhs_error\":" + fmt17(r.lhs_error);
        out += ",\"rhs_error\":" + fmt17(r.rhs_error);
        out += ",\"status\":\"" + r.status + "\"";
        out += ",\"witness\":";
        if (r.witness) {
            out += "{\"x\":" + fmt17(r.witness->x) + ",\"y\":" + fmt17(r.witness->y) + ",\"t\":";
            out += r.witness->t ? fmt17(*r.witness->t) : "null";
            out += ",\"margin\":" + fmt17(r.witness->margin) + "}";
        } else {
            out += "null";
        }
        out += ",\"evals\":" + std::to_string(r.evals);
        out += ",\"seed\":" + std::to_string(r.seed);
        out += i + 1 < rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::inequality: return "inequality";
    case WitnessKind::nonnegativity: return "nonnegativity";
    case WitnessKind::domain: return "domain";
    }
    return "?";
}

std::string emit_human(const std::vector<ReportRow>& rows) {
    if (rows.empty()) return "no reports\n";
    const std::array<std::string, 6> header = {"report", "lhs", "rhs", "margin", "status", "detail"};
    std::vector<std::array<std::string, 6>> cells;
    cells.reserve(rows.size());
    for (const ReportRow& r : rows) {
        std::string detail;
        if (r.lhs_error != 0.0 || r.rhs_error != 0.0)
            detail += "err=" + fmt17(r.lhs_error) + "+" + fmt17(r.rhs_error);
        if (r.witness) {
            if (!detail.empty()) detail += "; ";
            detail += "witness[" + std::string(witness_kind_name(r.witness->kind)) +
                      "] x=" + fmt17(r.witness->x) + " y=" + fmt17(r.witness->y);
            if (r.witness->t) detail += " t=" + fmt17(*r.witness->t);
            detail += " margin=" + fmt17(r.witness->margin);
        }
        if (!r.note.empty()) {
            if (!detail.empty()) detail += "; ";
            detail += r.note;
        }
        cells.push_back({r.id, r.has_values ? fmt17(r.lhs) : "-", r.has_values ? fmt17(r.rhs) : "-",
                         r.has_values ? fmt17(r.margin) : "-", r.status, detail});
    }
    std::array<std::size_t, 6> width{};
    for (std::size_t c = 0; c < 6; ++c) width[c] = header[c].size();
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());

    std::string out;
    auto emit_row = [&](const std::array<std::string, 6>& row) {
        for (std::size_t c = 0; c < 6; ++c) {
            out += row[c];
            if (c + 1 < 6) out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    };
    emit_row(header);
    for (const auto& row : cells) emit_row(row);
    return out;
}

} // namespace

ReportItem ReportItem::from(const TheoremReport& report, std::uint64_t seed) {
    ReportItem item;
    item.theorem = report;
    item.seed = seed;
    return item;
}

ReportItem ReportItem::from(std::string class_id, const Verdict& verdict, std::uint64_t seed) {
    ReportItem item;
    item.verdict = verdict;
    item.class_id = std::move(class_id);
    item.seed = seed;
    return item;
}

std::string emit_report(const std::vector<ReportItem>& items, ReportFormat format) {
    std::vector<ReportRow> rows;
    rows.reserve(items.size());
    for (const ReportItem& item : items) {
        if (item.theorem)
            rows.push_back(row_from_report(*item.theorem, item.seed));
        else if (item.verdict)
            rows.push_back(row_from_verdict(item.class_id, *item.verdict, item.seed));
    }
    return format == ReportFormat::machine ? emit_machine(rows) : emit_human(rows);
}

namespace {

struct Config {
    std::string fn_text;
    std::string gn_text;
    std::vector<double> on;
    double tol = kDefaultTol;
    int grid = 64;
    int rand = 4096;
    std::uint64_t seed = 0;
    long long budget = 10000;
    std::string format = "human";
    std::string theorem;
    bool all = false;
    std::string klass;

    Interval interval() const { return Interval(on[0], on[1]); }

    SamplePlan plan() const {
        SamplePlan p;
        p.grid_points = grid;
        p.random_samples = rand;
        p.seed = seed;
        return p;
    }
};

PointSides witness_sides(PredicateId pred, const FunctionSpec& f, const FunctionSpec* g,
                         const Witness& w) {
    if (w.kind == WitnessKind::nonnegativity) {
        PointSides s;
        s.lhs = -f(w.x);
        s.rhs = 0.0;
        return s;
    }
    switch (pred) {
    case PredicateId::mt: return mt_sides(f.expr(), w.x, w.y, w.t.value_or(0.5));
    case PredicateId::convex: return convexity_sides(f.expr(), w.x, w.y, w.t.value_or(0.5));
    case PredicateId::midpoint: return midpoint_sides(f.expr(), w.x, w.y);
    case PredicateId::so: return similar_order_sides(f.expr(), g->expr(), w.x, w.y);
    }
    return {};
}

int do_check(const Config& cfg, std::vector<ReportRow>& rows) {
    const FunctionSpec f = FunctionSpec::parse(cfg.fn_text, cfg.interval());
    Verdict v;
    if (cfg.klass == "convex") {
        v = check_convexity(f, cfg.plan());
    } else if (cfg.klass == "midpoint") {
        v = check_midpoint_convexity(f, cfg.plan());
    } else if (cfg.klass == "mt") {
        v = check_mt_membership(f, cfg.plan());
    } else { // so
        if (cfg.gn_text.empty())
            throw CLI::ValidationError("--class so requires --gn");
        const FunctionSpec g = FunctionSpec::parse(cfg.gn_text, cfg.interval());
        v = check_similarly_ordered(f, g, cfg.plan());
    }
    rows.push_back(row_from_verdict(cfg.klass, v, cfg.seed));
    switch (v.status) {
    case CheckStatus::holds_on_samples: return kExitOk;
    case CheckStatus::fails: return kExitWitness;
    default: return kExitNumerical;
    }
}

int do_verify(const Config& cfg, std::vector<ReportRow>& rows, std::string& err) {
    const FunctionSpec f = FunctionSpec::parse(cfg.fn_text, cfg.interval());
    std::optional<FunctionSpec> g;
    if (!cfg.gn_text.empty()) g = FunctionSpec::parse(cfg.gn_text, cfg.interval());

    std::vector<std::string> ids;
    if (cfg.all) {
        ids = {"hh_left", "hh_right", "tau_bound", "midpoint_pi"};
        if (g) {
            ids.push_back("pachpatte");
            ids.push_back("pachpatte_midpoint");
            ids.push_back("product_mu");
            ids.push_back("so_product");
        }
    } else {
        ids = {cfg.theorem};
    }

    bool precondition_witness = false;
    auto need_g = [&]() -> const FunctionSpec& {
        if (!g) throw CLI::ValidationError("this theorem requires --gn");
        return *g;
    };

    for (const std::string& id : ids) {
        if (id == "hh_left" && cfg.all) {
            // paired with hh_right below via the shared quadrature
            continue;
        }
        if (id == "hh_right" && cfg.all) {
            auto [left, right] = verify_classical_hh(f, cfg.tol);
            rows.push_back(row_from_report(left, cfg.seed));
            rows.push_back(row_from_report(right, cfg.seed));
            continue;
        }
        if (id == "hh_left") {
            rows.push_back(row_from_report(verify_hadamard_left(f, cfg.tol), cfg.seed));
        } else if (id == "hh_right") {
            rows.push_back(row_from_report(verify_hh_right(f, cfg.tol), cfg.seed));
        } else if (id == "tau_bound") {
            rows.push_back(row_from_report(verify_tau_bound(f, cfg.tol), cfg.seed));
        } else if (id == "midpoint_pi") {
            rows.push_back(row_from_report(verify_midpoint_pi(f, cfg.tol), cfg.seed));
        } else if (id == "product_mu") {
            rows.push_back(row_from_report(verify_product_mu(f, need_g(), cfg.tol), cfg.seed));
        } else if (id == "so_product") {
            try {
                rows.push_back(
                    row_from_report(verify_so_product(f, need_g(), cfg.plan(), cfg.tol), cfg.seed));
            } catch (const PreconditionError& e) {
                if (!cfg.all) throw;
                err += std::string("so_product skipped: ") + e.what() + "\n";
                precondition_witness = true;
            }
        } else if (id == "pachpatte") {
            rows.push_back(row_from_report(verify_pachpatte(f, need_g(), cfg.tol), cfg.seed));
        } else { // pachpatte_midpoint
            rows.push_back(
                row_from_report(verify_pachpatte_midpoint(f, need_g(), cfg.tol), cfg.seed));
        }
    }

    bool violated = precondition_witness;
    bool unresolved = false;
    for (const ReportRow& r : rows) {
        if (r.status == "violated") violated = true;
        if (r.status == "inconclusive" || r.note.find("did not converge") != std::string::npos)
            unresolved = true;
    }
    if (violated) return kExitWitness;
    if (unresolved) {
        err += "margin within quadrature error; retry with a tighter --tol\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int do_falsify(const Config& cfg, std::vector<ReportRow>& rows) {
    const FunctionSpec f = FunctionSpec::parse(cfg.fn_text, cfg.interval());
    std::optional<FunctionSpec> g;
    PredicateId pred;
    if (cfg.klass == "convex") {
        pred = PredicateId::convex;
    } else if (cfg.klass == "midpoint") {
        pred = PredicateId::midpoint;
    } else if (cfg.klass == "mt") {
        pred = PredicateId::mt;
    } else {
        pred = PredicateId::so;
        if (cfg.gn_text.empty())
            throw CLI::ValidationError("--class so requires --gn");
        g = FunctionSpec::parse(cfg.gn_text, cfg.interval());
    }

    SearchBudget budget;
    budget.coarse_evals = cfg.budget;
    budget.seed = cfg.seed;
    const std::optional<Witness> w =
        falsify_pointwise(pred, f, g ? &*g : nullptr, budget);

    ReportRow row;
    row.id = cfg.klass;
    row.is_class = true;
    row.evals = cfg.budget;
    row.seed = cfg.seed;
    row.witness = w;
    if (!w) {
        row.has_values = false;
        row.status = "holds_on_samples";
        rows.push_back(row);
        return kExitOk;
    }
    if (w->kind == WitnessKind::domain) {
        row.has_values = false;
        row.status = "undefined_encountered";
        rows.push_back(row);
        return kExitNumerical;
    }
    const PointSides sides = witness_sides(pred, f, g ? &*g : nullptr, *w);
    row.lhs = sides.lhs;
    row.rhs = sides.rhs;
    row.margin = w->margin;
    row.status = "fails";
    rows.push_back(row);
    return kExitWitness;
}

int do_demo(const Config& cfg, std::vector<ReportRow>& rows) {
    const double tol = cfg.tol;
    const double bound = 10.0 * tol;

    auto anchored = [&](const char* id, double computed, double err, long long evals,
                        double exact) {
        ReportRow r;
        r.id = id;
        r.is_class = true;
        r.lhs = computed;
        r.rhs = exact;
        r.margin = exact - computed;
        r.lhs_error = err;
        r.status = std::abs(r.margin) <= bound ? "satisfied" : "violated";
        r.evals = evals;
        r.seed = cfg.seed;
        rows.push_back(r);
    };

    // moment anchors behind the pi/2, 1/12 and 1/24 constants
    {
        const FunctionSpec one = FunctionSpec::parse("1", Interval(0.0, 1.0));
        const QuadResult q = integrate_weighted(one, Weight::sqrt_t_one_minus_t, tol);
        anchored("moment_sqrt_t_one_minus_t", q.value, q.abs_error_estimate, q.evaluations,
                 std::numbers::pi / 8.0);
    }
    {
        const FunctionSpec m1 = FunctionSpec::parse("x*(1-x)", Interval(0.0, 1.0));
        const QuadResult q = integrate(m1, tol);
        anchored("moment_t_one_minus_t", q.value, q.abs_error_estimate, q.evaluations, 1.0 / 6.0);
    }
    {
        const FunctionSpec m2 = FunctionSpec::parse("x^2", Interval(0.0, 1.0));
        const QuadResult q = integrate(m2, tol);
        anchored("moment_t_squared", q.value, q.abs_error_estimate, q.evaluations, 1.0 / 3.0);
    }

    const Interval unit(0.0, 1.0);
    const FunctionSpec one = FunctionSpec::parse("1", unit);
    const FunctionSpec ident = FunctionSpec::parse("x", unit);
    const FunctionSpec square = FunctionSpec::parse("x^2", unit);
    const FunctionSpec mirror = FunctionSpec::parse("1-x", unit);
    const FunctionSpec root = FunctionSpec::parse("sqrt(x)", unit);

    // equality cases
    rows.push_back(row_from_report(verify_hadamard_left(one, tol), cfg.seed));
    rows.push_back(row_from_report(verify_pachpatte(one, one, tol), cfg.seed));
    rows.push_back(row_from_report(verify_pachpatte_midpoint(one, one, tol), cfg.seed));
    rows.push_back(row_from_report(verify_pachpatte(ident, ident, tol), cfg.seed));
    rows.push_back(row_from_report(verify_pachpatte_midpoint(ident, ident, tol), cfg.seed));

    // margin table
    rows.push_back(row_from_report(verify_tau_bound(one, tol), cfg.seed));
    rows.push_back(row_from_report(verify_tau_bound(square, tol), cfg.seed));
    rows.push_back(row_from_report(verify_midpoint_pi(one, tol), cfg.seed));
    rows.push_back(row_from_report(verify_product_mu(ident, ident, tol), cfg.seed));
    rows.push_back(row_from_report(verify_product_mu(ident, mirror, tol), cfg.seed));
    rows.push_back(row_from_report(verify_so_product(ident, square, cfg.plan(), tol), cfg.seed));

    // substitution identity across the regression corpus
    for (const Interval& dom : {Interval(0.0, 1.0), Interval(3.0, 5.0)}) {
        for (const char* src : {"1", "x", "x^2", "exp(x)"}) {
            const FunctionSpec f = FunctionSpec::parse(src, dom);
            const double diff = tau_substitution_check(f, tol);
            ReportRow r;
            r.id = "tau_substitution";
            r.is_class = true;
            r.lhs = diff;
            r.rhs = bound;
            r.margin = bound - diff;
            r.status = diff <= bound ? "satisfied" : "violated";
            r.seed = cfg.seed;
            r.note = std::string(src) + " on [" + fmt17(dom.a) + ", " + fmt17(dom.b) + "]";
            rows.push_back(r);
        }
    }

    // membership checks
    rows.push_back(row_from_verdict("mt", check_mt_membership(one, cfg.plan()), cfg.seed));
    rows.push_back(row_from_verdict("mt", check_mt_membership(square, cfg.plan()), cfg.seed));
    rows.push_back(row_from_verdict("mt", check_mt_membership(root, cfg.plan()), cfg.seed));

    // falsification regressions
    {
        SearchBudget small;
        small.coarse_evals = 1000;
        small.seed = cfg.seed;
        const auto w = falsify_pointwise(PredicateId::mt, root, nullptr, small);
        ReportRow r;
        r.id = "mt";
        r.is_class = true;
        r.evals = small.coarse_evals;
        r.seed = cfg.seed;
        r.witness = w;
        if (w && w->kind != WitnessKind::domain) {
            const PointSides sides = witness_sides(PredicateId::mt, root, nullptr, *w);
            r.lhs = sides.lhs;
            r.rhs = sides.rhs;
            r.margin = w->margin;
            r.status = "fails";
        } else {
            r.has_values = false;
            r.status = w ? "undefined_encountered" : "holds_on_samples";
        }
        r.note = "falsify sqrt(x), budget 1000";
        rows.push_back(r);
    }
    {
        SearchBudget big;
        big.coarse_evals = 10000;
        big.seed = cfg.seed;
        const auto w = falsify_pointwise(PredicateId::mt, square, nullptr, big);
        ReportRow r;
        r.id = "mt";
        r.is_class = true;
        r.evals = big.coarse_evals;
        r.seed = cfg.seed;
        r.witness = w;
        r.has_values = false;
        r.status = w ? "fails" : "holds_on_samples";
        r.note = "falsify x^2, budget 10000";
        rows.push_back(r);
    }

    return kExitOk;
}

} // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult result;
    Config cfg;

    CLI::App app{"numerical verifier for weighted Hadamard-type inequalities and the associated "
                 "convexity classes"};
    app.require_subcommand(1);

    const std::vector<std::string> class_names = {"convex", "midpoint", "mt", "so"};
    const std::vector<std::string> theorem_names = {
        "hh_left",    "hh_right",   "tau_bound", "midpoint_pi",
        "product_mu", "so_product", "pachpatte", "pachpatte_midpoint"};

    auto add_function_opts = [&](CLI::App* sub) {
        sub->add_option("--fn", cfg.fn_text, "function expression in x")->required();
        sub->add_option("--gn", cfg.gn_text, "second function for product/ordering predicates");
        sub->add_option("--on", cfg.on, "interval endpoints a b")->required()->expected(2);
    };
    auto add_plan_opts = [&](CLI::App* sub) {
        sub->add_option("--grid", cfg.grid, "grid points per axis");
        sub->add_option("--rand", cfg.rand, "random samples");
        sub->add_option("--seed", cfg.seed, "random seed");
    };
    auto add_format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    CLI::App* check = app.add_subcommand("check", "test class membership on sampled points");
    add_function_opts(check);
    add_plan_opts(check);
    add_format_opt(check);
    check->add_option("--class", cfg.klass, "class predicate")
        ->required()
        ->check(CLI::IsMember(class_names));

    CLI::App* verify = app.add_subcommand("verify", "compute both sides of the inequalities");
    add_function_opts(verify);
    add_plan_opts(verify);
    add_format_opt(verify);
    verify->add_option("--tol", cfg.tol, "quadrature tolerance");
    auto* theorem_opt =
        verify->add_option("--theorem", cfg.theorem, "theorem id")->check(CLI::IsMember(theorem_names));
    auto* all_flag = verify->add_flag("--all", cfg.all, "verify every applicable theorem");
    theorem_opt->excludes(all_flag);

    CLI::App* falsify = app.add_subcommand("falsify", "search for a counterexample witness");
    add_function_opts(falsify);
    add_format_opt(falsify);
    falsify->add_option("--class", cfg.klass, "class predicate")
        ->required()
        ->check(CLI::IsMember(class_names));
    falsify->add_option("--budget", cfg.budget, "coarse evaluation budget");
    falsify->add_option("--seed", cfg.seed, "random seed");

    CLI::App* demo = app.add_subcommand("demo", "run the regression corpus and print the margin table");
    add_format_opt(demo);
    demo->add_option("--seed", cfg.seed, "random seed");
    demo->add_option("--tol", cfg.tol, "quadrature tolerance");
    demo->add_option("--grid", cfg.grid, "grid points per axis");
    demo->add_option("--rand", cfg.rand, "random samples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        result.out = os.str();
        result.exit_code = kExitOk;
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = kExitUsage;
        return result;
    }

    std::vector<ReportRow> rows;
    try {
        if (check->parsed()) {
            result.exit_code = do_check(cfg, rows);
        } else if (verify->parsed()) {
            if (!cfg.all && cfg.theorem.empty())
                throw CLI::ValidationError("verify requires --theorem <id> or --all");
            result.exit_code = do_verify(cfg, rows, result.err);
        } else if (falsify->parsed()) {
            result.exit_code = do_falsify(cfg, rows);
        } else {
            result.exit_code = do_demo(cfg, rows);
        }
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = kExitUsage;
        return result;
    } catch (const ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = kExitUsage;
        return result;
    } catch (const PreconditionError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = kExitWitness;
        return result;
    } catch (const UndefinedEvaluation& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = kExitNumerical;
        return result;
    } catch (const std::invalid_argument& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = kExitUsage;
        return result;
    } catch (const std::domain_error& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = kExitUsage;
        return result;
    } catch (const std::exception& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = kExitNumerical;
        return result;
    }

    result.out = cfg.format == "machine" ? emit_machine(rows) : emit_human(rows);
    return result;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const RunResult r = run(args);
    if (!r.out.empty()) std::fwrite(r.out.data(), 1, r.out.size(), stdout);
    if (!r.err.empty()) std::fwrite(r.err.data(), 1, r.err.size(), stderr);
    return r.exit_code;
}

} // namespace mtc::cli
