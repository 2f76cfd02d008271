// wlil: weighted Lagrange interpolation lab.
//
// Subcommands poke the library from the shell: Lebesgue functions and their
// interval maxima, gradient matrices and their minors, root interlacing
// verdicts, the equioscillating node solver, Monte-Carlo checks, the fixed
// demonstration cases, and probes of the maxima-gap map. Text by default,
// --json / --csv for machines. Exit 0 = success / all assertions pass,
// 1 = an assertion or solve failed, 2 = usage trouble.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wlil/counterexamples.hpp"
#include "wlil/equioscillation.hpp"
#include "wlil/interlacing.hpp"
#include "wlil/jacobian.hpp"
#include "wlil/markov.hpp"

using nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw wlil::error("bad number in list: '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
            ++pos;
        if (pos != item.size()) throw wlil::error("bad number in list: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw wlil::error("empty number list");
    return out;
}

uint64_t resolve_seed(uint64_t flag_value, bool flag_set) {
    if (flag_set) return flag_value;
    if (const char* env = std::getenv("WLIL_SEED")) {
        char* end = nullptr;
        uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw wlil::error("WLIL_SEED is not an unsigned integer");
    }
    return 42;
}

// Where output goes: --out file or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw wlil::error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& out() { return *os; }
};

void emit_json(Sink& sink, const ordered_json& j) { sink.out() << j.dump(2) << "\n"; }

void emit_csv(Sink& sink, const std::vector<std::string>& cols,
              const std::vector<std::vector<double>>& rows) {
    std::ostream& os = sink.out();
    for (size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << fmt17(row[c]);
        os << "\n";
    }
}

struct FormatOpts {
    bool json = false;
    bool csv = false;
    std::string out_path;

    void attach(CLI::App* cmd) {
        auto* j = cmd->add_flag("--json", json, "emit JSON");
        auto* c = cmd->add_flag("--csv", csv, "emit CSV");
        j->excludes(c);
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    }
};

struct SystemOpts {
    std::string nodes_str;
    std::string system = "hybrid";
    std::string weight;

    void attach(CLI::App* cmd) {
        cmd->add_option("--nodes", nodes_str, "comma separated node list, e.g. 0,1,2.5,4")
            ->required();
        cmd->add_option("--system", system,
                        "node system kind: hybrid | halfline | hermite")
            ->check(CLI::IsMember({"hybrid", "halfline", "hermite"}));
        cmd->add_option("--weight", weight,
                        "weight family: exp | sqrtexp | hermite (default fits the system)");
    }

    std::pair<wlil::WeightFamily, wlil::NodeSystem> build() const {
        std::vector<double> nodes = parse_list(nodes_str);
        wlil::SystemKind kind;
        std::string w = weight;
        if (system == "hybrid") {
            kind = wlil::SystemKind::Hybrid;
            if (w.empty()) w = "exp";
            if (w != "exp") throw wlil::error("hybrid systems use the exp weight");
        } else if (system == "halfline") {
            kind = wlil::SystemKind::YnHalfline;
            if (w.empty()) w = "exp";
            if (w != "exp" && w != "sqrtexp")
                throw wlil::error("halfline systems use exp or sqrtexp");
        } else {
            kind = wlil::SystemKind::HermiteLine;
            if (w.empty()) w = "hermite";
            if (w != "hermite") throw wlil::error("hermite-line systems use the hermite weight");
        }
        wlil::WeightFamily wf = w == "exp"       ? wlil::WeightFamily::exponential()
                                : w == "sqrtexp" ? wlil::WeightFamily::sqrt_exponential()
                                                 : wlil::WeightFamily::hermite();
        return {wf, wlil::make_system(kind, std::move(nodes))};
    }
};

int run_lebesgue(const SystemOpts& sys, const FormatOpts& fmt, int samples) {
    auto [w, xs] = sys.build();
    std::vector<wlil::IntervalMaximum> maxima = wlil::all_maxima(w, xs);

    double lo = xs.x.front(), hi = xs.x.back() + 4.0;
    if (xs.system == wlil::SystemKind::HermiteLine) lo -= 4.0;
    std::vector<std::vector<double>> rows;
    for (int s = 0; s < samples; ++s) {
        double t = lo + (hi - lo) * s / (samples - 1);
        rows.push_back({t, wlil::eval_lebesgue(w, xs, t)});
    }

    Sink sink(fmt.out_path);
    if (fmt.csv) {
        emit_csv(sink, {"t", "lebesgue"}, rows);
    } else if (fmt.json) {
        ordered_json j;
        j["schema"] = 1;
        j["system"] = wlil::system_name(xs.system);
        j["weight"] = w.name();
        j["nodes"] = xs.x;
        std::vector<int> mi;
        std::vector<double> mv, mz;
        std::vector<std::string> ml;
        std::vector<bool> mr;
        for (const auto& m : maxima) {
            mi.push_back(m.i);
            mv.push_back(m.m);
            mz.push_back(m.z);
            ml.emplace_back(wlil::location_name(m.location));
            mr.push_back(m.nonunique_risk);
        }
        j["max_interval"] = mi;
        j["max_value"] = mv;
        j["max_argmax"] = mz;
        j["max_location"] = ml;
        j["max_nonunique_risk"] = mr;
        std::vector<double> st, sl;
        for (const auto& row : rows) {
            st.push_back(row[0]);
            sl.push_back(row[1]);
        }
        j["sample_t"] = st;
        j["sample_lebesgue"] = sl;
        emit_json(sink, j);
    } else {
        std::ostream& os = sink.out();
        os << "system " << wlil::system_name(xs.system) << ", weight " << w.name()
           << ", nodes";
        for (double t : xs.x) os << " " << fmt17(t);
        os << "\n";
        for (const auto& m : maxima)
            os << "  I_" << m.i << ": max " << fmt17(m.m) << " at " << fmt17(m.z) << " ("
               << wlil::location_name(m.location)
               << (m.nonunique_risk ? ", near-tie" : "") << ")\n";
        os << "  sampled " << rows.size() << " points on [" << fmt17(lo) << ", "
           << fmt17(hi) << "]; use --csv for the table\n";
    }
    return 0;
}

int run_jacobian(const SystemOpts& sys, const FormatOpts& fmt, const std::string& mode) {
    auto [w, xs] = sys.build();
    wlil::JacobianMode jm = mode == "analytic" ? wlil::JacobianMode::Analytic
                            : mode == "fd"     ? wlil::JacobianMode::FiniteDifference
                                               : wlil::JacobianMode::Auto;
    wlil::JacobianBundle b = wlil::build_bundle(w, xs, jm);

    Sink sink(fmt.out_path);
    if (fmt.csv) throw wlil::error("jacobian has no CSV form; use --json or text");
    if (fmt.json) {
        ordered_json j;
        j["schema"] = 1;
        j["system"] = wlil::system_name(xs.system);
        j["weight"] = w.name();
        j["nodes"] = xs.x;
        j["mode"] = b.mode_used == wlil::JacobianMode::Analytic ? "analytic" : "fd";
        j["row_interval"] = b.row_index;
        j["col_node"] = b.col_index;
        j["a_rows"] = b.A.rows;
        j["a_cols"] = b.A.cols;
        j["a"] = b.A.a;
        j["det_a"] = b.det_a;
        j["cond_a"] = b.cond_a;
        j["singular_a"] = b.singular_a;
        j["has_q"] = b.has_q;
        if (b.has_q) {
            j["q_rows"] = b.Q.rows;
            j["q_cols"] = b.Q.cols;
            j["q"] = b.Q.a;
            j["det_q"] = b.det_q;
            j["singular_q"] = b.singular_q;
        }
        emit_json(sink, j);
    } else {
        std::ostream& os = sink.out();
        os << "gradient matrix ("
           << (b.mode_used == wlil::JacobianMode::Analytic ? "analytic" : "finite differences")
           << "), rows = intervals, cols = free nodes\n";
        for (int r = 0; r < b.A.rows; ++r) {
            os << "  m_" << b.row_index[r] << ":";
            for (int c = 0; c < b.A.cols; ++c) os << " " << fmt17(b.A.at(r, c));
            os << "\n";
        }
        for (int r = 0; r < b.A.rows; ++r)
            os << "  minor without row " << b.row_index[r] << ": det "
               << fmt17(b.det_a[r]) << ", cond " << fmt17(b.cond_a[r])
               << (b.singular_a[r] ? " [singular]" : "") << "\n";
        if (b.has_q) {
            os << "quotient matrix minors:\n";
            for (size_t k = 0; k < b.det_q.size(); ++k)
                os << "  without column " << (k + 1) << ": det " << fmt17(b.det_q[k])
                   << (b.singular_q[k] ? " [singular]" : "") << "\n";
        }
    }
    return 0;
}

int run_interlace(const std::string& nodes_str, const FormatOpts& fmt) {
    wlil::WeightFamily w = wlil::WeightFamily::exponential();
    wlil::NodeSystem xs = wlil::make_system(wlil::SystemKind::Hybrid, parse_list(nodes_str));

    wlil::RootTable rt = wlil::branch_roots(w, xs);
    std::vector<wlil::IntervalMaximum> maxima = wlil::all_maxima(w, xs);
    wlil::DerivRootTable dt = wlil::deriv_roots(w, xs, rt, maxima);

    struct Named {
        const char* name;
        wlil::OrderingVerdict v;
    };
    std::vector<Named> verdicts;
    verdicts.push_back({"ordering", wlil::verify_ordering(xs, rt)});
    verdicts.push_back({"pairwise", wlil::verify_pairwise(xs, rt)});
    verdicts.push_back({"derivative_order", wlil::verify_w_order(dt)});
    verdicts.push_back({"window_counts", wlil::verify_window_counts(dt, xs)});
    verdicts.push_back({"simple_roots", wlil::verify_simple_roots(w, xs, rt)});
    bool all_ok = true;
    for (const auto& nv : verdicts) all_ok = all_ok && nv.v.ok;

    Sink sink(fmt.out_path);
    if (fmt.csv) throw wlil::error("interlace has no CSV form; use --json or text");
    if (fmt.json) {
        ordered_json j;
        j["schema"] = 1;
        j["nodes"] = xs.x;
        j["r"] = rt.coeff.r;
        j["a_r_zero"] = rt.coeff.a_r_zero;
        j["leading_a"] = std::vector<double>(rt.coeff.a.begin() + 1, rt.coeff.a.end());
        j["argmax"] = std::vector<double>(dt.z.begin() + 1, dt.z.end());
        j["all_ok"] = all_ok;
        for (const auto& nv : verdicts) {
            std::string base = nv.name;
            j[base + "_ok"] = nv.v.ok;
            j[base + "_comparisons"] = nv.v.comparisons;
            j[base + "_ties"] = nv.v.ties;
            j[base + "_violations"] = nv.v.violations;
            j[base + "_notes"] = nv.v.notes;
        }
        emit_json(sink, j);
    } else {
        std::ostream& os = sink.out();
        os << "nodes";
        for (double t : xs.x) os << " " << fmt17(t);
        os << "\n  r = " << rt.coeff.r << (rt.coeff.a_r_zero ? " (leading a_r ~ 0)" : "")
           << "\n";
        for (const auto& nv : verdicts) {
            os << "  " << nv.name << ": " << (nv.v.ok ? "PASS" : "FAIL") << " ("
               << nv.v.comparisons << " comparisons, " << nv.v.ties << " ties, "
               << nv.v.violations << " violations)\n";
            for (const auto& note : nv.v.notes) os << "    " << note << "\n";
        }
        os << (all_ok ? "PASS" : "FAIL") << "\n";
    }
    return all_ok ? 0 : 1;
}

int run_optimal(int n, const std::string& target_str, const std::string& start_str,
                const FormatOpts& fmt) {
    wlil::WeightFamily w = wlil::WeightFamily::exponential();
    std::vector<double> target(static_cast<size_t>(n), 0.0);
    if (!target_str.empty()) target = parse_list(target_str);
    std::vector<double> start;
    const std::vector<double>* start_ptr = nullptr;
    if (!start_str.empty()) {
        start = parse_list(start_str);
        start_ptr = &start;
    }
    wlil::SolveReport rep = wlil::solve_gamma(w, n, target, start_ptr);

    Sink sink(fmt.out_path);
    if (fmt.csv) throw wlil::error("optimal has no CSV form; use --json or text");
    if (fmt.json) {
        ordered_json j;
        j["schema"] = 1;
        j["n"] = n;
        j["target"] = target;
        j["nodes"] = rep.x;
        j["residual"] = rep.residual;
        j["level"] = rep.level;
        j["iterations"] = rep.iterations;
        j["converged"] = rep.converged;
        j["jac_det"] = rep.jac_det;
        emit_json(sink, j);
    } else {
        std::ostream& os = sink.out();
        os << (rep.converged ? "converged" : "NOT converged") << " in " << rep.iterations
           << " iterations, residual " << fmt17(rep.residual) << "\n  nodes:";
        for (double t : rep.x) os << " " << fmt17(t);
        os << "\n  common level " << fmt17(rep.level) << ", newton det "
           << fmt17(rep.jac_det) << "\n";
    }
    return rep.converged ? 0 : 1;
}

int run_sandwich(int n, int trials, uint64_t seed, int workers, const FormatOpts& fmt) {
    wlil::WeightFamily w = wlil::WeightFamily::exponential();
    wlil::MonteCarloReport sw = wlil::sandwich_check(w, n, trials, seed, workers);
    wlil::MonteCarloReport tw = wlil::intertwining_check(w, n, trials, seed, workers);
    bool ok = sw.ok() && tw.ok();

    Sink sink(fmt.out_path);
    if (fmt.csv) throw wlil::error("sandwich has no CSV form; use --json or text");
    if (fmt.json) {
        ordered_json j;
        j["schema"] = 1;
        j["n"] = n;
        j["trials"] = trials;
        j["seed"] = seed;
        j["workers"] = workers;
        j["sandwich_passes"] = sw.passes;
        j["sandwich_failures"] = sw.failures;
        j["sandwich_notes"] = sw.failure_notes;
        j["intertwining_passes"] = tw.passes;
        j["intertwining_failures"] = tw.failures;
        j["intertwining_notes"] = tw.failure_notes;
        j["all_ok"] = ok;
        emit_json(sink, j);
    } else {
        std::ostream& os = sink.out();
        os << "sandwich: " << sw.passes << "/" << sw.trials << " pass\n";
        for (const auto& note : sw.failure_notes) os << "  " << note << "\n";
        os << "intertwining: " << tw.passes << "/" << tw.trials << " pass\n";
        for (const auto& note : tw.failure_notes) os << "  " << note << "\n";
        os << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

int run_counterexample(const std::string& name, const FormatOpts& fmt) {
    wlil::CaseId id;
    if (!wlil::parse_case_name(name, id))
        throw wlil::error("unknown case '" + name +
                          "' (expected exp-halfline, sqrt-weight, hermite, or markov)");
    wlil::CaseOutcome out = wlil::run_case(id);

    Sink sink(fmt.out_path);
    if (fmt.csv) {
        emit_csv(sink, out.curve_columns, out.curve_rows);
    } else if (fmt.json) {
        ordered_json j;
        j["schema"] = 1;
        j["case"] = wlil::case_name(id);
        j["all_pass"] = out.all_pass();
        std::vector<std::string> names, notes;
        std::vector<double> got, want, tol;
        std::vector<bool> pass;
        for (const auto& c : out.checks) {
            names.push_back(c.name);
            got.push_back(c.got);
            want.push_back(c.want);
            tol.push_back(c.tol);
            pass.push_back(c.pass);
            notes.push_back(c.note);
        }
        j["check_name"] = names;
        j["check_got"] = got;
        j["check_want"] = want;
        j["check_tol"] = tol;
        j["check_pass"] = pass;
        j["check_note"] = notes;
        j["curve_columns"] = out.curve_columns;
        std::vector<double> flat;
        for (const auto& row : out.curve_rows)
            flat.insert(flat.end(), row.begin(), row.end());
        j["curve_flat"] = flat;
        emit_json(sink, j);
    } else {
        std::ostream& os = sink.out();
        os << "case " << wlil::case_name(id) << "\n";
        for (const auto& c : out.checks) {
            os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
            if (c.tol >= 0.0)
                os << ": got " << fmt17(c.got) << ", want " << fmt17(c.want) << " (tol "
                   << fmt17(c.tol) << ")";
            else
                os << ": " << (c.got != 0.0 ? "true" : "false") << ", expected "
                   << (c.want != 0.0 ? "true" : "false");
            if (!c.note.empty()) os << " -- " << c.note;
            os << "\n";
        }
        os << (out.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return out.all_pass() ? 0 : 1;
}

int run_gamma_probe(int n, bool properness, int pmax, const std::string& targets_str,
                    int starts, uint64_t seed, const FormatOpts& fmt) {
    wlil::WeightFamily w = wlil::WeightFamily::exponential();
    Sink sink(fmt.out_path);

    if (properness) {
        std::vector<wlil::PropernessPoint> path = wlil::properness_probe(w, pmax);
        bool crossed = false;
        for (const auto& pt : path) crossed = crossed || pt.gamma_norm > 1e3;
        if (fmt.csv) {
            std::vector<std::vector<double>> rows;
            for (const auto& pt : path)
                rows.push_back({static_cast<double>(pt.p), pt.gap, pt.gamma_norm});
            emit_csv(sink, {"p", "gap", "gamma_norm"}, rows);
        } else if (fmt.json) {
            ordered_json j;
            j["schema"] = 1;
            j["pmax"] = pmax;
            std::vector<int> ps;
            std::vector<double> gaps, norms;
            for (const auto& pt : path) {
                ps.push_back(pt.p);
                gaps.push_back(pt.gap);
                norms.push_back(pt.gamma_norm);
            }
            j["p"] = ps;
            j["gap"] = gaps;
            j["gamma_norm"] = norms;
            j["crossed_1e3"] = crossed;
            emit_json(sink, j);
        } else {
            std::ostream& os = sink.out();
            for (const auto& pt : path)
                os << "  p " << pt.p << ", gap " << fmt17(pt.gap) << ", |gamma| "
                   << fmt17(pt.gamma_norm) << "\n";
            os << "norm " << (crossed ? "crossed" : "did not cross") << " 1e3 by gap 2^-"
               << pmax << "\n";
        }
        return 0;
    }

    std::vector<std::vector<double>> targets;
    if (!targets_str.empty()) {
        std::stringstream ss(targets_str);
        std::string group;
        while (std::getline(ss, group, ';')) targets.push_back(parse_list(group));
    } else {
        targets.push_back(std::vector<double>(static_cast<size_t>(n), 0.0));
        std::vector<double> up(static_cast<size_t>(n), 0.0), down = up;
        up.front() = 0.1;
        down.back() = -0.1;
        targets.push_back(up);
        targets.push_back(down);
    }
    for (const auto& t : targets)
        if (static_cast<int>(t.size()) != n)
            throw wlil::error("each target needs exactly n entries");

    std::vector<wlil::TargetProbe> probes =
        wlil::gamma_surjectivity_probe(w, n, targets, starts, seed);
    bool all_ok = true;
    for (const auto& p : probes) all_ok = all_ok && p.solved;

    if (fmt.csv) throw wlil::error("gamma-probe targets have no CSV form; use --json");
    if (fmt.json) {
        ordered_json j;
        j["schema"] = 1;
        j["n"] = n;
        j["starts"] = starts;
        j["seed"] = seed;
        std::vector<double> target_flat;
        std::vector<bool> solved;
        std::vector<double> residual, scatter;
        for (const auto& p : probes) {
            target_flat.insert(target_flat.end(), p.target.begin(), p.target.end());
            solved.push_back(p.solved);
            residual.push_back(p.residual);
            scatter.push_back(p.scatter);
        }
        j["target_flat"] = target_flat;
        j["solved"] = solved;
        j["residual"] = residual;
        j["scatter"] = scatter;
        j["all_ok"] = all_ok;
        emit_json(sink, j);
    } else {
        std::ostream& os = sink.out();
        for (const auto& p : probes) {
            os << "  target";
            for (double v : p.target) os << " " << fmt17(v);
            os << ": " << (p.solved ? "solved" : "FAILED") << ", residual "
               << fmt17(p.residual) << ", start scatter " << fmt17(p.scatter) << "\n";
        }
        os << (all_ok ? "PASS" : "FAIL") << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wlil: weighted Lagrange interpolation lab.\n"
        "Lebesgue functions, interval maxima, gradient matrices, root\n"
        "interlacing checks, equioscillating nodes, and the fixed\n"
        "demonstration cases."};
    app.require_subcommand(1);

    int exit_code = 0;

    // lebesgue
    auto* leb = app.add_subcommand(
        "lebesgue", "evaluate the Lebesgue function and its interval maxima");
    auto leb_sys = std::make_shared<SystemOpts>();
    auto leb_fmt = std::make_shared<FormatOpts>();
    auto leb_samples = std::make_shared<int>(401);
    leb_sys->attach(leb);
    leb_fmt->attach(leb);
    leb->add_option("--samples", *leb_samples, "curve sample count (default 401)")
        ->check(CLI::Range(2, 1000000));
    leb->callback([=, &exit_code]() {
        exit_code = run_lebesgue(*leb_sys, *leb_fmt, *leb_samples);
    });

    // jacobian
    auto* jac = app.add_subcommand(
        "jacobian", "gradient matrix of the interval maxima and its minors");
    auto jac_sys = std::make_shared<SystemOpts>();
    auto jac_fmt = std::make_shared<FormatOpts>();
    auto jac_mode = std::make_shared<std::string>("auto");
    jac_sys->attach(jac);
    jac_fmt->attach(jac);
    jac->add_option("--mode", *jac_mode, "auto | analytic | fd")
        ->check(CLI::IsMember({"auto", "analytic", "fd"}));
    jac->callback(
        [=, &exit_code]() { exit_code = run_jacobian(*jac_sys, *jac_fmt, *jac_mode); });

    // interlace
    auto* itl = app.add_subcommand(
        "interlace", "verify root ordering and window counts for a hybrid system");
    auto itl_nodes = std::make_shared<std::string>();
    auto itl_fmt = std::make_shared<FormatOpts>();
    itl->add_option("--nodes", *itl_nodes, "comma separated nodes, first must be 0")
        ->required();
    itl_fmt->attach(itl);
    itl->callback([=, &exit_code]() { exit_code = run_interlace(*itl_nodes, *itl_fmt); });

    // optimal
    auto* opt = app.add_subcommand(
        "optimal", "solve for the equioscillating node system (hybrid, exp weight)");
    auto opt_n = std::make_shared<int>(2);
    auto opt_target = std::make_shared<std::string>();
    auto opt_start = std::make_shared<std::string>();
    auto opt_fmt = std::make_shared<FormatOpts>();
    opt->add_option("--n", *opt_n, "number of free nodes")->check(CLI::Range(1, 12));
    opt->add_option("--target", *opt_target,
                    "solve maxima-gap = target instead of 0 (comma separated)");
    opt->add_option("--start", *opt_start, "starting free nodes (comma separated)");
    opt_fmt->attach(opt);
    opt->callback([=, &exit_code]() {
        exit_code = run_optimal(*opt_n, *opt_target, *opt_start, *opt_fmt);
    });

    // sandwich
    auto* sdw = app.add_subcommand(
        "sandwich", "Monte-Carlo sandwich and intertwining checks against the optimum");
    auto sdw_n = std::make_shared<int>(2);
    auto sdw_trials = std::make_shared<int>(200);
    auto sdw_seed = std::make_shared<uint64_t>(0);
    auto sdw_workers =
        std::make_shared<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto sdw_fmt = std::make_shared<FormatOpts>();
    sdw->add_option("--n", *sdw_n, "number of free nodes")->check(CLI::Range(1, 12));
    sdw->add_option("--trials", *sdw_trials, "trials per check (default 200)")
        ->check(CLI::Range(1, 1000000));
    auto* sdw_seed_opt = sdw->add_option("--seed", *sdw_seed, "master seed (default 42)");
    sdw->add_option("--workers", *sdw_workers, "parallel lanes (default: cores)")
        ->check(CLI::Range(1, 256));
    sdw_fmt->attach(sdw);
    sdw->callback([=, &exit_code]() {
        uint64_t seed = resolve_seed(*sdw_seed, sdw_seed_opt->count() > 0);
        exit_code = run_sandwich(*sdw_n, *sdw_trials, seed, *sdw_workers, *sdw_fmt);
    });

    // counterexample
    auto* cex = app.add_subcommand(
        "counterexample",
        "run a fixed demonstration case: exp-halfline, sqrt-weight, hermite, markov");
    auto cex_name = std::make_shared<std::string>();
    auto cex_fmt = std::make_shared<FormatOpts>();
    cex->add_option("case", *cex_name, "case name")->required();
    cex_fmt->attach(cex);
    cex->callback(
        [=, &exit_code]() { exit_code = run_counterexample(*cex_name, *cex_fmt); });

    // gamma-probe
    auto* gpr = app.add_subcommand(
        "gamma-probe", "probe the maxima-gap map: surjectivity targets or the "
                       "shrinking-gap properness path");
    auto gpr_n = std::make_shared<int>(2);
    auto gpr_properness = std::make_shared<bool>(false);
    auto gpr_pmax = std::make_shared<int>(20);
    auto gpr_targets = std::make_shared<std::string>();
    auto gpr_starts = std::make_shared<int>(3);
    auto gpr_seed = std::make_shared<uint64_t>(0);
    auto gpr_fmt = std::make_shared<FormatOpts>();
    gpr->add_option("--n", *gpr_n, "number of free nodes")->check(CLI::Range(1, 12));
    gpr->add_flag("--properness", *gpr_properness,
                  "walk x = (0, 2^-p, 2) and report the gap-map norm");
    gpr->add_option("--pmax", *gpr_pmax, "largest gap exponent (default 20)")
        ->check(CLI::Range(1, 60));
    gpr->add_option("--targets", *gpr_targets,
                    "semicolon separated target vectors, e.g. '0.1,0;0,-0.1'");
    gpr->add_option("--starts", *gpr_starts, "starts per target (default 3)")
        ->check(CLI::Range(1, 100));
    auto* gpr_seed_opt = gpr->add_option("--seed", *gpr_seed, "master seed (default 42)");
    gpr_fmt->attach(gpr);
    gpr->callback([=, &exit_code]() {
        uint64_t seed = resolve_seed(*gpr_seed, gpr_seed_opt->count() > 0);
        exit_code = run_gamma_probe(*gpr_n, *gpr_properness, *gpr_pmax, *gpr_targets,
                                    *gpr_starts, seed, *gpr_fmt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const wlil::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
