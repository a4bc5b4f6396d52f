#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "csos/bethe.hpp"
#include "csos/formfactor.hpp"
#include "csos/identities.hpp"
#include "csos/io.hpp"
#include "csos/model.hpp"
#include "csos/thermo.hpp"

using namespace csos;

namespace {

enum class Level { error = 0, info = 1, debug = 2 };

Level log_level() {
    const char* v = std::getenv("CSOS_LOG");
    if (!v) return Level::error;
    const std::string s(v);
    if (s == "debug") return Level::debug;
    if (s == "info") return Level::info;
    return Level::error;
}

void log(Level l, const std::string& msg) {
    static const Level cur = log_level();
    if (l > cur) return;
    static const char* names[] = {"error", "info", "debug"};
    std::cerr << "[csos " << names[static_cast<int>(l)] << "] " << msg << '\n';
}

struct Options {
    int r = 1, L = 3, N = 8;
    double tau_im = 1.0, tau_re = 0.0;
    int k = 0, ell = 0;
    std::string bra = "0,0", ket = "1,0";
    int site = 1;
    int t = 0, epsilon = 0;
    std::string formula = "result2";
    std::vector<int> N_list{8, 12, 16, 20, 24};
    std::string suite = "appendixA";
    int trials = 100;
    std::uint64_t seed = 7;
    std::string out;
    double tol = 0.0; // 0: command default
    bool opposite = false;
};

GroundStateLabel parse_label(const std::string& s) {
    const auto c = s.find(',');
    if (c == std::string::npos) throw ValidationError("label must be k,ell: " + s);
    try {
        return {std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
    } catch (const std::exception&) {
        throw ValidationError("label must be k,ell: " + s);
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

struct Output {
    json report;
    std::vector<SweepRow> rows; // CSV payload, when the command has one
    bool has_rows = false;
    int code = 0;
};

ModelParams params_of(const Options& o) {
    if (o.tau_re != 0.0) log(Level::info, "--tau-re is experimental");
    return ModelParams::make(o.r, o.L, {o.tau_re, o.tau_im}, o.N);
}

SolveOptions solve_opts(const Options& o) {
    SolveOptions s;
    if (o.tol > 0.0) s.accept = o.tol;
    return s;
}

BetheState solve(const GroundStateLabel& l, const ModelParams& p, const Options& o) {
    const auto t0 = std::chrono::steady_clock::now();
    BetheState s = solve_ground_state(l, p, solve_opts(o));
    std::ostringstream m;
    m << "solved (" << l.k << "," << l.ell << ") N=" << p.N << " residual=" << s.residual << " in "
      << ms_since(t0) << " ms";
    log(Level::debug, m.str());
    return s;
}

// the limit depends on the label differences ket - bra
cplx limit_for(const GroundStateLabel& b, const GroundStateLabel& k, int m, const ModelParams& p) {
    return ff_limit(k.k - b.k, k.ell - b.ell, m, p);
}

Output run_solve(const Options& o) {
    Output r;
    const auto t0 = std::chrono::steady_clock::now();
    const ModelParams p = params_of(o);
    const BetheState s = solve({o.k, o.ell}, p, o);
    r.report["results"] = to_json(s);
    r.report["timings"]["solve_ms"] = ms_since(t0);
    r.report["tolerances"]["residual_accept"] = solve_opts(o).accept;
    r.report["params"] = to_json(p);
    return r;
}

Output run_formfactor(const Options& o) {
    Output r;
    const auto t0 = std::chrono::steady_clock::now();
    const ModelParams p = params_of(o);
    const GroundStateLabel lb = parse_label(o.bra), lk = parse_label(o.ket);
    const BetheState bra = solve(lb, p, o), ket = solve(lk, p, o);
    const double t_solve = ms_since(t0);
    const FormFactorResult f = szm_between(bra, ket, o.site, p);
    r.report["params"] = to_json(p);
    r.report["results"] = to_json(f);
    r.report["timings"]["solve_ms"] = t_solve;
    r.report["timings"]["formfactor_ms"] = ms_since(t0) - t_solve;
    r.rows.push_back({p.N, f.value, 0.0, ms_since(t0)});
    r.has_rows = true;
    return r;
}

Output run_mean(const Options& o) {
    Output r;
    const auto t0 = std::chrono::steady_clock::now();
    const ModelParams p = params_of(o);
    const BetheState s = solve({o.k, o.ell}, p, o);
    const cplx v = o.opposite ? opposite_omega_ff(s, o.site, p) : mean_szm(s, o.site, p);
    r.report["params"] = to_json(p);
    r.report["results"] = {{"value_re", v.real()}, {"value_im", v.imag()}, {"site", o.site},
                           {"opposite", o.opposite}};
    r.report["timings"]["total_ms"] = ms_since(t0);
    r.rows.push_back({p.N, v, 0.0, ms_since(t0)});
    r.has_rows = true;
    return r;
}

Output run_polarization(const Options& o) {
    Output r;
    const auto t0 = std::chrono::steady_clock::now();
    const ModelParams p = params_of(o);
    PolarizationQuery q;
    q.epsilon = o.epsilon;
    q.t = o.t;
    q.site_parity = ((o.site % 2) + 2) % 2;
    q.formula = parse_formula(o.formula);
    q.validate(p);
    const cplx v = polarization(q, p);
    r.report["params"] = to_json(p);
    r.report["results"] = {{"value_re", v.real()}, {"value_im", v.imag()}, {"formula", to_string(q.formula)},
                           {"t", q.t}, {"epsilon", q.epsilon}};
    r.report["timings"]["total_ms"] = ms_since(t0);
    r.rows.push_back({0, v, 0.0, ms_since(t0)});
    r.has_rows = true;
    return r;
}

Output run_converge(const Options& o) {
    Output r;
    if (o.N_list.empty()) throw ValidationError("--N-list is empty");
    for (std::size_t i = 0; i < o.N_list.size(); ++i) {
        if (o.N_list[i] > 64) throw ValidationError("--N-list entries must be <= 64");
        if (i > 0 && o.N_list[i] <= o.N_list[i - 1]) throw ValidationError("--N-list must be ascending");
    }
    const GroundStateLabel lb = parse_label(o.bra), lk = parse_label(o.ket);
    const ModelParams p0 = params_of(o);
    const cplx lim = limit_for(lb, lk, o.site, p0);

    std::vector<std::future<SweepRow>> jobs;
    for (int N : o.N_list) {
        jobs.push_back(std::async(std::launch::async, [=, &o]() {
            const auto t0 = std::chrono::steady_clock::now();
            const ModelParams p = ModelParams::make(o.r, o.L, {o.tau_re, o.tau_im}, N);
            const BetheState bra = solve(lb, p, o), ket = solve(lk, p, o);
            const cplx v = szm_between(bra, ket, o.site, p).value;
            return SweepRow{N, v, std::abs(v - lim), ms_since(t0)};
        }));
    }
    for (auto& j : jobs) r.rows.push_back(j.get());
    r.has_rows = true;

    bool monotone = true;
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        if (!(r.rows[i].gap < r.rows[i - 1].gap)) monotone = false;
    if (!monotone) log(Level::info, "gap sequence is not strictly decreasing");

    r.report["params"] = to_json(p0);
    r.report["results"] = {{"rows", to_json(r.rows)},
                           {"limit_re", lim.real()},
                           {"limit_im", lim.imag()},
                           {"monotone", monotone}};
    if (r.rows.size() > 1 && !monotone) r.report["results"]["warning"] = "non-monotone gap sequence";
    double total = 0.0;
    for (const auto& row : r.rows) total += row.runtime_ms;
    r.report["timings"]["rows_ms"] = total;
    return r;
}

Output run_verify(const Options& o) {
    Output r;
    const auto t0 = std::chrono::steady_clock::now();
    RandomTestConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    std::vector<IdentityReport> reps;
    double tol;
    if (o.suite == "appendixA") {
        reps = run_summation_suite(cfg);
        tol = o.tol > 0.0 ? o.tol : 1e-10;
    } else if (o.suite == "appendixB") {
        cfg.n_min = 2;
        cfg.n_max = 4;
        const ModelParams p = params_of(o);
        r.report["params"] = to_json(p);
        reps = run_determinant_suite(cfg, p);
        tol = o.tol > 0.0 ? o.tol : 1e-9;
    } else {
        throw ValidationError("unknown suite: " + o.suite);
    }
    double worst = 0.0;
    for (const auto& e : reps) worst = std::max(worst, e.gap);
    r.report["results"] = to_json(reps);
    r.report["max_gap"] = worst;
    r.report["tolerances"]["gap"] = tol;
    r.report["timings"]["total_ms"] = ms_since(t0);
    if (!(worst < tol)) {
        log(Level::error, "identity gap above tolerance");
        r.code = 3;
    }
    return r;
}

void emit(const std::string& cmd, Output& o, const std::string& path) {
    o.report["command"] = cmd;
    if (path.empty()) {
        std::cout << o.report.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open output file: " + path);
    if (ends_with(path, ".csv")) {
        if (!o.has_rows) throw ValidationError("command '" + cmd + "' has no csv form");
        f << to_csv(o.rows);
    } else {
        f << o.report.dump(2) << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CSOS model: Bethe ground states, sigma^z form factors, staggered polarizations"};
    app.require_subcommand(1);
    Options o;

    auto model_flags = [&](CLI::App* s) {
        s->add_option("--r", o.r, "numerator of eta = r/L");
        s->add_option("--L", o.L, "number of heights");
        s->add_option("--tau-im", o.tau_im, "Im tau");
        s->add_option("--tau-re", o.tau_re, "Re tau (experimental)");
        s->add_option("--N", o.N, "number of sites (even)");
        s->add_option("--tol", o.tol, "acceptance threshold override");
        s->add_option("--out", o.out, "output path (.json or .csv)");
    };

    auto* solve_cmd = app.add_subcommand("solve", "solve a ground state");
    model_flags(solve_cmd);
    solve_cmd->add_option("--k", o.k);
    solve_cmd->add_option("--ell", o.ell);

    auto* ff_cmd = app.add_subcommand("formfactor", "normalized <bra|sigma^z_m|ket>");
    model_flags(ff_cmd);
    ff_cmd->add_option("--bra", o.bra, "k,ell");
    ff_cmd->add_option("--ket", o.ket, "k,ell");
    ff_cmd->add_option("--site", o.site);

    auto* mean_cmd = app.add_subcommand("mean", "mean value of sigma^z_m in a ground state");
    model_flags(mean_cmd);
    mean_cmd->add_option("--k", o.k);
    mean_cmd->add_option("--ell", o.ell);
    mean_cmd->add_option("--site", o.site);
    mean_cmd->add_flag("--opposite", o.opposite, "element between the twists omega and -omega (L even)");

    auto* pol_cmd = app.add_subcommand("polarization", "thermodynamic staggered polarization");
    model_flags(pol_cmd);
    pol_cmd->add_option("--t", o.t);
    pol_cmd->add_option("--epsilon", o.epsilon);
    pol_cmd->add_option("--formula", o.formula, "result1|result2|result3|result4");
    pol_cmd->add_option("--site", o.site);

    auto* conv_cmd = app.add_subcommand("converge", "finite-size sweep against the N -> infinity limit");
    model_flags(conv_cmd);
    conv_cmd->add_option("--bra", o.bra, "k,ell");
    conv_cmd->add_option("--ket", o.ket, "k,ell");
    conv_cmd->add_option("--site", o.site);
    conv_cmd->add_option("--N-list", o.N_list)->delimiter(',');

    auto* ver_cmd = app.add_subcommand("verify", "random identity checks");
    model_flags(ver_cmd);
    ver_cmd->add_option("--suite", o.suite, "appendixA|appendixB");
    ver_cmd->add_option("--trials", o.trials);
    ver_cmd->add_option("--seed", o.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        Output out;
        if (cmd == "solve") out = run_solve(o);
        else if (cmd == "formfactor") out = run_formfactor(o);
        else if (cmd == "mean") out = run_mean(o);
        else if (cmd == "polarization") out = run_polarization(o);
        else if (cmd == "converge") out = run_converge(o);
        else out = run_verify(o);
        emit(cmd, out, o.out);
        return out.code;
    } catch (const ValidationError& e) {
        log(Level::error, e.what());
        return 2;
    } catch (const NumericalError& e) {
        log(Level::error, e.what());
        return 3;
    } catch (const std::exception& e) {
        log(Level::error, e.what());
        return 3;
    }
}
