#include "lmg/cli.hpp"

#include <iostream>

namespace lmg::cli {

namespace {

Table summary_table(std::string name, std::vector<std::pair<std::string, double>> items) {
    Table t{std::move(name), {"quantity", "value"}, {}};
    for (auto& [k, v] : items) t.rows.push_back({k, v});
    return t;
}

Table vector_table(std::string name, std::string index, std::vector<std::pair<std::string, Vector>> cols) {
    Table t{std::move(name), {std::move(index)}, {}};
    for (const auto& c : cols) t.columns.push_back(c.first);
    const Eigen::Index rows = cols.empty() ? 0 : cols.front().second.size();
    for (Eigen::Index i = 0; i < rows; ++i) {
        std::vector<Cell> row{static_cast<long long>(i)};
        for (const auto& c : cols) row.push_back(c.second(i));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table trace_table(std::string name, const std::vector<IterationRecord>& trace, int cutoff) {
    Table t{std::move(name), {"step", "energy", "beta"}, {}};
    for (int i = 0; i < cutoff - 1; ++i) t.columns.push_back("theta_" + std::to_string(i));
    for (int i = 0; i < cutoff; ++i) t.columns.push_back("A_" + std::to_string(i));
    t.columns.push_back("bures");
    for (const auto& r : trace) {
        std::vector<Cell> row{static_cast<long long>(r.step), r.energy, r.beta};
        for (double x : r.theta) row.push_back(x);
        for (double x : r.amplitudes) row.push_back(x);
        row.push_back(r.bures);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_summary_table(std::string name, const RunSummary& s) {
    Table t{std::move(name), {"quantity", "mean", "half_range"}, {}};
    t.rows.push_back({std::string("energy"), s.energy.mean, s.energy.half_range});
    t.rows.push_back({std::string("beta"), s.beta.mean, s.beta.half_range});
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i)
        t.rows.push_back({"A_" + std::to_string(i), s.amplitudes[i].mean, s.amplitudes[i].half_range});
    t.rows.push_back({std::string("bures"), s.bures.mean, s.bures.half_range});
    return t;
}

std::vector<int> default_lambdas(int n) {
    std::vector<int> out;
    for (int l = 2; l <= n + 1; l += 2) out.push_back(l);
    return out;
}

std::vector<double> default_vbar_grid() {
    std::vector<double> out;
    for (int i = 1; i <= 30; ++i) out.push_back(0.1 * i);
    return out;
}

}  // namespace

std::vector<Table> execute(const RunConfig& cfg) {
    const ModelParams params = model_of(cfg);
    std::vector<Table> tables;
    std::vector<std::uint64_t> seeds;

    if (cfg.command == "exact") {
        const Eigenpair g = exact_ground_state(params);
        tables.push_back(summary_table("exact_summary", {{"energy", g.energy}, {"vbar", params.vbar()}}));
        tables.push_back(vector_table("exact_amplitudes", "n", {{"amplitude", g.vector}}));
    } else if (cfg.command == "effective") {
        const EffectiveSolution s = solve_effective(params, cfg.lambda);
        tables.push_back(summary_table("effective_summary", {{"beta", s.beta},
                                                             {"energy", s.energy},
                                                             {"projected_energy", s.projected_energy},
                                                             {"bures", s.bures},
                                                             {"bures_beta0", s.bures_beta0}}));
        tables.push_back(vector_table("effective_amplitudes", "n", {{"amplitude", s.state.amplitudes}}));
    } else if (cfg.command == "sweep-lambda") {
        SweepOptions opts;
        opts.reference = cfg.reference;
        const auto rows = sweep_lambda(params, cfg.lambdas.empty() ? default_lambdas(cfg.n) : cfg.lambdas, opts);
        Table t{"sweep_lambda", {"lambda", "dE_naive", "dE_effective", "dE_projected"}, {}};
        for (const auto& r : rows)
            t.rows.push_back({static_cast<long long>(r.cutoff), r.delta_e_naive, r.delta_e_effective, r.delta_e_projected});
        tables.push_back(std::move(t));
    } else if (cfg.command == "sweep-vbar") {
        const auto pts = sweep_vbar(cfg.n, cfg.eps, cfg.lambda, cfg.vbar_grid.empty() ? default_vbar_grid() : cfg.vbar_grid);
        Table t{"sweep_vbar", {"vbar", "rel_error_percent"}, {}};
        for (const auto& p : pts) t.rows.push_back({p.vbar, p.relative_error_percent});
        tables.push_back(std::move(t));
    } else if (cfg.command == "hlvqe") {
        const HlvqeOptions opts = hlvqe_options_of(cfg);
        if (opts.backend.is_sampled()) seeds.push_back(cfg.seed);
        const RunResult r = run(params, cfg.lambda, opts);
        tables.push_back(trace_table("hlvqe_trace", r.trace, cfg.lambda));
        StepWindow w = cfg.window;
        w.last = std::min(w.last, r.trace.back().step);
        tables.push_back(run_summary_table("hlvqe_summary", summarize(r.trace, w)));
    } else if (cfg.command == "reconstruct") {
        const EffectiveSolution s = solve_effective(params, cfg.lambda);
        const FullState full = reconstruct_full(s.state, params);
        const FullState projected = project_parity(full, Parity::even);
        const Eigenpair exact = exact_ground_state(params);
        tables.push_back(vector_table("reconstruct", "m",
                                      {{"unprojected", full.amplitudes},
                                       {"projected", projected.amplitudes},
                                       {"exact", exact.vector}}));
    } else if (cfg.command == "excited") {
        const HlvqeOptions opts = hlvqe_options_of(cfg);
        if (opts.backend.is_sampled()) seeds.push_back(cfg.seed);
        const RunResult ground = run(params, cfg.lambda, opts);
        const IterationRecord& g = ground.trace.back();
        HlvqeOptions excited_opts = opts;
        excited_opts.init_theta.clear();
        const ExcitedResult ex = run_excited(params, cfg.lambda, g.beta, g.theta, cfg.mu0, excited_opts);
        const double shifted_ground = lowest_eigenpair(reassemble(ex.hamiltonian)).energy;
        tables.push_back(trace_table("excited_trace", ex.run.trace, cfg.lambda));
        tables.push_back(summary_table("excited_summary", {{"ground_energy", g.energy},
                                                           {"ground_beta", g.beta},
                                                           {"excited_energy", ex.run.trace.back().energy},
                                                           {"shifted_lowest_eigenvalue", shifted_ground},
                                                           {"ground_overlap", ex.ground_overlap}}));
    } else {
        throw ConfigError("unknown command '" + cfg.command + "'");
    }
    emit_report(cfg, tables, seeds);
    return tables;
}

int main_entry(int argc, const char* const* argv) {
    try {
        const RunConfig cfg = parse_args(argc, argv);
        for (const auto& t : execute(cfg))
            if (t.name.ends_with("summary"))
                for (const auto& row : t.rows) {
                    std::cout << t.name << "." << std::get<std::string>(row[0]);
                    for (std::size_t c = 1; c < row.size(); ++c) std::cout << " " << format_number(std::get<double>(row[c]));
                    std::cout << "\n";
                }
        return 0;
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lmg::cli
