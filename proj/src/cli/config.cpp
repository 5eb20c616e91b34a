#include "lmg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <set>

namespace lmg::cli {

const std::vector<std::string> kCommands = {"exact", "effective", "sweep-lambda", "sweep-vbar",
                                            "hlvqe", "reconstruct", "excited"};

namespace {

const std::set<std::string> kKeys = {"command", "n",       "eps",    "vbar",    "v",      "lambda",    "lambdas",
                                     "vbar_grid", "eta",   "iters",  "shots",   "seed",   "backend",   "window",
                                     "out",     "format",  "update", "mu0",     "beta0",  "theta0",    "reference",
                                     "plot_data"};

template <class T>
T get_as(const json& doc, const char* key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw ConfigError("format must be csv or json, got '" + s + "'");
}

UpdateRule parse_update(const std::string& s) {
    if (s == "normalized") return UpdateRule::normalized;
    if (s == "plain") return UpdateRule::plain;
    if (s == "clipped") return UpdateRule::clipped;
    throw ConfigError("update must be normalized, plain or clipped, got '" + s + "'");
}

ReferenceSpace parse_reference(const std::string& s) {
    if (s == "full") return ReferenceSpace::full;
    if (s == "truncated") return ReferenceSpace::truncated_n;
    throw ConfigError("reference must be full or truncated, got '" + s + "'");
}

std::string check_backend(const std::string& s) {
    if (s != "analytic" && s != "sampled") throw ConfigError("backend must be analytic or sampled, got '" + s + "'");
    return s;
}

std::string check_command(const std::string& s) {
    for (const auto& c : kCommands)
        if (c == s) return s;
    throw ConfigError("unknown command '" + s + "'");
}

}  // namespace

StepWindow parse_window(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw ConfigError("window must look like A..B, got '" + text + "'");
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, dots);
        const std::string b = text.substr(dots + 2);
        StepWindow w{std::stoi(a, &used), 0};
        if (used != a.size()) throw ConfigError("bad window start");
        w.last = std::stoi(b, &used);
        if (used != b.size()) throw ConfigError("bad window end");
        return w;
    } catch (const std::logic_error&) {
        throw ConfigError("window must look like A..B, got '" + text + "'");
    }
}

RunConfig apply_json(RunConfig cfg, const json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (!kKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
    if (doc.contains("v") && doc.contains("vbar")) throw ConfigError("config sets both 'v' and 'vbar'; give exactly one");

    if (doc.contains("command")) cfg.command = check_command(get_as<std::string>(doc, "command"));
    if (doc.contains("n")) cfg.n = get_as<int>(doc, "n");
    if (doc.contains("eps")) cfg.eps = get_as<double>(doc, "eps");
    if (doc.contains("vbar")) {
        cfg.vbar = get_as<double>(doc, "vbar");
        cfg.v.reset();
    }
    if (doc.contains("v")) {
        cfg.v = get_as<double>(doc, "v");
        cfg.vbar.reset();
    }
    if (doc.contains("lambda")) cfg.lambda = get_as<int>(doc, "lambda");
    if (doc.contains("lambdas")) cfg.lambdas = get_as<std::vector<int>>(doc, "lambdas");
    if (doc.contains("vbar_grid")) cfg.vbar_grid = get_as<std::vector<double>>(doc, "vbar_grid");
    if (doc.contains("eta")) cfg.eta = get_as<double>(doc, "eta");
    if (doc.contains("iters")) cfg.iters = get_as<int>(doc, "iters");
    if (doc.contains("shots")) cfg.shots = get_as<long>(doc, "shots");
    if (doc.contains("seed")) cfg.seed = get_as<std::uint64_t>(doc, "seed");
    if (doc.contains("backend")) cfg.backend = check_backend(get_as<std::string>(doc, "backend"));
    if (doc.contains("window")) {
        const json& w = doc.at("window");
        if (w.is_string()) {
            cfg.window = parse_window(w.get<std::string>());
        } else {
            const auto pair = get_as<std::vector<int>>(doc, "window");
            if (pair.size() != 2) throw ConfigError("window array needs two entries");
            cfg.window = {pair[0], pair[1]};
        }
    }
    if (doc.contains("out")) cfg.out = get_as<std::string>(doc, "out");
    if (doc.contains("format")) cfg.format = parse_format(get_as<std::string>(doc, "format"));
    if (doc.contains("update")) cfg.update = parse_update(get_as<std::string>(doc, "update"));
    if (doc.contains("mu0")) cfg.mu0 = get_as<double>(doc, "mu0");
    if (doc.contains("beta0")) {
        if (doc.at("beta0").is_null()) cfg.beta0.reset();
        else cfg.beta0 = get_as<double>(doc, "beta0");
    }
    if (doc.contains("theta0")) cfg.theta0 = get_as<std::vector<double>>(doc, "theta0");
    if (doc.contains("reference")) cfg.reference = parse_reference(get_as<std::string>(doc, "reference"));
    if (doc.contains("plot_data")) cfg.plot_data = get_as<bool>(doc, "plot_data");
    return cfg;
}

json to_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["n"] = cfg.n;
    j["eps"] = cfg.eps;
    if (cfg.vbar) j["vbar"] = *cfg.vbar;
    if (cfg.v) j["v"] = *cfg.v;
    j["lambda"] = cfg.lambda;
    j["lambdas"] = cfg.lambdas;
    j["vbar_grid"] = cfg.vbar_grid;
    j["eta"] = cfg.eta;
    j["iters"] = cfg.iters;
    j["shots"] = cfg.shots;
    j["seed"] = cfg.seed;
    j["backend"] = cfg.backend;
    j["window"] = std::to_string(cfg.window.first) + ".." + std::to_string(cfg.window.last);
    j["out"] = cfg.out;
    j["format"] = cfg.format == OutputFormat::csv ? "csv" : "json";
    j["update"] = cfg.update == UpdateRule::normalized ? "normalized" : cfg.update == UpdateRule::plain ? "plain" : "clipped";
    j["mu0"] = cfg.mu0;
    j["beta0"] = cfg.beta0 ? json(*cfg.beta0) : json(nullptr);
    j["theta0"] = cfg.theta0;
    j["reference"] = cfg.reference == ReferenceSpace::full ? "full" : "truncated";
    j["plot_data"] = cfg.plot_data;
    return j;
}

ModelParams model_of(const RunConfig& cfg) {
    if (cfg.v && cfg.vbar) throw ConfigError("both V and vbar are set; give exactly one");
    if (cfg.v) return ModelParams::from_coupling(cfg.n, cfg.eps, *cfg.v);
    if (cfg.vbar) return ModelParams::from_vbar(cfg.n, cfg.eps, *cfg.vbar);
    throw ConfigError("one of V or vbar is required");
}

HlvqeOptions hlvqe_options_of(const RunConfig& cfg) {
    HlvqeOptions o;
    o.learning_rate = cfg.eta;
    o.max_iterations = cfg.iters;
    o.backend = cfg.backend == "sampled" ? Backend::sampled(cfg.shots, cfg.seed) : Backend::analytic();
    o.init_beta = cfg.beta0.value_or(0.2);
    o.init_theta = cfg.theta0;
    o.window = cfg.window;
    o.update = cfg.update;
    return o;
}

RunConfig parse_args(int argc, const char* const* argv) {
    CLI::App app{"Hamiltonian-learning VQE for the Lipkin-Meshkov-Glick model"};
    app.require_subcommand(1, 1);
    app.fallthrough(true);

    std::string config_file;
    int n = 0, lambda = 0, iters = 0;
    double eps = 0, vbar = 0, v = 0, eta = 0, mu0 = 0, beta0 = 0;
    long shots = 0;
    std::uint64_t seed = 0;
    std::string backend, window, out, format, update, reference;
    std::vector<int> lambdas;
    std::vector<double> vbar_grid, theta0;

    app.add_option("--config", config_file, "JSON config file")->check(CLI::ExistingFile);
    auto* o_n = app.add_option("--n", n, "particle number N");
    auto* o_eps = app.add_option("--eps", eps, "level splitting epsilon");
    auto* o_vbar = app.add_option("--vbar", vbar, "interaction ratio (N-1)V/eps");
    auto* o_v = app.add_option("--v", v, "interaction strength V");
    auto* o_lambda = app.add_option("--lambda", lambda, "model-space cutoff");
    auto* o_lambdas = app.add_option("--lambdas", lambdas, "cutoffs for sweep-lambda")->delimiter(',');
    auto* o_grid = app.add_option("--vbar-grid", vbar_grid, "vbar values for sweep-vbar")->delimiter(',');
    auto* o_eta = app.add_option("--eta", eta, "learning rate");
    auto* o_iters = app.add_option("--iters", iters, "gradient-descent iterations");
    auto* o_shots = app.add_option("--shots", shots, "shots per circuit (sampled backend)");
    auto* o_seed = app.add_option("--seed", seed, "RNG seed");
    auto* o_backend = app.add_option("--backend", backend, "analytic|sampled");
    auto* o_window = app.add_option("--window", window, "summary window A..B");
    auto* o_out = app.add_option("--out", out, "output directory");
    auto* o_format = app.add_option("--format", format, "csv|json");
    auto* o_update = app.add_option("--update", update, "normalized|plain|clipped");
    auto* o_mu0 = app.add_option("--mu0", mu0, "chemical potential for excited states");
    auto* o_beta0 = app.add_option("--beta0", beta0, "initial beta for HL-VQE");
    auto* o_theta0 = app.add_option("--theta0", theta0, "initial angles for HL-VQE")->delimiter(',');
    auto* o_reference = app.add_option("--reference", reference, "full|truncated reference energy for sweeps");
    bool plot_data = false;
    auto* o_plot = app.add_flag("--plot-data", plot_data, "also write long-format CSV for plotting");

    for (const auto& c : kCommands) app.add_subcommand(c, "run the " + c + " task");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    RunConfig cfg;
    if (!config_file.empty()) {
        std::ifstream in(config_file);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw ConfigError("cannot parse " + config_file + ": " + e.what());
        }
        cfg = apply_json(cfg, doc);
    }
    cfg.command = app.get_subcommands().front()->get_name();

    if (o_vbar->count() && o_v->count()) throw ConfigError("flags --v and --vbar are mutually exclusive");
    if (o_n->count()) cfg.n = n;
    if (o_eps->count()) cfg.eps = eps;
    if (o_vbar->count()) {
        cfg.vbar = vbar;
        cfg.v.reset();
    }
    if (o_v->count()) {
        cfg.v = v;
        cfg.vbar.reset();
    }
    if (o_lambda->count()) cfg.lambda = lambda;
    if (o_lambdas->count()) cfg.lambdas = lambdas;
    if (o_grid->count()) cfg.vbar_grid = vbar_grid;
    if (o_eta->count()) cfg.eta = eta;
    if (o_iters->count()) cfg.iters = iters;
    if (o_shots->count()) cfg.shots = shots;
    if (o_seed->count()) cfg.seed = seed;
    if (o_backend->count()) cfg.backend = check_backend(backend);
    if (o_window->count()) cfg.window = parse_window(window);
    if (o_out->count()) cfg.out = out;
    if (o_format->count()) cfg.format = parse_format(format);
    if (o_update->count()) cfg.update = parse_update(update);
    if (o_mu0->count()) cfg.mu0 = mu0;
    if (o_beta0->count()) cfg.beta0 = beta0;
    if (o_theta0->count()) cfg.theta0 = theta0;
    if (o_reference->count()) cfg.reference = parse_reference(reference);
    if (o_plot->count()) cfg.plot_data = plot_data;
    model_of(cfg);
    return cfg;
}

}  // namespace lmg::cli
