#include "pv/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "pv/game.hpp"
#include "pv/hypercube.hpp"
#include "pv/norms.hpp"
#include "pv/seesaw.hpp"
#include "pv/strategies.hpp"

namespace pv::cli {

using nlohmann::json;

namespace {

struct Row {
    std::string quantity;
    double value = 0.0;
    double stderr_ = 0.0;
};

// ---- config access with field-level errors --------------------------------

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config: " + msg); }

void check_keys(const json& cfg, const std::string& command, const std::set<std::string>& allowed) {
    for (const auto& item : cfg.items())
        if (!allowed.count(item.key()))
            fail("unknown key '" + item.key() + "' for command '" + command + "'");
}

json get(const json& cfg, const std::string& key) {
    if (!cfg.contains(key)) fail("missing required key '" + key + "'");
    return cfg.at(key);
}

long req_int(const json& cfg, const std::string& key) {
    json v = get(cfg, key);
    if (!v.is_number_integer()) fail("key '" + key + "' must be an integer");
    return v.get<long>();
}

long opt_int(const json& cfg, const std::string& key, long def) {
    if (!cfg.contains(key)) return def;
    if (!cfg.at(key).is_number_integer()) fail("key '" + key + "' must be an integer");
    return cfg.at(key).get<long>();
}

double opt_real(const json& cfg, const std::string& key, double def) {
    if (!cfg.contains(key)) return def;
    if (!cfg.at(key).is_number()) fail("key '" + key + "' must be a number");
    return cfg.at(key).get<double>();
}

std::string req_str(const json& cfg, const std::string& key) {
    json v = get(cfg, key);
    if (!v.is_string()) fail("key '" + key + "' must be a string");
    return v.get<std::string>();
}

std::string opt_str(const json& cfg, const std::string& key, const std::string& def) {
    if (!cfg.contains(key)) return def;
    if (!cfg.at(key).is_string()) fail("key '" + key + "' must be a string");
    return cfg.at(key).get<std::string>();
}

// ---- shared pieces ---------------------------------------------------------

NormTag space_tag(const json& cfg) {
    const std::string name = req_str(cfg, "space");
    using K = NormTag::Kind;
    NormTag tag;
    if (name == "euclidean") tag.kind = K::Euclidean;
    else if (name == "l1") tag.kind = K::L1;
    else if (name == "operator") tag.kind = K::Operator;
    else if (name == "trace_class") tag.kind = K::TraceClass;
    else if (name == "injective_l1_l1") tag.kind = K::InjectiveL1L1;
    else if (name == "w_schatten2_cb") tag.kind = K::WSchatten2cb;
    else if (name == "w_schatten2") tag.kind = K::WSchatten2;
    else if (name == "w_schatten2_cb_state") tag.kind = K::WSchatten2cbState;
    else if (name == "projective_upper") tag.kind = K::ProjectiveUpper;
    else fail("unknown space '" + name + "'");
    tag.d1 = int(req_int(cfg, "d1"));
    tag.d2 = int(opt_int(cfg, "d2", tag.d1));
    tag.d3 = int(opt_int(cfg, "d3", 0));
    return tag;
}

bool is_zoo_name(const std::string& s) {
    return s == "do_nothing" || s == "column_majority" || s == "eps_independent_random" ||
           s == "random";
}

PureStrategy resolve_strategy(const json& cfg, SeededRng rng) {
    const std::string which = req_str(cfg, "strategy");
    if (is_zoo_name(which)) {
        int n = int(req_int(cfg, "n"));
        int k = int(opt_int(cfg, "k", 0));
        int kt = int(opt_int(cfg, "kt", 0));
        int r = int(opt_int(cfg, "r", 0));
        return zoo(which, n, k, kt, r, rng);
    }
    std::ifstream in(which);
    if (!in) fail("strategy file '" + which + "' not readable");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_strategy(buf.str());
}

void dims_of(const PureStrategy& S, json& out) {
    out["n"] = S.n;
    out["k"] = S.k;
    out["kt"] = S.kt;
    out["r"] = S.r;
    out["msg"] = S.msg;
}

// quantities entering the implied-constant report for one strategy
json strategy_constants(const PureStrategy& S, SeededRng rng, std::uint64_t sigma_ii_samples) {
    json out;
    dims_of(S, out);
    out["kind"] = S.kind;
    double omega = value_exact(S).value;
    out["omega"] = omega;

    HypercubeFunction Fi = phi(S, PhiVariant::i);
    SigmaReport si = sigma(Fi, true, 0, rng.child(0));
    out["sigma_i"] = si.sigma;

    HypercubeFunction Fii = phi(S, PhiVariant::ii);
    Fii.norm_opts.budget = 10;
    Fii.norm_opts.restarts = 1;
    Fii.norm_opts.r_max = 1;
    SigmaReport sii = sigma(Fii, false, sigma_ii_samples, rng.child(1));
    out["sigma_ii"] = sii.sigma;
    out["sigma_ii_samples"] = sii.samples;

    double mean_i = norm_of_mean(Fi);
    out["norm_mean_phi_i"] = mean_i;

    double root = std::sqrt(omega);
    out["implied_constant_i"] = root / (si.sigma + mean_i);
    out["implied_constant_ii"] = root / (sii.sigma + mean_i);
    return out;
}

// ---- command handlers ------------------------------------------------------

const std::set<std::string> kCommon = {"command", "schema_version", "seed", "threads", "output"};

std::set<std::string> with(std::initializer_list<std::string> extra) {
    std::set<std::string> s = kCommon;
    s.insert(extra);
    return s;
}

json handle_honest(const json& cfg, std::vector<Row>& rows) {
    check_keys(cfg, "honest", with({"n"}));
    int n = int(req_int(cfg, "n"));
    double v = honest_value(GameInstance{n});
    rows.push_back({"honest_value", v, 0.0});
    return json{{"value", v}};
}

json handle_eval(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "eval",
               with({"strategy", "n", "k", "kt", "r", "mode", "samples", "threads"}));
    PureStrategy S = resolve_strategy(cfg, rng.child(0));
    const std::string mode = opt_str(cfg, "mode", "exact");
    long default_threads = 1;
    if (const char* env = std::getenv("PVLAB_THREADS")) default_threads = std::atol(env);
    ValueReport rep;
    if (mode == "exact")
        rep = value_exact(S, int(opt_int(cfg, "threads", default_threads)));
    else if (mode == "mc")
        rep = value_mc(S, std::uint64_t(opt_int(cfg, "samples", 4096)), rng.child(1));
    else
        fail("mode must be 'exact' or 'mc'");
    rows.push_back({"value", rep.value, rep.stderr_});
    json out{{"value", rep.value}, {"mode", rep.mode}, {"samples", rep.samples},
             {"stderr", rep.stderr_}};
    dims_of(S, out);
    return out;
}

json handle_zoo(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "zoo", with({"name", "n", "k", "kt", "r", "strategy_out"}));
    PureStrategy S = zoo(req_str(cfg, "name"), int(req_int(cfg, "n")),
                         int(opt_int(cfg, "k", 0)), int(opt_int(cfg, "kt", 0)),
                         int(opt_int(cfg, "r", 0)), rng.child(0));
    validate(S);
    json out;
    dims_of(S, out);
    out["kind"] = S.kind;
    if (S.n * S.n <= kEnumerationCapBits) {
        double v = value_exact(S).value;
        out["value"] = v;
        rows.push_back({"value", v, 0.0});
    }
    std::string path = opt_str(cfg, "strategy_out", "");
    if (!path.empty()) {
        std::ofstream f(path);
        f << save_strategy(S);
        out["strategy_out"] = path;
    }
    return out;
}

json handle_sigma(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "sigma",
               with({"strategy", "n", "k", "kt", "r", "variant", "mode", "samples",
                     "budget", "r_max", "restarts"}));
    PureStrategy S = resolve_strategy(cfg, rng.child(0));
    const std::string var = opt_str(cfg, "variant", "i");
    PhiVariant pv_ = var == "i" ? PhiVariant::i
                     : var == "ii" ? PhiVariant::ii
                     : var == "iii" ? PhiVariant::iii
                                    : (fail("variant must be i, ii or iii"), PhiVariant::i);
    HypercubeFunction F = phi(S, pv_);
    F.norm_opts.budget = int(opt_int(cfg, "budget", 25));
    F.norm_opts.r_max = int(opt_int(cfg, "r_max", std::max(1, S.r)));
    F.norm_opts.restarts = int(opt_int(cfg, "restarts", 2));
    bool exact = opt_str(cfg, "mode", "exact") == "exact";
    SigmaReport rep = sigma(F, exact, std::uint64_t(opt_int(cfg, "samples", 64)), rng.child(1));
    rows.push_back({"sigma_" + var, rep.sigma, 0.0});
    return json{{"sigma", rep.sigma}, {"variant", var}, {"mode", rep.mode},
                {"samples", rep.samples}, {"log_prefactor", rep.log_prefactor}};
}

json handle_pisier(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "pisier",
               with({"strategy", "n", "k", "kt", "r", "variant", "mode", "samples"}));
    PureStrategy S = resolve_strategy(cfg, rng.child(0));
    const std::string var = opt_str(cfg, "variant", "i");
    HypercubeFunction F = phi(S, var == "ii" ? PhiVariant::ii : PhiVariant::i);
    if (var == "ii") {  // keep the norm evaluations light for the optimizer-backed norm
        F.norm_opts.budget = 10;
        F.norm_opts.restarts = 1;
        F.norm_opts.r_max = 1;
    }
    bool exact = opt_str(cfg, "mode", "exact") == "exact";
    PisierCheck chk = pisier_check(F, exact, std::uint64_t(opt_int(cfg, "samples", 32)),
                                   rng.child(1));
    rows.push_back({"pisier_ratio", chk.ratio, 0.0});
    return json{{"lhs", chk.lhs}, {"rhs", chk.rhs}, {"ratio", chk.ratio}, {"variant", var}};
}

json handle_gap(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "gap", with({"strategy", "n", "k", "kt", "r"}));
    PureStrategy S = resolve_strategy(cfg, rng.child(0));
    GapReport rep = value_domination_gap(S);
    rows.push_back({"omega", rep.omega, 0.0});
    rows.push_back({"gap_slack", rep.slack, 0.0});
    return json{{"omega", rep.omega}, {"mean_norm_phi_i", rep.mean_norm_phi_i},
                {"mean_norm_phi_ii_lb", rep.mean_norm_phi_ii_lb}, {"slack", rep.slack}};
}

CMat random_element(const NormTag& tag, SeededRng rng) {
    using K = NormTag::Kind;
    Eigen::Index rows = tag.d1, cols = 1;
    switch (tag.kind) {
        case K::Euclidean: case K::L1: break;
        case K::Operator: case K::TraceClass: case K::ProjectiveUpper:
            cols = tag.d2 > 0 ? tag.d2 : tag.d1; break;
        case K::InjectiveL1L1: cols = tag.d1; break;
        case K::WSchatten2cb: case K::WSchatten2:
            rows = cols = Eigen::Index(tag.d1) * tag.d2; break;
        case K::WSchatten2cbState:
            rows = Eigen::Index(tag.d1) * tag.d2 * tag.d1 * tag.d2;
            cols = tag.d3; break;
    }
    CMat M(rows, cols);
    for (Eigen::Index c = 0; c < M.size(); ++c) M(c) = rng.next_cgaussian();
    return M;
}

json handle_norm(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "norm",
               with({"space", "d1", "d2", "d3", "element", "r_max", "budget", "restarts"}));
    NormTag tag = space_tag(cfg);
    const std::string elem = opt_str(cfg, "element", "random");
    CMat x;
    if (elem == "random") {
        SeededRng draw = rng.child(0);
        x = random_element(tag, draw);
    } else {
        std::ifstream in(elem);
        if (!in) fail("element file '" + elem + "' not readable");
        json jm = json::parse(in);
        x = CMat(jm.size(), jm.at(0).size());
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                json e = jm.at(std::size_t(i)).at(std::size_t(j));
                x(i, j) = e.is_array() ? cplx(e.at(0).get<double>(), e.at(1).get<double>())
                                       : cplx(e.get<double>(), 0.0);
            }
    }
    NormEvalOptions opt;
    opt.r_max = int(opt_int(cfg, "r_max", 2));
    opt.budget = int(opt_int(cfg, "budget", 40));
    opt.restarts = int(opt_int(cfg, "restarts", 3));
    NormResult res = norm_eval(tag, x, opt);
    rows.push_back({"norm_" + tag.name(), res.value, 0.0});
    return json{{"value", res.value}, {"cert", cert_name(res.cert)}, {"space", tag.name()},
                {"d1", tag.d1}, {"d2", tag.d2}, {"d3", tag.d3}, {"r_max", opt.r_max}};
}

json handle_type2(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "type2", with({"space", "d1", "d2", "d3", "m", "budget"}));
    NormTag tag = space_tag(cfg);
    int m = int(req_int(cfg, "m"));
    TypeEstimate est = type2_lower(tag, m, int(opt_int(cfg, "budget", 60)), rng.child(0));
    rows.push_back({"type2_lower", est.lower, 0.0});
    return json{{"lower", est.lower}, {"m", est.m}, {"space", tag.name()}, {"mode", est.mode}};
}

json handle_radnorm(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "radnorm", with({"space", "d1", "d2", "d3", "n", "mode", "samples"}));
    NormTag tag = space_tag(cfg);
    int n = int(req_int(cfg, "n"));
    bool exact = opt_str(cfg, "mode", "exact") == "exact";
    std::uint64_t samples = std::uint64_t(opt_int(cfg, "samples", 2048));
    double v = rademacher_mean_norm(tag, n, exact, samples, rng.child(0));
    rows.push_back({"rademacher_mean_norm", v, 0.0});
    return json{{"value", v}, {"n", n}, {"space", tag.name()},
                {"mode", exact ? "exact" : "monte-carlo"}};
}

json handle_gaussnorm(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "gaussnorm", with({"space", "d1", "d2", "d3", "samples"}));
    NormTag tag = space_tag(cfg);
    std::uint64_t samples = std::uint64_t(opt_int(cfg, "samples", 512));
    auto [mean, err] = gaussian_mean_norm(tag, samples, rng.child(0));
    rows.push_back({"gaussian_mean_norm", mean, err});
    return json{{"value", mean}, {"stderr", err}, {"samples", samples}, {"space", tag.name()}};
}

json handle_seesaw(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "seesaw",
               with({"n", "k", "kt", "r", "msg", "restarts", "max_iters", "tol", "eps",
                     "samples", "warm_start", "strategy_out", "trace_out"}));
    SeesawConfig sc;
    sc.n = int(req_int(cfg, "n"));
    sc.k = int(opt_int(cfg, "k", 1));
    sc.kt = int(opt_int(cfg, "kt", sc.k));
    sc.r = int(opt_int(cfg, "r", 1));
    sc.msg = int(opt_int(cfg, "msg", 1));
    sc.restarts = int(opt_int(cfg, "restarts", 4));
    sc.max_iters = int(opt_int(cfg, "max_iters", 100));
    sc.tol = opt_real(cfg, "tol", 1e-8);
    sc.seed = std::uint64_t(opt_int(cfg, "seed", 20260826));
    sc.eps_mode.exact = opt_str(cfg, "eps", "exact") == "exact";
    sc.eps_mode.samples = std::uint64_t(opt_int(cfg, "samples", 256));
    std::string warm = opt_str(cfg, "warm_start", "");
    if (!warm.empty()) {
        json sub{{"strategy", warm}, {"n", sc.n}, {"k", sc.k}, {"kt", sc.kt}, {"r", sc.r}};
        sc.warm_start = resolve_strategy(sub, rng.child(7));
    }
    SeesawTrace tr = optimize(sc);
    rows.push_back({"best_value", tr.best_value, 0.0});
    json out{{"best_value", tr.best_value}};
    dims_of(tr.best, out);
    json vals = json::array();
    for (const auto& restart : tr.values) vals.push_back(restart);
    out["values"] = vals;
    std::string spath = opt_str(cfg, "strategy_out", "");
    if (!spath.empty()) {
        std::ofstream f(spath);
        f << save_strategy(tr.best);
        out["strategy_out"] = spath;
    }
    std::string tpath = opt_str(cfg, "trace_out", "");
    if (!tpath.empty()) {
        std::ofstream f(tpath);
        f << trace_csv(tr);
        out["trace_out"] = tpath;
    }
    return out;
}

json handle_report(const json& cfg, std::vector<Row>& rows, SeededRng rng) {
    check_keys(cfg, "report", with({"n_list", "include_seesaw", "sigma_ii_samples"}));
    std::vector<int> ns{2, 3};
    if (cfg.contains("n_list")) {
        if (!cfg.at("n_list").is_array()) fail("key 'n_list' must be an array of integers");
        ns.clear();
        for (const auto& e : cfg.at("n_list")) ns.push_back(e.get<int>());
    }
    bool seesaw_too = cfg.contains("include_seesaw") ? cfg.at("include_seesaw").get<bool>() : true;
    std::uint64_t sii = std::uint64_t(opt_int(cfg, "sigma_ii_samples", 8));
    json entries = json::array();
    std::uint64_t idx = 0;
    for (int n : ns) {
        for (const std::string& name :
             {std::string("do_nothing"), std::string("column_majority"),
              std::string("eps_independent_random"), std::string("random")}) {
            PureStrategy S = is_zoo_name(name) && (name == "do_nothing" || name == "column_majority")
                                 ? zoo(name, n, 0, 0, 0, rng.child(idx))
                                 : zoo(name, n, 1, 2, 1, rng.child(idx));
            ++idx;
            entries.push_back(strategy_constants(S, rng.child(1000 + idx), sii));
        }
        if (seesaw_too) {
            SeesawConfig sc;
            sc.n = n;
            sc.k = 1;
            sc.kt = 2;
            sc.r = 1;
            sc.restarts = 1;
            sc.max_iters = 3;
            sc.seed = 7 + std::uint64_t(n);
            SeesawTrace tr = optimize(sc);
            entries.push_back(strategy_constants(tr.best, rng.child(2000 + idx), sii));
        }
    }
    for (const auto& e : entries)
        rows.push_back({"implied_constant_i_n" + std::to_string(e.at("n").get<int>()) + "_" +
                            e.at("kind").get<std::string>(),
                        e.at("implied_constant_i").get<double>(), 0.0});
    return json{{"entries", entries}};
}

std::string timestamp_utc() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

json apply_overrides(json config, const std::vector<std::string>& sets) {
    for (const auto& kv : sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) fail("override '" + kv + "' is not key=value");
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        json parsed = json::parse(val, nullptr, false);
        config[key] = parsed.is_discarded() ? json(val) : parsed;
    }
    return config;
}

std::string config_hash(const json& config) {
    // FNV-1a over the canonical (sorted-key) dump
    std::string s = config.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json run(const json& config) {
    if (!config.is_object()) fail("top level must be a JSON object");
    if (config.contains("schema_version") &&
        config.at("schema_version").get<int>() != kSchemaVersion)
        fail("unsupported schema_version");
    const std::string cmd = req_str(config, "command");
    SeededRng rng(std::uint64_t(opt_int(config, "seed", 20260826)));
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Row> rows;
    json results;
    if (cmd == "honest") results = handle_honest(config, rows);
    else if (cmd == "eval") results = handle_eval(config, rows, rng);
    else if (cmd == "zoo") results = handle_zoo(config, rows, rng);
    else if (cmd == "sigma") results = handle_sigma(config, rows, rng);
    else if (cmd == "pisier") results = handle_pisier(config, rows, rng);
    else if (cmd == "gap") results = handle_gap(config, rows, rng);
    else if (cmd == "norm") results = handle_norm(config, rows, rng);
    else if (cmd == "type2") results = handle_type2(config, rows, rng);
    else if (cmd == "radnorm") results = handle_radnorm(config, rows, rng);
    else if (cmd == "gaussnorm") results = handle_gaussnorm(config, rows, rng);
    else if (cmd == "seesaw") results = handle_seesaw(config, rows, rng);
    else if (cmd == "report") results = handle_report(config, rows, rng);
    else fail("unknown command '" + cmd + "'");
    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json report;
    report["schema_version"] = kSchemaVersion;
    report["tool_version"] = kToolVersion;
    report["config"] = config;
    report["config_hash"] = config_hash(config);
    report["results"] = results;
    report["wall_time_s"] = wall;
    report["timestamp"] = timestamp_utc();
    json jr = json::array();
    for (const auto& r : rows)
        jr.push_back(json{{"quantity", r.quantity}, {"value", r.value}, {"stderr", r.stderr_}});
    report["rows"] = jr;
    std::string why;
    if (!validate_report(report, &why))
        throw NumericalError("report failed self-validation: " + why);
    return report;
}

bool validate_report(const json& report, std::string* why) {
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!report.is_object()) return bad("not an object");
    for (const char* key :
         {"schema_version", "tool_version", "config", "config_hash", "results", "wall_time_s",
          "timestamp", "rows"})
        if (!report.contains(key)) return bad(std::string("missing '") + key + "'");
    if (!report.at("schema_version").is_number_integer()) return bad("schema_version not integer");
    if (!report.at("config").is_object() || !report.at("config").contains("command"))
        return bad("config missing command");
    if (!report.at("results").is_object()) return bad("results not an object");
    if (!report.at("rows").is_array()) return bad("rows not an array");
    for (const auto& r : report.at("rows"))
        if (!r.contains("quantity") || !r.contains("value") || !r.contains("stderr"))
            return bad("row missing quantity/value/stderr");
    if (report.at("config").at("command") == "report") {
        if (!report.at("results").contains("entries") || !report.at("results").at("entries").is_array())
            return bad("implied-constant report missing entries");
        for (const auto& e : report.at("results").at("entries"))
            for (const char* key : {"n", "k", "kt", "r", "omega", "sigma_i", "sigma_ii",
                                    "norm_mean_phi_i", "implied_constant_i", "implied_constant_ii"})
                if (!e.contains(key)) return bad(std::string("report entry missing '") + key + "'");
    }
    return true;
}

std::string csv_rows(const json& report) {
    const json& cfg = report.at("config");
    auto dim = [&](const char* key) {
        return cfg.contains(key) && cfg.at(key).is_number_integer()
                   ? std::to_string(cfg.at(key).get<long>())
                   : std::string();
    };
    std::ostringstream os;
    os << "command,n,k,kt,r,quantity,value,stderr,seed\n";
    os.precision(17);
    for (const auto& r : report.at("rows"))
        os << cfg.at("command").get<std::string>() << ',' << dim("n") << ',' << dim("k") << ','
           << dim("kt") << ',' << dim("r") << ',' << r.at("quantity").get<std::string>() << ','
           << r.at("value").get<double>() << ',' << r.at("stderr").get<double>() << ','
           << (cfg.contains("seed") ? std::to_string(cfg.at("seed").get<long>()) : std::string())
           << '\n';
    return os.str();
}

} // namespace pv::cli
