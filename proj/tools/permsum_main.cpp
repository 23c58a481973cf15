// permsum: concentration bounds and permutation tests for randomly permuted
// sums. Subcommands: moments, bounds, tails, verify, indep-test, power-check.
//
// Exit codes: 0 success, 1 domain error (single line "error: <category>:
// <message>" on stderr), 2 usage error. All randomness comes from --seed or
// the seed recorded in a spec file; there is no wall-clock seeding.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permsum/bounds.hpp"
#include "permsum/constants.hpp"
#include "permsum/distribution.hpp"
#include "permsum/errors.hpp"
#include "permsum/generators.hpp"
#include "permsum/indep_test.hpp"
#include "permsum/kernels.hpp"
#include "permsum/matrix.hpp"
#include "permsum/moments.hpp"
#include "permsum/paired_sample.hpp"
#include "permsum/permutation.hpp"
#include "permsum/report_json.hpp"
#include "permsum/tails.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace permsum;

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open output file '" + path + "'");
    out << text;
}

struct mode_flags {
    bool exact = true;
    std::uint64_t b = 0;
};

// "exact" or "mc:B"
mode_flags parse_mode(const std::string& text) {
    if (text == "exact") return {};
    if (text.rfind("mc:", 0) == 0) {
        std::size_t pos = 0;
        unsigned long long b = 0;
        const std::string digits = text.substr(3);
        try {
            b = std::stoull(digits, &pos);
        } catch (const std::exception&) {
            throw usage_error("--mode mc:B needs a positive integer B");
        }
        if (pos != digits.size() || b == 0)
            throw usage_error("--mode mc:B needs a positive integer B");
        return {false, b};
    }
    throw usage_error("--mode must be 'exact' or 'mc:B'");
}

// "t0:t1:points" with points >= 2, evenly spaced inclusive
std::vector<double> parse_grid(const std::string& text) {
    double lo = 0.0, hi = 0.0;
    unsigned long points = 0;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(text);
    in >> lo >> colon1 >> hi >> colon2 >> points;
    if (!in || colon1 != ':' || colon2 != ':' || !(in >> std::ws).eof() || points < 2)
        throw usage_error("--grid expects t0:t1:points with points >= 2");
    if (!(hi >= lo)) throw usage_error("--grid expects t1 >= t0");
    std::vector<double> g(points);
    for (unsigned long k = 0; k < points; ++k)
        g[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
    return g;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw parse_error("'" + path + "': " + e.what());
    }
}

void apply_exact_limit_env() {
    const char* env = std::getenv("PERMSUM_N_EXACT");
    if (!env) return;
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(env, &pos);
        if (pos != std::string(env).size()) throw std::invalid_argument(env);
        set_exact_limit(v);
    } catch (const std::exception&) {
        throw usage_error("PERMSUM_N_EXACT must be an integer in [1, 10]");
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw usage_error(msg);
}

// Options shared by every subcommand.
struct common_opts {
    bool constants = false;
    std::string out;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--constants", constants,
                      "print the frozen constant table as JSON and exit");
        cmd->add_option("--out", out, "output path ('-' or empty for stdout)");
    }

    // true when the subcommand should short-circuit into the constants dump
    bool handled_constants() const {
        if (!constants) return false;
        write_text(out, render_report("constants", constants_json()));
        return true;
    }
};

// ---------------------------------------------------------------- moments

struct moments_opts {
    common_opts common;
    std::string matrix_path;
    std::optional<double> condition_r;
    std::optional<double> lindeberg_eps;
};

int run_moments(const moments_opts& o) {
    if (o.common.handled_constants()) return 0;
    require(!o.matrix_path.empty(), "moments needs --matrix");
    const coefficient_matrix a = read_matrix_csv(o.matrix_path);
    json payload = to_json(compute_matrix_moments(a));
    if (o.condition_r || o.lindeberg_eps) {
        const coefficient_matrix d = hoeffding_centering(a);
        if (o.condition_r) {
            payload["hoeffding_condition_r"] = hoeffding_condition_r(d, *o.condition_r);
            payload["hoeffding_condition_r_order"] = *o.condition_r;
            payload["hoeffding_condition_max"] = hoeffding_condition_max(d);
        }
        if (o.lindeberg_eps) {
            payload["lindeberg_sum"] = lindeberg_sum(d, *o.lindeberg_eps);
            payload["lindeberg_eps"] = *o.lindeberg_eps;
        }
    }
    write_text(o.common.out, render_report("moments", payload));
    return 0;
}

// ----------------------------------------------------------------- bounds

struct bounds_opts {
    common_opts common;
    std::string matrix_path;
    std::string family;
    std::string grid_text;
    std::vector<double> x_values;
    std::vector<double> t_values;
    std::optional<double> v_proxy;
    std::optional<double> c_scale;
    std::string mode_text = "exact";
    std::optional<std::uint64_t> seed;
    std::string meta_path;
};

int run_bounds(const bounds_opts& o) {
    if (o.common.handled_constants()) return 0;
    require(!o.family.empty(), "bounds needs --family");

    int sources = !o.grid_text.empty();
    sources += !o.x_values.empty();
    sources += !o.t_values.empty();
    require(sources == 1, "bounds needs exactly one of --grid, --x, --t");
    std::vector<double> inputs = !o.grid_text.empty() ? parse_grid(o.grid_text)
                                 : !o.x_values.empty() ? o.x_values
                                                       : o.t_values;

    const mode_flags mode = parse_mode(o.mode_text);
    require(mode.exact || o.seed.has_value(), "--mode mc:B needs --seed");

    json meta{{"family", o.family}, {"mode", o.mode_text}};
    std::function<bound_evaluation(double)> eval;

    const bool classical =
        o.family == "bernstein-classical-stat" || o.family == "bernstein-classical-prob";
    if (classical) {
        require(o.v_proxy && o.c_scale, "classical Bernstein families need --v and --c");
        require(o.matrix_path.empty(), "classical Bernstein families take --v/--c, not --matrix");
        const double v = *o.v_proxy, c = *o.c_scale;
        meta["v"] = v;
        meta["c"] = c;
        if (o.family == "bernstein-classical-stat")
            eval = [v, c](double x) { return bernstein_classical_stat(v, c, x); };
        else
            eval = [v, c](double t) { return bernstein_classical_prob(v, c, t); };
    } else {
        require(family_is_matrix_applicable(o.family), "unknown family '" + o.family + "'");
        require(!o.matrix_path.empty(), "bounds needs --matrix for family '" + o.family + "'");
        const coefficient_matrix a = read_matrix_csv(o.matrix_path);
        if (family_requires_nonneg(o.family) && !a.non_negative())
            throw family_not_applicable_error("'" + o.family +
                                              "' requires non-negative entries");
        const matrix_moments m = compute_matrix_moments(a);
        const std::size_t n = a.size();
        meta["n"] = n;
        meta["moments"] = to_json(m);

        if (o.family == "chatterjee")
            eval = [m](double t) { return chatterjee_bound(m.mean_z, m.max_abs, t); };
        else if (o.family == "bdr")
            eval = [m](double t) { return bdr_bound(m.v_second_moment, m.max_abs, t); };
        else if (o.family == "mean-pos")
            eval = [m](double x) { return mean_bound_pos_threshold(m.v_second_moment, m.max_abs, x); };
        else if (o.family == "mean-pos-prob")
            eval = [m](double t) { return mean_bound_pos_prob(m.v_second_moment, m.max_abs, t); };
        else if (o.family == "mean-general")
            eval = [m](double x) {
                return mean_bound_general_threshold(m.v_second_moment, m.max_abs, x);
            };
        else if (o.family == "mean-general-prob")
            eval = [m](double t) { return mean_bound_general_prob_var(m.var_z, m.max_abs, t); };
        else if (o.family == "general-d-form") {
            const double d_mean_sq =
                m.var_z * (static_cast<double>(n) - 1.0) / static_cast<double>(n);
            eval = [m, d_mean_sq](double t) {
                return mean_bound_general_prob_d(d_mean_sq, m.max_abs_d, t);
            };
        } else if (o.family == "gaussian-tail-form")
            eval = [m](double x) { return gaussian_tail_form(m.d_ratio, x); };
        else if (o.family == "median-pos") {
            squared_sum_median_mode sq_mode;
            sq_mode.exact = mode.exact;
            sq_mode.b = mode.b;
            sq_mode.seed = mode.exact ? 0 : derive_stream(*o.seed, 1);
            const double med_sq = median_of_squared_sum(a, sq_mode);
            meta["median_squared_sum"] = med_sq;
            eval = [m, med_sq](double x) { return median_bound_pos(med_sq, m.max_abs, x); };
        } else { // sqrt-median-upper / lower / two-sided
            const perm_sum_distribution dist =
                mode.exact ? exact_distribution(a) : sample_distribution(a, mode.b, *o.seed);
            const double med = distribution_median(dist);
            meta["median_z"] = med;
            const tail_side side = o.family == "sqrt-median-upper"   ? tail_side::upper
                                   : o.family == "sqrt-median-lower" ? tail_side::lower
                                                                     : tail_side::two_sided;
            eval = [m, med, side](double t) { return sqrt_median_bound(med, m.max_abs, t, side); };
        }
        if (!mode.exact) meta["seed"] = *o.seed;
    }

    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "t_or_x,raw_bound,capped_bound,threshold\n";
    bool have_constants = false;
    for (double in : inputs) {
        const bound_evaluation e = eval(in);
        csv << in << ',' << e.probability_bound << ',' << e.capped() << ','
            << e.z_threshold.value_or(in) << '\n';
        if (!have_constants) {
            meta["constants"] = e.constants;
            meta["note"] = e.note;
            have_constants = true;
        }
    }
    write_text(o.common.out, csv.str());
    if (!o.meta_path.empty()) write_text(o.meta_path, render_report("bounds-meta", meta));
    return 0;
}

// ------------------------------------------------------------------ tails

struct tails_opts {
    common_opts common;
    std::string matrix_path;
    std::string center_text = "mean";
    std::size_t grid_points = 64;
    std::string mode_text = "exact";
    std::optional<std::uint64_t> seed;
    std::string meta_path;
    std::string dump_dist_path;
};

int run_tails(const tails_opts& o) {
    if (o.common.handled_constants()) return 0;
    require(!o.matrix_path.empty(), "tails needs --matrix");
    require(o.center_text == "mean" || o.center_text == "median",
            "--center must be 'mean' or 'median'");
    const mode_flags mode = parse_mode(o.mode_text);
    require(mode.exact || o.seed.has_value(), "--mode mc:B needs --seed");

    const coefficient_matrix a = read_matrix_csv(o.matrix_path);
    const perm_sum_distribution dist =
        mode.exact ? exact_distribution(a) : sample_distribution(a, mode.b, *o.seed);
    const curve_center center =
        o.center_text == "mean" ? curve_center::mean : curve_center::median;
    const double cv = compute_tail_curve(dist, center, {0.0}).centering_value;
    const tail_curve curve = compute_tail_curve(dist, center, default_grid(dist, cv, o.grid_points));

    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "t,tail_prob\n";
    for (std::size_t k = 0; k < curve.grid.size(); ++k)
        csv << curve.grid[k] << ',' << curve.tail_probs[k] << '\n';
    write_text(o.common.out, csv.str());

    if (!o.meta_path.empty()) write_text(o.meta_path, render_report("tails-meta", to_json(curve)));
    if (!o.dump_dist_path.empty()) {
        std::ostringstream vals;
        vals << std::setprecision(17);
        vals << "value\n";
        for (double v : dist.values) vals << v << '\n';
        write_text(o.dump_dist_path, vals.str());
    }
    return 0;
}

// ----------------------------------------------------------------- verify

sweep_spec sweep_spec_from_json(const json& j) {
    try {
        sweep_spec s;
        s.generator.name = j.at("generator").get<std::string>();
        s.generator.constant_value = j.value("generator_constant", 1.0);
        s.n_list = j.at("n_list").get<std::vector<std::size_t>>();
        s.matrices_per_n = j.value("matrices_per_n", std::size_t{1});
        s.families = j.at("families").get<std::vector<std::string>>();
        s.exact = j.value("exact", true);
        s.mc_b = j.value("mc_b", std::uint64_t{0});
        s.seed = j.at("seed").get<std::uint64_t>();
        s.grid_points = j.value("grid_points", std::size_t{64});
        return s;
    } catch (const json::exception& e) {
        throw parse_error(std::string("sweep spec: ") + e.what());
    }
}

struct verify_opts {
    common_opts common;
    std::string spec_path;
};

int run_verify(const verify_opts& o) {
    if (o.common.handled_constants()) return 0;
    require(!o.spec_path.empty(), "verify needs --spec");
    const sweep_report rep = run_sweep(sweep_spec_from_json(load_json(o.spec_path)));
    write_text(o.common.out, render_report("verify", to_json(rep)));
    return 0;
}

// -------------------------------------------------------------- indep-test

struct indep_opts {
    common_opts common;
    std::string data_path;
    std::string kernel_text;
    std::optional<double> sup_norm;
    std::optional<double> alpha;
    std::string mode_text = "exact";
    std::optional<std::uint64_t> seed;
    bool diagnostics = false;
};

int run_indep(const indep_opts& o) {
    if (o.common.handled_constants()) return 0;
    require(!o.data_path.empty(), "indep-test needs --data");
    require(!o.kernel_text.empty(), "indep-test needs --kernel");
    require(o.alpha.has_value(), "indep-test needs --alpha");
    const mode_flags mode = parse_mode(o.mode_text);
    require(mode.exact || o.seed.has_value(), "--mode mc:B needs --seed");

    const paired_sample s = read_paired_csv(o.data_path);
    const kernel_spec k = parse_kernel(o.kernel_text, o.sup_norm);
    critical_value_mode cv_mode;
    cv_mode.exact = mode.exact;
    cv_mode.b = mode.b;
    cv_mode.seed = mode.exact ? 0 : *o.seed;
    const test_report rep = run_test(s, k, *o.alpha, cv_mode, o.diagnostics);
    write_text(o.common.out, render_report("indep-test", to_json(rep)));
    return 0;
}

// ------------------------------------------------------------- power-check

struct power_opts {
    common_opts common;
    std::string spec_path;
};

int run_power_check(const power_opts& o) {
    if (o.common.handled_constants()) return 0;
    require(!o.spec_path.empty(), "power-check needs --spec");
    const json spec = load_json(o.spec_path);

    std::string kind, kernel_text, mode_text;
    paired_generator_spec gen;
    std::optional<double> sup_norm;
    std::size_t n = 0;
    double alpha = 0.0;
    std::uint64_t trials = 0, seed = 0;
    double beta = 0.2;
    std::optional<population_values> pop;
    try {
        kind = spec.at("kind").get<std::string>();
        const json& g = spec.at("generator");
        gen.name = g.at("name").get<std::string>();
        if (g.contains("params"))
            gen.params = g.at("params").get<std::map<std::string, double>>();
        kernel_text = spec.at("kernel").get<std::string>();
        if (spec.contains("sup_norm")) sup_norm = spec.at("sup_norm").get<double>();
        n = spec.at("n").get<std::size_t>();
        alpha = spec.at("alpha").get<double>();
        trials = spec.at("trials").get<std::uint64_t>();
        seed = spec.at("seed").get<std::uint64_t>();
        mode_text = spec.value("mode", std::string("exact"));
        beta = spec.value("beta", 0.2);
        if (spec.contains("population")) {
            const json& p = spec.at("population");
            population_values pv;
            pv.expected_t = p.at("expected_t").get<double>();
            pv.m_p = p.at("m_p").get<double>();
            pv.m_indep = p.at("m_indep").get<double>();
            pv.beta = p.value("beta", beta);
            pop = pv;
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("experiment spec: ") + e.what());
    }
    require(kind == "level" || kind == "power", "experiment kind must be 'level' or 'power'");

    const kernel_spec k = parse_kernel(kernel_text, sup_norm);
    const mode_flags mode = parse_mode(mode_text);
    critical_value_mode cv_mode;
    cv_mode.exact = mode.exact;
    cv_mode.b = mode.b;

    json echo{{"kind", kind},
              {"generator", json{{"name", gen.name}, {"params", gen.params}}},
              {"kernel", kernel_text},
              {"n", n},
              {"alpha", alpha},
              {"trials", trials},
              {"seed", seed},
              {"mode", mode_text}};
    json payload{{"spec", echo}};
    if (kind == "level") {
        payload["result"] = to_json(level_simulation(gen, k, n, alpha, trials, seed, cv_mode));
    } else {
        echo["beta"] = beta;
        payload["spec"] = echo;
        payload["result"] =
            to_json(power_simulation(gen, k, n, alpha, trials, seed, cv_mode, pop, beta));
    }
    write_text(o.common.out, render_report(kind == "level" ? "level" : "power", payload));
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"concentration bounds and permutation tests for randomly permuted sums"};
    app.require_subcommand(0, 1);
    bool top_constants = false;
    app.add_flag("--constants", top_constants,
                 "print the frozen constant table as JSON and exit");

    moments_opts mo;
    CLI::App* moments = app.add_subcommand("moments", "closed-form moments of a permuted sum");
    mo.common.attach(moments);
    moments->add_option("--matrix", mo.matrix_path, "coefficient matrix CSV");
    moments->add_option("--condition-r", mo.condition_r,
                        "also report the order-r and max Hoeffding condition ratios");
    moments->add_option("--lindeberg-eps", mo.lindeberg_eps,
                        "also report the Lindeberg sum at this epsilon");

    bounds_opts bo;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate a tail bound family on a grid");
    bo.common.attach(bounds);
    bounds->add_option("--matrix", bo.matrix_path, "coefficient matrix CSV");
    bounds->add_option("--family", bo.family, "bound family name");
    bounds->add_option("--grid", bo.grid_text, "t0:t1:points evenly spaced inclusive grid");
    bounds->add_option("--x", bo.x_values, "explicit exponent-scale inputs (threshold forms)");
    bounds->add_option("--t", bo.t_values, "explicit deviation inputs (probability forms)");
    bounds->add_option("--v", bo.v_proxy, "variance proxy for the classical Bernstein forms");
    bounds->add_option("--c", bo.c_scale, "scale parameter for the classical Bernstein forms");
    bounds->add_option("--mode", bo.mode_text, "exact | mc:B (median centerings only)");
    bounds->add_option("--seed", bo.seed, "RNG seed, required with mc mode");
    bounds->add_option("--meta", bo.meta_path, "write JSON metadata (inputs and constants) here");

    tails_opts to;
    CLI::App* tails = app.add_subcommand("tails", "empirical deviation tail of a permuted sum");
    to.common.attach(tails);
    tails->add_option("--matrix", to.matrix_path, "coefficient matrix CSV");
    tails->add_option("--center", to.center_text, "mean | median");
    tails->add_option("--grid-points", to.grid_points, "number of thresholds (default 64)");
    tails->add_option("--mode", to.mode_text, "exact | mc:B");
    tails->add_option("--seed", to.seed, "RNG seed, required with mc mode");
    tails->add_option("--meta", to.meta_path, "write JSON curve metadata here");
    tails->add_option("--dump-dist", to.dump_dist_path, "write the distribution values here");

    verify_opts vo;
    CLI::App* verify = app.add_subcommand("verify", "run a bound-domination sweep from a spec");
    vo.common.attach(verify);
    verify->add_option("--spec", vo.spec_path, "sweep spec JSON");

    indep_opts io;
    CLI::App* indep = app.add_subcommand("indep-test", "permutation test of independence");
    io.common.attach(indep);
    indep->add_option("--data", io.data_path, "paired sample CSV (2k columns)");
    indep->add_option("--kernel", io.kernel_text,
                      "product | gaussian:sigma | haar:delta | coincidence:delta");
    indep->add_option("--sup-norm", io.sup_norm, "declared kernel sup-norm override");
    indep->add_option("--alpha", io.alpha, "test level in (0,1)");
    indep->add_option("--mode", io.mode_text, "exact | mc:B");
    indep->add_option("--seed", io.seed, "RNG seed, required with mc mode");
    indep->add_flag("--diagnostics", io.diagnostics,
                    "include quantile bounds and plug-in moments in the report");

    power_opts po;
    CLI::App* power = app.add_subcommand("power-check", "level/power simulation from a spec");
    po.common.attach(power);
    power->add_option("--spec", po.spec_path, "experiment spec JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    apply_exact_limit_env();

    if (app.got_subcommand(moments)) return run_moments(mo);
    if (app.got_subcommand(bounds)) return run_bounds(bo);
    if (app.got_subcommand(tails)) return run_tails(to);
    if (app.got_subcommand(verify)) return run_verify(vo);
    if (app.got_subcommand(indep)) return run_indep(io);
    if (app.got_subcommand(power)) return run_power_check(po);
    if (top_constants) {
        write_text("", render_report("constants", constants_json()));
        return 0;
    }
    std::cerr << app.help();
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return 1;
    } catch (const kernel_bound_violation& e) {
        std::cerr << "error: kernel-bound: " << e.what() << "\n";
        return 1;
    } catch (const degenerate_input_error& e) {
        std::cerr << "error: degenerate-input: " << e.what() << "\n";
        return 1;
    } catch (const enumeration_limit_error& e) {
        std::cerr << "error: enumeration-limit: " << e.what() << "\n";
        return 1;
    } catch (const family_not_applicable_error& e) {
        std::cerr << "error: family-not-applicable: " << e.what() << "\n";
        return 1;
    } catch (const invalid_size_error& e) {
        std::cerr << "error: invalid-size: " << e.what() << "\n";
        return 1;
    } catch (const dimension_error& e) {
        std::cerr << "error: dimension: " << e.what() << "\n";
        return 1;
    } catch (const invalid_parameter_error& e) {
        std::cerr << "error: invalid-parameter: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
