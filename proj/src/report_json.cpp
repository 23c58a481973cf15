#include "permsum/report_json.hpp"

#include <cmath>

#include "permsum/constants.hpp"
#include "permsum/errors.hpp"

namespace permsum {

using nlohmann::json;

namespace {

const char* verdict_name(domination_report::verdict_t v) {
    switch (v) {
    case domination_report::verdict_t::all_dominated: return "all_dominated";
    case domination_report::verdict_t::violations_found: return "violations_found";
    case domination_report::verdict_t::degenerate: return "degenerate";
    }
    return "unknown";
}

void check_finite(const json& j, const std::string& path) {
    if (j.is_number_float() && !std::isfinite(j.get<double>()))
        throw invalid_parameter_error("non-finite number in report at " + path);
    if (j.is_object())
        for (auto it = j.begin(); it != j.end(); ++it) check_finite(it.value(), path + "." + it.key());
    if (j.is_array())
        for (std::size_t i = 0; i < j.size(); ++i)
            check_finite(j[i], path + "[" + std::to_string(i) + "]");
}

} // namespace

json to_json(const matrix_moments& m) {
    return json{{"mean_z", m.mean_z},   {"var_z", m.var_z},
                {"V", m.v_second_moment}, {"M", m.max_abs},
                {"max_abs_d", m.max_abs_d}, {"d_ratio", m.d_ratio},
                {"degenerate", m.degenerate}};
}

json to_json(const bound_evaluation& e) {
    json j{{"family", e.family},
           {"input", e.input},
           {"probability_bound", e.probability_bound},
           {"capped_bound", e.capped()},
           {"constants", e.constants},
           {"note", e.note}};
    if (e.z_threshold) j["z_threshold"] = *e.z_threshold;
    if (e.threshold_split) {
        j["threshold_sqrt_part"] = e.threshold_split->first;
        j["threshold_linear_part"] = e.threshold_split->second;
    }
    return j;
}

json to_json(const tail_curve& c) {
    return json{{"center", c.center == curve_center::mean ? "mean" : "median"},
                {"centering_value", c.centering_value},
                {"grid", c.grid},
                {"tail_probs", c.tail_probs},
                {"exact_source", c.exact_source},
                {"sample_size", c.sample_size},
                {"seed", c.seed}};
}

json to_json(const domination_row& r) {
    return json{{"t", r.t},
                {"empirical_tail", r.empirical_tail},
                {"raw_bound", r.raw_bound},
                {"capped_bound", r.capped_bound},
                {"mc_margin", r.mc_margin},
                {"dominated", r.dominated}};
}

json to_json(const domination_report& r) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    return json{{"family", r.family},
                {"rows", rows},
                {"violations", r.violations},
                {"verdict", verdict_name(r.verdict)}};
}

json to_json(const sweep_spec& s) {
    return json{{"generator", s.generator.name},
                {"generator_constant", s.generator.constant_value},
                {"n_list", s.n_list},
                {"matrices_per_n", s.matrices_per_n},
                {"families", s.families},
                {"exact", s.exact},
                {"mc_b", s.mc_b},
                {"seed", s.seed},
                {"grid_points", s.grid_points}};
}

json to_json(const sweep_report& r) {
    json matrices = json::array();
    for (const auto& m : r.matrices) {
        json fams = json::array();
        for (const auto& f : m.family_reports) fams.push_back(to_json(f));
        matrices.push_back(json{{"n", m.n},
                                {"index", m.index},
                                {"matrix_seed", m.matrix_seed},
                                {"families", fams}});
    }
    return json{{"spec", to_json(r.spec)},
                {"matrices", matrices},
                {"all_dominated", r.all_dominated}};
}

json to_json(const test_report& r) {
    json j{{"n", r.n},
           {"kernel", r.kernel_name},
           {"kernel_params", r.kernel_params},
           {"alpha", r.alpha},
           {"exact", r.exact_mode},
           {"statistic", r.statistic},
           {"critical_value", r.critical_value},
           {"reject", r.reject}};
    if (r.sup_norm) j["sup_norm"] = *r.sup_norm;
    if (!r.exact_mode) {
        j["mc_b"] = r.mc_b;
        j["seed"] = r.seed;
    }
    if (r.diagnostics) {
        const test_diagnostics& d = *r.diagnostics;
        json dj{{"conditional_variance", d.conditional_variance},
                {"conditional_variance_exact", d.conditional_variance_exact},
                {"hoeffding_quantile_bound", d.hoeffding_quantile_bound},
                {"m_p_hat", d.m_p_hat},
                {"m_indep_hat", d.m_indep_hat}};
        if (d.conditional_quantile_bound)
            dj["conditional_quantile_bound"] = *d.conditional_quantile_bound;
        if (d.plugin_variance_bound) {
            dj["plugin_variance_bound_sharp"] = d.plugin_variance_bound->sharp;
            dj["plugin_variance_bound_loose"] = d.plugin_variance_bound->loose;
        }
        j["diagnostics"] = dj;
    }
    return j;
}

json to_json(const simulation_result& r) {
    return json{{"trials", r.trials}, {"rejections", r.rejections}, {"rate", r.rate}};
}

json to_json(const power_result& r) {
    json j{{"simulation", to_json(r.sim)}, {"population_estimated", r.population_estimated}};
    if (r.population)
        j["population"] = json{{"expected_t", r.population->expected_t},
                               {"m_p", r.population->m_p},
                               {"m_indep", r.population->m_indep},
                               {"beta", r.population->beta}};
    auto put = [&](const char* key, const std::optional<second_kind_result>& s) {
        if (s) j[key] = json{{"threshold", s->threshold}, {"satisfied", s->satisfied}};
    };
    put("second_kind_chebyshev", r.chebyshev);
    put("second_kind_hoeffding", r.hoeffding);
    put("second_kind_sharp", r.sharp);
    return j;
}

json constants_json() {
    json arr = json::array();
    for (const auto& e : constants::constant_table())
        arr.push_back(json{{"name", e.name}, {"value", e.value}, {"expression", e.expression}});
    return arr;
}

std::string render_report(const std::string& kind, const json& payload) {
    json root{{"schema_version", kReportSchemaVersion}, {"kind", kind}, {"report", payload}};
    check_finite(root, "$");
    return root.dump(2) + "\n";
}

} // namespace permsum
