#include "permsum/tails.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "permsum/errors.hpp"
#include "permsum/moments.hpp"

namespace permsum {

namespace {

std::vector<double> sorted_copy(const std::vector<double>& v) {
    std::vector<double> s(v);
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<double> sorted_abs_devs(const std::vector<double>& v, double center) {
    std::vector<double> s;
    s.reserve(v.size());
    for (double x : v) s.push_back(std::fabs(x - center));
    std::sort(s.begin(), s.end());
    return s;
}

double frac_ge(const std::vector<double>& sorted, double thr) {
    return static_cast<double>(sorted.end() - std::lower_bound(sorted.begin(), sorted.end(), thr)) /
           static_cast<double>(sorted.size());
}

double frac_gt(const std::vector<double>& sorted, double thr) {
    return static_cast<double>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), thr)) /
           static_cast<double>(sorted.size());
}

double frac_le(const std::vector<double>& sorted, double thr) {
    return static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), thr) -
                               sorted.begin()) /
           static_cast<double>(sorted.size());
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t k = 0; k < points; ++k)
        g[k] = points > 1 ? lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1)
                          : lo;
    return g;
}

// Smallest x whose threshold reaches target (thresholds are increasing in x).
double solve_threshold_reach(const std::function<double(double)>& threshold_at, double target) {
    if (target <= 0.0) return 1.0;
    double hi = 1.0;
    for (int i = 0; i < 200 && threshold_at(hi) < target; ++i) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (threshold_at(mid) < target ? lo : hi) = mid;
    }
    return hi;
}

struct row_sink {
    bool exact;
    std::uint64_t sample_size;
    domination_report* rep;

    void add(double t, double empirical, const bound_evaluation& e) {
        domination_row r;
        r.t = t;
        r.empirical_tail = empirical;
        r.raw_bound = e.probability_bound;
        r.capped_bound = e.capped();
        r.mc_margin = exact ? 0.0
                            : 3.0 * std::sqrt(empirical * (1.0 - empirical) /
                                              static_cast<double>(sample_size));
        r.dominated = r.empirical_tail <= r.capped_bound + r.mc_margin;
        if (!r.dominated) rep->violations.push_back(rep->rows.size());
        rep->rows.push_back(r);
    }
};

const char* kMeanTailFamilies[] = {"chatterjee", "bdr", "mean-pos-prob", "mean-general-prob",
                                   "general-d-form"};

bool is_mean_tail_family(const std::string& f) {
    for (const char* s : kMeanTailFamilies)
        if (f == s) return true;
    return false;
}

} // namespace

bool family_is_matrix_applicable(const std::string& family) {
    static const char* names[] = {"chatterjee",        "bdr",
                                  "mean-pos",          "mean-pos-prob",
                                  "mean-general",      "mean-general-prob",
                                  "general-d-form",    "gaussian-tail-form",
                                  "median-pos",        "sqrt-median-upper",
                                  "sqrt-median-lower", "sqrt-median-two-sided"};
    for (const char* s : names)
        if (family == s) return true;
    return false;
}

bool family_requires_nonneg(const std::string& family) {
    static const char* names[] = {"chatterjee",        "mean-pos",          "mean-pos-prob",
                                  "median-pos",        "sqrt-median-upper", "sqrt-median-lower",
                                  "sqrt-median-two-sided"};
    for (const char* s : names)
        if (family == s) return true;
    return false;
}

tail_curve compute_tail_curve(const perm_sum_distribution& dist, curve_center center,
                              std::vector<double> grid) {
    if (dist.values.empty()) throw invalid_parameter_error("empty distribution");
    tail_curve c;
    c.center = center;
    c.centering_value = center == curve_center::mean
                            ? [&] {
                                  double s = 0.0;
                                  for (double v : dist.values) s += v;
                                  return s / static_cast<double>(dist.values.size());
                              }()
                            : distribution_median(dist);
    const std::vector<double> devs = sorted_abs_devs(dist.values, c.centering_value);
    c.grid = std::move(grid);
    c.tail_probs.reserve(c.grid.size());
    for (double t : c.grid) {
        if (t < 0.0) throw invalid_parameter_error("grid thresholds must be non-negative");
        c.tail_probs.push_back(frac_ge(devs, t));
    }
    c.exact_source = dist.exact();
    c.sample_size = dist.sample_size;
    c.seed = dist.seed;
    return c;
}

std::vector<double> default_grid(const perm_sum_distribution& dist, double center,
                                 std::size_t points) {
    double max_dev = 0.0;
    for (double v : dist.values) max_dev = std::max(max_dev, std::fabs(v - center));
    return linspace(0.0, max_dev, points);
}

domination_report domination_check(const tail_curve& curve,
                                   const std::vector<bound_evaluation>& evals) {
    if (evals.size() != curve.grid.size())
        throw dimension_error("one bound evaluation per grid point required");
    domination_report rep;
    rep.family = evals.empty() ? "" : evals.front().family;
    row_sink sink{curve.exact_source, curve.sample_size, &rep};
    for (std::size_t k = 0; k < evals.size(); ++k)
        sink.add(curve.grid[k], curve.tail_probs[k], evals[k]);
    rep.verdict = rep.violations.empty() ? domination_report::verdict_t::all_dominated
                                         : domination_report::verdict_t::violations_found;
    return rep;
}

domination_report check_family_domination(const coefficient_matrix& a,
                                          const perm_sum_distribution& dist,
                                          const std::string& family, std::size_t grid_points,
                                          std::uint64_t aux_seed) {
    if (!family_is_matrix_applicable(family))
        throw family_not_applicable_error("'" + family + "' is not a matrix tail family");
    if (family_requires_nonneg(family) && !a.non_negative())
        throw family_not_applicable_error("'" + family + "' requires non-negative entries");
    if (grid_points < 2) throw invalid_parameter_error("need at least 2 grid points");

    domination_report rep;
    rep.family = family;
    const matrix_moments m = compute_matrix_moments(a);
    if (m.max_abs == 0.0) {
        rep.verdict = domination_report::verdict_t::degenerate;
        return rep;
    }

    const bool exact = dist.exact();
    row_sink sink{exact, dist.sample_size, &rep};
    const std::size_t n = a.size();
    const double d_mean_sq = m.var_z * (static_cast<double>(n) - 1.0) / static_cast<double>(n);

    if (is_mean_tail_family(family)) {
        const std::vector<double> devs = sorted_abs_devs(dist.values, m.mean_z);
        const double max_dev = devs.back();
        for (double t : linspace(0.0, max_dev, grid_points)) {
            bound_evaluation e;
            if (family == "chatterjee")
                e = chatterjee_bound(m.mean_z, m.max_abs, t);
            else if (family == "bdr")
                e = bdr_bound(m.v_second_moment, m.max_abs, t);
            else if (family == "mean-pos-prob")
                e = mean_bound_pos_prob(m.v_second_moment, m.max_abs, t);
            else if (family == "mean-general-prob")
                e = mean_bound_general_prob_var(m.var_z, m.max_abs, t);
            else
                e = mean_bound_general_prob_d(d_mean_sq, m.max_abs_d, t);
            sink.add(t, frac_ge(devs, t), e);
        }
    } else if (family == "gaussian-tail-form") {
        if (m.degenerate) {
            rep.verdict = domination_report::verdict_t::degenerate;
            return rep;
        }
        const std::vector<double> devs = sorted_abs_devs(dist.values, m.mean_z);
        const double sd = std::sqrt(m.var_z);
        for (double x : linspace(0.0, devs.back() / sd, grid_points))
            sink.add(x, frac_ge(devs, x * sd), gaussian_tail_form(m.d_ratio, x));
    } else if (family == "mean-pos" || family == "mean-general") {
        const bool pos = family == "mean-pos";
        const std::vector<double> devs = sorted_abs_devs(dist.values, m.mean_z);
        auto eval = [&](double x) {
            return pos ? mean_bound_pos_threshold(m.v_second_moment, m.max_abs, x)
                       : mean_bound_general_threshold(m.v_second_moment, m.max_abs, x);
        };
        const double x_max =
            solve_threshold_reach([&](double x) { return *eval(x).z_threshold; }, devs.back());
        for (double x : linspace(0.0, x_max, grid_points)) {
            const bound_evaluation e = eval(x);
            sink.add(x, frac_ge(devs, *e.z_threshold), e);
        }
    } else if (family == "median-pos") {
        const median_interval med = distribution_median_interval(dist);
        const perm_sum_distribution sq_dist =
            exact ? exact_distribution(entrywise_square(a))
                  : sample_distribution(entrywise_square(a), dist.sample_size, aux_seed);
        const median_interval med_sq = distribution_median_interval(sq_dist);
        const double centers[] = {med.lower, med.midpoint(), med.upper};
        const double scales[] = {med_sq.lower, med_sq.midpoint(), med_sq.upper};
        for (double c : centers) {
            const std::vector<double> devs = sorted_abs_devs(dist.values, c);
            for (double s : scales) {
                const double x_max = solve_threshold_reach(
                    [&](double x) { return *median_bound_pos(s, m.max_abs, x).z_threshold; },
                    devs.back());
                for (double x : linspace(0.0, x_max, grid_points)) {
                    const bound_evaluation e = median_bound_pos(s, m.max_abs, x);
                    // the statement bounds the strict deviation probability
                    sink.add(x, frac_gt(devs, *e.z_threshold), e);
                }
            }
        }
    } else { // sqrt-median-upper / lower / two-sided
        const std::vector<double> raw = sorted_copy(dist.values);
        const median_interval med = distribution_median_interval(dist);
        const double sqrt_m = std::sqrt(m.max_abs);
        const double centers[] = {med.lower, med.midpoint(), med.upper};
        for (double c : centers) {
            const double root = std::sqrt(c);
            const double t_up = std::max(0.0, (std::sqrt(raw.back()) - root) / sqrt_m);
            const double t_lo = root / sqrt_m;
            double t_max = family == "sqrt-median-upper"   ? t_up
                           : family == "sqrt-median-lower" ? t_lo
                                                           : std::max(t_up, t_lo);
            for (double t : linspace(0.0, t_max, grid_points)) {
                double emp = 0.0;
                if (family != "sqrt-median-lower") // upper part
                    emp += frac_ge(raw, (root + t * sqrt_m) * (root + t * sqrt_m));
                if (family != "sqrt-median-upper") {
                    const double s = root - t * sqrt_m;
                    emp += s < 0.0 ? 0.0 : frac_le(raw, s * s);
                }
                const tail_side side = family == "sqrt-median-upper"   ? tail_side::upper
                                       : family == "sqrt-median-lower" ? tail_side::lower
                                                                       : tail_side::two_sided;
                sink.add(t, emp, sqrt_median_bound(c, m.max_abs, t, side));
            }
        }
    }

    rep.verdict = rep.violations.empty() ? domination_report::verdict_t::all_dominated
                                         : domination_report::verdict_t::violations_found;
    return rep;
}

sweep_report run_sweep(const sweep_spec& spec) {
    if (spec.n_list.empty()) throw invalid_parameter_error("n_list must not be empty");
    if (spec.families.empty()) throw invalid_parameter_error("families must not be empty");
    if (spec.matrices_per_n == 0) throw invalid_parameter_error("matrices_per_n must be positive");
    if (!spec.exact && spec.mc_b == 0)
        throw invalid_parameter_error("Monte Carlo mode needs a positive draw count");
    for (const std::string& f : spec.families) {
        if (!family_is_matrix_applicable(f))
            throw family_not_applicable_error("'" + f + "' is not a matrix tail family");
        if (family_requires_nonneg(f) && !generator_non_negative(spec.generator))
            throw family_not_applicable_error("'" + f + "' requires non-negative entries but '" +
                                              spec.generator.name + "' generates signed matrices");
    }

    sweep_report out;
    out.spec = spec;
    std::uint64_t running = 0;
    for (std::size_t n : spec.n_list) {
        for (std::size_t i = 0; i < spec.matrices_per_n; ++i, ++running) {
            sweep_matrix_report mr;
            mr.n = n;
            mr.index = i;
            mr.matrix_seed = derive_stream(spec.seed, running);
            const coefficient_matrix a = generate_matrix(spec.generator, n, mr.matrix_seed);
            const perm_sum_distribution dist =
                spec.exact ? exact_distribution(a)
                           : sample_distribution(a, spec.mc_b, derive_stream(mr.matrix_seed, 1));
            for (const std::string& f : spec.families) {
                mr.family_reports.push_back(check_family_domination(
                    a, dist, f, spec.grid_points, derive_stream(mr.matrix_seed, 2)));
                if (!mr.family_reports.back().all_dominated() &&
                    mr.family_reports.back().verdict != domination_report::verdict_t::degenerate)
                    out.all_dominated = false;
            }
            out.matrices.push_back(std::move(mr));
        }
    }
    return out;
}

} // namespace permsum
