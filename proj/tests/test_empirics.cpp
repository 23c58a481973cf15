#include "doctest.h"

#include <cmath>

#include "permsum/errors.hpp"
#include "permsum/moments.hpp"
#include "permsum/rng.hpp"
#include "permsum/tails.hpp"

using namespace permsum;
using doctest::Approx;

namespace {

coefficient_matrix identity2() { return coefficient_matrix(2, {1, 0, 0, 1}); }

} // namespace

TEST_CASE("tail curve of the 2x2 identity around its mean") {
    const perm_sum_distribution d = exact_distribution(identity2());
    const tail_curve c = compute_tail_curve(d, curve_center::mean, {0.0, 0.5, 1.0, 1.5});
    CHECK(c.centering_value == Approx(1.0).epsilon(1e-15));
    REQUIRE(c.tail_probs.size() == 4);
    CHECK(c.tail_probs[0] == 1.0);   // |v - 1| >= 0 always
    CHECK(c.tail_probs[1] == 1.0);   // both values deviate by exactly 1
    CHECK(c.tail_probs[2] == 1.0);   // threshold met with equality
    CHECK(c.tail_probs[3] == 0.0);
    CHECK(c.exact_source);
    CHECK(c.sample_size == 2);
}

TEST_CASE("tail curve of a constant matrix vanishes beyond zero") {
    const perm_sum_distribution d = exact_distribution(coefficient_matrix::constant(3, 5.0));
    const tail_curve c = compute_tail_curve(d, curve_center::median, {0.0, 1e-9, 1.0});
    CHECK(c.centering_value == 15.0);
    CHECK(c.tail_probs[0] == 1.0);
    CHECK(c.tail_probs[1] == 0.0);
    CHECK(c.tail_probs[2] == 0.0);
}

TEST_CASE("default grid spans the observed deviation range") {
    const perm_sum_distribution d = exact_distribution(identity2());
    const std::vector<double> g = default_grid(d, 1.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == Approx(1.0).epsilon(1e-15));
    for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] > g[k - 1]);
}

TEST_CASE("family applicability predicates") {
    CHECK(family_is_matrix_applicable("chatterjee"));
    CHECK(family_is_matrix_applicable("mean-general"));
    CHECK_FALSE(family_is_matrix_applicable("bernstein-classical-stat"));
    CHECK(family_requires_nonneg("chatterjee"));
    CHECK(family_requires_nonneg("median-pos"));
    CHECK(family_requires_nonneg("sqrt-median-upper"));
    CHECK_FALSE(family_requires_nonneg("mean-general"));
    CHECK_FALSE(family_requires_nonneg("general-d-form"));
}

TEST_CASE("every matrix family dominates an exact tail on small inputs") {
    splitmix64 gen(0xD1CE);
    std::vector<double> e(25);
    for (double& v : e) v = gen.uniform01();
    const coefficient_matrix pos(5, e);
    const perm_sum_distribution d = exact_distribution(pos);
    for (const char* family :
         {"chatterjee", "bdr", "mean-pos", "mean-pos-prob", "median-pos", "mean-general",
          "mean-general-prob", "general-d-form", "sqrt-median-upper", "sqrt-median-lower"}) {
        const domination_report r = check_family_domination(pos, d, family, 32);
        CAPTURE(family);
        CHECK(r.all_dominated());
        CHECK(r.violations.empty());
        CHECK_FALSE(r.rows.empty());
        for (const domination_row& row : r.rows) CHECK(row.mc_margin == 0.0);
    }

    std::vector<double> s(16);
    for (double& v : s) v = 2.0 * gen.uniform01() - 1.0;
    const coefficient_matrix signed_m(4, s);
    const perm_sum_distribution ds = exact_distribution(signed_m);
    for (const char* family : {"bdr", "mean-general", "mean-general-prob", "general-d-form"}) {
        const domination_report r = check_family_domination(signed_m, ds, family, 32);
        CAPTURE(family);
        CHECK(r.all_dominated());
    }
}

TEST_CASE("non-negative families reject signed matrices") {
    const coefficient_matrix m(2, {1, -1, 0, 1});
    const perm_sum_distribution d = exact_distribution(m);
    CHECK_THROWS_AS(check_family_domination(m, d, "chatterjee", 16), family_not_applicable_error);
    CHECK_THROWS_AS(check_family_domination(m, d, "no-such-family", 16),
                    family_not_applicable_error);
}

TEST_CASE("zero matrix yields a degenerate verdict") {
    const coefficient_matrix z = coefficient_matrix::constant(3, 0.0);
    const perm_sum_distribution d = exact_distribution(z);
    const domination_report r = check_family_domination(z, d, "mean-general", 16);
    CHECK(r.verdict == domination_report::verdict_t::degenerate);
    CHECK_FALSE(r.all_dominated());
}

TEST_CASE("monte carlo tails stay inside the three-sigma margin of the bound") {
    splitmix64 gen(0xFACE);
    std::vector<double> e(36);
    for (double& v : e) v = gen.uniform01();
    const coefficient_matrix a(6, e);
    std::size_t hits = 0;
    const std::size_t reps = 100;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        const perm_sum_distribution d = sample_distribution(a, 10000, derive_stream(404, rep));
        const domination_report r = check_family_domination(a, d, "mean-general-prob", 24);
        if (r.all_dominated()) ++hits;
    }
    // each row has a 3 sqrt(p(1-p)/B) allowance, so misses should be very rare
    CHECK(hits >= 99);
}

TEST_CASE("sweeps are deterministic in their seed") {
    sweep_spec spec;
    spec.generator.name = "iid-uniform";
    spec.n_list = {3, 4};
    spec.matrices_per_n = 2;
    spec.families = {"chatterjee", "mean-general"};
    spec.exact = true;
    spec.seed = 99;
    spec.grid_points = 16;

    const sweep_report a = run_sweep(spec);
    const sweep_report b = run_sweep(spec);
    REQUIRE(a.matrices.size() == 4);
    CHECK(a.all_dominated);
    REQUIRE(a.matrices.size() == b.matrices.size());
    for (std::size_t m = 0; m < a.matrices.size(); ++m) {
        CHECK(a.matrices[m].matrix_seed == b.matrices[m].matrix_seed);
        REQUIRE(a.matrices[m].family_reports.size() == b.matrices[m].family_reports.size());
        for (std::size_t f = 0; f < a.matrices[m].family_reports.size(); ++f) {
            const auto& ra = a.matrices[m].family_reports[f];
            const auto& rb = b.matrices[m].family_reports[f];
            REQUIRE(ra.rows.size() == rb.rows.size());
            for (std::size_t k = 0; k < ra.rows.size(); ++k) {
                CHECK(ra.rows[k].t == rb.rows[k].t);
                CHECK(ra.rows[k].empirical_tail == rb.rows[k].empirical_tail);
                CHECK(ra.rows[k].raw_bound == rb.rows[k].raw_bound);
            }
        }
    }
    // distinct matrices per (n, index) slot
    CHECK(a.matrices[0].matrix_seed != a.matrices[1].matrix_seed);
}

TEST_CASE("matrix generators produce what they claim") {
    for (const char* name : {"product", "iid-uniform", "sparse"}) {
        matrix_generator_spec spec{name, 1.0};
        CHECK(generator_non_negative(spec));
        const coefficient_matrix m = generate_matrix(spec, 5, 31);
        CHECK(m.non_negative());
        const coefficient_matrix again = generate_matrix(spec, 5, 31);
        CHECK(m.entries() == again.entries());
    }
    matrix_generator_spec rad{"iid-rademacher", 1.0};
    CHECK_FALSE(generator_non_negative(rad));
    const coefficient_matrix r = generate_matrix(rad, 4, 8);
    for (double v : r.entries()) CHECK((v == 1.0 || v == -1.0));

    matrix_generator_spec cst{"constant", 2.5};
    const coefficient_matrix c = generate_matrix(cst, 3, 0);
    for (double v : c.entries()) CHECK(v == 2.5);

    CHECK_THROWS_AS(generate_matrix({"nope", 1.0}, 3, 0), invalid_parameter_error);
    CHECK_THROWS_AS(generate_matrix({"product", 1.0}, 1, 0), invalid_size_error);
}
