#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "nodal/closed_forms.hpp"
#include "nodal/mnf.hpp"
#include "nodal/verify.hpp"

using namespace nodal;

TEST_CASE("forced descent going forward, degree 24") {
    CHECK(forced_descent_forward(24, 4, 15, 15) == 1); // degree 2 fires
    CHECK(forced_descent_forward(24, 4, 16, 14) == 2); // degree 3 fires
    CHECK(forced_descent_forward(24, 4, 18, 9) == 3);  // capped at s = 4
}

TEST_CASE("forced ascent going backward, degree 24") {
    CHECK(forced_ascent_backward(24, 4, 21, 1) == 2); // degree 3 fires
    CHECK(forced_ascent_backward(24, 4, 20, 3) == 3); // degree 4 fires
    CHECK(forced_ascent_backward(24, 4, 19, 6) == 3); // degree 5 fails a <= s
}

TEST_CASE("step verdicts carry the witness degree") {
    auto v = backward_step_verdict(24, 4, 3, 20, 3);
    CHECK(v.clause == StepClause::backward_step);
    REQUIRE(v.t_used.has_value());
    CHECK(*v.t_used == 4);
    CHECK(v.forced_change == 3);

    auto floor = backward_step_verdict(24, 4, 3, 15, 15);
    CHECK(floor.clause == StepClause::floor);
    CHECK_FALSE(floor.t_used.has_value());
    CHECK(floor.forced_change == 1);

    auto fwd = forward_step_verdict(24, 4, 3, 17, 12);
    CHECK(fwd.clause == StepClause::forward_step);
    CHECK(fwd.forced_change == 3);
}

TEST_CASE("enumeration finds the unique degree-6 function") {
    auto found = enumerate_admissible(6, 3, 3, 2, 6);
    REQUIRE(found.size() == 1);
    CHECK(found[0].values() == std::vector<i64>{1, 2, 2, 1});
}

TEST_CASE("enumeration finds the unique degree-12 function") {
    auto found = enumerate_admissible(12, 4, 2, 7, 42);
    REQUIRE(found.size() == 1);
    CHECK(found[0].values() ==
          std::vector<i64>{1, 2, 3, 4, 5, 6, 7, 7, 5, 2});
}

TEST_CASE("infeasible node counts give empty results") {
    CHECK(enumerate_admissible(8, 3, 2, 4, 40).empty());
    CHECK(enumerate_admissible(8, 3, 2, 4, 5).empty());
}

TEST_CASE("the degree cap is enforced") {
    EnumerationQuery q;
    q.d = 50;
    q.n = 3;
    q.s = 2;
    q.alpha = 30;
    q.delta = 600;
    CHECK_THROWS_AS(enumerate_admissible(q), std::invalid_argument);
    q.degree_cap = 60;
    CHECK_NOTHROW(enumerate_admissible(q));
}

TEST_CASE("enumerated functions pass the checker and dominate the envelope") {
    for (i64 d = 5; d <= 14; ++d)
        for (i64 s : {2, 3, 4})
            for (i64 alpha = alpha_bar(d, s, 3); alpha <= d - 2; ++alpha) {
                i64 low = minimal_node_function(d, s, 3, alpha).delta;
                for (i64 delta = low; delta <= low + 12; ++delta) {
                    auto found = enumerate_admissible(d, 3, s, alpha, delta);
                    auto mnf = minimal_node_function(d, s, 3, alpha).function;
                    for (auto& f : found) {
                        i64 g = binom2(d - 1) - delta;
                        auto p = curve_params(d, 3, 3, s, alpha, g);
                        auto report = node_function_admissible(f, p);
                        INFO("d=", d, " s=", s, " alpha=", alpha,
                             " delta=", delta);
                        CHECK(report.admissible);
                        for (i64 j = 0; j <= d - 3; ++j)
                            CHECK(f.value(j) >= mnf.value(j));
                    }
                }
            }
}

TEST_CASE("the minimal function is always enumerated at its own count") {
    for (i64 d = 5; d <= 16; ++d) {
        for (i64 alpha = ceil_div(d - 2, 2); alpha <= d - 3; ++alpha) {
            auto m = minimal_node_function(d, 2, 3, alpha);
            auto found = enumerate_admissible(d, 3, 2, alpha, m.delta);
            bool present = false;
            for (auto& f : found) present = present || f == m.function;
            INFO("d=", d, " alpha=", alpha);
            CHECK(present);
        }
        // alpha = d-2 is the genus-0 ramp, whose endpoint forces n = d.
        auto triangle = minimal_node_function(d, 2, 3, d - 2);
        auto found = enumerate_admissible(d, d, 2, d - 2, triangle.delta);
        REQUIRE(found.size() == 1);
        CHECK(found[0] == triangle.function);
    }
}

TEST_CASE("enumeration output is sorted and duplicate-free") {
    auto found = enumerate_admissible(14, 3, 3, 8, 60);
    for (std::size_t i = 1; i < found.size(); ++i)
        CHECK(found[i - 1].values() < found[i].values());
}

TEST_CASE("forward filter only narrows the result") {
    EnumerationQuery q;
    q.d = 14;
    q.n = 3;
    q.s = 3;
    q.alpha = 8;
    q.delta = 60;
    auto plain = enumerate_admissible(q);
    q.forward_filter = true;
    auto filtered = enumerate_admissible(q);
    CHECK(filtered.size() <= plain.size());
    for (auto& f : filtered) {
        bool present = false;
        for (auto& g : plain) present = present || f == g;
        CHECK(present);
    }
}

TEST_CASE("classification of the two-cubics intersection") {
    auto ci = ci_node_function(3, 0);
    auto p = curve_params(9, 3, 3, 3, 4, 10);
    auto tags = classify(p, ci.function);
    CHECK(tags == std::set<Tag>{Tag::halphen, Tag::ci, Tag::minimal_alpha,
                                Tag::minimal_node_postulation});
}

TEST_CASE("classification of the degree-8 maximal-genus curve in dimension 4") {
    NodeFunction f(8, {1, 2, 3, 4, 4, 2});
    auto p = curve_params(8, 4, 4, 2, 4, 5);
    auto tags = classify(p, f);
    CHECK(tags ==
          std::set<Tag>{Tag::castelnuovo, Tag::minimal_node_postulation});
}

TEST_CASE("classification of a type (5,3) curve on a quadric") {
    auto fam = s2_function(8, quadric_alpha_smooth(5, 3));
    auto p = curve_params(8, 3, 3, 2, 4, 8);
    auto tags = classify(p, fam.function);
    CHECK(tags.count(Tag::on_quadric) == 1);
    CHECK(tags.count(Tag::minimal_node_postulation) == 1);
    CHECK(tags.count(Tag::castelnuovo) == 0);
}

TEST_CASE("classification of the golden degree-24 sequence") {
    auto ci = ci_node_function(4, 2);
    auto p = curve_params(24, 3, 3, 4, 15, 73);
    auto tags = classify(p, ci.function);
    CHECK(tags == std::set<Tag>{Tag::ci, Tag::halphen,
                                Tag::minimal_node_postulation});
}

TEST_CASE("classify rejects inadmissible input") {
    NodeFunction broken(8, {1, 2, 3, 4, 4, 0});
    auto p = curve_params(8, 4, 4, 2, 4, 5);
    CHECK_THROWS_AS(classify(p, broken), std::invalid_argument);
}

TEST_CASE("linked families classify as maximal-genus curves") {
    for (i64 s = 2; s <= 6; ++s)
        for (i64 u = 0; u <= 3; ++u)
            for (i64 k = 0; k <= s - 1; ++k) {
                auto hal = halphen_node_function(s, u, k);
                i64 g = binom2(hal.d - 1) - hal.function.sum();
                auto p = curve_params(hal.d, 3, 3, s, hal.alpha, g);
                auto entry = make_catalog_entry(p, hal.function);
                INFO("s=", s, " u=", u, " k=", k);
                CHECK(entry.tags.count(Tag::halphen) == 1);
                CHECK(entry.tags.count(Tag::ci) == (k == 0 ? 1 : 0));
            }
}

TEST_CASE("backward steps along the envelope are tight") {
    for (auto [d, s, n] : std::vector<std::array<i64, 3>>{
             {24, 4, 3}, {18, 4, 3}, {13, 3, 3}, {16, 4, 4}, {25, 5, 3}}) {
        auto bar = delta_bar(d, s, n);
        for (i64 j = 1; j <= d - 3; ++j) {
            i64 step = bar[j - 1] - bar[j];
            i64 forced =
                std::max<i64>(forced_ascent_backward(d, s, j, bar[j]), n - 2);
            INFO("d=", d, " s=", s, " j=", j);
            CHECK(step == forced);
        }
    }
}
