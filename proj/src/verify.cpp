#include "nodal/verify.hpp"

#include <algorithm>
#include <cmath>

#include "nodal/closed_forms.hpp"
#include "nodal/mnf.hpp"

namespace nodal {

namespace {

// Largest m >= 0 with binom(m,2) < bound; requires bound >= 1.
i64 largest_binom2_below(i64 bound) {
    i64 m = static_cast<i64>((1.0 + std::sqrt(8.0 * static_cast<double>(bound))) / 2.0);
    while (m > 0 && binom2(m) >= bound) --m;
    while (binom2(m + 1) < bound) ++m;
    return m;
}

// Largest degree t in [1, s] with binom(t-1,2) < x < d - binom(t,2),
// or 0 when no degree qualifies. Both conditions are downward closed in t,
// so the qualifying set is an interval starting at 1.
i64 max_forcing_degree(i64 d, i64 s, i64 x) {
    if (x <= 0 || x >= d) return 0;
    i64 t_left = largest_binom2_below(x) + 1; // binom(t-1,2) < x
    i64 t_right = largest_binom2_below(d - x);
    i64 t = std::min({s, t_left, t_right});
    return t >= 1 ? t : 0;
}

} // namespace

i64 forced_descent_forward(i64 d, i64 s, i64 j, i64 value) {
    require(d >= 3, "degree must be at least 3");
    require(s >= 2, "s must be at least 2");
    i64 t = max_forcing_degree(d, s, checked_sub(checked_add(j, 1), value));
    return t > 0 ? t - 1 : 0;
}

i64 forced_ascent_backward(i64 d, i64 s, i64 j, i64 value) {
    require(d >= 3, "degree must be at least 3");
    require(s >= 2, "s must be at least 2");
    i64 t = max_forcing_degree(d, s, checked_add(checked_sub(d - 1, j), value));
    return t > 0 ? t - 1 : 0;
}

StepVerdict forward_step_verdict(i64 d, i64 s, i64 n, i64 j, i64 value) {
    require(n >= 3, "n must be at least 3");
    i64 t = max_forcing_degree(d, s, j + 1 - value);
    if (t > 0 && t - 1 > n - 2)
        return {j, t, t - 1, StepClause::forward_step};
    return {j, std::nullopt, n - 2, StepClause::floor};
}

StepVerdict backward_step_verdict(i64 d, i64 s, i64 n, i64 j, i64 value) {
    require(n >= 3, "n must be at least 3");
    i64 t = max_forcing_degree(d, s, d - j - 1 + value);
    if (t > 0 && t - 1 > n - 2)
        return {j, t, t - 1, StepClause::backward_step};
    return {j, std::nullopt, n - 2, StepClause::floor};
}

std::vector<NodeFunction> enumerate_admissible(const EnumerationQuery& q) {
    const i64 d = q.d, n = q.n, s = q.s, a = q.alpha, delta = q.delta;
    require(d >= 3, "degree must be at least 3");
    require(d <= q.degree_cap, "degree exceeds the enumeration cap");
    require(n >= 3, "n must be at least 3");
    require(s >= 2, "s must be at least 2");
    require(a >= 1 && a <= d - 2, "alpha must lie in [1, d-2]");
    require(delta >= 1, "delta must be positive");

    std::vector<NodeFunction> out;

    // Values below alpha are forced to j+1.
    const i64 ascending_sum = binom2(a + 1);

    if (a == d - 2) {
        // No free region: the whole function is the ascending ramp.
        if (n - 2 == d - 2 && delta == ascending_sum) {
            std::vector<i64> vals(static_cast<std::size_t>(d - 2));
            for (i64 j = 0; j <= d - 3; ++j) vals[j] = j + 1;
            out.emplace_back(d, std::move(vals));
        }
        return out;
    }

    // Free region [a, d-3], filled backward from the forced endpoint n-2.
    // Budget left for the region:
    const i64 budget = delta - ascending_sum;
    if (budget < 0) return out;

    std::vector<i64> region(static_cast<std::size_t>(d - 2 - a));
    auto region_at = [&](i64 j) -> i64& { return region[j - a]; };

    // Upper envelope: the chain of floor descents from v(a) <= a.
    auto upper = [&](i64 j) { return a - (n - 2) * (j - a); };

    region_at(d - 3) = n - 2;
    if (n - 2 > upper(d - 3)) return out;
    // Forced ascent entering the support from beyond it.
    if (n - 2 < forced_ascent_backward(d, s, d - 2, 0)) return out;

    auto emit = [&]() {
        // Last backward constraint, against the ascending ramp at alpha-1.
        if (a < region_at(a) + forced_ascent_backward(d, s, a, region_at(a)))
            return;
        std::vector<i64> vals(static_cast<std::size_t>(d - 2));
        for (i64 j = 0; j < a; ++j) vals[j] = j + 1;
        for (i64 j = a; j <= d - 3; ++j) vals[j] = region_at(j);
        NodeFunction f(d, std::move(vals));
        if (q.forward_filter) {
            for (i64 j = a; j <= d - 3; ++j) {
                i64 drop = std::max(forced_descent_forward(d, s, j, f.value(j)),
                                    n - 2);
                if (f.value(j + 1) > f.value(j) - drop) return;
            }
        }
        out.push_back(std::move(f));
    };

    // DFS over values at j-1, given the value at j; used is the region sum
    // chosen so far.
    auto extend = [&](auto&& self, i64 j, i64 used) -> void {
        if (j == a) {
            if (used == budget) emit();
            return;
        }
        const i64 v = region_at(j);
        i64 lo = v + std::max(forced_ascent_backward(d, s, j, v), n - 2);
        i64 hi = upper(j - 1);
        const i64 below = j - 1 - a; // indices a .. j-2 still to fill
        for (i64 x = lo; x <= hi; ++x) {
            i64 next_used = used + x;
            if (next_used > budget) break;
            // Remaining values grow by at least n-2 per backward step and
            // stay under the upper envelope.
            i64 min_rest = below * x + (n - 2) * binom2(below + 1);
            i64 max_rest = below * a - (n - 2) * binom2(below);
            if (next_used + min_rest > budget) break;
            if (next_used + max_rest < budget) continue;
            region_at(j - 1) = x;
            self(self, j - 1, next_used);
        }
    };

    extend(extend, d - 3, n - 2);

    std::sort(out.begin(), out.end(),
              [](const NodeFunction& x, const NodeFunction& y) {
                  return x.values() < y.values();
              });
    return out;
}

std::vector<NodeFunction> enumerate_admissible(i64 d, i64 n, i64 s, i64 alpha,
                                               i64 delta) {
    EnumerationQuery q;
    q.d = d;
    q.n = n;
    q.s = s;
    q.alpha = alpha;
    q.delta = delta;
    return enumerate_admissible(q);
}

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::castelnuovo: return "castelnuovo";
        case Tag::on_quadric: return "on-quadric";
        case Tag::halphen: return "halphen";
        case Tag::ci: return "ci";
        case Tag::minimal_alpha: return "minimal-alpha";
        case Tag::minimal_node_postulation: return "minimal-node-postulation";
    }
    return "unknown";
}

std::set<Tag> classify(const CurveParams& p, const NodeFunction& f) {
    auto report = node_function_admissible(f, p);
    require(report.admissible, "classify requires an admissible node function");

    std::set<Tag> tags;
    const i64 d = p.d;

    if (castelnuovo_phi(d, p.r).phi == f) tags.insert(Tag::castelnuovo);

    if (p.r == 3 && p.alpha <= d - 4 && f.value(d - 4) == 2)
        tags.insert(Tag::on_quadric);

    if (p.r == 3 && d > p.s * (p.s - 1)) {
        auto dec = hgp_decomposition(d, p.s);
        auto halphen = halphen_node_function(p.s, dec.u, dec.k);
        if (halphen.function == f) {
            tags.insert(Tag::halphen);
            if (dec.k == 0) tags.insert(Tag::ci);
        }
    }

    if (p.r == 3 && p.alpha == ceil_div(d - 2, 2))
        tags.insert(Tag::minimal_alpha);

    if (p.alpha >= alpha_bar(d, p.s, p.n) &&
        minimal_node_function(d, p.s, p.n, p.alpha).function == f)
        tags.insert(Tag::minimal_node_postulation);

    return tags;
}

CatalogEntry make_catalog_entry(const CurveParams& p, const NodeFunction& f) {
    return CatalogEntry{p, f, classify(p, f)};
}

} // namespace nodal
