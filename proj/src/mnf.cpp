#include "nodal/mnf.hpp"

#include <algorithm>

#include "nodal/verify.hpp"

namespace nodal {

std::vector<i64> delta_bar(i64 d, i64 s, i64 n) {
    require(d >= 3, "degree must be at least 3");
    require(s >= 2, "s must be at least 2");
    require(n >= 3, "n must be at least 3");

    std::vector<i64> v(static_cast<std::size_t>(d - 2));
    v[static_cast<std::size_t>(d - 3)] = n - 2;
    for (i64 j = d - 3; j >= 1; --j) {
        i64 t_part = forced_ascent_backward(d, s, j, v[static_cast<std::size_t>(j)]);
        i64 step = std::max(t_part, n - 2);
        v[static_cast<std::size_t>(j - 1)] =
            checked_add(v[static_cast<std::size_t>(j)], step);
    }
    return v;
}

namespace {

i64 alpha_bar_of(const std::vector<i64>& bar) {
    for (i64 j = 0; j < static_cast<i64>(bar.size()); ++j)
        if (bar[static_cast<std::size_t>(j)] <= j) return j;
    // The envelope vanishes past its support, so d-2 always qualifies.
    return static_cast<i64>(bar.size());
}

} // namespace

i64 alpha_bar(i64 d, i64 s, i64 n) {
    return alpha_bar_of(delta_bar(d, s, n));
}

MinimalNodeFunction minimal_node_function(i64 d, i64 s, i64 n, i64 alpha) {
    auto bar = delta_bar(d, s, n);
    i64 least = alpha_bar_of(bar);
    require(alpha >= least,
            "alpha below the least admissible value " + std::to_string(least) +
                "; the spliced function would exceed j+1 at j = alpha");
    require(alpha <= d - 2, "alpha must be at most d-2");

    std::vector<i64> vals(static_cast<std::size_t>(d - 2));
    i64 total = 0;
    for (i64 j = 0; j <= d - 3; ++j) {
        i64 v = j < alpha ? j + 1 : bar[static_cast<std::size_t>(j)];
        vals[static_cast<std::size_t>(j)] = v;
        total = checked_add(total, v);
    }
    return {NodeFunction(d, std::move(vals)), total};
}

i64 genus_upper_bound(i64 d, i64 s, i64 n, i64 alpha) {
    return checked_sub(binom2(d - 1), minimal_node_function(d, s, n, alpha).delta);
}

} // namespace nodal
