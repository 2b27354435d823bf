#pragma once

#include <vector>

#include "nodal/core.hpp"

namespace nodal {

/// The descending envelope on [0, d-3]: value n-2 at d-3, and at each step
/// backward the value grows by max{t-1, n-2}, t the largest degree <= s
/// forcing an ascent there.
std::vector<i64> delta_bar(i64 d, i64 s, i64 n);

struct MinimalNodeFunction {
    NodeFunction function;
    i64 delta; // sum over the support, returned alongside the sequence
};

/// The lower envelope for node functions with invariants (d, s, n, alpha):
/// j+1 below alpha, the descending envelope from alpha on.
/// Requires alpha_bar(d, s, n) <= alpha <= d-2.
MinimalNodeFunction minimal_node_function(i64 d, i64 s, i64 n, i64 alpha);

/// Least j with delta_bar(j) <= j (taking the envelope as 0 past d-3, so the
/// result is at most d-2). A lower bound for alpha.
i64 alpha_bar(i64 d, i64 s, i64 n);

/// (d-1)(d-2)/2 minus the sum of the minimal node function.
i64 genus_upper_bound(i64 d, i64 s, i64 n, i64 alpha);

} // namespace nodal
