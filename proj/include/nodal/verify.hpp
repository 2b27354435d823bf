#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nodal/core.hpp"

namespace nodal {

enum class StepClause {
    floor,         // only the descent floor n-2 applies
    forward_step,  // degree-s forced descent at j -> j+1
    backward_step, // degree-s forced ascent at j -> j-1
};

struct StepVerdict {
    i64 j = 0;
    std::optional<i64> t_used; // the witness degree, when one fires
    i64 forced_change = 0;     // max{t-1, n-2}
    StepClause clause = StepClause::floor;
};

/// Largest forced descent t-1 at the step j -> j+1, over degrees t <= s with
/// binom(t-1,2) < j+1-value < d-binom(t,2). Zero when no degree qualifies.
i64 forced_descent_forward(i64 d, i64 s, i64 j, i64 value);

/// Largest forced ascent t-1 at the step j -> j-1, over degrees t <= s with
/// binom(t-1,2) < d-j-1+value < d-binom(t,2). Zero when no degree qualifies.
i64 forced_ascent_backward(i64 d, i64 s, i64 j, i64 value);

StepVerdict forward_step_verdict(i64 d, i64 s, i64 n, i64 j, i64 value);
StepVerdict backward_step_verdict(i64 d, i64 s, i64 n, i64 j, i64 value);

struct EnumerationQuery {
    i64 d = 0;
    i64 n = 3;
    i64 s = 2;
    i64 alpha = 0;
    i64 delta = 0;
    bool forward_filter = false; // also apply the forward forced descent
    i64 degree_cap = 40;
};

/// All node functions on [0, d-3] with the ascending prefix up to alpha,
/// endpoint n-2, descent floor n-2, the backward forced-ascent constraint
/// for the given s, and total sum delta. Lexicographic order on the values.
std::vector<NodeFunction> enumerate_admissible(const EnumerationQuery& q);

std::vector<NodeFunction> enumerate_admissible(i64 d, i64 n, i64 s, i64 alpha,
                                               i64 delta);

enum class Tag {
    castelnuovo,
    on_quadric,
    halphen,
    ci,
    minimal_alpha,
    minimal_node_postulation,
};

std::string tag_name(Tag t);

/// Tags a node function admissible for the given params against the known
/// extremal families. Reproducible from params + function alone.
std::set<Tag> classify(const CurveParams& p, const NodeFunction& f);

struct CatalogEntry {
    CurveParams params;
    NodeFunction function;
    std::set<Tag> tags;
};

CatalogEntry make_catalog_entry(const CurveParams& p, const NodeFunction& f);

} // namespace nodal
