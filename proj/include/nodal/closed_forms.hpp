#pragma once

#include <vector>

#include "nodal/core.hpp"

namespace nodal {

/// The unique (u, k) with d = s^2 + u*s - k, u >= 0, 0 <= k <= s-1.
/// Defined for d > s(s-1).
struct HgpDecomposition {
    i64 d = 0;
    i64 s = 0;
    i64 u = 0;
    i64 k = 0;

    friend bool operator==(const HgpDecomposition&,
                           const HgpDecomposition&) = default;
};

HgpDecomposition hgp_decomposition(i64 d, i64 s);

struct HgpBounds {
    HgpDecomposition decomposition;
    i64 alpha_lower; // d-2s-u+2 when k >= 1, d-2s-u+1 when k = 0
    i64 e_upper;     // d-3-alpha_lower
};

HgpBounds hgp_bounds(i64 d, i64 s);

/// Closed form of delta_bar(d, s, 3) on d > s(s-1), cross-checking the
/// recursion piece by piece. Delegates to the recursion when k = 0.
std::vector<i64> hgp_delta_bar_closed(i64 d, i64 s);

/// Coefficients of prod_i (1 + t + ... + t^(a_i - 1)); sum is prod_i a_i.
HVector hvector_complete_intersection(const std::vector<i64>& degrees);

/// Node function of a curve whose hyperplane section has h-vector h:
/// f(j) = j+1-d+H(d-2-j) with H the cumulative sum of h. Any negative value
/// means no such curve exists and is an error.
NodeFunction acm_node_function(const HVector& h, i64 d);

struct CiNodeFunction {
    NodeFunction function;
    i64 alpha;
    i64 e;
    i64 d;
};

/// Node function of a complete intersection of type (s, s+u).
CiNodeFunction ci_node_function(i64 s, i64 u);

/// h-vector of a hyperplane section linked to a collinear scheme of degree k
/// inside a complete intersection of type (s, s+u); sum s^2+us-k.
HVector linked_collinear_section(i64 s, i64 u, i64 k);

struct HalphenNodeFunction {
    NodeFunction function;
    i64 alpha;
    i64 d;
};

/// Node function of a curve of maximal genus among those on no surface of
/// degree < s: the complete intersection for k = 0, otherwise the curve
/// linked to a plane curve of degree k on a degree-s surface.
HalphenNodeFunction halphen_node_function(i64 s, i64 u, i64 k);

struct CastelnuovoParams {
    i64 d = 0;
    i64 r = 0;
    i64 beta = 0;    // ceil((d-2)(r-2)/(r-1))
    i64 q = 0;       // d-2-beta = floor((d-2)/(r-1))
    i64 m = 0;       // d-1 = (r-1)m + epsilon
    i64 epsilon = 0; // 0 <= epsilon <= r-2
    i64 eta = 0;     // d-2 = (r-1)q + eta
};

CastelnuovoParams castelnuovo_params(i64 d, i64 r);

struct CastelnuovoPhi {
    NodeFunction phi;
    i64 delta_min; // (beta(beta+1) + (r-2)(q^2+q))/2, equal to the sum
};

/// Lower envelope for node functions in ambient dimension r, attained by
/// curves of maximal genus.
CastelnuovoPhi castelnuovo_phi(i64 d, i64 r);

/// Maximal genus of a non-degenerate degree-d curve in dimension r.
i64 castelnuovo_genus(i64 d, i64 r);

struct DeltaInterval {
    i64 lower;
    i64 upper_a;
    i64 upper_b;
};

/// Bounds on the node count given d, r and alpha, in the positive-genus
/// range alpha <= d-3.
DeltaInterval delta_interval(i64 d, i64 r, i64 alpha);

/// alpha of a curve of type (a, b), a >= b, on a smooth quadric.
i64 quadric_alpha_smooth(i64 a, i64 b);

/// alpha of a degree-d curve on a quadric cone.
i64 quadric_alpha_cone(i64 d);

struct S2NodeFunction {
    NodeFunction function;
    i64 delta;
};

/// Minimal node function for s = 2: j+1 up to alpha, then d-2-j.
S2NodeFunction s2_function(i64 d, i64 alpha);

struct FamilyNodeFunction {
    NodeFunction function;
    i64 d;
    i64 alpha;
    i64 delta;
    i64 genus;
};

/// Minimal node function realized on a cubic surface: d = v+3z+4,
/// alpha = v+2z+1, tail 2z+1, 2z-1, ..., 3, 1.
FamilyNodeFunction s3_function(i64 v, i64 z);

/// Minimal node function realized on a quartic surface: d = v+4z+7,
/// alpha = v+3z+3, tail 3z+3, 3z, ..., 6, 3, 1.
FamilyNodeFunction s4_function(i64 v, i64 z);

} // namespace nodal
