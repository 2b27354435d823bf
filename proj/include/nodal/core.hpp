#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodal/common.hpp"

namespace nodal {

/// First difference of the Hilbert function of the nodes of a general plane
/// projection of a degree-d space curve. The support is [0, d-3]; value(j)
/// returns 0 outside it.
class NodeFunction {
public:
    NodeFunction(i64 degree, std::vector<i64> values);

    i64 degree() const noexcept { return d_; }
    i64 max_index() const noexcept { return d_ - 3; }

    i64 value(i64 j) const noexcept {
        if (j < 0 || j > d_ - 3) return 0;
        return values_[static_cast<std::size_t>(j)];
    }

    const std::vector<i64>& values() const noexcept { return values_; }

    i64 sum() const;

    friend bool operator==(const NodeFunction&, const NodeFunction&) = default;

private:
    i64 d_;
    std::vector<i64> values_;
};

/// h-vector of a zero-dimensional scheme (a general hyperplane section):
/// h(0) = 1, nonnegative entries, finitely supported. degree() is the sum.
class HVector {
public:
    explicit HVector(std::vector<i64> entries);

    const std::vector<i64>& entries() const noexcept { return entries_; }

    i64 entry(i64 j) const noexcept {
        if (j < 0 || j >= static_cast<i64>(entries_.size())) return 0;
        return entries_[static_cast<std::size_t>(j)];
    }

    /// Top index with a nonzero entry.
    i64 top() const noexcept { return static_cast<i64>(entries_.size()) - 1; }

    i64 degree() const noexcept { return degree_; }

    /// Cumulative Hilbert function: 0 for j < 0, degree() past the top.
    i64 hilbert(i64 j) const noexcept;

    friend bool operator==(const HVector&, const HVector&) = default;

private:
    std::vector<i64> entries_;
    std::vector<i64> cumulative_;
    i64 degree_;
};

/// Spectrum values on the window [0, size-1]; the window is the image of
/// [alpha, d-1] under t -> d-1-t when produced from a node function.
struct Spectrum {
    std::vector<i64> values;

    i64 value_at(i64 i) const {
        require(i >= 0 && i < static_cast<i64>(values.size()),
                "spectrum index outside the computed window");
        return values[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Numerical invariants of an embedded space curve and its projection:
/// degree d, ambient dimension r, h^0(O(1))-1 =: n, least degree s of a
/// surface the curve may lie on, genus g, speciality e, least degree alpha
/// of a plane curve through the nodes, and node count delta.
struct CurveParams {
    i64 d = 0;
    i64 r = 3;
    i64 n = 3;
    i64 s = 2;
    i64 g = 0;
    i64 e = 0;
    i64 alpha = 0;
    i64 delta = 0;

    friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// Fills e and delta from the coupling identities e = d-3-alpha and
/// delta = (d-1)(d-2)/2 - g.
CurveParams curve_params(i64 d, i64 r, i64 n, i64 s, i64 alpha, i64 g);

/// Empty when the params satisfy every coupling identity; otherwise one
/// message per failed identity.
std::vector<std::string> params_violations(const CurveParams& p);

enum class Clause {
    params,           // coupling identities among the invariants
    ascending_prefix, // value j+1 forced below alpha
    non_increasing,   // no increase past alpha-1
    endpoint,         // value n-2 at d-3
    descent_floor,    // drop of at least n-2 per step past alpha
    backward_step,    // forced ascent going backward, given s
    node_count,       // sum over the support equals delta
};

std::string clause_name(Clause c);

struct Violation {
    Clause clause;
    i64 j; // index the clause fired at; -1 for global clauses
    std::string detail;
};

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<Violation> violations;
};

/// Checks a candidate node function against every numeric constraint the
/// invariants d, n, s, alpha, delta impose. Parameter inconsistencies are
/// reported alone, before any sequence clause.
AdmissibilityReport node_function_admissible(const NodeFunction& f,
                                             const CurveParams& p);

/// delta = (d-1)(d-2)/2 - g.
i64 delta_from_genus(i64 d, i64 g);

/// alpha = d-3-e; e = -1 encodes the rational case alpha = d-2.
i64 alpha_from_speciality(i64 d, i64 e);

/// out[j] = seq[j] - seq[j-1], with seq[-1] taken as 0.
std::vector<i64> first_difference(const std::vector<i64>& seq);

/// Partial spectrum of the curve behind f: the entry at index d-1-t equals
/// 1 - (f(t) - f(t-1)), computed for alpha <= t <= d-1.
Spectrum spectrum_from_node_function(const NodeFunction& f, i64 alpha);

} // namespace nodal
