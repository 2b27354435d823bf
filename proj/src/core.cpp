#include "nodal/core.hpp"

#include <numeric>

#include "nodal/verify.hpp"

namespace nodal {

NodeFunction::NodeFunction(i64 degree, std::vector<i64> values)
    : d_(degree), values_(std::move(values)) {
    require(d_ >= 3, "node function degree must be at least 3");
    require(static_cast<i64>(values_.size()) == d_ - 2,
            "node function needs exactly d-2 values, one per index in [0, d-3]");
    for (i64 v : values_)
        require(v >= 0, "node function values must be nonnegative");
}

i64 NodeFunction::sum() const {
    i64 total = 0;
    for (i64 v : values_) total = checked_add(total, v);
    return total;
}

HVector::HVector(std::vector<i64> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    require(!entries_.empty(), "h-vector must have a nonzero entry");
    require(entries_.front() == 1, "h-vector must start with 1");
    for (i64 v : entries_)
        require(v >= 0, "h-vector entries must be nonnegative");
    cumulative_.resize(entries_.size());
    i64 acc = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        acc = checked_add(acc, entries_[i]);
        cumulative_[i] = acc;
    }
    degree_ = acc;
}

i64 HVector::hilbert(i64 j) const noexcept {
    if (j < 0) return 0;
    if (j >= static_cast<i64>(cumulative_.size())) return degree_;
    return cumulative_[static_cast<std::size_t>(j)];
}

i64 delta_from_genus(i64 d, i64 g) {
    require(d >= 3, "degree must be at least 3");
    i64 max = binom2(d - 1);
    require(g >= 0 && g <= max, "genus outside [0, (d-1)(d-2)/2]");
    return max - g;
}

i64 alpha_from_speciality(i64 d, i64 e) {
    require(d >= 3, "degree must be at least 3");
    require(e >= -1, "speciality must be at least -1");
    require(e <= d - 3, "speciality cannot exceed d-3");
    return d - 3 - e;
}

std::vector<i64> first_difference(const std::vector<i64>& seq) {
    std::vector<i64> out(seq.size());
    i64 prev = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out[i] = checked_sub(seq[i], prev);
        prev = seq[i];
    }
    return out;
}

CurveParams curve_params(i64 d, i64 r, i64 n, i64 s, i64 alpha, i64 g) {
    CurveParams p;
    p.d = d;
    p.r = r;
    p.n = n;
    p.s = s;
    p.g = g;
    p.alpha = alpha;
    p.e = d - 3 - alpha;
    p.delta = delta_from_genus(d, g);
    return p;
}

std::vector<std::string> params_violations(const CurveParams& p) {
    std::vector<std::string> out;
    auto bad = [&](const std::string& msg) { out.push_back(msg); };

    if (p.d < 3) bad("d must be at least 3");
    if (p.r < 3) bad("r must be at least 3");
    if (p.n < p.r) bad("n must be at least r");
    if (p.s < 2) bad("s must be at least 2");
    if (p.g < 0) bad("g must be nonnegative");
    if (p.d >= 3) {
        if (p.alpha < 1 || p.alpha > p.d - 2)
            bad("alpha must lie in [1, d-2]");
        if (p.delta != binom2(p.d - 1) - p.g)
            bad("delta must equal (d-1)(d-2)/2 - g");
        if (p.alpha != p.d - 3 - p.e)
            bad("alpha must equal d-3-e");
        if ((p.alpha == p.d - 2) != (p.g == 0))
            bad("alpha = d-2 exactly for genus 0");
        if (checked_mul(p.alpha, p.n - 1) <
            checked_mul(p.d - 2, p.n - 2))
            bad("alpha*(n-1) must be at least (d-2)*(n-2)");
    }
    if (p.delta < 1) bad("delta must be positive");
    return out;
}

std::string clause_name(Clause c) {
    switch (c) {
        case Clause::params: return "params";
        case Clause::ascending_prefix: return "ascending-prefix";
        case Clause::non_increasing: return "non-increasing";
        case Clause::endpoint: return "endpoint";
        case Clause::descent_floor: return "descent-floor";
        case Clause::backward_step: return "backward-step";
        case Clause::node_count: return "node-count";
    }
    return "unknown";
}

AdmissibilityReport node_function_admissible(const NodeFunction& f,
                                             const CurveParams& p) {
    AdmissibilityReport report;

    auto param_errors = params_violations(p);
    if (f.degree() != p.d)
        param_errors.push_back("function degree differs from params d");
    if (!param_errors.empty()) {
        for (auto& msg : param_errors)
            report.violations.push_back({Clause::params, -1, msg});
        report.admissible = false;
        return report;
    }

    const i64 d = p.d, n = p.n, s = p.s, a = p.alpha;
    auto flag = [&](Clause c, i64 j, std::string detail) {
        report.violations.push_back({c, j, std::move(detail)});
    };

    for (i64 j = 0; j <= a - 1 && j <= d - 3; ++j) {
        if (f.value(j) != j + 1)
            flag(Clause::ascending_prefix, j,
                 "expected " + std::to_string(j + 1) + ", got " +
                     std::to_string(f.value(j)));
    }

    for (i64 j = std::max<i64>(a - 1, 0); j <= d - 4; ++j) {
        if (f.value(j + 1) > f.value(j))
            flag(Clause::non_increasing, j + 1,
                 "value rises from " + std::to_string(f.value(j)));
    }

    if (f.value(d - 3) != n - 2)
        flag(Clause::endpoint, d - 3,
             "expected " + std::to_string(n - 2) + ", got " +
                 std::to_string(f.value(d - 3)));

    for (i64 j = a; j <= d - 4; ++j) {
        if (f.value(j + 1) > f.value(j) - (n - 2))
            flag(Clause::descent_floor, j,
                 "drop smaller than " + std::to_string(n - 2));
    }

    for (i64 j = a; j <= d - 2; ++j) {
        i64 need = forced_ascent_backward(d, s, j, f.value(j));
        if (f.value(j - 1) < checked_add(f.value(j), need))
            flag(Clause::backward_step, j,
                 "value " + std::to_string(f.value(j - 1)) + " at " +
                     std::to_string(j - 1) + " below forced " +
                     std::to_string(f.value(j) + need));
    }

    if (f.sum() != p.delta)
        flag(Clause::node_count, -1,
             "sum " + std::to_string(f.sum()) + " differs from delta " +
                 std::to_string(p.delta));

    report.admissible = report.violations.empty();
    return report;
}

Spectrum spectrum_from_node_function(const NodeFunction& f, i64 alpha) {
    const i64 d = f.degree();
    require(alpha >= 1 && alpha <= d - 2, "alpha must lie in [1, d-2]");
    Spectrum sp;
    sp.values.resize(static_cast<std::size_t>(d - alpha));
    for (i64 t = alpha; t <= d - 1; ++t) {
        i64 dd = checked_sub(f.value(t), f.value(t - 1));
        sp.values[static_cast<std::size_t>(d - 1 - t)] = checked_sub(1, dd);
    }
    return sp;
}

} // namespace nodal
