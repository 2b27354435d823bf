#include "nodal/closed_forms.hpp"

#include <algorithm>
#include <optional>

#include "nodal/mnf.hpp"

namespace nodal {

namespace {

// Assembles a sequence from piecewise formulas. Pieces may overlap only
// where they agree; every index must be covered.
class SequenceBuilder {
public:
    explicit SequenceBuilder(i64 size)
        : slots_(static_cast<std::size_t>(size)) {}

    template <typename F>
    void piece(i64 lo, i64 hi, F&& formula) {
        for (i64 j = std::max<i64>(lo, 0); j <= hi; ++j) set(j, formula(j));
    }

    void set(i64 j, i64 value) {
        auto& slot = slots_.at(static_cast<std::size_t>(j));
        if (slot && *slot != value)
            throw std::logic_error(
                "piecewise formulas disagree at index " + std::to_string(j) +
                ": " + std::to_string(*slot) + " vs " + std::to_string(value));
        slot = value;
    }

    std::vector<i64> take() {
        std::vector<i64> out(slots_.size());
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (!slots_[i])
                throw std::logic_error("piecewise formulas leave index " +
                                       std::to_string(i) + " uncovered");
            out[i] = *slots_[i];
        }
        return out;
    }

private:
    std::vector<std::optional<i64>> slots_;
};

i64 sum_of(const std::vector<i64>& v) {
    i64 total = 0;
    for (i64 x : v) total = checked_add(total, x);
    return total;
}

void assert_identity(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("closed-form self-check failed: " + what);
}

} // namespace

HgpDecomposition hgp_decomposition(i64 d, i64 s) {
    require(s >= 2, "s must be at least 2");
    require(d > s * (s - 1), "d must exceed s(s-1)");
    i64 k = (s - d % s) % s;
    i64 u = (d + k) / s - s;
    HgpDecomposition dec{d, s, u, k};
    assert_identity(u >= 0 && k >= 0 && k <= s - 1 &&
                        checked_mul(s, s + u) - k == d,
                    "decomposition d = s^2 + us - k");
    return dec;
}

HgpBounds hgp_bounds(i64 d, i64 s) {
    auto dec = hgp_decomposition(d, s);
    i64 alpha_lower = d - 2 * s - dec.u + (dec.k >= 1 ? 2 : 1);
    return {dec, alpha_lower, d - 3 - alpha_lower};
}

std::vector<i64> hgp_delta_bar_closed(i64 d, i64 s) {
    auto dec = hgp_decomposition(d, s);
    const i64 u = dec.u, k = dec.k;
    if (k == 0) return delta_bar(d, s, 3);

    const i64 base = binom2(s) + u * (s - 1);
    const i64 wall = d - 2 * s - u; // the envelope meets j near wall + 2

    SequenceBuilder b(d - 2);
    b.piece(d - s - 1, d - 3, [&](i64 j) { return binom2(d - 1 - j); });
    b.piece(d - s - u - 1, d - s - 2,
            [&](i64 j) { return binom2(s) + (d - s - 1 - j) * (s - 1); });
    b.piece(wall + k + 1, d - s - u - 2, [&](i64 j) {
        i64 c = d - s - u - 1 - j; // terms t = 1..c of (s-1-t)
        return base + c * (s - 1) - binom2(c + 1);
    });
    b.piece(wall + 2, wall + k, [&](i64 j) {
        i64 c = wall + k + 1 - j; // terms t = 2..c of (k-t)
        i64 tail = c >= 2 ? (c - 1) * k - (binom2(c + 1) - 1) : 0;
        return base + binom2(s - 1) - binom2(k) + tail;
    });
    // Below the meeting point the steps are all 1. The anchor value at
    // wall + 2 is wall + 2 for k >= 2 and wall + 1 for k = 1.
    const i64 anchor = k >= 2 ? wall + 2 : wall + 1;
    b.piece(0, std::min(wall + 1, d - 3),
            [&](i64 j) { return anchor + (wall + 2 - j); });
    return b.take();
}

HVector hvector_complete_intersection(const std::vector<i64>& degrees) {
    require(!degrees.empty(), "at least one degree is required");
    for (i64 a : degrees) require(a >= 2, "degrees must be at least 2");

    std::vector<i64> coeff{1};
    for (i64 a : degrees) {
        std::vector<i64> next(coeff.size() + static_cast<std::size_t>(a) - 1, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i)
            for (i64 p = 0; p < a; ++p)
                next[i + static_cast<std::size_t>(p)] =
                    checked_add(next[i + static_cast<std::size_t>(p)], coeff[i]);
        coeff = std::move(next);
    }

    HVector h(std::move(coeff));
    i64 product = 1;
    for (i64 a : degrees) product = checked_mul(product, a);
    assert_identity(h.degree() == product, "h-vector sum equals the product");
    return h;
}

NodeFunction acm_node_function(const HVector& h, i64 d) {
    require(d >= 3, "degree must be at least 3");
    require(h.degree() == d, "h-vector must sum to d");

    std::vector<i64> vals(static_cast<std::size_t>(d - 2));
    for (i64 j = 0; j <= d - 3; ++j) {
        i64 v = j + 1 - d + h.hilbert(d - 2 - j);
        require(v >= 0, "negative value at index " + std::to_string(j) +
                            ": no curve has this section h-vector");
        vals[static_cast<std::size_t>(j)] = v;
    }
    return NodeFunction(d, std::move(vals));
}

CiNodeFunction ci_node_function(i64 s, i64 u) {
    require(s >= 2, "s must be at least 2");
    require(u >= 0, "u must be nonnegative");

    const i64 d = checked_mul(s, s + u);
    const i64 e = 2 * s + u - 4;
    const i64 alpha = d + 1 - (2 * s + u);

    SequenceBuilder b(d - 2);
    b.piece(0, alpha - 1, [](i64 j) { return j + 1; });
    b.piece(alpha, d - s - u - 2,
            [&](i64 j) { return alpha - binom2(j - alpha + 1); });
    b.piece(d - s - u - 1, d - s - 2,
            [&](i64 j) { return binom2(s) + (d - s - 1 - j) * (s - 1); });
    b.piece(d - s - 1, d - 3, [&](i64 j) { return binom2(d - 1 - j); });

    NodeFunction f(d, b.take());
    i64 genus = checked_mul(d, e) / 2 + 1;
    assert_identity(checked_mul(d, e) % 2 == 0, "even product d*e");
    assert_identity(f.sum() == delta_from_genus(d, genus),
                    "complete-intersection node count");
    return {std::move(f), alpha, e, d};
}

HVector linked_collinear_section(i64 s, i64 u, i64 k) {
    require(s >= 2, "s must be at least 2");
    require(u >= 0, "u must be nonnegative");
    require(k >= 0 && k <= s - 1, "k must lie in [0, s-1]");

    const i64 top = k == 0 ? 2 * s + u - 2 : 2 * s + u - 3;
    SequenceBuilder b(top + 1);
    b.piece(0, s - 1, [](i64 j) { return j + 1; });
    b.piece(s - 1, s + u - 1, [&](i64) { return s; });
    b.piece(s + u, 2 * s + u - k - 2, [&](i64 j) { return 2 * s + u - 1 - j; });
    b.piece(2 * s + u - k - 1, 2 * s + u - 3,
            [&](i64 j) { return 2 * s + u - 2 - j; });

    HVector h(b.take());
    assert_identity(h.degree() == checked_mul(s, s + u) - k,
                    "linked section sums to s^2 + us - k");
    return h;
}

HalphenNodeFunction halphen_node_function(i64 s, i64 u, i64 k) {
    require(s >= 2, "s must be at least 2");
    require(u >= 0, "u must be nonnegative");
    require(k >= 0 && k <= s - 1, "k must lie in [0, s-1]");

    if (k == 0) {
        auto ci = ci_node_function(s, u);
        return {std::move(ci.function), ci.alpha, ci.d};
    }

    const i64 d = checked_mul(s, s + u) - k;
    const i64 alpha = d - 2 * s - u + 2;

    SequenceBuilder b(d - 2);
    b.piece(0, alpha - 1, [](i64 j) { return j + 1; });
    b.piece(alpha, alpha + k - 2,
            [&](i64 j) { return alpha - binom2(j - alpha + 1); });
    b.piece(alpha + k - 1, d - s - u - 2, [&](i64 j) {
        return alpha - binom2(j - alpha + 1) - (j + 2 - alpha - k);
    });
    b.piece(d - s - u - 1, d - s - 2,
            [&](i64 j) { return binom2(s) + (d - s - 1 - j) * (s - 1); });
    b.piece(d - s - 1, d - 3, [&](i64 j) { return binom2(d - 1 - j); });

    NodeFunction f(d, b.take());
    assert_identity(f.value(d - 3) == 1, "endpoint value 1");
    return {std::move(f), alpha, d};
}

CastelnuovoParams castelnuovo_params(i64 d, i64 r) {
    require(d >= 3, "degree must be at least 3");
    require(r >= 3, "r must be at least 3");
    CastelnuovoParams cp;
    cp.d = d;
    cp.r = r;
    cp.beta = ceil_div(checked_mul(d - 2, r - 2), r - 1);
    cp.q = d - 2 - cp.beta;
    cp.m = (d - 1) / (r - 1);
    cp.epsilon = (d - 1) % (r - 1);
    cp.eta = (d - 2) % (r - 1);
    assert_identity(cp.q == (d - 2) / (r - 1), "q equals floor((d-2)/(r-1))");
    return cp;
}

CastelnuovoPhi castelnuovo_phi(i64 d, i64 r) {
    auto cp = castelnuovo_params(d, r);
    SequenceBuilder b(d - 2);
    b.piece(0, cp.beta - 1, [](i64 j) { return j + 1; });
    b.piece(cp.beta, d - 3, [&](i64 j) { return (d - 2 - j) * (r - 2); });
    NodeFunction phi(d, b.take());
    i64 delta_min =
        (checked_mul(cp.beta, cp.beta + 1) +
         checked_mul(r - 2, checked_add(checked_mul(cp.q, cp.q), cp.q))) /
        2;
    assert_identity(phi.sum() == delta_min, "envelope sums to the bound");
    return {std::move(phi), delta_min};
}

i64 castelnuovo_genus(i64 d, i64 r) {
    require(r >= 3, "r must be at least 3");
    require(d >= r, "degree must be at least r");
    i64 m = (d - 1) / (r - 1);
    i64 epsilon = (d - 1) % (r - 1);
    return checked_add(checked_mul(binom2(m), r - 1), checked_mul(m, epsilon));
}

DeltaInterval delta_interval(i64 d, i64 r, i64 alpha) {
    require(d >= 3, "degree must be at least 3");
    require(r >= 3, "r must be at least 3");
    require(alpha >= 1, "alpha must be positive");
    require(alpha <= d - 3, "alpha = d-2 means genus 0, outside this bound");

    const i64 p = d - 2 - alpha;
    const i64 mu = alpha - checked_mul(p, r - 2);
    require(mu >= 0, "alpha below (d-2-alpha)(r-2)");

    const i64 m = alpha / (r - 2);
    const i64 nu = alpha % (r - 2);

    i64 lower = (checked_mul(alpha, alpha + 1) +
                 checked_mul(r - 2, checked_add(checked_mul(p, p), p))) /
                2;
    i64 upper_a = checked_add(lower, checked_mul(mu, p - 1));
    i64 upper_b = (checked_mul(alpha, alpha + 1) +
                   checked_mul(r - 2, checked_add(checked_mul(m, m), m))) /
                      2 +
                  checked_mul(nu, m - 1);
    return {lower, upper_a, upper_b};
}

i64 quadric_alpha_smooth(i64 a, i64 b) {
    require(b >= 1, "b must be at least 1");
    require(a >= b, "type (a, b) requires a >= b");
    return a - 1;
}

i64 quadric_alpha_cone(i64 d) {
    require(d >= 3, "degree must be at least 3");
    return d % 2 == 0 ? d / 2 - 1 : (d - 1) / 2;
}

S2NodeFunction s2_function(i64 d, i64 alpha) {
    require(d >= 3, "degree must be at least 3");
    require(alpha >= ceil_div(d - 2, 2), "alpha below the minimum (d-2)/2");
    require(alpha <= d - 2, "alpha must be at most d-2");

    SequenceBuilder b(d - 2);
    b.piece(0, alpha - 1, [](i64 j) { return j + 1; });
    b.piece(alpha, d - 3, [&](i64 j) { return d - 2 - j; });

    NodeFunction f(d, b.take());
    i64 delta = (checked_mul(alpha, alpha + 1) +
                 checked_mul(d - 2 - alpha, d - 1 - alpha)) /
                2;
    assert_identity(f.sum() == delta, "closed node count for s = 2");
    return {std::move(f), delta};
}

FamilyNodeFunction s3_function(i64 v, i64 z) {
    require(v >= 0, "v must be nonnegative");
    require(z >= -1, "z must be at least -1");
    const i64 d = v + 3 * z + 4;
    require(d >= 3, "degree must be at least 3");
    const i64 alpha = v + 2 * z + 1;

    SequenceBuilder b(d - 2);
    b.piece(0, alpha - 1, [](i64 j) { return j + 1; });
    // Tail of descending odd values 2z+1, 2z-1, ..., 3, 1.
    for (i64 i = 0; i <= z; ++i) b.set(alpha + i, 2 * (z - i) + 1);

    NodeFunction f(d, b.take());
    i64 delta = binom2(alpha + 1) + checked_mul(z + 1, z + 1);
    i64 genus = 3 * binom2(z + 1) + checked_mul(z + 1, v + 1);
    assert_identity(f.sum() == delta, "closed node count for s = 3");
    assert_identity(delta == delta_from_genus(d, genus),
                    "node count matches the genus for s = 3");
    return {std::move(f), d, alpha, delta, genus};
}

FamilyNodeFunction s4_function(i64 v, i64 z) {
    require(v >= 1, "v must be at least 1");
    require(z >= 1, "z must be at least 1");
    const i64 d = v + 4 * z + 7;
    const i64 alpha = v + 3 * z + 3;

    SequenceBuilder b(d - 2);
    b.piece(0, alpha - 1, [](i64 j) { return j + 1; });
    // Tail of descending multiples of three 3z+3, 3z, ..., 3, then 1.
    for (i64 i = 0; i <= z; ++i) b.set(alpha + i, 3 * (z + 1 - i));
    b.set(d - 3, 1);

    NodeFunction f(d, b.take());
    i64 delta = binom2(alpha + 1) + 3 * ((z + 1) * (z + 2)) / 2 + 1;
    i64 genus = v + checked_mul(z + 1, v + 3) + 2 * checked_mul(z + 1, z + 1);
    assert_identity(f.sum() == delta, "closed node count for s = 4");
    assert_identity(delta == delta_from_genus(d, genus),
                    "node count matches the genus for s = 4");
    return {std::move(f), d, alpha, delta, genus};
}

} // namespace nodal
