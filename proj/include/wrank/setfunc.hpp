#ifndef WRANK_SETFUNC_HPP
#define WRANK_SETFUNC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrank/core.hpp"
#include "wrank/linalg.hpp"

namespace wrank {

// A point of the entropy space for n variables: one value per nonempty
// subset of {1..n}, the empty set implicitly 0. Stored at index mask-1.
template <typename V>
struct SetVector {
    int n = 0;
    std::vector<V> values;

    SetVector() = default;
    explicit SetVector(int n_, V init = V{})
        : n(n_), values((std::size_t{1} << n_) - 1, init)
    {
        if (n_ < 1 || n_ > 20)
            throw std::invalid_argument("SetVector: need 1 <= n <= 20");
    }

    V& at(Mask m) { return values[static_cast<std::size_t>(m) - 1]; }
    const V& at(Mask m) const { return values[static_cast<std::size_t>(m) - 1]; }

    // Value extended to the empty set.
    V value(Mask m) const { return m == 0 ? V{} : at(m); }

    Mask full() const { return full_mask(n); }

    bool operator==(const SetVector&) const = default;
};

using SetFunctionVector = SetVector<Rat>;  // exact
using FloatSetFunction = SetVector<double>;

// Witness of v(A+i) + v(A+j) < v(A+i+j) + v(A).
struct SubmodularityViolation {
    Mask base;
    int i;
    int j;
};

// Witness of v(A+e) < v(A).
struct MonotonicityViolation {
    Mask base;
    int element;
};

// Scans the elemental form v(A+i) + v(A+j) >= v(A+i+j) + v(A) over all A
// and pairs i < j outside A; for full vectors this is equivalent to
// submodularity over arbitrary pairs of sets. Deterministic first witness:
// ascending A, then ascending (i, j). tol > 0 admits that much slack
// (for float-valued entropy vectors).
template <typename V>
std::optional<SubmodularityViolation>
first_submodularity_violation(const SetVector<V>& v, V tol = V{})
{
    for (Mask a = 0; a <= v.full(); ++a) {
        for (int i = 1; i <= v.n; ++i) {
            if (mask_contains(a, i))
                continue;
            for (int j = i + 1; j <= v.n; ++j) {
                if (mask_contains(a, j))
                    continue;
                const V lhs = v.value(a | element_bit(i)) + v.value(a | element_bit(j));
                const V rhs = v.value(a | element_bit(i) | element_bit(j)) + v.value(a);
                if (lhs - rhs < -tol)
                    return SubmodularityViolation{a, i, j};
            }
        }
    }
    return std::nullopt;
}

template <typename V>
std::optional<MonotonicityViolation>
first_monotonicity_violation(const SetVector<V>& v, V tol = V{})
{
    for (Mask a = 0; a < v.full(); ++a)
        for (int e = 1; e <= v.n; ++e)
            if (!mask_contains(a, e) && v.value(a | element_bit(e)) - v.value(a) < -tol)
                return MonotonicityViolation{a, e};
    return std::nullopt;
}

template <typename V>
bool is_submodular(const SetVector<V>& v, V tol = V{})
{
    return !first_submodularity_violation(v, tol).has_value();
}

template <typename V>
bool is_monotone(const SetVector<V>& v, V tol = V{})
{
    return !first_monotonicity_violation(v, tol).has_value();
}

// One row of a polyhedron description over the subset coordinates:
// normal . h >= rhs, or normal . h = rhs.
struct LinearConstraint {
    enum class Sense { Geq, Eq };

    std::vector<Rat> normal;  // one coefficient per nonempty subset, index mask-1
    Sense sense = Sense::Geq;
    Rat rhs = 0;
    std::string label;

    Rat dot(const SetFunctionVector& v) const;
    bool satisfied_by(const SetFunctionVector& v) const;
    bool tight_at(const SetFunctionVector& v) const;
};

struct ConeDescription {
    int n = 0;
    std::vector<LinearConstraint> constraints;
};

// The polymatroid cone intersected with the affine slice that pins every
// singleton coordinate to its weight: nonnegativity of every coordinate,
// the n elemental monotonicity rows h_N >= h_{N-i}, the C(n,2)*2^(n-2)
// elemental submodularity rows, then the n equalities h_{i} = w(i).
// The elemental rows generate all monotonicity/submodularity constraints,
// so this describes the same polyhedron as the full list.
ConeDescription gamma_polytope(int n, const WeightFunction& w);

struct ExtremePointCheck {
    enum class Status { Infeasible, Vertex, NotVertex };

    Status status = Status::Infeasible;
    // First violated constraint when infeasible.
    std::optional<std::size_t> violated_constraint;
    // Indices of constraints tight at the point (the certificate).
    std::vector<std::size_t> tight;
    int tight_rank = 0;
};

// Vertex test: feasibility first, then the rank of the tight-constraint
// normals must reach the full dimension 2^n - 1. All arithmetic exact.
ExtremePointCheck is_extreme_point(const ConeDescription& desc, const SetFunctionVector& v);

// Searches for alpha in (0,1) with v = alpha*a + (1-alpha)*b. Engaged
// result disproves extremality of v. Requires a != b and both feasible
// for desc (checked; throws std::invalid_argument).
std::optional<Rat> refute_convexity(const ConeDescription& desc, const SetFunctionVector& v,
                                    const SetFunctionVector& a, const SetFunctionVector& b);

} // namespace wrank

#endif
