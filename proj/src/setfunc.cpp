#include "wrank/setfunc.hpp"

#include <sstream>

namespace wrank {

namespace {

std::string hex_mask(Mask m)
{
    std::ostringstream os;
    os << "0x" << std::hex << m;
    return os.str();
}

} // namespace

Rat LinearConstraint::dot(const SetFunctionVector& v) const
{
    Rat sum = 0;
    for (Mask m = 1; m <= v.full(); ++m) {
        const Rat& c = normal[static_cast<std::size_t>(m) - 1];
        if (c != 0)
            sum += c * v.at(m);
    }
    return sum;
}

bool LinearConstraint::satisfied_by(const SetFunctionVector& v) const
{
    const Rat d = dot(v);
    return sense == Sense::Eq ? d == rhs : d >= rhs;
}

bool LinearConstraint::tight_at(const SetFunctionVector& v) const
{
    return dot(v) == rhs;
}

ConeDescription gamma_polytope(int n, const WeightFunction& w)
{
    if (n < 1 || n > 5)
        throw std::invalid_argument("gamma_polytope: need 1 <= n <= 5");
    if (w.size() != n)
        throw std::invalid_argument("gamma_polytope: weight count does not match n");

    const Mask full = full_mask(n);
    const std::size_t dim = (std::size_t{1} << n) - 1;
    ConeDescription desc;
    desc.n = n;

    auto zero_normal = [dim] { return std::vector<Rat>(dim, Rat(0)); };
    auto coeff = [](std::vector<Rat>& normal, Mask m, int delta) {
        if (m != 0)
            normal[static_cast<std::size_t>(m) - 1] += delta;
    };

    for (Mask a = 1; a <= full; ++a) {
        LinearConstraint c;
        c.normal = zero_normal();
        coeff(c.normal, a, +1);
        c.label = "h[" + hex_mask(a) + "] >= 0";
        desc.constraints.push_back(std::move(c));
    }

    for (int i = 1; i <= n; ++i) {
        const Mask rest = full & ~element_bit(i);
        if (rest == 0)
            continue;  // h_N >= h_empty duplicates nonnegativity
        LinearConstraint c;
        c.normal = zero_normal();
        coeff(c.normal, full, +1);
        coeff(c.normal, rest, -1);
        c.label = "h[" + hex_mask(full) + "] >= h[" + hex_mask(rest) + "]";
        desc.constraints.push_back(std::move(c));
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Mask pair = element_bit(i) | element_bit(j);
            const Mask outside = full & ~pair;
            // All subsets a of the complement, ascending via the subset walk.
            Mask a = 0;
            for (;;) {
                LinearConstraint c;
                c.normal = zero_normal();
                coeff(c.normal, a | element_bit(i), +1);
                coeff(c.normal, a | element_bit(j), +1);
                coeff(c.normal, a | pair, -1);
                coeff(c.normal, a, -1);
                c.label = "h[" + hex_mask(a | element_bit(i)) + "] + h["
                        + hex_mask(a | element_bit(j)) + "] >= h[" + hex_mask(a | pair)
                        + "] + h[" + hex_mask(a) + "]";
                desc.constraints.push_back(std::move(c));
                if (a == outside)
                    break;
                a = (a - outside) & outside;  // next subset of outside
            }
        }
    }

    for (int i = 1; i <= n; ++i) {
        LinearConstraint c;
        c.normal = zero_normal();
        coeff(c.normal, element_bit(i), +1);
        c.sense = LinearConstraint::Sense::Eq;
        c.rhs = w.of(i);
        c.label = "h[" + hex_mask(element_bit(i)) + "] = " + rat_to_string(w.of(i));
        desc.constraints.push_back(std::move(c));
    }

    return desc;
}

ExtremePointCheck is_extreme_point(const ConeDescription& desc, const SetFunctionVector& v)
{
    if (v.n != desc.n)
        throw std::invalid_argument("is_extreme_point: dimension mismatch");

    ExtremePointCheck result;
    for (std::size_t i = 0; i < desc.constraints.size(); ++i) {
        if (!desc.constraints[i].satisfied_by(v)) {
            result.status = ExtremePointCheck::Status::Infeasible;
            result.violated_constraint = i;
            return result;
        }
    }

    const int dim = static_cast<int>((std::size_t{1} << desc.n) - 1);
    RationalMatrix tight_normals(0, dim);
    for (std::size_t i = 0; i < desc.constraints.size(); ++i) {
        if (desc.constraints[i].tight_at(v)) {
            result.tight.push_back(i);
            tight_normals.append_row(desc.constraints[i].normal);
        }
    }
    result.tight_rank = rational_rank(std::move(tight_normals));
    result.status = (result.tight_rank == dim) ? ExtremePointCheck::Status::Vertex
                                               : ExtremePointCheck::Status::NotVertex;
    return result;
}

std::optional<Rat> refute_convexity(const ConeDescription& desc, const SetFunctionVector& v,
                                    const SetFunctionVector& a, const SetFunctionVector& b)
{
    if (v.n != desc.n || a.n != desc.n || b.n != desc.n)
        throw std::invalid_argument("refute_convexity: dimension mismatch");
    for (const auto& c : desc.constraints)
        if (!c.satisfied_by(a) || !c.satisfied_by(b))
            throw std::invalid_argument("refute_convexity: endpoint not feasible");
    if (a == b)
        return std::nullopt;

    // v = alpha*a + (1-alpha)*b forces alpha on any coordinate where a, b
    // differ; verify the rest.
    std::optional<Rat> alpha;
    for (Mask m = 1; m <= v.full(); ++m) {
        if (a.at(m) != b.at(m)) {
            alpha = (v.at(m) - b.at(m)) / (a.at(m) - b.at(m));
            break;
        }
    }
    if (!alpha || *alpha <= 0 || *alpha >= 1)
        return std::nullopt;
    for (Mask m = 1; m <= v.full(); ++m)
        if (v.at(m) != *alpha * a.at(m) + (1 - *alpha) * b.at(m))
            return std::nullopt;
    return alpha;
}

} // namespace wrank
