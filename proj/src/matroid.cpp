#include "wrank/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wrank {
namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n))
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // True iff x and y were in distinct components.
    bool merge(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        parent[static_cast<std::size_t>(x)] = y;
        return true;
    }
};

// Number of subset edges that join previously distinct components; equals
// the graphic rank (size of a spanning forest of the subgraph).
int graphic_rank(const Graph& g, Mask subset)
{
    UnionFind uf(g.vertices + 1);
    int r = 0;
    for (int e = 1; e <= static_cast<int>(g.edges.size()); ++e) {
        if (!mask_contains(subset, e))
            continue;
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e - 1)];
        if (u != v && uf.merge(u, v))
            ++r;
    }
    return r;
}

void check_query(const Matroid& m, Mask subset)
{
    if (subset & ~m.full_set())
        throw std::invalid_argument("matroid: subset outside the ground set");
}

} // namespace

Matroid::Matroid(std::variant<BitMatrix, Graph, Uniform> rep, int size)
    : rep_(std::move(rep)), size_(size)
{
}

Matroid Matroid::binary(BitMatrix representative)
{
    const int n = representative.cols();
    if (n < 1 || n > 32)
        throw std::invalid_argument("Matroid::binary: need 1 to 32 columns");
    return Matroid(std::move(representative), n);
}

Matroid Matroid::graphic(Graph g)
{
    if (g.vertices < 1)
        throw std::invalid_argument("Matroid::graphic: need at least one vertex");
    const int n = static_cast<int>(g.edges.size());
    if (n < 1 || n > 32)
        throw std::invalid_argument("Matroid::graphic: need 1 to 32 edges");
    for (const auto& [u, v] : g.edges) {
        if (u < 1 || u > g.vertices || v < 1 || v > g.vertices)
            throw std::invalid_argument("Matroid::graphic: edge endpoint out of range");
    }
    return Matroid(std::move(g), n);
}

Matroid Matroid::uniform(int rank, int size)
{
    if (size < 1 || size > 32)
        throw std::invalid_argument("Matroid::uniform: need 1 <= size <= 32");
    if (rank < 0 || rank > size)
        throw std::invalid_argument("Matroid::uniform: need 0 <= rank <= size");
    return Matroid(Uniform{rank, size}, size);
}

Matroid::Kind Matroid::kind() const
{
    if (std::holds_alternative<BitMatrix>(rep_))
        return Kind::Binary;
    if (std::holds_alternative<Graph>(rep_))
        return Kind::Graphic;
    return Kind::Uniform;
}

const BitMatrix& Matroid::representative() const
{
    return std::get<BitMatrix>(rep_);
}

const Graph& Matroid::graph() const
{
    return std::get<Graph>(rep_);
}

int Matroid::uniform_rank() const
{
    return std::get<Uniform>(rep_).rank;
}

int Matroid::rank(Mask subset) const
{
    check_query(*this, subset);
    if (const auto* b = std::get_if<BitMatrix>(&rep_))
        return gf2_rank(b->selected_columns(subset));
    if (const auto* g = std::get_if<Graph>(&rep_))
        return graphic_rank(*g, subset);
    return std::min(mask_size(subset), std::get<Uniform>(rep_).rank);
}

bool Matroid::is_independent(Mask subset) const
{
    return rank(subset) == mask_size(subset);
}

Matroid binary_from_graphic(const Graph& g)
{
    BitMatrix inc(g.vertices, static_cast<int>(g.edges.size()));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v)
            continue;  // self-loop: zero column
        inc.set(u - 1, e, true);
        inc.set(v - 1, e, true);
    }
    return Matroid::binary(std::move(inc));
}

CircuitList circuits(const Matroid& m)
{
    if (m.size() > 20)
        throw std::invalid_argument("circuits: exhaustive sweep capped at 20 elements");
    CircuitList out;
    for (Mask s = 1; s <= m.full_set(); ++s) {
        if (m.is_independent(s))
            continue;
        bool minimal = true;
        for (Mask rest = s; rest;) {
            const Mask low = rest & (0u - rest);
            if (!m.is_independent(s & ~low)) {
                minimal = false;
                break;
            }
            rest &= rest - 1;
        }
        if (minimal)
            out.circuits.push_back(s);
    }
    return out;
}

namespace {

void check_weights(const Matroid& m, const WeightFunction& w)
{
    if (w.size() != m.size())
        throw std::invalid_argument("weighted rank: weight count != ground set size");
}

// Elements of s in greedy order: descending weight, ties by ascending
// index.
std::vector<int> greedy_order(const WeightFunction& w, Mask s)
{
    std::vector<int> order = elements_of(s);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return w.of(a) > w.of(b); });
    return order;
}

} // namespace

Rat weighted_rank(const Matroid& m, const WeightFunction& w, Mask s)
{
    check_weights(m, w);
    check_query(m, s);
    Mask kept = 0;
    Rat total = 0;
    for (int e : greedy_order(w, s)) {
        const Mask next = kept | element_bit(e);
        if (m.is_independent(next)) {
            kept = next;
            total += w.of(e);
        }
    }
    return total;
}

Mask reverse_delete_base(const Matroid& m, const WeightFunction& w)
{
    check_weights(m, w);
    Mask current = m.full_set();
    while (!m.is_independent(current)) {
        // Shrink to a circuit: drop elements in ascending order whenever
        // the rest stays dependent.
        Mask circuit = current;
        for (int e = 1; e <= m.size(); ++e) {
            if (!mask_contains(circuit, e))
                continue;
            const Mask without = circuit & ~element_bit(e);
            if (!m.is_independent(without))
                circuit = without;
        }
        // Remove the highest-indexed lightest element, so ties keep the
        // earlier elements -- the same preference as the greedy order.
        int victim = 0;
        for (int e : elements_of(circuit)) {
            if (victim == 0 || w.of(e) < w.of(victim) || (w.of(e) == w.of(victim) && e > victim))
                victim = e;
        }
        current &= ~element_bit(victim);
    }
    return current;
}

SetFunctionVector phi_vector(const Matroid& m, const WeightFunction& w)
{
    check_weights(m, w);
    SetFunctionVector v(m.size());
    for (Mask s = 1; s <= v.full(); ++s)
        v.at(s) = weighted_rank(m, w, s);
    return v;
}

} // namespace wrank
