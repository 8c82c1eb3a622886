#ifndef WRANK_MATROID_HPP
#define WRANK_MATROID_HPP

#include <utility>
#include <variant>
#include <vector>

#include "wrank/core.hpp"
#include "wrank/linalg.hpp"
#include "wrank/setfunc.hpp"

namespace wrank {

// Undirected multigraph; vertices are 1..vertices, parallel edges and
// self-loops allowed. Edge order defines the matroid element order.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const Graph&) const = default;
};

// A matroid on ground set {1..n} in one of three representations:
// column independence of a bit matrix over F2, forests of a graph, or
// the uniform matroid U(r, n).
class Matroid {
public:
    enum class Kind { Binary, Graphic, Uniform };

    static Matroid binary(BitMatrix representative);
    static Matroid graphic(Graph g);
    static Matroid uniform(int rank, int size);

    Kind kind() const;
    int size() const { return size_; }
    Mask full_set() const { return full_mask(size_); }

    const BitMatrix& representative() const;  // Binary only
    const Graph& graph() const;               // Graphic only
    int uniform_rank() const;                 // Uniform only

    bool is_independent(Mask subset) const;
    int rank(Mask subset) const;

    bool operator==(const Matroid&) const = default;

private:
    struct Uniform {
        int rank;
        int size;

        bool operator==(const Uniform&) const = default;
    };

    explicit Matroid(std::variant<BitMatrix, Graph, Uniform> rep, int size);

    std::variant<BitMatrix, Graph, Uniform> rep_;
    int size_;
};

// The F2 representation of a graphic matroid: the vertex/edge incidence
// matrix mod 2 (self-loops become zero columns).
Matroid binary_from_graphic(const Graph& g);

struct CircuitList {
    std::vector<Mask> circuits;  // ascending by bitmask, duplicate-free
};

// All minimal dependent sets, by exhaustive subset sweep. Guarded at
// n <= 20.
CircuitList circuits(const Matroid& m);

// Max total weight of an independent subset of s. Greedy over s in
// descending weight (ties: ascending index); exact rationals throughout.
Rat weighted_rank(const Matroid& m, const WeightFunction& w, Mask s);

// Starts from the full ground set and repeatedly removes a lightest
// element of some circuit until independent; the survivors form a base of
// maximum total weight. Deterministic: the circuit is the minimal
// dependent set found by an ascending-index reduction sweep, and among
// equally light circuit elements the highest-indexed one is removed, so
// lower-indexed elements win ties (matching the greedy order).
Mask reverse_delete_base(const Matroid& m, const WeightFunction& w);

// The weighted rank of every nonempty subset.
SetFunctionVector phi_vector(const Matroid& m, const WeightFunction& w);

} // namespace wrank

#endif
