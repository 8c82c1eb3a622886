#ifndef WRANK_CONSTRUCT_HPP
#define WRANK_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrank/dist.hpp"
#include "wrank/linalg.hpp"
#include "wrank/matroid.hpp"

namespace wrank {

// Enumeration limits for the brute-force entropy paths. Beyond these only
// the algebraic oracles run.
struct BruteForceCaps {
    int bit_cap = 16;                  // binary: at most 2^bit_cap assignments
    long long state_cap = 1 << 20;     // Z_k: at most state_cap assignments
};

// The F2 construction: iid fair bits arranged as a w_max x m matrix X;
// element e with representing column v_e gets the variable
// Y_e = (X_1 v_e, ..., X_{w_e} v_e), i.e. w_e block rows in a bit space of
// dimension w_max * m, row j supported on block j.
class BinaryConstruction {
public:
    const Matroid& matroid() const { return matroid_; }
    int size() const { return matroid_.size(); }
    int weight(int element) const;  // 1-based
    int w_max() const { return w_max_; }
    int rows() const { return matroid_.representative().rows(); }
    int bit_dim() const { return w_max_ * rows(); }

    // Element e's block rows, packed bit c = bit-space coordinate c.
    // Requires bit_dim <= 64.
    std::vector<std::uint64_t> block_rows(int element) const;

private:
    friend BinaryConstruction build_binary(Matroid m, const WeightFunction& w);

    BinaryConstruction(Matroid m, std::vector<int> weights, int w_max);

    Matroid matroid_;
    std::vector<int> weights_;
    int w_max_;
};

// Rejects non-integer or negative weights and non-binary matroids; a
// representative with more than 64 rows is out of scope.
BinaryConstruction build_binary(Matroid m, const WeightFunction& w);

// Exact joint entropy of { Y_e : e in s }: the F2 rank of the stacked
// block rows, computed blockwise (block j is spanned by the columns of
// the elements with w_e >= j, and distinct blocks occupy disjoint
// coordinates). Always integer bits.
EntropyValue algebraic_entropy_binary(const BinaryConstruction& c, Mask s);

// Full joint distribution of (Y_1..Y_n) by enumerating the bit space;
// element outcomes are packed tuples, alphabet 2^{w_e}. Throws when
// bit_dim exceeds the cap.
JointDistribution brute_force_distribution_binary(const BinaryConstruction& c,
                                                  const BruteForceCaps& caps = {});

// Shannon entropy of { Y_e : e in s } from direct enumeration and outcome
// counting; independent of the rank shortcut.
double brute_force_entropy_binary(const BinaryConstruction& c, Mask s,
                                  const BruteForceCaps& caps = {});

// The Z_k construction on a graph: one uniform variable X_v per vertex;
// edge e = {u, v} oriented low-to-high carries Y_e = X_high - X_low mod k.
// Self-loops carry the constant 0.
class GraphicZkConstruction {
public:
    const Graph& graph() const { return graph_; }
    int modulus() const { return coeff_.modulus(); }
    int size() const { return static_cast<int>(graph_.edges.size()); }

    // Vertices x edges matrix over Z_k: +1 at the head, -1 at the tail.
    const ZkMatrix& coefficients() const { return coeff_; }

private:
    friend GraphicZkConstruction build_graphic_zk(Graph g, int k);

    GraphicZkConstruction(Graph g, ZkMatrix coeff);

    Graph graph_;
    ZkMatrix coeff_;
};

GraphicZkConstruction build_graphic_zk(Graph g, int k);

// Exact joint entropy of { Y_e : e in s } as coeff * log2(k): the image
// { x^T M : x in Z_k^V } of the selected columns has k^coeff points.
EntropyValue algebraic_entropy_zk(const GraphicZkConstruction& c, Mask s);

JointDistribution brute_force_distribution_zk(const GraphicZkConstruction& c,
                                              const BruteForceCaps& caps = {});

double brute_force_entropy_zk(const GraphicZkConstruction& c, Mask s,
                              const BruteForceCaps& caps = {});

// One subset's worth of verification evidence: the weighted-rank target,
// the algebraic oracle value, and (when within caps) the brute-force
// entropy in bits.
struct SubsetCheck {
    Mask subset = 0;
    EntropyValue expected;
    EntropyValue algebraic;
    std::optional<double> brute;
    bool pass = true;
};

struct VerifyReport {
    bool pass = true;
    bool brute_force_used = true;
    std::string failure;  // first failed subset, empty when pass
    std::vector<SubsetCheck> checks;
};

// For every nonempty subset A: algebraic entropy equals phi_w(A) exactly,
// and brute-force entropy (within caps) agrees to tol.
VerifyReport verify_theorem2(const Matroid& m, const WeightFunction& w,
                             double tol = 1e-9, const BruteForceCaps& caps = {});

// Dropping the lightest element of a circuit (ties: smallest index) from
// any superset leaves the joint entropy unchanged. Returns the verdict;
// throws if the mask is not a circuit of the matroid or not inside
// superset.
bool verify_lemma2(const BinaryConstruction& c, Mask circuit, Mask superset,
                   double tol = 1e-9, const BruteForceCaps& caps = {});

// For an independent set: joint entropy equals the weight sum exactly and
// the joint pmf is exactly the product of its marginals.
bool verify_lemma3_prop3(const BinaryConstruction& c, Mask ind,
                         const BruteForceCaps& caps = {});

// For every nonempty edge subset A: algebraic coefficient equals the
// graphic rank exactly, brute-force entropy equals rank * log2(k) to tol.
VerifyReport verify_theorem4(const Graph& g, int k,
                             double tol = 1e-9, const BruteForceCaps& caps = {});

// Checks the derived properties of a distribution whose entropy vector
// matches a constant-weight circuit profile: each variable determined by
// the rest, uniform marginals with a common support size k, and
// w0 = log2(k). A profile mismatch is a precondition failure, not a
// verdict.
struct CircuitUniformityReport {
    enum class Status { PreconditionFailed, Fail, Pass };
    Status status = Status::Fail;
    std::string detail;
    long long k = 0;
};

CircuitUniformityReport verify_circuit_uniformity(const JointDistribution& d,
                                                  double w0, double tol = 1e-9);

} // namespace wrank

#endif
