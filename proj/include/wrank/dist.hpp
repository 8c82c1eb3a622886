#ifndef WRANK_DIST_HPP
#define WRANK_DIST_HPP

#include <map>
#include <string>
#include <vector>

#include "wrank/core.hpp"
#include "wrank/rational.hpp"
#include "wrank/setfunc.hpp"

namespace wrank {

struct Variable {
    std::string name;
    int alphabet = 0;  // outcomes are 0 .. alphabet-1
};

// Finite joint distribution with exact rational probabilities. Outcomes
// with probability zero are dropped, so the stored pmf is the support.
// Variables are addressed 1-based, subsets by the usual bitmask.
class JointDistribution {
public:
    JointDistribution(std::vector<Variable> vars,
                      std::map<std::vector<int>, Rat> pmf);

    // Equal mass 1/|outcomes| on each listed outcome tuple.
    static JointDistribution uniform_on(std::vector<Variable> vars,
                                        const std::vector<std::vector<int>>& outcomes);

    int variable_count() const { return static_cast<int>(vars_.size()); }
    const std::vector<Variable>& variables() const { return vars_; }
    const std::map<std::vector<int>, Rat>& pmf() const { return pmf_; }

    // Distribution of the variables in subset (order preserved).
    JointDistribution marginal(Mask subset) const;

    // Shannon entropy of the marginal on subset, in bits. H(empty) = 0.
    double entropy(Mask subset) const;

    // H(target | given) = H(target | given) via the chain rule; the two
    // subsets must be disjoint.
    double conditional_entropy(Mask target, Mask given) const;

    // Entropy of every nonempty variable subset. Guarded at 12 variables.
    FloatSetFunction entropy_vector() const;

private:
    std::vector<Variable> vars_;
    std::map<std::vector<int>, Rat> pmf_;
};

struct UniformityReport {
    bool uniform = false;
    long long support = 0;
};

// Whether the marginal of one variable puts equal mass on every point of
// its support. Exact rational comparison.
UniformityReport is_uniform_on_support(const JointDistribution& d, int var);

// The exact value q * log2(k). Stored in canonical form: the base is
// never a perfect power (4 becomes base 2 with doubled coefficient), and
// a zero coefficient normalizes the base to 2.
class EntropyValue {
public:
    EntropyValue() = default;
    EntropyValue(Rat coeff, int base);

    const Rat& coeff() const { return coeff_; }
    int base() const { return base_; }

    double bits() const;
    std::string str() const;  // "3/2" for base 2, else "3/2*log2(5)"

    bool operator==(const EntropyValue&) const = default;

private:
    Rat coeff_ = 0;
    int base_ = 2;
};

} // namespace wrank

#endif
