#include "wrank/dist.hpp"

#include <cmath>
#include <stdexcept>

namespace wrank {

JointDistribution::JointDistribution(std::vector<Variable> vars,
                                     std::map<std::vector<int>, Rat> pmf)
    : vars_(std::move(vars))
{
    if (vars_.empty())
        throw std::invalid_argument("JointDistribution: no variables");
    for (const auto& v : vars_) {
        if (v.alphabet < 1)
            throw std::invalid_argument("JointDistribution: alphabet size must be positive");
    }
    Rat total = 0;
    for (auto& [outcome, p] : pmf) {
        if (outcome.size() != vars_.size())
            throw std::invalid_argument("JointDistribution: outcome arity mismatch");
        for (std::size_t i = 0; i < outcome.size(); ++i) {
            if (outcome[i] < 0 || outcome[i] >= vars_[i].alphabet)
                throw std::invalid_argument("JointDistribution: outcome out of alphabet range");
        }
        if (p < 0)
            throw std::invalid_argument("JointDistribution: negative probability");
        total += p;
        if (p > 0)
            pmf_.emplace(outcome, p);
    }
    if (total != 1)
        throw std::invalid_argument("JointDistribution: probabilities must sum to 1");
}

JointDistribution JointDistribution::uniform_on(std::vector<Variable> vars,
                                                const std::vector<std::vector<int>>& outcomes)
{
    if (outcomes.empty())
        throw std::invalid_argument("uniform_on: empty support");
    const Rat p(1, static_cast<long long>(outcomes.size()));
    std::map<std::vector<int>, Rat> pmf;
    for (const auto& o : outcomes) {
        if (!pmf.emplace(o, p).second)
            throw std::invalid_argument("uniform_on: duplicate outcome");
    }
    return JointDistribution(std::move(vars), std::move(pmf));
}

namespace {

void check_subset(const JointDistribution& d, Mask subset)
{
    if (subset & ~full_mask(d.variable_count()))
        throw std::invalid_argument("JointDistribution: subset outside variable range");
}

} // namespace

JointDistribution JointDistribution::marginal(Mask subset) const
{
    check_subset(*this, subset);
    if (subset == 0)
        throw std::invalid_argument("marginal: empty subset");
    const std::vector<int> keep = elements_of(subset);
    std::vector<Variable> vars;
    for (int v : keep)
        vars.push_back(vars_[static_cast<std::size_t>(v - 1)]);
    std::map<std::vector<int>, Rat> pmf;
    for (const auto& [outcome, p] : pmf_) {
        std::vector<int> projected;
        projected.reserve(keep.size());
        for (int v : keep)
            projected.push_back(outcome[static_cast<std::size_t>(v - 1)]);
        pmf[projected] += p;
    }
    return JointDistribution(std::move(vars), std::move(pmf));
}

double JointDistribution::entropy(Mask subset) const
{
    check_subset(*this, subset);
    if (subset == 0)
        return 0.0;
    const std::vector<int> keep = elements_of(subset);
    std::map<std::vector<int>, Rat> projected;
    for (const auto& [outcome, p] : pmf_) {
        std::vector<int> key;
        key.reserve(keep.size());
        for (int v : keep)
            key.push_back(outcome[static_cast<std::size_t>(v - 1)]);
        projected[key] += p;
    }
    double h = 0.0;
    for (const auto& [key, p] : projected) {
        const double pd = to_double(p);
        if (pd > 0.0)
            h -= pd * std::log2(pd);
    }
    return h;
}

double JointDistribution::conditional_entropy(Mask target, Mask given) const
{
    if (target & given)
        throw std::invalid_argument("conditional_entropy: subsets must be disjoint");
    return entropy(target | given) - entropy(given);
}

FloatSetFunction JointDistribution::entropy_vector() const
{
    if (variable_count() > 12)
        throw std::invalid_argument("entropy_vector: capped at 12 variables");
    FloatSetFunction v(variable_count());
    for (Mask s = 1; s <= v.full(); ++s)
        v.at(s) = entropy(s);
    return v;
}

UniformityReport is_uniform_on_support(const JointDistribution& d, int var)
{
    if (var < 1 || var > d.variable_count())
        throw std::invalid_argument("is_uniform_on_support: variable out of range");
    const JointDistribution m = d.marginal(element_bit(var));
    UniformityReport rep;
    const Rat* first = nullptr;
    bool all_equal = true;
    for (const auto& [outcome, p] : m.pmf()) {
        ++rep.support;
        if (!first)
            first = &p;
        else if (p != *first)
            all_equal = false;
    }
    rep.uniform = all_equal && rep.support > 0;
    return rep;
}

EntropyValue::EntropyValue(Rat coeff, int base)
    : coeff_(std::move(coeff)), base_(base)
{
    if (base_ < 2)
        throw std::invalid_argument("EntropyValue: base must be >= 2");
    if (coeff_ == 0) {
        base_ = 2;
        return;
    }
    // Smallest base: if base = j^t, rewrite as coefficient t over base j.
    for (int j = 2; j * j <= base_; ++j) {
        int t = 0;
        int rest = base_;
        while (rest % j == 0) {
            rest /= j;
            ++t;
        }
        if (rest == 1) {
            coeff_ *= t;
            base_ = j;
            return;
        }
    }
}

double EntropyValue::bits() const
{
    return to_double(coeff_) * std::log2(static_cast<double>(base_));
}

std::string EntropyValue::str() const
{
    if (base_ == 2)
        return rat_to_string(coeff_);
    return rat_to_string(coeff_) + "*log2(" + std::to_string(base_) + ")";
}

} // namespace wrank
