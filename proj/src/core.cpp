#include "wrank/core.hpp"

#include <stdexcept>

namespace wrank {

std::vector<int> elements_of(Mask m)
{
    std::vector<int> out;
    for (int e = 1; m != 0; ++e, m >>= 1)
        if (m & 1u)
            out.push_back(e);
    return out;
}

Mask mask_from_elements(const std::vector<int>& elements)
{
    Mask m = 0;
    for (int e : elements) {
        if (e < 1 || e > 32)
            throw std::invalid_argument("mask_from_elements: element out of range");
        m |= element_bit(e);
    }
    return m;
}

WeightFunction::WeightFunction(std::vector<Rat> weights)
    : weights_(std::move(weights))
{
    for (const Rat& w : weights_)
        if (w < 0)
            throw std::invalid_argument("WeightFunction: negative weight");
}

WeightFunction WeightFunction::ones(int n)
{
    return WeightFunction(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
}

Rat WeightFunction::total(Mask subset) const
{
    Rat sum = 0;
    for (int e = 1; e <= size(); ++e)
        if (mask_contains(subset, e))
            sum += of(e);
    return sum;
}

bool WeightFunction::integral() const
{
    for (const Rat& w : weights_)
        if (!is_integer(w))
            return false;
    return true;
}

} // namespace wrank
