#ifndef WRANK_CORE_HPP
#define WRANK_CORE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "wrank/rational.hpp"

namespace wrank {

// Subsets of a ground set {1, ..., n} are bitmasks: bit i-1 <=> element i.
// Ground sets stay small (n <= 20), so 32 bits is plenty.
using Mask = std::uint32_t;

inline Mask full_mask(int n) { return (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1); }

inline int mask_size(Mask m) { return std::popcount(m); }

inline bool mask_contains(Mask m, int element) { return (m >> (element - 1)) & 1u; }

inline Mask element_bit(int element) { return Mask{1} << (element - 1); }

std::vector<int> elements_of(Mask m);

Mask mask_from_elements(const std::vector<int>& elements);

// One exact nonnegative rational weight per ground set element.
class WeightFunction {
public:
    explicit WeightFunction(std::vector<Rat> weights);

    static WeightFunction ones(int n);

    int size() const { return static_cast<int>(weights_.size()); }
    const Rat& of(int element) const { return weights_[static_cast<std::size_t>(element - 1)]; }
    const std::vector<Rat>& values() const { return weights_; }

    Rat total(Mask subset) const;
    bool integral() const;

private:
    std::vector<Rat> weights_;
};

} // namespace wrank

#endif
