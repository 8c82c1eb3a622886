#ifndef WRANK_RATIONAL_HPP
#define WRANK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace wrank {

// Exact arithmetic everywhere; doubles appear only at entropy evaluation
// and in brute-force comparisons.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Renders "p" for integers, "p/q" otherwise. Denominators are always positive.
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q" with optional leading '-'. Returns nullopt on
// malformed input or zero denominator.
std::optional<Rat> rat_from_string(const std::string& s);

} // namespace wrank

#endif
