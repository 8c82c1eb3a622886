#include "wrank/rational.hpp"

#include <cctype>

namespace wrank {

std::string rat_to_string(const Rat& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

namespace {

bool parse_int(const std::string& s, Int& out)
{
    if (s.empty())
        return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    out = Int(s);
    return true;
}

} // namespace

std::optional<Rat> rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    Int num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_int(s, num))
            return std::nullopt;
    } else {
        if (!parse_int(s.substr(0, slash), num))
            return std::nullopt;
        if (!parse_int(s.substr(slash + 1), den))
            return std::nullopt;
        if (den == 0)
            return std::nullopt;
    }
    return Rat(num, den);
}

} // namespace wrank
