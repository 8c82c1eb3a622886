#include "wrank/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wrank {
namespace {

[[noreturn]] void fail(const std::string& what)
{
    throw std::runtime_error("matroid file: " + what);
}

const nlohmann::json& field(const nlohmann::json& j, const char* name)
{
    const auto it = j.find(name);
    if (it == j.end())
        fail(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const nlohmann::json& j, const char* name)
{
    const nlohmann::json& v = field(j, name);
    if (!v.is_number_integer())
        fail(std::string("field '") + name + "' must be an integer");
    return v.get<int>();
}

Matroid parse_matroid(const nlohmann::json& j)
{
    const nlohmann::json& type = field(j, "type");
    if (!type.is_string())
        fail("field 'type' must be a string");
    const std::string t = type.get<std::string>();
    if (t == "binary") {
        const nlohmann::json& cols = field(j, "columns");
        if (!cols.is_array() || cols.empty())
            fail("field 'columns' must be a nonempty array of bit strings");
        std::size_t rows = 0;
        for (const auto& c : cols) {
            if (!c.is_string())
                fail("field 'columns' must contain strings");
            if (rows == 0)
                rows = c.get<std::string>().size();
            if (c.get<std::string>().size() != rows || rows == 0)
                fail("columns must be equal-length nonempty bit strings");
        }
        BitMatrix m(static_cast<int>(rows), static_cast<int>(cols.size()));
        for (int e = 0; e < static_cast<int>(cols.size()); ++e) {
            const std::string bits = cols[static_cast<std::size_t>(e)].get<std::string>();
            for (int r = 0; r < static_cast<int>(rows); ++r) {
                const char ch = bits[static_cast<std::size_t>(r)];
                if (ch != '0' && ch != '1')
                    fail("column " + std::to_string(e + 1) + " has a character besides 0/1");
                m.set(r, e, ch == '1');
            }
        }
        return Matroid::binary(std::move(m));
    }
    if (t == "graphic") {
        Graph g;
        g.vertices = int_field(j, "vertices");
        const nlohmann::json& edges = field(j, "edges");
        if (!edges.is_array())
            fail("field 'edges' must be an array of [u, v] pairs");
        for (const auto& e : edges) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                fail("each edge must be a pair of integers");
            g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        try {
            return Matroid::graphic(std::move(g));
        } catch (const std::invalid_argument& ex) {
            fail(ex.what());
        }
    }
    if (t == "uniform") {
        try {
            return Matroid::uniform(int_field(j, "rank"), int_field(j, "size"));
        } catch (const std::invalid_argument& ex) {
            fail(ex.what());
        }
    }
    fail("unknown type '" + t + "' (expected binary, graphic, or uniform)");
}

} // namespace

MatroidFile parse_matroid_file(const nlohmann::json& j)
{
    if (!j.is_object())
        fail("top level must be an object");
    Matroid m = parse_matroid(j);
    std::vector<Rat> ws(static_cast<std::size_t>(m.size()), Rat(1));
    if (const auto it = j.find("weights"); it != j.end()) {
        if (!it->is_array() || static_cast<int>(it->size()) != m.size())
            fail("field 'weights' must list one weight per element");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const nlohmann::json& w = (*it)[i];
            if (w.is_number_integer()) {
                ws[i] = Rat(w.get<long long>());
            } else if (w.is_string()) {
                const auto r = rat_from_string(w.get<std::string>());
                if (!r)
                    fail("weight " + std::to_string(i + 1) + " is not a valid rational");
                ws[i] = *r;
            } else {
                fail("weight " + std::to_string(i + 1) +
                     " must be an integer or a rational string");
            }
            if (ws[i] < 0)
                fail("weight " + std::to_string(i + 1) + " is negative");
        }
    }
    try {
        return MatroidFile{std::move(m), WeightFunction(std::move(ws))};
    } catch (const std::invalid_argument& ex) {
        fail(ex.what());
    }
}

MatroidFile load_matroid_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
    return parse_matroid_file(j);
}

nlohmann::json matroid_file_json(const MatroidFile& f)
{
    nlohmann::json j;
    switch (f.matroid.kind()) {
    case Matroid::Kind::Binary: {
        j["type"] = "binary";
        const BitMatrix& m = f.matroid.representative();
        std::vector<std::string> cols;
        for (int c = 0; c < m.cols(); ++c) {
            std::string bits(static_cast<std::size_t>(m.rows()), '0');
            for (int r = 0; r < m.rows(); ++r) {
                if (m.get(r, c))
                    bits[static_cast<std::size_t>(r)] = '1';
            }
            cols.push_back(std::move(bits));
        }
        j["columns"] = cols;
        break;
    }
    case Matroid::Kind::Graphic: {
        j["type"] = "graphic";
        j["vertices"] = f.matroid.graph().vertices;
        auto edges = nlohmann::json::array();
        for (const auto& [u, v] : f.matroid.graph().edges)
            edges.push_back({u, v});
        j["edges"] = std::move(edges);
        break;
    }
    case Matroid::Kind::Uniform:
        j["type"] = "uniform";
        j["rank"] = f.matroid.uniform_rank();
        j["size"] = f.matroid.size();
        break;
    }
    auto ws = nlohmann::json::array();
    for (const Rat& w : f.weights.values()) {
        if (is_integer(w))
            ws.push_back(numerator(w).convert_to<long long>());
        else
            ws.push_back(rat_to_string(w));
    }
    j["weights"] = std::move(ws);
    return j;
}

std::string subset_key(Mask m, int n)
{
    const int digits = (n + 3) / 4;
    std::ostringstream os;
    os << std::hex << m;
    std::string hex = os.str();
    while (static_cast<int>(hex.size()) < digits)
        hex.insert(hex.begin(), '0');
    return "0x" + hex;
}

std::optional<Mask> parse_subset(const std::string& s, int n)
{
    if (s.empty())
        return std::nullopt;
    Mask mask = 0;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        for (std::size_t i = 2; i < s.size(); ++i) {
            const char c = s[i];
            int digit;
            if (c >= '0' && c <= '9')
                digit = c - '0';
            else if (c >= 'a' && c <= 'f')
                digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                digit = c - 'A' + 10;
            else
                return std::nullopt;
            if (mask > (~Mask{0} >> 4))
                return std::nullopt;  // overflow
            mask = (mask << 4) | static_cast<Mask>(digit);
        }
    } else {
        std::istringstream in(s);
        std::string token;
        while (std::getline(in, token, ',')) {
            try {
                std::size_t used = 0;
                const int e = std::stoi(token, &used);
                if (used != token.size() || e < 1 || e > n)
                    return std::nullopt;
                mask |= element_bit(e);
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        if (mask == 0)
            return std::nullopt;
    }
    if (mask & ~full_mask(n))
        return std::nullopt;
    return mask;
}

nlohmann::json set_function_json(const SetFunctionVector& v)
{
    nlohmann::json j = nlohmann::json::object();
    for (Mask m = 1; m <= v.full(); ++m)
        j[subset_key(m, v.n)] = rat_to_string(v.at(m));
    return j;
}

nlohmann::json float_function_json(const FloatSetFunction& v)
{
    nlohmann::json j = nlohmann::json::object();
    for (Mask m = 1; m <= v.full(); ++m)
        j[subset_key(m, v.n)] = v.at(m);
    return j;
}

nlohmann::json report_json(const VerifyReport& r, int n)
{
    nlohmann::json j;
    j["pass"] = r.pass;
    j["brute_force_used"] = r.brute_force_used;
    j["failure"] = r.failure;
    auto checks = nlohmann::json::array();
    for (const SubsetCheck& c : r.checks) {
        nlohmann::json cj;
        cj["subset"] = subset_key(c.subset, n);
        cj["expected"] = c.expected.str();
        cj["algebraic"] = c.algebraic.str();
        if (c.brute)
            cj["brute"] = *c.brute;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

} // namespace wrank
