#include "wrank/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wrank {
namespace {

std::string mask_hex(Mask m)
{
    std::ostringstream os;
    os << "0x" << std::hex << m;
    return os.str();
}

void check_subset_of(Mask s, Mask full, const char* who)
{
    if (s & ~full)
        throw std::invalid_argument(std::string(who) + ": subset outside the ground set");
}

double entropy_from_counts(const std::vector<long long>& counts, double total)
{
    double h = 0.0;
    for (long long c : counts) {
        if (c > 0)
            h += static_cast<double>(c) * std::log2(static_cast<double>(c));
    }
    return std::log2(total) - h / total;
}

} // namespace

BinaryConstruction::BinaryConstruction(Matroid m, std::vector<int> weights, int w_max)
    : matroid_(std::move(m)), weights_(std::move(weights)), w_max_(w_max)
{
}

int BinaryConstruction::weight(int element) const
{
    if (element < 1 || element > size())
        throw std::invalid_argument("BinaryConstruction: element out of range");
    return weights_[static_cast<std::size_t>(element - 1)];
}

std::vector<std::uint64_t> BinaryConstruction::block_rows(int element) const
{
    if (bit_dim() > 64)
        throw std::invalid_argument("block_rows: bit space wider than 64");
    const int m = rows();
    const std::uint64_t v = matroid_.representative().column_word(element - 1);
    std::vector<std::uint64_t> out;
    for (int j = 0; j < weight(element); ++j)
        out.push_back(v << (j * m));
    return out;
}

BinaryConstruction build_binary(Matroid m, const WeightFunction& w)
{
    if (m.kind() != Matroid::Kind::Binary)
        throw std::invalid_argument("build_binary: matroid must be binary");
    if (w.size() != m.size())
        throw std::invalid_argument("build_binary: weight count != ground set size");
    if (m.representative().rows() > 64)
        throw std::invalid_argument("build_binary: representative taller than 64 rows");
    if (!w.integral())
        throw std::invalid_argument("build_binary: weights must be integers");
    std::vector<int> weights;
    int w_max = 0;
    for (int e = 1; e <= m.size(); ++e) {
        const Rat& r = w.of(e);
        if (numerator(r) > 1000000)
            throw std::invalid_argument("build_binary: weight unreasonably large");
        const int v = numerator(r).convert_to<int>();
        weights.push_back(v);
        w_max = std::max(w_max, v);
    }
    return BinaryConstruction(std::move(m), std::move(weights), w_max);
}

EntropyValue algebraic_entropy_binary(const BinaryConstruction& c, Mask s)
{
    check_subset_of(s, c.matroid().full_set(), "algebraic_entropy_binary");
    const BitMatrix& rep = c.matroid().representative();
    int bits = 0;
    // The stacked block matrix is block-diagonal: block j holds v_e for
    // every selected e with w_e >= j, so its rank is the sum over blocks.
    for (int j = 1; j <= c.w_max(); ++j) {
        BitMatrix block(0, rep.rows());
        for (int e : elements_of(s)) {
            if (c.weight(e) >= j)
                block.append_row(rep.column_word(e - 1));
        }
        bits += gf2_rank(block);
    }
    return EntropyValue(Rat(bits), 2);
}

namespace {

// Block rows of every element, for bit spaces that fit in a word.
std::vector<std::vector<std::uint64_t>> all_block_rows(const BinaryConstruction& c)
{
    std::vector<std::vector<std::uint64_t>> rows;
    for (int e = 1; e <= c.size(); ++e)
        rows.push_back(c.block_rows(e));
    return rows;
}

int parity(std::uint64_t x)
{
    return std::popcount(x) & 1;
}

void check_bit_cap(const BinaryConstruction& c, const BruteForceCaps& caps, const char* who)
{
    if (c.bit_dim() > caps.bit_cap || c.bit_dim() > 62)
        throw std::invalid_argument(std::string(who) + ": bit space dimension " +
                                    std::to_string(c.bit_dim()) + " exceeds the brute-force cap");
}

} // namespace

JointDistribution brute_force_distribution_binary(const BinaryConstruction& c,
                                                  const BruteForceCaps& caps)
{
    check_bit_cap(c, caps, "brute_force_distribution_binary");
    const auto rows = all_block_rows(c);
    const std::uint64_t total = std::uint64_t{1} << c.bit_dim();
    std::map<std::vector<int>, long long> counts;
    std::vector<int> outcome(static_cast<std::size_t>(c.size()));
    for (std::uint64_t x = 0; x < total; ++x) {
        for (int e = 1; e <= c.size(); ++e) {
            int value = 0;
            const auto& br = rows[static_cast<std::size_t>(e - 1)];
            for (std::size_t j = 0; j < br.size(); ++j)
                value |= parity(x & br[j]) << j;
            outcome[static_cast<std::size_t>(e - 1)] = value;
        }
        ++counts[outcome];
    }
    std::vector<Variable> vars;
    for (int e = 1; e <= c.size(); ++e)
        vars.push_back({"Y" + std::to_string(e), 1 << c.weight(e)});
    std::map<std::vector<int>, Rat> pmf;
    for (const auto& [o, cnt] : counts)
        pmf.emplace(o, Rat(cnt, static_cast<long long>(total)));
    return JointDistribution(std::move(vars), std::move(pmf));
}

double brute_force_entropy_binary(const BinaryConstruction& c, Mask s,
                                  const BruteForceCaps& caps)
{
    check_subset_of(s, c.matroid().full_set(), "brute_force_entropy_binary");
    check_bit_cap(c, caps, "brute_force_entropy_binary");
    if (s == 0)
        return 0.0;
    // Flatten the selected elements' block rows; the outcome of x is the
    // bit string of row parities.
    std::vector<std::uint64_t> rows;
    for (int e : elements_of(s)) {
        for (std::uint64_t r : c.block_rows(e))
            rows.push_back(r);
    }
    const std::uint64_t total = std::uint64_t{1} << c.bit_dim();
    std::vector<long long> counts;
    if (rows.size() <= 63) {
        std::unordered_map<std::uint64_t, long long> seen;
        for (std::uint64_t x = 0; x < total; ++x) {
            std::uint64_t key = 0;
            for (std::size_t j = 0; j < rows.size(); ++j)
                key |= static_cast<std::uint64_t>(parity(x & rows[j])) << j;
            ++seen[key];
        }
        for (const auto& [key, cnt] : seen)
            counts.push_back(cnt);
    } else {
        std::map<std::vector<int>, long long> seen;
        std::vector<int> key(rows.size());
        for (std::uint64_t x = 0; x < total; ++x) {
            for (std::size_t j = 0; j < rows.size(); ++j)
                key[j] = parity(x & rows[j]);
            ++seen[key];
        }
        for (const auto& [k, cnt] : seen)
            counts.push_back(cnt);
    }
    return entropy_from_counts(counts, static_cast<double>(total));
}

GraphicZkConstruction::GraphicZkConstruction(Graph g, ZkMatrix coeff)
    : graph_(std::move(g)), coeff_(std::move(coeff))
{
}

GraphicZkConstruction build_graphic_zk(Graph g, int k)
{
    if (k < 2)
        throw std::invalid_argument("build_graphic_zk: need k >= 2");
    Matroid::graphic(g);  // endpoint/range validation
    ZkMatrix coeff(k, g.vertices, static_cast<int>(g.edges.size()));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v)
            continue;  // zero column
        coeff.set(std::max(u, v) - 1, e, 1);
        coeff.set(std::min(u, v) - 1, e, -1);
    }
    return GraphicZkConstruction(std::move(g), std::move(coeff));
}

EntropyValue algebraic_entropy_zk(const GraphicZkConstruction& c, Mask s)
{
    check_subset_of(s, full_mask(c.size()), "algebraic_entropy_zk");
    const Int image = zk_image_size(c.coefficients().selected_columns(s));
    Int power = 1;
    int t = 0;
    while (power < image) {
        power *= c.modulus();
        ++t;
    }
    if (power != image)
        throw std::logic_error("algebraic_entropy_zk: image size not a power of k");
    return EntropyValue(Rat(t), c.modulus());
}

namespace {

long long zk_state_count(const GraphicZkConstruction& c, const BruteForceCaps& caps,
                         const char* who)
{
    long long states = 1;
    for (int v = 0; v < c.graph().vertices; ++v) {
        states *= c.modulus();
        if (states > caps.state_cap)
            throw std::invalid_argument(std::string(who) +
                                        ": assignment count exceeds the brute-force cap");
    }
    return states;
}

// Applies fn to the edge-outcome tuple of every vertex assignment.
template <typename Fn>
void for_each_zk_outcome(const GraphicZkConstruction& c, Fn&& fn)
{
    const int k = c.modulus();
    const int nv = c.graph().vertices;
    std::vector<int> x(static_cast<std::size_t>(nv), 0);
    std::vector<int> outcome(static_cast<std::size_t>(c.size()));
    for (;;) {
        for (int e = 0; e < c.size(); ++e) {
            const auto& [u, v] = c.graph().edges[static_cast<std::size_t>(e)];
            const int head = std::max(u, v) - 1;
            const int tail = std::min(u, v) - 1;
            outcome[static_cast<std::size_t>(e)] =
                u == v ? 0 : (x[static_cast<std::size_t>(head)] -
                              x[static_cast<std::size_t>(tail)] + k) % k;
        }
        fn(outcome);
        int pos = 0;
        while (pos < nv && ++x[static_cast<std::size_t>(pos)] == k) {
            x[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == nv)
            break;
    }
}

} // namespace

JointDistribution brute_force_distribution_zk(const GraphicZkConstruction& c,
                                              const BruteForceCaps& caps)
{
    const long long states = zk_state_count(c, caps, "brute_force_distribution_zk");
    std::map<std::vector<int>, long long> counts;
    for_each_zk_outcome(c, [&](const std::vector<int>& outcome) { ++counts[outcome]; });
    std::vector<Variable> vars;
    for (int e = 1; e <= c.size(); ++e)
        vars.push_back({"Y" + std::to_string(e), c.modulus()});
    std::map<std::vector<int>, Rat> pmf;
    for (const auto& [o, cnt] : counts)
        pmf.emplace(o, Rat(cnt, states));
    return JointDistribution(std::move(vars), std::move(pmf));
}

double brute_force_entropy_zk(const GraphicZkConstruction& c, Mask s,
                              const BruteForceCaps& caps)
{
    check_subset_of(s, full_mask(c.size()), "brute_force_entropy_zk");
    const long long states = zk_state_count(c, caps, "brute_force_entropy_zk");
    if (s == 0)
        return 0.0;
    const std::vector<int> keep = elements_of(s);
    std::map<std::vector<int>, long long> seen;
    std::vector<int> key(keep.size());
    for_each_zk_outcome(c, [&](const std::vector<int>& outcome) {
        for (std::size_t i = 0; i < keep.size(); ++i)
            key[i] = outcome[static_cast<std::size_t>(keep[i] - 1)];
        ++seen[key];
    });
    std::vector<long long> counts;
    for (const auto& [k2, cnt] : seen)
        counts.push_back(cnt);
    return entropy_from_counts(counts, static_cast<double>(states));
}

VerifyReport verify_theorem2(const Matroid& m, const WeightFunction& w,
                             double tol, const BruteForceCaps& caps)
{
    const BinaryConstruction c = build_binary(m, w);
    VerifyReport report;
    report.brute_force_used = c.bit_dim() <= caps.bit_cap && c.bit_dim() <= 62;
    for (Mask a = 1; a <= m.full_set(); ++a) {
        SubsetCheck check;
        check.subset = a;
        check.expected = EntropyValue(weighted_rank(m, w, a), 2);
        check.algebraic = algebraic_entropy_binary(c, a);
        check.pass = check.algebraic == check.expected;
        if (report.brute_force_used) {
            check.brute = brute_force_entropy_binary(c, a, caps);
            if (std::abs(*check.brute - check.expected.bits()) > tol)
                check.pass = false;
        }
        if (!check.pass && report.pass) {
            report.pass = false;
            report.failure = "subset " + mask_hex(a) + ": expected " + check.expected.str() +
                             ", algebraic " + check.algebraic.str();
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

namespace {

bool is_circuit_of(const Matroid& m, Mask s)
{
    if (s == 0 || m.is_independent(s))
        return false;
    for (int e : elements_of(s)) {
        if (!m.is_independent(s & ~element_bit(e)))
            return false;
    }
    return true;
}

// Lightest element, ties to the smallest index.
int lightest_element(const WeightFunction& w, Mask s)
{
    int best = 0;
    for (int e : elements_of(s)) {
        if (best == 0 || w.of(e) < w.of(best))
            best = e;
    }
    return best;
}

} // namespace

bool verify_lemma2(const BinaryConstruction& c, Mask circuit, Mask superset,
                   double tol, const BruteForceCaps& caps)
{
    if (circuit & ~superset)
        throw std::invalid_argument("verify_lemma2: circuit not inside superset");
    check_subset_of(superset, c.matroid().full_set(), "verify_lemma2");
    if (!is_circuit_of(c.matroid(), circuit))
        throw std::invalid_argument("verify_lemma2: given set is not a circuit");
    WeightFunction w = [&] {
        std::vector<Rat> ws;
        for (int e = 1; e <= c.size(); ++e)
            ws.emplace_back(c.weight(e));
        return WeightFunction(std::move(ws));
    }();
    const Mask reduced = superset & ~element_bit(lightest_element(w, circuit));
    bool ok = algebraic_entropy_binary(c, superset) == algebraic_entropy_binary(c, reduced);
    if (c.bit_dim() <= caps.bit_cap && c.bit_dim() <= 62) {
        const double a = brute_force_entropy_binary(c, superset, caps);
        const double b = brute_force_entropy_binary(c, reduced, caps);
        ok = ok && std::abs(a - b) <= tol;
    }
    return ok;
}

bool verify_lemma3_prop3(const BinaryConstruction& c, Mask ind, const BruteForceCaps& caps)
{
    check_subset_of(ind, c.matroid().full_set(), "verify_lemma3_prop3");
    if (!c.matroid().is_independent(ind))
        throw std::invalid_argument("verify_lemma3_prop3: set is dependent");
    if (ind == 0)
        return true;
    int weight_sum = 0;
    for (int e : elements_of(ind))
        weight_sum += c.weight(e);
    if (!(algebraic_entropy_binary(c, ind) == EntropyValue(Rat(weight_sum), 2)))
        return false;
    check_bit_cap(c, caps, "verify_lemma3_prop3");
    // Exact factorization: count joint outcomes and per-element outcomes,
    // then require cnt(t) * total^{r-1} == prod_e cnt_e(t_e) everywhere on
    // the product of supports.
    const std::vector<int> keep = elements_of(ind);
    const auto rows = all_block_rows(c);
    const std::uint64_t total = std::uint64_t{1} << c.bit_dim();
    std::map<std::vector<int>, long long> joint;
    std::vector<std::map<int, long long>> marginals(keep.size());
    std::vector<int> tuple(keep.size());
    for (std::uint64_t x = 0; x < total; ++x) {
        for (std::size_t i = 0; i < keep.size(); ++i) {
            int value = 0;
            const auto& br = rows[static_cast<std::size_t>(keep[i] - 1)];
            for (std::size_t j = 0; j < br.size(); ++j)
                value |= parity(x & br[j]) << j;
            tuple[i] = value;
            ++marginals[i][value];
        }
        ++joint[tuple];
    }
    // Odometer over the product of the marginal supports.
    std::vector<std::vector<std::pair<int, long long>>> support;
    for (const auto& m : marginals)
        support.emplace_back(m.begin(), m.end());
    std::vector<std::size_t> idx(keep.size(), 0);
    for (;;) {
        Int prod = 1;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            tuple[i] = support[i][idx[i]].first;
            prod *= support[i][idx[i]].second;
        }
        const auto it = joint.find(tuple);
        Int lhs = it == joint.end() ? Int(0) : Int(it->second);
        for (std::size_t i = 1; i < keep.size(); ++i)
            lhs *= total;
        if (lhs != prod)
            return false;
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == support[pos].size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size())
            break;
    }
    return true;
}

VerifyReport verify_theorem4(const Graph& g, int k, double tol, const BruteForceCaps& caps)
{
    const GraphicZkConstruction c = build_graphic_zk(g, k);
    const Matroid m = Matroid::graphic(g);
    VerifyReport report;
    report.brute_force_used = true;
    try {
        zk_state_count(c, caps, "verify_theorem4");
    } catch (const std::invalid_argument&) {
        report.brute_force_used = false;
    }
    const double log2k = std::log2(static_cast<double>(k));
    for (Mask a = 1; a <= m.full_set(); ++a) {
        SubsetCheck check;
        check.subset = a;
        const int r = m.rank(a);
        check.expected = EntropyValue(Rat(r), k);
        check.algebraic = algebraic_entropy_zk(c, a);
        check.pass = check.algebraic == check.expected;
        if (report.brute_force_used) {
            check.brute = brute_force_entropy_zk(c, a, caps);
            if (std::abs(*check.brute - r * log2k) > tol)
                check.pass = false;
        }
        if (!check.pass && report.pass) {
            report.pass = false;
            report.failure = "subset " + mask_hex(a) + ": expected " + check.expected.str() +
                             ", algebraic " + check.algebraic.str();
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

CircuitUniformityReport verify_circuit_uniformity(const JointDistribution& d,
                                                  double w0, double tol)
{
    const int m = d.variable_count();
    if (m < 2)
        throw std::invalid_argument("verify_circuit_uniformity: need at least 2 variables");
    CircuitUniformityReport rep;
    const Mask full = full_mask(m);
    // Precondition: the constant-weight circuit entropy profile.
    for (Mask s = 1; s <= full; ++s) {
        const double expected = s == full ? (m - 1) * w0 : mask_size(s) * w0;
        if (std::abs(d.entropy(s) - expected) > tol) {
            rep.status = CircuitUniformityReport::Status::PreconditionFailed;
            rep.detail = "entropy profile off at subset " + mask_hex(s);
            return rep;
        }
    }
    for (int j = 1; j <= m; ++j) {
        if (d.conditional_entropy(element_bit(j), full & ~element_bit(j)) > tol) {
            rep.status = CircuitUniformityReport::Status::Fail;
            rep.detail = "variable " + std::to_string(j) + " not determined by the rest";
            return rep;
        }
    }
    long long common = 0;
    for (int j = 1; j <= m; ++j) {
        const UniformityReport u = is_uniform_on_support(d, j);
        if (!u.uniform) {
            rep.status = CircuitUniformityReport::Status::Fail;
            rep.detail = "marginal " + std::to_string(j) + " not uniform on its support";
            return rep;
        }
        if (j == 1)
            common = u.support;
        else if (u.support != common) {
            rep.status = CircuitUniformityReport::Status::Fail;
            rep.detail = "support sizes differ";
            return rep;
        }
    }
    if (std::abs(w0 - std::log2(static_cast<double>(common))) > tol) {
        rep.status = CircuitUniformityReport::Status::Fail;
        rep.detail = "w0 is not log2 of the common support size";
        return rep;
    }
    rep.status = CircuitUniformityReport::Status::Pass;
    rep.k = common;
    return rep;
}

} // namespace wrank
