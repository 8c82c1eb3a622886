#include "wrank/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace wrank {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_(static_cast<std::size_t>(rows), 0)
{
    if (rows < 0 || cols < 0 || cols > 64)
        throw std::invalid_argument("BitMatrix: need 0 <= cols <= 64 and rows >= 0");
}

BitMatrix BitMatrix::from_row_words(int cols, std::vector<std::uint64_t> words)
{
    BitMatrix m(static_cast<int>(words.size()), cols);
    const std::uint64_t valid = (cols == 64) ? ~0ull : ((1ull << cols) - 1);
    for (auto w : words)
        if (w & ~valid)
            throw std::invalid_argument("BitMatrix: row word has bits beyond cols");
    m.words_ = std::move(words);
    return m;
}

bool BitMatrix::get(int r, int c) const
{
    return (words_[static_cast<std::size_t>(r)] >> c) & 1u;
}

void BitMatrix::set(int r, int c, bool value)
{
    const std::uint64_t bit = 1ull << c;
    if (value)
        words_[static_cast<std::size_t>(r)] |= bit;
    else
        words_[static_cast<std::size_t>(r)] &= ~bit;
}

std::uint64_t BitMatrix::column_word(int c) const
{
    if (rows_ > 64)
        throw std::invalid_argument("BitMatrix::column_word: more than 64 rows");
    std::uint64_t w = 0;
    for (int r = 0; r < rows_; ++r)
        if (get(r, c))
            w |= 1ull << r;
    return w;
}

void BitMatrix::append_row(std::uint64_t word)
{
    const std::uint64_t valid = (cols_ == 64) ? ~0ull : ((1ull << cols_) - 1);
    if (word & ~valid)
        throw std::invalid_argument("BitMatrix: row word has bits beyond cols");
    words_.push_back(word);
    ++rows_;
}

BitMatrix BitMatrix::transposed() const
{
    if (rows_ > 64)
        throw std::invalid_argument("BitMatrix::transposed: more than 64 rows");
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::selected_columns(std::uint32_t mask) const
{
    const int kept = std::popcount(mask);
    BitMatrix out(rows_, kept);
    for (int r = 0; r < rows_; ++r) {
        int oc = 0;
        for (int c = 0; c < cols_; ++c) {
            if (!(mask >> c & 1u))
                continue;
            if (get(r, c))
                out.set(r, oc, true);
            ++oc;
        }
    }
    return out;
}

namespace {

// Eliminates to row echelon form in place; returns (rank, pivot columns).
std::pair<int, std::vector<int>> gf2_echelon(std::vector<std::uint64_t>& rows, int cols)
{
    int rank = 0;
    std::vector<int> pivots;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        const std::uint64_t bit = 1ull << c;
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[static_cast<std::size_t>(r)] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && (rows[static_cast<std::size_t>(r)] & bit))
                rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
        pivots.push_back(c);
        ++rank;
    }
    return {rank, pivots};
}

} // namespace

int gf2_rank(const BitMatrix& m)
{
    std::vector<std::uint64_t> rows = m.row_words();
    return gf2_echelon(rows, m.cols()).first;
}

bool gf2_in_rowspace(const BitMatrix& m, std::uint64_t v, int v_len)
{
    if (v_len != m.cols())
        throw std::invalid_argument("gf2_in_rowspace: vector length does not match cols");
    std::vector<std::uint64_t> rows = m.row_words();
    auto [rank, pivots] = gf2_echelon(rows, m.cols());
    for (int i = 0; i < rank; ++i)
        if (v >> pivots[static_cast<std::size_t>(i)] & 1u)
            v ^= rows[static_cast<std::size_t>(i)];
    return v == 0;
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("RationalMatrix: negative dimension");
}

std::size_t RationalMatrix::index(int r, int c) const
{
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_)
         + static_cast<std::size_t>(c);
}

void RationalMatrix::append_row(const std::vector<Rat>& row)
{
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("RationalMatrix::append_row: wrong length");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

int rational_rank(RationalMatrix m)
{
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(rank, j));
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, c) == 0)
                continue;
            const Rat factor = m.at(r, c) / m.at(rank, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(r, j) -= factor * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

ZkMatrix::ZkMatrix(int k, int rows, int cols)
    : k_(k), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0)
{
    if (k < 2)
        throw std::invalid_argument("ZkMatrix: modulus must be >= 2");
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("ZkMatrix: negative dimension");
}

std::size_t ZkMatrix::index(int r, int c) const
{
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_)
         + static_cast<std::size_t>(c);
}

void ZkMatrix::set(int r, int c, long long value)
{
    long long v = value % k_;
    if (v < 0)
        v += k_;
    entries_[index(r, c)] = static_cast<int>(v);
}

ZkMatrix ZkMatrix::selected_columns(std::uint32_t mask) const
{
    ZkMatrix out(k_, rows_, std::popcount(mask));
    for (int r = 0; r < rows_; ++r) {
        int oc = 0;
        for (int c = 0; c < cols_; ++c) {
            if (!(mask >> c & 1u))
                continue;
            out.set(r, oc, get(r, c));
            ++oc;
        }
    }
    return out;
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

Int int_gcd(Int a, Int b)
{
    a = int_abs(a);
    b = int_abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool block_is_zero(const std::vector<std::vector<Int>>& m, int t)
{
    for (std::size_t i = static_cast<std::size_t>(t); i < m.size(); ++i)
        for (std::size_t j = static_cast<std::size_t>(t); j < m[i].size(); ++j)
            if (m[i][j] != 0)
                return false;
    return true;
}

} // namespace

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m)
{
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("smith_diagonal: ragged matrix");

    const int nmin = std::min(rows, cols);
    std::vector<Int> diag(static_cast<std::size_t>(nmin), 0);

    for (int t = 0; t < nmin; ++t) {
        if (block_is_zero(m, t))
            break;
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t,t).
            int pr = -1, pc = -1;
            Int best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (m[i][j] == 0)
                        continue;
                    Int a = int_abs(m[i][j]);
                    if (pr < 0 || a < best) {
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            std::swap(m[static_cast<std::size_t>(t)], m[static_cast<std::size_t>(pr)]);
            if (pc != t)
                for (int i = 0; i < rows; ++i)
                    std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                              m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
            if (m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] < 0)
                for (int j = 0; j < cols; ++j)
                    m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] *= -1;

            const Int p = m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
            bool reduced = true;
            for (int i = t + 1; i < rows; ++i) {
                const Int q = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] / p;
                if (q != 0)
                    for (int j = t; j < cols; ++j)
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                            q * m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0)
                    reduced = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                const Int q = m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] / p;
                if (q != 0)
                    for (int i = t; i < rows; ++i)
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                            q * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0)
                    reduced = false;
            }
            if (!reduced)
                continue;

            // Pivot must divide the rest of the block for the d_1 | d_2 | ...
            // chain; if not, fold the offending row in and keep reducing.
            int bad_row = -1;
            for (int i = t + 1; i < rows && bad_row < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % p != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row < 0)
                break;
            for (int j = 0; j < cols; ++j)
                m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] +=
                    m[static_cast<std::size_t>(bad_row)][static_cast<std::size_t>(j)];
        }
        diag[static_cast<std::size_t>(t)] =
            m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
    }
    return diag;
}

Int zk_image_size(const ZkMatrix& m)
{
    std::vector<std::vector<Int>> lift(
        static_cast<std::size_t>(m.rows()),
        std::vector<Int>(static_cast<std::size_t>(m.cols()), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            lift[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.get(r, c);

    Int size = 1;
    const Int k = m.modulus();
    for (const Int& d : smith_diagonal(std::move(lift)))
        size *= k / int_gcd(d, k);
    return size;
}

} // namespace wrank
