#ifndef WRANK_LINALG_HPP
#define WRANK_LINALG_HPP

#include <cstdint>
#include <vector>

#include "wrank/rational.hpp"

namespace wrank {

// Dense matrix over F2. Rows are stored as 64-bit words, bit c of row r
// is column c, so at most 64 columns. All operations are pure.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    // Rows given as packed words, bit c = column c.
    static BitMatrix from_row_words(int cols, std::vector<std::uint64_t> words);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);

    std::uint64_t row_word(int r) const { return words_[static_cast<std::size_t>(r)]; }
    const std::vector<std::uint64_t>& row_words() const { return words_; }

    // Column c packed as a word, bit r = row r. Requires rows <= 64.
    std::uint64_t column_word(int c) const;

    void append_row(std::uint64_t word);

    BitMatrix transposed() const;

    // Submatrix keeping the columns whose bit is set in mask, in ascending
    // column order.
    BitMatrix selected_columns(std::uint32_t mask) const;

    bool operator==(const BitMatrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<std::uint64_t> words_;
};

// Row rank over F2 by Gaussian elimination on packed words.
int gf2_rank(const BitMatrix& m);

// True iff v (packed bits, v_len = m.cols()) is an F2 combination of the
// rows of m. Throws std::invalid_argument on length mismatch.
bool gf2_in_rowspace(const BitMatrix& m, std::uint64_t v, int v_len);

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return entries_[index(r, c)]; }
    const Rat& at(int r, int c) const { return entries_[index(r, c)]; }

    void append_row(const std::vector<Rat>& row);

private:
    std::size_t index(int r, int c) const;

    int rows_;
    int cols_;
    std::vector<Rat> entries_;
};

// Exact rank via rational Gaussian elimination. No floating point.
int rational_rank(RationalMatrix m);

// Dense matrix over Z_k, entries reduced into [0, k).
class ZkMatrix {
public:
    ZkMatrix(int k, int rows, int cols);

    int modulus() const { return k_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int get(int r, int c) const { return entries_[index(r, c)]; }
    // Reduces value mod k, accepting negatives.
    void set(int r, int c, long long value);

    ZkMatrix selected_columns(std::uint32_t mask) const;

private:
    std::size_t index(int r, int c) const;

    int k_;
    int rows_;
    int cols_;
    std::vector<int> entries_;
};

// Diagonal of the Smith normal form of an integer matrix: nonnegative
// entries d_1 | d_2 | ... of length min(rows, cols).
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);

// Cardinality of { x^T M mod k : x in Z_k^rows }, via the Smith normal
// form of the integer lift: product over the diagonal of k / gcd(d_i, k).
Int zk_image_size(const ZkMatrix& m);

} // namespace wrank

#endif
