#ifndef WRANK_CORPUS_HPP
#define WRANK_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "wrank/matroid.hpp"

namespace wrank {

// Built-in example graphs and matroids used by the CLI corpus, the
// figure2 command, and the test suites.

Graph triangle_graph();       // 3 vertices, edges {12, 23, 13}
Graph k4_graph();             // complete graph on 4 vertices, 6 edges
Graph subdivided_triangle();  // the 6-cycle: triangle with each edge split
Graph doubled_triangle();     // 3 vertices, each triangle edge doubled

// 3 x 7 over F2; column i (1-based) is the binary expansion of i with
// row 0 the most significant bit, so {1,2,3} is the line {001,010,011}.
BitMatrix fano_matrix();
Matroid fano();

struct NamedMatroid {
    std::string name;
    Matroid matroid;
};

// Uniform matroids U(r, n) for 1 <= n <= max_n, 0 <= r <= n.
std::vector<NamedMatroid> uniform_family(int max_n = 5);

// Everything: uniform family, triangle, K4, Fano, the Fig. 2 shapes.
std::vector<NamedMatroid> corpus_matroids();

// Binary representations only (incidence matrices and Fano), n <= 7.
std::vector<NamedMatroid> corpus_binary_matroids();

std::vector<std::pair<std::string, Graph>> corpus_graphs();

} // namespace wrank

#endif
