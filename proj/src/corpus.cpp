#include "wrank/corpus.hpp"

namespace wrank {

Graph triangle_graph()
{
    return Graph{3, {{1, 2}, {2, 3}, {1, 3}}};
}

Graph k4_graph()
{
    return Graph{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
}

Graph subdivided_triangle()
{
    return Graph{6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}}};
}

Graph doubled_triangle()
{
    return Graph{3, {{1, 2}, {1, 2}, {2, 3}, {2, 3}, {1, 3}, {1, 3}}};
}

BitMatrix fano_matrix()
{
    BitMatrix m(3, 7);
    for (int i = 1; i <= 7; ++i) {
        for (int r = 0; r < 3; ++r)
            m.set(r, i - 1, (i >> (2 - r)) & 1);
    }
    return m;
}

Matroid fano()
{
    return Matroid::binary(fano_matrix());
}

std::vector<NamedMatroid> uniform_family(int max_n)
{
    std::vector<NamedMatroid> out;
    for (int n = 1; n <= max_n; ++n) {
        for (int r = 0; r <= n; ++r) {
            out.push_back({"uniform_" + std::to_string(r) + "_" + std::to_string(n),
                           Matroid::uniform(r, n)});
        }
    }
    return out;
}

std::vector<NamedMatroid> corpus_matroids()
{
    std::vector<NamedMatroid> out = uniform_family();
    out.push_back({"triangle", Matroid::graphic(triangle_graph())});
    out.push_back({"k4", Matroid::graphic(k4_graph())});
    out.push_back({"fano", fano()});
    out.push_back({"fig2b", Matroid::graphic(subdivided_triangle())});
    out.push_back({"fig2c", Matroid::graphic(doubled_triangle())});
    return out;
}

std::vector<NamedMatroid> corpus_binary_matroids()
{
    return {
        {"triangle_inc", binary_from_graphic(triangle_graph())},
        {"k4_inc", binary_from_graphic(k4_graph())},
        {"fano", fano()},
        {"fig2b_inc", binary_from_graphic(subdivided_triangle())},
        {"fig2c_inc", binary_from_graphic(doubled_triangle())},
    };
}

std::vector<std::pair<std::string, Graph>> corpus_graphs()
{
    return {
        {"triangle", triangle_graph()},
        {"k4", k4_graph()},
        {"fig2b", subdivided_triangle()},
        {"fig2c", doubled_triangle()},
    };
}

} // namespace wrank
