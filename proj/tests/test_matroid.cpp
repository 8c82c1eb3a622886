#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testers.hpp"
#include "wrank/corpus.hpp"
#include "wrank/matroid.hpp"

using namespace wrank;
using namespace testers;

TEST_CASE("independence and rank basics")
{
    const Matroid tri = Matroid::graphic(triangle_graph());
    CHECK(tri.is_independent(0));
    CHECK(tri.is_independent(0b011));
    CHECK_FALSE(tri.is_independent(0b111));  // the 3-cycle
    CHECK(tri.rank(0b111) == 2);

    const Matroid u24 = Matroid::uniform(2, 4);
    CHECK(u24.rank(0b0111) == 2);
    CHECK(u24.rank(0b0011) == 2);

    const Matroid f = fano();
    CHECK(f.rank(f.full_set()) == 3);
    CHECK_FALSE(f.is_independent(0b0000111));  // the line {001, 010, 011}

    // self-loop is dependent on its own; a parallel pair too
    const Matroid loopy = Matroid::graphic(Graph{2, {{1, 1}, {1, 2}, {1, 2}}});
    CHECK_FALSE(loopy.is_independent(0b001));
    CHECK_FALSE(loopy.is_independent(0b110));
    CHECK(loopy.rank(0b111) == 1);
}

TEST_CASE("independence axioms hold on the whole corpus (n <= 6)")
{
    for (const auto& [name, m] : corpus_at_most(6)) {
        INFO(name);
        CHECK(axioms_hold(m));
    }
}

TEST_CASE("rank is unit-bounded, monotone, submodular (n <= 6)")
{
    for (const auto& [name, m] : corpus_at_most(6)) {
        INFO(name);
        for (int e = 1; e <= m.size(); ++e)
            CHECK(m.rank(element_bit(e)) <= 1);
        const SetFunctionVector r = phi_vector(m, WeightFunction::ones(m.size()));
        CHECK(is_monotone(r));
        CHECK(pairwise_submodular(r));
        for (Mask s = 0; s <= m.full_set(); ++s)
            CHECK(m.rank(s) == r.value(s));  // unit phi is the rank
    }
}

TEST_CASE("circuits")
{
    CHECK(circuits(Matroid::uniform(1, 2)).circuits == std::vector<Mask>{0b11});
    CHECK(circuits(Matroid::graphic(triangle_graph())).circuits == std::vector<Mask>{0b111});

    const CircuitList fano_c = circuits(fano());
    CHECK(fano_c.circuits.size() == 14);
    int three = 0, four = 0;
    for (Mask c : fano_c.circuits) {
        if (mask_size(c) == 3)
            ++three;
        else if (mask_size(c) == 4)
            ++four;
    }
    CHECK(three == 7);
    CHECK(four == 7);

    const Matroid free3 = Matroid::uniform(3, 3);
    CHECK(circuits(free3).circuits.empty());

    CHECK_THROWS_AS(circuits(Matroid::uniform(1, 21)), std::invalid_argument);
}

TEST_CASE("circuit list is minimal, dependent, sorted")
{
    for (const auto& [name, m] : corpus_matroids()) {
        INFO(name);
        const CircuitList list = circuits(m);
        Mask prev = 0;
        for (Mask c : list.circuits) {
            CHECK(c > prev);
            prev = c;
            CHECK_FALSE(m.is_independent(c));
            for (int e : elements_of(c))
                CHECK(m.is_independent(c & ~element_bit(e)));
        }
    }
}

TEST_CASE("circuit elimination: (C1 u C2) \\ e contains a circuit")
{
    for (const auto& [name, m] : corpus_matroids()) {
        INFO(name);
        const auto list = circuits(m).circuits;
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                const Mask shared = list[i] & list[j];
                for (int e : elements_of(shared)) {
                    const Mask rest = (list[i] | list[j]) & ~element_bit(e);
                    bool contains = false;
                    for (Mask c : list) {
                        if ((c & ~rest) == 0) {
                            contains = true;
                            break;
                        }
                    }
                    CHECK(contains);
                }
            }
        }
    }
}

TEST_CASE("weighted_rank frozen values")
{
    const Matroid tri = Matroid::graphic(triangle_graph());
    CHECK(weighted_rank(tri, WeightFunction({Rat(2), Rat(2), Rat(2)}), 0b111) == 4);
    CHECK(weighted_rank(tri, WeightFunction({Rat(1), Rat(2), Rat(3)}), 0b111) == 5);
    CHECK(weighted_rank(tri, WeightFunction::ones(3), 0) == 0);
    CHECK(weighted_rank(Matroid::uniform(1, 2), WeightFunction({Rat(5), Rat(5)}), 0b11) == 5);

    // rational weights
    const WeightFunction w({Rat(1), Rat(1, 2), Rat(3, 2)});
    CHECK(weighted_rank(tri, w, 0b111) == Rat(5, 2));
    CHECK(weighted_rank(tri, w, 0b110) == 2);
}

TEST_CASE("greedy equals the exhaustive oracle")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Matroid m = random_matroid(rng, n);
        const WeightFunction w = random_rational_weights(rng, n);
        for (Mask s = 0; s <= m.full_set(); ++s)
            CHECK(weighted_rank(m, w, s) == bf_weighted_rank(m, w, s));
    }
}

TEST_CASE("reverse_delete_base")
{
    const Matroid tri = Matroid::graphic(triangle_graph());
    CHECK(reverse_delete_base(tri, WeightFunction({Rat(1), Rat(2), Rat(3)})) == 0b110);
    CHECK(reverse_delete_base(Matroid::uniform(1, 2), WeightFunction({Rat(5), Rat(5)})) == 0b01);
    CHECK(reverse_delete_base(Matroid::uniform(3, 3), WeightFunction::ones(3)) == 0b111);

    std::mt19937 rng(31415);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Matroid m = random_matroid(rng, n);
        const WeightFunction w = random_rational_weights(rng, n);
        const Mask base = reverse_delete_base(m, w);
        CHECK(m.is_independent(base));
        CHECK(m.rank(base) == m.rank(m.full_set()));  // maximal independent
        CHECK(w.total(base) == weighted_rank(m, w, m.full_set()));
    }
}

TEST_CASE("deleting a circuit's lightest element preserves phi on supersets")
{
    std::mt19937 rng(2718);
    for (const auto& [name, m] : corpus_at_most(6)) {
        INFO(name);
        const WeightFunction w = random_rational_weights(rng, m.size());
        for (Mask c : circuits(m).circuits) {
            int lightest = 0;
            for (int e : elements_of(c)) {
                if (lightest == 0 || w.of(e) < w.of(lightest))
                    lightest = e;
            }
            const Mask outside = m.full_set() & ~c;
            for (Mask extra = outside;; extra = (extra - 1) & outside) {
                const Mask superset = c | extra;
                CHECK(weighted_rank(m, w, superset) ==
                      weighted_rank(m, w, superset & ~element_bit(lightest)));
                if (extra == 0)
                    break;
            }
        }
    }
}

TEST_CASE("phi_vector")
{
    CHECK(phi_vector(Matroid::uniform(1, 1), WeightFunction::ones(1)).values ==
          std::vector<Rat>{1});

    const SetFunctionVector tri = phi_vector(Matroid::graphic(triangle_graph()),
                                             WeightFunction::ones(3));
    CHECK(tri.at(0b001) == 1);
    CHECK(tri.at(0b011) == 2);
    CHECK(tri.at(0b111) == 2);

    const Matroid fig2c = Matroid::graphic(doubled_triangle());
    CHECK(phi_vector(fig2c, WeightFunction::ones(6)).at(fig2c.full_set()) == 2);
}

TEST_CASE("binary_from_graphic preserves the matroid")
{
    for (const Graph& g : {triangle_graph(), k4_graph(), doubled_triangle(),
                           Graph{2, {{1, 1}, {1, 2}}}}) {
        const Matroid graphic = Matroid::graphic(g);
        const Matroid binary = binary_from_graphic(g);
        for (Mask s = 0; s <= graphic.full_set(); ++s)
            CHECK(graphic.rank(s) == binary.rank(s));
    }
}

TEST_CASE("validation")
{
    CHECK_THROWS_AS(Matroid::uniform(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::uniform(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::graphic(Graph{2, {{1, 3}}}), std::invalid_argument);
    CHECK_THROWS_AS(Matroid::graphic(Graph{0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(WeightFunction({Rat(-1)}), std::invalid_argument);

    const Matroid tri = Matroid::graphic(triangle_graph());
    CHECK_THROWS_AS(tri.rank(0b1000), std::invalid_argument);
    CHECK_THROWS_AS(weighted_rank(tri, WeightFunction::ones(2), 0b1),
                    std::invalid_argument);
}
