#ifndef COVERKIT_GUARD_COVERKIT_LIFTS_HPP
#define COVERKIT_GUARD_COVERKIT_LIFTS_HPP 1

#include <coverkit/graph.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coverkit
{
    /**
     * The result of contracting a k-fold matching between two equal blocks
     * A and B of h_prime. Each contracted vertex c_i of h has id "a/b" and
     * the fresh vertex colour contracted_colour; every other vertex and edge
     * keeps its id and colour.
     */
    struct Contraction
    {
        Graph h_prime;
        Graph h;
        std::string matching_colour;
        std::size_t k = 0;
        std::string contracted_colour;
        std::string a_colour;
        std::string b_colour;
        /// Edge colours used at A (resp. B) in h_prime, the matching colour excluded.
        std::set<std::string> a_edge_colours;
        std::set<std::string> b_edge_colours;
        /// Pairs (a_i, b_i) of h_prime indexed like the contracted vertices.
        std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    };

    /**
     * Throws std::invalid_argument unless the edges of matching_colour form a
     * k-fold matching between two blocks A, B of the degree partition of
     * h_prime, with no other edge joining A to B and no colour used at both
     * A and B.
     */
    [[nodiscard]] auto contract_matching(const Graph & h_prime, const std::string & matching_colour) -> Contraction;

    /**
     * Splits every vertex w of g coloured contracted_colour into w.a and w.b
     * (edges go to the side their colour belongs to), takes k copies with
     * ids suffixed #1..#k when k > 1, and joins w.a and w.b copies by a
     * complete bipartite graph in the matching colour. Throws
     * std::invalid_argument if an edge colour at such a w belongs to neither
     * side.
     */
    [[nodiscard]] auto deprime_lift(const Graph & g, const Contraction & contraction) -> Graph;

    /// All vertices of h with exactly the edges of its block graph h_prime.
    [[nodiscard]] auto spanning_subgraph(const Graph & h_prime, const Graph & h) -> Graph;

    /**
     * Pads an input g for the block graph h_prime of h with isolated
     * vertices so it becomes an input for the spanning subgraph. Returns
     * nullopt (the input is rejected) if g does not share the refinement
     * matrix of h_prime, or if its block sizes are not one common multiple
     * of the block sizes of h_prime. Throws std::invalid_argument if the
     * blocks of h_prime are not blocks of h.
     */
    [[nodiscard]] auto spanning_lift(const Graph & g, const Graph & h_prime, const Graph & h) -> std::optional<Graph>;

    /// Doublet blocks whose two vertices carry equal semi-edge counts in every colour.
    [[nodiscard]] auto is_balanced(const Graph & h) -> bool;

    /**
     * Takes 2m copies of g (ids suffixed [i,j]) and adds the colours of h
     * missing from h_prime as unions of perfect matchings between copies,
     * so that the result covers h iff g covers h_prime. h_prime must be a
     * balanced spanning block graph of h with the same degree partition.
     * Throws std::invalid_argument if m is odd, m <= the maximum total
     * degree of h, or h_prime does not qualify. Returns nullopt if g is not
     * even refinement-compatible with h_prime. The output is simple
     * whenever g is.
     *
     * Between two doublet blocks the construction pairs the i-th vertices
     * of the two G-blocks; with WW(b,c), b != c, this presumes that paired
     * vertices are mapped alike by the cover of g.
     */
    [[nodiscard]] auto garbage_lift(const Graph & g, const Graph & h_prime, const Graph & h, std::size_t m) -> std::optional<Graph>;
}

#endif
