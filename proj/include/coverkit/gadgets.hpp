#ifndef COVERKIT_GUARD_COVERKIT_GADGETS_HPP
#define COVERKIT_GUARD_COVERKIT_GADGETS_HPP 1

#include <coverkit/formula.hpp>
#include <coverkit/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coverkit
{
    // colour names shared by every generator and its target
    inline const std::string gadget_hub_colour = "b1";
    inline const std::string gadget_side_colour = "b2";
    inline const std::string gadget_alpha = "alpha";
    inline const std::string gadget_beta = "beta";

    /// K_{2,3} on {p1,p2} x {m1,m2,m3} plus the pendant edges u-p1 and v-p2, all of colour alpha.
    [[nodiscard]] auto limping_tripod() -> Graph;

    /// Hub p joined by c parallel alpha edges to each of r and g.
    [[nodiscard]] auto fw_target(std::size_t c) -> Graph;

    /// Two vertices r, g with b directed loops each and c arcs in each direction between them.
    [[nodiscard]] auto wd_target(std::size_t b, std::size_t c) -> Graph;

    /**
     * The clause/connector construction reducing c-in-2c-SAT to FW(c)-Cover.
     * Throws std::invalid_argument unless c >= 3 and every variable occurs
     * in exactly c clauses.
     */
    [[nodiscard]] auto build_gphi_fw(std::size_t c, const Formula & f) -> Graph;

    /// Two-colouring with every edge between the colours; nullopt if g has an odd cycle, loop or semi-edge.
    [[nodiscard]] auto bipartition(const Graph & g) -> std::optional<std::vector<bool>>;

    /**
     * For a simple bipartite (b+c)-regular g, the simple digraph on
     * A, B and their barred copies with arcs u->v, v->u', u'->v', v'->u
     * for every edge uv (u in A). It covers WD(b,c,b) iff g has a
     * (b,c)-colouring.
     */
    [[nodiscard]] auto directed_lift_wd(const Graph & g, std::size_t b, std::size_t c) -> Graph;

    enum class GadgetCase
    {
        C0,
        Ck,
        Dk,
        B1
    };

    [[nodiscard]] auto to_string(GadgetCase c) -> std::string;

    /**
     * The 3-block target of the case: hub p with two alpha edges to each of
     * r and g, plus the beta block graph on {r, g}: one semi-edge each (C0),
     * one semi-edge and k loops each (Ck), k loops each (Dk) or a single
     * r-g edge (B1).
     */
    [[nodiscard]] auto gadget_target(GadgetCase c, std::size_t k = 0) -> Graph;

    struct VariableGadget
    {
        GadgetCase gadget_case;
        std::size_t k = 0;
        Graph graph;
        Graph target;
        /// Connector vertices that each miss one alpha edge.
        std::vector<VertexIndex> ports;
        /// Opposite-side connectors of a two-sided gadget, empty otherwise.
        std::vector<VertexIndex> second_ports;

        [[nodiscard]] auto two_sided() const -> bool;
    };

    /// Built from copies of the limping tripod; throws std::invalid_argument if k < 1 for Ck or Dk.
    [[nodiscard]] auto variable_gadget(GadgetCase c, std::size_t k = 0) -> VariableGadget;

    /**
     * One gadget copy per variable, with the i-th port joined by an alpha
     * edge to the clause vertex of the i-th clause containing the variable
     * (clauses in index order). Two-sided gadgets get two clause vertices
     * per clause. Needs c = 2 and occurrences equal to the port count.
     */
    [[nodiscard]] auto compose_claim_a(const VariableGadget & gadget, const Formula & f) -> Graph;
}

#endif
