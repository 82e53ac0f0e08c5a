#ifndef OMT_PROCEDURES_ONLINE_GRAPH_HPP
#define OMT_PROCEDURES_ONLINE_GRAPH_HPP

#include <span>
#include <vector>

#include "omt/closure/family.hpp"
#include "omt/gamma.hpp"
#include "omt/graph_weights.hpp"
#include "omt/record.hpp"

namespace omt {

// Two conventions for recycling a rejected level alpha_j along edge g_{j,i}:
//
//   scaled:  alpha_i = alpha * (gamma_i + sum_{j<i} g_{j,i} alpha_j r_j)
//   direct:  alpha_i = alpha * gamma_i + sum_{j<i} g_{j,i} alpha_j r_j
//
// Under "scaled" the inherited mass is multiplied by alpha once more, so the
// recycled budget shrinks by a factor alpha at every hand-off; "direct" passes
// the spent level through unchanged. Both control FWER; "scaled" is the
// default, "direct" is the conventional fallback rule.
enum class GraphVariant { scaled, direct };

std::string_view to_string(GraphVariant variant) noexcept;

// Next level of the online graphical procedure for i = state.next_index().
// Only rejected past hypotheses contribute; with a zero graph both variants
// reduce to plain Alpha-Spending bit for bit.
double online_graph_next(const ProcedureState& state, const GammaSequence& gamma,
                         const GraphWeights& weights, GraphVariant variant);

// Offline graphical procedure on a finite set of m hypotheses.
//
//   weights: m x m matrix, zero diagonal, nonnegative, row sums <= 1
//   gammas:  m initial weights, nonnegative, summing to <= 1
//
// Repeatedly rejects the hypothesis with the smallest p/alpha ratio among the
// remaining ones (lowest index on ties), redistributes its level along its
// edges and rewires the graph:
//
//   alpha_k <- alpha_k + alpha_i g_{i,k}
//   g_{j,k} <- (g_{j,k} + g_{j,i} g_{i,k}) / (1 - g_{j,i} g_{i,j})
//
// When the denominator is zero (a fully reciprocal pair) the new edge weight
// is defined as zero. Returns the rejected indices, 1-based, in rejection
// order.
std::vector<Index> offline_graph(std::span<const double> pvalues,
                                 std::span<const double> gammas,
                                 const std::vector<std::vector<double>>& weights,
                                 double alpha);

// Intersection family that allocates the budget of every hypothesis outside I
// backwards onto the first member. Requires the universe size n up front:
//
//   phi_I = 1  if 1 in I and P_1 <= alpha * (gamma_1 + sum_{i not in I} gamma_i),
//          or  P_i <= alpha * gamma_i for some i in I.
//
// A valid level-alpha family, but the level at index 1 grows as indices leave
// I, so it is not predictable and the closed procedure built from it cannot
// be run online. Kept as a negative fixture for the structure checkers.
class BackwardGraphFamily final : public IntersectionTestFamily {
public:
    BackwardGraphFamily(double alpha, GammaSequence gamma, Index universe_n);

    std::string_view name() const override { return "backward-graph"; }
    bool has_levels() const override { return false; }
    bool evaluate(const IndexSet& I, PValuePrefix pvalues) const override;
    std::vector<double> critical_levels(Index n) const override;

private:
    double alpha_;
    GammaSequence gamma_;
    Index universe_n_;
};

} // namespace omt

#endif // OMT_PROCEDURES_ONLINE_GRAPH_HPP
