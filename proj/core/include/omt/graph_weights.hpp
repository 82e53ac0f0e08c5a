#ifndef OMT_GRAPH_WEIGHTS_HPP
#define OMT_GRAPH_WEIGHTS_HPP

#include <functional>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "omt/types.hpp"

namespace omt {

// Forward allocation weights g_{j,i} (i > j) for the online graph procedure:
// when H_j is rejected, its level is passed on to future hypotheses in
// proportion g_{j,i}. Row sums over each source j must stay <= 1; this is
// validated lazily over the targets actually queried.
class GraphWeights {
public:
    using Generator = std::function<double(Index source, Index target)>;

    static GraphWeights zero();

    // g_{j, j+offset} = value for every j (offset >= 1, value in [0,1]).
    static GraphWeights lag(Index offset, double value);

    // Explicit sparse edges (source, target, weight); zero elsewhere.
    static GraphWeights from_triples(const std::vector<std::tuple<Index, Index, double>>& triples);

    static GraphWeights from_generator(Generator generator);

    // g_{j,i}; requires i > j. Throws invariant_error when a negative weight
    // is seen or the running row sum of queried targets exceeds 1.
    double weight(Index source, Index target) const;

private:
    explicit GraphWeights(Generator generator);

    struct RowState {
        std::unordered_set<Index> counted;
        double sum = 0.0;
    };

    Generator generator_;
    mutable std::unordered_map<Index, RowState> rows_;
};

} // namespace omt

#endif // OMT_GRAPH_WEIGHTS_HPP
