#include "omt/graph_weights.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace omt {

GraphWeights::GraphWeights(Generator generator) : generator_(std::move(generator)) {
    if (!generator_) throw std::invalid_argument("GraphWeights: null generator");
}

GraphWeights GraphWeights::zero() {
    return GraphWeights([](Index, Index) { return 0.0; });
}

GraphWeights GraphWeights::lag(Index offset, double value) {
    if (offset == 0) throw std::invalid_argument("GraphWeights::lag: offset must be >= 1");
    if (value < 0.0 || value > 1.0)
        throw std::invalid_argument("GraphWeights::lag: value must lie in [0,1]");
    return GraphWeights([offset, value](Index j, Index i) {
        return i == j + offset ? value : 0.0;
    });
}

GraphWeights GraphWeights::from_triples(
    const std::vector<std::tuple<Index, Index, double>>& triples) {
    std::map<std::pair<Index, Index>, double> edges;
    std::unordered_map<Index, double> row_sums;
    for (const auto& [j, i, g] : triples) {
        if (i <= j)
            throw std::invalid_argument("GraphWeights: edge (" + std::to_string(j) + "," +
                                        std::to_string(i) + ") is not a forward edge");
        if (g < 0.0)
            throw invariant_error("GraphWeights: negative weight on edge (" + std::to_string(j) +
                                  "," + std::to_string(i) + ")");
        if (!edges.emplace(std::make_pair(j, i), g).second)
            throw std::invalid_argument("GraphWeights: duplicate edge (" + std::to_string(j) + "," +
                                        std::to_string(i) + ")");
        row_sums[j] += g;
        if (row_sums[j] > 1.0 + kSumTolerance) {
            std::ostringstream os;
            os << "GraphWeights: row sum for source " << j << " exceeds 1 (" << row_sums[j] << ")";
            throw invariant_error(os.str());
        }
    }
    return GraphWeights([edges = std::move(edges)](Index j, Index i) {
        auto it = edges.find(std::make_pair(j, i));
        return it == edges.end() ? 0.0 : it->second;
    });
}

GraphWeights GraphWeights::from_generator(Generator generator) {
    return GraphWeights(std::move(generator));
}

double GraphWeights::weight(Index source, Index target) const {
    if (target <= source)
        throw std::invalid_argument("GraphWeights::weight: only forward edges (target > source) exist");
    const double g = generator_(source, target);
    if (g < 0.0)
        throw invariant_error("graph weights invalid: " +
                              Violation{target, ViolationKind::negative_edge_weight, g}.describe());
    RowState& row = rows_[source];
    if (row.counted.insert(target).second) {
        row.sum += g;
        if (row.sum > 1.0 + kSumTolerance)
            throw invariant_error("graph weights invalid: " +
                                  Violation{target, ViolationKind::row_sum_exceeds_one, row.sum}.describe());
    }
    return g;
}

} // namespace omt
