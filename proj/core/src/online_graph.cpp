#include "omt/procedures/online_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "omt/types.hpp"

namespace omt {

std::string_view to_string(GraphVariant variant) noexcept {
    return variant == GraphVariant::scaled ? "scaled" : "direct";
}

double online_graph_next(const ProcedureState& state, const GammaSequence& gamma,
                         const GraphWeights& weights, GraphVariant variant) {
    const Index i = state.next_index();
    double inherited = 0.0;
    for (const StepRecord& rec : state.records()) {
        if (!rec.rejected) continue;
        const double g = weights.weight(rec.index, i);
        if (g != 0.0) inherited += g * rec.alpha_i;
    }
    const double alpha = state.overall_alpha();
    // Zero graphs keep `inherited` an exact 0.0, so both branches reproduce
    // alpha * gamma_i without rounding detours.
    if (variant == GraphVariant::scaled) {
        return alpha * (gamma.weight(i) + inherited);
    }
    return alpha * gamma.weight(i) + inherited;
}

namespace {

// Ratio order for p/alpha with the conventions 0/0 = 0 and x/0 = +inf for
// x > 0. Division-free: finite ratios compare by cross-multiplication, which
// is exact enough here because all factors lie in [0, 1].
bool ratio_less(double pj, double aj, double pk, double ak) {
    const bool inf_j = (aj == 0.0 && pj > 0.0);
    const bool inf_k = (ak == 0.0 && pk > 0.0);
    if (inf_j) return false;
    if (inf_k) return true;
    if (aj == 0.0) return pk > 0.0; // ratio_j = 0/0 = 0
    if (ak == 0.0) return false;    // ratio_k = 0/0 = 0, ratio_j >= 0
    return pj * ak < pk * aj;
}

} // namespace

std::vector<Index> offline_graph(std::span<const double> pvalues,
                                 std::span<const double> gammas,
                                 const std::vector<std::vector<double>>& weights,
                                 double alpha) {
    const std::size_t m = pvalues.size();
    if (m == 0) throw std::invalid_argument{"offline graph needs at least one p-value"};
    if (gammas.size() != m) {
        throw std::invalid_argument{"offline graph: gamma count must match p-value count"};
    }
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument{"alpha must lie in (0, 1)"};
    }
    double total = 0.0;
    for (double g : gammas) {
        if (g < 0.0) throw std::invalid_argument{"offline graph: negative initial weight"};
        total += g;
    }
    if (total > 1.0 + kSumTolerance) {
        throw std::invalid_argument{"offline graph: initial weights sum past one"};
    }
    for (double p : pvalues) {
        if (!(p >= 0.0) || !(p <= 1.0)) {
            throw std::invalid_argument{"p-values must lie in [0, 1]"};
        }
    }
    if (weights.size() != m) {
        throw std::invalid_argument{"offline graph: weight matrix must be m x m"};
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (weights[j].size() != m) {
            throw std::invalid_argument{"offline graph: weight matrix must be m x m"};
        }
        if (weights[j][j] != 0.0) {
            throw std::invalid_argument{"offline graph: diagonal weights must be zero"};
        }
        double row = 0.0;
        for (double g : weights[j]) {
            if (g < 0.0) throw std::invalid_argument{"offline graph: negative edge weight"};
            row += g;
        }
        if (row > 1.0 + kSumTolerance) {
            throw std::invalid_argument{"offline graph: row sum past one"};
        }
    }

    std::vector<std::vector<double>> g = weights;
    std::vector<double> levels(m);
    for (std::size_t k = 0; k < m; ++k) levels[k] = alpha * gammas[k];
    std::vector<bool> active(m, true);
    std::vector<Index> rejected;

    for (;;) {
        std::size_t best = m;
        for (std::size_t j = 0; j < m; ++j) {
            if (!active[j]) continue;
            if (best == m ||
                ratio_less(pvalues[j], levels[j], pvalues[best], levels[best])) {
                best = j;
            }
        }
        if (best == m) break; // everything rejected
        if (!(pvalues[best] <= levels[best])) break;

        rejected.push_back(static_cast<Index>(best) + 1);
        active[best] = false;

        // Pass the spent level along the edges of `best`, then rewire the
        // graph among the survivors. The update is simultaneous, hence the
        // scratch copy of the edge weights.
        for (std::size_t k = 0; k < m; ++k) {
            if (active[k]) levels[k] += levels[best] * g[best][k];
        }
        std::vector<std::vector<double>> next = g;
        for (std::size_t j = 0; j < m; ++j) {
            if (!active[j]) continue;
            for (std::size_t k = 0; k < m; ++k) {
                if (!active[k] || k == j) continue;
                const double denom = 1.0 - g[j][best] * g[best][j];
                next[j][k] = denom <= 0.0
                                 ? 0.0
                                 : (g[j][k] + g[j][best] * g[best][k]) / denom;
            }
        }
        g.swap(next);
    }
    return rejected;
}

BackwardGraphFamily::BackwardGraphFamily(double alpha, GammaSequence gamma,
                                         Index universe_n)
    : alpha_{alpha}, gamma_{std::move(gamma)}, universe_n_{universe_n} {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument{"alpha must lie in (0, 1)"};
    }
    if (universe_n == 0) throw std::invalid_argument{"universe size must be positive"};
}

bool BackwardGraphFamily::evaluate(const IndexSet& I, PValuePrefix pvalues) const {
    require_index_set(I, "BackwardGraphFamily::evaluate");
    if (I.back() > universe_n_) {
        throw std::invalid_argument{"index set exceeds the family universe"};
    }
    if (pvalues.size() < I.back()) {
        throw std::invalid_argument{"p-value vector shorter than max(I)"};
    }
    for (Index i : I) {
        if (pvalues.at(i) <= alpha_ * gamma_.weight(i)) return true;
    }
    if (I.front() == 1) {
        // Everything outside I hands its weight back to index 1.
        double outside = gamma_.partial_sum(universe_n_);
        for (Index i : I) outside -= gamma_.weight(i);
        if (pvalues.at(1) <= alpha_ * (gamma_.weight(1) + outside)) return true;
    }
    return false;
}

std::vector<double> BackwardGraphFamily::critical_levels(Index n) const {
    std::vector<double> out;
    const Index top = std::min(n, universe_n_);
    const double total = gamma_.partial_sum(universe_n_);
    for (Index k = 1; k <= top; ++k) {
        out.push_back(alpha_ * gamma_.weight(k));
        // Level of index 1 when I = {k}, the most inflated singleton case.
        out.push_back(alpha_ * (gamma_.weight(1) + total - gamma_.weight(k)));
    }
    return out;
}

} // namespace omt
