#include "omt/experiment/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace omt::experiment {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const std::size_t pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(trim(s));
            return out;
        }
        out.push_back(trim(s.substr(0, pos)));
        s.remove_prefix(pos + 1);
    }
}

double parse_double(std::string_view key, std::string_view value, int line) {
    double out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw config_error{"bad number for " + std::string(key) + ": '" +
                               std::string(value) + "'",
                           line};
    }
    return out;
}

std::uint64_t parse_u64(std::string_view key, std::string_view value, int line) {
    std::uint64_t out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw config_error{"bad integer for " + std::string(key) + ": '" +
                               std::string(value) + "'",
                           line};
    }
    return out;
}

GraphWeights parse_graph_spec(std::string_view value, int line) {
    std::vector<std::tuple<Index, Index, double>> edges;
    for (std::string_view entry : split(value, ',')) {
        const std::size_t colon = entry.find(':');
        if (colon == std::string_view::npos) {
            throw config_error{"bad g entry '" + std::string(entry) +
                                   "': expected lagK:v or j-i:v",
                               line};
        }
        const std::string_view lhs = trim(entry.substr(0, colon));
        const double v = parse_double("g", trim(entry.substr(colon + 1)), line);
        if (lhs.starts_with("lag")) {
            if (split(value, ',').size() != 1) {
                throw config_error{"g with a lag entry must be a single entry", line};
            }
            const std::uint64_t off = parse_u64("g", lhs.substr(3), line);
            try {
                return GraphWeights::lag(off, v);
            } catch (const std::exception& e) {
                throw config_error{e.what(), line};
            }
        }
        const std::size_t dash = lhs.find('-');
        if (dash == std::string_view::npos) {
            throw config_error{"bad g entry '" + std::string(entry) +
                                   "': expected lagK:v or j-i:v",
                               line};
        }
        const Index j = parse_u64("g", trim(lhs.substr(0, dash)), line);
        const Index i = parse_u64("g", trim(lhs.substr(dash + 1)), line);
        edges.emplace_back(j, i, v);
    }
    try {
        return GraphWeights::from_triples(edges);
    } catch (const std::exception& e) {
        throw config_error{e.what(), line};
    }
}

} // namespace

GammaSequence parse_gamma_spec(std::string_view spec) {
    spec = trim(spec);
    if (spec == "inv-square") return GammaSequence::inverse_square();
    if (spec.starts_with("list:")) {
        std::vector<double> values;
        for (std::string_view part : split(spec.substr(5), ',')) {
            double v{};
            const auto [ptr, ec] =
                std::from_chars(part.data(), part.data() + part.size(), v);
            if (ec != std::errc{} || ptr != part.data() + part.size()) {
                throw std::invalid_argument{"bad gamma weight: '" + std::string(part) +
                                            "'"};
            }
            values.push_back(v);
        }
        return GammaSequence::from_list(std::move(values));
    }
    throw std::invalid_argument{"gamma must be 'inv-square' or 'list:w1,w2,...'"};
}

ExperimentConfig parse_config_string(std::string_view text) {
    ExperimentConfig cfg;
    std::map<std::string, int, std::less<>> seen; // key -> line, for duplicates
    bool have_procedure = false, have_n = false, have_trials = false, have_seed = false;

    auto key_line = [&seen](std::string_view key) {
        const auto it = seen.find(key);
        return it == seen.end() ? 0 : it->second;
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw config_error{"expected key = value", line_no};
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw config_error{"empty key", line_no};
        if (value.empty()) throw config_error{"empty value for " + key, line_no};
        if (const auto [it, fresh] = seen.emplace(key, line_no); !fresh) {
            throw config_error{"duplicate key " + key + " (first on line " +
                                   std::to_string(it->second) + ")",
                               line_no};
        }

        if (key == "procedure") {
            cfg.procedures.clear();
            for (std::string_view name : split(value, ',')) {
                try {
                    cfg.procedures.push_back(parse_procedure_id(name));
                } catch (const std::invalid_argument& e) {
                    throw config_error{e.what(), line_no};
                }
            }
            have_procedure = true;
        } else if (key == "alpha") {
            cfg.alpha = parse_double(key, value, line_no);
        } else if (key == "gamma") {
            try {
                cfg.gamma = parse_gamma_spec(value);
            } catch (const std::exception& e) {
                throw config_error{e.what(), line_no};
            }
        } else if (key == "tau") {
            cfg.tau = parse_double(key, value, line_no);
        } else if (key == "lambda") {
            cfg.lambda = parse_double(key, value, line_no);
        } else if (key == "batch_size") {
            cfg.batch_sizes.clear();
            for (std::string_view part : split(value, ',')) {
                cfg.batch_sizes.push_back(parse_u64(key, part, line_no));
            }
        } else if (key == "pi_A") {
            cfg.pi_alts.clear();
            for (std::string_view part : split(value, ',')) {
                cfg.pi_alts.push_back(parse_double(key, part, line_no));
            }
        } else if (key == "mu_A") {
            cfg.mu_alt = parse_double(key, value, line_no);
        } else if (key == "mu_N") {
            cfg.mu_null = parse_double(key, value, line_no);
        } else if (key == "rho") {
            cfg.rho = parse_double(key, value, line_no);
        } else if (key == "n") {
            cfg.n = parse_u64(key, value, line_no);
            have_n = true;
        } else if (key == "trials") {
            cfg.trials = parse_u64(key, value, line_no);
            have_trials = true;
        } else if (key == "seed") {
            cfg.seed = parse_u64(key, value, line_no);
            have_seed = true;
        } else if (key == "out") {
            cfg.out_path = std::string(value);
        } else if (key == "graph_variant") {
            if (value == "scaled") {
                cfg.graph_variant = GraphVariant::scaled;
            } else if (value == "direct") {
                cfg.graph_variant = GraphVariant::direct;
            } else {
                throw config_error{"graph_variant must be 'scaled' or 'direct'", line_no};
            }
        } else if (key == "g") {
            cfg.weights = parse_graph_spec(value, line_no);
        } else {
            throw config_error{"unknown key " + key, line_no};
        }
    }

    if (!have_procedure) throw config_error{"missing required key procedure"};
    if (!have_n) throw config_error{"missing required key n"};
    if (!have_trials) throw config_error{"missing required key trials"};
    if (!have_seed) throw config_error{"missing required key seed"};

    if (!(cfg.alpha > 0.0) || !(cfg.alpha < 1.0)) {
        throw config_error{"alpha must lie in (0, 1)", key_line("alpha")};
    }
    if (!(cfg.tau > 0.0) || !(cfg.tau <= 1.0)) {
        throw config_error{"tau must lie in (0, 1]", key_line("tau")};
    }
    if (!(cfg.lambda >= cfg.alpha * cfg.tau) || !(cfg.lambda < cfg.tau)) {
        const int line = key_line("lambda") != 0 ? key_line("lambda") : key_line("tau");
        throw config_error{"lambda must lie in [alpha*tau, tau)", line};
    }
    if (!(cfg.rho >= 0.0) || !(cfg.rho < 1.0)) {
        throw config_error{"rho must lie in [0, 1)", key_line("rho")};
    }
    for (double pi : cfg.pi_alts) {
        if (!(pi > 0.0) || !(pi < 1.0)) {
            throw config_error{"pi_A must lie in (0, 1)", key_line("pi_A")};
        }
    }
    if (!(cfg.mu_alt > 0.0)) {
        throw config_error{"mu_A must be positive", key_line("mu_A")};
    }
    if (!(cfg.mu_null <= 0.0)) {
        throw config_error{"mu_N must be non-positive", key_line("mu_N")};
    }
    if (cfg.n == 0) throw config_error{"n must be positive", key_line("n")};
    if (cfg.trials == 0) throw config_error{"trials must be positive", key_line("trials")};
    if (cfg.batch_sizes.empty()) {
        throw config_error{"batch_size list is empty", key_line("batch_size")};
    }
    for (std::size_t b : cfg.batch_sizes) {
        if (b == 0) {
            throw config_error{"batch_size must be positive", key_line("batch_size")};
        }
        if (cfg.n % b != 0) {
            throw config_error{"n must be a multiple of every batch_size",
                               key_line("batch_size")};
        }
    }
    if (cfg.pi_alts.empty()) {
        throw config_error{"pi_A list is empty", key_line("pi_A")};
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in{path};
    if (!in) throw config_error{"cannot open config file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_string(buf.str());
}

sim::SimConfig ExperimentConfig::scenario(std::size_t batch_size, double pi_alt) const {
    sim::SimConfig s;
    s.n = n;
    s.batch = batch_size;
    s.rho = rho;
    s.pi_alt = pi_alt;
    s.mu_alt = mu_alt;
    s.mu_null = mu_null;
    s.alpha = alpha;
    s.trials = trials;
    s.base_seed = seed;
    s.gamma = gamma;
    s.tau = tau;
    s.lambda = lambda;
    s.weights = weights;
    s.graph_variant = graph_variant;
    return s;
}

} // namespace omt::experiment
