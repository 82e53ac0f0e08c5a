#include "omt/experiment/csv.hpp"

#include <charconv>
#include <cstdio>
#include <vector>

namespace omt::experiment {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    while (true) {
        const std::size_t pos = line.find(',');
        if (pos == std::string_view::npos) {
            out.push_back(line);
            return out;
        }
        out.push_back(line.substr(0, pos));
        line.remove_prefix(pos + 1);
    }
}

double field_double(std::string_view s, int line) {
    double out{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw config_error{"bad numeric field '" + std::string(s) + "'", line};
    }
    return out;
}

std::uint64_t field_u64(std::string_view s, int line) {
    std::uint64_t out{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw config_error{"bad integer field '" + std::string(s) + "'", line};
    }
    return out;
}

} // namespace

std::string format_sig6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string render_csv(const sim::MetricsTable& table) {
    std::string out{kCsvHeader};
    out.push_back('\n');
    for (const sim::MetricsRow& r : table.rows) {
        out += r.procedure;
        out += ',' + std::to_string(r.batch_size);
        out += ',' + format_sig6(r.pi_alt);
        out += ',' + format_sig6(r.mu_alt);
        out += ',' + format_sig6(r.mu_null);
        out += ',' + format_sig6(r.rho);
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.trials);
        out += ',' + std::to_string(r.seed);
        out += ',' + format_sig6(r.power);
        out += ',' + format_sig6(r.power_se);
        out += ',' + format_sig6(r.fwer);
        out += ',' + format_sig6(r.fwer_se);
        out.push_back('\n');
    }
    return out;
}

sim::MetricsTable parse_csv(std::string_view text) {
    sim::MetricsTable table;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        if (line_no == 1) {
            if (line != kCsvHeader) throw config_error{"unexpected CSV header", 1};
            continue;
        }
        if (line.empty()) continue;

        const std::vector<std::string_view> f = split_fields(line);
        if (f.size() != 13) {
            throw config_error{"expected 13 fields, got " + std::to_string(f.size()),
                               line_no};
        }
        sim::MetricsRow r;
        r.procedure = std::string(f[0]);
        r.batch_size = field_u64(f[1], line_no);
        r.pi_alt = field_double(f[2], line_no);
        r.mu_alt = field_double(f[3], line_no);
        r.mu_null = field_double(f[4], line_no);
        r.rho = field_double(f[5], line_no);
        r.n = field_u64(f[6], line_no);
        r.trials = field_u64(f[7], line_no);
        r.seed = field_u64(f[8], line_no);
        r.power = field_double(f[9], line_no);
        r.power_se = field_double(f[10], line_no);
        r.fwer = field_double(f[11], line_no);
        r.fwer_se = field_double(f[12], line_no);
        table.rows.push_back(std::move(r));
    }
    if (line_no == 0) throw config_error{"empty CSV", 1};
    return table;
}

} // namespace omt::experiment
