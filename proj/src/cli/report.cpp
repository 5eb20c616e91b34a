#include "lmg/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <system_error>

namespace lmg::cli {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string render_cell(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    return std::get<std::string>(cell);
}

json cell_json(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    if (const auto* i = std::get_if<long long>(&cell)) return *i;
    return std::get<std::string>(cell);
}

std::string seeds_text(const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < seeds.size(); ++i) s += (i ? "," : "") + std::to_string(seeds[i]);
    return s;
}

Table long_format(const Table& t) {
    Table out{t.name + "_long", {"series", t.columns.front(), "value"}, {}};
    for (std::size_t c = 1; c < t.columns.size(); ++c)
        for (const auto& row : t.rows) out.rows.push_back({t.columns[c], row.front(), row[c]});
    return out;
}

}  // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string render_csv(const Table& table, const json& config, const std::vector<std::uint64_t>& seeds,
                       const std::string& timestamp) {
    std::ostringstream os;
    os << "# generated: " << timestamp << " (non-deterministic; the only such line)\n";
    os << "# config: " << config.dump() << "\n";
    os << "# seeds: " << seeds_text(seeds) << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << render_cell(row[c]);
        os << "\n";
    }
    return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::vector<std::filesystem::path> emit_report(const RunConfig& cfg, const std::vector<Table>& tables,
                                               const std::vector<std::uint64_t>& seeds) {
    const std::filesystem::path dir(cfg.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());

    const json config = to_json(cfg);
    const std::string stamp = utc_timestamp();
    std::vector<std::filesystem::path> written;
    if (cfg.format == OutputFormat::json) {
        json doc;
        doc["generated"] = stamp;
        doc["generated_note"] = "timestamp is the only non-deterministic field";
        doc["config"] = config;
        doc["seeds"] = seeds;
        for (const auto& t : tables) {
            json rows = json::array();
            for (const auto& row : t.rows) {
                json r = json::object();
                for (std::size_t c = 0; c < row.size(); ++c) r[t.columns[c]] = cell_json(row[c]);
                rows.push_back(std::move(r));
            }
            doc["tables"][t.name] = std::move(rows);
        }
        const auto path = dir / (cfg.command + ".json");
        write_atomic(path, doc.dump(2) + "\n");
        written.push_back(path);
        return written;
    }
    for (const auto& t : tables) {
        const auto path = dir / (t.name + ".csv");
        write_atomic(path, render_csv(t, config, seeds, stamp));
        written.push_back(path);
        if (cfg.plot_data && t.columns.size() > 1) {
            const Table tidy = long_format(t);
            const auto lpath = dir / (tidy.name + ".csv");
            write_atomic(lpath, render_csv(tidy, config, seeds, stamp));
            written.push_back(lpath);
        }
    }
    return written;
}

}  // namespace lmg::cli
