#include "fpsp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "fpsp/error.hpp"
#include "fpsp/io.hpp"

namespace fpsp {

namespace {

// Shortest text that reads back to the same double.
std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double parse_double(const std::string& s, std::size_t line) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad number '" + s + "'");
    }
    return v;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad integer '" + s + "'");
    }
    return v;
}

double json_double(const nlohmann::json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

nlohmann::json to_json(const RatioRow& r) {
    nlohmann::json j = {{"theorem", r.theorem}, {"p", r.p},       {"family", r.family}, {"seed", r.seed},
                        {"|A|", r.a},           {"|B|", r.b},     {"|C|", r.c},         {"|D|", r.d},
                        {"m", r.m},             {"lhs", r.lhs},   {"rhs", r.rhs},       {"ratio", r.ratio},
                        {"hyp_ok", r.hyp_ok}};
    if (r.asserted) {
        j["asserted"] = true;
        j["pass"] = r.pass;
    }
    return j;
}

RatioRow row_from_json(const nlohmann::json& j) {
    RatioRow r;
    r.theorem = j.at("theorem").get<std::string>();
    r.p = j.at("p").get<std::uint32_t>();
    r.family = j.at("family").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.a = j.at("|A|").get<std::size_t>();
    r.b = j.at("|B|").get<std::size_t>();
    r.c = j.at("|C|").get<std::size_t>();
    r.d = j.at("|D|").get<std::size_t>();
    r.m = j.at("m").get<std::uint32_t>();
    r.lhs = json_double(j.at("lhs"));
    r.rhs = json_double(j.at("rhs"));
    r.ratio = json_double(j.at("ratio"));
    r.hyp_ok = j.at("hyp_ok").get<bool>();
    r.asserted = j.value("asserted", false);
    r.pass = j.value("pass", true);
    return r;
}

nlohmann::json aggregate_rows(const std::vector<RatioRow>& rows) {
    std::map<std::string, std::vector<const RatioRow*>> by_theorem;
    for (const auto& r : rows) by_theorem[r.theorem].push_back(&r);
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [name, rs] : by_theorem) {
        std::vector<double> ratios;
        std::size_t hyp = 0, failed = 0;
        for (const auto* r : rs) {
            if (!std::isnan(r->ratio)) ratios.push_back(r->ratio);
            hyp += r->hyp_ok ? 1 : 0;
            failed += (r->asserted && !r->pass) ? 1 : 0;
        }
        std::sort(ratios.begin(), ratios.end());
        nlohmann::json a = {{"rows", rs.size()}, {"hyp_ok", hyp}};
        if (!ratios.empty()) {
            const std::size_t n = ratios.size();
            a["min_ratio"] = ratios.front();
            a["max_ratio"] = ratios.back();
            a["median_ratio"] = n % 2 ? ratios[n / 2] : (ratios[n / 2 - 1] + ratios[n / 2]) / 2;
        }
        if (rs.front()->asserted) a["failures"] = failed;
        out[name] = std::move(a);
    }
    return out;
}

nlohmann::json report_to_json(const Report& r, bool with_envelope) {
    nlohmann::json j;
    if (with_envelope) j["envelope"] = r.envelope;
    j["config"] = r.config;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) j["rows"].push_back(to_json(row));
    j["chains"] = r.chains;
    j["aggregates"] = r.aggregates;
    j["exact_failures"] = r.exact_failures;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    try {
        Report r;
        r.envelope = j.value("envelope", nlohmann::json::object());
        r.config = j.at("config");
        for (const auto& row : j.at("rows")) r.rows.push_back(row_from_json(row));
        r.chains = j.at("chains");
        r.aggregates = j.at("aggregates");
        r.exact_failures = j.at("exact_failures").get<std::size_t>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
    }
}

std::string rows_to_csv(const std::vector<RatioRow>& rows) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : rows) {
        out += r.theorem + ',' + std::to_string(r.p) + ',' + r.family + ',' + std::to_string(r.seed) + ',' +
               std::to_string(r.a) + ',' + std::to_string(r.b) + ',' + std::to_string(r.c) + ',' +
               std::to_string(r.d) + ',' + std::to_string(r.m) + ',' + fmt_double(r.lhs) + ',' + fmt_double(r.rhs) +
               ',' + fmt_double(r.ratio) + ',' + (r.hyp_ok ? "1" : "0") + '\n';
    }
    return out;
}

std::vector<RatioRow> rows_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    std::vector<RatioRow> rows;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (n == 1) {
            if (line != kCsvHeader) throw Error(ErrorCode::ParseError, "line 1: unexpected CSV header");
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != 13) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(n) + ": expected 13 fields");
        }
        RatioRow r;
        r.theorem = f[0];
        r.p = static_cast<std::uint32_t>(parse_uint(f[1], n));
        r.family = f[2];
        r.seed = parse_uint(f[3], n);
        r.a = parse_uint(f[4], n);
        r.b = parse_uint(f[5], n);
        r.c = parse_uint(f[6], n);
        r.d = parse_uint(f[7], n);
        r.m = static_cast<std::uint32_t>(parse_uint(f[8], n));
        r.lhs = parse_double(f[9], n);
        r.rhs = parse_double(f[10], n);
        r.ratio = parse_double(f[11], n);
        if (f[12] != "0" && f[12] != "1") throw Error(ErrorCode::ParseError, "line " + std::to_string(n) + ": hyp_ok must be 0 or 1");
        r.hyp_ok = f[12] == "1";
        rows.push_back(std::move(r));
    }
    if (n == 0) throw Error(ErrorCode::ParseError, "line 1: empty CSV");
    return rows;
}

void write_report(const std::filesystem::path& path, const Report& r, ReportFormat fmt) {
    if (fmt == ReportFormat::Csv) {
        write_text_file(path, rows_to_csv(r.rows));
    } else {
        write_text_file(path, report_to_json(r).dump(2) + "\n");
    }
}

Report read_report(const std::filesystem::path& path, ReportFormat fmt) {
    const std::string text = read_text_file(path);
    if (fmt == ReportFormat::Csv) {
        Report r;
        r.rows = rows_from_csv(text);
        return r;
    }
    try {
        return report_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace fpsp
