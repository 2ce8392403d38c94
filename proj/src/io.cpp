#include "fpsp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fpsp/error.hpp"

namespace fpsp {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::uint64_t> parse_numbers(std::string_view s, std::size_t line) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i == s.size()) break;
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
        if (ec != std::errc{} || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
            parse_fail(line, "expected a non-negative integer in '" + std::string(s) + "'");
        }
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - s.data());
    }
    return out;
}

// Calls record(line_no, numbers) for each content line after the header.
template <class Fn>
PrimeField parse_records(std::istream& in, std::size_t arity, Fn&& record) {
    std::optional<PrimeField> field;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s = raw;
        if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (!field) {
            if (s.substr(0, 2) != "p=") parse_fail(line, "expected header p=<modulus>");
            const auto nums = parse_numbers(s.substr(2), line);
            if (nums.size() != 1) parse_fail(line, "malformed header");
            try {
                field = make_field(nums[0]);
            } catch (const Error& e) {
                parse_fail(line, e.what());
            }
            continue;
        }
        const auto nums = parse_numbers(s, line);
        if (nums.size() != arity) {
            parse_fail(line, "expected " + std::to_string(arity) + " values, got " + std::to_string(nums.size()));
        }
        for (auto v : nums) {
            if (v >= field->p()) parse_fail(line, "value " + std::to_string(v) + " is not below p");
        }
        record(line, nums);
    }
    if (!field) parse_fail(line, "missing header p=<modulus>");
    return *field;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    return in;
}

}  // namespace

FSet read_set(std::istream& in) {
    std::vector<Elem> elems;
    const PrimeField F = parse_records(in, 1, [&](std::size_t line, const std::vector<std::uint64_t>& v) {
        const auto x = static_cast<Elem>(v[0]);
        if (!elems.empty() && x == elems.back()) parse_fail(line, "duplicate element " + std::to_string(x));
        if (!elems.empty() && x < elems.back()) parse_fail(line, "elements must be strictly increasing");
        elems.push_back(x);
    });
    return FSet::from_elements(F, elems);
}

FSet read_set_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_set(in);
}

void write_set(std::ostream& out, const FSet& s) {
    out << "p=" << s.p() << '\n';
    for (Elem x : s.elements()) out << x << '\n';
}

void write_set_file(const std::filesystem::path& path, const FSet& s) {
    std::ostringstream out;
    write_set(out, s);
    write_text_file(path, out.str());
}

FnTable read_fn(std::istream& in) {
    std::vector<std::pair<Elem, Elem>> entries;
    std::vector<std::size_t> lines;
    const PrimeField F = parse_records(in, 2, [&](std::size_t line, const std::vector<std::uint64_t>& v) {
        entries.emplace_back(static_cast<Elem>(v[0]), static_cast<Elem>(v[1]));
        lines.push_back(line);
    });
    std::vector<Elem> values(F.p() - 1, 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto [x, y] = entries[i];
        if (x == 0) parse_fail(lines[i], "the domain is 1..p-1");
        if (y == 0) parse_fail(lines[i], "value 0 is outside the codomain");
        if (values[x - 1] != 0) parse_fail(lines[i], "duplicate entry for x=" + std::to_string(x));
        values[x - 1] = y;
    }
    for (Elem x = 1; x < F.p(); ++x) {
        if (values[x - 1] == 0) throw Error(ErrorCode::ParseError, "no entry for x=" + std::to_string(x));
    }
    return FnTable(F, std::move(values));
}

FnTable read_fn_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_fn(in);
}

void write_fn(std::ostream& out, const FnTable& f) {
    out << "p=" << f.field().p() << '\n';
    for (Elem x = 1; x < f.field().p(); ++x) out << x << ' ' << f(x) << '\n';
}

std::pair<PrimeField, std::vector<Point3>> read_points(std::istream& in) {
    std::vector<Point3> pts;
    const PrimeField F = parse_records(in, 3, [&](std::size_t, const std::vector<std::uint64_t>& v) {
        pts.push_back({static_cast<Elem>(v[0]), static_cast<Elem>(v[1]), static_cast<Elem>(v[2])});
    });
    return {F, std::move(pts)};
}

std::pair<PrimeField, std::vector<Point3>> read_points_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_points(in);
}

void write_points(std::ostream& out, const PrimeField& F, const std::vector<Point3>& pts) {
    out << "p=" << F.p() << '\n';
    for (const auto& q : pts) out << q.x << ' ' << q.y << ' ' << q.z << '\n';
}

std::pair<PrimeField, std::vector<Plane3>> read_planes(std::istream& in) {
    std::vector<std::array<Elem, 4>> raw;
    std::vector<std::size_t> lines;
    const PrimeField F = parse_records(in, 4, [&](std::size_t line, const std::vector<std::uint64_t>& v) {
        raw.push_back({static_cast<Elem>(v[0]), static_cast<Elem>(v[1]), static_cast<Elem>(v[2]), static_cast<Elem>(v[3])});
        lines.push_back(line);
    });
    std::vector<Plane3> planes;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& r = raw[i];
        if (r[0] == 0 && r[1] == 0 && r[2] == 0) parse_fail(lines[i], "plane normal is zero");
        planes.push_back(Plane3::make(F, r[0], r[1], r[2], r[3]));
    }
    return {F, std::move(planes)};
}

std::pair<PrimeField, std::vector<Plane3>> read_planes_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_planes(in);
}

void write_planes(std::ostream& out, const PrimeField& F, const std::vector<Plane3>& planes) {
    out << "p=" << F.p() << '\n';
    for (const auto& s : planes) out << s.a << ' ' << s.b << ' ' << s.c << ' ' << s.d << '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ConfigError, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::ConfigError, "write failed for " + path.string());
}

}  // namespace fpsp
