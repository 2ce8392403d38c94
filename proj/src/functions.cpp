#include "fpsp/functions.hpp"

#include <algorithm>
#include <charconv>

#include "fpsp/io.hpp"
#include "fpsp/rng.hpp"

namespace fpsp {

FnTable::FnTable(PrimeField field, std::vector<Elem> values) : field_(std::move(field)), values_(std::move(values)) {
    const std::uint32_t p = field_.p();
    if (values_.size() != p - 1) {
        throw Error(ErrorCode::BadParams, "function table needs " + std::to_string(p - 1) + " entries");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] >= p) throw Error(ErrorCode::BadParams, "function value out of range at x=" + std::to_string(i + 1));
        if (values_[i] == 0) throw Error(ErrorCode::ZeroInCodomain, "f(" + std::to_string(i + 1) + ") = 0");
    }
}

FnTable make_fn(const PrimeField& F, const FnSpec& spec) {
    const std::uint32_t p = F.p();
    std::vector<Elem> v(p - 1);
    std::string label;
    switch (spec.kind) {
        case FnSpec::Kind::Const: {
            const Elem c = F.reduce(spec.a);
            std::fill(v.begin(), v.end(), c);
            label = "const:" + std::to_string(spec.a);
            break;
        }
        case FnSpec::Kind::Identity:
            for (Elem x = 1; x < p; ++x) v[x - 1] = x;
            label = "id";
            break;
        case FnSpec::Kind::Power:
            for (Elem x = 1; x < p; ++x) v[x - 1] = F.pow(x, spec.a);
            label = "power:" + std::to_string(spec.a);
            break;
        case FnSpec::Kind::Affine: {
            const Elem u = F.reduce(spec.a), w = F.reduce(spec.b);
            for (Elem x = 1; x < p; ++x) v[x - 1] = F.add(F.mul(u, x), w);
            label = "affine:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
            break;
        }
        case FnSpec::Kind::Random: {
            CounterRng rng(static_cast<std::uint64_t>(spec.a), 0xF17Eull);
            for (auto& y : v) y = static_cast<Elem>(rng.uniform(p - 1) + 1);
            label = "random:" + std::to_string(spec.a);
            break;
        }
        case FnSpec::Kind::Table:
            v = spec.table;
            label = "table";
            break;
    }
    FnTable t(F, std::move(v));
    t.set_label(std::move(label));
    return t;
}

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
    std::int64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw Error(ErrorCode::ParseError, "bad integer in function spec '" + whole + "'");
    return v;
}

}  // namespace

FnTable parse_fn(const PrimeField& F, const std::string& text) {
    FnSpec spec;
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "id" && colon == std::string::npos) {
        spec.kind = FnSpec::Kind::Identity;
    } else if (head == "const") {
        spec.kind = FnSpec::Kind::Const;
        spec.a = parse_int(arg, text);
    } else if (head == "power") {
        spec.kind = FnSpec::Kind::Power;
        spec.a = parse_int(arg, text);
    } else if (head == "affine") {
        const auto comma = arg.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "affine spec needs u,v: '" + text + "'");
        spec.kind = FnSpec::Kind::Affine;
        spec.a = parse_int(arg.substr(0, comma), text);
        spec.b = parse_int(arg.substr(comma + 1), text);
    } else if (head == "random") {
        spec.kind = FnSpec::Kind::Random;
        spec.a = parse_int(arg, text);
    } else if (head == "file") {
        FnTable t = read_fn_file(arg);
        if (!(t.field() == F)) {
            throw Error(ErrorCode::FieldMismatch, "table file is over p=" + std::to_string(t.field().p()));
        }
        t.set_label(text);
        return t;
    } else {
        throw Error(ErrorCode::ParseError, "unknown function spec '" + text + "'");
    }
    FnTable t = make_fn(F, spec);
    t.set_label(text);
    return t;
}

std::uint32_t mu(const FnTable& g, const std::optional<FSet>& domain) {
    const PrimeField& F = g.field();
    std::vector<std::uint32_t> fibre(F.p(), 0);
    std::uint32_t best = 0;
    for (Elem x = 1; x < F.p(); ++x) {
        if (domain && !domain->contains(x)) continue;
        best = std::max(best, ++fibre[g(x)]);
    }
    return best;
}

FnTable pointwise_product(const FnTable& g, const FnTable& h) {
    if (!(g.field() == h.field())) throw Error(ErrorCode::FieldMismatch, "pointwise product over different fields");
    const PrimeField& F = g.field();
    std::vector<Elem> v(F.p() - 1);
    for (Elem x = 1; x < F.p(); ++x) v[x - 1] = F.mul(g(x), h(x));
    FnTable t(F, std::move(v));
    t.set_label(g.label() + "*" + h.label());
    return t;
}

FSet f_image(const FnTable& g, const FnTable& h, const FSet& A, const FSet& B) {
    require_same_field(A, B);
    if (!(g.field() == A.field()) || !(h.field() == A.field())) {
        throw Error(ErrorCode::FieldMismatch, "function tables over a different field");
    }
    if (A.contains(0)) throw Error(ErrorCode::ZeroInA, "f(A,B) needs 0 not in A");
    const PrimeField& F = A.field();
    FSet out(F);
    const auto eb = B.elements();
    for (Elem a : A.elements()) {
        const Elem ga = g(a), ha = h(a);
        for (Elem b : eb) out.insert(F.mul(ga, F.add(ha, b)));
    }
    return out;
}

}  // namespace fpsp
