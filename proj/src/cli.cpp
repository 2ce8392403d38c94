#include "fpsp/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fpsp/error.hpp"
#include "fpsp/io.hpp"
#include "fpsp/sweep.hpp"

namespace fpsp {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// `full`, `star` (F_p^*) or a set file.
FSet load_set(const std::string& expr, std::optional<PrimeField>& field) {
    if (expr == "full" || expr == "star") {
        if (!field) throw Usage("set '" + expr + "' needs --p");
        return expr == "full" ? FSet::full(*field) : FSet::nonzero(*field);
    }
    FSet s = read_set_file(expr);
    if (field && !(s.field() == *field)) {
        throw Error(ErrorCode::FieldMismatch, expr + " is over p=" + std::to_string(s.p()) +
                                                  ", expected p=" + std::to_string(field->p()));
    }
    field = s.field();
    return s;
}

std::optional<PrimeField> field_from(std::uint64_t p) {
    if (p == 0) return std::nullopt;
    return make_field(p);
}

PrimeField require_field(const std::optional<PrimeField>& f) {
    if (!f) throw Usage("--p is required");
    return *f;
}

Exponent parse_exponent(const std::string& s) {
    Exponent e;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            e.num = static_cast<std::uint32_t>(std::stoul(s));
        } else {
            e.num = static_cast<std::uint32_t>(std::stoul(s.substr(0, slash)));
            e.den = static_cast<std::uint32_t>(std::stoul(s.substr(slash + 1)));
        }
    } catch (const std::exception&) {
        throw Usage("bad exponent '" + s + "'");
    }
    if (e.den == 0) throw Usage("bad exponent '" + s + "'");
    return e;
}

Rational parse_rational(const std::string& s) {
    const Exponent e = parse_exponent(s);
    return Rational{e.num, e.den};
}

void emit_set(const FSet& s, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        write_set(out, s);
    } else {
        write_set_file(out_path, s);
    }
}

Method parse_method(const std::string& s) {
    if (s == "naive") return Method::Naive;
    if (s == "transform") return Method::Transform;
    return Method::Auto;
}

int report_chain(const ChainReport& rep, std::ostream& out) {
    out << to_json(rep).dump(2) << '\n';
    return rep.failures() == 0 ? kOk : kCheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact sum-product verification over prime fields", "fpsp"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    int status = kOk;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a structured or random subset of F_p");
    std::uint64_t gen_p = 0, gen_seed = 0, gen_id = 0;
    std::string gen_family = "interval", gen_out;
    FamilyParams gp;
    std::vector<Elem> gen_elems;
    gen->add_option("--p", gen_p, "Prime modulus")->required();
    gen->add_option("--family", gen_family, "interval|ap|gp|subgroup|random|explicit");
    gen->add_option("--start", gp.start, "First element");
    gen->add_option("--step", gp.step, "AP difference");
    gen->add_option("--ratio", gp.ratio, "GP ratio");
    gen->add_option("--len", gp.length, "Size");
    gen->add_option("--order", gp.order, "Subgroup order");
    gen->add_option("--seed", gen_seed, "Seed (random family)");
    gen->add_option("--id", gen_id, "Instance id (random family)");
    gen->add_option("--elements", gen_elems, "Explicit elements");
    gen->add_flag("--zero-free", gp.zero_free, "Exclude 0");
    gen->add_option("--out", gen_out, "Output set file (default: stdout)");
    gen->callback([&] {
        const PrimeField F = make_field(gen_p);
        const auto fam = parse_family(gen_family);
        if (!fam) throw Usage("unknown family '" + gen_family + "'");
        gp.family = *fam;
        gp.instance_id = gen_id;
        gp.elements = gen_elems;
        emit_set(generate(F, gp, gen_seed), gen_out, out);
    });

    // setop
    auto* setop = app.add_subcommand("setop", "Sumset, difference, product, ratio or affine image");
    std::uint64_t so_p = 0;
    std::string so_a, so_b, so_op = "sum", so_out, so_method = "auto";
    Elem so_lambda = 1, so_shift = 0;
    setop->add_option("--p", so_p, "Prime modulus (needed for full/star)");
    setop->add_option("--A", so_a, "Set file, full or star")->required();
    setop->add_option("--B", so_b, "Second operand");
    setop->add_option("--op", so_op, "sum|diff|prod|ratio|affine");
    setop->add_option("--lambda", so_lambda, "Dilation for affine");
    setop->add_option("--shift", so_shift, "Translation for affine");
    setop->add_option("--method", so_method, "naive|transform|auto");
    setop->add_option("--out", so_out, "Output set file (default: stdout)");
    setop->callback([&] {
        auto F = field_from(so_p);
        const FSet A = load_set(so_a, F);
        if (so_op == "affine") {
            emit_set(affine(A, so_lambda, so_shift), so_out, out);
            return;
        }
        if (so_b.empty()) throw Usage("--B is required for " + so_op);
        const FSet B = load_set(so_b, F);
        SetOp op;
        if (so_op == "sum") op = SetOp::Sum;
        else if (so_op == "diff") op = SetOp::Diff;
        else if (so_op == "prod") op = SetOp::Prod;
        else if (so_op == "ratio") op = SetOp::Ratio;
        else throw Usage("unknown op '" + so_op + "'");
        emit_set(combine(A, B, op, parse_method(so_method)), so_out, out);
    });

    // image
    auto* image = app.add_subcommand("image", "f(A,B) = {g(a)(h(a)+b)}");
    std::uint64_t im_p = 0;
    std::string im_a, im_b, im_g = "id", im_h = "const:1", im_out;
    image->add_option("--p", im_p, "Prime modulus");
    image->add_option("--A", im_a)->required();
    image->add_option("--B", im_b)->required();
    image->add_option("--g", im_g, "Function spec");
    image->add_option("--h", im_h, "Function spec");
    image->add_option("--out", im_out);
    image->callback([&] {
        auto F = field_from(im_p);
        const FSet A = load_set(im_a, F);
        const FSet B = load_set(im_b, F);
        emit_set(f_image(parse_fn(*F, im_g), parse_fn(*F, im_h), A, B), im_out, out);
    });

    // energy
    auto* energy = app.add_subcommand("energy", "Moment of a representation function");
    std::uint64_t en_p = 0;
    std::string en_a, en_b, en_op = "diff", en_n = "2", en_method = "auto";
    energy->add_option("--p", en_p);
    energy->add_option("--A", en_a)->required();
    energy->add_option("--B", en_b)->required();
    energy->add_option("--op", en_op, "diff|ratio|sum");
    energy->add_option("--n", en_n, "Exponent, integer or num/den");
    energy->add_option("--method", en_method, "naive|transform|auto");
    energy->callback([&] {
        auto F = field_from(en_p);
        const FSet A = load_set(en_a, F);
        const FSet B = load_set(en_b, F);
        RepKind kind;
        if (en_op == "diff") kind = RepKind::Difference;
        else if (en_op == "ratio") kind = RepKind::Ratio;
        else if (en_op == "sum") kind = RepKind::Sum;
        else throw Usage("unknown op '" + en_op + "'");
        const Moment m = moment(rep_fn(A, B, kind, parse_method(en_method)), parse_exponent(en_n));
        if (m.exact) {
            out << to_decimal(*m.exact) << '\n';
        } else {
            std::ostringstream s;
            s.precision(21);
            s << m.value;
            out << s.str() << '\n';
        }
    });

    // mu
    auto* mu_cmd = app.add_subcommand("mu", "Largest fibre of a function table");
    std::uint64_t mu_p = 0;
    std::string mu_g, mu_domain;
    mu_cmd->add_option("--p", mu_p)->required();
    mu_cmd->add_option("--g", mu_g, "Function spec")->required();
    mu_cmd->add_option("--domain", mu_domain, "Restrict fibres to a set");
    mu_cmd->callback([&] {
        auto F = field_from(mu_p);
        std::optional<FSet> dom;
        if (!mu_domain.empty()) dom = load_set(mu_domain, F);
        out << mu(parse_fn(*F, mu_g), dom) << '\n';
    });

    // incidence
    auto* inc = app.add_subcommand("incidence", "Point-plane incidences in F_p^3");
    std::string inc_points, inc_planes, inc_mode = "count";
    inc->add_option("--points", inc_points, "Point file")->required();
    inc->add_option("--planes", inc_planes, "Plane file");
    inc->add_option("--mode", inc_mode, "count|collinear|rudnev");
    inc->callback([&] {
        auto [F, pts] = read_points_file(inc_points);
        if (inc_mode == "collinear") {
            IncidenceConfig cfg(F, std::move(pts), {});
            out << max_collinear(F, cfg.points()) << '\n';
            return;
        }
        if (inc_planes.empty()) throw Usage("--planes is required for " + inc_mode);
        auto [G, planes] = read_planes_file(inc_planes);
        if (!(F == G)) throw Error(ErrorCode::FieldMismatch, "point and plane files use different p");
        const IncidenceConfig cfg(F, std::move(pts), std::move(planes));
        if (inc_mode == "count") {
            out << incidences(cfg) << '\n';
        } else if (inc_mode == "rudnev") {
            const RudnevRow r = rudnev_ratio(cfg);
            const nlohmann::json j = {{"I", r.incidences},        {"k", r.k},           {"|R|", r.points},
                                      {"|S|", r.planes},          {"bound", r.bound},   {"ratio", r.ratio},
                                      {"|R|<=|S|", r.points_le_planes}, {"|R|<=p^2", r.points_le_p2}};
            out << j.dump(2) << '\n';
        } else {
            throw Usage("unknown mode '" + inc_mode + "'");
        }
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Single-instance verification");
    verify->require_subcommand(1);
    std::uint64_t v_p = 0;
    std::string v_a, v_b, v_c, v_d, v_g = "id", v_h = "const:1", v_g2, v_h2, v_kind = "sum", v_eps, v_id, v_fmt = "json";
    std::uint64_t v_k = 0;
    const auto common = [&](CLI::App* c, bool with_a) {
        c->add_option("--p", v_p, "Prime modulus");
        if (with_a) c->add_option("--A", v_a, "Set file, full or star")->required();
        c->add_option("--B", v_b);
        c->add_option("--C", v_c);
    };
    auto* lemma = verify->add_subcommand("lemma-chain", "Energy-to-incidence chain");
    common(lemma, true);
    lemma->add_option("--g", v_g);
    lemma->add_option("--h", v_h);
    lemma->add_option("--kind", v_kind, "sum|prod");
    lemma->add_option("--k", v_k, "Level; 0 picks the dyadic maximiser");
    auto* nchain = verify->add_subcommand("n-chain", "Popular-difference solution count");
    common(nchain, false);
    auto* composite = verify->add_subcommand("composite", "N^2 <= X * sum r^3 r");
    common(composite, false);
    auto* phi = verify->add_subcommand("phi", "Popular-sum core and phi count");
    common(phi, false);
    phi->add_option("--eps", v_eps, "epsilon as num/den (default 1/log2|C|)");
    auto* theorem = verify->add_subcommand("theorem", "Ratio row for one theorem");
    common(theorem, true);
    theorem->add_option("--D", v_d);
    theorem->add_option("--id", v_id, "Theorem id")->required();
    theorem->add_option("--g1,--g", v_g);
    theorem->add_option("--h1,--h", v_h);
    theorem->add_option("--g2", v_g2);
    theorem->add_option("--h2", v_h2);
    theorem->add_option("--format", v_fmt, "json|csv");

    const auto load_bc = [&](std::optional<PrimeField>& F) {
        if (v_b.empty()) throw Usage("--B is required");
        const FSet B = load_set(v_b, F);
        const FSet C = v_c.empty() ? B : load_set(v_c, F);
        return std::pair{B, C};
    };
    lemma->callback([&] {
        auto F = field_from(v_p);
        const FSet A = load_set(v_a, F);
        const FSet B = v_b.empty() ? A : load_set(v_b, F);
        const FSet C = v_c.empty() ? B : load_set(v_c, F);
        if (v_kind != "sum" && v_kind != "prod") throw Usage("--kind must be sum or prod");
        status = report_chain(lemma_chain_check(A, B, C, parse_fn(*F, v_g), parse_fn(*F, v_h),
                                                v_kind == "sum" ? ChainKind::Sum : ChainKind::Prod, v_k),
                              out);
    });
    nchain->callback([&] {
        auto F = field_from(v_p);
        const auto [B, C] = load_bc(F);
        status = report_chain(n_chain_check(B, C), out);
    });
    composite->callback([&] {
        auto F = field_from(v_p);
        const auto [B, C] = load_bc(F);
        status = report_chain(composite_N_check(B, C), out);
    });
    phi->callback([&] {
        auto F = field_from(v_p);
        const auto [B, C] = load_bc(F);
        std::optional<Rational> eps;
        if (!v_eps.empty()) eps = parse_rational(v_eps);
        status = report_chain(phi_chain_check(B, C, eps), out);
    });
    theorem->callback([&] {
        auto F = field_from(v_p);
        const auto id = parse_theorem_id(v_id);
        if (!id) throw Usage("unknown theorem id '" + v_id + "'");
        const FSet A = load_set(v_a, F);
        const FSet B = v_b.empty() ? A : load_set(v_b, F);
        const FSet C = v_c.empty() ? B : load_set(v_c, F);
        const FSet D = v_d.empty() ? A : load_set(v_d, F);
        const PrimeField field = require_field(F);
        const FnTable g1 = parse_fn(field, v_g), h1 = parse_fn(field, v_h);
        const FnTable g2 = v_g2.empty() ? g1 : parse_fn(field, v_g2);
        const FnTable h2 = v_h2.empty() ? h1 : parse_fn(field, v_h2);
        const Instance inst{A, B, C, D, g1, h1, g2, h2};
        const auto rows = theorem_ratio(*id, inst);
        if (v_fmt == "csv") {
            out << rows_to_csv(rows);
        } else {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows) j.push_back(to_json(r));
            out << j.dump(2) << '\n';
        }
        for (const auto& r : rows) {
            if (r.asserted && !r.pass) status = kCheckFailed;
        }
    });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a sweep described by a JSON config");
    std::string sw_config, sw_json, sw_csv;
    int sw_workers = 0;
    bool sw_no_envelope = false;
    sweep->add_option("--config", sw_config, "Sweep config JSON")->required();
    sweep->add_option("--workers", sw_workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    sweep->add_option("--json", sw_json, "JSON report path (overrides config)");
    sweep->add_option("--csv", sw_csv, "CSV ratio table path (overrides config)");
    sweep->add_flag("--no-envelope", sw_no_envelope, "Omit timings and timestamps from the JSON report");
    sweep->callback([&] {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_text_file(sw_config));
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::ConfigError, e.what());
        }
        SweepConfig cfg = parse_sweep_config(j);
        if (!sw_json.empty()) cfg.json_out = sw_json;
        if (!sw_csv.empty()) cfg.csv_out = sw_csv;
        const Report rep = run_sweep(cfg, sw_workers);
        const std::string text = report_to_json(rep, !sw_no_envelope).dump(2) + "\n";
        if (cfg.json_out) {
            write_text_file(*cfg.json_out, text);
        } else if (!cfg.csv_out) {
            out << text;
        }
        if (cfg.csv_out) write_text_file(*cfg.csv_out, rows_to_csv(rep.rows));
        err << "sweep: " << rep.aggregates["instances"] << " instances, " << rep.rows.size() << " rows, "
            << rep.exact_failures << " exact failures\n";
        status = rep.exact_failures == 0 ? kOk : kCheckFailed;
    });

    std::vector<const char*> argv;
    argv.push_back("fpsp");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const Usage& e) {
        err << "fpsp: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "fpsp: " << e.what() << '\n';
        return kUsage;
    }
    return status;
}

int dispatch(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace fpsp
