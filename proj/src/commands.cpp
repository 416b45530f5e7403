#include "gtrskit/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"

namespace gtrskit {

namespace {

using steady = std::chrono::steady_clock;

double ms_between(steady::time_point a, steady::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

const FieldCtx& field_from(const ojson& p) {
    if (p.contains("modulus")) {
        FieldSpec spec{p.at("p").get<uint32_t>(), p.at("m").get<uint32_t>(),
                       p.at("modulus").get<std::vector<uint32_t>>()};
        return make_field(spec);
    }
    if (p.contains("p") && p.contains("m"))
        return make_field(p.at("p").get<uint32_t>(), p.at("m").get<uint32_t>());
    if (p.contains("q")) return make_field_order(p.at("q").get<uint32_t>());
    throw std::invalid_argument("field parameters missing: give q, or p and m");
}

// Embeds the fully resolved field into the config echo so a report is
// recomputable without the built-in modulus table.
ojson config_echo(const RunConfig& rc, const FieldCtx& F) {
    RunConfig rc2 = rc;
    rc2.params["p"] = F.p();
    rc2.params["m"] = F.m();
    rc2.params["modulus"] = F.spec().modulus;
    return rc2.to_json();
}

FieldElem resolve_eta(const FieldCtx& F, const ojson& p, uint64_t default_seed) {
    if (p.contains("eta_idx")) return F.elem(p.at("eta_idx").get<uint32_t>());
    uint64_t seed = p.contains("eta_seed") ? p.at("eta_seed").get<uint64_t>() : default_seed;
    return seeded_etas(F, seed, 1)[0];
}

std::vector<FieldElem> elems_from_indices(const FieldCtx& F, const std::vector<uint32_t>& v) {
    std::vector<FieldElem> out;
    out.reserve(v.size());
    for (uint32_t i : v) out.push_back(F.elem(i));
    return out;
}

std::vector<uint32_t> indices_of(const std::vector<FieldElem>& v) {
    std::vector<uint32_t> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(e.value());
    return out;
}

// The admissible (k, t, h) grid behind every full sweep: 3 <= k <= q/2,
// t >= 1, t + h <= k - 1.
struct Cell {
    uint32_t k, t, h;
};

std::vector<Cell> full_grid(const FieldCtx& F) {
    std::vector<Cell> cells;
    for (uint32_t k = 3; 2 * k <= F.q(); ++k)
        for (uint32_t t = 1; t <= k - 1; ++t)
            for (uint32_t h = 0; t + h <= k - 1; ++h) cells.push_back({k, t, h});
    return cells;
}

FieldElem draw_nonzero(const FieldCtx& F, std::mt19937_64& g) {
    return F.elem(uint32_t(1 + rand_below(g, F.q() - 1)));
}

std::vector<FieldElem> draw_point_subset(const FieldCtx& F, std::mt19937_64& g, size_t n) {
    std::vector<uint32_t> perm(F.q());
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = 0; i < n; ++i)
        std::swap(perm[i], perm[i + size_t(rand_below(g, F.q() - i))]);
    perm.resize(n);
    return elems_from_indices(F, perm);
}

}  // namespace

Report cmd_construct(const RunConfig& rc) {
    const ojson& p = rc.params;
    const FieldCtx& F = field_from(p);
    const std::string family = p.at("family").get<std::string>();
    const uint32_t k = p.at("k").get<uint32_t>();
    const uint32_t t = p.at("t").get<uint32_t>();
    const uint32_t h = p.contains("h") ? p.at("h").get<uint32_t>() : 0;
    const FieldElem eta = resolve_eta(F, p, rc.seed);
    TwistParams tp(k, t, h, eta);

    auto start = steady::now();
    Construction built = [&]() -> Construction {
        if (family == "tc1") {
            std::vector<FieldElem> excluded;
            if (p.contains("exclude")) {
                excluded = elems_from_indices(F, p.at("exclude").get<std::vector<uint32_t>>());
            } else {
                uint32_t l = p.contains("l") ? p.at("l").get<uint32_t>() : 0;
                for (uint32_t a = 0; a < l; ++a) excluded.push_back(F.elem(a));
            }
            return construct_tc1(F, tp, excluded);
        }
        if (family == "tc2") {
            std::vector<FieldElem> pts;
            if (p.contains("points")) {
                pts = elems_from_indices(F, p.at("points").get<std::vector<uint32_t>>());
            } else {
                uint32_t n = p.at("n").get<uint32_t>();
                if (n > F.q()) throw ParamWindowError("n exceeds q", "n <= q");
                for (uint32_t a = 0; a < n; ++a) pts.push_back(F.elem(a));
            }
            return construct_tc2(F, tp, pts);
        }
        const uint32_t r = p.at("r").get<uint32_t>();
        const uint32_t cond = p.at("cond").get<uint32_t>();
        if (family == "ct4") return construct_ct4(F, r, cond, tp);
        if (family == "ct5") return construct_ct5(F, r, cond, tp);
        throw std::invalid_argument("unknown construction family: " + family);
    }();

    ResultEntry e;
    e.params["family"] = family;
    e.params["n"] = built.cfg.n();
    e.params["k"] = k;
    e.params["t"] = t;
    e.params["h"] = h;
    e.params["eta"] = eta.value();
    if (p.contains("r")) e.params["r"] = p.at("r").get<uint32_t>();
    if (p.contains("cond")) e.params["cond"] = p.at("cond").get<uint32_t>();
    e.verdict = "self_orthogonal";
    e.ok = true;
    e.certificate["points"] = indices_of(built.cfg.points);
    e.certificate["multipliers"] = indices_of(built.cfg.multipliers);
    e.certificate["code"] = code_to_json(built.code);
    e.certificate["witness"] = witness_to_json(built.witness);
    e.certificate["gram_hash"] = matrix_hash(gram(built.code.rref_generator()));
    try {
        e.certificate["classification"] = class_to_json(classify(built.code));
    } catch (const GuardExceededError&) {
        e.certificate["classification"] = "skipped(guard)";
    }
    size_t sq_dim = schur_square(built.code).k();
    e.certificate["square_dim"] = sq_dim;
    e.certificate["non_grs"] = sq_dim >= 2 * size_t(k);
    e.timing_ms = ms_between(start, steady::now());

    Report rep;
    rep.command = rc.command;
    rep.config = config_echo(rc, F);
    rep.results.push_back(std::move(e));
    return rep;
}

namespace {

// Cells with their per-cell seeded etas, drawn from one stream in cell order
// during (single-threaded) setup so worker count cannot affect the draws.
struct CellInstance {
    Cell cell;
    FieldElem eta;
};

std::vector<CellInstance> grid_instances(const FieldCtx& F, const ojson& p,
                                         uint64_t seed) {
    std::vector<Cell> cells;
    if (p.contains("k")) {
        Cell c{p.at("k").get<uint32_t>(), p.at("t").get<uint32_t>(),
               p.contains("h") ? p.at("h").get<uint32_t>() : 0};
        cells.push_back(c);
    } else {
        cells = full_grid(F);
    }
    const size_t etas = p.contains("etas") ? p.at("etas").get<size_t>() : 3;
    std::mt19937_64 g(seed);
    std::vector<CellInstance> out;
    out.reserve(cells.size() * etas);
    for (const Cell& c : cells)
        for (size_t i = 0; i < etas; ++i) out.push_back({c, draw_nonzero(F, g)});
    return out;
}

ojson span_check_certificate(const SpanCheck& chk) {
    ojson cert;
    cert["case"] = chk.case_label;
    cert["dim_lhs"] = chk.dim_lhs;
    cert["dim_rhs"] = chk.dim_rhs;
    return cert;
}

void fill_span_failure(ojson& cert, const FieldCtx& F, const TwistParams& tp,
                       const char* suite) {
    // Distinguishing data: canonical forms of both sides.
    EvalConfig cfg = EvalConfig::standard(F);
    LinearCode sq = schur_square(gtrs_code(cfg, tp));
    cert["square_rref"] = matrix_to_json(sq.rref_generator());
    cert["suite"] = suite;
}

Report verify_l3x(const RunConfig& rc, const FieldCtx& F, const std::string& suite) {
    std::vector<CellInstance> instances = grid_instances(F, rc.params, rc.seed);
    std::vector<ResultEntry> entries(instances.size());
    run_indexed(instances.size(), rc.workers, [&](size_t i) {
        const CellInstance& ins = instances[i];
        auto start = steady::now();
        ResultEntry e;
        e.params["k"] = ins.cell.k;
        e.params["t"] = ins.cell.t;
        e.params["h"] = ins.cell.h;
        e.params["eta"] = ins.eta.value();
        TwistParams tp(ins.cell.k, ins.cell.t, ins.cell.h, ins.eta);
        SpanCheck chk;
        if (suite == "L31")
            chk = verify_product_span(EvalConfig::standard(F), tp);
        else if (suite == "L32")
            chk = verify_full_support_square(F, tp);
        else
            chk = verify_square_dual(F, tp);
        e.verdict = chk.ok ? "pass" : "fail";
        e.ok = chk.ok;
        e.certificate = span_check_certificate(chk);
        if (!chk.ok) fill_span_failure(e.certificate, F, tp, suite.c_str());
        e.timing_ms = ms_between(start, steady::now());
        entries[i] = std::move(e);
    });
    Report rep;
    rep.command = rc.command;
    rep.config = config_echo(rc, F);
    rep.results = std::move(entries);
    return rep;
}

Report verify_powersum(const RunConfig& rc, const FieldCtx& F) {
    const ojson& p = rc.params;
    std::vector<uint32_t> ls;
    if (p.contains("l")) {
        ls.push_back(p.at("l").get<uint32_t>());
    } else {
        for (uint32_t l = 1; l <= F.q() - 2; ++l) ls.push_back(l);
    }
    std::vector<ResultEntry> entries(ls.size());
    run_indexed(ls.size(), rc.workers, [&](size_t i) {
        auto start = steady::now();
        ResultEntry e;
        e.params["l"] = ls[i];
        bool ok = verify_power_sums(F, ls[i]);
        e.verdict = ok ? "pass" : "fail";
        e.ok = ok;
        e.certificate["checked_pairs"] =
            uint64_t(ls[i] + 1) * (F.q() - 1 - ls[i]);
        e.timing_ms = ms_between(start, steady::now());
        entries[i] = std::move(e);
    });
    Report rep;
    rep.command = rc.command;
    rep.config = config_echo(rc, F);
    rep.results = std::move(entries);
    return rep;
}

Report verify_rsdual(const RunConfig& rc, const FieldCtx& F) {
    const ojson& p = rc.params;
    std::vector<uint32_t> ks;
    if (p.contains("k")) {
        ks.push_back(p.at("k").get<uint32_t>());
    } else {
        for (uint32_t k = 1; k <= F.q() - 1; ++k) ks.push_back(k);
    }
    std::vector<ResultEntry> entries(ks.size());
    run_indexed(ks.size(), rc.workers, [&](size_t i) {
        auto start = steady::now();
        ResultEntry e;
        e.params["k"] = ks[i];
        bool ok = verify_rs_duality(F, ks[i]);
        e.verdict = ok ? "pass" : "fail";
        e.ok = ok;
        e.certificate["dual_rref_hash"] =
            matrix_hash(dual(rs_code(F, ks[i])).rref_generator());
        e.timing_ms = ms_between(start, steady::now());
        entries[i] = std::move(e);
    });
    Report rep;
    rep.command = rc.command;
    rep.config = config_echo(rc, F);
    rep.results = std::move(entries);
    return rep;
}

struct OracleInstance {
    uint32_t k, t, h;
    FieldElem eta;
    std::vector<FieldElem> points;
    std::vector<FieldElem> mults;
};

OracleInstance draw_oracle_instance(const FieldCtx& F, std::mt19937_64& g) {
    const uint32_t q = F.q();
    OracleInstance ins{3, 1, 0, F.one(), {}, {}};
    ins.k = 3 + uint32_t(rand_below(g, q / 2 - 2));
    ins.t = 1 + uint32_t(rand_below(g, ins.k - 1));
    ins.h = uint32_t(rand_below(g, ins.k - ins.t));
    const size_t n = 2 * ins.k + size_t(rand_below(g, q - 2 * ins.k + 1));
    ins.points = draw_point_subset(F, g, n);
    ins.mults.reserve(n);
    for (size_t j = 0; j < n; ++j) ins.mults.push_back(draw_nonzero(F, g));
    ins.eta = draw_nonzero(F, g);
    return ins;
}

Report verify_oracle(const RunConfig& rc, const FieldCtx& F) {
    const ojson& p = rc.params;
    const size_t samples = p.contains("samples") ? p.at("samples").get<size_t>() : 200;
    std::mt19937_64 g(rc.seed);
    std::vector<OracleInstance> instances;
    instances.reserve(samples);
    for (size_t i = 0; i < samples; ++i) instances.push_back(draw_oracle_instance(F, g));
    std::vector<ResultEntry> entries(samples);
    run_indexed(samples, rc.workers, [&](size_t i) {
        const OracleInstance& ins = instances[i];
        auto start = steady::now();
        ResultEntry e;
        e.params["k"] = ins.k;
        e.params["t"] = ins.t;
        e.params["h"] = ins.h;
        e.params["n"] = ins.points.size();
        e.params["eta"] = ins.eta.value();
        TwistParams tp(ins.k, ins.t, ins.h, ins.eta);
        EvalConfig cfg(F, ins.points, ins.mults);
        SelfOrthWitness w = self_orth_feasibility(cfg, tp);
        bool gram_zero = is_self_orthogonal(gtrs_code(cfg, tp));
        e.ok = (w.feasible == gram_zero);
        e.verdict = e.ok ? "agree" : "disagree";
        e.certificate["points"] = indices_of(ins.points);
        e.certificate["multipliers"] = indices_of(ins.mults);
        e.certificate["feasible"] = w.feasible;
        e.certificate["gram_zero"] = gram_zero;
        e.certificate["dual_dim"] = w.dual_dim;
        if (w.feasible) e.certificate["witness"] = poly_to_json(w.witness);
        e.timing_ms = ms_between(start, steady::now());
        entries[i] = std::move(e);
    });
    Report rep;
    rep.command = rc.command;
    rep.config = config_echo(rc, F);
    rep.results = std::move(entries);
    return rep;
}

}  // namespace

Report cmd_verify(const RunConfig& rc) {
    const std::string suite = rc.params.at("suite").get<std::string>();
    const FieldCtx& F = field_from(rc.params);
    if (suite == "L31" || suite == "L32" || suite == "L34") return verify_l3x(rc, F, suite);
    if (suite == "powersum") return verify_powersum(rc, F);
    if (suite == "rsdual") return verify_rsdual(rc, F);
    if (suite == "oracle") return verify_oracle(rc, F);
    throw std::invalid_argument("unknown verify suite: " + suite);
}

Report cmd_search(const RunConfig& rc) {
    const ojson& p = rc.params;
    const FieldCtx& F = field_from(p);
    const uint32_t q = F.q();
    const size_t n = p.at("n").get<size_t>();
    if (n < 1 || n > q) throw ParamWindowError("search needs 1 <= n <= q", "1 <= n <= q");
    auto range_of = [&](const char* lo_key, const char* hi_key, const char* single_key,
                        uint32_t def_lo, uint32_t def_hi) {
        uint32_t lo = def_lo, hi = def_hi;
        if (p.contains(single_key)) lo = hi = p.at(single_key).get<uint32_t>();
        if (p.contains(lo_key)) lo = p.at(lo_key).get<uint32_t>();
        if (p.contains(hi_key)) hi = p.at(hi_key).get<uint32_t>();
        return std::make_pair(lo, hi);
    };
    auto [kmin, kmax] = range_of("kmin", "kmax", "k", 3, q / 2);
    auto [tmin, tmax] = range_of("tmin", "tmax", "t", 1, q / 2);
    auto [hmin, hmax] = range_of("hmin", "hmax", "h", 0, q / 2);
    const size_t samples = p.contains("samples") ? p.at("samples").get<size_t>() : 50;

    if (p.contains("k") && 2 * size_t(p.at("k").get<uint32_t>()) > n)
        throw ParamWindowError("search window needs n >= 2k", "2k <= n");

    std::vector<Cell> cells;
    for (uint32_t k = std::max(kmin, 3u); k <= kmax && 2 * size_t(k) <= n; ++k)
        for (uint32_t t = std::max(tmin, 1u); t <= tmax && t <= k - 1; ++t)
            for (uint32_t h = hmin; h <= hmax && t + h <= k - 1; ++h)
                cells.push_back({k, t, h});
    if (cells.empty())
        throw ParamWindowError("search grid has no admissible cells",
                               "3 <= k, 2k <= n, t >= 1, t + h <= k - 1");
    if (cells.size() * (samples + 3) > 1'000'000)
        throw GuardExceededError("search grid exceeds the instance guard");

    // All randomness drawn up-front in cell order (worker-count independent).
    struct SearchCell {
        Cell cell;
        std::vector<OracleInstance> instances;
        bool empty_dual = false;
    };
    std::mt19937_64 g(rc.seed);
    std::vector<SearchCell> work(cells.size());
    for (size_t ci = 0; ci < cells.size(); ++ci) {
        const Cell& c = cells[ci];
        work[ci].cell = c;
        if (corollary41_predicate(F, c.k, c.t)) {
            work[ci].empty_dual = true;
            continue;
        }
        // Unit-multiplier probes first (constructions live here), then the
        // seeded random samples.
        for (size_t i = 0; i < 3; ++i) {
            OracleInstance ins{c.k, c.t, c.h, draw_nonzero(F, g), {}, {}};
            ins.points = n == q ? F.elements() : draw_point_subset(F, g, n);
            ins.mults.assign(n, F.one());
            work[ci].instances.push_back(std::move(ins));
        }
        for (size_t s = 0; s < samples; ++s) {
            OracleInstance ins{c.k, c.t, c.h, F.one(), {}, {}};
            ins.points = n == q ? F.elements() : draw_point_subset(F, g, n);
            ins.mults.clear();
            for (size_t j = 0; j < n; ++j) ins.mults.push_back(draw_nonzero(F, g));
            ins.eta = draw_nonzero(F, g);
            work[ci].instances.push_back(std::move(ins));
        }
    }

    std::vector<ResultEntry> entries(cells.size());
    run_indexed(cells.size(), rc.workers, [&](size_t ci) {
        const SearchCell& sc = work[ci];
        auto start = steady::now();
        ResultEntry e;
        e.params["k"] = sc.cell.k;
        e.params["t"] = sc.cell.t;
        e.params["h"] = sc.cell.h;
        e.params["n"] = n;
        e.certificate["corollary41"] = sc.empty_dual;
        e.certificate["corollary42"] =
            corollary42_predicate(F, n, sc.cell.k, sc.cell.t, sc.cell.h);
        if (sc.empty_dual) {
            e.verdict = "found 0/0";
            e.ok = true;
            e.certificate["reason"] = "dual space empty";
            e.certificate["found"] = ojson::array();
            e.timing_ms = ms_between(start, steady::now());
            entries[ci] = std::move(e);
            return;
        }
        ojson found = ojson::array();
        for (const OracleInstance& ins : sc.instances) {
            TwistParams itp(ins.k, ins.t, ins.h, ins.eta);
            EvalConfig cfg(F, ins.points, ins.mults);
            SelfOrthWitness w = self_orth_feasibility(cfg, itp);
            if (!w.feasible) continue;
            ojson hit;
            hit["eta"] = ins.eta.value();
            hit["points"] = indices_of(ins.points);
            hit["multipliers"] = indices_of(ins.mults);
            hit["witness"] = poly_to_json(w.witness);
            try {
                hit["classification"] = class_to_json(classify(gtrs_code(cfg, itp)));
            } catch (const GuardExceededError&) {
                hit["classification"] = "skipped(guard)";
            }
            found.push_back(std::move(hit));
        }
        e.verdict = "found " + std::to_string(found.size()) + "/" +
                    std::to_string(sc.instances.size());
        e.ok = true;
        e.certificate["found"] = std::move(found);
        e.timing_ms = ms_between(start, steady::now());
        entries[ci] = std::move(e);
    });

    Report rep;
    rep.command = rc.command;
    rep.config = config_echo(rc, F);
    rep.results = std::move(entries);
    return rep;
}

void emit_report(const Report& report, const RunConfig& rc) {
    const std::string text = rc.format == "csv" ? report.to_csv(rc.timing)
                                                : report.to_json_text(rc.timing);
    if (rc.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(rc.out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output path: " + rc.out_path);
    os << text;
    if (!os) throw std::runtime_error("write failed: " + rc.out_path);
}

namespace {

ojson load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file: " + path);
    ojson j;
    is >> j;
    return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"gtrskit: generalized twisted Reed-Solomon code toolkit"};
    app.require_subcommand(1);
    // --h is a twist parameter, so help keeps only its long form.
    app.set_help_flag("--help", "print help");

    std::string out_path, format = "json", config_path;
    uint64_t seed = 0;
    bool timing = false;
    app.add_option("--out", out_path, "write the report to this path (default: stdout)");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    auto* seed_opt = app.add_option("--seed", seed, "seed for every sampled quantity");
    app.add_flag("--timing", timing, "include timing_ms in the report");
    app.add_option("--config", config_path, "JSON config file with field spec and defaults");

    // Field options shared by the subcommands.
    uint32_t q = 0, p = 0, m = 0;
    std::vector<uint32_t> modulus;
    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "field order (prime power)");
        cmd->add_option("--p", p, "field characteristic");
        cmd->add_option("--m", m, "extension degree");
        cmd->add_option("--modulus", modulus, "modulus coefficients c0..cm")->delimiter(',');
    };

    auto* construct = app.add_subcommand("construct", "build a certified self-orthogonal code");
    construct->set_help_flag("--help", "print help");
    construct->fallthrough();
    std::string family;
    construct->add_option("family", family, "construction family")
        ->required()
        ->check(CLI::IsMember({"tc1", "tc2", "ct4", "ct5"}));
    add_field_opts(construct);
    uint32_t k = 0, t = 0, h = 0, r = 0, cond = 0, l = 0, n = 0;
    uint32_t eta_idx = 0;
    uint64_t eta_seed = 0;
    std::vector<uint32_t> exclude, points;
    auto* k_opt = construct->add_option("--k", k, "dimension");
    auto* t_opt = construct->add_option("--t", t, "twist offset");
    construct->add_option("--h", h, "hook");
    auto* r_opt = construct->add_option("--r", r, "subfield degree");
    auto* cond_opt = construct->add_option("--cond", cond, "construction condition (1-4)");
    auto* l_opt = construct->add_option("--l", l, "number of excluded points (tc1)");
    auto* n_opt = construct->add_option("--n", n, "number of points (tc2)");
    auto* exclude_opt =
        construct->add_option("--exclude", exclude, "excluded point indices (tc1)")->delimiter(',');
    auto* points_opt =
        construct->add_option("--points", points, "point indices (tc2)")->delimiter(',');
    auto* eta_idx_opt = construct->add_option("--eta-idx", eta_idx, "eta as canonical index");
    auto* eta_seed_opt = construct->add_option("--eta-seed", eta_seed, "seed for eta draw");
    k_opt->required();
    t_opt->required();

    auto* verify = app.add_subcommand("verify", "run an identity-verification suite");
    verify->set_help_flag("--help", "print help");
    verify->fallthrough();
    std::string suite;
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"L31", "L32", "L34", "powersum", "rsdual", "oracle"}));
    add_field_opts(verify);
    bool all = false;
    uint32_t vk = 0, vt = 0, vh = 0, vl = 0, etas = 3;
    size_t samples = 200;
    verify->add_flag("--all", all, "sweep the full admissible grid (default)");
    auto* vk_opt = verify->add_option("--k", vk, "single k");
    auto* vt_opt = verify->add_option("--t", vt, "single t");
    auto* vh_opt = verify->add_option("--h", vh, "single h");
    auto* vl_opt = verify->add_option("--l", vl, "single exponent l (powersum)");
    auto* etas_opt = verify->add_option("--etas", etas, "seeded eta draws per cell");
    auto* samples_opt = verify->add_option("--samples", samples, "oracle sample count");

    auto* search = app.add_subcommand("search", "sample for self-orthogonal codes on a grid");
    search->set_help_flag("--help", "print help");
    search->fallthrough();
    add_field_opts(search);
    uint32_t sn = 0, sk = 0, st = 0, sh = 0;
    uint32_t kmin = 0, kmax = 0, tmin = 0, tmax = 0, hmin = 0, hmax = 0;
    size_t ssamples = 50;
    search->add_option("--n", sn, "code length")->required();
    auto* sk_opt = search->add_option("--k", sk, "single k");
    auto* st_opt = search->add_option("--t", st, "single t");
    auto* sh_opt = search->add_option("--h", sh, "single h");
    auto* kmin_opt = search->add_option("--kmin", kmin);
    auto* kmax_opt = search->add_option("--kmax", kmax);
    auto* tmin_opt = search->add_option("--tmin", tmin);
    auto* tmax_opt = search->add_option("--tmax", tmax);
    auto* hmin_opt = search->add_option("--hmin", hmin);
    auto* hmax_opt = search->add_option("--hmax", hmax);
    auto* ssamples_opt = search->add_option("--samples", ssamples, "random draws per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ojson cfgj = ojson::object();
        if (!config_path.empty()) cfgj = load_config_file(config_path);

        RunConfig rc;
        rc.workers = workers_from_env();
        rc.format = format;
        rc.out_path = out_path;
        rc.timing = timing;
        rc.seed = seed_opt->count() ? seed
                  : cfgj.contains("seed") ? cfgj.at("seed").get<uint64_t>()
                                          : 0;
        if (!app.count("--format") && cfgj.contains("format"))
            rc.format = cfgj.at("format").get<std::string>();

        ojson fparams = ojson::object();
        const bool have_flag_field = q || p || m;
        if (q) fparams["q"] = q;
        if (p) fparams["p"] = p;
        if (m) fparams["m"] = m;
        if (!modulus.empty()) fparams["modulus"] = modulus;
        if (!have_flag_field) {
            for (const char* key : {"q", "p", "m", "modulus"})
                if (cfgj.contains(key)) fparams[key] = cfgj.at(key);
        }

        Report rep;
        if (app.got_subcommand(construct)) {
            rc.command = "construct";
            rc.params["family"] = family;
            rc.params.update(fparams);
            // ct5 runs over q = 2^m; let --m alone imply p = 2 there.
            if (family == "ct5" && !rc.params.contains("p") && !rc.params.contains("q"))
                rc.params["p"] = 2;
            rc.params["k"] = k;
            rc.params["t"] = t;
            rc.params["h"] = h;
            if (r_opt->count()) rc.params["r"] = r;
            if (cond_opt->count()) rc.params["cond"] = cond;
            if (l_opt->count()) rc.params["l"] = l;
            if (n_opt->count()) rc.params["n"] = n;
            if (exclude_opt->count()) rc.params["exclude"] = exclude;
            if (points_opt->count()) rc.params["points"] = points;
            if (eta_idx_opt->count()) rc.params["eta_idx"] = eta_idx;
            if (eta_seed_opt->count()) rc.params["eta_seed"] = eta_seed;
            rep = cmd_construct(rc);
        } else if (app.got_subcommand(verify)) {
            rc.command = "verify";
            rc.params["suite"] = suite;
            rc.params.update(fparams);
            if (vk_opt->count()) rc.params["k"] = vk;
            if (vt_opt->count()) rc.params["t"] = vt;
            if (vh_opt->count()) rc.params["h"] = vh;
            if (vl_opt->count()) rc.params["l"] = vl;
            if (etas_opt->count()) rc.params["etas"] = etas;
            if (samples_opt->count()) rc.params["samples"] = samples;
            (void)all;  // the full grid is already the default
            rep = cmd_verify(rc);
        } else {
            rc.command = "search";
            rc.params.update(fparams);
            rc.params["n"] = sn;
            if (sk_opt->count()) rc.params["k"] = sk;
            if (st_opt->count()) rc.params["t"] = st;
            if (sh_opt->count()) rc.params["h"] = sh;
            if (kmin_opt->count()) rc.params["kmin"] = kmin;
            if (kmax_opt->count()) rc.params["kmax"] = kmax;
            if (tmin_opt->count()) rc.params["tmin"] = tmin;
            if (tmax_opt->count()) rc.params["tmax"] = tmax;
            if (hmin_opt->count()) rc.params["hmin"] = hmin;
            if (hmax_opt->count()) rc.params["hmax"] = hmax;
            if (ssamples_opt->count()) rc.params["samples"] = ssamples;
            rep = cmd_search(rc);
        }
        emit_report(rep, rc);
        return rep.all_ok() ? 0 : 1;
    } catch (const ParamWindowError& e) {
        ojson err;
        err["error"] = e.what();
        err["inequality"] = e.inequality();
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        ojson err;
        err["error"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}

}  // namespace gtrskit
