#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "solenoid/attractor.hpp"
#include "solenoid/coding.hpp"
#include "solenoid/cones.hpp"
#include "solenoid/format.hpp"
#include "solenoid/nonwandering.hpp"
#include "solenoid/rng.hpp"
#include "solenoid/sweep.hpp"

namespace solenoid::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// shared option block and output plumbing
// ---------------------------------------------------------------------------

struct MapOpts {
    std::string map = "linear";
    int d = 2;
    double eps = 0.5;
    double delta = 0.2;
    double lambda_fp = 0.2;
    double lambda = 0.2;
    bool relaxed = false;
};

void add_map_opts(CLI::App* cmd, MapOpts& m, bool require_d) {
    cmd->add_option("--map", m.map, "map family: linear | shub | bump")
        ->check(CLI::IsMember({"linear", "shub", "bump"}));
    auto* d = cmd->add_option("--d", m.d, "cover degree (>= 2)");
    if (require_d) d->required();
    cmd->add_option("--eps", m.eps, "bump sink multiplier in (0,1)");
    cmd->add_option("--delta", m.delta, "bump support half-width in (0,1/4)");
    cmd->add_option("--lambda-fp", m.lambda_fp, "shub attracting multiplier in (0,1)");
    cmd->add_option("--lambda", m.lambda, "fiber contraction");
    cmd->add_flag("--relaxed", m.relaxed, "lift the injectivity bound on lambda");
}

CircleMapConfig build_base(const MapOpts& m) {
    if (m.map == "linear") return CircleMapConfig::linear(m.d);
    if (m.map == "shub") return CircleMapConfig::shub(m.d, m.lambda_fp);
    return CircleMapConfig::bump(m.d, m.eps, m.delta);
}

SkewConfig build_skew(const MapOpts& m) { return SkewConfig{build_base(m), m.lambda, m.relaxed}; }

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + out_path);
    f << payload;
}

json orbit_to_json(const PeriodicOrbitRecord& rec) {
    return json{{"period", rec.period},
                {"points", rec.points},
                {"multiplier", rec.multiplier},
                {"stability", rec.stability == Stability::attracting ? "attracting" : "repelling"}};
}

json gaps_to_json(const std::vector<Interval>& gaps) {
    json arr = json::array();
    for (const Interval& iv : gaps) arr.push_back(json::array({iv.lo, iv.hi}));
    return arr;
}

json map_opts_to_json(const MapOpts& m) {
    json j{{"map", m.map}, {"d", m.d}, {"lambda", m.lambda}, {"relaxed", m.relaxed}};
    if (m.map == "bump") {
        j["eps"] = m.eps;
        j["delta"] = m.delta;
    }
    if (m.map == "shub") j["lambda_fp"] = m.lambda_fp;
    return j;
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        grid.push_back(std::stod(item));
    }
    return grid;
}

std::string csv_field(double x) { return fmt_double(x); }

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

int cmd_nw(const MapOpts& m, int max_period, int depth, const std::string& out) {
    NWReport rep = classify_nw(build_base(m), max_period, depth);
    json j;
    j["kind"] = rep.kind == NWKind::whole_circle ? "WholeCircle" : "CantorPlusOrbits";
    json orbits = json::array();
    for (const auto& rec : rep.attracting_orbits) orbits.push_back(orbit_to_json(rec));
    for (const auto& rec : rep.repelling_orbits) orbits.push_back(orbit_to_json(rec));
    j["orbits"] = orbits;
    j["gaps"] = gaps_to_json(rep.gaps);
    j["gap_measure"] = rep.gap_measure;
    emit(out, j.dump(2) + "\n");
    return 0;
}

std::string section_to_csv(const CrossSection& sec) {
    std::string csv = "itinerary,center_re,center_im,radius\n";
    for (const DiskRecord& d : sec.disks) {
        std::string itin;
        for (std::size_t i = 0; i < d.itinerary.size(); ++i) {
            if (i) itin += ';';
            itin += fmt_double(d.itinerary[i]);
        }
        csv += itin + "," + csv_field(d.center.real()) + "," + csv_field(d.center.imag()) + "," +
               csv_field(d.radius) + "\n";
    }
    return csv;
}

int cmd_cross_section(const MapOpts& m, double t, int depth, int resolution,
                      const std::string& out) {
    SkewConfig F = build_skew(m);
    CrossSection sec = cross_section(F, t, depth);
    emit(out + ".csv", section_to_csv(sec));
    emit(out + ".ppm", raster_to_p5(render_cross_section(sec, resolution)));
    return 0;
}

int cmd_render(const MapOpts& m, double t, int depth, int resolution, const std::string& out) {
    SkewConfig F = build_skew(m);
    emit(out, raster_to_p5(render_cross_section(cross_section(F, t, depth), resolution)));
    return 0;
}

int cmd_encode(const MapOpts& m, double t, double z_re, double z_im, bool default_z, int depth,
               const std::string& out) {
    SkewConfig F = build_skew(m);
    TorusPoint p{t, {z_re, z_im}};
    if (default_z) {
        // attractor point over t: decode the first-branch backward chain
        Itinerary chain;
        chain.coords.push_back(wrap_unit(t));
        for (int i = 0; i < depth + 8; ++i)
            chain.coords.push_back(preimages(F.base, chain.coords.back()).front());
        p = decode(chain, F);
    }
    Itinerary itin = encode(F, p, depth);
    json j{{"depth", itin.depth()},
           {"coords", itin.coords},
           {"point", json::array({p.t, p.z.real(), p.z.imag()})}};
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_cones(const MapOpts& m, int samples, int rays, int gap_depth, std::uint64_t seed,
              const std::string& out) {
    SkewConfig F = build_skew(m);
    NWReport nw = classify_nw(F.base, 2, gap_depth);
    SplitMix64 rng(seed);
    std::vector<TorusPoint> pts = sample_attractor_points(F, nw.gaps, samples, 12, rng);
    double dg_min = std::numeric_limits<double>::infinity();
    for (const TorusPoint& q : pts) dg_min = std::min(dg_min, deriv(F.base, q.t));
    double aperture = valid_aperture(dg_min, F.lambda);
    ConeReport rep = cone_invariance_check(F, ConeParam{aperture}, pts, rays);
    json j{{"aperture", aperture},
           {"dg_min", dg_min},
           {"ok", rep.ok},
           {"samples", rep.samples},
           {"worst_margin", rep.worst_margin}};
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out) {
    std::vector<RegimeReport> reps = run_sweep(cfg);
    std::string csv = "mu,regime,n_attracting_orbits,gap_measure,sink_t,sink_re,sink_im,error\n";
    int failed = 0;
    for (const RegimeReport& r : reps) {
        if (!r.error.empty()) {
            ++failed;
            csv += csv_field(r.mu) + ",,,,,,," + r.error + "\n";
            continue;
        }
        std::string regime =
            r.regime == Regime::expanding_attractor ? "ExpandingAttractor" : "ZeroDimPlusPeriodic";
        std::string sink_t, sink_re, sink_im;
        if (r.sink) {
            sink_t = csv_field(r.sink->t);
            sink_re = csv_field(r.sink->z.real());
            sink_im = csv_field(r.sink->z.imag());
        }
        csv += csv_field(r.mu) + "," + regime + "," + std::to_string(r.n_attracting_orbits) + "," +
               csv_field(r.gap_measure) + "," + sink_t + "," + sink_re + "," + sink_im + ",\n";
    }
    emit(out, csv);
    return failed == static_cast<int>(reps.size()) ? 3 : 0;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

json suite_diameter(const SkewConfig& F) {
    double t = 0.37;
    double max_rel_affine = 0.0;
    for (int n = 1; n <= 25; ++n) {
        double measured = 2.0 * fiber_affine(F, t, n).scale;
        double expected = 2.0 * std::pow(F.lambda, n);
        max_rel_affine = std::max(max_rel_affine, std::abs(measured - expected) / expected);
    }
    // direct point pushing, shallow depths where absorption stays below 1e-9
    double max_rel_points = 0.0;
    for (int n = 1; n <= 8; ++n) {
        double diam = 0.0;
        std::vector<TorusPoint> boundary;
        for (int j = 0; j < 8; ++j) boundary.push_back({t, unit_phase(j / 8.0)});
        for (int i = 0; i < n; ++i)
            for (TorusPoint& p : boundary) p = apply(F, p);
        for (std::size_t a = 0; a < boundary.size(); ++a)
            for (std::size_t b = a + 1; b < boundary.size(); ++b)
                diam = std::max(diam, std::abs(boundary[a].z - boundary[b].z));
        double expected = 2.0 * std::pow(F.lambda, n);
        max_rel_points = std::max(max_rel_points, std::abs(diam - expected) / expected);
    }
    bool pass = max_rel_affine <= 1e-9 && max_rel_points <= 1e-9;
    return json{{"pass", pass},
                {"max_rel_err_affine", max_rel_affine},
                {"max_rel_err_points", max_rel_points}};
}

json suite_disjointness(const SkewConfig& F) {
    InjectivityReport inj = check_injectivity(F, 2000);
    bool nesting_ok = true, siblings_ok = true;
    double min_sibling_margin = std::numeric_limits<double>::infinity();
    CrossSection prev;
    for (int n = 1; n <= 10; ++n) {
        CrossSection sec = cross_section(F, 0.37, n);
        int d = F.degree();
        for (std::size_t i = 0; i < sec.disks.size(); ++i) {
            if (n > 1) {
                const DiskRecord& parent = prev.disks[i / d];
                if (std::abs(sec.disks[i].center - parent.center) + sec.disks[i].radius >
                    parent.radius + 1e-12)
                    nesting_ok = false;
            }
            // siblings: same parent, consecutive block of d
            std::size_t block = (i / d) * d;
            for (std::size_t jj = block; jj < i; ++jj) {
                double gap = std::abs(sec.disks[i].center - sec.disks[jj].center);
                min_sibling_margin = std::min(min_sibling_margin, gap - 2.0 * sec.disks[i].radius);
                if (gap <= 2.0 * sec.disks[i].radius) siblings_ok = false;
            }
        }
        prev = std::move(sec);
    }
    bool pass = inj.ok && nesting_ok && siblings_ok;
    return json{{"pass", pass},
                {"injectivity_ok", inj.ok},
                {"min_center_gap", inj.min_center_gap},
                {"required_gap", inj.required},
                {"nesting_ok", nesting_ok},
                {"siblings_ok", siblings_ok},
                {"min_sibling_margin", min_sibling_margin}};
}

json suite_conjugacy(const SkewConfig& F, SplitMix64& rng) {
    const int n_points = 300, decode_depth = 24, check_depth = 20, rt_depth = 15;
    int failures = 0;
    double max_rt_ratio = 0.0;
    std::string first_error;
    for (int i = 0; i < n_points; ++i) {
        try {
            Itinerary itin;
            itin.coords.push_back(rng.next_double());
            for (int j = 0; j < decode_depth; ++j) {
                std::vector<double> pre = preimages(F.base, itin.coords.back());
                itin.coords.push_back(pre[rng.next_below(pre.size())]);
            }
            TorusPoint p = decode(itin, F);
            if (!conjugacy_check(F, p, check_depth)) ++failures;
            TorusPoint q = decode(encode(F, p, rt_depth), F);
            double dist = circle_dist(p.t, q.t) + std::abs(p.z - q.z);
            max_rt_ratio = std::max(max_rt_ratio, dist / (2.0 * std::pow(F.lambda, rt_depth)));
        } catch (const Error& e) {
            ++failures;
            if (first_error.empty()) first_error = e.what();
        }
    }
    bool pass = failures == 0 && max_rt_ratio <= 1.0;
    json j{{"pass", pass},
           {"checked", n_points},
           {"failures", failures},
           {"max_roundtrip_ratio", max_rt_ratio}};
    if (!first_error.empty()) j["error"] = first_error;
    return j;
}

json suite_cones(const SkewConfig& F, SplitMix64& rng) {
    NWReport nw = classify_nw(F.base, 2, 8);
    std::vector<TorusPoint> pts = sample_attractor_points(F, nw.gaps, 640, 12, rng);
    double dg_min = std::numeric_limits<double>::infinity();
    for (const TorusPoint& q : pts) dg_min = std::min(dg_min, deriv(F.base, q.t));
    double aperture = valid_aperture(dg_min, F.lambda);
    ConeReport inv = cone_invariance_check(F, ConeParam{aperture}, pts, 16);

    // per-step slope-difference contraction, measured against lambda / Dg(t)
    double max_slope_rel_err = 0.0;
    for (int i = 0; i < 50; ++i) {
        const TorusPoint& p = pts[static_cast<std::size_t>(i) % pts.size()];
        Itinerary itin = encode(F, p, 5);
        TangentVector v{1.0, (0.5 / aperture) * unit_phase(0.13)};
        TangentVector w{1.0, (0.9 / aperture) * unit_phase(0.71)};
        std::vector<double> diffs = slope_contraction_rate(F, itin, v, w, 4);
        for (int j = 1; j <= 4; ++j) {
            double expected = F.lambda / deriv(F.base, itin.coords[4 - j + 1]);
            double measured = diffs[j] / diffs[j - 1];
            max_slope_rel_err =
                std::max(max_slope_rel_err, std::abs(measured - expected) / expected);
        }
    }

    bool vertical_exact = true;
    for (int i = 0; i < 100; ++i) {
        const TorusPoint& p = pts[static_cast<std::size_t>(i) % pts.size()];
        std::complex<double> v23{rng.next_in(-1.0, 1.0), rng.next_in(-1.0, 1.0)};
        TangentVector img = push_forward(F, p, {0.0, v23});
        if (img.v1 != 0.0 || img.v23 != F.lambda * v23) vertical_exact = false;
    }

    bool pass = inv.ok && max_slope_rel_err <= 1e-9 && vertical_exact;
    return json{{"pass", pass},
                {"aperture", aperture},
                {"dg_min", dg_min},
                {"invariance_ok", inv.ok},
                {"worst_margin", inv.worst_margin},
                {"ray_samples", inv.samples},
                {"max_slope_rel_err", max_slope_rel_err},
                {"vertical_exact", vertical_exact}};
}

// independent crossing counter for fixed points of g^p
long count_periodic_oracle(const CircleMapConfig& map, int p) {
    long n = std::max(20000L, static_cast<long>(200.0 * std::pow(map.max_slope(), p)));
    auto phi = [&](double x) {
        double y = x;
        for (int i = 0; i < p; ++i) y = eval(map, y);
        return signed_coord(y - x);
    };
    long count = 0;
    double prev = phi(0.0);
    for (long i = 1; i <= n; ++i) {
        double cur = phi(static_cast<double>(i) / n);
        if (std::abs(prev) + std::abs(cur) < 0.5 &&
            ((prev <= 0.0 && cur > 0.0) || (prev >= 0.0 && cur < 0.0)))
            ++count;
        prev = cur;
    }
    return count;
}

json suite_census(const SkewConfig& F) {
    bool oracle_match = true, projection_ok = true;
    double max_residual = 0.0;
    json counts = json::array();
    for (int p = 1; p <= 5; ++p) {
        std::vector<PeriodicOrbitRecord> recs = periodic_points(F.base, p);
        long n_points = 0;
        for (const auto& r : recs) n_points += static_cast<long>(r.points.size());
        long oracle = count_periodic_oracle(F.base, p);
        if (oracle != n_points) oracle_match = false;
        counts.push_back(json{{"p", p}, {"census", n_points}, {"oracle", oracle}});

        std::vector<LiftedOrbit> lifted;
        for (const auto& r : recs) lifted.push_back(lift_periodic_orbit(F, r));
        for (const LiftedOrbit& orb : lifted)
            for (const TorusPoint& pt : orb.points) {
                TorusPoint q = pt;
                for (int i = 0; i < orb.period; ++i) q = apply(F, q);
                max_residual =
                    std::max(max_residual, circle_dist(q.t, pt.t) + std::abs(q.z - pt.z));
            }
        if (!nw_projection_check(F, lifted)) projection_ok = false;
    }
    bool pass = oracle_match && projection_ok && max_residual <= 1e-10;
    return json{{"pass", pass},
                {"oracle_match", oracle_match},
                {"projection_ok", projection_ok},
                {"max_lift_residual", max_residual},
                {"counts", counts}};
}

int cmd_verify(const MapOpts& m, const std::vector<std::string>& only, std::uint64_t seed,
               const std::string& out) {
    SkewConfig F = build_skew(m);
    SplitMix64 rng(seed);
    auto wanted = [&](const std::string& name) {
        if (only.empty()) return true;
        for (const std::string& s : only)
            if (s == name) return true;
        return false;
    };

    json suites = json::object();
    if (wanted("diameter")) suites["diameter"] = suite_diameter(F);
    if (wanted("disjointness")) suites["disjointness"] = suite_disjointness(F);
    if (wanted("conjugacy")) suites["conjugacy"] = suite_conjugacy(F, rng);
    if (wanted("cones")) suites["cones"] = suite_cones(F, rng);
    if (wanted("census")) suites["census"] = suite_census(F);
    if (suites.empty()) throw ConfigError("no such suite; known: diameter disjointness conjugacy cones census");

    bool all_pass = true;
    for (const auto& [name, body] : suites.items())
        if (!body.at("pass").get<bool>()) all_pass = false;

    json j{{"all_pass", all_pass}, {"config", map_opts_to_json(m)}, {"seed", seed},
           {"suites", suites}};
    emit(out, j.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"numerical laboratory for solid-torus skew products over circle covers"};
    app.require_subcommand(1);

    // nw
    MapOpts nw_m;
    int nw_max_period = 6, nw_depth = 8;
    std::string nw_out;
    CLI::App* nw = app.add_subcommand("nw", "classify the base non-wandering set (JSON)");
    add_map_opts(nw, nw_m, /*require_d=*/true);
    nw->add_option("--max-period", nw_max_period, "periodic census bound");
    nw->add_option("--depth", nw_depth, "basin pull-back depth");
    nw->add_option("--out", nw_out, "output path (default stdout)");

    // cross-section
    MapOpts cs_m;
    double cs_t = 0.0;
    int cs_depth = 6, cs_res = 512;
    std::string cs_out;
    CLI::App* cs = app.add_subcommand("cross-section", "disk tree of a fiber (CSV + PPM)");
    add_map_opts(cs, cs_m, false);
    cs->add_option("--t", cs_t, "fiber coordinate");
    cs->add_option("--depth", cs_depth, "tree depth");
    cs->add_option("--resolution", cs_res, "raster resolution");
    cs->add_option("--out", cs_out, "output prefix (<out>.csv, <out>.ppm)")->required();

    // render
    MapOpts rd_m;
    double rd_t = 0.0;
    int rd_depth = 8, rd_res = 1024;
    std::string rd_out;
    CLI::App* rd = app.add_subcommand("render", "raster of a cross-section (PPM)");
    add_map_opts(rd, rd_m, false);
    rd->add_option("--t", rd_t, "fiber coordinate");
    rd->add_option("--depth", rd_depth, "tree depth");
    rd->add_option("--resolution", rd_res, "raster resolution");
    rd->add_option("--out", rd_out, "output path")->required();

    // encode
    MapOpts en_m;
    double en_t = 0.0, en_zre = 0.0, en_zim = 0.0;
    int en_depth = 10;
    std::string en_out;
    CLI::App* en = app.add_subcommand("encode", "backward itinerary of a point (JSON)");
    add_map_opts(en, en_m, false);
    en->add_option("--t", en_t, "base coordinate");
    CLI::Option* zre = en->add_option("--z-re", en_zre, "fiber coordinate, real part");
    CLI::Option* zim = en->add_option("--z-im", en_zim, "fiber coordinate, imaginary part");
    en->add_option("--depth", en_depth, "itinerary depth");
    en->add_option("--out", en_out, "output path (default stdout)");

    // cones
    MapOpts co_m;
    co_m.map = "shub";
    int co_samples = 640, co_rays = 16, co_depth = 8;
    std::uint64_t co_seed = 1;
    std::string co_out;
    CLI::App* co = app.add_subcommand("cones", "cone-field invariance report (JSON)");
    add_map_opts(co, co_m, false);
    co->add_option("--samples", co_samples, "attractor sample points");
    co->add_option("--rays", co_rays, "boundary rays per point");
    co->add_option("--depth", co_depth, "basin gap depth for sampling");
    co->add_option("--seed", co_seed, "sampling seed");
    co->add_option("--out", co_out, "output path (default stdout)");

    // sweep
    std::string sw_grid = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
    SweepConfig sw_cfg;
    std::string sw_out;
    CLI::App* sw = app.add_subcommand("sweep", "solenoid-destruction parameter sweep (CSV)");
    sw->add_option("--mu-grid", sw_grid, "comma-separated ascending mu values");
    sw->add_option("--d", sw_cfg.degree, "cover degree");
    sw->add_option("--lambda", sw_cfg.lambda, "fiber contraction");
    sw->add_option("--max-period", sw_cfg.max_period, "periodic census bound");
    sw->add_option("--depth", sw_cfg.gap_depth, "basin pull-back depth");
    sw->add_option("--out", sw_out, "output path (default stdout)");

    // verify
    MapOpts vf_m;
    vf_m.map = "shub";
    std::vector<std::string> vf_suites;
    std::uint64_t vf_seed = 1;
    std::string vf_out;
    CLI::App* vf = app.add_subcommand("verify", "run the property suites (JSON)");
    add_map_opts(vf, vf_m, false);
    vf->add_option("--suite", vf_suites, "run only the named suite (repeatable)");
    vf->add_option("--seed", vf_seed, "sampling seed");
    vf->add_option("--out", vf_out, "output path (default stdout)");

    std::vector<const char*> argv;
    argv.push_back("sollab");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nw->parsed()) return cmd_nw(nw_m, nw_max_period, nw_depth, nw_out);
        if (cs->parsed()) return cmd_cross_section(cs_m, cs_t, cs_depth, cs_res, cs_out);
        if (rd->parsed()) return cmd_render(rd_m, rd_t, rd_depth, rd_res, rd_out);
        if (en->parsed())
            return cmd_encode(en_m, en_t, en_zre, en_zim,
                              zre->count() == 0 && zim->count() == 0, en_depth, en_out);
        if (co->parsed()) return cmd_cones(co_m, co_samples, co_rays, co_depth, co_seed, co_out);
        if (sw->parsed()) {
            sw_cfg.mu_grid = parse_grid(sw_grid);
            return cmd_sweep(sw_cfg, sw_out);
        }
        if (vf->parsed()) return cmd_verify(vf_m, vf_suites, vf_seed, vf_out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace solenoid::cli
