// Command-line front end. Exit codes: 0 ok, 2 bad input, 3 not integral,
// 4 cap exceeded, 5 verification failure, 1 anything else.
#include "nfc/io.hpp"
#include "nfc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace nfc;

namespace {

struct RunConfig {
    std::string input;
    Int level = 1;
    bool level_given = false;
    bool half = false;
    Int cap = 100;
    bool allow_high_dim = false;
    bool mumford = false;
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 1;
};

FCDatum read_datum(const std::string& in) {
    if (in == "fixture:hexagon") return pqr_datum(1, 1, 1);
    if (in == "fixture:tate") return tate_datum();
    if (in == "fixture:e8") return e8_datum();
    if (in.rfind("fixture:pqr:", 0) == 0) {
        Int p, q, r;
        if (std::sscanf(in.c_str() + 12, "%lld,%lld,%lld", &p, &q, &r) != 3)
            throw Error("BadInput", "expected fixture:pqr:P,Q,R");
        return pqr_datum(p, q, r);
    }
    if (in.rfind("fixture:", 0) == 0) throw Error("BadInput", "unknown fixture " + in);
    return load_datum(in);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw Error("BadInput", "cannot write " + cfg.output);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json header(const std::string& cmd, const FCDatum& d, const Level& lev) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = cmd;
    j["datum"] = datum_json(d);
    j["level"] = lev.ell;
    j["half"] = lev.half;
    return j;
}

int exit_code(const Error& e) {
    const std::string& k = e.kind();
    if (k == "NotIntegral") return 3;
    if (k == "NotFoundBelowCap" || k == "DimensionCap") return 4;
    if (k == "Internal") return 1;
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voronoi, fan and chart computations for FC data"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        if (needs_input)
            sub->add_option("datum", cfg.input, "datum JSON file, or fixture:hexagon|tate|e8|pqr:P,Q,R")
                ->required();
        sub->add_option("--level,-l", cfg.level, "level l")->check(CLI::PositiveNumber);
        sub->add_flag("--half", cfg.half, "half-level variant (B even)");
        sub->add_option("--cap", cfg.cap, "search cap for the minimal level");
        sub->add_flag("--allow-high-dim", cfg.allow_high_dim, "allow vertex enumeration above dimension 6");
        sub->add_option("--format,-f", cfg.format, "json | svg | text")
            ->check(CLI::IsMember({"json", "svg", "text"}));
        sub->add_option("--output,-o", cfg.output, "output path (default stdout)");
    };
    auto* voronoi = app.add_subcommand("voronoi", "Voronoi polytope Sigma_l(0) and Vor_l");
    auto* delaunay = app.add_subcommand("delaunay", "Delaunay complex of X modulo X");
    auto* fan = app.add_subcommand("fan", "fan over S modulo the beta(Y) translations");
    auto* charts = app.add_subcommand("charts", "monomial charts at the vertices and the center");
    auto* strata = app.add_subcommand("strata", "orbit stratification and components");
    auto* group = app.add_subcommand("component-group", "X^vee / beta(Y)");
    auto* integ = app.add_subcommand("integrality", "integrality test and minimal level");
    auto* sstar = app.add_subcommand("sigma-star", "the polytope Sigma*_l");
    auto* verify = app.add_subcommand("verify", "seeded property suites");
    for (auto* s : {voronoi, delaunay, fan, charts, strata, group, integ, sstar}) add_common(s);
    add_common(verify, false);
    strata->add_flag("--mumford", cfg.mumford, "Delaunay side (Mumford degeneration)");
    verify->add_option("--seed", cfg.seed, "random seed");

    CLI11_PARSE(app, argc, argv);
    for (auto* s : app.get_subcommands())
        cfg.level_given = s->count("--level") > 0;

    try {
        PolyOptions opt;
        opt.allow_high_dim_vertices = cfg.allow_high_dim;
        Level lev{cfg.level, cfg.half};
        auto* sub = app.get_subcommands().front();
        std::string cmd = sub->get_name();

        if (cmd == "verify") {
            auto r = run_verify(cfg.seed);
            emit(cfg, r.text());
            return r.ok() ? 0 : 5;
        }

        FCDatum d = read_datum(cfg.input);
        d.check_level(lev);
        if (cfg.format == "svg" && cmd != "voronoi") throw Error("BadInput", "svg output is only for voronoi");

        if (cmd == "voronoi") {
            if (cfg.format == "svg") {
                emit(cfg, voronoi_svg(d, lev, 2, opt));
                return 0;
            }
            Json j = header(cmd, d, lev);
            Json rel = Json::array();
            for (const auto& v : relevant_vectors(d, lev, opt)) rel.push_back(vec_json(v));
            j["relevant_vectors"] = rel;
            if (d.g > 6 && !cfg.allow_high_dim) {
                auto rep = is_integral(d, lev, opt);
                j["integrality"] = integrality_json(rep);
                j["note"] = "vertex enumeration skipped above dimension 6 (use --allow-high-dim)";
            } else {
                j["polytope"] = polytope_json(voronoi_polytope(d, lev, opt));
                auto rep = is_integral(d, lev, opt);
                j["integrality"] = integrality_json(rep);
                if (rep.integral) j["complex"] = complex_json(vor_complex(d, lev, opt));
            }
            emit(cfg, dump(j));
        } else if (cmd == "delaunay") {
            Json j = header(cmd, d, lev);
            j["cell"] = polytope_json(lattice_voronoi_cell(d, opt));
            j["complex"] = complex_json(delaunay_complex(d, opt));
            emit(cfg, dump(j));
        } else if (cmd == "fan") {
            auto f = build_fan(d, lev, opt);
            auto r = check_fan_over_S(f, d.g <= 2 ? 1 : 0, opt);
            Json j = header(cmd, d, lev);
            j["fan"] = fan_json(f);
            j["fan_over_S"] = {{"m0_in_dual", r.m0_in_dual},   {"trivial_on_xdual", r.trivial_on_xdual},
                               {"generates", r.generates},     {"common_faces", r.common_faces},
                               {"cone_criterion", r.cone_criterion},  {"failures", r.failures}};
            emit(cfg, dump(j));
        } else if (cmd == "charts") {
            auto cell = voronoi_polytope(d, lev, opt);
            Json j = header(cmd, d, lev);
            Json cs = Json::array();
            IVec zero(d.g, 0);
            for (const auto& v : cell.vertices) {
                auto ch = chart_ring(d, lev, {v}, zero, opt);
                cs.push_back(chart_json(ch));
            }
            j["vertex_charts"] = cs;
            j["torus_chart"] = chart_json(chart_ring(d, lev, cell.vertices, zero, opt));
            emit(cfg, dump(j));
        } else if (cmd == "strata") {
            auto r = cfg.mumford ? delaunay_stratification(d, opt) : stratification(d, lev, opt);
            Json j = header(cmd, d, lev);
            j["strata"] = strata_json(r);
            if (d.g == 2) {
                Json pj = Json::array();
                for (const auto& p : component_polygon_report(r))
                    pj.push_back({{"label", vec_json(p.label)}, {"vertices", p.vertices}, {"annotation", p.annotation}});
                j["polygons"] = pj;
            }
            if (cfg.format == "text") {
                std::ostringstream os;
                os << r.source << " components=" << r.components.size() << " group=" << r.group.name()
                   << " euler=" << r.euler << "\n";
                for (const auto& c : r.components) os << "  " << to_string(c.label) << " vertices=" << c.cell.vertices.size() << "\n";
                emit(cfg, os.str());
            } else {
                emit(cfg, dump(j));
            }
        } else if (cmd == "component-group") {
            auto g = component_group(d);
            if (cfg.format == "text")
                emit(cfg, g.name() + "\n");
            else
                emit(cfg, dump(group_json(g)));
        } else if (cmd == "integrality") {
            Json j = header(cmd, d, lev);
            if (cfg.level_given) {
                auto rep = is_integral(d, lev, opt);
                j["at_level"] = integrality_json(rep);
            }
            auto ml = minimal_level(d, cfg.cap, cfg.half, opt);
            j["l0"] = ml.ell0;
            j["denominator_lcm"] = ml.denominator_lcm;
            j["method"] = ml.method;
            j["cap"] = cfg.cap;
            if (cfg.format == "text")
                emit(cfg, "l0=" + std::to_string(ml.ell0) + "\n");
            else
                emit(cfg, dump(j));
            if (cfg.level_given && !j["at_level"]["integral"].get<bool>()) return 3;
        } else if (cmd == "sigma-star") {
            Json j = header(cmd, d, lev);
            j["sigma_star"] = polytope_json(sigma_star(d, lev, opt));
            emit(cfg, dump(j));
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
