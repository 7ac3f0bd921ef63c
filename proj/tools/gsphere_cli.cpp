// gsphere: command-line front end. Report keys are documented in docs/cli_schema.md.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gsphere/gsphere.hpp>

using nlohmann::json;
using namespace gsphere;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Vertex> parse_ids(const std::string& text, const char* flag) {
    std::vector<Vertex> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size() || v < 0 || v > 0xFFFFFFFFLL) throw std::invalid_argument(tok);
            out.push_back(static_cast<Vertex>(v));
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": bad vertex id '" + tok + "'");
        }
    }
    return out;
}

std::pair<Vertex, Vertex> parse_pair(const std::string& text, const char* flag) {
    auto ids = parse_ids(text, flag);
    if (ids.size() != 2) throw UsageError(std::string(flag) + " expects u,v");
    return {ids[0], ids[1]};
}

void emit(const json& j, const std::string& output) {
    if (output.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output);
    if (!out) throw FormatError("cannot write '" + output + "'");
    out << j.dump(2) << "\n";
}

json clique_list(const std::vector<CliqueDegree>& obs) {
    json out = json::array();
    for (const auto& o : obs) out.push_back({{"clique", o.clique}, {"degree", o.degree}});
    return out;
}

json verdict_json(const Classification& c, std::uint64_t budget) {
    return {{"kind", to_string(c.kind)},
            {"dimension", c.dimension},
            {"has_boundary", c.has_boundary},
            {"boundary", c.boundary.members()},
            {"answer", to_string(c.verdict.answer)},
            {"clause", c.verdict.clause},
            {"witness", c.verdict.witness},
            {"budget", budget},
            {"budget_spent", c.verdict.budget_spent}};
}

json assignment_json(const std::map<Vertex, int>& a) {
    json out = json::object();
    for (auto [v, c] : a) out[std::to_string(v)] = c;
    return out;
}

json record_json(const SurgeryRecord& r) {
    json j = {{"operation", r.operation}, {"edge", {r.edge.first, r.edge.second}}};
    if (r.new_vertex) j["new_vertex"] = *r.new_vertex;
    if (r.kept_vertex) j["kept_vertex"] = *r.kept_vertex;
    if (r.removed_vertex) j["removed_vertex"] = *r.removed_vertex;
    if (r.dimension >= 0) {
        j["dimension"] = r.dimension;
        json flips = json::array();
        for (const auto& f : r.parity_flips) {
            flips.push_back({{"clique", f.clique}, {"degree_before", f.degree_before}, {"degree_after", f.degree_after}});
        }
        j["parity_flips"] = flips;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string hex_hash(const Graph& g) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(CodeHash{}(canonical_form(g).code)));
    return buf;
}

/// Theorem-derived lower bound: a d-sphere with an odd (d-2)-simplex degree needs d+2 colors.
ChromaticOptions chromatic_options(const Classification& c, const std::vector<CliqueDegree>* obstructions) {
    ChromaticOptions o;
    if (c.kind == GraphKind::sphere && c.dimension >= 1 && obstructions && !obstructions->empty()) {
        o.lower_bound_hint = c.dimension + 2;
        o.hint_provenance = "sphere of dimension " + std::to_string(c.dimension) +
                            " with an odd-degree codimension-2 simplex is not (d+1)-colorable";
    }
    return o;
}

json chromatic_json(const ChromaticResult& r) {
    return {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}, {"provenance", r.provenance}};
}

json analyze(const NamedGraph& in, std::uint64_t budget) {
    const auto& g = in.graph;
    auto vols = volumes(g);
    auto betti = betti_report(g);
    auto cls = classify(g, budget);
    json report = {{"name", in.name},
                   {"canonical_hash", hex_hash(g)},
                   {"vertices", g.order()},
                   {"edges", g.size()},
                   {"volumes", vols},
                   {"euler_characteristic", euler_characteristic(vols)},
                   {"betti", betti.betti},
                   {"betti_modular_check", betti.modular_agrees},
                   {"recognition", verdict_json(cls, budget)},
                   {"eulerian_graph", is_eulerian_graph(g)}};
    std::vector<CliqueDegree> obs;
    bool have_obs = false;
    if (cls.kind == GraphKind::sphere && cls.dimension >= 1) {
        obs = eulerian_obstructions(g, cls.dimension);
        have_obs = true;
        report["eulerian_sphere"] = obs.empty();
        report["obstructions"] = clique_list(obs);
    } else {
        report["eulerian_sphere"] = nullptr;
        report["obstructions"] = json::array();
    }
    report["chromatic"] = chromatic_json(chromatic_number(g, chromatic_options(cls, have_obs ? &obs : nullptr)));
    auto gb = gauss_bonnet_total(g);
    std::int64_t k2 = 0;
    for (Vertex x : g.vertices()) k2 += second_order_curvature(g, x).value;
    report["curvature"] = {{"total", to_string(gb.total)},
                           {"euler_characteristic", gb.euler_characteristic},
                           {"gauss_bonnet", gb.matches},
                           {"second_order_total", k2}};
    return report;
}

// ---- spring layout for the geodesic picture ----

struct Point {
    double x = 0, y = 0;
};

std::map<Vertex, Point> spring_layout(const Graph& g, std::uint64_t seed) {
    Lcg64 rng(seed);
    const std::size_t n = g.order();
    std::vector<Point> pos(n), disp(n);
    for (auto& p : pos) {
        p.x = rng.unit();
        p.y = rng.unit();
    }
    const double k = n ? std::sqrt(1.0 / static_cast<double>(n)) : 1.0;
    double temp = 0.1;
    for (int iter = 0; iter < 300; ++iter) {
        for (auto& d : disp) d = {};
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
                double dist = std::max(std::hypot(dx, dy), 1e-6);
                double f = k * k / dist;
                disp[i].x += dx / dist * f;
                disp[i].y += dy / dist * f;
                disp[j].x -= dx / dist * f;
                disp[j].y -= dy / dist * f;
            }
        }
        for (auto [a, b] : g.edges()) {
            auto i = g.index_of(a), j = g.index_of(b);
            double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
            double dist = std::max(std::hypot(dx, dy), 1e-6);
            double f = dist * dist / k;
            disp[i].x -= dx / dist * f;
            disp[i].y -= dy / dist * f;
            disp[j].x += dx / dist * f;
            disp[j].y += dy / dist * f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double len = std::max(std::hypot(disp[i].x, disp[i].y), 1e-9);
            pos[i].x += disp[i].x / len * std::min(len, temp);
            pos[i].y += disp[i].y / len * std::min(len, temp);
        }
        temp *= 0.98;
    }
    double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
    for (auto& p : pos) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    std::map<Vertex, Point> out;
    for (std::size_t i = 0; i < n; ++i) {
        double sx = maxx > minx ? (pos[i].x - minx) / (maxx - minx) : 0.5;
        double sy = maxy > miny ? (pos[i].y - miny) / (maxy - miny) : 0.5;
        out[g.vertices()[i]] = {20 + 460 * sx, 20 + 460 * sy};
    }
    return out;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void write_svg(const std::string& path, const Graph& g, const std::vector<DirectedEdge>& path_edges, std::uint64_t seed) {
    auto pos = spring_layout(g, seed);
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
    out << "<rect width=\"500\" height=\"500\" fill=\"white\"/>\n";
    for (auto [a, b] : g.edges()) {
        out << "<line x1=\"" << fmt2(pos[a].x) << "\" y1=\"" << fmt2(pos[a].y) << "\" x2=\"" << fmt2(pos[b].x)
            << "\" y2=\"" << fmt2(pos[b].y) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    if (!path_edges.empty()) {
        out << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\" points=\"";
        out << fmt2(pos[path_edges.front().tail].x) << "," << fmt2(pos[path_edges.front().tail].y);
        for (const auto& e : path_edges) out << " " << fmt2(pos[e.head].x) << "," << fmt2(pos[e.head].y);
        out << "\"/>\n";
    }
    for (Vertex v : g.vertices()) {
        out << "<circle cx=\"" << fmt2(pos[v].x) << "\" cy=\"" << fmt2(pos[v].y) << "\" r=\"4\" fill=\"#2c3e50\"/>\n";
    }
    out << "</svg>\n";
}

ProjectiveStructure require_projective(const Graph& g) {
    auto p = projective_structure(g);
    if (!p.structure) {
        throw PreconditionError("graph is not projective: unit sphere of vertex " + std::to_string(*p.failing_vertex) +
                                " has no fixed-point-free involution");
    }
    return std::move(*p.structure);
}

Graph named_graph(const std::string& family, int n, int d) {
    auto f = parse_family(family);
    if (!f) throw UsageError("unknown family '" + family + "'");
    GeneratorSpec spec{*f, 0};
    switch (*f) {
        case Family::cycle:
        case Family::path:
        case Family::complete:
        case Family::wheel:
            if (n < 0) throw UsageError(family + " needs --n");
            spec.param = n;
            break;
        case Family::cross_polytope:
            if (d < 0) throw UsageError("cross_polytope needs --d");
            spec.param = d;
            break;
        default: break;
    }
    return generate(spec);
}

std::string graph_name(const std::string& family, int n, int d) {
    auto f = parse_family(family);
    if (!f) return family;
    switch (*f) {
        case Family::cycle:
        case Family::path:
        case Family::complete:
        case Family::wheel: return family + "_" + std::to_string(n);
        case Family::cross_polytope: return family + "_" + std::to_string(d);
        default: return family;
    }
}

RefineMode parse_mode(const std::string& m) {
    if (m == "single") return RefineMode::single;
    if (m == "paired") return RefineMode::paired;
    throw UsageError("--method must be single or paired");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gsphere: graph-theoretic spheres, coloring, surgery and geodesics"};
    app.require_subcommand(1);

    std::string output, file, method, family, subgraph, edge, start, svg;
    std::uint64_t seed = 1, budget = default_budget;
    int n = -1, d = -1, order = 1;
    std::size_t steps = 0, trials = 0;
    long long vertex = -1;
    bool candidates = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-o,--output", output, "Write the result here instead of stdout");
        sub->add_option("--budget", budget, "Node budget for recognition")->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen", "Generate a named graph");
    gen->add_option("family", family, "cycle|path|complete|wheel|octahedron|icosahedron|cross_polytope|six_hundred_cell|stellated_cube")
        ->required();
    gen->add_option("--n", n, "Size parameter");
    gen->add_option("--d", d, "Dimension parameter");
    gen->add_option("--seed", seed, "Accepted for uniformity; named graphs are fixed");
    add_common(gen);

    auto* ana = app.add_subcommand("analyze", "Full report on a graph file");
    ana->add_option("file", file)->required();
    add_common(ana);

    auto* col = app.add_subcommand("color", "Chain coloring or exact chromatic number");
    col->add_option("file", file)->required();
    col->add_option("--method", method, "chain|exact")->default_val("chain");
    col->add_option("--d", d, "Sphere dimension (default: clique dimension)");
    add_common(col);

    auto* ref = app.add_subcommand("refine", "Seeded random edge subdivisions");
    ref->add_option("file", file)->required();
    ref->add_option("--steps", steps)->required();
    ref->add_option("--seed", seed)->capture_default_str();
    ref->add_option("--method", method, "single|paired")->default_val("single");
    add_common(ref);

    auto* colp = app.add_subcommand("collapse", "Edge collapse, degree-4 collapse, or safe collapse candidates");
    colp->add_option("file", file)->required();
    colp->add_option("--edge", edge, "u,v");
    colp->add_option("--vertex", vertex, "Degree-4 vertex of a 2-sphere");
    colp->add_flag("--candidates", candidates, "List edges whose collapse stays geometric");
    colp->add_option("--d", d, "Dimension for --candidates");
    add_common(colp);

    auto* dua = app.add_subcommand("dual", "Complementary dual of a vertex set");
    dua->add_option("file", file)->required();
    dua->add_option("--subgraph", subgraph, "v1,v2,...")->required();
    add_common(dua);

    auto* geo = app.add_subcommand("geodesic", "Trace a geodesic of the projective flow");
    geo->add_option("file", file)->required();
    geo->add_option("--start", start, "u,v directed edge")->required();
    geo->add_option("--steps", steps)->required();
    geo->add_option("--svg", svg, "Also draw the trajectory");
    geo->add_option("--seed", seed, "Layout seed")->capture_default_str();
    add_common(geo);

    auto* cau = app.add_subcommand("caustic", "Primary caustic and exponential reach of a vertex");
    cau->add_option("file", file)->required();
    cau->add_option("--vertex", vertex)->required();
    add_common(cau);

    auto* cur = app.add_subcommand("curvature", "Curvature report");
    cur->add_option("file", file)->required();
    cur->add_option("--order", order, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
    add_common(cur);

    auto* scn = app.add_subcommand("scan", "Seeded search for Eulerian graphs that are not Eulerian spheres");
    scn->add_option("--family", family)->required();
    scn->add_option("--n", n);
    scn->add_option("--d", d);
    scn->add_option("--trials", trials)->required();
    scn->add_option("--seed", seed)->capture_default_str();
    scn->add_option("--steps", steps, "Subdivisions per trial")->default_val(5);
    scn->add_option("--method", method, "single|paired")->default_val("single");
    add_common(scn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            auto g = named_graph(family, n, d);
            auto name = graph_name(family, n, d);
            if (output.empty()) {
                std::cout << graph_to_json(g, name).dump(2) << "\n";
            } else {
                write_graph_file(output, g, name);
            }
        } else if (*ana) {
            emit(analyze(read_graph_file(file), budget), output);
        } else if (*col) {
            auto in = read_graph_file(file);
            const auto& g = in.graph;
            if (method == "chain") {
                int dim = d >= 0 ? d : clique_complex(g).dimension();
                auto r = chain_color(g, dim);
                json j = {{"method", "chain"},
                          {"dimension", dim},
                          {"outcome", to_string(r.outcome)},
                          {"colors", r.colors},
                          {"assignment", assignment_json(r.assignment)},
                          {"obstructions", clique_list(dim >= 1 ? eulerian_obstructions(g, dim) : std::vector<CliqueDegree>{})}};
                if (r.outcome != ColoringOutcome::colored) j["assignment"] = json::object();
                if (r.conflict) {
                    j["conflict"] = {{"from", r.conflict->from},
                                     {"to", r.conflict->to},
                                     {"vertex", r.conflict->vertex},
                                     {"existing", r.conflict->existing},
                                     {"forced", r.conflict->forced}};
                }
                emit(j, output);
            } else if (method == "exact") {
                auto cls = classify(g, budget);
                std::vector<CliqueDegree> obs;
                if (cls.kind == GraphKind::sphere && cls.dimension >= 1) obs = eulerian_obstructions(g, cls.dimension);
                auto r = chromatic_number(g, chromatic_options(cls, &obs));
                emit({{"method", "exact"},
                      {"outcome", "colored"},
                      {"colors", r.upper},
                      {"assignment", assignment_json(r.coloring)},
                      {"obstructions", clique_list(obs)},
                      {"chromatic", chromatic_json(r)}},
                     output);
            } else {
                throw UsageError("--method must be chain or exact");
            }
        } else if (*ref) {
            auto in = read_graph_file(file);
            RefineOptions o;
            o.mode = parse_mode(method);
            o.budget = budget;
            o.track_parity = true;
            auto r = random_refine(in.graph, steps, seed, o);
            json j = graph_to_json(r.graph, in.name.empty() ? "refined" : in.name + "_refined");
            json recs = json::array();
            for (const auto& rec : r.records) recs.push_back(record_json(rec));
            j["seed"] = seed;
            j["records"] = recs;
            emit(j, output);
        } else if (*colp) {
            auto in = read_graph_file(file);
            const auto& g = in.graph;
            if (candidates) {
                int dim = d >= 0 ? d : clique_complex(g).dimension();
                json list = json::array();
                for (const auto& c : check_collapses(g, dim, budget)) {
                    list.push_back({{"edge", {c.edge.first, c.edge.second}}, {"stays_geometric", to_string(c.stays_geometric)}});
                }
                emit({{"dimension", dim}, {"collapses", list}, {"irreducible", to_string(is_irreducible(g, dim, budget))}},
                     output);
            } else if (vertex >= 0) {
                auto out = degree4_collapse(g, static_cast<Vertex>(vertex), budget);
                json j = graph_to_json(out, in.name.empty() ? "collapsed" : in.name + "_collapsed");
                j["removed_vertex"] = vertex;
                emit(j, output);
            } else if (!edge.empty()) {
                auto [a, b] = parse_pair(edge, "--edge");
                auto r = edge_collapse(g, make_edge(a, b));
                json j = graph_to_json(r.graph, in.name.empty() ? "collapsed" : in.name + "_collapsed");
                j["record"] = record_json(r.record);
                auto cls = classify(r.graph, budget);
                j["classification"] = verdict_json(cls, budget);
                emit(j, output);
            } else {
                throw UsageError("collapse needs --edge, --vertex or --candidates");
            }
        } else if (*dua) {
            auto in = read_graph_file(file);
            VertexSubset h(parse_ids(subgraph, "--subgraph"));
            auto r = complementary_dual(in.graph, h);
            json j = graph_to_json(r.dual, "dual");
            j["source"] = h.members();
            j["classification"] = verdict_json(classify(r.dual, budget), budget);
            emit(j, output);
        } else if (*geo) {
            auto in = read_graph_file(file);
            auto p = require_projective(in.graph);
            auto [u, v] = parse_pair(start, "--start");
            auto t = trajectory(p, {u, v}, steps);
            json path = json::array();
            for (const auto& e : t.edges) path.push_back({e.tail, e.head});
            json j = {{"start", {u, v}}, {"steps", steps}, {"trajectory", path}, {"period", t.period}};
            if (!svg.empty()) {
                write_svg(svg, in.graph, std::vector<DirectedEdge>(t.edges.begin() + 1, t.edges.end()), seed);
                j["svg"] = svg;
            }
            emit(j, output);
        } else if (*cau) {
            auto in = read_graph_file(file);
            auto p = require_projective(in.graph);
            auto x = static_cast<Vertex>(vertex);
            emit({{"vertex", x},
                  {"caustic", primary_caustic(p, x).members()},
                  {"exponential_reach", exponential_reach(p, x).members()},
                  {"surjective", exponential_reach(p, x).size() == in.graph.order()}},
                 output);
        } else if (*cur) {
            auto in = read_graph_file(file);
            auto r = curvature_report(in.graph);
            json j = {{"order", order}, {"euler_characteristic", r.euler_characteristic}};
            if (order == 1) {
                json per = json::object();
                for (const auto& [v, k] : r.curvature) per[std::to_string(v)] = to_string(k);
                j["curvature"] = per;
                j["total"] = to_string(r.total);
                j["gauss_bonnet"] = r.total == Rational(r.euler_characteristic);
            } else {
                json per = json::object();
                for (const auto& [v, k] : r.second_order) per[std::to_string(v)] = k;
                j["second_order"] = per;
                j["total"] = r.second_order_total;
                j["non_circle"] = r.non_circle;
            }
            emit(j, output);
        } else if (*scn) {
            auto base = named_graph(family, n, d);
            auto mode = parse_mode(method);
            auto base_cls = classify(base, budget);
            if (base_cls.kind != GraphKind::sphere) throw PreconditionError("scan: base graph is not a sphere");
            const int dim = base_cls.dimension;
            json results = json::array();
            json divergent = json::array();
            for (std::size_t i = 0; i < trials; ++i) {
                auto s = derive_seed(seed, i);
                RefineOptions o;
                o.mode = mode;
                o.verify_input = false;
                auto g = random_refine(base, steps, s, o).graph;
                auto obs = eulerian_obstructions(g, dim);
                auto chain = chain_color(g, dim);
                bool eg = is_eulerian_graph(g);
                Classification sphere_cls;
                sphere_cls.kind = GraphKind::sphere;
                sphere_cls.dimension = dim;
                auto chrom = chromatic_number(g, chromatic_options(sphere_cls, &obs));
                bool diverge = eg != obs.empty();
                results.push_back({{"trial", i},
                                   {"seed", s},
                                   {"vertices", g.order()},
                                   {"edges", g.size()},
                                   {"eulerian_graph", eg},
                                   {"eulerian_sphere", obs.empty()},
                                   {"obstructions", obs.size()},
                                   {"chain_outcome", to_string(chain.outcome)},
                                   {"chain_colors", chain.colors},
                                   {"chromatic", {chrom.lower, chrom.upper}}});
                if (diverge) divergent.push_back(i);
            }
            emit({{"family", graph_name(family, n, d)},
                  {"dimension", dim},
                  {"seed", seed},
                  {"trials", trials},
                  {"steps", steps},
                  {"method", method},
                  {"results", results},
                  {"divergent", divergent}},
                 output);
        }
    } catch (const UsageError& e) {
        std::cerr << json{{"error", {{"kind", "usage_error"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}
