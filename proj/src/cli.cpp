#include "poinc/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "poinc/error.hpp"
#include "poinc/format.hpp"
#include "poinc/intertwiner.hpp"
#include "poinc/kirillov.hpp"
#include "poinc/rep_objects.hpp"
#include "poinc/state_sum.hpp"
#include "poinc/two_intertwiner.hpp"

namespace poinc {

namespace {
using json = nlohmann::ordered_json;

/// Everything one command produces.
struct Run
{
    std::vector<std::string> report;
    std::vector<std::pair<std::string, std::string>> results;
    json params = json::object();
    std::uint64_t seed{0};
    std::vector<std::pair<std::string, std::string>> extra_files;  //!< name, contents

    void line(const std::string& s) { report.push_back(s); }
    void result(const std::string& k, const std::string& v) { results.emplace_back(k, v); }
    void result(const std::string& k, double v) { result(k, format_number(v)); }
};

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void write_text(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw Error("cannot write " + p.string());
    f << text;
}

/// "future:1.5", "past:2", "spacelike:1", "nullfuture", "zero"
MinkowskiOrbit parse_orbit(const std::string& text)
{
    auto colon = text.find(':');
    auto cls = parse_causal_class(text.substr(0, colon));
    double r = 0;
    if (colon != std::string::npos)
        r = parse_number(text.substr(colon + 1));
    return MinkowskiOrbit::make(cls, r);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? sep : "") + parts[i];
    return s;
}

std::string range_text(const std::optional<RadiusRange>& r)
{
    return r ? to_string(*r) : "none";
}

//---------------------------------------------------------------------------//
// orbit
//---------------------------------------------------------------------------//
struct OrbitArgs
{
    double j{0.5}, l{0.5};
    std::size_t nodes{10000};
    std::string vector{"1,0,0,0"};
    std::string o1{"future:1"}, o2{"future:1"};
    std::size_t samples{100000};
    std::size_t points{100}, elements{100};
};

void run_su2_tensor(const OrbitArgs& a, Run& run)
{
    run.params["j"] = a.j;
    run.params["l"] = a.l;
    std::vector<std::string> shells;
    for (auto const& s : su2_tensor_decompose(a.j, a.l))
        shells.push_back(format_number(s.j));
    run.line(join(shells, " "));
    run.result("shells", join(shells, " "));
}

void run_flux(const OrbitArgs& a, Run& run)
{
    run.params["j"] = a.j;
    run.params["nodes"] = a.nodes;
    auto f = su2_flux(a.j, a.nodes);
    auto half = su2_flux(0.5, a.nodes);
    double ratio = f.flux / half.flux;
    run.line("flux(" + format_number(a.j) + ") = " + format_number(f.flux) + " on "
             + std::to_string(f.nodes) + " nodes");
    run.line("flux / flux(1/2) = " + format_number(ratio) + ", converged "
             + (f.converged ? "yes" : "no"));
    run.result("flux", f.flux);
    run.result("coarse_flux", f.coarse_flux);
    run.result("ratio_to_half", ratio);
    run.result("converged", f.converged ? "true" : "false");
}

void run_classify(const OrbitArgs& a, Run& run)
{
    run.params["vector"] = a.vector;
    auto v = parse_four_vector(a.vector);
    auto o = orbit_of(v);
    run.line(to_string(v) + " lies on " + to_string(o));
    run.result("class", to_string(o.cls));
    run.result("radius", o.radius);
    run.result("interval", interval(v));
}

void run_sum_range(const OrbitArgs& a, Run& run)
{
    run.params["o1"] = a.o1;
    run.params["o2"] = a.o2;
    run.params["samples"] = a.samples;
    auto o1 = parse_orbit(a.o1);
    auto o2 = parse_orbit(a.o2);
    auto s = orbit_sum_range(o1, o2, a.samples, run.seed);
    run.line(to_string(o1) + " + " + to_string(o2) + " over " + std::to_string(s.samples)
             + " samples");
    for (auto const& [cls, r] : s.by_class)
    {
        run.line("  " + to_string(cls) + ": " + std::to_string(r.count) + " samples, radius ["
                 + format_number(r.min_radius) + ", " + format_number(r.max_radius) + "]");
        run.result("count_" + to_string(cls), std::to_string(r.count));
        run.result("min_radius_" + to_string(cls), r.min_radius);
    }
    try
    {
        for (auto const& [cls, r] : timelike_sum_ranges(o1, o2))
        {
            run.line("  closed form " + to_string(cls) + ": " + to_string(r));
            run.result("closed_form_" + to_string(cls), to_string(r));
        }
    }
    catch (const UnsupportedError& e)
    {
        run.line(std::string("  closed form unavailable: ") + e.what());
    }
}

void run_sl2c_drift(const OrbitArgs& a, Run& run)
{
    run.params["points"] = a.points;
    run.params["elements"] = a.elements;
    double worst = 0;
    for (std::size_t p = 0; p < a.points; ++p)
    {
        CounterRng prng(run.seed, p);
        Eigen::Matrix<double, 6, 1> x;
        for (int k = 0; k < 6; ++k)
            x[k] = prng.uniform(-2, 2);
        auto before = orbit_invariants(x);
        double scale = std::max(1.0, std::hypot(before.i1, before.i2));
        for (std::size_t g = 0; g < a.elements; ++g)
        {
            CounterRng grng(derive_seed(run.seed, p + 1), g);
            auto after = orbit_invariants(act_real(random_sl2c(grng), x));
            worst = std::max({worst, std::abs(after.i1 - before.i1) / scale,
                              std::abs(after.i2 - before.i2) / scale});
        }
    }
    run.line("max relative invariant drift " + format_number(worst));
    run.result("max_drift", worst);
}

//---------------------------------------------------------------------------//
// rep
//---------------------------------------------------------------------------//
struct RepArgs
{
    std::string o1{"future:1"}, o2{"future:1"};
    double r1{1}, r2{1}, r{3};
    std::size_t samples{64};
    std::string a{"future:3"}, b{"future:1"}, c{"future:2"};
    std::string orbit{"future:1"}, subgroup{"SU2"};
};

void run_tensor(const RepArgs& a, Run& run)
{
    run.params["o1"] = a.o1;
    run.params["o2"] = a.o2;
    auto e1 = elementary(parse_orbit(a.o1));
    auto e2 = elementary(parse_orbit(a.o2));
    TensorOptions opts;
    opts.seed = run.seed;
    auto res = elementary_tensor(e1, e2, opts);
    if (auto const* d = std::get_if<DirectIntegralDecomposition>(&res))
    {
        run.line(to_string(e1) + " (x) " + to_string(e2) + " = " + to_string(*d));
        run.result("decomposition", to_string(*d));
        run.result("base_range", to_string(d->base_range()));
    }
    else
    {
        auto const& u = std::get<UnsupportedTensor>(res);
        run.line("unsupported: " + u.reason);
        run.result("unsupported", u.reason);
        run.result("histogram_min_radius", u.histogram.min_radius);
        run.result("histogram_max_radius", u.histogram.max_radius);
    }
}

void run_triangle(const RepArgs& a, Run& run)
{
    run.params["r1"] = a.r1;
    run.params["r2"] = a.r2;
    run.params["r"] = a.r;
    run.params["samples"] = a.samples;
    auto f = triangle_fiber(a.r1, a.r2, a.r, a.samples, run.seed);
    run.line("triangle fiber (" + format_number(a.r1) + ", " + format_number(a.r2) + "; "
             + format_number(a.r) + "): " + to_string(f.status));
    run.result("status", to_string(f.status));
    if (f.status != FiberStatus::Empty)
    {
        run.line("  t = " + format_number(f.time_component) + ", spatial radius "
                 + format_number(f.spatial_radius) + ", tangent rank "
                 + std::to_string(f.tangent_rank));
        run.result("time_component", f.time_component);
        run.result("spatial_radius", f.spatial_radius);
        run.result("tangent_rank", std::to_string(f.tangent_rank));
        run.result("transitive", f.transitive ? "true" : "false");
        run.result("max_residual", f.max_residual);
    }
}

void run_hom(const RepArgs& a, Run& run)
{
    run.params["a"] = a.a;
    run.params["b"] = a.b;
    run.params["c"] = a.c;
    auto h = hom_decomposition(elementary(parse_orbit(a.a)), elementary(parse_orbit(a.b)),
                               elementary(parse_orbit(a.c)));
    run.line("Hom(A, B (x) C): " + h.tensor_side.description + ", radii "
             + range_text(h.tensor_side.range));
    run.line("Hom(A (x) B*, C): " + h.dual_side.description + ", radii "
             + range_text(h.dual_side.range));
    run.line(std::string("consistent: ") + (h.consistent ? "yes" : "no") + ", range gap "
             + format_number(h.range_gap));
    run.result("tensor_range", range_text(h.tensor_side.range));
    run.result("dual_range", range_text(h.dual_side.range));
    run.result("tensor_nonempty", h.tensor_side.nonempty ? "true" : "false");
    run.result("structure_dim", std::to_string(h.tensor_side.structure_dim));
    run.result("consistent", h.consistent ? "true" : "false");
    run.result("range_gap", h.range_gap);
}

void run_rep_classify(const RepArgs& a, Run& run)
{
    run.params["orbit"] = a.orbit;
    run.params["subgroup"] = a.subgroup;
    auto i = make_irrep(parse_orbit(a.orbit), parse_stabilizer(a.subgroup));
    run.line(to_string(i) + ": " + to_string(i.kind) + ", fiber " + to_string(i.fiber));
    run.result("irrep", to_string(i));
    run.result("kind", to_string(i.kind));
    run.result("fiber", to_string(i.fiber));
    run.result("fiber_dim", std::to_string(i.fiber.dim));
}

//---------------------------------------------------------------------------//
// intw
//---------------------------------------------------------------------------//
struct IntwArgs
{
    std::string group{"SU2"}, h1{"U1"}, h2{"U1"};
    std::string irrep{"future:1"};
    std::size_t samples{400};
    double r{1}, c1{1}, c2{1}, max_rapidity{2};
    std::size_t rapidity_cells{40}, sphere_nodes{64};
};

MinkowskiOrbit base_for(const StabilizerGroup& g)
{
    switch (g.kind)
    {
        case GroupKind::SU2: return MinkowskiOrbit::future(1);
        case GroupKind::SO21: return MinkowskiOrbit::make(CausalClass::Spacelike, 1);
        case GroupKind::E2: return MinkowskiOrbit::make(CausalClass::NullFuture, 0);
        case GroupKind::SL2C: return MinkowskiOrbit::zero();
        default: throw DomainError(to_string(g) + " is not an orbit stabilizer");
    }
}

void run_bridge(const IntwArgs& a, Run& run)
{
    run.params["group"] = a.group;
    run.params["h1"] = a.h1;
    run.params["h2"] = a.h2;
    auto g = parse_stabilizer(a.group);
    auto b = bridge(g, parse_stabilizer(a.h1), parse_stabilizer(a.h2));
    int numeric = numerical_bridge_dimension(base_for(g), b.h1, b.h2, run.seed);
    run.line(to_string(g) + " / (" + to_string(b.h1) + " n " + to_string(b.h2) + ") = "
             + to_string(g) + " / " + to_string(b.intersection) + ", dim "
             + std::to_string(b.dim) + " (tangent rank " + std::to_string(numeric) + ")");
    run.result("intersection", to_string(b.intersection));
    run.result("dim", std::to_string(b.dim));
    run.result("tangent_rank", std::to_string(numeric));
}

void run_cocycle_dim(const IntwArgs& a, Run& run)
{
    run.params["irrep"] = a.irrep;
    run.params["samples"] = a.samples;
    auto e = elementary(parse_orbit(a.irrep));
    auto rep = elementary_self_intertwiners(e, a.samples, run.seed);
    run.line("invariant fields on " + to_string(e.base) + ": dimension "
             + std::to_string(rep.solution_dim) + ", variation " + format_number(rep.variation));
    run.line("constant n = 1: cocycle residual " + format_number(rep.constant_check.max_residual));
    run.result("solution_dim", std::to_string(rep.solution_dim));
    run.result("variation", rep.variation);
    run.result("constant_residual", rep.constant_check.max_residual);
}

void run_convolve(const IntwArgs& a, Run& run)
{
    run.params["r"] = a.r;
    run.params["c1"] = a.c1;
    run.params["c2"] = a.c2;
    run.params["rapidity_cells"] = a.rapidity_cells;
    run.params["sphere_nodes"] = a.sphere_nodes;
    run.params["max_rapidity"] = a.max_rapidity;
    auto grid = std::make_shared<const QuadratureGrid>(
        hyperboloid_grid(a.r, a.rapidity_cells, a.sphere_nodes, a.max_rapidity));
    auto h = compose_2_horizontal(constant_field(grid, a.c1), constant_field(grid, a.c2));
    double exact = hyperboloid_window_volume(a.r, a.max_rapidity);
    run.line("convolution " + format_number(h.convolution) + " over window volume "
             + format_number(h.window_volume) + " (exact " + format_number(exact) + ")");
    run.result("convolution", h.convolution);
    run.result("window_volume", h.window_volume);
    run.result("exact_window_volume", exact);
    std::ostringstream field;
    field << "node,weight,value\n";
    for (std::size_t i = 0; i < grid->size(); ++i)
        field << i << "," << format_number(grid->weights[i]) << ","
              << format_number(h.field.values[static_cast<Eigen::Index>(i)]) << "\n";
    run.extra_files.emplace_back("field.csv", field.str());
}

//---------------------------------------------------------------------------//
// statesum
//---------------------------------------------------------------------------//
struct StateSumArgs
{
    std::string complex, labels, config;
    std::size_t trials{20};
    std::string resolutions{"64,256,1024,4096"};
};

void run_eval(const StateSumArgs& a, Run& run, bool seed_given)
{
    auto t = load_triangulation_file(a.complex);
    auto l = load_labelling_file(a.labels);
    auto cfg = a.config.empty() ? AmplitudeConfig{} : load_amplitude_config_file(a.config);
    if (seed_given)
        cfg.seed = run.seed;
    run.seed = cfg.seed;
    run.params["complex"] = a.complex;
    run.params["labels"] = a.labels;
    run.params["config"] = a.config;
    for (auto const& [k, v] : describe(cfg))
        run.params["amplitude"][k] = v;

    auto z = evaluate_Z(t, l, cfg);
    run.line("complex: " + to_string(t));
    run.line("cutoff " + format_number(z.cutoff) + ", integrator "
             + (cfg.integrator == Integrator::Grid
                    ? "grid, resolution " + std::to_string(cfg.resolution)
                    : "monte_carlo, " + std::to_string(cfg.samples) + " samples"));
    run.line("Z = " + format_number(z.value)
             + (cfg.integrator == Integrator::Grid ? ""
                                                   : " +- " + format_number(z.standard_error)));
    run.result("Z", z.value);
    run.result("standard_error", z.standard_error);
    run.result("cutoff", z.cutoff);
    run.result("evaluations", std::to_string(z.evaluations));
    run.result("admissible", std::to_string(z.admissible));
    run.result("fivej_evaluations", std::to_string(z.fivej_evaluations));
    run.result("canonical", z.canonical ? "true" : "false");
}

void run_sphericity(const StateSumArgs& a, Run& run)
{
    auto t = load_triangulation_file(a.complex);
    auto l = load_labelling_file(a.labels);
    std::vector<std::size_t> res;
    for (auto const& s : split_list(a.resolutions))
    {
        double v = parse_number(s);
        if (!(v >= 1) || v != std::floor(v))
            throw DomainError("resolutions must be positive integers");
        res.push_back(static_cast<std::size_t>(v));
    }
    run.params["complex"] = a.complex;
    run.params["labels"] = a.labels;
    run.params["trials"] = a.trials;
    run.params["resolutions"] = a.resolutions;
    auto rep = sphericity_check(t, l, a.trials, run.seed, res);
    for (std::size_t i = 0; i < res.size(); ++i)
    {
        run.line(std::to_string(res[i]) + " nodes: max residual "
                 + format_number(rep.residual_by_resolution[i]));
        run.result("residual_" + std::to_string(res[i]), rep.residual_by_resolution[i]);
    }
    run.line(std::string("monotone: ") + (rep.monotone ? "yes" : "no"));
    run.result("monotone", rep.monotone ? "true" : "false");
}

void run_admissible(const StateSumArgs& a, Run& run)
{
    auto t = load_triangulation_file(a.complex);
    auto l = load_labelling_file(a.labels);
    run.params["complex"] = a.complex;
    run.params["labels"] = a.labels;
    auto rep = admissible(t, l);
    for (auto const& c : rep.triangles)
        run.line("{" + std::to_string(c.triangle[0]) + " " + std::to_string(c.triangle[1]) + " "
                 + std::to_string(c.triangle[2]) + "} (" + format_number(c.colors[0]) + ", "
                 + format_number(c.colors[1]) + ", " + format_number(c.colors[2])
                 + "): " + to_string(c.status));
    run.line(std::string("admissible: ") + (rep.pass ? "yes" : "no"));
    run.result("admissible", rep.pass ? "true" : "false");
    run.result("collinear", std::to_string(rep.collinear));
}

//---------------------------------------------------------------------------//
void emit(const Run& run,
          const std::vector<std::string>& args,
          const std::string& out_dir,
          double seconds,
          std::ostream& out)
{
    for (auto const& l : run.report)
        out << l << "\n";

    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    std::string report;
    for (auto const& l : run.report)
        report += l + "\n";
    write_text(dir / "report.txt", report);

    std::string csv = "key,value\n";
    for (auto const& [k, v] : run.results)
        csv += csv_cell(k) + "," + csv_cell(v) + "\n";
    write_text(dir / "results.csv", csv);

    json files = json::array({"report.txt", "results.csv"});
    for (auto const& [name, text] : run.extra_files)
    {
        write_text(dir / name, text);
        files.push_back(name);
    }

    json m;
    m["command"] = args;
    m["parameters"] = run.params;
    m["seed"] = run.seed;
    m["library_version"] = library_version;
    m["wall_time_seconds"] = seconds;
    m["outputs"] = files;
    write_text(dir / "manifest.json", m.dump(2) + "\n");
}

std::vector<std::string> replay_args(const std::string& manifest, const std::string& out_dir)
{
    std::ifstream f(manifest);
    if (!f)
        throw Error("cannot open " + manifest);
    json m = json::parse(f);
    std::vector<std::string> original = m.at("command").get<std::vector<std::string>>();
    std::vector<std::string> args;
    for (std::size_t i = 0; i < original.size(); ++i)
    {
        if (original[i] == "--out-dir")
        {
            ++i;
            continue;
        }
        if (original[i].rfind("--out-dir=", 0) == 0)
            continue;
        args.push_back(original[i]);
    }
    if (!args.empty() && args.front() == "replay")
        throw DomainError("manifest records a replay");
    args.push_back("--out-dir");
    args.push_back(out_dir);
    return args;
}
}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Representations of the Poincare 2-group", "poinc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(library_version));

    std::uint64_t seed = 0;
    std::string out_dir = ".";
    auto* seed_opt = app.add_option("--seed", seed, "Random seed");
    app.add_option("--out-dir", out_dir, "Directory for report, CSV and manifest");

    std::function<void(Run&)> action;

    // orbit
    OrbitArgs oa;
    auto* orbit = app.add_subcommand("orbit", "Orbits and orbit-method checks");
    orbit->require_subcommand(1);
    auto* su2 = orbit->add_subcommand("su2-tensor", "Shells of an SU(2) tensor product");
    su2->add_option("--j", oa.j)->required();
    su2->add_option("--l", oa.l)->required();
    su2->callback([&] { action = [&](Run& r) { run_su2_tensor(oa, r); }; });
    auto* flux = orbit->add_subcommand("flux", "Symplectic flux of an SU(2) orbit");
    flux->add_option("--j", oa.j)->required();
    flux->add_option("--nodes", oa.nodes);
    flux->callback([&] { action = [&](Run& r) { run_flux(oa, r); }; });
    auto* cls = orbit->add_subcommand("classify", "Orbit of a four-vector");
    cls->add_option("--vector", oa.vector, "t,x,y,z")->required();
    cls->callback([&] { action = [&](Run& r) { run_classify(oa, r); }; });
    auto* sum = orbit->add_subcommand("sum-range", "Sampled and closed-form orbit sums");
    sum->add_option("--o1", oa.o1)->required();
    sum->add_option("--o2", oa.o2)->required();
    sum->add_option("--samples", oa.samples);
    sum->callback([&] { action = [&](Run& r) { run_sum_range(oa, r); }; });
    auto* drift = orbit->add_subcommand("sl2c-drift", "Invariant drift under SL(2,C)");
    drift->add_option("--points", oa.points);
    drift->add_option("--elements", oa.elements);
    drift->callback([&] { action = [&](Run& r) { run_sl2c_drift(oa, r); }; });

    // rep
    RepArgs ra;
    auto* rep = app.add_subcommand("rep", "Irreps, tensor products and Hom spaces");
    rep->require_subcommand(1);
    auto* tensor = rep->add_subcommand("tensor", "Tensor product of elementary irreps");
    tensor->add_option("--o1", ra.o1)->required();
    tensor->add_option("--o2", ra.o2)->required();
    tensor->callback([&] { action = [&](Run& r) { run_tensor(ra, r); }; });
    auto* tri = rep->add_subcommand("triangle", "Triangle fiber");
    tri->add_option("--r1", ra.r1)->required();
    tri->add_option("--r2", ra.r2)->required();
    tri->add_option("--r", ra.r)->required();
    tri->add_option("--samples", ra.samples);
    tri->callback([&] { action = [&](Run& r) { run_triangle(ra, r); }; });
    auto* hom = rep->add_subcommand("hom", "Hom(A, B (x) C) against Hom(A (x) B*, C)");
    hom->add_option("--a", ra.a)->required();
    hom->add_option("--b", ra.b)->required();
    hom->add_option("--c", ra.c)->required();
    hom->callback([&] { action = [&](Run& r) { run_hom(ra, r); }; });
    auto* rcls = rep->add_subcommand("classify", "Kind and fiber of an irrep");
    rcls->add_option("--orbit", ra.orbit)->required();
    rcls->add_option("--subgroup", ra.subgroup)->required();
    rcls->callback([&] { action = [&](Run& r) { run_rep_classify(ra, r); }; });

    // intw
    IntwArgs ia;
    auto* intw = app.add_subcommand("intw", "Intertwiners");
    intw->require_subcommand(1);
    auto* br = intw->add_subcommand("bridge", "Bridge G/(H1 n H2)");
    br->add_option("--group", ia.group)->required();
    br->add_option("--h1", ia.h1)->required();
    br->add_option("--h2", ia.h2)->required();
    br->callback([&] { action = [&](Run& r) { run_bridge(ia, r); }; });
    auto* coc = intw->add_subcommand("cocycle-dim", "Invariant fields on an elementary orbit");
    coc->add_option("--irrep", ia.irrep, "orbit of the elementary irrep")->required();
    coc->add_option("--samples", ia.samples);
    coc->callback([&] { action = [&](Run& r) { run_cocycle_dim(ia, r); }; });
    auto* conv = intw->add_subcommand("convolve", "Horizontal composite of two constants");
    conv->add_option("--r", ia.r);
    conv->add_option("--c1", ia.c1);
    conv->add_option("--c2", ia.c2);
    conv->add_option("--rapidity-cells", ia.rapidity_cells);
    conv->add_option("--sphere-nodes", ia.sphere_nodes);
    conv->add_option("--max-rapidity", ia.max_rapidity);
    conv->callback([&] { action = [&](Run& r) { run_convolve(ia, r); }; });

    // statesum
    StateSumArgs sa;
    auto* ss = app.add_subcommand("statesum", "Regularized state sum");
    ss->require_subcommand(1);
    auto* ev = ss->add_subcommand("eval", "Evaluate Z");
    ev->add_option("--complex", sa.complex)->required();
    ev->add_option("--labels", sa.labels)->required();
    ev->add_option("--config", sa.config);
    ev->callback([&] {
        action = [&](Run& r) { run_eval(sa, r, seed_opt->count() > 0); };
    });
    auto* sph = ss->add_subcommand("sphericity", "Plus and minus 5j paths");
    sph->add_option("--complex", sa.complex)->required();
    sph->add_option("--labels", sa.labels)->required();
    sph->add_option("--trials", sa.trials);
    sph->add_option("--resolutions", sa.resolutions);
    sph->callback([&] { action = [&](Run& r) { run_sphericity(sa, r); }; });
    auto* adm = ss->add_subcommand("admissible", "Triangle conditions of a labelling");
    adm->add_option("--complex", sa.complex)->required();
    adm->add_option("--labels", sa.labels)->required();
    adm->callback([&] { action = [&](Run& r) { run_admissible(sa, r); }; });

    // replay
    std::string manifest;
    auto* rp = app.add_subcommand("replay", "Rerun the command recorded in a manifest");
    rp->add_option("--manifest", manifest)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::CallForVersion&)
    {
        out << library_version << "\n";
        return exit_ok;
    }
    catch (const CLI::ParseError& e)
    {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try
    {
        if (rp->parsed())
            return dispatch(replay_args(manifest, out_dir), out, err);
        if (!action)
        {
            err << "usage error: no command given\n";
            return exit_usage;
        }
        Run run;
        run.seed = seed;
        auto start = std::chrono::steady_clock::now();
        action(run);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(run, args, out_dir, seconds, out);
        return exit_ok;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_computation;
    }
}

}  // namespace poinc
