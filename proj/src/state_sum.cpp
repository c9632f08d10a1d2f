#include "poinc/state_sum.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "poinc/error.hpp"
#include "poinc/format.hpp"
#include "poinc/random.hpp"
#include "poinc/sphere.hpp"

namespace poinc {

//---------------------------------------------------------------------------//
// Fields
//---------------------------------------------------------------------------//
namespace {
struct Monomial
{
    int a, b, c;
};

const std::array<Monomial, 19>& monomial_table()
{
    static const std::array<Monomial, 19> table = [] {
        std::array<Monomial, 19> m{};
        std::size_t k = 0;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for (int c = 0; c <= 3; ++c)
                    if (a + b + c > 0 && a + b + c <= 3)
                        m[k++] = {a, b, c};
        return m;
    }();
    return table;
}
}  // namespace

double SpherePolynomial::operator()(const Eigen::Vector3d& n) const
{
    std::array<std::array<double, 4>, 3> pw{};
    for (int i = 0; i < 3; ++i)
    {
        pw[i][0] = 1;
        for (int k = 1; k <= 3; ++k)
            pw[i][k] = pw[i][k - 1] * n[i];
    }
    double v = constant;
    auto const& mons = monomial_table();
    for (std::size_t k = 0; k < mons.size(); ++k)
        if (coeffs[k] != 0)
            v += coeffs[k] * pw[0][mons[k].a] * pw[1][mons[k].b] * pw[2][mons[k].c];
    return v;
}

SpherePolynomial random_sphere_polynomial(std::uint64_t seed, double amplitude)
{
    CounterRng rng(seed, 0);
    SpherePolynomial p;
    double s = amplitude / std::sqrt(19.0);
    for (auto& c : p.coeffs)
        c = s * rng.normal();
    return p;
}

TetraField TetraField::constant(double c)
{
    TetraField f;
    f.a[0].constant = c;
    f.b[0].constant = 1;
    f.rank = 1;
    return f;
}

TetraField TetraField::random(std::uint64_t seed, double amplitude)
{
    TetraField f;
    for (std::uint64_t k = 0; k < 2; ++k)
    {
        f.a[k] = random_sphere_polynomial(derive_seed(seed, 2 * k), amplitude);
        f.b[k] = random_sphere_polynomial(derive_seed(seed, 2 * k + 1), amplitude);
    }
    f.rank = 2;
    return f;
}

//---------------------------------------------------------------------------//
// Labellings
//---------------------------------------------------------------------------//
namespace {
std::vector<std::string> words(const std::string& raw)
{
    std::istringstream in(trim(raw.substr(0, raw.find('#'))));
    std::vector<std::string> tok;
    for (std::string w; in >> w;)
        tok.push_back(w);
    return tok;
}

template <typename T>
T parse_integer(const std::string& s, std::size_t line, const char* what)
{
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + s + "'");
    return v;
}

double parse_real(const std::string& s, std::size_t line)
{
    try
    {
        return parse_number(s);
    }
    catch (const DomainError&)
    {
        throw ParseError(line, "expected a number, got '" + s + "'");
    }
}

template <std::size_t N>
std::array<int, N> parse_face(const std::vector<std::string>& tok, std::size_t line)
{
    std::array<int, N> f{};
    for (std::size_t i = 0; i < N; ++i)
        f[i] = parse_integer<int>(tok[i + 1], line, "a vertex label");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw ParseError(line, "repeated vertex");
    return f;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

template <std::size_t N>
std::string face_text(const std::array<int, N>& f)
{
    std::string s = "{";
    for (std::size_t i = 0; i < N; ++i)
        s += (i ? " " : "") + std::to_string(f[i]);
    return s + "}";
}
}  // namespace

Labelling parse_labelling(std::string_view text)
{
    Labelling l;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw))
    {
        ++line;
        auto tok = words(raw);
        if (tok.empty())
            continue;
        if (tok[0] == "edge")
        {
            if (tok.size() != 5 || tok[3] != "rho")
                throw ParseError(line, "expected 'edge a b rho <real>'");
            double r = parse_real(tok[4], line);
            if (!(r > 0) || !std::isfinite(r))
                throw ParseError(line, "edge colours must be positive and finite");
            l.edge_colors[parse_face<2>(tok, line)] = r;
        }
        else if (tok[0] == "face")
        {
            if (tok.size() != 6 || tok[4] != "value")
                throw ParseError(line, "expected 'face a b c value <real>'");
            l.face_values[parse_face<3>(tok, line)] = parse_real(tok[5], line);
        }
        else if (tok[0] == "tetra")
        {
            if (tok.size() != 7)
                throw ParseError(line, "expected 'tetra a b c d constant|random <value>'");
            auto f = parse_face<4>(tok, line);
            if (tok[5] == "constant")
                l.tetra_fields[f] = TetraField::constant(parse_real(tok[6], line));
            else if (tok[5] == "random")
                l.tetra_fields[f] =
                    TetraField::random(parse_integer<std::uint64_t>(tok[6], line, "a seed"));
            else
                throw ParseError(line, "unknown tetra field '" + tok[5] + "'");
        }
        else
            throw ParseError(line, "unknown keyword '" + tok[0] + "'");
    }
    return l;
}

Labelling load_labelling_file(const std::string& path)
{
    return parse_labelling(read_file(path));
}

FiberStatus triangle_status(double a, double b, double c)
{
    double r = std::max({a, b, c});
    double s = a + b + c - r;
    if (std::abs(r - s) <= default_tolerances.num * std::max(1.0, r))
        return FiberStatus::Collinear;
    return r > s ? FiberStatus::Generic : FiberStatus::Empty;
}

namespace {
std::vector<double> edge_colors(const Triangulation& t, const Labelling& l)
{
    std::vector<double> colors(t.edges.size());
    std::vector<std::string> missing;
    for (std::size_t e = 0; e < t.edges.size(); ++e)
    {
        auto key = t.external(t.edges[e]);
        std::sort(key.begin(), key.end());
        auto it = l.edge_colors.find(key);
        if (it == l.edge_colors.end())
            missing.push_back(face_text(key));
        else
            colors[e] = it->second;
    }
    if (!missing.empty())
    {
        std::string msg = "edges without a colour:";
        for (auto const& m : missing)
            msg += " " + m;
        throw DomainError(msg);
    }
    return colors;
}

template <std::size_t N, typename V>
const V* lookup(const std::map<std::array<int, N>, V>& m,
                const Triangulation& t,
                const std::array<int, N>& face)
{
    auto key = t.external(face);
    std::sort(key.begin(), key.end());
    auto it = m.find(key);
    return it == m.end() ? nullptr : &it->second;
}
}  // namespace

AdmissibilityReport admissible(const Triangulation& t, const Labelling& l)
{
    auto colors = edge_colors(t, l);
    AdmissibilityReport rep;
    rep.pass = true;
    for (std::size_t f = 0; f < t.triangles.size(); ++f)
    {
        TriangleCheck c;
        c.triangle = t.external(t.triangles[f]);
        for (std::size_t k = 0; k < 3; ++k)
            c.colors[k] = colors[t.triangle_edges[f][k]];
        c.status = triangle_status(c.colors[0], c.colors[1], c.colors[2]);
        rep.pass = rep.pass && c.status != FiberStatus::Empty;
        rep.collinear += c.status == FiberStatus::Collinear;
        rep.triangles.push_back(c);
    }
    return rep;
}

//---------------------------------------------------------------------------//
// 5j symbols
//---------------------------------------------------------------------------//
namespace {
struct LegGrid
{
    std::vector<Eigen::Vector3d> nodes;
    double weight{1};
};

LegGrid leg_grid(FiberStatus status,
                 std::size_t n,
                 std::uint64_t seed,
                 std::size_t tetra,
                 std::uint64_t tag)
{
    if (status == FiberStatus::Collinear)
        return {{Eigen::Vector3d::UnitZ()}, 1.0};
    return {fibonacci_sphere(n, random_rotation(derive_seed(seed, tetra), tag)),
            1.0 / static_cast<double>(n)};
}

double leg_integral(const SpherePolynomial& p, const LegGrid& g)
{
    double s = 0;
    for (auto const& x : g.nodes)
        s += p(x);
    return s * g.weight;
}

double tetra_trace(const TetraField& f, const LegGrid& in, const LegGrid& out)
{
    double s = 0;
    for (int k = 0; k < f.rank; ++k)
        s += leg_integral(f.a[k], in) * leg_integral(f.b[k], out);
    return s;
}

const TetraField& unit_field()
{
    static const TetraField f = TetraField::constant(1.0);
    return f;
}

// Pasting orders of the five tetrahedra.
constexpr std::array<std::size_t, 5> plus_order{1, 3, 0, 2, 4};
constexpr std::array<std::size_t, 5> minus_order{0, 2, 4, 1, 3};

/// statuses indexed by triangle of the complex
PentagonTrace five_j_core(const Triangulation& t,
                          std::size_t simplex,
                          const std::vector<FiberStatus>& status,
                          const Labelling& l,
                          const FiveJConfig& cfg,
                          bool minus_path = true)
{
    double faces = 1;
    for (std::size_t f : t.simplex_triangles[simplex])
    {
        if (status[f] == FiberStatus::Empty)
            throw DomainError("incompatible labels: triangle "
                              + face_text(t.external(t.triangles[f])) + " is not admissible");
        if (auto const* v = lookup(l.face_values, t, t.triangles[f]))
            faces *= *v;
    }
    auto path = [&](const std::array<std::size_t, 5>& order, std::uint64_t tag) {
        double v = faces;
        for (std::size_t k : order)
        {
            std::size_t tet = t.simplex_tetrahedra[simplex][k];
            auto const* field = lookup(l.tetra_fields, t, t.tetrahedra[tet]);
            auto const& tris = t.tetrahedron_triangles[tet];
            auto in = leg_grid(status[tris.front()], cfg.nodes, cfg.seed, tet, 2 * tag);
            auto out = leg_grid(status[tris.back()], cfg.nodes, cfg.seed, tet, 2 * tag + 1);
            v *= tetra_trace(field ? *field : unit_field(), in, out);
        }
        return v;
    };
    PentagonTrace p;
    p.plus_value = path(plus_order, 0);
    p.minus_value = minus_path ? path(minus_order, 1) : p.plus_value;
    p.residual = std::abs(p.plus_value - p.minus_value);
    return p;
}

std::vector<FiberStatus> triangle_statuses(const Triangulation& t,
                                           const std::vector<double>& colors)
{
    std::vector<FiberStatus> s(t.triangles.size());
    for (std::size_t f = 0; f < t.triangles.size(); ++f)
    {
        auto const& e = t.triangle_edges[f];
        s[f] = triangle_status(colors[e[0]], colors[e[1]], colors[e[2]]);
    }
    return s;
}
}  // namespace

PentagonTrace
five_j(const Triangulation& t, std::size_t simplex, const Labelling& l, const FiveJConfig& cfg)
{
    if (simplex >= t.simplices.size())
        throw DomainError("no 4-simplex with index " + std::to_string(simplex));
    if (cfg.nodes == 0)
        throw DomainError("5j quadrature needs at least one node");
    return five_j_core(t, simplex, triangle_statuses(t, edge_colors(t, l)), l, cfg);
}

SphericityReport sphericity_check(const Triangulation& t,
                                  const Labelling& l,
                                  std::size_t trials,
                                  std::uint64_t seed,
                                  const std::vector<std::size_t>& resolutions)
{
    auto status = triangle_statuses(t, edge_colors(t, l));
    SphericityReport rep;
    rep.trials = trials;
    rep.resolutions = resolutions;
    rep.residual_by_resolution.assign(resolutions.size(), 0.0);
    for (std::size_t trial = 0; trial < trials; ++trial)
    {
        Labelling draw = l;
        std::uint64_t trial_seed = derive_seed(seed, trial);
        for (std::size_t k = 0; k < t.tetrahedra.size(); ++k)
        {
            auto key = t.external(t.tetrahedra[k]);
            std::sort(key.begin(), key.end());
            draw.tetra_fields[key] = TetraField::random(derive_seed(trial_seed, k));
        }
        for (std::size_t r = 0; r < resolutions.size(); ++r)
            for (std::size_t s = 0; s < t.simplices.size(); ++s)
            {
                auto p = five_j_core(t, s, status, draw, {resolutions[r], trial_seed});
                rep.residual_by_resolution[r] = std::max(rep.residual_by_resolution[r], p.residual);
            }
    }
    rep.max_residual = rep.residual_by_resolution.empty() ? 0 : rep.residual_by_resolution.back();
    rep.monotone = true;
    for (std::size_t r = 1; r < resolutions.size(); ++r)
        rep.monotone = rep.monotone
                       && rep.residual_by_resolution[r] < rep.residual_by_resolution[r - 1];
    return rep;
}

//---------------------------------------------------------------------------//
// Configuration
//---------------------------------------------------------------------------//
void AmplitudeConfig::validate() const
{
    if (!(cutoff > 0) || !std::isfinite(cutoff))
        throw DomainError("cutoff must be positive and finite");
    if (resolution < 1 || samples < 1 || fivej_nodes < 1)
        throw DomainError("resolution, samples and fivej_nodes must be at least 1");
    if (!std::isfinite(normalization))
        throw DomainError("normalization must be finite");
}

namespace {
std::map<std::size_t, double> parse_table(const std::string& v, std::size_t line)
{
    std::map<std::size_t, double> m;
    for (auto const& item : split_list(v))
    {
        if (item.empty())
            continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError(line, "table entries are index:value");
        m[parse_integer<std::size_t>(trim(item.substr(0, colon)), line, "an index")] =
            parse_real(trim(item.substr(colon + 1)), line);
    }
    return m;
}

std::string table_text(const std::map<std::size_t, double>& m)
{
    std::string s;
    for (auto const& [k, v] : m)
        s += (s.empty() ? "" : ", ") + std::to_string(k) + ":" + format_number(v);
    return s;
}
}  // namespace

AmplitudeConfig parse_amplitude_config(std::string_view text)
{
    AmplitudeConfig c;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    auto choose = [&line](const std::string& v, std::initializer_list<const char*> names) {
        std::size_t i = 0;
        for (auto const* n : names)
        {
            if (v == n)
                return i;
            ++i;
        }
        throw ParseError(line, "unexpected value '" + v + "'");
    };
    while (std::getline(in, raw))
    {
        ++line;
        std::string body = trim(raw.substr(0, raw.find('#')));
        if (body.empty())
            continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError(line, "expected key = value");
        std::string key = trim(body.substr(0, eq));
        std::string v = trim(body.substr(eq + 1));
        if (key == "face_amplitude")
            c.face_amplitude = static_cast<FaceAmplitude>(choose(v, {"unit", "bc_weight", "table"}));
        else if (key == "tetra_amplitude")
            c.tetra_amplitude = static_cast<TetraAmplitude>(choose(v, {"unit", "table"}));
        else if (key == "edge_weight")
            c.edge_weight = static_cast<EdgeWeight>(choose(v, {"rho", "unit"}));
        else if (key == "face_table")
            c.face_table = parse_table(v, line);
        else if (key == "tetra_table")
            c.tetra_table = parse_table(v, line);
        else if (key == "cutoff")
            c.cutoff = parse_real(v, line);
        else if (key == "integrator")
            c.integrator = static_cast<Integrator>(choose(v, {"grid", "monte_carlo"}));
        else if (key == "resolution")
            c.resolution = parse_integer<std::size_t>(v, line, "a count");
        else if (key == "samples")
            c.samples = parse_integer<std::size_t>(v, line, "a count");
        else if (key == "seed")
            c.seed = parse_integer<std::uint64_t>(v, line, "a seed");
        else if (key == "mc_support")
            c.mc_support = static_cast<McSupport>(choose(v, {"continuum", "lattice"}));
        else if (key == "normalization")
            c.normalization = parse_real(v, line);
        else if (key == "fivej_nodes")
            c.fivej_nodes = parse_integer<std::size_t>(v, line, "a count");
        else
            throw ParseError(line, "unknown key '" + key + "'");
    }
    c.validate();
    return c;
}

AmplitudeConfig load_amplitude_config_file(const std::string& path)
{
    return parse_amplitude_config(read_file(path));
}

std::vector<std::pair<std::string, std::string>> describe(const AmplitudeConfig& c)
{
    const char* face[] = {"unit", "bc_weight", "table"};
    const char* tetra[] = {"unit", "table"};
    const char* edge[] = {"rho", "unit"};
    const char* integ[] = {"grid", "monte_carlo"};
    const char* support[] = {"continuum", "lattice"};
    return {
        {"face_amplitude", face[static_cast<int>(c.face_amplitude)]},
        {"tetra_amplitude", tetra[static_cast<int>(c.tetra_amplitude)]},
        {"edge_weight", edge[static_cast<int>(c.edge_weight)]},
        {"face_table", table_text(c.face_table)},
        {"tetra_table", table_text(c.tetra_table)},
        {"cutoff", format_number(c.cutoff)},
        {"integrator", integ[static_cast<int>(c.integrator)]},
        {"resolution", std::to_string(c.resolution)},
        {"samples", std::to_string(c.samples)},
        {"seed", std::to_string(c.seed)},
        {"mc_support", support[static_cast<int>(c.mc_support)]},
        {"normalization", format_number(c.normalization)},
        {"fivej_nodes", std::to_string(c.fivej_nodes)},
    };
}

double bc_face_weight(double rho, double n)
{
    return rho * rho + n * n;
}

double triangle_area(double a, double b, double c)
{
    double r = std::max({a, b, c});
    double r1 = std::min({a, b, c});
    double r2 = a + b + c - r - r1;
    switch (triangle_status(a, b, c))
    {
        case FiberStatus::Empty: throw DomainError("triangle is not admissible");
        case FiberStatus::Collinear: return 0.0;
        case FiberStatus::Generic: break;
    }
    double u0 = (r * r + r1 * r1 - r2 * r2) / (2 * r);
    return 0.5 * r * std::sqrt(std::max(0.0, u0 * u0 - r1 * r1));
}

//---------------------------------------------------------------------------//
// State sum
//---------------------------------------------------------------------------//
namespace {
class Integrand
{
  public:
    Integrand(const Triangulation& t, const Labelling& l, const AmplitudeConfig& cfg)
        : t_(t), l_(l), cfg_(cfg), status_(t.triangles.size())
    {
        // triangles become checkable once their last edge is assigned
        closes_at_.resize(t.edges.size());
        for (std::size_t f = 0; f < t.triangles.size(); ++f)
        {
            auto const& e = t.triangle_edges[f];
            closes_at_[*std::max_element(e.begin(), e.end())].push_back(f);
        }
        tetra_amp_ = 1;
        if (cfg.tetra_amplitude == TetraAmplitude::Table)
            for (std::size_t k = 0; k < t.tetrahedra.size(); ++k)
                if (auto it = cfg.tetra_table.find(k); it != cfg.tetra_table.end())
                    tetra_amp_ *= it->second;
    }

    /// Admissibility of the triangles closing at edge `depth`.
    bool admissible_at(std::size_t depth, const std::vector<double>& colors)
    {
        for (std::size_t f : closes_at_[depth])
        {
            auto const& e = t_.triangle_edges[f];
            status_[f] = triangle_status(colors[e[0]], colors[e[1]], colors[e[2]]);
            if (status_[f] == FiberStatus::Empty)
                return false;
        }
        return true;
    }

    double edge_weight(double rho) const
    {
        return cfg_.edge_weight == EdgeWeight::Rho ? rho : 1.0;
    }

    /// Everything but the edge weights, for an admissible colouring.
    double amplitudes(const std::vector<double>& colors)
    {
        double v = tetra_amp_;
        for (std::size_t f = 0; f < t_.triangles.size(); ++f)
        {
            switch (cfg_.face_amplitude)
            {
                case FaceAmplitude::Unit: break;
                case FaceAmplitude::BCWeight:
                {
                    auto const& e = t_.triangle_edges[f];
                    v *= bc_face_weight(triangle_area(colors[e[0]], colors[e[1]], colors[e[2]]), 0);
                    break;
                }
                case FaceAmplitude::Table:
                    if (auto it = cfg_.face_table.find(f); it != cfg_.face_table.end())
                        v *= it->second;
                    break;
            }
        }
        for (std::size_t s = 0; s < t_.simplices.size(); ++s)
            v *= five_j_plus(s);
        return v;
    }

    std::size_t fivej_evaluations() const { return fivej_evaluations_; }

  private:
    // The plus path depends on colours only through which faces are collinear.
    double five_j_plus(std::size_t s)
    {
        std::uint32_t mask = 0;
        auto const& tris = t_.simplex_triangles[s];
        for (std::size_t k = 0; k < tris.size(); ++k)
            if (status_[tris[k]] == FiberStatus::Collinear)
                mask |= 1u << k;
        auto key = std::make_pair(s, mask);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        ++fivej_evaluations_;
        double v = five_j_core(t_, s, status_, l_, {cfg_.fivej_nodes, cfg_.seed}, false).plus_value;
        cache_.emplace(key, v);
        return v;
    }

    const Triangulation& t_;
    const Labelling& l_;
    const AmplitudeConfig& cfg_;
    std::vector<FiberStatus> status_;
    std::vector<std::vector<std::size_t>> closes_at_;
    double tetra_amp_{1};
    std::map<std::pair<std::size_t, std::uint32_t>, double> cache_;
    std::size_t fivej_evaluations_{0};
};

ZResult grid_sum(const Triangulation& t, Integrand& f, const AmplitudeConfig& cfg)
{
    const std::size_t n_edges = t.edges.size();
    const std::size_t R = cfg.resolution;
    const double h = cfg.cutoff / static_cast<double>(R);
    std::vector<double> nodes(R);
    for (std::size_t k = 0; k < R; ++k)
        nodes[k] = (static_cast<double>(k) + 0.5) * h;

    ZResult z;
    std::vector<double> colors(n_edges);
    std::vector<double> partial(n_edges + 1, 1.0);  // product of edge weights so far
    std::vector<std::size_t> idx(n_edges, 0);
    double sum = 0;

    // depth-first over edges with pruning at closed inadmissible triangles
    std::size_t depth = 0;
    for (;;)
    {
        if (idx[depth] == R)
        {
            if (depth == 0)
                break;
            idx[depth] = 0;
            --depth;
            ++idx[depth];
            continue;
        }
        colors[depth] = nodes[idx[depth]];
        ++z.evaluations;
        if (!f.admissible_at(depth, colors))
        {
            ++idx[depth];
            continue;
        }
        partial[depth + 1] = partial[depth] * f.edge_weight(colors[depth]);
        if (depth + 1 < n_edges)
        {
            ++depth;
            continue;
        }
        ++z.admissible;
        sum += partial[n_edges] * f.amplitudes(colors);
        ++idx[depth];
    }
    z.value = cfg.normalization * std::pow(h, static_cast<double>(n_edges)) * sum;
    return z;
}

ZResult monte_carlo(const Triangulation& t, Integrand& f, const AmplitudeConfig& cfg)
{
    const std::size_t n_edges = t.edges.size();
    const std::size_t R = cfg.resolution;
    const double h = cfg.cutoff / static_cast<double>(R);
    constexpr std::size_t chunk = 4096;

    ZResult z;
    std::vector<double> colors(n_edges);
    double sum = 0, sum2 = 0;
    double csum = 0, csum2 = 0;
    for (std::size_t i = 0; i < cfg.samples; ++i)
    {
        CounterRng rng(cfg.seed, i);
        bool ok = true;
        double w = 1;
        for (std::size_t e = 0; e < n_edges; ++e)
        {
            double u = rng.uniform();
            colors[e] = cfg.mc_support == McSupport::Lattice
                            ? (std::floor(u * static_cast<double>(R)) + 0.5) * h
                            : cfg.cutoff * (1.0 - u);
        }
        for (std::size_t e = 0; e < n_edges && ok; ++e)
        {
            ok = f.admissible_at(e, colors);
            w *= f.edge_weight(colors[e]);
        }
        double v = 0;
        if (ok)
        {
            ++z.admissible;
            v = w * f.amplitudes(colors);
        }
        csum += v;
        csum2 += v * v;
        if ((i + 1) % chunk == 0 || i + 1 == cfg.samples)
        {
            sum += csum;
            sum2 += csum2;
            csum = csum2 = 0;
        }
    }
    double n = static_cast<double>(cfg.samples);
    double mean = sum / n;
    double var = n > 1 ? std::max(0.0, (sum2 - n * mean * mean) / (n - 1)) : 0.0;
    double volume = std::pow(cfg.cutoff, static_cast<double>(n_edges));
    z.evaluations = cfg.samples;
    z.value = cfg.normalization * volume * mean;
    z.standard_error = std::abs(cfg.normalization) * volume * std::sqrt(var / n);
    return z;
}
}  // namespace

ZResult evaluate_Z(const Triangulation& t, const Labelling& l, const AmplitudeConfig& cfg)
{
    cfg.validate();
    auto canon = canonical_form(t);
    Integrand f(canon.complex, l, cfg);
    ZResult z = cfg.integrator == Integrator::Grid ? grid_sum(canon.complex, f, cfg)
                                                   : monte_carlo(canon.complex, f, cfg);
    z.cutoff = cfg.cutoff;
    z.canonical = canon.exact;
    z.fivej_evaluations = f.fivej_evaluations();
    return z;
}

}  // namespace poinc
