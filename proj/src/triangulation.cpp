#include "poinc/triangulation.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "poinc/error.hpp"
#include "poinc/format.hpp"

namespace poinc {

namespace {
template <std::size_t N>
std::size_t index_in(const std::vector<std::array<int, N>>& list, const std::array<int, N>& f)
{
    auto it = std::lower_bound(list.begin(), list.end(), f);
    if (it == list.end() || *it != f)
        throw DomainError("face is not in the complex");
    return static_cast<std::size_t>(it - list.begin());
}

template <std::size_t K, std::size_t N>
std::vector<std::array<int, K>> subsets(const std::array<int, N>& s)
{
    std::vector<std::array<int, K>> out;
    std::array<bool, N> pick{};
    std::fill(pick.begin(), pick.begin() + K, true);
    do
    {
        std::array<int, K> f{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < N; ++i)
            if (pick[i])
                f[k++] = s[i];
        out.push_back(f);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

template <std::size_t N>
std::string face_text(const std::array<int, N>& f)
{
    std::string s = "{";
    for (std::size_t i = 0; i < N; ++i)
        s += (i ? " " : "") + std::to_string(f[i]);
    return s + "}";
}

// Skeleta from simplices on internal vertices 0..n-1.
Triangulation build(std::vector<Simplex4> simplices, std::vector<int> labels)
{
    Triangulation t;
    t.labels = std::move(labels);
    for (auto& s : simplices)
        std::sort(s.begin(), s.end());
    std::sort(simplices.begin(), simplices.end());
    for (std::size_t i = 1; i < simplices.size(); ++i)
        if (simplices[i] == simplices[i - 1])
            throw DomainError("duplicate 4-simplex " + face_text(t.external(simplices[i])));
    t.simplices = std::move(simplices);

    std::set<Edge> edges;
    std::set<Triangle> tris;
    std::set<Tetrahedron> tets;
    for (auto const& s : t.simplices)
    {
        for (auto const& e : subsets<2>(s))
            edges.insert(e);
        for (auto const& f : subsets<3>(s))
            tris.insert(f);
        for (auto const& f : subsets<4>(s))
            tets.insert(f);
    }
    t.edges.assign(edges.begin(), edges.end());
    t.triangles.assign(tris.begin(), tris.end());
    t.tetrahedra.assign(tets.begin(), tets.end());

    t.tetrahedron_simplices.resize(t.tetrahedra.size());
    for (std::size_t k = 0; k < t.simplices.size(); ++k)
    {
        auto const& s = t.simplices[k];
        auto es = subsets<2>(s);
        auto fs = subsets<3>(s);
        std::array<std::size_t, 10> ei{}, fi{};
        for (std::size_t i = 0; i < 10; ++i)
        {
            ei[i] = index_in(t.edges, es[i]);
            fi[i] = index_in(t.triangles, fs[i]);
        }
        std::sort(ei.begin(), ei.end());
        std::sort(fi.begin(), fi.end());
        t.simplex_edges.push_back(ei);
        t.simplex_triangles.push_back(fi);
        std::array<std::size_t, 5> ti{};
        for (std::size_t omit = 0; omit < 5; ++omit)
        {
            Tetrahedron f{};
            std::size_t j = 0;
            for (std::size_t i = 0; i < 5; ++i)
                if (i != omit)
                    f[j++] = s[i];
            ti[omit] = index_in(t.tetrahedra, f);
            t.tetrahedron_simplices[ti[omit]].push_back(k);
        }
        t.simplex_tetrahedra.push_back(ti);
    }
    for (std::size_t k = 0; k < t.tetrahedra.size(); ++k)
        if (t.tetrahedron_simplices[k].size() > 2)
            throw DomainError("not a pseudomanifold: tetrahedron "
                              + face_text(t.external(t.tetrahedra[k])) + " lies in "
                              + std::to_string(t.tetrahedron_simplices[k].size())
                              + " 4-simplices");
    for (auto const& f : t.triangles)
    {
        auto es = subsets<2>(f);
        t.triangle_edges.push_back(
            {index_in(t.edges, es[0]), index_in(t.edges, es[1]), index_in(t.edges, es[2])});
    }
    for (auto const& f : t.tetrahedra)
    {
        auto fs = subsets<3>(f);
        std::array<std::size_t, 4> ti{};
        for (std::size_t i = 0; i < 4; ++i)
            ti[i] = index_in(t.triangles, fs[i]);
        std::sort(ti.begin(), ti.end());
        t.tetrahedron_triangles.push_back(ti);
    }
    return t;
}

int parse_int(const std::string& s, std::size_t line)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0)
        throw ParseError(line, "expected a nonnegative vertex label, got '" + s + "'");
    return v;
}
}  // namespace

int internal_vertex(const Triangulation& t, int label)
{
    auto it = std::find(t.labels.begin(), t.labels.end(), label);
    if (it == t.labels.end())
        throw DomainError("no vertex labelled " + std::to_string(label));
    return static_cast<int>(it - t.labels.begin());
}

std::size_t Triangulation::edge_index(const Edge& e) const { return index_in(edges, e); }
std::size_t Triangulation::triangle_index(const Triangle& t) const
{
    return index_in(triangles, t);
}
std::size_t Triangulation::tetrahedron_index(const Tetrahedron& t) const
{
    return index_in(tetrahedra, t);
}

Triangulation make_triangulation(const std::vector<Simplex4>& simplices)
{
    std::vector<int> labels;
    for (auto const& s : simplices)
    {
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j)
                if (s[i] == s[j])
                    throw DomainError("4-simplex " + face_text(s) + " repeats vertex "
                                      + std::to_string(s[i]));
        labels.insert(labels.end(), s.begin(), s.end());
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::vector<Simplex4> internal;
    for (auto const& s : simplices)
    {
        Simplex4 v{};
        for (std::size_t i = 0; i < 5; ++i)
            v[i] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), s[i])
                                    - labels.begin());
        internal.push_back(v);
    }
    return build(std::move(internal), std::move(labels));
}

Triangulation load_triangulation(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    bool have_dim = false;
    std::vector<Simplex4> simplices;
    std::vector<std::size_t> simplex_lines;
    while (std::getline(in, raw))
    {
        ++line;
        auto hash = raw.find('#');
        std::istringstream words(trim(raw.substr(0, hash)));
        std::vector<std::string> tok;
        for (std::string w; words >> w;)
            tok.push_back(w);
        if (tok.empty())
            continue;
        if (tok[0] == "dim")
        {
            if (have_dim)
                throw ParseError(line, "repeated dim line");
            if (tok.size() != 2 || tok[1] != "4")
                throw ParseError(line, "only 'dim 4' is supported");
            have_dim = true;
        }
        else if (tok[0] == "simplex")
        {
            if (!have_dim)
                throw ParseError(line, "simplex before the dim line");
            if (tok.size() != 6)
                throw ParseError(line, "a simplex needs exactly 5 vertices");
            Simplex4 s{};
            for (std::size_t i = 0; i < 5; ++i)
                s[i] = parse_int(tok[i + 1], line);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    if (s[i] == s[j])
                        throw ParseError(line, "vertex " + std::to_string(s[i])
                                                   + " repeated in a simplex");
            simplices.push_back(s);
            simplex_lines.push_back(line);
        }
        else
            throw ParseError(line, "unknown keyword '" + tok[0] + "'");
    }
    if (!have_dim)
        throw ParseError(line, "missing 'dim 4' line");
    if (simplices.empty())
        throw ParseError(line, "no simplices");
    return make_triangulation(simplices);
}

Triangulation load_triangulation_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return load_triangulation(ss.str());
}

namespace {
// Colour refinement on vertices; colours are label-independent ranks.
std::vector<int> refine_colours(const Triangulation& t)
{
    std::size_t n = t.vertex_count();
    std::vector<int> colour(n, 0);
    for (std::size_t round = 0; round <= n; ++round)
    {
        std::vector<std::vector<long>> sig(n);
        for (std::size_t v = 0; v < n; ++v)
            sig[v].push_back(colour[v]);
        for (auto const& s : t.simplices)
            for (int v : s)
            {
                // multiset of the other vertex colours in this simplex
                std::vector<int> others;
                for (int w : s)
                    if (w != v)
                        others.push_back(colour[static_cast<std::size_t>(w)]);
                std::sort(others.begin(), others.end());
                long code = 0;
                for (int c : others)
                    code = code * static_cast<long>(n + 1) + c;
                sig[static_cast<std::size_t>(v)].push_back(code);
            }
        for (auto& s : sig)
            std::sort(s.begin() + 1, s.end());
        std::vector<std::vector<long>> keys = sig;
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> next(n);
        for (std::size_t v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v])
                                       - keys.begin());
        bool stable = next == colour
                      || keys.size() == static_cast<std::size_t>(
                             *std::max_element(colour.begin(), colour.end()) + 1);
        colour = std::move(next);
        if (stable)
            break;
    }
    return colour;
}

std::vector<Simplex4> relabel(const std::vector<Simplex4>& simplices, const std::vector<int>& pos)
{
    std::vector<Simplex4> out;
    out.reserve(simplices.size());
    for (auto const& s : simplices)
    {
        Simplex4 r{};
        for (std::size_t i = 0; i < 5; ++i)
            r[i] = pos[static_cast<std::size_t>(s[i])];
        std::sort(r.begin(), r.end());
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

CanonicalForm canonical_form(const Triangulation& t, std::size_t max_orderings)
{
    std::size_t n = t.vertex_count();
    auto colour = refine_colours(t);

    // classes in colour order, members in input-label order
    std::map<int, std::vector<int>> classes;
    for (std::size_t v = 0; v < n; ++v)
        classes[colour[v]].push_back(static_cast<int>(v));
    std::vector<std::vector<int>> blocks;
    double count = 1;
    for (auto& [c, members] : classes)
    {
        for (std::size_t k = 2; k <= members.size(); ++k)
            count *= static_cast<double>(k);
        blocks.push_back(members);
    }

    CanonicalForm out;
    out.exact = count <= static_cast<double>(max_orderings);
    std::vector<int> order;  // order[i] = old vertex placed at new position i
    std::vector<int> best_order;
    std::vector<Simplex4> best;

    auto consider = [&] {
        order.clear();
        for (auto const& b : blocks)
            order.insert(order.end(), b.begin(), b.end());
        std::vector<int> pos(n);
        for (std::size_t i = 0; i < n; ++i)
            pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        auto r = relabel(t.simplices, pos);
        if (best_order.empty() || r < best)
        {
            best = std::move(r);
            best_order = order;
        }
    };

    if (!out.exact)
        consider();
    else
    {
        // odometer over the permutations of every block
        for (;;)
        {
            consider();
            std::size_t b = 0;
            for (; b < blocks.size(); ++b)
            {
                if (std::next_permutation(blocks[b].begin(), blocks[b].end()))
                    break;
            }
            if (b == blocks.size())
                break;
        }
    }

    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = t.labels[static_cast<std::size_t>(best_order[i])];
    out.complex = build(std::move(best), std::move(labels));
    return out;
}

std::string to_string(const Triangulation& t)
{
    std::ostringstream os;
    os << "vertices=" << t.vertex_count() << " edges=" << t.edges.size()
       << " triangles=" << t.triangles.size() << " tetrahedra=" << t.tetrahedra.size()
       << " simplices=" << t.simplices.size();
    return os.str();
}

}  // namespace poinc
