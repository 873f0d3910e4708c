#include "ihx/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ihx {

Simplex::Simplex(std::vector<Vertex> v) : vertices(std::move(v))
{
    if (vertices.empty())
        throw std::invalid_argument("empty simplex");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("repeated vertex in simplex " + str());
}

bool Simplex::has_vertex(Vertex v) const
{
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices.begin(), other.vertices.end(), vertices.begin(),
                         vertices.end());
}

std::vector<Simplex> Simplex::facets() const
{
    std::vector<Simplex> out;
    if (dim() == 0)
        return out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Simplex f;
        f.vertices = vertices;
        f.vertices.erase(f.vertices.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Simplex> Simplex::all_faces() const
{
    std::vector<Simplex> out;
    const std::size_t n = vertices.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                f.vertices.push_back(vertices[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::string Simplex::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        os << (i ? " " : "") << vertices[i];
    os << "]";
    return os.str();
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal)
{
    SimplicialComplex k;
    for (const auto& s : maximal)
        k.add_closed(s);
    return k;
}

void SimplicialComplex::add_closed(const Simplex& s)
{
    for (auto& f : s.all_faces())
        simplices_.insert(std::move(f));
}

int SimplicialComplex::dim() const
{
    int d = -1;
    for (const auto& s : simplices_)
        d = std::max(d, s.dim());
    return d;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int d) const
{
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (s.dim() == d)
            out.push_back(s);
    return out; // std::set iteration is already lexicographic
}

std::set<Vertex> SimplicialComplex::vertices() const
{
    std::set<Vertex> out;
    for (const auto& s : simplices_)
        out.insert(s.vertices.begin(), s.vertices.end());
    return out;
}

long SimplicialComplex::euler_characteristic() const
{
    long chi = 0;
    for (const auto& s : simplices_)
        chi += (s.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

bool SimplicialComplex::contains_subcomplex(const SimplicialComplex& other) const
{
    for (const auto& s : other.simplices())
        if (!contains(s))
            return false;
    return true;
}

RationalMatrix boundary_matrix(const SimplicialComplex& k, int i)
{
    if (i < 1 || i > k.dim())
        throw std::out_of_range("boundary degree out of range");
    auto domain = k.simplices_of_dim(i);
    auto codomain = k.simplices_of_dim(i - 1);
    std::map<Simplex, int> index;
    for (std::size_t j = 0; j < codomain.size(); ++j)
        index[codomain[j]] = static_cast<int>(j);
    RationalMatrix d(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    for (std::size_t c = 0; c < domain.size(); ++c) {
        auto facets = domain[c].facets();
        for (std::size_t f = 0; f < facets.size(); ++f)
            d.set(index.at(facets[f]), static_cast<int>(c), (f % 2 == 0) ? 1 : -1);
    }
    return d;
}

GradedComplex chain_complex(const SimplicialComplex& k)
{
    if (k.empty())
        throw std::invalid_argument("empty complex");
    GradedComplex c;
    c.dir = Direction::chain;
    c.lo = 0;
    c.hi = k.dim();
    for (int d = 0; d <= k.dim(); ++d)
        c.dims.push_back(static_cast<int>(k.simplices_of_dim(d).size()));
    for (int d = 1; d <= k.dim(); ++d)
        c.diff[d] = boundary_matrix(k, d);
    return c;
}

GradedComplex cochain_complex(const SimplicialComplex& k)
{
    GradedComplex chains = chain_complex(k);
    GradedComplex c;
    c.dir = Direction::cochain;
    c.lo = 0;
    c.hi = chains.hi;
    c.dims = chains.dims;
    for (int d = 0; d < c.hi; ++d)
        c.diff[d] = chains.differential(d + 1).transpose();
    return c;
}

std::map<int, long> betti_numbers(const SimplicialComplex& k)
{
    return betti(chain_complex(k));
}

SimplicialComplex cone(const SimplicialComplex& k, Vertex apex)
{
    if (k.vertices().count(apex))
        throw std::invalid_argument("cone apex already in complex");
    SimplicialComplex out;
    out.add_closed(Simplex({apex}));
    for (const auto& s : k.simplices()) {
        out.add_closed(s);
        Simplex joined = s;
        joined.vertices.push_back(apex);
        out.add_closed(Simplex(joined.vertices));
    }
    return out;
}

SimplicialComplex suspension(const SimplicialComplex& k, Vertex north, Vertex south)
{
    if (north == south)
        throw std::invalid_argument("suspension apexes must differ");
    SimplicialComplex out = cone(k, north);
    SimplicialComplex lower = cone(k, south);
    for (const auto& s : lower.simplices())
        out.add_closed(s);
    return out;
}

Subdivision barycentric_subdivision(const SimplicialComplex& k)
{
    Subdivision out;
    std::map<Simplex, Vertex> id_of;
    Vertex next = 0;
    for (const auto& s : k.simplices()) {
        id_of[s] = next;
        out.carrier[next] = s;
        ++next;
    }
    // simplices of K' = chains of proper faces; grow chains downward from each top
    std::vector<std::vector<Vertex>> chains;
    for (const auto& s : k.simplices())
        chains.push_back({id_of.at(s)});
    std::vector<std::vector<Vertex>> frontier = chains;
    while (!frontier.empty()) {
        std::vector<std::vector<Vertex>> grown;
        for (const auto& ch : frontier) {
            const Simplex& smallest = out.carrier.at(ch.front());
            for (const auto& f : smallest.all_faces()) {
                if (f == smallest)
                    continue;
                auto extended = ch;
                extended.insert(extended.begin(), id_of.at(f));
                grown.push_back(extended);
            }
        }
        chains.insert(chains.end(), grown.begin(), grown.end());
        frontier = std::move(grown);
    }
    for (const auto& ch : chains)
        out.complex.add_closed(Simplex(std::vector<Vertex>(ch)));
    return out;
}

PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k)
{
    PseudomanifoldReport report;
    const int n = k.dim();
    if (n < 0)
        return report;
    auto tops = k.simplices_of_dim(n);
    for (const auto& s : k.simplices()) {
        bool covered = false;
        for (const auto& t : tops)
            if (s.is_face_of(t)) {
                covered = true;
                break;
            }
        if (!covered)
            report.not_in_top_simplex.push_back(s);
    }
    for (const auto& r : k.simplices_of_dim(n - 1)) {
        int cofaces = 0;
        for (const auto& t : tops)
            if (r.is_face_of(t))
                ++cofaces;
        if (cofaces != 2)
            report.bad_ridges.emplace_back(r, cofaces);
    }
    report.ok = report.not_in_top_simplex.empty() && report.bad_ridges.empty();
    return report;
}

} // namespace ihx
