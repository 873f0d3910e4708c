#include "ihx/spaces.hpp"

namespace ihx::spaces {

SimplicialComplex point()
{
    return SimplicialComplex::from_maximal({Simplex({0})});
}

SimplicialComplex two_points()
{
    return SimplicialComplex::from_maximal({Simplex({0}), Simplex({1})});
}

SimplicialComplex hollow_triangle()
{
    return SimplicialComplex::from_maximal({Simplex({0, 1}), Simplex({0, 2}), Simplex({1, 2})});
}

SimplicialComplex hexagon()
{
    std::vector<Simplex> edges;
    for (int i = 0; i < 6; ++i)
        edges.push_back(Simplex({i, (i + 1) % 6}));
    return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex two_hexagons()
{
    std::vector<Simplex> edges;
    for (int i = 0; i < 6; ++i) {
        edges.push_back(Simplex({i, (i + 1) % 6}));
        edges.push_back(Simplex({6 + i, 6 + (i + 1) % 6}));
    }
    return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex torus7()
{
    // cyclic 2-neighborly triangulation: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<Simplex> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back(Simplex({i, (i + 1) % 7, (i + 3) % 7}));
        tris.push_back(Simplex({i, (i + 2) % 7, (i + 3) % 7}));
    }
    return SimplicialComplex::from_maximal(tris);
}

SimplicialComplex sphere_s2()
{
    return SimplicialComplex::from_maximal(
        {Simplex({0, 1, 2}), Simplex({0, 1, 3}), Simplex({0, 2, 3}), Simplex({1, 2, 3})});
}

SimplicialComplex full_simplex(int dim)
{
    std::vector<Vertex> v;
    for (int i = 0; i <= dim; ++i)
        v.push_back(i);
    return SimplicialComplex::from_maximal({Simplex(v)});
}

} // namespace ihx::spaces
