#ifndef IHX_SPACES_HPP
#define IHX_SPACES_HPP

#include "ihx/simplicial.hpp"

namespace ihx::spaces {

SimplicialComplex point();
SimplicialComplex two_points();
/// Boundary of a triangle: the smallest S^1.
SimplicialComplex hollow_triangle();
/// Hexagonal circle, vertices 0..5.
SimplicialComplex hexagon();
/// Two disjoint hexagonal circles, vertices 0..11.
SimplicialComplex two_hexagons();
/// The 7-vertex (Csaszar) triangulation of the torus.
SimplicialComplex torus7();
/// Boundary of the 3-simplex: the smallest S^2.
SimplicialComplex sphere_s2();
SimplicialComplex full_simplex(int dim);

} // namespace ihx::spaces

#endif
