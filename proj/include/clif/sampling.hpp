#pragma once
#include <random>

#include "clif/dirac.hpp"
#include "clif/m8.hpp"

namespace clif {

using Rng = std::mt19937_64;

double gauss(Rng& rng);
Multivector random_multivector(Rng& rng, const Signature& s, Field f = Field::real);
Multivector random_form(Rng& rng, const Signature& s, int k);
// a random vector with |g(v,v)| >= 0.1
Multivector random_nonisotropic_vector(Rng& rng, const Signature& s);
Multivector random_versor(Rng& rng, const Signature& s, int factors);
// unit versor of `factors` unit vectors
Multivector random_unit_versor(Rng& rng, const Signature& s, int factors);

DiracSpinor random_spinor(Rng& rng, Rep rep = Rep::weyl);
// Weyl spinors with left and right halves orthogonal; |lambda| = 1 gives class 5
DiracSpinor random_singular_spinor(Rng& rng, double lambda_abs);
// class 6: one chiral half vanishes
DiracSpinor random_dipole_spinor(Rng& rng);

RVec random_m8(Rng& rng);
// projections onto the gamma9 = +1 / -1 halves
RVec chiral_part(const RVec& x, int chirality);

}  // namespace clif
