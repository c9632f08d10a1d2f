#pragma once

#include <complex>

#include "poinc/minkowski.hpp"

namespace poinc {

/// A 1-morphism of the Poincare 2-group: a Lorentz transform.
struct OneMorphism
{
    LorentzTransform g;
};

/// A 2-morphism g => g labelled by a translation x.
struct TwoMorphism
{
    LorentzTransform g;
    FourVector x;
};

/// Character of the translation group, identified with a point of M4.
struct Character
{
    FourVector chi;
};

/// (g, a.x + b.x); the two 1-morphisms must agree within `tol`.
TwoMorphism vcompose(const TwoMorphism& a,
                     const TwoMorphism& b,
                     double tol = default_tolerances.group);

/// (a.g b.g, a.x + a.g b.x)
TwoMorphism hcompose(const TwoMorphism& a, const TwoMorphism& b);

TwoMorphism whisker_left(const OneMorphism& g, const TwoMorphism& b);
TwoMorphism whisker_right(const TwoMorphism& a, const OneMorphism& g);

TwoMorphism identity_2cell(const OneMorphism& g);

/// exp(i <chi, x>) with the Minkowski pairing.
std::complex<double> pair_character(const Character& chi, const FourVector& x);

/// Dual action, chosen so that pair(act_dual(g, chi), act(g, x)) = pair(chi, x).
Character act_dual(const LorentzTransform& g, const Character& chi);

double max_abs_difference(const TwoMorphism& a, const TwoMorphism& b);

}  // namespace poinc
