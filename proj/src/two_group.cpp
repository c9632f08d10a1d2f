#include "poinc/two_group.hpp"

#include <algorithm>

#include "poinc/error.hpp"

namespace poinc {

TwoMorphism vcompose(const TwoMorphism& a, const TwoMorphism& b, double tol)
{
    double scale = std::max(1.0, a.g.matrix().cwiseAbs().maxCoeff());
    if (max_abs_difference(a.g, b.g) > tol * scale)
        throw DomainError("vertical composition needs 2-morphisms on the same 1-morphism");
    return {a.g, a.x + b.x};
}

TwoMorphism hcompose(const TwoMorphism& a, const TwoMorphism& b)
{
    return {a.g * b.g, a.x + act(a.g, b.x)};
}

TwoMorphism whisker_left(const OneMorphism& g, const TwoMorphism& b)
{
    return hcompose(identity_2cell(g), b);
}

TwoMorphism whisker_right(const TwoMorphism& a, const OneMorphism& g)
{
    return hcompose(a, identity_2cell(g));
}

TwoMorphism identity_2cell(const OneMorphism& g)
{
    return {g.g, {}};
}

std::complex<double> pair_character(const Character& chi, const FourVector& x)
{
    return std::polar(1.0, minkowski_dot(chi.chi, x));
}

Character act_dual(const LorentzTransform& g, const Character& chi)
{
    // The Minkowski pairing is L-invariant, so the dual action is the action
    return {act(g, chi.chi)};
}

double max_abs_difference(const TwoMorphism& a, const TwoMorphism& b)
{
    return std::max(max_abs_difference(a.g, b.g), max_abs_difference(a.x, b.x));
}

}  // namespace poinc
