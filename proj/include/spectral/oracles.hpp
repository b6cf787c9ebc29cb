#pragma once

#include <vector>

#include "spectral/keys.hpp"
#include "spectral/rational.hpp"

namespace spectral {

// Brute-force dessin count: enumerate perfect matchings of the labeled
// half-edges on n labeled vertex-cycles, keep connected ones, read the
// genus off the face count, and divide by prod mu_i (the rotation group
// order, which converts arrowed counts into automorphism-weighted ones).
// Budget: sum mu_i <= 12.
Rational dessin_brute(int g, const std::vector<long>& mu, int jobs = 1);

// Brute-force single Hurwitz number: count r-tuples of transpositions in
// S_d whose product has cycle type mu and whose edge graph is connected,
// then normalize by |Aut(mu)| / (r! d!). The normalization is pinned by
// the three unstable anchors H_0((1)), H_0((2)), H_0((1,1)).
// Budget: d <= 5 and r = 2g-2+n+d <= 7.
Rational hurwitz_brute(int g, const std::vector<long>& mu, int jobs = 1);

}  // namespace spectral
