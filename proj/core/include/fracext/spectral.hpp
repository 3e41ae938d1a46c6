#pragma once

#include <vector>

#include "fracext/rational.hpp"

namespace fracext {

// Second-largest absolute eigenvalue of the normalized adjacency operator of
// kneser(p,q).  The one floating-point computation in the library; a sanity
// gate, never part of an exact certificate.
double second_eigenvalue(int p, int q);

struct SpectrumEntry {
    Integer eigenvalue;  // adjacency (unnormalized) eigenvalue
    Integer multiplicity;
};

// Exact integer spectrum of the kneser(p,q) adjacency matrix, certified by
// annihilation (the product of (A - lambda I) over the candidate eigenvalues
// vanishes) and by reconciling multiplicities with the traces of powers.
// Requires p > 2q so the candidate eigenvalues are distinct.
std::vector<SpectrumEntry> kneser_spectrum_certified(int p, int q);

}  // namespace fracext
