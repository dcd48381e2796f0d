#pragma once

#include "confpersist/cochain.hpp"
#include "confpersist/complex.hpp"

#include <vector>

namespace confpersist {

// Persistence interval in hard-sphere radius coordinates, decreasing-complex
// convention: the class is present for r in [death_r, birth_r), so
// birth_r > death_r and the complex grows as r decreases. Essential classes
// carry death_r = 0 and essential = true (alive at r = 0).
struct Interval {
    int dim = 0;
    double birth_r = 0;
    double death_r = 0;
    bool essential = false;
};

struct Barcode {
    std::vector<Interval> intervals;

    // Number of intervals alive at r in dimension q.
    std::size_t count_at(double r, int q) const;
};

// Interval decomposition of Z/2 homology in dimensions 0..max_dim.
// Simplices are processed by entrance parameter u = -sep/2 with ties broken
// by (dimension, lexicographic vertices).
Barcode compute_persistence(const FilteredComplex& k, int max_dim);

struct BettiSummary {
    long long rank = 0;
    std::vector<long long> torsion; // elementary divisors > 1; empty over Z/2
};

// Betti number (cohomology) of the snapshot complex at radius r.
BettiSummary betti_at(const FilteredComplex& k, double r, int q, Ring ring);
BettiSummary betti_of(const Snapshot& snap, int q, Ring ring);

} // namespace confpersist
