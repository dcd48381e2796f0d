#pragma once

#include "confpersist/complex.hpp"

#include <optional>
#include <vector>

namespace confpersist {

enum class Ring { Z2, Z };

// Cochain on a Snapshot, coefficients indexed by the snapshot's simplex
// order in the given degree. Z/2 cochains keep coefficients in {0,1}.
struct Cochain {
    int degree = 0;
    Ring ring = Ring::Z2;
    std::vector<long long> c;
    double scale = 0;
    bool has_scale = false;

    static Cochain zero(const Snapshot& k, int degree, Ring ring);

    bool is_zero() const {
        for (auto v : c)
            if (v) return false;
        return true;
    }

    void normalize_mod2() {
        for (auto& v : c) v = ((v % 2) + 2) % 2;
    }
};

// delta x, one degree up.
Cochain coboundary(const Cochain& x, const Snapshot& k);

bool is_cocycle(const Cochain& z, const Snapshot& k);

// Front-face/back-face product on ordered (increasing) simplices:
// (a cup b)(v_0..v_{p+q}) = a(v_0..v_p) * b(v_p..v_{p+q}).
Cochain cup_product(const Cochain& a, const Cochain& b, const Snapshot& k);

struct CoboundaryCertificate {
    bool coboundary = false;
    std::optional<Cochain> primitive; // x with delta x = z, when solvable
};

// Solves delta x = z; linear solve over Z/2, Smith-based solve over Z.
// Throws NotACocycle when z is not closed.
CoboundaryCertificate is_coboundary(const Cochain& z, const Snapshot& k);

// Restriction of a cochain to a sub-snapshot (matching simplices by vertex
// tuple). Every simplex of `sub` must be present in `k`.
Cochain restrict_cochain(const Cochain& z, const Snapshot& k, const Snapshot& sub);

} // namespace confpersist
