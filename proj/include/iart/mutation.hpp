#pragma once

// Skew-symmetrizable mutation of exchange matrices, g-vectors, dual g-vectors
// and dual F-polynomials, the mutation sequences mu_sqrt_l, mu_l, mu_r with
// the relabellings pi, pi^2, and the F-polynomial route to subrepresentations.
//
// B-matrices here are square over all vertices of an ice quiver (local
// indices); b[s][t] > 0 when arrows point s -> t.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "iart/arpresent.hpp"
#include "iart/linalg.hpp"

namespace iart {

// Mutation at u of a square exchange matrix.  The caller decides which
// vertices are mutable; see mutate_b_checked.
IMat mutate_b(const IMat& b, int u);
IMat mutate_b_checked(const IMat& b, const std::vector<bool>& frozen, int u);
IMat mutate_sequence(IMat b, const std::vector<int>& seq);

// g-vector mutation for a g-coherent vector.
IVec mutate_g(const IVec& g, const IMat& b, int u);

using Poly = std::map<IVec, Z>;  // exponent vector -> coefficient

struct DualTracked {
    IVec gdual;
    Poly fpoly;
};

// Mutation of (g^vee, F^vee) at u, assuming g^vee-coherence.  Throws
// InvariantViolation if the result is not a polynomial with constant term 1
// and positive coefficients.
DualTracked mutate_dual_state(const DualTracked& s, const IMat& b, int u);

struct MuSequences {
    std::vector<int> sqrt_l, l, r;  // local vertex indices, applied left to right
    std::vector<int> pi, pi2;       // local index -> local index
    std::vector<int> pi_inv, pi2_inv;
};

// Requires a full2 ice quiver.
MuSequences mu_sequences(const IceQuiver& iq);

// Restricted rows of b relabelled through p:  out[p[u]][p[v]] = b[u][v].
IMat relabel(const IMat& b, const std::vector<int>& p);
bool same_restricted(const IMat& a, const IMat& b, const std::vector<int>& mut);

struct CyclicReport {
    bool sqrt_l_pi = false;   // mu_sqrt_l(B) and pi(B) agree on mutable rows
    bool l_pi2 = false;       // mu_l(B) and pi^2(B) agree on mutable rows
    bool l_cubed = false;     // mu_l^3(B) = B on mutable rows
    bool g_identity = false;  // mu_sqrt_l^{-1}(e_{i,t}) = -e_{i,t_i-t}
    std::vector<std::string> failures;
    bool all() const { return sqrt_l_pi && l_pi2 && l_cubed && g_identity; }
};

CyclicReport verify_cyclic(const IceQuiver& full2);

struct FPolySubreps {
    bool precondition = false;  // mu_l(B) = pi^2(B) on mutable rows
    // Strict nonzero subrepresentation dimension vectors over the full2 vertices.
    std::set<IVec> negative;  // T_{O_i^-}
    std::set<IVec> neutral;   // T_{Id_{i*}}
    std::set<IVec> positive;  // T_{O_i^+}
    Poly f_negative, f_neutral, f_positive;
};

FPolySubreps tv_subreps_via_fpoly(const IceQuiver& full2, int i);

}  // namespace iart
