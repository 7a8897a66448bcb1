#pragma once

// Exact lattice-point counting in weight slices {g : g H >= 0, g sigma = target}
// and the brute-force Kostant partition function.

#include <string>
#include <vector>

#include "iart/cone.hpp"
#include "iart/linalg.hpp"

namespace iart {

struct SlicePolytope {
    IMat H;       // ambient x columns
    IMat sigma;   // ambient x grading coordinates
    IVec target;  // one entry per grading coordinate
};

// Grading matrix of the cone's ice quiver restricted to the ambient vertices.
IMat cone_sigma(const ConeInputs& in, const ConeSpec& c);

// Concatenates the weights of a target in the order the variant's grading expects:
//   full2: (mu, nu, lambda);  u: (gamma);  sharp: (mu, lambda).
IVec slice_target(Variant v, const std::vector<IVec>& weights);

enum class CountStatus { Ok, Unbounded };

struct CountResult {
    CountStatus status = CountStatus::Ok;
    i64 count = 0;
    IVec ray;        // g-space recession direction when Unbounded
    i64 nodes = 0;   // DFS nodes visited
};

// Precomputes the integer solution lattice of g sigma = t once per (H, sigma);
// count() then handles each target.
class SliceCounter {
public:
    SliceCounter(const IMat& H, const IMat& sigma);

    CountResult count(const IVec& target) const;
    // An integer g on the slice, or empty if g sigma = target has no integer solution.
    IVec particular(const IVec& target) const;
    // Basis of the integer kernel {z : z sigma = 0}, one row per free coordinate.
    const IMat& kernel() const { return K_; }
    bool bounded() const { return ray_.empty(); }

private:
    IMat H_, sigma_;
    std::vector<std::vector<Z>> U_;  // unimodular, U sigma = E in row echelon form
    std::vector<std::vector<Z>> E_;
    std::vector<int> pivots_;
    IMat K_;
    IMat KH_;                        // K H
    std::vector<int> order_;         // DFS coordinate order over kernel coordinates
    IVec ray_;                       // g-space recession direction, empty when slices are bounded
};

CountResult count_lattice(const SlicePolytope& s);

// #{h >= 0 : sum_k h_k rho_k = gamma} over positive roots rho_k (weight coordinates);
// zero when gamma is not a nonnegative integer combination of simple roots.
i64 kostant_partition(const IMat& cartan, const IVec& gamma);

// Checks g H >= 0 and g sigma = target.
bool in_slice(const SlicePolytope& s, const IVec& g);

}  // namespace iart
