#pragma once

// Classical oracles: Freudenthal weight multiplicities, the Weyl dimension
// formula, Brauer-Klimyk tensor multiplicities and the Littlewood-Richardson rule.
// Weights are in fundamental-weight coordinates with the LiE Cartan convention.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "iart/linalg.hpp"

namespace iart {

using WeightMults = std::map<IVec, i64>;

class LieOracle {
public:
    explicit LieOracle(const IMat& cartan);

    const IMat& cartan() const { return cartan_; }
    int rank() const { return int(cartan_.size()); }

    bool dominant(const IVec& w) const;
    // Dominant W-conjugate of w; parity receives the number of reflections used mod 2.
    IVec dominant_conjugate(IVec w, int* parity = nullptr) const;
    // Symmetric W-invariant form on weights.
    Q form(const IVec& a, const IVec& b) const;

    // All weights of L(mu) with multiplicities; memoized.
    const WeightMults& freudenthal(const IVec& mu) const;
    Z weyl_dimension(const IVec& mu) const;

    i64 tensor_multiplicity(const IVec& mu, const IVec& nu, const IVec& lambda) const;
    std::map<IVec, i64> tensor_decomposition(const IVec& mu, const IVec& nu) const;

    // Persist / restore memoized dominant multiplicities (JSON, with a format version).
    void save_cache(const std::string& path) const;
    void load_cache(const std::string& path);

private:
    IMat cartan_;
    QMat wform_;                     // Gram matrix of the form on fundamental weights
    std::vector<IVec> pos_roots_;    // weight coordinates
    std::vector<IVec> pos_simple_;   // simple-root coordinates
    mutable std::mutex mu_;
    mutable std::map<IVec, std::unique_ptr<WeightMults>> memo_;
    mutable std::map<IVec, std::map<IVec, i64>> dominant_memo_;

    std::map<IVec, i64> dominant_mults(const IVec& mu) const;
};

// Type A_n: weight (m_1..m_n) <-> partition with n+1 parts.
std::vector<i64> weight_to_partition(const IVec& w);

// Number of LR tableaux of shape c/a and content b.
i64 lr_coefficient(const std::vector<i64>& a, const std::vector<i64>& b, const std::vector<i64>& c);

// c^lambda_{mu nu} for sl_{n+1} through the LR rule (adds full columns to balance sizes).
i64 lr_tensor_multiplicity(const IVec& mu, const IVec& nu, const IVec& lambda);

}  // namespace iart
