#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iart {

using i64 = std::int64_t;
using IVec = std::vector<i64>;
using IMat = std::vector<IVec>;

// Malformed user input: unknown type, bad orientation, non-dominant weight, ...
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical invariant that must hold by construction failed.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested computation is outside what the library supports (valued cones, caps).
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvariantViolation(what);
}

IMat zeros(int rows, int cols);
IMat identity(int n);
IMat transpose(const IMat& a);
IMat matmul(const IMat& a, const IMat& b);
IVec vecmat(const IVec& v, const IMat& m);  // row vector times matrix
IVec add(const IVec& a, const IVec& b);
IMat add(const IMat& a, const IMat& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, i64 s);
i64 dot(const IVec& a, const IVec& b);
IVec unit(int n, int i);
bool is_zero(const IVec& v);
bool is_nonneg(const IVec& v);
std::string to_string(const IVec& v, char sep = ',');
IVec parse_ivec(const std::string& s);  // "1,0,-2"

}  // namespace iart
