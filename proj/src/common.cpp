#include "iart/common.hpp"

#include <sstream>

namespace iart {

IMat zeros(int rows, int cols) { return IMat(rows, IVec(cols, 0)); }

IMat identity(int n) {
    IMat m = zeros(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat transpose(const IMat& a) {
    if (a.empty()) return {};
    IMat t = zeros(int(a[0].size()), int(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IMat matmul(const IMat& a, const IMat& b) {
    if (a.empty()) return {};
    size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    IMat c = zeros(int(a.size()), int(cols));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IVec vecmat(const IVec& v, const IMat& m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    IVec r(cols, 0);
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (size_t j = 0; j < cols; ++j) r[j] += v[k] * m[k][j];
    }
    return r;
}

IVec add(const IVec& a, const IVec& b) {
    IVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IMat add(const IMat& a, const IMat& b) {
    IMat r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = add(a[i], b[i]);
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

IVec scale(const IVec& a, i64 s) {
    IVec r(a);
    for (auto& x : r) x *= s;
    return r;
}

i64 dot(const IVec& a, const IVec& b) {
    i64 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec unit(int n, int i) {
    IVec v(n, 0);
    v[i] = 1;
    return v;
}

bool is_zero(const IVec& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

bool is_nonneg(const IVec& v) {
    for (auto x : v)
        if (x < 0) return false;
    return true;
}

std::string to_string(const IVec& v, char sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

IVec parse_ivec(const std::string& s) {
    IVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long long x = 0;
        try {
            x = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw InvalidInput("not an integer vector: '" + s + "'");
        }
        if (pos != tok.size() && tok.find_first_not_of(' ', pos) != std::string::npos)
            throw InvalidInput("not an integer vector: '" + s + "'");
        v.push_back(x);
    }
    if (v.empty()) throw InvalidInput("empty integer vector");
    return v;
}

}  // namespace iart
