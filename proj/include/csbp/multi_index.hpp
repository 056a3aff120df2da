#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "csbp/errors.hpp"

namespace csbp {

using Vec = std::vector<double>;

// Element of Z^d_{>=0}: sample sizes k, outdegrees, derivative orders.
struct MultiIndex {
    std::vector<int> e;

    MultiIndex() = default;
    explicit MultiIndex(int d) : e(static_cast<size_t>(d), 0) {}
    MultiIndex(std::initializer_list<int> init) : e(init) {}
    static MultiIndex unit(int d, int i) {
        MultiIndex a(d);
        a.e[static_cast<size_t>(i)] = 1;
        return a;
    }

    int dim() const { return static_cast<int>(e.size()); }
    int operator[](int i) const { return e[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<size_t>(i)]; }

    int total() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_zero() const { return total() == 0; }
    bool is_unit(int i) const { return total() == 1 && e[static_cast<size_t>(i)] == 1; }

    bool operator==(const MultiIndex& o) const { return e == o.e; }
    bool operator!=(const MultiIndex& o) const { return e != o.e; }

    // componentwise alpha <= beta
    bool leq(const MultiIndex& o) const {
        for (int i = 0; i < dim(); ++i)
            if (e[static_cast<size_t>(i)] > o.e[static_cast<size_t>(i)]) return false;
        return true;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (int i = 0; i < dim(); ++i) r.e[static_cast<size_t>(i)] += o.e[static_cast<size_t>(i)];
        return r;
    }
    MultiIndex operator-(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (int i = 0; i < dim(); ++i) r.e[static_cast<size_t>(i)] -= o.e[static_cast<size_t>(i)];
        return r;
    }

    // alpha! as a double (orders used here stay far below overflow)
    double factorial() const {
        double f = 1.0;
        for (int x : e)
            for (int j = 2; j <= x; ++j) f *= j;
        return f;
    }

    // lambda^alpha with the 0^0 = 1 convention
    double pow(const Vec& lambda) const {
        double p = 1.0;
        for (int i = 0; i < dim(); ++i) {
            int a = e[static_cast<size_t>(i)];
            if (a == 0) continue;
            p *= std::pow(lambda[static_cast<size_t>(i)], a);
        }
        return p;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[static_cast<size_t>(i)]);
        }
        return s + ")";
    }
};

// lambda ≻ alpha: lambda_i > 0 wherever alpha_i > 0
inline bool dominates(const Vec& lambda, const MultiIndex& alpha) {
    for (int i = 0; i < alpha.dim(); ++i)
        if (alpha[i] > 0 && !(lambda[static_cast<size_t>(i)] > 0.0)) return false;
    return true;
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace csbp
