#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "csbp/multi_index.hpp"

namespace csbp {

// Index tables for truncated multivariate Taylor arithmetic in d variables
// at total degree <= deg. Immutable once built; shared between jets.
class JetSpace {
  public:
    static const JetSpace& get(int d, int deg);

    int dim() const { return d_; }
    int degree() const { return deg_; }
    int size() const { return static_cast<int>(idx_.size()); }

    const MultiIndex& index(int r) const { return idx_[static_cast<size_t>(r)]; }
    int rank(const MultiIndex& a) const;
    int total_degree(int r) const { return tot_[static_cast<size_t>(r)]; }

    struct MulTriple {
        int a, b, c;
    };
    const std::vector<MulTriple>& mul_triples() const { return triples_; }

  private:
    JetSpace(int d, int deg);
    int d_, deg_;
    std::vector<MultiIndex> idx_; // graded order: by |alpha|, then lexicographic
    std::vector<int> tot_;
    std::unordered_map<uint64_t, int> rank_;
    std::vector<MulTriple> triples_;
    static uint64_t key(const MultiIndex& a);
};

// Truncated Taylor polynomial of one scalar output. coeff[rank(alpha)] is the
// series coefficient, so D^alpha f = coeff * alpha!. Arithmetic is exact
// truncation of the formal power series at the space's total degree.
struct Jet {
    const JetSpace* sp = nullptr;
    std::vector<double> c;

    Jet() = default;
    explicit Jet(const JetSpace& space) : sp(&space), c(static_cast<size_t>(space.size()), 0.0) {}
    static Jet constant(const JetSpace& space, double v) {
        Jet j(space);
        j.c[0] = v;
        return j;
    }
    // the coordinate function lambda_i, as a jet centered anywhere
    static Jet variable(const JetSpace& space, int i, double value);

    double value() const { return c[0]; }
    double coeff(const MultiIndex& a) const { return c[static_cast<size_t>(sp->rank(a))]; }
    double deriv(const MultiIndex& a) const { return coeff(a) * a.factorial(); }

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(double s);
    Jet& axpy(double a, const Jet& o); // *this += a*o
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, double s);
Jet mul(const Jet& a, const Jet& b);

// exp(a) via the nilpotent series exp(v + N) = e^v sum N^n/n!
Jet jet_exp(const Jet& a);

// sum_n series[n] * (a - a.value())^n; series[n] must be f^(n)(a.value())/n!.
// This is how analytic functions given by 1-d Taylor data act on jets.
Jet compose_series(const std::vector<double>& series, const Jet& a);

// Multivariate composition: outer is a jet of g at the point
// p = (inner[0].value(), ..., inner[m-1].value()), inner jets share a space.
// Returns the jet of g(F_1(.),...,F_m(.)) on the inner space.
Jet compose(const Jet& outer, const std::vector<Jet>& inner);

} // namespace csbp
