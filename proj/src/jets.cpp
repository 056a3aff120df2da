#include "csbp/jets.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace csbp {

namespace {

void enumerate_indices(int d, int deg, std::vector<MultiIndex>& out) {
    // graded order: total degree first, then lexicographic within a degree
    MultiIndex a(d);
    for (int s = 0; s <= deg; ++s) {
        // enumerate all a with |a| = s in lexicographic order
        std::vector<int> cur(static_cast<size_t>(d), 0);
        // recursive fill without recursion: odometer over first d-1 slots
        // simplest: recursive lambda
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == d - 1) {
                cur[static_cast<size_t>(pos)] = rem;
                MultiIndex m(d);
                m.e.assign(cur.begin(), cur.end());
                out.push_back(m);
                return;
            }
            for (int v = rem; v >= 0; --v) {
                cur[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, rem - v);
            }
        };
        rec(rec, 0, s);
    }
}

} // namespace

uint64_t JetSpace::key(const MultiIndex& a) {
    // exponents stay <= 15 for every space we build (degree cap is 8)
    uint64_t k = 0;
    for (int i = 0; i < a.dim(); ++i) k = (k << 4) | static_cast<uint64_t>(a[i] & 0xF);
    return k;
}

JetSpace::JetSpace(int d, int deg) : d_(d), deg_(deg) {
    enumerate_indices(d, deg, idx_);
    tot_.reserve(idx_.size());
    for (size_t r = 0; r < idx_.size(); ++r) {
        tot_.push_back(idx_[r].total());
        rank_[key(idx_[r])] = static_cast<int>(r);
    }
    // all (a,b) with |a|+|b| <= deg, c = a+b
    for (size_t ia = 0; ia < idx_.size(); ++ia) {
        for (size_t ib = 0; ib < idx_.size(); ++ib) {
            if (tot_[ia] + tot_[ib] > deg_) continue;
            MultiIndex c = idx_[ia] + idx_[ib];
            triples_.push_back({static_cast<int>(ia), static_cast<int>(ib), rank(c)});
        }
    }
}

int JetSpace::rank(const MultiIndex& a) const {
    auto it = rank_.find(key(a));
    if (it == rank_.end()) throw ContractError("multi-index " + a.str() + " outside jet space");
    return it->second;
}

const JetSpace& JetSpace::get(int d, int deg) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<JetSpace>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{d, deg}];
    if (!slot) slot.reset(new JetSpace(d, deg));
    return *slot;
}

Jet Jet::variable(const JetSpace& space, int i, double value) {
    Jet j(space);
    j.c[0] = value;
    if (space.degree() >= 1) j.c[static_cast<size_t>(space.rank(MultiIndex::unit(space.dim(), i)))] = 1.0;
    return j;
}

Jet& Jet::operator+=(const Jet& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (double& x : c) x *= s;
    return *this;
}

Jet& Jet::axpy(double a, const Jet& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += a * o.c[i];
    return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, double s) { return a *= s; }

Jet mul(const Jet& a, const Jet& b) {
    Jet r(*a.sp);
    for (const auto& t : a.sp->mul_triples())
        r.c[static_cast<size_t>(t.c)] += a.c[static_cast<size_t>(t.a)] * b.c[static_cast<size_t>(t.b)];
    return r;
}

Jet jet_exp(const Jet& a) {
    const JetSpace& sp = *a.sp;
    Jet n = a;
    n.c[0] = 0.0;
    Jet r = Jet::constant(sp, 1.0);
    Jet term = Jet::constant(sp, 1.0);
    for (int k = 1; k <= sp.degree(); ++k) {
        term = mul(term, n);
        term *= 1.0 / k;
        r += term;
    }
    double ev = std::exp(a.value());
    r *= ev;
    return r;
}

Jet compose_series(const std::vector<double>& series, const Jet& a) {
    const JetSpace& sp = *a.sp;
    Jet n = a;
    n.c[0] = 0.0;
    // Horner on the nilpotent part
    int top = std::min<int>(sp.degree(), static_cast<int>(series.size()) - 1);
    Jet r = Jet::constant(sp, top >= 0 ? series[static_cast<size_t>(top)] : 0.0);
    for (int k = top - 1; k >= 0; --k) {
        r = mul(r, n);
        r.c[0] += series[static_cast<size_t>(k)];
    }
    return r;
}

Jet compose(const Jet& outer, const std::vector<Jet>& inner) {
    const JetSpace& osp = *outer.sp;
    const JetSpace& isp = *inner.front().sp;
    if (osp.dim() != static_cast<int>(inner.size()))
        throw ContractError("compose: outer dimension does not match inner jet count");

    // centred inner jets and their powers up to the truncation degree
    int deg = isp.degree();
    std::vector<std::vector<Jet>> pw(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) {
        Jet n = inner[i];
        n.c[0] = 0.0;
        pw[i].resize(static_cast<size_t>(deg) + 1);
        pw[i][0] = Jet::constant(isp, 1.0);
        for (int j = 1; j <= deg; ++j) pw[i][static_cast<size_t>(j)] = mul(pw[i][static_cast<size_t>(j - 1)], n);
    }

    Jet r(isp);
    for (int ra = 0; ra < osp.size(); ++ra) {
        double ga = outer.c[static_cast<size_t>(ra)];
        if (ga == 0.0) continue;
        const MultiIndex& a = osp.index(ra);
        if (a.total() > deg) continue;
        Jet mono = Jet::constant(isp, 1.0);
        bool first = true;
        for (int i = 0; i < a.dim(); ++i) {
            if (a[i] == 0) continue;
            if (first) {
                mono = pw[static_cast<size_t>(i)][static_cast<size_t>(a[i])];
                first = false;
            } else {
                mono = mul(mono, pw[static_cast<size_t>(i)][static_cast<size_t>(a[i])]);
            }
        }
        r.axpy(ga, mono);
    }
    return r;
}

} // namespace csbp
