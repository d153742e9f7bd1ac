#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pslrack/config.hpp"
#include "pslrack/field.hpp"

namespace pslrack {

enum class GroupTag { SL, PSL, PGL };

inline const char* tag_name(GroupTag t) {
    switch (t) {
        case GroupTag::SL: return "SL";
        case GroupTag::PSL: return "PSL";
        case GroupTag::PGL: return "PGL";
    }
    return "?";
}

inline long group_order(GroupTag t, int q) {
    long base = (long)(q - 1) * q * (q + 1);
    int e = (q - 1) % 2 == 0 ? 2 : 1;
    switch (t) {
        case GroupTag::SL: return base;        // (q-1)q(q+1), = |SL(2,q)|
        case GroupTag::PSL: return base / e;
        case GroupTag::PGL: return base;
    }
    return 0;
}

/// The projective line P(1,q): points 0..q-1 are field elements, q is the
/// point at infinity.
inline int proj_infinity(const Field& F) { return F.q(); }

/// Element of SL(2,q), PSL(2,q) or PGL(2,q), stored as a canonical 2x2
/// representative:
///  - SL: the matrix itself (det 1);
///  - PSL: det 1, and of {M, -M} the one whose first nonzero entry in
///    reading order a,b,c,d is least in the field's total order;
///  - PGL: scaled so the first nonzero entry in reading order is 1.
class ProjElement {
public:
    ProjElement() : tag_(GroupTag::PSL), F_(nullptr), a_(0), b_(0), c_(0), d_(0) {}

    static ProjElement make(GroupTag tag, const Field& F, int a, int b, int c,
                            int d) {
        int det = F.sub(F.mul(a, d), F.mul(b, c));
        require(det != 0, "matrix is singular");
        switch (tag) {
            case GroupTag::SL:
                require(det == 1, "SL element must have determinant 1");
                break;
            case GroupTag::PSL: {
                require(F.is_square(det),
                        "PSL element must have square determinant");
                if (det != 1) {
                    int s = F.inv(F.sqrt_of(det));
                    a = F.mul(a, s);
                    b = F.mul(b, s);
                    c = F.mul(c, s);
                    d = F.mul(d, s);
                }
                // choose between M and -M
                int first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
                if (F.neg(first) < first) {
                    a = F.neg(a);
                    b = F.neg(b);
                    c = F.neg(c);
                    d = F.neg(d);
                }
                break;
            }
            case GroupTag::PGL: {
                int first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
                if (first != 1) {
                    int s = F.inv(first);
                    a = F.mul(a, s);
                    b = F.mul(b, s);
                    c = F.mul(c, s);
                    d = F.mul(d, s);
                }
                break;
            }
        }
        ProjElement g;
        g.tag_ = tag;
        g.F_ = &F;
        g.a_ = a;
        g.b_ = b;
        g.c_ = c;
        g.d_ = d;
        return g;
    }

    static ProjElement identity(GroupTag tag, const Field& F) {
        return make(tag, F, 1, 0, 0, 1);
    }

    GroupTag tag() const { return tag_; }
    const Field& field() const { return *F_; }
    int a() const { return a_; }
    int b() const { return b_; }
    int c() const { return c_; }
    int d() const { return d_; }

    int det() const {
        return F_->sub(F_->mul(a_, d_), F_->mul(b_, c_));
    }
    int trace() const { return F_->add(a_, d_); }

    bool is_identity() const {
        return b_ == 0 && c_ == 0 && a_ == d_ && a_ != 0;
    }

    ProjElement operator*(const ProjElement& o) const {
        check(o);
        const Field& F = *F_;
        return make(tag_, F,
                    F.add(F.mul(a_, o.a_), F.mul(b_, o.c_)),
                    F.add(F.mul(a_, o.b_), F.mul(b_, o.d_)),
                    F.add(F.mul(c_, o.a_), F.mul(d_, o.c_)),
                    F.add(F.mul(c_, o.b_), F.mul(d_, o.d_)));
    }

    ProjElement inverse() const {
        const Field& F = *F_;
        // adjugate; determinant scaling is absorbed by canonicalization
        return make(tag_, F, d_, F.neg(b_), F.neg(c_), a_);
    }

    bool operator==(const ProjElement& o) const {
        return tag_ == o.tag_ && F_ == o.F_ && a_ == o.a_ && b_ == o.b_ &&
               c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const ProjElement& o) const { return !(*this == o); }

    uint64_t key() const {
        uint64_t q = (uint64_t)F_->q();
        return (((uint64_t)a_ * q + b_) * q + c_) * q + d_;
    }
    bool operator<(const ProjElement& o) const { return key() < o.key(); }

    /// Action on the projective line.
    int apply(int z) const {
        const Field& F = *F_;
        int inf = F.q();
        if (z == inf) {
            if (c_ == 0) return inf;
            return F.div(a_, c_);
        }
        int den = F.add(F.mul(c_, z), d_);
        int num = F.add(F.mul(a_, z), b_);
        if (den == 0) return inf;
        return F.div(num, den);
    }

    std::string str() const {
        return "[" + std::to_string(a_) + " " + std::to_string(b_) + "; " +
               std::to_string(c_) + " " + std::to_string(d_) + "]";
    }

private:
    void check(const ProjElement& o) const {
        require(F_ == o.F_ && tag_ == o.tag_,
                "elements of different groups");
    }
    GroupTag tag_;
    const Field* F_;
    int a_, b_, c_, d_;
};

inline ProjElement conjugate(const ProjElement& g, const ProjElement& h) {
    return g * h * g.inverse();
}

inline int element_order(const ProjElement& g) {
    ProjElement x = g;
    int ord = 1;
    while (!x.is_identity()) {
        x = x * g;
        ++ord;
    }
    return ord;
}

inline ProjElement element_pow(const ProjElement& g, long m) {
    ProjElement base = m < 0 ? g.inverse() : g;
    unsigned long e = m < 0 ? (unsigned long)(-m) : (unsigned long)m;
    ProjElement r = ProjElement::identity(g.tag(), g.field());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Number of fixed points on P(1,q): 0, 1, 2, or q+1 (identity only).
inline int fixed_points(const ProjElement& g) {
    const Field& F = g.field();
    int count = 0;
    for (int z = 0; z <= F.q(); ++z)
        if (g.apply(z) == z) ++count;
    return count;
}

/// Characteristic polynomial x^2 - Tx + D modulo (T,D) ~ (lT, l^2 D).
/// Canonical form: T = 1 if the trace is nonzero, otherwise T = 0 and D is
/// the least member of its square-class coset.
class CharPolyClass {
public:
    CharPolyClass() : F_(nullptr), t_(0), d_(0) {}
    CharPolyClass(const Field& F, int t, int d) : F_(&F) {
        require(d != 0, "characteristic polynomial must have nonzero constant");
        if (t != 0) {
            int s = F.inv(t);
            t_ = 1;
            d_ = F.mul(d, F.mul(s, s));
        } else {
            t_ = 0;
            d_ = least_in_square_coset(F, d);
        }
    }

    static int least_in_square_coset(const Field& F, int d) {
        int best = -1;
        for (int s = 1; s < F.q(); ++s) {
            if (!F.is_square(s)) continue;
            int cand = F.mul(d, s);
            if (best < 0 || cand < best) best = cand;
        }
        return best;
    }

    const Field& field() const { return *F_; }
    int t() const { return t_; }
    int d() const { return d_; }

    bool operator==(const CharPolyClass& o) const {
        return F_ == o.F_ && t_ == o.t_ && d_ == o.d_;
    }
    bool operator!=(const CharPolyClass& o) const { return !(*this == o); }

    /// Number of roots in F_q (0, 1 or 2); well-defined on the class.
    int root_count() const {
        const Field& F = *F_;
        int cnt = 0;
        for (int x = 0; x < F.q(); ++x) {
            int v = F.add(F.sub(F.mul(x, x), F.mul(t_, x)), d_);
            if (v == 0) ++cnt;
        }
        return cnt;
    }

    /// Image under a Galois automorphism (applied to T and D, re-canonicalized).
    CharPolyClass galois(int k) const {
        return CharPolyClass(*F_, F_->frobenius(k, t_), F_->frobenius(k, d_));
    }

    std::string str() const {
        return "x^2-" + std::to_string(t_) + "x+" + std::to_string(d_);
    }

private:
    const Field* F_;
    int t_, d_;
};

inline CharPolyClass char_poly(const ProjElement& g) {
    return CharPolyClass(g.field(), g.trace(), g.det());
}

/// Full enumeration of SL/PSL/PGL(2,q); the result size matches the order
/// formula. Deterministic order.
inline std::vector<ProjElement> enumerate_group(GroupTag tag, const Field& F) {
    require(F.q() <= Limits::get().max_enum_q,
            "enumeration bound exceeded for q=" + std::to_string(F.q()));
    const int q = F.q();
    std::vector<ProjElement> out;
    out.reserve(group_order(tag, q));
    if (tag == GroupTag::SL || tag == GroupTag::PSL) {
        auto emit = [&](int a, int b, int c, int d) {
            if (tag == GroupTag::SL) {
                out.push_back(ProjElement::make(tag, F, a, b, c, d));
            } else {
                ProjElement g = ProjElement::make(tag, F, a, b, c, d);
                // each PSL element appears once per SL preimage; keep the
                // canonical representative occurrence only
                if (g.a() == a && g.b() == b && g.c() == c && g.d() == d)
                    out.push_back(g);
            }
        };
        for (int a = 1; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    int d = F.div(F.add(1, F.mul(b, c)), a);
                    emit(a, b, c, d);
                }
        for (int b = 1; b < q; ++b) {
            int c = F.neg(F.inv(b));
            for (int d = 0; d < q; ++d) emit(0, b, c, d);
        }
    } else {
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    if (F.sub(d, F.mul(b, c)) == 0) continue; // det with a=1
                    out.push_back(ProjElement::make(tag, F, 1, b, c, d));
                }
        for (int c = 1; c < q; ++c)
            for (int d = 0; d < q; ++d)
                out.push_back(ProjElement::make(tag, F, 0, 1, c, d));
    }
    return out;
}

} // namespace pslrack
