#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "pslrack/config.hpp"
#include "pslrack/error.hpp"

namespace pslrack {

inline bool is_prime(long m) {
    if (m < 2) return false;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

namespace detail {

// Dense polynomials over GF(p), coefficient vector c0..cdeg, no trailing zeros.
using Poly = std::vector<int>;

inline Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
    a = poly_trim(std::move(a));
    while ((int)a.size() >= (int)m.size()) {
        int shift = (int)a.size() - (int)m.size();
        int lead = a.back(); // m is monic
        for (size_t i = 0; i < m.size(); ++i) {
            int& c = a[i + shift];
            c = (c - lead * m[i]) % p;
            if (c < 0) c += p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

inline bool poly_divides(const Poly& d, Poly a, int p) {
    return poly_mod(std::move(a), d, p).empty();
}

// Irreducibility of a monic polynomial over GF(p) by trial division.
inline bool poly_irreducible(const Poly& f, int p) {
    int deg = (int)f.size() - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long k = 0; k < count; ++k) {
            Poly g(d + 1, 0);
            g[d] = 1;
            long t = k;
            for (int i = 0; i < d; ++i) {
                g[i] = (int)(t % p);
                t /= p;
            }
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

} // namespace detail

class FieldElement;

/// The finite field GF(p^n), constructed with the lexicographically least
/// monic irreducible modulus of degree n (coefficient vector read from the
/// leading coefficient down). Elements are indices in [0, q): the element
/// with coefficient vector (c_{n-1},...,c_0) has index sum c_i p^i, and the
/// index order is the total order on elements.
class Field {
public:
    static const Field& get(int p, int n) {
        static std::mutex mtx;
        static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(p, n);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, n))).first;
        return *it->second;
    }

    /// Convenience: GF(q) for a prime power q.
    static const Field& of_order(int q) {
        require(q >= 2, "field order must be at least 2");
        int p = 2;
        while (q % p != 0) {
            ++p;
            require(p <= q, "not a prime power: " + std::to_string(q));
        }
        int n = 0;
        int m = q;
        while (m % p == 0) {
            m /= p;
            ++n;
        }
        require(m == 1, "not a prime power: " + std::to_string(q));
        return get(p, n);
    }

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    /// e = gcd(2, q-1)
    int e() const { return (q_ - 1) % 2 == 0 ? 2 : 1; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        require(a != 0, "inversion of zero");
        return inv_[a];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }

    int pow(int a, long e) const {
        if (a == 0) {
            require(e >= 0, "inversion of zero");
            return e == 0 ? 1 : 0;
        }
        long ord = q_ - 1;
        e %= ord;
        if (e < 0) e += ord;
        int r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// True iff a is zero or a square of a nonzero element. Zero counts as a
    /// square by convention.
    bool is_square(int a) const { return square_[a] != 0; }

    /// Least b with b*b == a, or -1 if a is not a square.
    int sqrt_of(int a) const { return square_[a] ? sqrt_[a] : -1; }

    /// Frobenius x -> x^{p^k}; the n maps k = 0..n-1 are all of Gal(F_q/F_p).
    int frobenius(int k, int a) const {
        k %= n_;
        if (k < 0) k += n_;
        return frob_[k * q_ + a];
    }

    /// A generator of the (cyclic) multiplicative group.
    int generator() const { return generator_; }

    long element_order(int a) const {
        require(a != 0, "order of zero");
        long ord = 1;
        int x = a;
        while (x != 1) {
            x = mul(x, a);
            ++ord;
        }
        return ord;
    }

    /// Embedding of the subfield GF(p^m) into this field, m | n: the image of
    /// each subfield index under the map sending the subfield generator
    /// variable to the least root of the subfield modulus in this field.
    std::vector<int> subfield_embedding(const Field& sub) const {
        require(sub.p_ == p_ && n_ % sub.n_ == 0,
                "not a subfield: GF(" + std::to_string(sub.q_) + ") into GF(" +
                    std::to_string(q_) + ")");
        int root = -1;
        for (int x = 0; x < q_; ++x) {
            int v = 0; // evaluate sub.modulus_ at x, Horner from the top
            for (int i = (int)sub.modulus_.size() - 1; i >= 0; --i)
                v = add(mul(v, x), sub.modulus_[i] % p_);
            if (v == 0) {
                root = x;
                break;
            }
        }
        require(root >= 0, "subfield modulus has no root (internal error)");
        std::vector<int> img(sub.q_);
        for (int a = 0; a < sub.q_; ++a) {
            int v = 0, t = a, xp = 1;
            for (int i = 0; i < sub.n_; ++i) {
                v = add(v, mul(t % p_, xp));
                t /= p_;
                xp = mul(xp, root);
            }
            img[a] = v;
        }
        return img;
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(int p, int n) : p_(p), n_(n) {
        require(is_prime(p), "p must be prime, got " + std::to_string(p));
        require(n >= 1, "n must be positive");
        long q = 1;
        for (int i = 0; i < n; ++i) {
            q *= p;
            require(q <= Limits::get().max_q,
                    "field size bound exceeded: p=" + std::to_string(p) +
                        " n=" + std::to_string(n));
        }
        q_ = (int)q;

        if (n == 1) {
            modulus_ = {0, 1}; // x
        } else {
            for (int k = 0; k < q_; ++k) {
                detail::Poly f(n + 1, 0);
                f[n] = 1;
                int t = k;
                for (int i = 0; i < n; ++i) {
                    f[i] = t % p;
                    t /= p;
                }
                if (detail::poly_irreducible(f, p)) {
                    modulus_ = f;
                    break;
                }
            }
            require(!modulus_.empty(), "no irreducible modulus found");
        }

        build_tables();
    }

    void build_tables() {
        add_.assign((size_t)q_ * q_, 0);
        neg_.assign(q_, 0);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                int v = 0, ta = a, tb = b, pw = 1;
                for (int i = 0; i < n_; ++i) {
                    v += ((ta % p_) + (tb % p_)) % p_ * pw;
                    ta /= p_;
                    tb /= p_;
                    pw *= p_;
                }
                add_[(size_t)a * q_ + b] = (uint16_t)v;
            }
        for (int a = 0; a < q_; ++a) {
            int v = 0, ta = a, pw = 1;
            for (int i = 0; i < n_; ++i) {
                v += ((p_ - ta % p_) % p_) * pw;
                ta /= p_;
                pw *= p_;
            }
            neg_[a] = (uint16_t)v;
        }

        // multiplication by x mod modulus
        std::vector<int> xmul(q_);
        int pn1 = q_ / p_; // p^{n-1}
        for (int a = 0; a < q_; ++a) {
            int lead = a / pn1;             // coefficient of x^{n-1}
            int shifted = (a % pn1) * p_;   // a * x with lead dropped
            int v = shifted;
            if (lead != 0) {
                // subtract lead * (modulus - x^n)
                int t = v;
                (void)t;
                int corr = 0, pw = 1;
                for (int i = 0; i < n_; ++i) {
                    corr += (lead * modulus_[i]) % p_ * pw;
                    pw *= p_;
                }
                v = add_[(size_t)v * q_ + neg_[corr]];
            }
            xmul[a] = v;
        }

        mul_.assign((size_t)q_ * q_, 0);
        for (int b = 0; b < q_; ++b) {
            // powers x^i * b
            std::vector<int> xp(n_);
            xp[0] = b;
            for (int i = 1; i < n_; ++i) xp[i] = xmul[xp[i - 1]];
            for (int a = 0; a < q_; ++a) {
                int v = 0, ta = a;
                for (int i = 0; i < n_; ++i) {
                    int c = ta % p_;
                    ta /= p_;
                    for (int s = 0; s < c; ++s)
                        v = add_[(size_t)v * q_ + xp[i]];
                }
                mul_[(size_t)a * q_ + b] = (uint16_t)v;
            }
        }

        inv_.assign(q_, 0);
        for (int a = 1; a < q_; ++a) inv_[a] = (uint16_t)pow(a, q_ - 2);

        square_.assign(q_, 0);
        sqrt_.assign(q_, 0);
        square_[0] = 1;
        for (int a = 1; a < q_; ++a) {
            int s = mul(a, a);
            if (!square_[s]) {
                square_[s] = 1;
                sqrt_[s] = (uint16_t)a;
            }
        }

        frob_.assign((size_t)n_ * q_, 0);
        for (int a = 0; a < q_; ++a) frob_[a] = (uint16_t)a;
        for (int k = 1; k < n_; ++k)
            for (int a = 0; a < q_; ++a)
                frob_[(size_t)k * q_ + a] =
                    (uint16_t)pow(frob_[(size_t)(k - 1) * q_ + a], p_);

        generator_ = 0;
        for (int a = 1; a < q_; ++a)
            if (element_order(a) == q_ - 1) {
                generator_ = a;
                break;
            }
    }

    int p_, n_, q_;
    detail::Poly modulus_;
    std::vector<uint16_t> add_, mul_, neg_, inv_, sqrt_, frob_;
    std::vector<uint8_t> square_;
    int generator_ = 0;
};

/// Value-semantic element of a Field; owner comparison guards mixed-field use.
class FieldElement {
public:
    FieldElement() : f_(nullptr), v_(0) {}
    FieldElement(const Field& f, int v) : f_(&f), v_(v) {
        require(v >= 0 && v < f.q(), "element index out of range");
    }

    const Field& field() const {
        require(f_ != nullptr, "uninitialized field element");
        return *f_;
    }
    int value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return FieldElement(*f_, f_->add(v_, o.v_));
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return FieldElement(*f_, f_->sub(v_, o.v_));
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return FieldElement(*f_, f_->mul(v_, o.v_));
    }
    FieldElement operator/(const FieldElement& o) const {
        check(o);
        return FieldElement(*f_, f_->div(v_, o.v_));
    }
    FieldElement operator-() const { return FieldElement(*f_, f_->neg(v_)); }
    FieldElement inverse() const { return FieldElement(*f_, f_->inv(v_)); }
    FieldElement pow(long e) const { return FieldElement(*f_, f_->pow(v_, e)); }

    bool operator==(const FieldElement& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Strict total order: lexicographic on the coefficient vector
    /// (c_{n-1},...,c_0), equivalently on the element index.
    bool operator<(const FieldElement& o) const {
        check(o);
        return v_ < o.v_;
    }

private:
    void check(const FieldElement& o) const {
        require(f_ != nullptr && f_ == o.f_, "elements of different fields");
    }
    const Field* f_;
    int v_;
};

inline int total_order_cmp(const FieldElement& a, const FieldElement& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

} // namespace pslrack
