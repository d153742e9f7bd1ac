#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pslrack/matrix.hpp"

namespace pslrack {

enum class ClassType { Identity, Split, Unipotent, NonSplit };

inline const char* class_type_name(ClassType t) {
    switch (t) {
        case ClassType::Identity: return "identity";
        case ClassType::Split: return "split";
        case ClassType::Unipotent: return "unipotent";
        case ClassType::NonSplit: return "nonsplit";
    }
    return "?";
}

inline long euler_phi(long m) {
    long r = m;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            r -= r / d;
            while (m % d == 0) m /= d;
        }
    if (m > 1) r -= r / m;
    return r;
}

/// A conjugacy class of PSL(2,q), identified by its taxonomy tag and a
/// canonical parameter:
///  - Split: a = min{a, a^{-1}}, a a nonidentity square;
///  - Unipotent: b = least member of the coset b*F^{x2};
///  - NonSplit: t = min{t, -t}, t not of the form x + x^{-1}.
class ClassDescriptor {
public:
    ClassDescriptor() : type_(ClassType::Identity), F_(nullptr), param_(0) {}

    static ClassDescriptor make(ClassType type, const Field& F, int param) {
        ClassDescriptor cd;
        cd.type_ = type;
        cd.F_ = &F;
        cd.param_ = param;
        cd.validate();
        cd.fill_cached();
        return cd;
    }

    ClassType type() const { return type_; }
    const Field& field() const { return *F_; }
    int param() const { return param_; }
    long size() const { return size_; }
    int order() const { return order_; }
    const CharPolyClass& chi() const { return chi_; }
    bool is_identity() const { return type_ == ClassType::Identity; }
    bool is_semisimple() const {
        return type_ == ClassType::Split || type_ == ClassType::NonSplit;
    }

    bool operator==(const ClassDescriptor& o) const {
        return type_ == o.type_ && F_ == o.F_ && param_ == o.param_;
    }
    bool operator!=(const ClassDescriptor& o) const { return !(*this == o); }
    bool operator<(const ClassDescriptor& o) const {
        if (type_ != o.type_) return (int)type_ < (int)o.type_;
        return param_ < o.param_;
    }

    std::string id() const {
        switch (type_) {
            case ClassType::Identity: return "id";
            case ClassType::Split: return "split:a=" + std::to_string(param_);
            case ClassType::Unipotent:
                return "unip:b=" + std::to_string(param_);
            case ClassType::NonSplit:
                return "nonsplit:t=" + std::to_string(param_);
        }
        return "?";
    }

    static ClassDescriptor from_id(const Field& F, const std::string& id) {
        if (id == "id") return make(ClassType::Identity, F, 0);
        auto parse = [&](const std::string& prefix,
                         ClassType t) -> ClassDescriptor {
            std::string v = id.substr(prefix.size());
            return make(t, F, std::stoi(v));
        };
        if (id.rfind("split:a=", 0) == 0) return parse("split:a=", ClassType::Split);
        if (id.rfind("unip:b=", 0) == 0)
            return parse("unip:b=", ClassType::Unipotent);
        if (id.rfind("nonsplit:t=", 0) == 0)
            return parse("nonsplit:t=", ClassType::NonSplit);
        throw Error("unknown class id: " + id);
    }

    /// A canonical PSL(2,q) element of the class.
    ProjElement representative() const {
        const Field& F = *F_;
        switch (type_) {
            case ClassType::Identity:
                return ProjElement::identity(GroupTag::PSL, F);
            case ClassType::Split: {
                int l = F.sqrt_of(param_);
                return ProjElement::make(GroupTag::PSL, F, l, 0, 0, F.inv(l));
            }
            case ClassType::Unipotent:
                return ProjElement::make(GroupTag::PSL, F, 1, param_, 0, 1);
            case ClassType::NonSplit:
                return ProjElement::make(GroupTag::PSL, F, 0, 1, F.neg(1),
                                         param_);
        }
        throw Error("unreachable");
    }

private:
    void validate() const {
        const Field& F = *F_;
        switch (type_) {
            case ClassType::Identity:
                require(param_ == 0, "identity class has no parameter");
                break;
            case ClassType::Split: {
                require(param_ != 0 && param_ != 1 && F.is_square(param_),
                        "split parameter must be a nonidentity square");
                require(param_ <= F.inv(param_),
                        "split parameter not canonical");
                break;
            }
            case ClassType::Unipotent: {
                require(param_ != 0, "unipotent parameter must be nonzero");
                require(param_ ==
                            CharPolyClass::least_in_square_coset(F, param_),
                        "unipotent parameter not canonical");
                break;
            }
            case ClassType::NonSplit: {
                for (int x = 1; x < F.q(); ++x)
                    require(param_ != F.add(x, F.inv(x)),
                            "nonsplit parameter is a trace of a split element");
                require(param_ <= F.neg(param_),
                        "nonsplit parameter not canonical");
                break;
            }
        }
    }

    void fill_cached() {
        const Field& F = *F_;
        long q = F.q();
        int e = F.e();
        switch (type_) {
            case ClassType::Identity:
                size_ = 1;
                order_ = 1;
                chi_ = CharPolyClass(F, F.add(1, 1), 1);
                return;
            case ClassType::Split:
                size_ = param_ == F.inv(param_) ? q * (q + 1) / 2 : q * (q + 1);
                order_ = (int)F.element_order(param_);
                break;
            case ClassType::Unipotent:
                size_ = (q - 1) * (q + 1) / e;
                order_ = F.p();
                break;
            case ClassType::NonSplit:
                size_ = param_ == F.neg(param_) && F.q() % 2 == 1
                            ? q * (q - 1) / 2
                            : q * (q - 1);
                order_ = element_order(representative());
                break;
        }
        chi_ = char_poly(representative());
    }

    ClassType type_;
    const Field* F_;
    int param_;
    long size_ = 0;
    int order_ = 0;
    CharPolyClass chi_;
};

/// Identify the conjugacy class of a PSL(2,q) element.
inline ClassDescriptor class_of(const ProjElement& g) {
    require(g.tag() == GroupTag::PSL, "class_of expects a PSL element");
    const Field& F = g.field();
    if (g.is_identity()) return ClassDescriptor::make(ClassType::Identity, F, 0);
    int fp = fixed_points(g);
    if (fp == 2) {
        // eigenvalue ratio of the det-1 representative
        int t = g.trace();
        int r1 = -1, r2 = -1;
        for (int x = 1; x < F.q(); ++x) {
            if (F.add(F.sub(F.mul(x, x), F.mul(t, x)), 1) == 0) {
                if (r1 < 0)
                    r1 = x;
                else
                    r2 = x;
            }
        }
        require(r1 >= 0 && r2 >= 0, "split element without eigenvalues");
        int a = F.div(r1, r2);
        int ai = F.inv(a);
        return ClassDescriptor::make(ClassType::Split, F, std::min(a, ai));
    }
    if (fp == 1) {
        int z0 = -1;
        for (int z = 0; z <= F.q(); ++z)
            if (g.apply(z) == z) {
                z0 = z;
                break;
            }
        ProjElement h =
            z0 == F.q()
                ? ProjElement::identity(GroupTag::PSL, F)
                : ProjElement::make(GroupTag::PSL, F, 0, F.neg(1), 1,
                                    F.neg(z0));
        ProjElement m = conjugate(h, g);
        require(m.c() == 0 && m.a() == m.d(),
                "unipotent normal form failed (internal error)");
        int b = F.div(m.b(), m.a());
        return ClassDescriptor::make(
            ClassType::Unipotent, F,
            CharPolyClass::least_in_square_coset(F, b));
    }
    int t = g.trace();
    return ClassDescriptor::make(ClassType::NonSplit, F,
                                 std::min(t, F.neg(t)));
}

/// All conjugacy classes of PSL(2,q), identity first, then split, unipotent,
/// non-split, each in ascending parameter order.
inline std::vector<ClassDescriptor> all_classes(const Field& F) {
    std::vector<ClassDescriptor> out;
    out.push_back(ClassDescriptor::make(ClassType::Identity, F, 0));
    for (int a = 2; a < F.q(); ++a) {
        if (!F.is_square(a)) continue;
        if (a > F.inv(a)) continue;
        out.push_back(ClassDescriptor::make(ClassType::Split, F, a));
    }
    std::set<int> coset_reps;
    for (int b = 1; b < F.q(); ++b)
        coset_reps.insert(CharPolyClass::least_in_square_coset(F, b));
    for (int b : coset_reps)
        out.push_back(ClassDescriptor::make(ClassType::Unipotent, F, b));
    std::set<int> traces;
    for (int x = 1; x < F.q(); ++x) traces.insert(F.add(x, F.inv(x)));
    for (int t = 0; t < F.q(); ++t) {
        if (traces.count(t)) continue;
        if (t > F.neg(t)) continue;
        out.push_back(ClassDescriptor::make(ClassType::NonSplit, F, t));
    }
    return out;
}

/// Reality of a class: semisimple classes are always real; unipotent classes
/// are real iff q is even or q = 1 mod 4.
inline bool is_real(const ClassDescriptor& cd) {
    switch (cd.type()) {
        case ClassType::Identity: return true;
        case ClassType::Split:
        case ClassType::NonSplit: return true;
        case ClassType::Unipotent: {
            int q = cd.field().q();
            return q % 2 == 0 || q % 4 == 1;
        }
    }
    return false;
}

/// The class of m-th powers of the class (depends on m mod o(O) only).
inline ClassDescriptor power_class(const ClassDescriptor& cd, long m) {
    m %= cd.order();
    if (m < 0) m += cd.order();
    if (m == 0)
        return ClassDescriptor::make(ClassType::Identity, cd.field(), 0);
    return class_of(element_pow(cd.representative(), m));
}

/// Number of conjugacy classes whose elements have order m (closed form).
inline long count_classes_of_order(const Field& F, long m) {
    require(m >= 1, "order must be positive");
    long q = F.q();
    int e = F.e();
    if (m == 1) return 1;
    if (m == F.p()) return e;
    if (m == 2) return 1;
    if (m >= 3 && (((q - 1) / e) % m == 0 || ((q + 1) / e) % m == 0))
        return euler_phi(m) / 2;
    return 0;
}

/// Brute-force oracle for count_classes_of_order.
inline long count_classes_of_order_brute(const Field& F, long m) {
    long count = 0;
    for (const auto& cd : all_classes(F))
        if (cd.order() == m) ++count;
    return count;
}

/// Standard generating set of PSL(2,q) (or SL(2,q)): the elementary
/// transvections over a basis of F_q.
inline std::vector<ProjElement> standard_generators(GroupTag tag,
                                                    const Field& F) {
    std::vector<ProjElement> gens;
    int xp = 1;
    for (int i = 0; i < F.n(); ++i) {
        gens.push_back(ProjElement::make(tag, F, 1, xp, 0, 1));
        gens.push_back(ProjElement::make(tag, F, 1, 0, xp, 1));
        xp = F.mul(xp, F.generator());
    }
    return gens;
}

/// All elements of a class, via the conjugation orbit of the representative.
inline std::vector<ProjElement> class_elements(const ClassDescriptor& cd) {
    auto gens = standard_generators(GroupTag::PSL, cd.field());
    std::vector<ProjElement> orbit{cd.representative()};
    std::set<uint64_t> seen{orbit[0].key()};
    for (size_t i = 0; i < orbit.size(); ++i)
        for (const auto& g : gens) {
            ProjElement h = conjugate(g, orbit[i]);
            if (seen.insert(h.key()).second) orbit.push_back(h);
        }
    return orbit;
}

/// Centralizer of g within the given element list.
inline std::vector<ProjElement> centralizer(
    const ProjElement& g, const std::vector<ProjElement>& group) {
    std::vector<ProjElement> out;
    for (const auto& h : group)
        if (h * g == g * h) out.push_back(h);
    return out;
}

// ---------------------------------------------------------------------------
// PGL(2,q) classes

enum class PGLClassType { Identity, Split, Unipotent, NonSplit };

/// Conjugacy class of PGL(2,q). Split parameter a in F^x \ {1} canonical as
/// min{a, a^{-1}}; the single unipotent class has no parameter; non-split
/// classes carry the canonical (t,d) pair of the characteristic polynomial.
class PGLClassDescriptor {
public:
    static PGLClassDescriptor identity_class(const Field& F) {
        PGLClassDescriptor cd;
        cd.type_ = PGLClassType::Identity;
        cd.F_ = &F;
        cd.size_ = 1;
        cd.order_ = 1;
        return cd;
    }
    static PGLClassDescriptor split(const Field& F, int a) {
        require(a != 0 && a != 1, "split parameter must differ from 0 and 1");
        a = std::min(a, F.inv(a));
        PGLClassDescriptor cd;
        cd.type_ = PGLClassType::Split;
        cd.F_ = &F;
        cd.a_ = a;
        cd.size_ = a == F.inv(a) ? (long)F.q() * (F.q() + 1) / 2
                                 : (long)F.q() * (F.q() + 1);
        cd.order_ = (int)F.element_order(a);
        return cd;
    }
    static PGLClassDescriptor unipotent(const Field& F) {
        PGLClassDescriptor cd;
        cd.type_ = PGLClassType::Unipotent;
        cd.F_ = &F;
        cd.size_ = (long)F.q() * F.q() - 1;
        cd.order_ = F.p();
        return cd;
    }
    static PGLClassDescriptor nonsplit(const Field& F, int t, int d) {
        CharPolyClass chi(F, t, d);
        require(chi.root_count() == 0,
                "nonsplit class needs an irreducible polynomial");
        PGLClassDescriptor cd;
        cd.type_ = PGLClassType::NonSplit;
        cd.F_ = &F;
        cd.t_ = chi.t();
        cd.d_ = chi.d();
        cd.size_ = cd.t_ != 0 ? (long)F.q() * (F.q() - 1)
                              : (long)F.q() * (F.q() - 1) / 2;
        cd.order_ = element_order(cd.representative());
        return cd;
    }

    PGLClassType type() const { return type_; }
    const Field& field() const { return *F_; }
    int split_param() const { return a_; }
    int t() const { return t_; }
    int d() const { return d_; }
    long size() const { return size_; }
    int order() const { return order_; }

    bool operator==(const PGLClassDescriptor& o) const {
        return type_ == o.type_ && F_ == o.F_ && a_ == o.a_ && t_ == o.t_ &&
               d_ == o.d_;
    }

    std::string id() const {
        switch (type_) {
            case PGLClassType::Identity: return "id";
            case PGLClassType::Split:
                return "split:a=" + std::to_string(a_);
            case PGLClassType::Unipotent: return "unip";
            case PGLClassType::NonSplit:
                return "nonsplit:t=" + std::to_string(t_) +
                       ",d=" + std::to_string(d_);
        }
        return "?";
    }

    ProjElement representative() const {
        const Field& F = *F_;
        switch (type_) {
            case PGLClassType::Identity:
                return ProjElement::identity(GroupTag::PGL, F);
            case PGLClassType::Split:
                return ProjElement::make(GroupTag::PGL, F, a_, 0, 0, 1);
            case PGLClassType::Unipotent:
                return ProjElement::make(GroupTag::PGL, F, 1, 1, 0, 1);
            case PGLClassType::NonSplit:
                return ProjElement::make(GroupTag::PGL, F, 0, 1, F.neg(d_),
                                         t_);
        }
        throw Error("unreachable");
    }

private:
    PGLClassType type_ = PGLClassType::Identity;
    const Field* F_ = nullptr;
    int a_ = 0, t_ = 0, d_ = 0;
    long size_ = 0;
    int order_ = 0;
};

inline PGLClassDescriptor pgl_class_of(const ProjElement& g) {
    require(g.tag() == GroupTag::PGL, "pgl_class_of expects a PGL element");
    const Field& F = g.field();
    if (g.is_identity()) return PGLClassDescriptor::identity_class(F);
    int fp = fixed_points(g);
    if (fp == 1) return PGLClassDescriptor::unipotent(F);
    if (fp == 0) return PGLClassDescriptor::nonsplit(F, g.trace(), g.det());
    // two fixed points: eigenvalue ratio
    int t = g.trace(), d = g.det();
    int r1 = -1, r2 = -1;
    for (int x = 1; x < F.q(); ++x)
        if (F.add(F.sub(F.mul(x, x), F.mul(t, x)), d) == 0) {
            if (r1 < 0)
                r1 = x;
            else
                r2 = x;
        }
    require(r1 >= 0 && r2 >= 0, "split PGL element without eigenvalues");
    return PGLClassDescriptor::split(F, F.div(r1, r2));
}

inline std::vector<PGLClassDescriptor> pgl_all_classes(const Field& F) {
    std::vector<PGLClassDescriptor> out;
    out.push_back(PGLClassDescriptor::identity_class(F));
    for (int a = 2; a < F.q(); ++a) {
        if (a > F.inv(a)) continue;
        out.push_back(PGLClassDescriptor::split(F, a));
    }
    out.push_back(PGLClassDescriptor::unipotent(F));
    std::set<std::pair<int, int>> seen;
    for (int t = 0; t < F.q(); ++t)
        for (int d = 1; d < F.q(); ++d) {
            CharPolyClass chi(F, t, d);
            if (chi.root_count() != 0) continue;
            if (seen.insert({chi.t(), chi.d()}).second)
                out.push_back(PGLClassDescriptor::nonsplit(F, t, d));
        }
    return out;
}

/// Decomposition of a PGL(2,q) class into PSL(2,q) classes; throws if the
/// class is disjoint from PSL(2,q).
inline std::vector<ClassDescriptor> pgl_restrict(const PGLClassDescriptor& cd) {
    const Field& F = cd.field();
    switch (cd.type()) {
        case PGLClassType::Identity:
            return {ClassDescriptor::make(ClassType::Identity, F, 0)};
        case PGLClassType::Split: {
            int a = cd.split_param();
            require(F.is_square(a),
                    "PGL class " + cd.id() + " is disjoint from PSL(2,q)");
            return {ClassDescriptor::make(ClassType::Split, F,
                                          std::min(a, F.inv(a)))};
        }
        case PGLClassType::Unipotent: {
            std::vector<ClassDescriptor> out;
            out.push_back(ClassDescriptor::make(
                ClassType::Unipotent, F,
                CharPolyClass::least_in_square_coset(F, 1)));
            if (F.q() % 2 == 1) {
                for (int b = 1; b < F.q(); ++b)
                    if (!F.is_square(b)) {
                        out.push_back(ClassDescriptor::make(
                            ClassType::Unipotent, F,
                            CharPolyClass::least_in_square_coset(F, b)));
                        break;
                    }
            }
            return out;
        }
        case PGLClassType::NonSplit: {
            int t = cd.t(), d = cd.d();
            require(F.is_square(d),
                    "PGL class " + cd.id() + " is disjoint from PSL(2,q)");
            int l = F.inv(F.sqrt_of(d));
            int ts = F.mul(t, l);
            return {ClassDescriptor::make(ClassType::NonSplit, F,
                                          std::min(ts, F.neg(ts)))};
        }
    }
    throw Error("unreachable");
}

} // namespace pslrack
