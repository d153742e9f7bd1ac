#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pslrack/conjugacy.hpp"
#include "pslrack/rack.hpp"
#include "pslrack/subgroup_lattice.hpp"

namespace pslrack {

/// Shapes of subracks of a nontrivial conjugacy class, each tied to the
/// isomorphism type of the subgroup generated by the subrack.
enum class FamilyKind {
    AbelianSubsets,          // nonempty subsets of a commuting unipotent set
    Singleton,               // {y}
    InversePair,             // {y, y^{-1}}
    DihedralAll,             // all involutions of D_{2n}
    DihedralTwoClasses,      // union of the two reflection classes, n even
    DihedralClassPlusCenter, // one reflection class with the central
                             // involution, n = 2 mod 4 and n >= 6
    S4Transpositions,        // the 6 transpositions of S4
    S4TranspositionsPlus,    // transpositions and double transpositions of S4
    S4FourCycles,            // the 6 four-cycles of S4
    A4ThreeCycles,           // one class of 3-cycles of A4 (size 4)
    A4ThreeCyclesBoth,       // both classes of 3-cycles of A4 (size 8)
    A5Involutions,           // the 15 involutions of A5
    A5ThreeCycles,           // the 20 three-cycles of A5
    A5FiveCycles,            // one class of 5-cycles of A5 (size 12)
    SemidirectCoset,         // A x {z} inside A x C (size |A|)
    SemidirectCosetPair,     // A x {z, z^{-1}} inside A x C (size 2|A|)
    SublinePSLUnipotent,     // a unipotent class of PSL(2,q0)
    SublinePGLUnipotent,     // union of both unipotent classes of PSL(2,q0)
    SublinePSLClass,         // a class of PSL(2,q0) of matching type
    SublinePGLClass,         // an involution class of PGL(2,q0) outside
                             // PSL(2,q0), or both classes, or a semisimple
                             // class with matching polynomial
};

inline const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::AbelianSubsets: return "abelian-subsets";
        case FamilyKind::Singleton: return "singleton";
        case FamilyKind::InversePair: return "inverse-pair";
        case FamilyKind::DihedralAll: return "dihedral-involutions";
        case FamilyKind::DihedralTwoClasses: return "dihedral-two-classes";
        case FamilyKind::DihedralClassPlusCenter:
            return "dihedral-class-plus-center";
        case FamilyKind::S4Transpositions: return "s4-transpositions";
        case FamilyKind::S4TranspositionsPlus: return "s4-transpositions-plus";
        case FamilyKind::S4FourCycles: return "s4-four-cycles";
        case FamilyKind::A4ThreeCycles: return "a4-three-cycles";
        case FamilyKind::A4ThreeCyclesBoth: return "a4-three-cycles-both";
        case FamilyKind::A5Involutions: return "a5-involutions";
        case FamilyKind::A5ThreeCycles: return "a5-three-cycles";
        case FamilyKind::A5FiveCycles: return "a5-five-cycles";
        case FamilyKind::SemidirectCoset: return "semidirect-coset";
        case FamilyKind::SemidirectCosetPair: return "semidirect-coset-pair";
        case FamilyKind::SublinePSLUnipotent: return "subline-psl-unipotent";
        case FamilyKind::SublinePGLUnipotent: return "subline-pgl-unipotent";
        case FamilyKind::SublinePSLClass: return "subline-psl-class";
        case FamilyKind::SublinePGLClass: return "subline-pgl-class";
    }
    return "?";
}

struct SubrackFamily {
    FamilyKind kind;
    std::vector<long> params; // dihedral n, subline q0, or |A|; may be empty
    std::string description;
};

enum class Minimality { Abelian, MinimalNonAbelian, Neither };

inline const char* minimality_name(Minimality m) {
    switch (m) {
        case Minimality::Abelian: return "abelian";
        case Minimality::MinimalNonAbelian: return "minimal-nonabelian";
        case Minimality::Neither: return "neither";
    }
    return "?";
}

struct SubrackReport {
    ClassDescriptor cd;
    std::vector<SubrackFamily> families;
    Minimality verdict = Minimality::Neither;
    std::string verdict_reason;
};

/// For a semisimple class with nonzero trace, the unique d with the
/// characteristic polynomial class represented by x^2 + x + d.
inline int chi_unit_d(const ClassDescriptor& cd) {
    const Field& F = cd.field();
    ProjElement r = cd.representative();
    int t = r.trace();
    require(t != 0, "characteristic polynomial has no unit normal form");
    return F.div(r.det(), F.mul(t, t));
}

inline std::vector<long> subfield_orders(const Field& F) {
    std::vector<long> out;
    for (int j = 1; j <= F.n(); ++j) {
        if (F.n() % j) continue;
        long pj = 1;
        for (int i = 0; i < j; ++i) pj *= F.p();
        out.push_back(pj);
    }
    return out;
}

/// Whether the field element d lies in the subfield of order p^j.
inline bool in_subfield(const Field& F, int d, int j) {
    return F.frobenius(j, d) == d;
}

/// Whether d is a square of the subfield of order q0 (d must lie in it).
inline bool square_in_subfield(const Field& F, int d, long q0) {
    if (q0 % 2 == 0 || d == 0) return true;
    return ((q0 - 1) / 2) % F.element_order(d) == 0;
}

/// Orders |A| of the elementary abelian groups admitting a faithful
/// multiplication action of a cyclic group of order d inside the field:
/// powers of the smallest subfield containing a d-th root of unity.
inline std::vector<long> semidirect_kernel_orders(const Field& F, long d) {
    if (((F.q() - 1) / F.e()) % d != 0) return {};
    long q0 = 0;
    int j0 = 0;
    for (int j = 1; j <= F.n(); ++j) {
        if (F.n() % j) continue;
        long pj = 1;
        for (int i = 0; i < j; ++i) pj *= F.p();
        if ((pj - 1) % d == 0) {
            q0 = pj;
            j0 = j;
            break;
        }
    }
    require(q0 > 0, "no subfield contains the required root of unity");
    std::vector<long> out;
    long a = 1;
    for (int i = 1; i <= F.n() / j0; ++i) {
        a *= q0;
        out.push_back(a);
    }
    return out;
}

inline std::pair<Minimality, std::string> minimality_verdict(
    const ClassDescriptor& cd) {
    require(!cd.is_identity(), "identity class has no minimality verdict");
    const Field& F = cd.field();
    long q = F.q();
    int o = cd.order();
    if (cd.type() == ClassType::Unipotent) {
        if (F.n() == 1)
            return {Minimality::MinimalNonAbelian, "q is prime"};
        return {Minimality::Neither,
                "q is a proper prime power, so a unipotent class of a proper "
                "subline embeds as a nonabelian proper subrack"};
    }
    if (o == 2) {
        if (q == 3) return {Minimality::Abelian, "the three involutions commute"};
        return {Minimality::Neither,
                "a dihedral subgroup provides a proper nonabelian subrack of "
                "involutions"};
    }
    if (o == 3) {
        if (q == 2) return {Minimality::Abelian, "the two rotations commute"};
        bool m_odd_prime = false;
        if (q % 2 == 0) {
            long m = F.n();
            m_odd_prime = m % 2 == 1 && m > 1;
            for (long dd = 2; dd * dd <= m; ++dd)
                if (m % dd == 0) m_odd_prime = false;
        }
        if (m_odd_prime)
            return {Minimality::MinimalNonAbelian,
                    "q = 2^m with m an odd prime, so all proper nontrivial "
                    "subracks have size two"};
        return {Minimality::Neither,
                "a smaller group (A4 or a proper subline) provides a proper "
                "nonabelian subrack"};
    }
    // semisimple, order at least four
    if (cd.type() == ClassType::Split)
        return {Minimality::Neither,
                "split classes contain proper coset subracks of a semidirect "
                "product"};
    int d = chi_unit_d(cd);
    for (int j = 1; j < F.n(); ++j) {
        if (F.n() % j) continue;
        if (in_subfield(F, d, j))
            return {Minimality::Neither,
                    "the polynomial parameter descends to a proper subfield"};
    }
    if ((q * q - 1) % 16 == 0 && o == 4 && cd.size() > 6)
        return {Minimality::Neither, "the four-cycles of S4 form a proper "
                                     "nonabelian subrack"};
    if ((q * q - 1) % 5 == 0 && o == 5 && cd.size() > 12)
        return {Minimality::Neither, "the five-cycles of A5 form a proper "
                                     "nonabelian subrack"};
    return {Minimality::MinimalNonAbelian,
            "nonsplit, no subfield descent, and no exceptional subgroup "
            "matches the class order"};
}

/// Symbolic subrack classification of a nontrivial class: the list of
/// subrack families together with satisfiable parameter values at this q.
inline SubrackReport classify_subracks(const ClassDescriptor& cd) {
    require(!cd.is_identity(), "identity class has no subrack taxonomy");
    const Field& F = cd.field();
    const long q = F.q();
    const int p = F.p();
    const int e = F.e();
    const int o = cd.order();
    SubrackReport rep;
    rep.cd = cd;
    auto add = [&](FamilyKind k, std::vector<long> params, std::string desc) {
        if (params.empty() &&
            (k == FamilyKind::DihedralAll ||
             k == FamilyKind::DihedralTwoClasses ||
             k == FamilyKind::DihedralClassPlusCenter ||
             k == FamilyKind::SemidirectCoset ||
             k == FamilyKind::SemidirectCosetPair ||
             k == FamilyKind::SublinePSLUnipotent ||
             k == FamilyKind::SublinePGLUnipotent ||
             k == FamilyKind::SublinePSLClass ||
             k == FamilyKind::SublinePGLClass))
            return; // parametrized family with no admissible parameter
        rep.families.push_back({k, std::move(params), std::move(desc)});
    };
    auto dihedral_ns = [&](bool even_only, bool plus_center) {
        std::vector<long> out;
        std::set<long> seen;
        for (long side : {(q - 1) / e, (q + 1) / e})
            for (long n = 2; n <= side; ++n) {
                if (side % n) continue;
                if (even_only && n % 2) continue;
                if (plus_center && (n % 4 != 2 || n < 6)) continue;
                if (seen.insert(n).second) out.push_back(n);
            }
        std::sort(out.begin(), out.end());
        return out;
    };
    // subfield orders q0 > 4 (labels below 5 belong to the exceptional
    // families: PSL(2,2), PSL(2,3), PSL(2,4) are dihedral, A4, A5)
    auto subline_psl = [&](bool even_cofactor_only) {
        std::vector<long> out;
        for (int j = 1; j <= F.n(); ++j) {
            if (F.n() % j) continue;
            if (even_cofactor_only && (F.n() / j) % 2) continue;
            long q0 = 1;
            for (int i = 0; i < j; ++i) q0 *= p;
            if (q0 > 4) out.push_back(q0);
        }
        return out;
    };

    if (cd.type() == ClassType::Unipotent) {
        add(FamilyKind::AbelianSubsets, {},
            "conjugates of nonempty subsets of the commuting set "
            "{[1 bx; 0 1] : b a nonzero square}, size at most (q-1)/e");
        add(FamilyKind::SublinePSLUnipotent, subline_psl(false),
            "a unipotent class of a subline group PSL(2,q0)");
        if (p != 2)
            add(FamilyKind::SublinePGLUnipotent, subline_psl(true),
                "the union of both unipotent classes of PSL(2,q0), q a power "
                "of q0^2");
        if (p == 2)
            add(FamilyKind::DihedralAll, dihedral_ns(false, false),
                "all involutions of a dihedral group of order 2n, n dividing "
                "q-1 or q+1");
        if (p == 2 && F.n() % 2 == 0)
            add(FamilyKind::A5Involutions, {}, "the 15 involutions of A5");
        if (p == 3) {
            add(FamilyKind::A4ThreeCycles, {},
                "one conjugacy class of 3-cycles of A4");
            if (F.n() % 2 == 0) {
                add(FamilyKind::A4ThreeCyclesBoth, {},
                    "both conjugacy classes of 3-cycles of A4, q a power of 9");
                add(FamilyKind::A5ThreeCycles, {},
                    "the 20 three-cycles of A5, q a power of 9");
            }
        }
    } else if (o == 2) {
        add(FamilyKind::Singleton, {}, "a single involution");
        add(FamilyKind::DihedralAll, dihedral_ns(false, false),
            "all involutions of a dihedral group of order 2n, n dividing "
            "(q-1)/2 or (q+1)/2 (size n, or n+1 for even n)");
        add(FamilyKind::DihedralTwoClasses, dihedral_ns(true, false),
            "the union of the two reflection classes of a dihedral group of "
            "order 2n, n even (size n)");
        add(FamilyKind::DihedralClassPlusCenter, dihedral_ns(false, true),
            "one reflection class together with the central involution of a "
            "dihedral group of order 2n, n = 2 mod 4 and n >= 6 "
            "(size n/2 + 1)");
        if ((q * q - 1) % 16 == 0) {
            add(FamilyKind::S4Transpositions, {},
                "the 6 transpositions of S4");
            add(FamilyKind::S4TranspositionsPlus, {},
                "the transpositions and double transpositions of S4 (size 9)");
        }
        if ((q * q - 1) % 5 == 0)
            add(FamilyKind::A5Involutions, {}, "the 15 involutions of A5");
        if ((q - 1) % 4 == 0)
            add(FamilyKind::SemidirectCoset, semidirect_kernel_orders(F, 2),
                "the coset A x {-1} in A x C with |C| = 2 (size |A|)");
        add(FamilyKind::SublinePSLClass, subline_psl(false),
            "the involution class of a subline group PSL(2,q0), q0 > 4");
        add(FamilyKind::SublinePGLClass, subline_psl(true),
            "the outer involution class of PGL(2,q0), or both involution "
            "classes, q0 > 4 and q a power of q0^2");
    } else if (o == 3) {
        add(FamilyKind::Singleton, {}, "a single element");
        add(FamilyKind::InversePair, {}, "a pair {y, y^{-1}}");
        if (q % 2 == 1 || F.n() % 2 == 0) {
            add(FamilyKind::A4ThreeCycles, {},
                "one conjugacy class of 3-cycles of A4");
            add(FamilyKind::A4ThreeCyclesBoth, {},
                "both conjugacy classes of 3-cycles of A4 (size 8)");
        }
        if ((q * q - 1) % 5 == 0)
            add(FamilyKind::A5ThreeCycles, {}, "the 20 three-cycles of A5");
        if ((q - 1) % 3 == 0) {
            auto sizes = semidirect_kernel_orders(F, 3);
            // |A| = 4 with |C| = 3 is the group A4, covered above
            std::erase_if(sizes, [&](long a) { return p == 2 && a == 4; });
            add(FamilyKind::SemidirectCoset, sizes,
                "the coset A x {z} in A x C with |C| = 3 (size |A|)");
            add(FamilyKind::SemidirectCosetPair, sizes,
                "the union A x {z, z^{-1}} in A x C with |C| = 3 (size 2|A|)");
        }
        add(FamilyKind::SublinePSLClass, subline_psl(false),
            "the order-3 class of a subline group PSL(2,q0), q0 > 4");
    } else {
        add(FamilyKind::Singleton, {}, "a single element");
        add(FamilyKind::InversePair, {}, "a pair {y, y^{-1}}");
        if ((q * q - 1) % 16 == 0 && o == 4)
            add(FamilyKind::S4FourCycles, {}, "the 6 four-cycles of S4");
        if ((q * q - 1) % 5 == 0 && o == 5)
            add(FamilyKind::A5FiveCycles, {},
                "one class of 5-cycles of A5 (size 12)");
        if (cd.type() == ClassType::Split) {
            auto sizes = semidirect_kernel_orders(F, o);
            add(FamilyKind::SemidirectCoset, sizes,
                "the coset A x {z} in A x C with ord z = |C| = o (size |A|)");
            add(FamilyKind::SemidirectCosetPair, sizes,
                "the union A x {z, z^{-1}} in A x C (size 2|A|)");
        }
        int d = chi_unit_d(cd);
        std::vector<long> psl_q0, pgl_q0;
        for (int j = 1; j <= F.n(); ++j) {
            if (F.n() % j) continue;
            long q0 = 1;
            for (int i = 0; i < j; ++i) q0 *= p;
            if (q0 <= 4 || !in_subfield(F, d, j)) continue;
            if (square_in_subfield(F, d, q0))
                psl_q0.push_back(q0);
            else if ((F.n() / j) % 2 == 0)
                pgl_q0.push_back(q0);
        }
        add(FamilyKind::SublinePSLClass, psl_q0,
            "the class of PSL(2,q0) with matching characteristic polynomial "
            "x^2 + x + d, d a square of the subfield");
        add(FamilyKind::SublinePGLClass, pgl_q0,
            "the class of PGL(2,q0) with matching characteristic polynomial "
            "x^2 + x + d, d a nonsquare of the subfield, q a power of q0^2");
    }
    auto [v, reason] = minimality_verdict(cd);
    rep.verdict = v;
    rep.verdict_reason = reason;
    return rep;
}

// ---------------------------------------------------------------------------
// cross-validation against brute-force subrack inventories

struct ValidationReport {
    bool ok = true;
    long subracks_checked = 0;
    std::set<std::vector<int>> subracks; // as sorted ambient element indices
    std::map<std::string, long> witnesses;
    std::vector<std::string> issues;
};

namespace detail {

inline std::string witness_key(FamilyKind k, long param) {
    std::string s = family_kind_name(k);
    if (param) s += ":" + std::to_string(param);
    return s;
}

/// Conjugacy classes of the subgroup H (element list) on the subset I.
inline std::vector<std::vector<int>> subgroup_classes_on(
    const FiniteGroup& G, const std::vector<int>& H,
    const std::vector<int>& I) {
    std::vector<std::vector<int>> out;
    std::set<int> left(I.begin(), I.end());
    while (!left.empty()) {
        int x0 = *left.begin();
        std::vector<int> orb{x0};
        std::set<int> seen{x0};
        for (size_t i = 0; i < orb.size(); ++i)
            for (int h : H) {
                int y = G.conj(h, orb[i]);
                if (seen.insert(y).second) orb.push_back(y);
            }
        for (int y : orb) {
            require(left.count(y) > 0, "subgroup class leaves the subset");
            left.erase(y);
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

/// Which family shapes a brute subrack can realize, based on the label of the
/// generated subgroup and the class decomposition of the subrack inside it.
inline std::vector<std::pair<FamilyKind, long>> family_candidates(
    const DicksonLabel& L, const std::vector<long>& sizes, long usize,
    bool inverse_closed, const ClassDescriptor& cd) {
    const int o = cd.order();
    const int p = cd.field().p();
    const bool unip = cd.type() == ClassType::Unipotent;
    const int k = (int)sizes.size();
    std::vector<std::pair<FamilyKind, long>> out;
    switch (L.type) {
        case DicksonType::Cyclic:
            if (usize == 1) out.push_back({FamilyKind::Singleton, 0});
            if (usize == 2) out.push_back({FamilyKind::InversePair, 0});
            break;
        case DicksonType::ElemAbelianP:
            if (unip) out.push_back({FamilyKind::AbelianSubsets, 0});
            break;
        case DicksonType::Dihedral: {
            long n = L.a / 2;
            if (unip && p == 2) {
                if (k == 1 && usize == n)
                    out.push_back({FamilyKind::DihedralAll, n});
            } else if (o == 2) {
                bool has_center = n % 2 == 0 &&
                    std::find(sizes.begin(), sizes.end(), 1L) != sizes.end();
                if (n % 2 == 1 && k == 1 && usize == n)
                    out.push_back({FamilyKind::DihedralAll, n});
                if (n % 2 == 0 && k == 3 && usize == n + 1)
                    out.push_back({FamilyKind::DihedralAll, n});
                if (n % 2 == 0 && k == 2 && usize == n)
                    out.push_back({FamilyKind::DihedralTwoClasses, n});
                if (n > 2 && k == 2 && has_center && usize == n / 2 + 1)
                    out.push_back({FamilyKind::DihedralClassPlusCenter, n});
            }
            break;
        }
        case DicksonType::A4:
            if ((unip && p == 3) || (!unip && o == 3)) {
                if (usize == 4)
                    out.push_back({FamilyKind::A4ThreeCycles, 0});
                if (usize == 8)
                    out.push_back({FamilyKind::A4ThreeCyclesBoth, 0});
            }
            break;
        case DicksonType::S4:
            if (o == 2 && k == 1 && usize == 6)
                out.push_back({FamilyKind::S4Transpositions, 0});
            if (o == 2 && k == 2 && usize == 9)
                out.push_back({FamilyKind::S4TranspositionsPlus, 0});
            if (o == 4 && k == 1 && usize == 6)
                out.push_back({FamilyKind::S4FourCycles, 0});
            break;
        case DicksonType::A5:
            if (o == 2 && usize == 15)
                out.push_back({FamilyKind::A5Involutions, 0});
            if (o == 3 && usize == 20)
                out.push_back({FamilyKind::A5ThreeCycles, 0});
            if (!unip && o == 5 && usize == 12)
                out.push_back({FamilyKind::A5FiveCycles, 0});
            // A5 is PSL(2,4) and PSL(2,5); as a subline group it also hosts
            // subline-family subracks when the exceptional family is absent
            if (unip && p == 5 && k == 1)
                out.push_back({FamilyKind::SublinePSLUnipotent, 5});
            if (unip && p == 5 && k == 2)
                out.push_back({FamilyKind::SublinePGLUnipotent, 5});
            if (!unip && p == 5 && k == 1)
                out.push_back({FamilyKind::SublinePSLClass, 5});
            break;
        case DicksonType::SemidirectAC:
            if (L.b == o) {
                if (k == 1 && usize == L.a)
                    out.push_back({FamilyKind::SemidirectCoset, L.a});
                if (k == 2 && inverse_closed && usize == 2 * L.a)
                    out.push_back({FamilyKind::SemidirectCosetPair, L.a});
            }
            break;
        case DicksonType::PSL2:
            if (unip && k == 1)
                out.push_back({FamilyKind::SublinePSLUnipotent, L.a});
            if (unip && k == 2)
                out.push_back({FamilyKind::SublinePGLUnipotent, L.a});
            if (!unip && k == 1)
                out.push_back({FamilyKind::SublinePSLClass, L.a});
            break;
        case DicksonType::PGL2:
            if (!unip) out.push_back({FamilyKind::SublinePGLClass, L.a});
            break;
    }
    return out;
}

/// Match one brute subrack U (a union of H-classes generating H) against the
/// emitted families; exactly one family must cover it.
inline void process_subrack(const SubrackReport& rep, const FiniteGroup& G,
                            const DicksonLabel& L, const std::vector<int>& H,
                            const std::vector<int>& U,
                            ValidationReport& out) {
    auto cls = subgroup_classes_on(G, H, U);
    std::vector<long> sizes;
    for (auto& c : cls) sizes.push_back((long)c.size());
    std::sort(sizes.begin(), sizes.end());
    std::vector<char> in_u(G.order(), 0);
    for (int x : U) in_u[x] = 1;
    bool inverse_closed = true;
    for (int x : U)
        if (!in_u[G.inv(x)]) inverse_closed = false;
    auto cands = family_candidates(L, sizes, (long)U.size(), inverse_closed,
                                   rep.cd);
    int matches = 0;
    std::string key;
    for (const auto& f : rep.families)
        for (const auto& [k, param] : cands) {
            if (f.kind != k) continue;
            if (!f.params.empty() &&
                std::find(f.params.begin(), f.params.end(), param) ==
                    f.params.end())
                continue;
            ++matches;
            key = witness_key(f.kind, f.params.empty() ? 0 : param);
        }
    ++out.subracks_checked;
    out.subracks.insert(U);
    if (matches == 1) {
        ++out.witnesses[key];
        return;
    }
    out.ok = false;
    out.issues.push_back(
        (matches == 0 ? "unmatched subrack" : "ambiguous subrack") +
        std::string(" of size ") + std::to_string(U.size()) +
        " generating " + L.str() + " in class " + rep.cd.id());
}

inline void check_witnesses(const SubrackReport& rep, ValidationReport& out) {
    for (const auto& f : rep.families) {
        std::vector<long> params = f.params.empty() ? std::vector<long>{0}
                                                    : f.params;
        for (long param : params)
            if (!out.witnesses.count(witness_key(f.kind, param))) {
                out.ok = false;
                out.issues.push_back("family " + witness_key(f.kind, param) +
                                     " not witnessed in class " + rep.cd.id());
            }
    }
}

} // namespace detail

/// Two-sided cross-validation via the complete subgroup lattice: for every
/// subgroup H, the subracks with generated subgroup H are exactly the
/// nonempty unions of H-classes inside the class that generate H. Each must
/// match exactly one emitted family, and every emitted family parameter must
/// be witnessed.
inline ValidationReport cross_validate(const ClassDescriptor& cd) {
    const Field& F = cd.field();
    SubrackReport rep = classify_subracks(cd);
    auto mg = MatrixGroup::build(GroupTag::PSL, F);
    auto subs = all_subgroups(mg.G, F);
    std::vector<char> in_class(mg.G.order(), 0);
    for (const auto& g : class_elements(cd)) in_class[mg.index_of(g)] = 1;
    ValidationReport out;
    for (const auto& r : subs) {
        std::vector<int> I;
        for (int x : r.elements)
            if (in_class[x]) I.push_back(x);
        if (I.empty()) continue;
        auto cls = detail::subgroup_classes_on(mg.G, r.elements, I);
        int k = (int)cls.size();
        require(k <= 20, "too many subgroup classes inside the class");
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> U;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i))
                    U.insert(U.end(), cls[i].begin(), cls[i].end());
            std::sort(U.begin(), U.end());
            if (mg.G.subgroup_closure(U) != r.elements) continue;
            detail::process_subrack(rep, mg.G, r.label, r.elements, U, out);
        }
    }
    detail::check_witnesses(rep, out);
    return out;
}

/// Cross-validation with the exact power-set subrack inventory of the class
/// rack (class size at most 15); every brute subrack must generate a lattice
/// subgroup and match exactly one family.
inline ValidationReport cross_validate_powerset(const ClassDescriptor& cd) {
    require(cd.size() <= 15, "power-set validation needs a class of size <= 15");
    const Field& F = cd.field();
    SubrackReport rep = classify_subracks(cd);
    auto mg = MatrixGroup::build(GroupTag::PSL, F);
    auto subs = all_subgroups(mg.G, F);
    std::map<std::vector<int>, const SubgroupRecord*> by_elements;
    for (const auto& r : subs) by_elements[r.elements] = &r;
    auto elems = class_elements(cd);
    std::vector<int> gidx;
    for (const auto& g : elems) gidx.push_back(mg.index_of(g));
    auto R = FiniteRack::conjugation(elems);
    ValidationReport out;
    for (const auto& s : R.enumerate_subracks()) {
        if (s.empty()) continue;
        std::vector<int> U;
        for (int i : s) U.push_back(gidx[i]);
        std::sort(U.begin(), U.end());
        auto H = mg.G.subgroup_closure(U);
        auto it = by_elements.find(H);
        if (it == by_elements.end()) {
            out.ok = false;
            out.issues.push_back("generated subgroup missing from lattice");
            continue;
        }
        detail::process_subrack(rep, mg.G, it->second->label, H, U, out);
    }
    detail::check_witnesses(rep, out);
    return out;
}

} // namespace pslrack
