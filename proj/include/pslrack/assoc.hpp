#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pslrack/conjugacy.hpp"
#include "pslrack/fpgroup.hpp"
#include "pslrack/group.hpp"

namespace pslrack {

/// The enveloping-group data of a nontrivial conjugacy class X: the order of
/// the central image mu(C(x)) in the covering group, the Schur multiplier
/// relative to X, the finite factor D with Ass(X) = D x Z, and the second
/// quandle homology H2(X) (abelianization of the centralizer of a lift in D).
struct AssDescriptor {
    ClassDescriptor cd;
    std::string covering_label;
    long multiplier_order = 1;        // |M(G)|
    long mu_image_order = 1;          // |mu(C(x))|, divides multiplier_order
    std::vector<long> rel_multiplier; // invariant factors of M(G)/mu(C(x))
    std::string dx_label;
    long dx_order = 0;                // |D| = |G| * |M(G)/mu(C(x))|
    std::vector<long> h2_invariants;  // invariant factors of H2(X)
};

namespace detail {

/// Covering-group context: the cover, the central kernel of the covering
/// map, and the index of one lift of the class representative.
struct CoverContext {
    const FiniteGroup* cover = nullptr;
    std::vector<int> kernel; // sorted element indices, central
    int lift = -1;
    std::string label;
};

inline const MatrixGroup& sl_matrix_group(const Field& F) {
    static std::map<int, MatrixGroup> cache;
    auto it = cache.find(F.q());
    if (it == cache.end())
        it = cache.emplace(F.q(), MatrixGroup::build(GroupTag::SL, F)).first;
    return it->second;
}

struct A6Star {
    FiniteGroup G;
    std::vector<int> center;
    CentralQuotient simple; // quotient by the full center, order 360
};

inline const A6Star& a6_star() {
    static A6Star S = [] {
        A6Star s;
        s.G = regular_group(todd_coxeter(parse_presentation(A6_COVER_ROBERTSON)));
        s.center = s.G.center();
        require(s.center.size() == 6, "cover center has unexpected order");
        s.simple = central_quotient(s.G, 6);
        return s;
    }();
    return S;
}

/// A lift of a specific element y of the class (defaults to the canonical
/// representative). For q = 4 and q = 9 the class is transported along the
/// exceptional isomorphism by matching element order and class size, which
/// determines the target class up to a symmetry fixing the mu-order.
inline CoverContext cover_context(const ClassDescriptor& cd,
                                  const ProjElement* who = nullptr) {
    const Field& F = cd.field();
    int q = F.q();
    require(q > 3, "no covering data below q = 4");
    require(!cd.is_identity(), "identity class has no enveloping data");
    ProjElement y = who ? *who : cd.representative();
    CoverContext C;
    if (q == 9) {
        const A6Star& S = a6_star();
        C.cover = &S.G;
        C.kernel = S.center;
        C.label = "A6*";
        const FiniteGroup& Q = S.simple.Q;
        for (int g = 0; g < S.G.order(); ++g) {
            int pg = S.simple.projection[g];
            if (Q.element_order(pg) != cd.order()) continue;
            if ((long)Q.conjugacy_class_of(pg).size() != cd.size()) continue;
            C.lift = g;
            break;
        }
    } else if (q == 4) {
        const Field& F5 = Field::of_order(5);
        const MatrixGroup& mg = sl_matrix_group(F5);
        C.cover = &mg.G;
        C.label = "SL(2,5)";
        for (int g = 0; g < mg.G.order(); ++g) {
            const ProjElement& m = mg.elems[g];
            auto p = ProjElement::make(GroupTag::PSL, F5, m.a(), m.b(), m.c(),
                                       m.d());
            auto cd5 = class_of(p);
            if (cd5.order() == cd.order() && cd5.size() == cd.size()) {
                C.lift = g;
                break;
            }
        }
        auto negI = ProjElement::make(GroupTag::SL, F5, F5.neg(1), 0, 0,
                                      F5.neg(1));
        C.kernel = {0, mg.index_of(negI)};
    } else {
        require((long)q * q * q - q <= 5000, "covering group too large");
        const MatrixGroup& mg = sl_matrix_group(F);
        C.cover = &mg.G;
        C.label = "SL(2," + std::to_string(q) + ")";
        C.lift = mg.index_of(
            ProjElement::make(GroupTag::SL, F, y.a(), y.b(), y.c(), y.d()));
        if (q % 2 == 0)
            C.kernel = {0};
        else {
            auto negI =
                ProjElement::make(GroupTag::SL, F, F.neg(1), 0, 0, F.neg(1));
            C.kernel = {0, mg.index_of(negI)};
        }
    }
    std::sort(C.kernel.begin(), C.kernel.end());
    require(C.lift >= 0, "no lift of the class representative found");
    return C;
}

/// The central elements z with z * lift conjugate to lift; this set is the
/// image of mu and a subgroup of the kernel.
inline std::vector<int> mu_image(const CoverContext& C) {
    std::vector<int> out;
    for (int z : C.kernel)
        if (C.cover->are_conjugate(C.cover->mult(z, C.lift), C.lift))
            out.push_back(z);
    return out;
}

} // namespace detail

/// |mu(C(x))| computed by lift conjugacy in the covering group; optionally
/// from a specific class element instead of the canonical representative.
inline long mu_image_order(const ClassDescriptor& cd,
                           const ProjElement* who = nullptr) {
    return (long)detail::mu_image(detail::cover_context(cd, who)).size();
}

/// Invariant factors of M(G) / mu(C(x)); both groups are cyclic here.
inline std::vector<long> relative_schur_multiplier(const ClassDescriptor& cd) {
    auto C = detail::cover_context(cd);
    long m = (long)C.kernel.size();
    long r = m / (long)detail::mu_image(C).size();
    if (r == 1) return {};
    return {r};
}

/// Full descriptor including D (with Ass(X) = D x Z) and H2(X).
inline AssDescriptor ass_descriptor(const ClassDescriptor& cd) {
    auto C = detail::cover_context(cd);
    AssDescriptor A;
    A.cd = cd;
    A.covering_label = C.label;
    A.multiplier_order = (long)C.kernel.size();
    auto mu = detail::mu_image(C);
    A.mu_image_order = (long)mu.size();
    long r = A.multiplier_order / A.mu_image_order;
    if (r > 1) A.rel_multiplier = {r};
    // D is the cover modulo the image of mu
    std::vector<int> proj;
    FiniteGroup D = C.cover->quotient(mu, &proj);
    A.dx_order = D.order();
    int q = cd.field().q();
    if (q == 9)
        A.dx_label = A.mu_image_order == 1
                         ? "A6*"
                         : "A6*/C" + std::to_string(A.mu_image_order);
    else if ((long)D.order() == group_order(GroupTag::PSL, q))
        A.dx_label = "PSL(2," + std::to_string(q) + ")";
    else
        A.dx_label = C.label;
    int y = proj[C.lift];
    A.h2_invariants = D.subgroup(D.centralizer_of(y)).abelian_invariants();
    return A;
}

inline std::vector<long> h2_quandle(const ClassDescriptor& cd) {
    return ass_descriptor(cd).h2_invariants;
}

} // namespace pslrack
