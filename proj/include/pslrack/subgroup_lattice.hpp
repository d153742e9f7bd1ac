#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pslrack/config.hpp"
#include "pslrack/group.hpp"

namespace pslrack {

/// Isomorphism-type menu for subgroups of PSL(2,q).
enum class DicksonType {
    Cyclic,       // C_n with n | (q-1)/e or n | (q+1)/e; n = 1 for trivial
    ElemAbelianP, // elementary abelian p-group (p the field characteristic)
    Dihedral,     // D_{2n} with n | (q-1)/e or n | (q+1)/e
    A4,
    S4,
    A5,
    SemidirectAC, // elementary abelian A by cyclic C, |C| | gcd(|A|-1,(q-1)/e)
    PSL2,         // PSL(2,q0) over a subfield
    PGL2,         // PGL(2,q0) with q a power of q0^2
};

struct DicksonLabel {
    DicksonType type;
    long a = 0; // Cyclic: n; ElemAbelianP: order; Dihedral: group order 2n;
                // SemidirectAC: |A|; PSL2/PGL2: q0
    long b = 0; // ElemAbelianP: rank; SemidirectAC: |C|

    bool operator==(const DicksonLabel&) const = default;
    auto operator<=>(const DicksonLabel&) const = default;

    std::string str() const {
        switch (type) {
            case DicksonType::Cyclic: return "C" + std::to_string(a);
            case DicksonType::ElemAbelianP: return "E" + std::to_string(a);
            case DicksonType::Dihedral: return "D" + std::to_string(a);
            case DicksonType::A4: return "A4";
            case DicksonType::S4: return "S4";
            case DicksonType::A5: return "A5";
            case DicksonType::SemidirectAC:
                return "E" + std::to_string(a) + ":C" + std::to_string(b);
            case DicksonType::PSL2:
                return "PSL(2," + std::to_string(a) + ")";
            case DicksonType::PGL2:
                return "PGL(2," + std::to_string(a) + ")";
        }
        return "?";
    }
};

/// Assign the unique menu label of a subgroup of PSL(2,q), given as a
/// standalone group. Some groups match several menu descriptions (A4 is also
/// an elementary-abelian-by-cyclic group in characteristic 2; a Borel of
/// prime order times two is dihedral as an abstract group); a fixed priority
/// makes the label unique: elementary abelian, cyclic, dihedral-in-menu,
/// A4/S4/A5, semidirect, PSL/PGL over a subfield.
inline DicksonLabel dickson_classify(const FiniteGroup& H, const Field& F) {
    const long n = H.order();
    const long q = F.q();
    const int p = F.p();
    const int e = F.e();
    auto divides_torus = [&](long m) {
        return ((q - 1) / e) % m == 0 || ((q + 1) / e) % m == 0;
    };
    if (n == 1) return {DicksonType::Cyclic, 1, 0};

    std::map<int, long> stats; // element order -> count
    for (int i = 0; i < n; ++i) ++stats[H.element_order(i)];

    if (H.is_abelian()) {
        if (stats.size() == 2 && stats.count(p)) {
            // exponent p: elementary abelian p-group
            long pk = 1;
            long k = 0;
            while (pk < n) {
                pk *= p;
                ++k;
            }
            require(pk == n, "exponent-p subgroup of non-p-power order");
            return {DicksonType::ElemAbelianP, n, k};
        }
        if (stats.count((int)n)) {
            require(divides_torus(n), "cyclic subgroup order outside the menu");
            return {DicksonType::Cyclic, n, 0};
        }
        if (n == 4) {
            // Klein four group in odd characteristic, the degenerate dihedral
            require(divides_torus(2), "Klein four group outside the menu");
            return {DicksonType::Dihedral, 4, 0};
        }
        throw Error("abelian subgroup matches no menu label");
    }

    // small exceptional types, recognized by their order statistics
    if (n == 12 && stats == std::map<int, long>{{1, 1}, {2, 3}, {3, 8}}) {
        require(q % 2 == 1 || F.n() % 2 == 0, "A4 side condition failed");
        return {DicksonType::A4, 0, 0};
    }
    if (n == 24 &&
        stats == std::map<int, long>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) {
        require((q * q - 1) % 16 == 0, "S4 side condition failed");
        return {DicksonType::S4, 0, 0};
    }
    if (n == 60 &&
        stats == std::map<int, long>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}) {
        require(p == 5 || (q * q - 1) % 5 == 0, "A5 side condition failed");
        return {DicksonType::A5, 0, 0};
    }

    // dihedral: a cyclic index-2 subgroup, inverted by every outside element
    if (n % 2 == 0 && stats.count((int)(n / 2))) {
        long m = n / 2;
        int c = -1;
        for (int i = 0; i < n && c < 0; ++i)
            if (H.element_order(i) == m) c = i;
        std::vector<char> in_c(n, 0);
        int x = 0;
        for (long k = 0; k < m; ++k) {
            in_c[x] = 1;
            x = H.mult(x, c);
        }
        bool dihedral = true;
        for (int i = 0; i < n && dihedral; ++i) {
            if (in_c[i]) continue;
            if (H.element_order(i) != 2 || H.conj(i, c) != H.inv(c))
                dihedral = false;
        }
        // a dihedral group whose rotation order is not in the torus menu is
        // an elementary-abelian-by-cyclic group instead (rotations of order p)
        if (dihedral && divides_torus(m)) return {DicksonType::Dihedral, n, 0};
    }

    // elementary abelian A by cyclic C: A is the set of elements of order
    // dividing p, normal, with cyclic quotient
    {
        std::vector<int> A;
        for (int i = 0; i < n; ++i)
            if (H.power(i, p) == 0) A.push_back(i);
        long pk = (long)A.size();
        long t = pk;
        while (t % p == 0) t /= p;
        long d = n / pk;
        if (t == 1 && pk > 1 && n % pk == 0 && d > 1) {
            std::vector<char> in_a(n, 0);
            for (int x : A) in_a[x] = 1;
            bool ok = true;
            for (int x : A)
                for (int y : A)
                    if (!in_a[H.mult(x, y)] || H.mult(x, y) != H.mult(y, x))
                        ok = false;
            for (int g = 0; g < n && ok; ++g)
                for (int x : A)
                    if (!in_a[H.conj(g, x)]) ok = false;
            if (ok) {
                FiniteGroup Q = H.quotient(A);
                bool cyclic = false;
                for (int i = 0; i < Q.order(); ++i)
                    if (Q.element_order(i) == d) cyclic = true;
                if (cyclic && (pk - 1) % d == 0 && ((q - 1) / e) % d == 0)
                    return {DicksonType::SemidirectAC, pk, d};
            }
        }
    }

    // PSL(2,q0) and PGL(2,q0) over subfields
    for (int j = 1; j <= F.n(); ++j) {
        if (F.n() % j) continue;
        long q0 = 1;
        for (int i = 0; i < j; ++i) q0 *= p;
        long e0 = q0 % 2 ? 2 : 1;
        if (n == q0 * (q0 * q0 - 1) / e0 &&
            (long)H.derived_subgroup().size() == n)
            return {DicksonType::PSL2, q0, 0};
        if (F.n() % (2 * j) == 0 && n == q0 * (q0 * q0 - 1) &&
            2 * (long)H.derived_subgroup().size() == n)
            return {DicksonType::PGL2, q0, 0};
    }
    throw Error("subgroup matches no menu label");
}

struct SubgroupRecord {
    std::vector<int> elements;   // sorted indices into the ambient group
    std::vector<int> generators; // witness: closure(generators) == elements
    long order = 0;
    DicksonLabel label;
};

/// Join <H, g> computed by coset enumeration over H; returns the sorted
/// element set, or an empty vector once the order exceeds `cap`.
inline std::vector<int> join_with_cyclic(const FiniteGroup& G,
                                         const std::vector<int>& H,
                                         const std::vector<int>& H_gens,
                                         int g, long cap) {
    int n = G.order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> mults = H_gens;
    mults.push_back(g);
    std::vector<int> reps{0};
    for (int u : H) coset_of[u] = 0;
    long size = (long)H.size();
    for (size_t i = 0; i < reps.size(); ++i)
        for (int t : mults) {
            int y = G.mult(reps[i], t);
            if (coset_of[y] >= 0) continue;
            size += (long)H.size();
            if (size > cap) return {};
            int idx = (int)reps.size();
            for (int u : H) coset_of[G.mult(u, y)] = idx;
            reps.push_back(y);
        }
    std::vector<int> out;
    out.reserve(size);
    for (int x = 0; x < n; ++x)
        if (coset_of[x] >= 0) out.push_back(x);
    return out;
}

/// Greedy generating set of a subgroup given by its element list.
inline std::vector<int> greedy_generators(const FiniteGroup& G,
                                          const std::vector<int>& elems) {
    std::vector<int> gens;
    std::vector<char> in(G.order(), 0);
    in[0] = 1;
    size_t covered = 1;
    for (int x : elems) {
        if (in[x]) continue;
        gens.push_back(x);
        covered = 0;
        std::fill(in.begin(), in.end(), 0);
        for (int y : G.subgroup_closure(gens)) {
            in[y] = 1;
            ++covered;
        }
        if (covered == elems.size()) break;
    }
    return gens; // empty for the trivial subgroup
}

/// The complete subgroup lattice of an ambient group of order at most the
/// configured bound, by join-closure: start from all cyclic subgroups and
/// repeatedly join with cyclic subgroups until no new subgroup appears. Every
/// proper subgroup has order at most |G|/2, so joins are aborted at that cap
/// (an overflowing join is the whole group, which is added explicitly).
inline std::vector<SubgroupRecord> all_subgroups(const FiniteGroup& G,
                                                 const Field& F) {
    const long n = G.order();
    require(n <= Limits::get().max_lattice_order,
            "subgroup lattice bound exceeded");
    const long cap = n / 2;

    // cyclic subgroups with a generator witness
    std::set<std::vector<int>> cyc_seen;
    std::vector<std::pair<std::vector<int>, int>> cyclics;
    for (int x = 1; x < n; ++x) {
        std::vector<int> c;
        int y = 0;
        do {
            c.push_back(y);
            y = G.mult(y, x);
        } while (y != 0);
        std::sort(c.begin(), c.end());
        if (cyc_seen.insert(c).second) cyclics.push_back({c, x});
    }

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems_list;
    std::vector<std::vector<int>> gens_list;
    auto add = [&](std::vector<int> s) {
        if (index.count(s)) return;
        index[s] = (int)elems_list.size();
        gens_list.push_back(greedy_generators(G, s));
        elems_list.push_back(std::move(s));
    };
    add({0});
    for (auto& [c, g] : cyclics) add(c);
    for (size_t i = 0; i < elems_list.size(); ++i) {
        std::vector<int> H = elems_list[i];
        std::vector<int> Hg = gens_list[i];
        if ((long)H.size() > cap / 2) continue; // join would exceed the cap
        for (auto& [c, g] : cyclics) {
            if (std::binary_search(H.begin(), H.end(), g)) continue;
            auto j = join_with_cyclic(G, H, Hg, g, cap);
            if (!j.empty()) add(std::move(j));
        }
    }
    if (n > 1) {
        std::vector<int> whole(n);
        std::iota(whole.begin(), whole.end(), 0);
        add(std::move(whole));
    }

    std::vector<SubgroupRecord> out;
    for (size_t i = 0; i < elems_list.size(); ++i) {
        SubgroupRecord r;
        r.elements = elems_list[i];
        r.generators = gens_list[i];
        r.order = (long)r.elements.size();
        r.label = dickson_classify(G.subgroup(r.elements), F);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const SubgroupRecord& x, const SubgroupRecord& y) {
                  if (x.order != y.order) return x.order < y.order;
                  return x.elements < y.elements;
              });
    return out;
}

inline std::vector<SubgroupRecord> all_subgroups(const Field& F) {
    auto mg = MatrixGroup::build(GroupTag::PSL, F);
    return all_subgroups(mg.G, F);
}

} // namespace pslrack
