#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "pslrack/error.hpp"
#include "pslrack/matrix.hpp"

namespace pslrack {

/// A finite group on indices 0..n-1 with dense multiplication and inverse
/// tables. Index 0 is always the identity.
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_tables(std::vector<std::vector<int>> mul) {
        FiniteGroup G;
        G.n_ = (int)mul.size();
        G.mul_ = std::move(mul);
        for (int i = 0; i < G.n_; ++i)
            require((int)G.mul_[i].size() == G.n_, "multiplication table not square");
        for (int j = 0; j < G.n_; ++j)
            require(G.mul_[0][j] == j && G.mul_[j][0] == j,
                    "index 0 must be the identity");
        G.inv_.assign(G.n_, -1);
        for (int i = 0; i < G.n_; ++i)
            for (int j = 0; j < G.n_; ++j)
                if (G.mul_[i][j] == 0) G.inv_[i] = j;
        for (int i = 0; i < G.n_; ++i)
            require(G.inv_[i] >= 0, "element without inverse");
        return G;
    }

    /// Build from an element list with a binary operation; elements must be
    /// closed under the operation and contain the identity.
    template <class T, class Mul>
    static FiniteGroup from_elements(std::vector<T> elems, Mul&& op,
                                     std::vector<T>* out_order = nullptr) {
        // put the identity (x with x*x == x) first
        for (size_t i = 0; i < elems.size(); ++i)
            if (op(elems[i], elems[i]) == elems[i]) {
                std::swap(elems[0], elems[i]);
                break;
            }
        std::map<T, int> index;
        for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
        require(index.size() == elems.size(), "duplicate elements");
        std::vector<std::vector<int>> mul(elems.size(),
                                          std::vector<int>(elems.size()));
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j) {
                auto it = index.find(op(elems[i], elems[j]));
                require(it != index.end(), "element list not closed");
                mul[i][j] = it->second;
            }
        if (out_order) *out_order = elems;
        return from_tables(std::move(mul));
    }

    int order() const { return n_; }
    int identity() const { return 0; }
    int mult(int i, int j) const { return mul_[i][j]; }
    int inv(int i) const { return inv_[i]; }
    int conj(int g, int x) const { return mul_[mul_[g][x]][inv_[g]]; }

    int element_order(int i) const {
        int x = i, ord = 1;
        while (x != 0) {
            x = mul_[x][i];
            ++ord;
        }
        return ord;
    }

    int power(int i, long m) const {
        int ord = element_order(i);
        m %= ord;
        if (m < 0) m += ord;
        int r = 0;
        for (long k = 0; k < m; ++k) r = mul_[r][i];
        return r;
    }

    bool is_abelian() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (mul_[i][j] != mul_[j][i]) return false;
        return true;
    }

    std::vector<int> center() const {
        std::vector<int> z;
        for (int i = 0; i < n_; ++i) {
            bool central = true;
            for (int j = 0; j < n_ && central; ++j)
                if (mul_[i][j] != mul_[j][i]) central = false;
            if (central) z.push_back(i);
        }
        return z;
    }

    /// Conjugacy classes, each sorted; classes ordered by least element.
    std::vector<std::vector<int>> conjugacy_classes() const {
        std::vector<int> cls(n_, -1);
        std::vector<std::vector<int>> out;
        for (int i = 0; i < n_; ++i) {
            if (cls[i] >= 0) continue;
            std::vector<int> orbit{i};
            cls[i] = (int)out.size();
            for (size_t k = 0; k < orbit.size(); ++k)
                for (int g = 0; g < n_; ++g) {
                    int y = conj(g, orbit[k]);
                    if (cls[y] < 0) {
                        cls[y] = (int)out.size();
                        orbit.push_back(y);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            out.push_back(std::move(orbit));
        }
        return out;
    }

    std::vector<int> conjugacy_class_of(int x) const {
        std::vector<int> orbit{x};
        std::vector<char> seen(n_, 0);
        seen[x] = 1;
        for (size_t k = 0; k < orbit.size(); ++k)
            for (int g = 0; g < n_; ++g) {
                int y = conj(g, orbit[k]);
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        return orbit;
    }

    bool are_conjugate(int x, int y) const {
        for (int g = 0; g < n_; ++g)
            if (conj(g, x) == y) return true;
        return false;
    }

    std::vector<int> centralizer_of(int x) const {
        std::vector<int> out;
        for (int g = 0; g < n_; ++g)
            if (mul_[g][x] == mul_[x][g]) out.push_back(g);
        return out;
    }

    /// Closure of a seed set under multiplication and inverse; sorted.
    std::vector<int> subgroup_closure(std::vector<int> seed) const {
        std::vector<char> in(n_, 0);
        std::vector<int> work;
        in[0] = 1;
        work.push_back(0);
        for (int s : seed)
            if (!in[s]) {
                in[s] = 1;
                work.push_back(s);
            }
        for (size_t i = 0; i < work.size(); ++i) {
            int inv_i = inv_[work[i]];
            if (!in[inv_i]) {
                in[inv_i] = 1;
                work.push_back(inv_i);
            }
            for (size_t j = 0; j <= i; ++j) {
                for (int prod : {mul_[work[i]][work[j]], mul_[work[j]][work[i]]})
                    if (!in[prod]) {
                        in[prod] = 1;
                        work.push_back(prod);
                    }
            }
        }
        std::sort(work.begin(), work.end());
        return work;
    }

    /// Derived subgroup of the subgroup given by `sub` (sorted element set,
    /// must be closed); defaults to the whole group.
    std::vector<int> derived_subgroup(const std::vector<int>* sub = nullptr) const {
        std::vector<int> all;
        if (!sub) {
            all.resize(n_);
            std::iota(all.begin(), all.end(), 0);
            sub = &all;
        }
        std::vector<int> comms;
        for (int x : *sub)
            for (int y : *sub)
                comms.push_back(mul_[mul_[inv_[x]][inv_[y]]][mul_[x][y]]);
        std::sort(comms.begin(), comms.end());
        comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
        return subgroup_closure(comms);
    }

    /// The subgroup on the given closed element set as a standalone group;
    /// `back_map[i]` is the parent index of the new index i.
    FiniteGroup subgroup(const std::vector<int>& elems,
                         std::vector<int>* back_map = nullptr) const {
        std::vector<int> sorted = elems;
        std::sort(sorted.begin(), sorted.end());
        require(!sorted.empty() && sorted[0] == 0,
                "subgroup must contain the identity");
        std::vector<int> pos(n_, -1);
        for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = (int)i;
        std::vector<std::vector<int>> mul(sorted.size(),
                                          std::vector<int>(sorted.size()));
        for (size_t i = 0; i < sorted.size(); ++i)
            for (size_t j = 0; j < sorted.size(); ++j) {
                int p = mul_[sorted[i]][sorted[j]];
                require(pos[p] >= 0, "element set is not closed");
                mul[i][j] = pos[p];
            }
        if (back_map) *back_map = sorted;
        return from_tables(std::move(mul));
    }

    /// Quotient by a normal subgroup (sorted closed element set);
    /// `proj[x]` maps a parent index to its coset's index in the quotient.
    FiniteGroup quotient(const std::vector<int>& normal,
                         std::vector<int>* proj = nullptr) const {
        std::vector<char> in(n_, 0);
        for (int x : normal) in[x] = 1;
        require(!normal.empty() && in[0], "normal subgroup must contain identity");
        for (int x : normal)
            for (int g = 0; g < n_; ++g)
                require(in[conj(g, x)], "subgroup is not normal");
        // coset representative: least element of xN
        std::vector<int> rep(n_, -1);
        std::vector<int> reps;
        std::vector<int> coset_idx(n_, -1);
        for (int x = 0; x < n_; ++x) {
            if (rep[x] >= 0) continue;
            int least = x;
            std::vector<int> coset;
            for (int m : normal) coset.push_back(mul_[x][m]);
            for (int y : coset) least = std::min(least, y);
            for (int y : coset) rep[y] = least;
        }
        for (int x = 0; x < n_; ++x)
            if (rep[x] == x) {
                coset_idx[x] = (int)reps.size();
                reps.push_back(x);
            }
        // identity coset must come first
        if (reps[0] != rep[0]) {
            // rep[0] is the least element of N, which is 0, so this cannot
            // happen; keep the check for safety
            throw Error("identity coset misplaced");
        }
        std::vector<std::vector<int>> mul(reps.size(),
                                          std::vector<int>(reps.size()));
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = 0; j < reps.size(); ++j)
                mul[i][j] = coset_idx[rep[mul_[reps[i]][reps[j]]]];
        if (proj) {
            proj->assign(n_, -1);
            for (int x = 0; x < n_; ++x) (*proj)[x] = coset_idx[rep[x]];
        }
        return from_tables(std::move(mul));
    }

    /// Invariant factors d_1 | d_2 | ... of the abelianization. For a
    /// non-abelian group this is the abelianization of the quotient by the
    /// derived subgroup.
    std::vector<long> abelian_invariants() const {
        if (!is_abelian()) {
            auto D = derived_subgroup();
            return quotient(D).abelian_invariants();
        }
        // primary decomposition per prime by counting p^k-torsion
        std::map<long, std::vector<int>> primary; // p -> partition (descending)
        long n = n_;
        std::vector<long> primes;
        long m = n;
        for (long d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);
        for (long p : primes) {
            std::vector<int> conj_part; // conj_part[k-1] = #{i : lambda_i >= k}
            long prev_log = 0;
            for (int k = 1;; ++k) {
                long pk = 1;
                for (int t = 0; t < k; ++t) pk *= p;
                long cnt = 0;
                for (int x = 0; x < n_; ++x)
                    if (power(x, pk) == 0) ++cnt;
                long lg = 0;
                while (cnt > 1) {
                    require(cnt % p == 0, "torsion count not a p-power");
                    cnt /= p;
                    ++lg;
                }
                long diff = lg - prev_log;
                if (diff == 0) break;
                conj_part.push_back((int)diff);
                prev_log = lg;
            }
            // conjugate partition
            std::vector<int> part;
            for (int i = 0; i < (conj_part.empty() ? 0 : conj_part[0]); ++i) {
                int v = 0;
                for (int c : conj_part)
                    if (c > i) ++v;
                part.push_back(v);
            }
            if (!part.empty()) primary[p] = part;
        }
        size_t rank = 0;
        for (auto& [p, part] : primary) rank = std::max(rank, part.size());
        std::vector<long> factors(rank, 1);
        for (auto& [p, part] : primary)
            for (size_t i = 0; i < part.size(); ++i) {
                long pe = 1;
                for (int t = 0; t < part[i]; ++t) pe *= p;
                factors[i] *= pe;
            }
        std::reverse(factors.begin(), factors.end()); // ascending, d1 | d2 | ...
        return factors;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
};

/// FiniteGroup built from an enumerated matrix group, with the element list
/// retained for index lookups.
struct MatrixGroup {
    FiniteGroup G;
    std::vector<ProjElement> elems; // elems[i] is the element at index i
    std::map<uint64_t, int> index;  // key -> index

    static MatrixGroup build(GroupTag tag, const Field& F) {
        MatrixGroup mg;
        auto list = enumerate_group(tag, F);
        mg.G = FiniteGroup::from_elements(
            list, [](const ProjElement& x, const ProjElement& y) { return x * y; },
            &mg.elems);
        for (size_t i = 0; i < mg.elems.size(); ++i)
            mg.index[mg.elems[i].key()] = (int)i;
        return mg;
    }

    int index_of(const ProjElement& g) const {
        auto it = index.find(g.key());
        require(it != index.end(), "element not in group");
        return it->second;
    }
};

} // namespace pslrack
