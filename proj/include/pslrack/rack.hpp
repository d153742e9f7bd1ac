#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "pslrack/config.hpp"
#include "pslrack/conjugacy.hpp"
#include "pslrack/group.hpp"

namespace pslrack {

/// A finite rack on indices 0..n-1 with a dense operation table,
/// op(x,y) = x |> y. For conjugation racks x |> y = x y x^{-1}.
class FiniteRack {
public:
    FiniteRack() = default;
    explicit FiniteRack(std::vector<std::vector<int>> op) : op_(std::move(op)) {
        n_ = (int)op_.size();
        for (auto& row : op_)
            require((int)row.size() == n_, "operation table not square");
        build_inverse();
    }

    /// Conjugation rack on a subset of a group (indices into G); the subset
    /// must be closed under conjugation by its own elements.
    static FiniteRack conjugation(const FiniteGroup& G,
                                  const std::vector<int>& subset,
                                  std::vector<int>* back_map = nullptr) {
        std::vector<int> elems = subset;
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        std::map<int, int> pos;
        for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = (int)i;
        std::vector<std::vector<int>> op(elems.size(),
                                         std::vector<int>(elems.size()));
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j) {
                int y = G.conj(elems[i], elems[j]);
                auto it = pos.find(y);
                require(it != pos.end(),
                        "subset not closed under self-conjugation");
                op[i][j] = it->second;
            }
        if (back_map) *back_map = elems;
        return FiniteRack(std::move(op));
    }

    /// Conjugation rack on a list of matrix group elements (e.g. a class).
    static FiniteRack conjugation(const std::vector<ProjElement>& elems) {
        std::map<uint64_t, int> pos;
        for (size_t i = 0; i < elems.size(); ++i) pos[elems[i].key()] = (int)i;
        std::vector<std::vector<int>> op(elems.size(),
                                         std::vector<int>(elems.size()));
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j) {
                auto it = pos.find(conjugate(elems[i], elems[j]).key());
                require(it != pos.end(),
                        "element list not closed under self-conjugation");
                op[i][j] = it->second;
            }
        return FiniteRack(std::move(op));
    }

    int size() const { return n_; }
    int op(int x, int y) const { return op_[x][y]; }
    int op_inv(int x, int y) const { return op_inv_[x][y]; }

    /// Self-distributivity and bijectivity of left translations; quandle
    /// additionally requires x |> x = x.
    bool is_rack() const {
        for (int x = 0; x < n_; ++x) {
            std::vector<char> hit(n_, 0);
            for (int y = 0; y < n_; ++y) {
                if (hit[op_[x][y]]) return false;
                hit[op_[x][y]] = 1;
            }
        }
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z)
                    if (op_[x][op_[y][z]] != op_[op_[x][y]][op_[x][z]])
                        return false;
        return true;
    }

    bool is_quandle() const {
        for (int x = 0; x < n_; ++x)
            if (op_[x][x] != x) return false;
        return is_rack();
    }

    /// Closure of a seed under the operation and its inverse; sorted.
    std::vector<int> subrack_closure(const std::vector<int>& seed) const {
        std::vector<char> in(n_, 0);
        std::vector<int> work;
        for (int s : seed)
            if (!in[s]) {
                in[s] = 1;
                work.push_back(s);
            }
        for (size_t i = 0; i < work.size(); ++i)
            for (size_t j = 0; j < work.size(); ++j)
                for (int v : {op_[work[i]][work[j]], op_inv_[work[i]][work[j]],
                              op_[work[j]][work[i]], op_inv_[work[j]][work[i]]})
                    if (!in[v]) {
                        in[v] = 1;
                        work.push_back(v);
                    }
        std::sort(work.begin(), work.end());
        return work;
    }

    bool is_closed(const std::vector<int>& subset) const {
        std::vector<char> in(n_, 0);
        for (int s : subset) in[s] = 1;
        for (int x : subset)
            for (int y : subset)
                if (!in[op_[x][y]]) return false;
        return true;
    }

    /// x |> y = y for all pairs.
    bool is_abelian(const std::vector<int>* subset = nullptr) const {
        if (subset) {
            for (int x : *subset)
                for (int y : *subset)
                    if (op_[x][y] != y) return false;
            return true;
        }
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (op_[x][y] != y) return false;
        return true;
    }

    /// Nonabelian, and every proper subrack is abelian. Equivalent to: every
    /// pair with x |> y != y generates the whole rack.
    bool is_minimal_nonabelian() const {
        bool nonabelian = false;
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                if (op_[x][y] == y) continue;
                nonabelian = true;
                if ((int)subrack_closure({x, y}).size() != n_) return false;
            }
        return nonabelian;
    }

    /// All subracks (including the empty set and the whole rack), sorted.
    /// Exhaustive power-set scan for size <= 15; otherwise closures of all
    /// seeds of at most `max_seed` elements, which is complete for the
    /// subracks generated by that many elements.
    std::vector<std::vector<int>> enumerate_subracks(int max_seed = 3) const {
        std::set<std::vector<int>> out;
        out.insert(std::vector<int>{});
        if (n_ <= 15) {
            for (unsigned mask = 1; mask < (1u << n_); ++mask) {
                std::vector<int> sub;
                for (int i = 0; i < n_; ++i)
                    if (mask & (1u << i)) sub.push_back(i);
                if (is_closed(sub)) out.insert(sub);
            }
        } else {
            std::vector<int> seed;
            enumerate_seeded(out, seed, 0, max_seed);
        }
        return {out.begin(), out.end()};
    }

private:
    void enumerate_seeded(std::set<std::vector<int>>& out,
                          std::vector<int>& seed, int from, int left) const {
        if (!seed.empty()) out.insert(subrack_closure(seed));
        if (left == 0) return;
        for (int i = from; i < n_; ++i) {
            seed.push_back(i);
            enumerate_seeded(out, seed, i + 1, left - 1);
            seed.pop_back();
        }
    }

    void build_inverse() {
        op_inv_.assign(n_, std::vector<int>(n_, -1));
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                require(op_inv_[x][op_[x][y]] < 0,
                        "left translation is not a bijection");
                op_inv_[x][op_[x][y]] = y;
            }
    }

    int n_ = 0;
    std::vector<std::vector<int>> op_;
    std::vector<std::vector<int>> op_inv_;
};

/// Injective rack homomorphism from R into S, found by backtracking; empty
/// if none exists. Sizes are capped by the embedding bound.
inline std::vector<int> find_rack_embedding(const FiniteRack& R,
                                            const FiniteRack& S) {
    require(R.size() <= Limits::get().embed_bound &&
                S.size() <= Limits::get().embed_bound,
            "embedding search bound exceeded");
    if (R.size() > S.size()) return {};
    std::vector<int> img(R.size(), -1);
    std::vector<char> used(S.size(), 0);

    // check every constraint whose three participants are all assigned and
    // which involves position k (each pair is eventually checked once)
    auto consistent = [&](int k) {
        for (int i = 0; i <= k; ++i) {
            int a = R.op(i, k);
            if (a <= k && S.op(img[i], img[k]) != img[a]) return false;
            int b = R.op(k, i);
            if (b <= k && S.op(img[k], img[i]) != img[b]) return false;
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (R.op(i, j) == k && S.op(img[i], img[j]) != img[k])
                    return false;
        return true;
    };

    std::function<bool(int)> place = [&](int k) -> bool {
        if (k == R.size()) return true;
        for (int t = 0; t < S.size(); ++t) {
            if (used[t]) continue;
            img[k] = t;
            used[t] = 1;
            if (consistent(k) && place(k + 1)) return true;
            used[t] = 0;
            img[k] = -1;
        }
        return false;
    };
    if (place(0)) return img;
    return {};
}

} // namespace pslrack
