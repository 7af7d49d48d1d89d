#pragma once

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreathchar/charkey.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/partitions.hpp"

namespace wreathchar {

/// Brute-force evaluator used to cross-check the iterative formulas. It
/// combines a classical S_n Murnaghan-Nakayama recursion (on bead
/// positions, not on the border-strip scanner the main engine uses) with
/// the Fourier expansion of the colored power sums, and shares no
/// recursion code with CharacterEngine.
///
/// The coloring enumeration is exponential in the number of parts of rho;
/// fine at cross-check scale (n <= 6 or so), not meant for large inputs.
class SpechtOracle {
public:
    /// Irreducible S_n character chi^lambda at the class of cycle type rho.
    Integer classical_mn(const Partition& lam, const Partition& rho) {
        if (lam.size() != rho.size()) throw std::invalid_argument("classical_mn: |lambda| != |rho|");
        return classical_rec(lam, rho, 0);
    }

    /// Character of the generalized symmetric group as a sum over colorings
    /// of the parts of rho: each part of constituent i takes a color j with
    /// weight w^{-ij}, and a coloring contributes the product of classical
    /// characters chi^{lambda^{(j)}} over the induced partitions.
    CyclotomicNumber specht_value(const CharKey& key) {
        const int k = key.k();
        struct Piece {
            int source_color;
            int size;
        };
        std::vector<Piece> pieces;
        for (int i = 0; i < k; ++i)
            for (int p : key.rho.constituent(i).parts()) pieces.push_back(Piece{i, p});

        std::vector<long long> capacity(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) capacity[static_cast<size_t>(j)] = key.lam.constituent(j).size();

        std::vector<std::vector<int>> assigned(static_cast<size_t>(k));
        CyclotomicNumber total(k);
        auto rec = [&](auto&& self, size_t idx, long exponent) -> void {
            if (idx == pieces.size()) {
                Integer factor = 1;
                for (int j = 0; j < k; ++j) {
                    factor *= classical_mn(key.lam.constituent(j),
                                           Partition::sorted(assigned[static_cast<size_t>(j)]));
                    if (factor == 0) break;
                }
                if (factor != 0) total += omega_power(k, exponent) * Rational(factor);
                return;
            }
            const Piece& piece = pieces[idx];
            for (int j = 0; j < k; ++j) {
                if (capacity[static_cast<size_t>(j)] < piece.size) continue;
                capacity[static_cast<size_t>(j)] -= piece.size;
                assigned[static_cast<size_t>(j)].push_back(piece.size);
                self(self, idx + 1, exponent - static_cast<long>(piece.source_color) * j);
                assigned[static_cast<size_t>(j)].pop_back();
                capacity[static_cast<size_t>(j)] += piece.size;
            }
        };
        rec(rec, 0, 0);
        return total.standard_form();
    }

private:
    Integer classical_rec(const Partition& lam, const Partition& rho, size_t rho_index) {
        if (rho_index == rho.length()) return 1; // lam is empty too
        std::string memo_key = to_text(lam) + "|" + std::to_string(rho_index) + "|" + to_text(rho);
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(memo_key);
            if (it != cache_.end()) return it->second;
        }
        int m = rho.part(rho_index);
        // Beta numbers with l(lam) beads; removing an m-strip moves one
        // bead from b to b-m, with sign given by the beads jumped over.
        int l = static_cast<int>(lam.length());
        std::vector<int> beta(static_cast<size_t>(l));
        for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = lam.part(static_cast<size_t>(i)) + (l - 1 - i);
        Integer acc = 0;
        for (int i = 0; i < l; ++i) {
            int b = beta[static_cast<size_t>(i)];
            int target = b - m;
            if (target < 0) continue;
            bool occupied = false;
            int jumped = 0;
            for (int j = 0; j < l; ++j) {
                int x = beta[static_cast<size_t>(j)];
                if (x == target) occupied = true;
                if (x > target && x < b) ++jumped;
            }
            if (occupied) continue;
            std::vector<int> moved = beta;
            moved[static_cast<size_t>(i)] = target;
            std::sort(moved.begin(), moved.end(), std::greater<int>());
            std::vector<int> parts(static_cast<size_t>(l));
            for (int j = 0; j < l; ++j) parts[static_cast<size_t>(j)] = moved[static_cast<size_t>(j)] - (l - 1 - j);
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            Integer sub = classical_rec(Partition(std::move(parts)), rho, rho_index + 1);
            if (jumped % 2)
                acc -= sub;
            else
                acc += sub;
        }
        {
            std::unique_lock lock(mutex_);
            cache_[memo_key] = acc;
        }
        return acc;
    }

    std::unordered_map<std::string, Integer> cache_;
    std::shared_mutex mutex_;
};

} // namespace wreathchar
