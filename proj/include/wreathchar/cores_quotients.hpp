#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wreathchar/characters.hpp"
#include "wreathchar/partitions.hpp"

namespace wreathchar {

/// Beta numbers of lambda with exactly `beads` beads (beads >= l(lambda)):
/// the strictly decreasing values lambda_i + beads - i.
inline std::vector<int> beta_set(const Partition& lambda, int beads) {
    if (beads < static_cast<int>(lambda.length())) throw std::invalid_argument("beta_set: too few beads");
    std::vector<int> beta(static_cast<size_t>(beads));
    for (int i = 0; i < beads; ++i) {
        int part = (i < static_cast<int>(lambda.length())) ? lambda.part(static_cast<size_t>(i)) : 0;
        beta[static_cast<size_t>(i)] = part + (beads - 1 - i);
    }
    return beta;
}

inline Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int beads = static_cast<int>(beta.size());
    std::vector<int> parts(static_cast<size_t>(beads));
    for (int i = 0; i < beads; ++i) {
        int p = beta[static_cast<size_t>(i)] - (beads - 1 - i);
        if (p < 0) throw std::invalid_argument("partition_from_beta: invalid beta set");
        parts[static_cast<size_t>(i)] = p;
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

struct CoreDescent {
    Partition core;
    long long total_height = 0;
};

/// Removes k-rim hooks until none remain, along the canonical path that
/// always keeps the lexicographically largest remaining partition. The
/// resulting core and the height parity are independent of the path
/// (checked by tests, not assumed here).
inline CoreDescent core_descent(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("core_descent: k must be >= 1");
    CoreDescent out{lambda, 0};
    while (true) {
        std::vector<RimHookRemoval> removals = rim_hooks(out.core, k);
        if (removals.empty()) return out;
        const RimHookRemoval* best = &removals.front();
        for (const RimHookRemoval& rem : removals)
            if (best->remaining < rem.remaining) best = &rem;
        out.total_height += best->height;
        out.core = best->remaining;
    }
}

inline Partition k_core(const Partition& lambda, int k) { return core_descent(lambda, k).core; }

/// (-1)^{summed heights} along any removal path to the k-core.
inline int sigma(const Partition& lambda, int k) {
    return (core_descent(lambda, k).total_height % 2) ? -1 : 1;
}

/// k-quotient via the abacus: beta numbers split by residue mod k, one
/// runner per residue. `beads` must be a positive multiple of k at least
/// l(lambda); 0 picks the least valid value.
inline ColoredPartition k_quotient(const Partition& lambda, int k, int beads = 0) {
    if (k < 1) throw std::invalid_argument("k_quotient: k must be >= 1");
    int l = static_cast<int>(lambda.length());
    if (beads == 0) beads = ((l + k - 1) / k) * k;
    if (beads < l || beads % k != 0) throw std::invalid_argument("k_quotient: bad bead count");

    std::vector<std::vector<int>> runners(static_cast<size_t>(k));
    for (int b : beta_set(lambda, beads)) runners[static_cast<size_t>(b % k)].push_back(b / k);

    std::vector<Partition> constituents;
    constituents.reserve(static_cast<size_t>(k));
    for (int r = 0; r < k; ++r) {
        std::vector<int>& q = runners[static_cast<size_t>(r)];
        std::sort(q.begin(), q.end(), std::greater<int>());
        int m_r = static_cast<int>(q.size());
        std::vector<int> parts(q.size());
        for (int s = 0; s < m_r; ++s) parts[static_cast<size_t>(s)] = q[static_cast<size_t>(s)] - (m_r - 1 - s);
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        constituents.emplace_back(std::move(parts));
    }
    return ColoredPartition(std::move(constituents));
}

/// Inverse of (k_core, k_quotient): advance runner r of the core's abacus
/// by the parts of quotient constituent r and read off the partition.
inline Partition from_core_quotient(const Partition& core, const ColoredPartition& quotient, int k) {
    if (k < 1) throw std::invalid_argument("from_core_quotient: k must be >= 1");
    if (quotient.colors() != k) throw std::invalid_argument("from_core_quotient: quotient must have k constituents");
    if (!(k_core(core, k) == core)) throw std::invalid_argument("from_core_quotient: core admits a k-rim hook");

    int beads = ((static_cast<int>(core.length()) + k - 1) / k) * k;
    if (beads == 0) beads = k;
    while (true) {
        std::vector<std::vector<int>> runners(static_cast<size_t>(k));
        for (int b : beta_set(core, beads)) runners[static_cast<size_t>(b % k)].push_back(b / k);
        bool enough = true;
        for (int r = 0; r < k; ++r)
            if (runners[static_cast<size_t>(r)].size() < quotient.constituent(r).length()) enough = false;
        if (!enough) {
            beads += k;
            continue;
        }
        std::vector<int> beta;
        beta.reserve(static_cast<size_t>(beads));
        for (int r = 0; r < k; ++r) {
            std::vector<int>& q = runners[static_cast<size_t>(r)];
            std::sort(q.begin(), q.end(), std::greater<int>());
            int m_r = static_cast<int>(q.size());
            const Partition& add = quotient.constituent(r);
            for (int s = 0; s < m_r; ++s) {
                int part = (s < static_cast<int>(add.length())) ? add.part(static_cast<size_t>(s)) : 0;
                beta.push_back(k * (part + (m_r - 1 - s)) + r);
            }
        }
        Partition lambda = partition_from_beta(std::move(beta));
        if (lambda.size() != static_cast<long long>(k) * quotient.total_size() + core.size())
            throw std::logic_error("from_core_quotient: size identity failed");
        return lambda;
    }
}

struct ModularCheck {
    int lhs = 0; // digit sum of the wreath character value
    int rhs = 0; // sigma * classical character of S_{kn}, reduced mod k
    bool ok = false;
};

/// The modular relation: d(chi^lam_rho) computed in C_k wr S_n equals
/// sigma_Lambda * chi^Lambda_{k rho} mod k, where Lambda is the partition
/// of kn with empty k-core and k-quotient lam, and the class is the
/// flattened rho with every part multiplied by k.
inline ModularCheck verify_modular_relation(CharacterEngine& engine, const ColoredPartition& lam,
                                            const ColoredPartition& rho, int k) {
    if (lam.colors() != k || rho.colors() != k)
        throw std::invalid_argument("verify_modular_relation: constituent count must be k");
    if (lam.total_size() != rho.total_size())
        throw std::invalid_argument("verify_modular_relation: sizes differ");

    CharKey key(lam, rho);
    ModularCheck out;
    out.lhs = engine.chi(key, Method::Auto).digit_sum();

    Partition big_lambda = from_core_quotient(Partition{}, lam, k);
    Partition flat = flatten(rho);
    std::vector<int> scaled;
    for (int p : flat.parts()) scaled.push_back(p * k);
    Partition big_rho(std::move(scaled));

    Integer value = engine.oracle().classical_mn(big_lambda, big_rho) * sigma(big_lambda, k);
    Integer reduced;
    mpz_fdiv_r_ui(reduced.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(k));
    out.rhs = static_cast<int>(reduced.get_si());
    out.ok = (out.lhs == out.rhs);
    return out;
}

} // namespace wreathchar
