#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wreathchar/charkey.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/oracle.hpp"
#include "wreathchar/partitions.hpp"

namespace wreathchar {

/// chi^lambda at the identity class: n! over the product of the hook
/// products of all constituents. The division is exact.
inline Integer degree(const ColoredPartition& lam) {
    Integer denom = 1;
    for (int i = 0; i < lam.colors(); ++i) denom *= hook_product(lam.constituent(i));
    Integer num = factorial(lam.total_size());
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    if (r != 0) throw std::logic_error("degree: hook products do not divide n!");
    return q;
}

/// Evaluates irreducible characters of C_k wr S_n through two independent
/// recursions plus closed forms, with per-method memo caches and one
/// value-level cache shared by the chi() entry point. All caches are safe
/// for concurrent lookup and insertion (writers produce identical values,
/// so last-writer-wins is harmless).
class CharacterEngine {
public:
    // -- one-step expansions -------------------------------------------------

    /// One application of the colored Murnaghan-Nakayama rule on the part
    /// of rho at (color, part_index): one term per border-strip removal of
    /// that size from any constituent of lambda, with coefficient
    /// (-1)^{height} w^{-color*j}. Terms are not merged; an empty result
    /// means the character vanishes.
    static std::vector<ExpansionTerm> mn_expand_step(const CharKey& key, int color, size_t part_index) {
        const int k = key.k();
        if (color < 0 || color >= k) throw std::invalid_argument("mn_expand_step: bad color");
        const Partition& chosen = key.rho.constituent(color);
        if (part_index >= chosen.length()) throw std::invalid_argument("mn_expand_step: bad part index");
        int m = chosen.part(part_index);
        ColoredPartition child_rho = key.rho.with_constituent(color, chosen.without_index(part_index));

        std::vector<ExpansionTerm> terms;
        for (const ColoredRimHookRemoval& rem : colored_rim_hooks(key.lam, m)) {
            CyclotomicNumber coeff = omega_power(k, -static_cast<long>(color) * rem.color);
            if (rem.height % 2) coeff = -coeff;
            terms.push_back(ExpansionTerm{std::move(coeff), rem.remaining, child_rho});
        }
        return terms;
    }

    /// One application of the row-removal rule on constituent `color` of
    /// lambda (its largest part s is removed). Sums over indexed colored
    /// sub-partitions mu of rho with |mu| >= s, plain partitions tau of
    /// |mu| - s and colorings t of tau's parts; the term coefficient is
    /// w^{(|t| - eta(mu)) * color} * (-1)^{l(tau)} / (k^{l(tau)} z_tau).
    /// Terms with equal (lam, rho) are merged and exact zeros dropped.
    static std::vector<ExpansionTerm> row_expand_step(const CharKey& key, int color) {
        const int k = key.k();
        if (color < 0 || color >= k) throw std::invalid_argument("row_expand_step: bad color");
        const Partition& constituent = key.lam.constituent(color);
        if (constituent.empty()) throw std::invalid_argument("row_expand_step: empty constituent");
        const int s = constituent.part(0);
        ColoredPartition child_lam = remove_first_part(key.lam, color);

        std::map<std::string, ExpansionTerm> merged;
        auto add_term = [&](const CyclotomicNumber& coeff, const ColoredPartition& child_rho) {
            std::string id = to_text(child_rho);
            auto it = merged.find(id);
            if (it == merged.end())
                merged.emplace(std::move(id), ExpansionTerm{coeff, child_lam, child_rho});
            else
                it->second.coeff += coeff;
        };

        for (const ColoredSubPartitionSplit& split : colored_sub_partitions(key.rho)) {
            long long mu_size = split.chosen.total_size();
            if (mu_size < s) continue;
            int excess = static_cast<int>(mu_size - s);
            long long eta_mu = split.chosen.eta();
            for (const Partition& tau : enumerate_partitions(excess)) {
                size_t l_tau = tau.length();
                Integer denom;
                mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(l_tau));
                denom *= z_of(tau);
                Rational scale(Integer((l_tau % 2) ? -1 : 1), denom);
                scale.canonicalize();

                std::vector<int> coloring(l_tau, 0);
                while (true) {
                    long t_sum = 0;
                    for (int t : coloring) t_sum += t;
                    std::vector<std::vector<int>> per_color(static_cast<size_t>(k));
                    for (size_t idx = 0; idx < l_tau; ++idx)
                        per_color[static_cast<size_t>(coloring[idx])].push_back(tau.part(idx));
                    std::vector<Partition> tau_colored;
                    tau_colored.reserve(static_cast<size_t>(k));
                    for (int j = 0; j < k; ++j) tau_colored.emplace_back(std::move(per_color[static_cast<size_t>(j)]));

                    CyclotomicNumber coeff =
                        omega_power(k, static_cast<long>((t_sum - eta_mu) * color)) * scale;
                    add_term(coeff, color_union(split.rest, ColoredPartition(std::move(tau_colored))));

                    // Next coloring in odometer order.
                    size_t pos = 0;
                    while (pos < l_tau && coloring[pos] == k - 1) coloring[pos++] = 0;
                    if (pos == l_tau) break;
                    ++coloring[pos];
                }
            }
        }

        std::vector<ExpansionTerm> terms;
        for (auto& [id, term] : merged) {
            (void)id;
            if (!term.coeff.is_zero()) terms.push_back(std::move(term));
        }
        return terms;
    }

    // -- pivots ---------------------------------------------------------------

    /// Color of the globally largest part of rho (ties to the lowest color);
    /// the part index within that constituent is 0.
    static int mn_pivot_color(const CharKey& key) { return largest_part_color(key.rho); }

    /// Color of the globally largest part of lambda (ties to the lowest color).
    static int row_pivot_color(const CharKey& key) { return largest_part_color(key.lam); }

    // -- full recursions -------------------------------------------------------

    CyclotomicNumber mn_value(const CharKey& key) {
        if (key.n() == 0) return CyclotomicNumber::integer(key.k(), 1);
        std::string id = key.cache_key();
        if (auto hit = cache_find(mn_cache_, id)) return *hit;
        CyclotomicNumber acc(key.k());
        for (const ExpansionTerm& term : mn_expand_step(key, mn_pivot_color(key), 0))
            acc += term.coeff * mn_value(CharKey(term.lam, term.rho));
        CyclotomicNumber value = acc.standard_form();
        cache_store(mn_cache_, id, value);
        return value;
    }

    /// mn recursion expanded on an arbitrary pivot part at the top level
    /// (children recurse normally); the result must not depend on the pivot.
    CyclotomicNumber mn_value_with_pivot(const CharKey& key, int color, size_t part_index) {
        if (key.n() == 0) return CyclotomicNumber::integer(key.k(), 1);
        CyclotomicNumber acc(key.k());
        for (const ExpansionTerm& term : mn_expand_step(key, color, part_index))
            acc += term.coeff * mn_value(CharKey(term.lam, term.rho));
        return acc.standard_form();
    }

    CyclotomicNumber row_value(const CharKey& key) {
        if (key.n() == 0) return CyclotomicNumber::integer(key.k(), 1);
        std::string id = key.cache_key();
        if (auto hit = cache_find(row_cache_, id)) return *hit;
        CyclotomicNumber acc(key.k());
        for (const ExpansionTerm& term : row_expand_step(key, row_pivot_color(key)))
            acc += term.coeff * row_value(CharKey(term.lam, term.rho));
        if (!acc.is_integral())
            throw std::logic_error("row_value: non-integral character value for " + key.cache_key());
        CyclotomicNumber value = acc.standard_form();
        cache_store(row_cache_, id, value);
        return value;
    }

    // -- closed forms -----------------------------------------------------------

    /// Class is a single n-cycle at some color: (-1)^{leg} w^{-ij} when
    /// lambda is a colored hook at color j, otherwise 0.
    static std::optional<CyclotomicNumber> special_ncycle_class(const CharKey& key) {
        if (key.n() == 0) return std::nullopt;
        auto cls = single_nonempty(key.rho);
        if (!cls || cls->second.length() != 1) return std::nullopt;
        int class_color = cls->first;
        auto chr = single_nonempty(key.lam);
        if (chr) {
            const Partition& hook = chr->second;
            bool is_hook = hook.length() <= 1 || hook.part(1) == 1;
            if (is_hook) {
                int leg = static_cast<int>(hook.length()) - 1;
                CyclotomicNumber v = omega_power(key.k(), -static_cast<long>(class_color) * chr->first);
                return (leg % 2) ? -v : v;
            }
        }
        return CyclotomicNumber::zero(key.k());
    }

    /// Character label is a single row (n) at color i: w^{-eta(rho) i}.
    static std::optional<CyclotomicNumber> special_one_row(const CharKey& key) {
        if (key.n() == 0) return std::nullopt;
        auto chr = single_nonempty(key.lam);
        if (!chr || chr->second.length() != 1) return std::nullopt;
        return omega_power(key.k(), -key.rho.eta() * chr->first);
    }

    /// Class is (1^n) at color j: w^{-deg(lambda) j} times the degree.
    static std::optional<CyclotomicNumber> special_identity_class(const CharKey& key) {
        if (key.n() == 0) return std::nullopt;
        auto cls = single_nonempty(key.rho);
        if (!cls || cls->second.part(0) != 1) return std::nullopt;
        CyclotomicNumber v = omega_power(key.k(), -key.lam.deg() * cls->first);
        return v * Rational(degree(key.lam));
    }

    /// Character label is a single column (1^n) at color j:
    /// w^{-eta(rho) j} (-1)^{l(rho) + n}.
    static std::optional<CyclotomicNumber> special_one_column(const CharKey& key) {
        if (key.n() == 0) return std::nullopt;
        auto chr = single_nonempty(key.lam);
        if (!chr || chr->second.part(0) != 1) return std::nullopt;
        CyclotomicNumber v = omega_power(key.k(), -key.rho.eta() * chr->first);
        return ((key.rho.total_length() + key.n()) % 2) ? -v : v;
    }

    /// First applicable closed form, if any.
    static std::optional<CyclotomicNumber> special_value(const CharKey& key) {
        if (key.n() == 0) return CyclotomicNumber::integer(key.k(), 1);
        if (auto v = special_one_row(key)) return v->standard_form();
        if (auto v = special_one_column(key)) return v->standard_form();
        if (auto v = special_identity_class(key)) return v->standard_form();
        if (auto v = special_ncycle_class(key)) return v->standard_form();
        return std::nullopt;
    }

    // -- dispatch ----------------------------------------------------------------

    /// Value-level entry point with its own cache, shared across methods
    /// (all methods compute the same value).
    CyclotomicNumber chi(const CharKey& key, Method method = Method::Auto) {
        if (key.n() == 0) return CyclotomicNumber::integer(key.k(), 1);
        std::string id = key.cache_key();
        if (auto hit = cache_find(value_cache_, id)) return *hit;
        CyclotomicNumber value = CyclotomicNumber::zero(key.k());
        switch (method) {
        case Method::Auto: {
            auto closed = special_value(key);
            value = closed ? *closed : mn_value(key);
            break;
        }
        case Method::MurnaghanNakayama:
            value = mn_value(key);
            break;
        case Method::RowRemoval:
            value = row_value(key);
            break;
        case Method::Oracle:
            value = oracle_.specht_value(key);
            break;
        }
        cache_store(value_cache_, id, value);
        return value;
    }

    SpechtOracle& oracle() { return oracle_; }

    // -- persistent cache support ---------------------------------------------

    std::vector<std::pair<std::string, CyclotomicNumber>> export_values() const {
        std::shared_lock lock(value_mutex_);
        return {value_cache_.begin(), value_cache_.end()};
    }

    void import_value(const std::string& id, const CyclotomicNumber& value) {
        std::unique_lock lock(value_mutex_);
        value_cache_.insert_or_assign(id, value);
    }

    size_t value_cache_size() const {
        std::shared_lock lock(value_mutex_);
        return value_cache_.size();
    }

private:
    using Cache = std::unordered_map<std::string, CyclotomicNumber>;

    static int largest_part_color(const ColoredPartition& cp) {
        int best_color = -1;
        int best_part = 0;
        for (int j = 0; j < cp.colors(); ++j) {
            const Partition& p = cp.constituent(j);
            if (!p.empty() && p.part(0) > best_part) {
                best_part = p.part(0);
                best_color = j;
            }
        }
        if (best_color < 0) throw std::logic_error("pivot: all constituents empty");
        return best_color;
    }

    static std::optional<std::pair<int, Partition>> single_nonempty(const ColoredPartition& cp) {
        int found = -1;
        for (int i = 0; i < cp.colors(); ++i) {
            if (cp.constituent(i).empty()) continue;
            if (found >= 0) return std::nullopt;
            found = i;
        }
        if (found < 0) return std::nullopt;
        return std::make_pair(found, cp.constituent(found));
    }

    std::optional<CyclotomicNumber> cache_find(const Cache& cache, const std::string& id) const {
        std::shared_lock lock(mutex_for(cache));
        auto it = cache.find(id);
        if (it == cache.end()) return std::nullopt;
        return it->second;
    }

    void cache_store(Cache& cache, const std::string& id, const CyclotomicNumber& value) {
        std::unique_lock lock(mutex_for(cache));
        cache.insert_or_assign(id, value);
    }

    std::shared_mutex& mutex_for(const Cache& cache) const {
        if (&cache == &mn_cache_) return mn_mutex_;
        if (&cache == &row_cache_) return row_mutex_;
        return value_mutex_;
    }

    Cache mn_cache_;
    Cache row_cache_;
    Cache value_cache_;
    mutable std::shared_mutex mn_mutex_;
    mutable std::shared_mutex row_mutex_;
    mutable std::shared_mutex value_mutex_;
    SpechtOracle oracle_;
};

} // namespace wreathchar
