#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreathchar/cyclotomic.hpp"

namespace wreathchar {

/// Weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts descending and drops zeros before constructing.
    static Partition sorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int part(size_t i) const { return parts_.at(i); }
    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    long long size() const {
        long long s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    Partition without_index(size_t i) const {
        std::vector<int> p = parts_;
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
        return Partition(std::move(p));
    }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
        return Partition(std::move(c));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
};

/// k-tuple of partitions; indexes both the irreducible characters and the
/// conjugacy classes of the generalized symmetric group. Aggregate
/// statistics are cached at construction.
class ColoredPartition {
public:
    explicit ColoredPartition(int colors) : ColoredPartition(std::vector<Partition>(check_colors(colors))) {}

    explicit ColoredPartition(std::vector<Partition> constituents) : constituents_(std::move(constituents)) {
        check_colors(static_cast<int>(constituents_.size()));
        for (size_t i = 0; i < constituents_.size(); ++i) {
            const Partition& p = constituents_[i];
            total_size_ += p.size();
            total_length_ += static_cast<long long>(p.length());
            eta_ += static_cast<long long>(i) * static_cast<long long>(p.length());
            deg_ += static_cast<long long>(i) * p.size();
        }
    }

    int colors() const { return static_cast<int>(constituents_.size()); }
    const Partition& constituent(int i) const { return constituents_.at(static_cast<size_t>(i)); }
    const std::vector<Partition>& constituents() const { return constituents_; }

    long long total_size() const { return total_size_; }
    long long total_length() const { return total_length_; }
    /// eta = sum over colors i of i * l(constituent i).
    long long eta() const { return eta_; }
    /// deg = sum over colors i of i * |constituent i|.
    long long deg() const { return deg_; }

    bool all_empty() const { return total_size_ == 0; }

    ColoredPartition with_constituent(int color, Partition p) const {
        std::vector<Partition> c = constituents_;
        c[static_cast<size_t>(color)] = std::move(p);
        return ColoredPartition(std::move(c));
    }

    bool operator==(const ColoredPartition& o) const { return constituents_ == o.constituents_; }
    auto operator<=>(const ColoredPartition& o) const { return constituents_ <=> o.constituents_; }

private:
    static int check_colors(int k) {
        if (k < 1) throw std::invalid_argument("colored partition: k must be >= 1");
        return k;
    }

    std::vector<Partition> constituents_;
    long long total_size_ = 0;
    long long total_length_ = 0;
    long long eta_ = 0;
    long long deg_ = 0;
};

// ---------------------------------------------------------------------------
// Text forms: "[5,3,2]" for partitions, "[[4,1],[3,1,1],[2]]" for colored
// partitions, "[]" for the empty partition.
// ---------------------------------------------------------------------------

inline std::string to_text(const Partition& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.part(i));
    }
    return out + "]";
}

inline std::string to_text(const ColoredPartition& cp) {
    std::string out = "[";
    for (int i = 0; i < cp.colors(); ++i) {
        if (i) out += ",";
        out += to_text(cp.constituent(i));
    }
    return out + "]";
}

namespace detail {

inline void skip_space(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline int parse_int(const std::string& s, size_t& pos) {
    skip_space(s, pos);
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("partition: expected integer in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
}

inline std::vector<int> parse_int_list(const std::string& s, size_t& pos) {
    skip_space(s, pos);
    if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("partition: expected '[' in '" + s + "'");
    ++pos;
    std::vector<int> out;
    skip_space(s, pos);
    if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return out;
    }
    while (true) {
        out.push_back(parse_int(s, pos));
        skip_space(s, pos);
        if (pos >= s.size()) throw std::invalid_argument("partition: unterminated list in '" + s + "'");
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] == ']') {
            ++pos;
            return out;
        }
        throw std::invalid_argument("partition: unexpected character in '" + s + "'");
    }
}

} // namespace detail

inline Partition parse_partition(const std::string& s) {
    size_t pos = 0;
    std::vector<int> parts = detail::parse_int_list(s, pos);
    detail::skip_space(s, pos);
    if (pos != s.size()) throw std::invalid_argument("partition: trailing characters in '" + s + "'");
    return Partition(std::move(parts));
}

inline ColoredPartition parse_colored_partition(const std::string& s) {
    size_t pos = 0;
    detail::skip_space(s, pos);
    if (pos >= s.size() || s[pos] != '[')
        throw std::invalid_argument("colored partition: expected '[' in '" + s + "'");
    ++pos;
    std::vector<Partition> constituents;
    detail::skip_space(s, pos);
    if (pos < s.size() && s[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            constituents.emplace_back(detail::parse_int_list(s, pos));
            detail::skip_space(s, pos);
            if (pos >= s.size()) throw std::invalid_argument("colored partition: unterminated '" + s + "'");
            if (s[pos] == ',') {
                ++pos;
                continue;
            }
            if (s[pos] == ']') {
                ++pos;
                break;
            }
            throw std::invalid_argument("colored partition: unexpected character in '" + s + "'");
        }
    }
    detail::skip_space(s, pos);
    if (pos != s.size()) throw std::invalid_argument("colored partition: trailing characters in '" + s + "'");
    return ColoredPartition(std::move(constituents));
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All partitions of n in reverse-lexicographic (descending) order, e.g.
/// (3), (2,1), (1,1,1).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            acc.push_back(p);
            self(self, remaining - p, p);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All k-colored partitions of total size n. Order: size compositions
/// (n_0, ..., n_{k-1}) in descending lexicographic order first, then the
/// per-color partitions in reverse-lexicographic order with color 0 most
/// significant. This is the order the published tables use.
inline std::vector<ColoredPartition> enumerate_colored(int k, int n) {
    if (k < 1) throw std::invalid_argument("enumerate_colored: k must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_colored: n must be >= 0");
    std::vector<std::vector<Partition>> per_size(static_cast<size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) per_size[static_cast<size_t>(s)] = enumerate_partitions(s);

    std::vector<std::vector<int>> compositions;
    std::vector<int> sizes(static_cast<size_t>(k));
    auto comp_rec = [&](auto&& self, int color, int remaining) -> void {
        if (color == k - 1) {
            sizes[static_cast<size_t>(color)] = remaining;
            compositions.push_back(sizes);
            return;
        }
        for (int s = remaining; s >= 0; --s) {
            sizes[static_cast<size_t>(color)] = s;
            self(self, color + 1, remaining - s);
        }
    };
    comp_rec(comp_rec, 0, n);

    std::vector<ColoredPartition> out;
    std::vector<Partition> acc(static_cast<size_t>(k));
    for (const std::vector<int>& comp : compositions) {
        auto fill_rec = [&](auto&& self, int color) -> void {
            if (color == k) {
                out.emplace_back(acc);
                return;
            }
            for (const Partition& p : per_size[static_cast<size_t>(comp[static_cast<size_t>(color)])]) {
                acc[static_cast<size_t>(color)] = p;
                self(self, color + 1);
            }
        };
        fill_rec(fill_rec, 0);
    }
    return out;
}

/// Number of k-colored partitions of n, i.e. the coefficient of q^n in
/// prod_m (1 - q^m)^{-k}.
inline Integer count_colored(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("count_colored: bad arguments");
    std::vector<Integer> dp(static_cast<size_t>(n) + 1);
    dp[0] = 1;
    // One factor (1 - q^m)^{-1} per color and part size.
    for (int c = 0; c < k; ++c)
        for (int m = 1; m <= n; ++m)
            for (int s = m; s <= n; ++s) dp[static_cast<size_t>(s)] += dp[static_cast<size_t>(s - m)];
    return dp[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of a permutation
/// of cycle type lambda in S_n.
inline Integer z_of(const Partition& p) {
    Integer z = 1;
    size_t i = 0;
    while (i < p.length()) {
        size_t j = i;
        while (j < p.length() && p.part(j) == p.part(i)) ++j;
        unsigned long mult = static_cast<unsigned long>(j - i);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p.part(i)), mult);
        z *= power;
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), mult);
        z *= fact;
        i = j;
    }
    return z;
}

inline Integer factorial(long long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/// Product of all hook lengths of the diagram.
inline Integer hook_product(const Partition& p) {
    Integer prod = 1;
    Partition conj = p.conjugate();
    for (size_t i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) {
            long long hook = p.part(i) + conj.part(static_cast<size_t>(j)) - static_cast<long long>(i) - j - 1;
            prod *= static_cast<long>(hook);
        }
    return prod;
}

// ---------------------------------------------------------------------------
// Rim hooks (border strips)
// ---------------------------------------------------------------------------

struct RimHookRemoval {
    Partition remaining;
    int height = 0;
    int hook_size = 0;

    bool operator==(const RimHookRemoval& o) const {
        return remaining == o.remaining && height == o.height && hook_size == o.hook_size;
    }
};

struct ColoredRimHookRemoval {
    ColoredPartition remaining;
    int color = 0;
    int height = 0;
    int hook_size = 0;
};

/// All removals of an m-cell border strip from the diagram, by direct
/// boundary scanning: a strip is determined by its top row i and the
/// number of extra rows r it spans; rows i..i+r-1 shrink to the next row's
/// length minus one and row i+r keeps lambda_i - m + r cells.
inline std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("rim_hooks: m must be >= 1");
    std::vector<RimHookRemoval> out;
    const auto& parts = lambda.parts();
    int l = static_cast<int>(parts.size());
    for (int i = 0; i < l; ++i) {
        for (int r = 0; i + r < l; ++r) {
            long long tail = static_cast<long long>(parts[static_cast<size_t>(i)]) - m + r;
            int below = (i + r + 1 < l) ? parts[static_cast<size_t>(i + r + 1)] : 0;
            if (tail < below) continue; // would break monotonicity (or go negative)
            // Strip must remove at least one cell from its last row; for
            // r >= 1 this is also the monotonicity junction with row i+r-1.
            if (tail > parts[static_cast<size_t>(i + r)] - 1) continue;
            std::vector<int> rest = parts;
            for (int t = i; t < i + r; ++t) rest[static_cast<size_t>(t)] = parts[static_cast<size_t>(t + 1)] - 1;
            rest[static_cast<size_t>(i + r)] = static_cast<int>(tail);
            while (!rest.empty() && rest.back() == 0) rest.pop_back();
            out.push_back(RimHookRemoval{Partition(std::move(rest)), r, m});
        }
    }
    return out;
}

/// Union over colors of the single-color removals; exactly one constituent
/// loses a border strip.
inline std::vector<ColoredRimHookRemoval> colored_rim_hooks(const ColoredPartition& cp, int m) {
    std::vector<ColoredRimHookRemoval> out;
    for (int j = 0; j < cp.colors(); ++j) {
        for (RimHookRemoval& rem : rim_hooks(cp.constituent(j), m)) {
            out.push_back(ColoredRimHookRemoval{cp.with_constituent(j, std::move(rem.remaining)), j, rem.height, m});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Indexed sub-partitions (selection of parts by index subset)
// ---------------------------------------------------------------------------

struct SubPartitionSplit {
    Partition chosen;
    Partition rest;
};

/// One entry per index subset of the parts, 2^{l} in total; equal parts
/// produce repeated entries on purpose.
inline std::vector<SubPartitionSplit> sub_partitions_indexed(const Partition& rho) {
    size_t l = rho.length();
    if (l > 30) throw std::invalid_argument("sub_partitions_indexed: partition too long");
    std::vector<SubPartitionSplit> out;
    out.reserve(static_cast<size_t>(1) << l);
    for (unsigned long mask = 0; mask < (1ul << l); ++mask) {
        std::vector<int> chosen, rest;
        for (size_t i = 0; i < l; ++i) {
            if (mask & (1ul << i))
                chosen.push_back(rho.part(i));
            else
                rest.push_back(rho.part(i));
        }
        out.push_back(SubPartitionSplit{Partition(std::move(chosen)), Partition(std::move(rest))});
    }
    return out;
}

struct ColoredSubPartitionSplit {
    ColoredPartition chosen;
    ColoredPartition rest;
};

/// Cartesian product of the per-color index subsets, 2^{l(rho)} entries.
inline std::vector<ColoredSubPartitionSplit> colored_sub_partitions(const ColoredPartition& rho) {
    int k = rho.colors();
    std::vector<std::vector<SubPartitionSplit>> per_color;
    per_color.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) per_color.push_back(sub_partitions_indexed(rho.constituent(i)));

    std::vector<ColoredSubPartitionSplit> out;
    std::vector<Partition> chosen(static_cast<size_t>(k)), rest(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int color) -> void {
        if (color == k) {
            out.push_back(ColoredSubPartitionSplit{ColoredPartition(chosen), ColoredPartition(rest)});
            return;
        }
        for (const SubPartitionSplit& split : per_color[static_cast<size_t>(color)]) {
            chosen[static_cast<size_t>(color)] = split.chosen;
            rest[static_cast<size_t>(color)] = split.rest;
            self(self, color + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Rearrangement helpers
// ---------------------------------------------------------------------------

/// Forgets the colors and sorts all parts into one partition.
inline Partition flatten(const ColoredPartition& cp) {
    std::vector<int> all;
    for (int i = 0; i < cp.colors(); ++i)
        for (int p : cp.constituent(i).parts()) all.push_back(p);
    return Partition::sorted(std::move(all));
}

/// Color-wise juxtaposition: each constituent is the merge of the two
/// corresponding constituents.
inline ColoredPartition color_union(const ColoredPartition& a, const ColoredPartition& b) {
    if (a.colors() != b.colors()) throw std::invalid_argument("color_union: mismatched k");
    std::vector<Partition> merged;
    merged.reserve(static_cast<size_t>(a.colors()));
    for (int i = 0; i < a.colors(); ++i) {
        std::vector<int> parts = a.constituent(i).parts();
        const auto& extra = b.constituent(i).parts();
        parts.insert(parts.end(), extra.begin(), extra.end());
        merged.push_back(Partition::sorted(std::move(parts)));
    }
    return ColoredPartition(std::move(merged));
}

/// Deletes the largest part of constituent j.
inline ColoredPartition remove_first_part(const ColoredPartition& cp, int color) {
    const Partition& p = cp.constituent(color);
    if (p.empty()) throw std::invalid_argument("remove_first_part: constituent is empty");
    return cp.with_constituent(color, p.without_index(0));
}

} // namespace wreathchar
