#pragma once

#include <stdexcept>
#include <string>

#include "wreathchar/partitions.hpp"

namespace wreathchar {

enum class Method { Auto, MurnaghanNakayama, RowRemoval, Oracle };

inline Method method_from_string(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "mn") return Method::MurnaghanNakayama;
    if (s == "row") return Method::RowRemoval;
    if (s == "oracle") return Method::Oracle;
    throw std::invalid_argument("unknown method '" + s + "' (expected mn|row|oracle|auto)");
}

/// (character label, class label) pair for one evaluation; both colored
/// partitions must have the same number of colors and the same total size.
struct CharKey {
    ColoredPartition lam;
    ColoredPartition rho;

    CharKey(ColoredPartition l, ColoredPartition r) : lam(std::move(l)), rho(std::move(r)) {
        if (lam.colors() != rho.colors()) throw std::invalid_argument("character key: mismatched k");
        if (lam.total_size() != rho.total_size())
            throw std::invalid_argument("character key: |lambda| and |rho| differ");
    }

    int k() const { return lam.colors(); }
    long long n() const { return lam.total_size(); }

    std::string cache_key() const {
        return std::to_string(k()) + ";" + to_text(lam) + ";" + to_text(rho);
    }

    bool operator==(const CharKey& o) const { return lam == o.lam && rho == o.rho; }
};

/// One summand of either recursion: coefficient times a smaller character.
struct ExpansionTerm {
    CyclotomicNumber coeff;
    ColoredPartition lam;
    ColoredPartition rho;
};

} // namespace wreathchar
