#pragma once

#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "wreathchar/characters.hpp"
#include "wreathchar/cores_quotients.hpp"
#include "wreathchar/partitions.hpp"

namespace wreathchar {

/// Centralizer order of the class rho in C_k wr S_n:
/// prod_i z_{rho^{(i)}} k^{l(rho^{(i)})}.
inline Integer centralizer_order(int k, const ColoredPartition& rho) {
    Integer z = 1;
    for (int i = 0; i < k; ++i) {
        z *= z_of(rho.constituent(i));
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(rho.constituent(i).length()));
        z *= power;
    }
    return z;
}

inline Integer group_order(int k, int n) {
    Integer g;
    mpz_ui_pow_ui(g.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    return g * factorial(n);
}

struct CharacterTable {
    int k = 1;
    int n = 0;
    std::vector<ColoredPartition> characters;
    std::vector<ColoredPartition> classes;
    std::vector<std::vector<CyclotomicNumber>> values; // [character][class], standard form
    std::vector<Integer> centralizers;                 // per class
};

struct TableOptions {
    long max_classes = 20000; // refuse larger tables unless forced
    bool force = false;
    unsigned threads = 0; // 0 = hardware concurrency
};

/// Class column order: the printed tables for k = 3, n <= 3 list classes in
/// the reverse of the character order; elsewhere both sides share the
/// enumeration order.
inline std::vector<ColoredPartition> table_class_order(int k, int n) {
    std::vector<ColoredPartition> classes = enumerate_colored(k, n);
    if (k == 3 && n <= 3) std::reverse(classes.begin(), classes.end());
    return classes;
}

inline void check_table_guard(int k, int n, const TableOptions& opts) {
    if (opts.force) return;
    if (count_colored(k, n) > opts.max_classes)
        throw std::invalid_argument("table: more than " + std::to_string(opts.max_classes) +
                                    " classes; pass --force to proceed");
}

inline CharacterTable build_table(CharacterEngine& engine, int k, int n, Method method = Method::Auto,
                                  const TableOptions& opts = {}) {
    if (k < 1 || n < 0) throw std::invalid_argument("table: need k >= 1 and n >= 0");
    check_table_guard(k, n, opts);

    CharacterTable table;
    table.k = k;
    table.n = n;
    table.characters = enumerate_colored(k, n);
    table.classes = table_class_order(k, n);
    size_t rows = table.characters.size();
    size_t cols = table.classes.size();
    table.values.assign(rows, std::vector<CyclotomicNumber>(cols, CyclotomicNumber(k)));
    table.centralizers.reserve(cols);
    for (const ColoredPartition& rho : table.classes) table.centralizers.push_back(centralizer_order(k, rho));

    unsigned workers = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<size_t>(workers, std::max<size_t>(rows * cols, 1)));

    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            size_t cell = next.fetch_add(1);
            if (cell >= rows * cols) return;
            size_t r = cell / cols;
            size_t c = cell % cols;
            table.values[r][c] = engine.chi(CharKey(table.characters[r], table.classes[c]), method);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return table;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct VerifyReport {
    struct Item {
        std::string name;
        bool ok = false;
        std::string detail;
    };
    std::vector<Item> items;

    bool all_ok() const {
        for (const Item& item : items)
            if (!item.ok) return false;
        return true;
    }

    void add(std::string name, bool ok, std::string detail = "") {
        items.push_back(Item{std::move(name), ok, std::move(detail)});
    }
};

/// Index of the identity class {(1^n), empty, ...} in the class list.
inline size_t identity_class_index(const CharacterTable& table) {
    std::vector<Partition> constituents(static_cast<size_t>(table.k));
    if (table.n > 0) constituents[0] = Partition(std::vector<int>(static_cast<size_t>(table.n), 1));
    ColoredPartition identity(std::move(constituents));
    for (size_t c = 0; c < table.classes.size(); ++c)
        if (table.classes[c] == identity) return c;
    throw std::logic_error("table: identity class missing");
}

/// Row orthogonality, degree identities, class-size sum and conjugation
/// pairing; failures become report entries rather than errors.
inline VerifyReport verify_table(const CharacterTable& table) {
    VerifyReport report;
    const int k = table.k;
    size_t rows = table.characters.size();
    size_t cols = table.classes.size();

    bool square = (rows == cols) && count_colored(k, table.n) == static_cast<unsigned long>(rows);
    report.add("shape", square, std::to_string(rows) + " characters, " + std::to_string(cols) + " classes");

    // Row orthogonality: sum_rho chi(rho) conj(psi(rho)) / Z(rho) = delta.
    bool ortho = true;
    std::string ortho_detail;
    for (size_t a = 0; a < rows && ortho; ++a) {
        for (size_t b = a; b < rows && ortho; ++b) {
            CyclotomicNumber acc(k);
            for (size_t c = 0; c < cols; ++c) {
                Rational weight(Integer(1), table.centralizers[c]);
                weight.canonicalize();
                acc += table.values[a][c] * table.values[b][c].conjugate() * weight;
            }
            CyclotomicNumber expected = CyclotomicNumber::integer(k, a == b ? 1 : 0);
            if (acc != expected) {
                ortho = false;
                ortho_detail = "rows " + to_text(table.characters[a]) + " and " + to_text(table.characters[b]);
            }
        }
    }
    report.add("row-orthogonality", ortho, ortho_detail);

    // Identity column carries the degrees; their squares sum to |G|.
    bool degrees_ok = true;
    std::string degree_detail;
    Integer degree_square_sum = 0;
    try {
        size_t id = identity_class_index(table);
        for (size_t a = 0; a < rows; ++a) {
            Integer d = degree(table.characters[a]);
            degree_square_sum += d * d;
            if (table.values[a][id] != CyclotomicNumber::integer(k, Rational(d))) {
                degrees_ok = false;
                degree_detail = "character " + to_text(table.characters[a]);
                break;
            }
        }
    } catch (const std::exception& e) {
        degrees_ok = false;
        degree_detail = e.what();
    }
    report.add("degrees", degrees_ok, degree_detail);
    Integer order = group_order(k, table.n);
    report.add("degree-square-sum", degree_square_sum == order,
               degree_square_sum.get_str() + " vs " + order.get_str());

    // Class sizes |G|/Z(rho) must sum back to |G|.
    bool sizes_ok = true;
    Integer size_sum = 0;
    for (size_t c = 0; c < cols; ++c) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), order.get_mpz_t(), table.centralizers[c].get_mpz_t());
        if (r != 0) sizes_ok = false;
        size_sum += q;
    }
    report.add("class-sizes", sizes_ok && size_sum == order, size_sum.get_str() + " vs " + order.get_str());

    // Inverse classes: negating all colors of rho conjugates every value.
    bool conj_ok = true;
    std::string conj_detail;
    std::map<std::string, size_t> class_index;
    for (size_t c = 0; c < cols; ++c) class_index[to_text(table.classes[c])] = c;
    for (size_t c = 0; c < cols && conj_ok; ++c) {
        std::vector<Partition> flipped(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            flipped[static_cast<size_t>((k - i) % k)] = table.classes[c].constituent(i);
        auto it = class_index.find(to_text(ColoredPartition(std::move(flipped))));
        if (it == class_index.end()) {
            conj_ok = false;
            conj_detail = "inverse class missing for " + to_text(table.classes[c]);
            break;
        }
        for (size_t a = 0; a < rows; ++a) {
            if (table.values[a][it->second] != table.values[a][c].conjugate()) {
                conj_ok = false;
                conj_detail = "character " + to_text(table.characters[a]) + " at " + to_text(table.classes[c]);
                break;
            }
        }
    }
    report.add("conjugation-pairing", conj_ok, conj_detail);

    return report;
}

/// Three-way equality of the iterative rules and the brute-force oracle on
/// every key of the given (k, n).
inline VerifyReport verify_methods(CharacterEngine& engine, int k, int n, const TableOptions& opts = {}) {
    check_table_guard(k, n, opts);
    VerifyReport report;
    std::vector<ColoredPartition> all = enumerate_colored(k, n);
    bool ok = true;
    std::string detail;
    for (const ColoredPartition& lam : all) {
        for (const ColoredPartition& rho : all) {
            CharKey key(lam, rho);
            CyclotomicNumber mn = engine.mn_value(key);
            CyclotomicNumber row = engine.row_value(key);
            CyclotomicNumber oracle = engine.oracle().specht_value(key);
            if (mn != row || mn != oracle) {
                ok = false;
                detail = key.cache_key();
                break;
            }
        }
        if (!ok) break;
    }
    report.add("method-equivalence", ok, detail);
    return report;
}

// ---------------------------------------------------------------------------
// Modular relation report
// ---------------------------------------------------------------------------

struct ModularReport {
    int k = 1;
    int n = 0;
    std::vector<ColoredPartition> characters;
    std::vector<Partition> big_partitions;   // S_{kn} labels per character
    std::vector<int> sigmas;                 // sign of the rim-hook descent per label
    std::vector<Partition> column_classes;   // flattened k*rho, one per partition of n
    std::vector<std::vector<int>> d_values;  // digit sums d(chi), [character][column]
    std::vector<std::vector<int>> mod_values; // S_{kn} character values mod k (= sigma * d)
    bool all_ok = true;
    std::vector<std::string> failures;
};

/// Runs the modular relation on every pair, folding equal flattened classes
/// into one column. d must agree within a column, and the companion matrix
/// of S_{kn} values mod k (the published form of the comparison) is
/// emitted alongside.
inline ModularReport modular_report(CharacterEngine& engine, int k, int n, const TableOptions& opts = {}) {
    check_table_guard(k, n, opts);
    ModularReport report;
    report.k = k;
    report.n = n;
    report.characters = enumerate_colored(k, n);

    std::vector<Partition> plain = enumerate_partitions(n);
    std::map<std::string, size_t> column_of;
    for (const Partition& p : plain) {
        std::vector<int> scaled;
        for (int part : p.parts()) scaled.push_back(part * k);
        Partition big(std::move(scaled));
        column_of[to_text(p)] = report.column_classes.size();
        report.column_classes.push_back(std::move(big));
    }

    for (const ColoredPartition& lam : report.characters) {
        report.big_partitions.push_back(from_core_quotient(Partition{}, lam, k));
        report.sigmas.push_back(sigma(report.big_partitions.back(), k));
    }

    size_t cols = report.column_classes.size();
    report.d_values.assign(report.characters.size(), std::vector<int>(cols, -1));
    report.mod_values.assign(report.characters.size(), std::vector<int>(cols, 0));
    for (size_t a = 0; a < report.characters.size(); ++a) {
        for (size_t c = 0; c < cols; ++c) {
            Integer v = engine.oracle().classical_mn(report.big_partitions[a], report.column_classes[c]);
            Integer reduced;
            mpz_fdiv_r_ui(reduced.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
            report.mod_values[a][c] = static_cast<int>(reduced.get_si());
        }
        for (const ColoredPartition& rho : report.characters) {
            ModularCheck check = verify_modular_relation(engine, report.characters[a], rho, k);
            size_t col = column_of.at(to_text(flatten(rho)));
            int& cell = report.d_values[a][col];
            if (cell < 0) cell = check.lhs;
            if (!check.ok || cell != check.lhs) {
                report.all_ok = false;
                report.failures.push_back("lambda=" + to_text(report.characters[a]) + " rho=" + to_text(rho) +
                                          " lhs=" + std::to_string(check.lhs) +
                                          " rhs=" + std::to_string(check.rhs));
            }
        }
    }
    return report;
}

} // namespace wreathchar
