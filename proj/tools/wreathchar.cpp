// Command line front end: single character evaluations, full character
// tables, verification suites, modular-relation reports and core/quotient
// conversions, with an optional persistent value cache.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wreathchar/characters.hpp"
#include "wreathchar/cores_quotients.hpp"
#include "wreathchar/serialize.hpp"
#include "wreathchar/table.hpp"

using namespace wreathchar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CacheScope {
    CharacterEngine& engine;
    std::string path;

    CacheScope(CharacterEngine& eng, const std::string& cli_path) : engine(eng) {
        if (!cli_path.empty()) {
            path = cli_path;
        } else if (const char* env = std::getenv("WREATHCHAR_CACHE")) {
            path = env;
        }
        if (!path.empty()) load_cache(engine, path);
    }

    void save() {
        if (!path.empty()) save_cache(engine, path);
    }
};

std::string complex_string(const CyclotomicNumber& v) {
    std::complex<double> z = v.to_complex();
    std::ostringstream out;
    out.precision(12);
    out << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return out.str();
}

void print_report_items(const VerifyReport& report) {
    for (const auto& item : report.items)
        std::cout << (item.ok ? "[ ok ] " : "[FAIL] ") << item.name
                  << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
}

int run_eval(int k, std::optional<int> n, const std::string& lambda_text, const std::string& rho_text,
             const std::string& method_name, bool expand_step, bool numeric, const std::string& cache_path) {
    ColoredPartition lam = parse_colored_partition(lambda_text);
    ColoredPartition rho = parse_colored_partition(rho_text);
    if (lam.colors() != k || rho.colors() != k)
        throw std::invalid_argument("eval: --lambda/--rho must have exactly k constituents");
    if (n && (lam.total_size() != *n || rho.total_size() != *n))
        throw std::invalid_argument("eval: --n disagrees with the partition sizes");
    CharKey key(lam, rho);
    Method method = method_from_string(method_name);

    if (expand_step) {
        std::vector<ExpansionTerm> terms;
        if (method == Method::RowRemoval) {
            int pivot = CharacterEngine::row_pivot_color(key);
            std::cout << "rule: row  pivot: part " << key.lam.constituent(pivot).part(0) << " of color " << pivot
                      << "\n";
            terms = CharacterEngine::row_expand_step(key, pivot);
        } else if (method == Method::Oracle) {
            throw std::invalid_argument("eval: --expand-step supports methods mn and row");
        } else {
            int pivot = CharacterEngine::mn_pivot_color(key);
            std::cout << "rule: mn  pivot: part " << key.rho.constituent(pivot).part(0) << " of color " << pivot
                      << "\n";
            terms = CharacterEngine::mn_expand_step(key, pivot, 0);
        }
        for (const ExpansionTerm& term : terms)
            std::cout << "term: " << to_display_string(term.coeff) << " lambda=" << to_text(term.lam)
                      << " rho=" << to_text(term.rho) << "\n";
        if (terms.empty()) std::cout << "term: 0 (no admissible removals; the character vanishes)\n";
        return kExitOk;
    }

    CharacterEngine engine;
    CacheScope cache(engine, cache_path);
    CyclotomicNumber value = engine.chi(key, method);
    std::cout << to_standard_string(value) << "\n";
    if (numeric) std::cout << "numeric: " << complex_string(value) << "\n";
    cache.save();
    return kExitOk;
}

int run_table(int k, int n, const std::string& method_name, const std::string& format, const std::string& out_path,
              bool force, bool numeric, const std::string& cache_path) {
    CharacterEngine engine;
    CacheScope cache(engine, cache_path);
    TableOptions opts;
    opts.force = force;
    CharacterTable table = build_table(engine, k, n, method_from_string(method_name), opts);

    std::string payload;
    if (format == "csv") {
        payload = table_to_csv(table);
    } else if (format == "json") {
        json doc = table_to_json(table);
        if (numeric) {
            json values_numeric = json::array();
            for (const auto& row : table.values) {
                json jrow = json::array();
                for (const CyclotomicNumber& v : row) jrow.push_back(complex_string(v));
                values_numeric.push_back(std::move(jrow));
            }
            doc["values_numeric"] = std::move(values_numeric);
        }
        payload = doc.dump(1) + "\n";
    } else {
        throw std::invalid_argument("table: --format must be json or csv");
    }

    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("table: cannot write " + out_path);
        out << payload;
    }
    cache.save();
    return kExitOk;
}

int run_verify(int k, int n, const std::string& suite, bool force, const std::string& cache_path) {
    CharacterEngine engine;
    CacheScope cache(engine, cache_path);
    TableOptions opts;
    opts.force = force;

    VerifyReport combined;
    if (suite == "orthogonality" || suite == "degrees" || suite == "all") {
        CharacterTable table = build_table(engine, k, n, Method::Auto, opts);
        VerifyReport table_report = verify_table(table);
        for (auto& item : table_report.items) {
            bool ortho_item = item.name == "row-orthogonality" || item.name == "conjugation-pairing" ||
                              item.name == "class-sizes" || item.name == "shape";
            bool degree_item = item.name == "degrees" || item.name == "degree-square-sum";
            if (suite == "all" || (suite == "orthogonality" && ortho_item) || (suite == "degrees" && degree_item))
                combined.items.push_back(std::move(item));
        }
    }
    if (suite == "methods" || suite == "all") {
        VerifyReport methods = verify_methods(engine, k, n, opts);
        for (auto& item : methods.items) combined.items.push_back(std::move(item));
    }
    if (combined.items.empty()) throw std::invalid_argument("verify: unknown suite '" + suite + "'");

    print_report_items(combined);
    cache.save();
    return combined.all_ok() ? kExitOk : kExitVerifyFailed;
}

int run_modular(int k, int n, bool force, const std::string& cache_path) {
    CharacterEngine engine;
    CacheScope cache(engine, cache_path);
    TableOptions opts;
    opts.force = force;
    ModularReport report = modular_report(engine, k, n, opts);

    std::cout << "classes:";
    for (const Partition& p : report.column_classes) std::cout << " " << to_text(p);
    std::cout << "\n";
    for (size_t a = 0; a < report.characters.size(); ++a) {
        std::cout << to_text(report.big_partitions[a]) << " <- " << to_text(report.characters[a])
                  << " : d =";
        for (int d : report.d_values[a]) std::cout << " " << d;
        std::cout << "  | S_" << report.k * report.n << " mod " << report.k << " =";
        for (int v : report.mod_values[a]) std::cout << " " << v;
        std::cout << "  (sigma " << (report.sigmas[a] > 0 ? "+1" : "-1") << ")\n";
    }
    if (report.all_ok) {
        std::cout << "[ ok ] modular relation holds on all " << report.characters.size() << "x"
                  << report.characters.size() << " pairs\n";
    } else {
        for (const std::string& f : report.failures) std::cout << "[FAIL] " << f << "\n";
    }
    cache.save();
    return report.all_ok ? kExitOk : kExitVerifyFailed;
}

int run_core_quotient(int k, const std::string& partition_text, bool invert, const std::string& core_text,
                      const std::string& quotient_text) {
    if (invert) {
        if (core_text.empty() || quotient_text.empty())
            throw std::invalid_argument("core-quotient: --invert needs --core and --quotient");
        Partition core = parse_partition(core_text);
        ColoredPartition quotient = parse_colored_partition(quotient_text);
        if (quotient.colors() != k) throw std::invalid_argument("core-quotient: quotient must have k constituents");
        std::cout << "partition: " << to_text(from_core_quotient(core, quotient, k)) << "\n";
        return kExitOk;
    }
    if (partition_text.empty()) throw std::invalid_argument("core-quotient: --partition is required");
    Partition lambda = parse_partition(partition_text);
    Partition core = k_core(lambda, k);
    ColoredPartition quotient = k_quotient(lambda, k);
    std::cout << "core: " << to_text(core) << "\n";
    std::cout << "quotient: " << to_text(quotient) << "\n";
    std::cout << "sigma: " << sigma(lambda, k) << "\n";
    std::cout << "size-identity: " << lambda.size() << " = " << k << "*" << quotient.total_size() << " + "
              << core.size() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact character computations for the generalized symmetric group C_k wr S_n"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one irreducible character value");
    int eval_k = 1;
    std::optional<int> eval_n;
    std::string eval_lambda, eval_rho, eval_method = "auto", eval_cache;
    bool eval_expand = false, eval_numeric = false;
    eval->add_option("--k", eval_k, "number of colors")->required();
    eval->add_option("--n", eval_n, "total size (checked against the partitions)");
    eval->add_option("--lambda", eval_lambda, "character label, e.g. [[4,1],[3,1,1],[2]]")->required();
    eval->add_option("--rho", eval_rho, "class label, e.g. [[5,2],[3],[1,1]]")->required();
    eval->add_option("--method", eval_method, "mn|row|oracle|auto");
    eval->add_flag("--expand-step", eval_expand, "print the one-step expansion instead of the value");
    eval->add_flag("--numeric", eval_numeric, "also print a complex float rendering");
    eval->add_option("--cache", eval_cache, "persistent cache file (or WREATHCHAR_CACHE)");

    // table
    auto* table = app.add_subcommand("table", "generate the full character table");
    int table_k = 1, table_n = 0;
    std::string table_method = "auto", table_format = "json", table_out, table_cache;
    bool table_force = false, table_numeric = false;
    table->add_option("--k", table_k, "number of colors")->required();
    table->add_option("--n", table_n, "total size")->required();
    table->add_option("--method", table_method, "mn|row|oracle|auto");
    table->add_option("--format", table_format, "json|csv");
    table->add_option("--out", table_out, "output path (stdout when omitted)");
    table->add_flag("--force", table_force, "ignore the table size guard");
    table->add_flag("--numeric", table_numeric, "add complex float values (json only)");
    table->add_option("--cache", table_cache, "persistent cache file (or WREATHCHAR_CACHE)");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites on a table");
    int verify_k = 1, verify_n = 0;
    std::string verify_suite = "all", verify_cache;
    bool verify_force = false;
    verify->add_option("--k", verify_k, "number of colors")->required();
    verify->add_option("--n", verify_n, "total size")->required();
    verify->add_option("--suite", verify_suite, "orthogonality|degrees|methods|all");
    verify->add_flag("--force", verify_force, "ignore the table size guard");
    verify->add_option("--cache", verify_cache, "persistent cache file (or WREATHCHAR_CACHE)");

    // modular
    auto* modular = app.add_subcommand("modular", "digit-sum report for the modular relation");
    int modular_k = 1, modular_n = 0;
    std::string modular_cache;
    bool modular_force = false;
    modular->add_option("--k", modular_k, "number of colors")->required();
    modular->add_option("--n", modular_n, "total size")->required();
    modular->add_flag("--force", modular_force, "ignore the table size guard");
    modular->add_option("--cache", modular_cache, "persistent cache file (or WREATHCHAR_CACHE)");

    // core-quotient
    auto* cq = app.add_subcommand("core-quotient", "k-core/k-quotient of a partition (or the inverse)");
    int cq_k = 1;
    std::string cq_partition, cq_core, cq_quotient;
    bool cq_invert = false;
    cq->add_option("--k", cq_k, "number of runners")->required();
    cq->add_option("--partition", cq_partition, "partition, e.g. [4,2,1]");
    cq->add_flag("--invert", cq_invert, "rebuild the partition from --core and --quotient");
    cq->add_option("--core", cq_core, "k-core partition (with --invert)");
    cq->add_option("--quotient", cq_quotient, "k-quotient colored partition (with --invert)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed())
            return run_eval(eval_k, eval_n, eval_lambda, eval_rho, eval_method, eval_expand, eval_numeric,
                            eval_cache);
        if (table->parsed())
            return run_table(table_k, table_n, table_method, table_format, table_out, table_force, table_numeric,
                             table_cache);
        if (verify->parsed()) return run_verify(verify_k, verify_n, verify_suite, verify_force, verify_cache);
        if (modular->parsed()) return run_modular(modular_k, modular_n, modular_force, modular_cache);
        if (cq->parsed()) return run_core_quotient(cq_k, cq_partition, cq_invert, cq_core, cq_quotient);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
