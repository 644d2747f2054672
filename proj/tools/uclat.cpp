// uclat: exact search for the smallest circles through exactly n points of
// the nine class-number-one quadratic lattices.
//
// Exit codes: 0 success, 1 usage error, 2 bound exhausted, 3 reference-table
// mismatch, 4 internal integrity error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "uclat/cache.hpp"
#include "uclat/golden.hpp"
#include "uclat/rings.hpp"
#include "uclat/search.hpp"
#include "uclat/version.hpp"

using namespace uclat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBoundExhausted = 2;
constexpr int kExitTableMismatch = 3;
constexpr int kExitIntegrity = 4;

std::vector<int> parse_d_list(const std::string& arg) {
    std::vector<int> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int d = std::stoi(item);
        if (!LatticeSpec::valid_d(d)) {
            throw CLI::ValidationError("--d", "d must be one of 1,2,3,7,11,19,43,67,163");
        }
        out.push_back(d);
    }
    if (out.empty()) throw CLI::ValidationError("--d", "no lattice given");
    return out;
}

std::pair<int, int> parse_n_range(const std::string& arg) {
    auto pos = arg.find("..");
    int lo, hi;
    if (pos == std::string::npos) {
        lo = hi = std::stoi(arg);
    } else {
        lo = std::stoi(arg.substr(0, pos));
        hi = std::stoi(arg.substr(pos + 2));
    }
    if (lo < 3 || hi < lo) {
        throw CLI::ValidationError("--n", "need 3 <= lo <= hi");
    }
    return {lo, hi};
}

BigRat parse_rat(const std::string& arg, const std::string& flag) {
    try {
        return BigRat::parse(arg);
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected an integer or num/den fraction");
    }
}

struct CommonOpts {
    std::string cache_path = "uclat_cache.jsonl";
    bool no_cache = false;
    std::string format = "text";
    int threads = 1;
    std::string mode;  // "", "certified", "heuristic"
    // Default heuristic region radius. 90 is the smallest round radius that
    // reaches every reference value reachable at this scale (a region of
    // radius ell can only emit a circle that has three points within an
    // ell-ball; several d=67/163 reference circles need 52..87).
    std::string ell = "90";
    std::string bound = "4";
    std::string bound_cap = "1048576";
    bool approx = false;
    bool force_certified = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_mode = true) {
    cmd->add_option("--cache", o.cache_path, "cache file path (JSON lines)");
    cmd->add_flag("--no-cache", o.no_cache, "skip the cache entirely");
    cmd->add_option("--format", o.format, "output format: text|md|csv|json")
        ->check(CLI::IsMember({"text", "md", "csv", "json"}));
    cmd->add_option("--threads", o.threads, "worker threads for the search");
    if (with_mode) {
        cmd->add_option("--mode", o.mode, "search mode: certified|heuristic")
            ->check(CLI::IsMember({"certified", "heuristic"}));
        cmd->add_option("--ell", o.ell, "heuristic region radius");
        cmd->add_option("--bound", o.bound, "certified starting bound on the squared radius");
        cmd->add_option("--bound-cap", o.bound_cap, "certified deepening cap");
        cmd->add_flag("--force-certified", o.force_certified,
                      "use certified mode even where heuristic is the default");
        cmd->add_flag("--approx", o.approx, "also print decimal approximations");
    }
}

// Certified is the default everywhere except d = 67 and 163, whose certified
// scan disks are far beyond desk scale for the larger n.
SearchMode default_mode_for(int d) {
    return (d == 67 || d == 163) ? SearchMode::Heuristic : SearchMode::Certified;
}

struct ResolvedConfig {
    SearchConfig cfg;
    std::string mode_name;
};

ResolvedConfig resolve_config(const CommonOpts& o, int d) {
    SearchMode mode = default_mode_for(d);
    if (!o.mode.empty()) mode = o.mode == "certified" ? SearchMode::Certified : SearchMode::Heuristic;
    if (o.force_certified) mode = SearchMode::Certified;

    SearchConfig cfg;
    cfg.mode = mode;
    cfg.threads = o.threads;
    if (mode == SearchMode::Heuristic) {
        cfg.bound = parse_rat(o.ell, "--ell");
    } else {
        cfg.bound = parse_rat(o.bound, "--bound");
        cfg.bound_cap = parse_rat(o.bound_cap, "--bound-cap");
    }
    if (cfg.bound.sgn() <= 0) throw CLI::ValidationError("--bound", "must be positive");
    return {cfg, mode == SearchMode::Certified ? "certified" : "heuristic"};
}

// Cache-aware single-cell computation. Lets bound_exhausted_error propagate.
UcResult compute_uc(int d, int n, const ResolvedConfig& rc, const CommonOpts& o) {
    auto spec = LatticeSpec::for_d(d);
    if (!o.no_cache) {
        CacheFile cache(o.cache_path);
        if (auto hit = cache.lookup(d, n, rc.mode_name, rc.cfg.bound)) {
            return hit->to_result();
        }
    }
    UcResult res = uc(spec, n, rc.cfg);
    if (!o.no_cache) {
        CacheFile cache(o.cache_path);
        cache.append(CacheRecord::from_result(res, rc.cfg.bound));
    }
    return res;
}

void print_result_text(const UcResult& r, bool approx) {
    std::cout << "uc(d=" << r.lattice_d << ", n=" << r.n << ") = " << r.min_radius2.str()
              << (r.certified ? " (certified" : " (heuristic upper bound")
              << ", bound_used=" << r.bound_used.str() << ")";
    if (approx) std::cout << "  ≈ " << r.min_radius2.to_double();
    std::cout << "\n    witness center (" << r.witness.center.x.str() << ", "
              << r.witness.center.y.str() << ")*, points:";
    for (const auto& p : r.witness_points) std::cout << " (" << p.a << "," << p.b << ")";
    std::cout << "\n";
}

int cmd_uc(const std::string& d_arg, const std::string& n_arg, const CommonOpts& o) {
    auto ds = parse_d_list(d_arg);
    auto [n_lo, n_hi] = parse_n_range(n_arg);
    int exit_code = kExitOk;
    nlohmann::json out_json = nlohmann::json::array();

    for (int d : ds) {
        ResolvedConfig rc = resolve_config(o, d);
        for (int n = n_lo; n <= n_hi; ++n) {
            try {
                UcResult r = compute_uc(d, n, rc, o);
                if (o.format == "json") {
                    out_json.push_back(CacheRecord::from_result(r, rc.cfg.bound).to_json());
                } else if (o.format == "csv") {
                    std::cout << d << "," << n << "," << r.min_radius2.str() << ","
                              << (r.certified ? "certified" : "heuristic") << "\n";
                } else {
                    print_result_text(r, o.approx);
                }
            } catch (const bound_exhausted_error& e) {
                exit_code = kExitBoundExhausted;
                std::cout << "uc(d=" << d << ", n=" << n << "): bound exhausted at "
                          << e.bound_used.str();
                if (e.best_upper) std::cout << ", best upper bound " << e.best_upper->str();
                std::cout << "\n";
            }
        }
    }
    if (o.format == "json") std::cout << out_json.dump(2) << "\n";
    return exit_code;
}

int cmd_table(const std::string& d_arg, bool check, const CommonOpts& o) {
    auto ds = parse_d_list(d_arg);
    int exit_code = kExitOk;
    int matched = 0;
    std::vector<std::string> mismatches;
    nlohmann::json out_json = nlohmann::json::array();

    bool md = o.format == "md" || o.format == "text";
    if (md) {
        std::cout << "| -d | d_K |";
        for (int n = 3; n <= 10; ++n) std::cout << " uc(" << n << ") |";
        std::cout << "\n|---|---|";
        for (int n = 3; n <= 10; ++n) std::cout << "---|";
        std::cout << "\n";
    }

    for (int d : ds) {
        auto spec = LatticeSpec::for_d(d);
        ResolvedConfig rc = resolve_config(o, d);

        std::vector<std::optional<UcResult>> row;
        bool row_from_cache = !o.no_cache;
        if (row_from_cache) {
            CacheFile cache(o.cache_path);
            for (int n = 3; n <= 10; ++n) {
                auto hit = cache.lookup(d, n, rc.mode_name, rc.cfg.bound);
                if (!hit) {
                    row_from_cache = false;
                    break;
                }
                row.push_back(hit->to_result());
            }
        }
        if (!row_from_cache) {
            row.clear();
            auto entries = uc_table(spec, 3, 10, rc.cfg);
            for (auto& e : entries) {
                if (e.result && !o.no_cache) {
                    CacheFile cache(o.cache_path);
                    cache.append(CacheRecord::from_result(*e.result, rc.cfg.bound));
                }
                row.push_back(e.result);
            }
        }

        if (md) std::cout << "| -" << d << " | " << spec.discriminant << " |";
        std::vector<std::string> cells;
        for (int n = 3; n <= 10; ++n) {
            const auto& cell = row[n - 3];
            std::string text = cell ? cell->min_radius2.str() : "-";
            cells.push_back(text);
            if (md) std::cout << " " << text << " |";
            if (o.format == "json") {
                if (cell) {
                    out_json.push_back(CacheRecord::from_result(*cell, rc.cfg.bound).to_json());
                } else {
                    out_json.push_back({{"lattice_d", d}, {"n", n}, {"status", "bound-exhausted"}});
                }
            }
            if (check) {
                auto g = golden_uc(d, n);
                if (cell && g && cell->min_radius2 == *g) {
                    ++matched;
                } else {
                    std::ostringstream msg;
                    msg << "d=" << d << " n=" << n << ": got " << text << ", expected "
                        << (g ? g->str() : "?");
                    mismatches.push_back(msg.str());
                }
            }
        }
        if (md) std::cout << "\n";
        if (o.format == "csv") {
            for (size_t i = 0; i < cells.size(); ++i) {
                std::cout << cells[i] << (i + 1 < cells.size() ? "," : "\n");
            }
        }
    }
    if (o.format == "json") std::cout << out_json.dump(2) << "\n";

    if (check) {
        if (mismatches.empty()) {
            std::cout << matched << " cells matched\n";
        } else {
            exit_code = kExitTableMismatch;
            std::cout << mismatches.size() << " cells differ:\n";
            for (const auto& m : mismatches) std::cout << "  " << m << "\n";
        }
    }
    return exit_code;
}

int cmd_thm2(const std::string& variant, int k, const CommonOpts& o) {
    if (k < 0) throw CLI::ValidationError("--k", "must be >= 0");
    Thm2Result res = variant == "gauss" ? thm2_gauss_circle(k) : thm2_eisenstein_circle(k);
    if (o.format == "json") {
        nlohmann::json j;
        j["variant"] = variant;
        j["k"] = k;
        j["center"] = {res.circle.center.x.str(), res.circle.center.y.str()};
        j["radius2"] = res.circle.radius2.str();
        j["count"] = res.count;
        j["predicted"] = res.predicted;
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : res.points) pts.push_back({p.a, p.b});
        j["points"] = pts;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "circle center (" << res.circle.center.x.str() << ", "
                  << res.circle.center.y.str() << ")*, D = " << res.circle.radius2.str() << "\n";
        std::cout << "count = " << res.count << " (predicted " << res.predicted << ")\n";
        std::cout << "points:";
        for (const auto& p : res.points) std::cout << " (" << p.a << "," << p.b << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_count(int d, const std::string& center_arg, const std::string& r2_arg,
              const CommonOpts& o) {
    if (!LatticeSpec::valid_d(d)) {
        throw CLI::ValidationError("--d", "d must be one of 1,2,3,7,11,19,43,67,163");
    }
    auto comma = center_arg.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("--center", "expected x,y as two fractions");
    }
    BigRat cx = parse_rat(center_arg.substr(0, comma), "--center");
    BigRat cy = parse_rat(center_arg.substr(comma + 1), "--center");
    BigRat r2 = parse_rat(r2_arg, "--r2");
    if (r2.sgn() <= 0) throw CLI::ValidationError("--r2", "must be positive");

    auto spec = LatticeSpec::for_d(d);
    OnCircle on = count_on_circle(spec, Circle(QPoint{cx, cy}, r2));
    if (o.format == "json") {
        nlohmann::json j;
        j["lattice_d"] = d;
        j["count"] = on.count;
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : on.points) pts.push_back({p.a, p.b});
        j["points"] = pts;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "count = " << on.count << "\n";
        if (on.count > 0) {
            std::cout << "points:";
            for (const auto& p : on.points) std::cout << " (" << p.a << "," << p.b << ")";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_sequence(const std::string& family, int max_index, const CommonOpts& o) {
    if (max_index < 1) throw CLI::ValidationError("--max", "must be >= 1");
    const bool gauss = family == "gauss-4n";
    const int d = gauss ? 1 : 3;
    int exit_code = kExitOk;

    std::cout << (gauss ? "uc(Z^2, 4n)" : "uc(hexagonal, 6n)") << " for n = 1.." << max_index
              << "\n";
    for (int n = 1; n <= max_index; ++n) {
        int target = (gauss ? 4 : 6) * n;

        // Closed-form upper bound where n is a power of two.
        std::optional<BigRat> theorem_bound;
        if ((n & (n - 1)) == 0) {
            int k = 0;
            while ((1 << k) < n) ++k;
            auto seq = primes_in_class(gauss ? ResidueClass::OneMod4 : ResidueClass::OneMod3, k);
            long long prod = 1;
            for (long long p : seq.values) prod *= p;
            theorem_bound = gauss ? BigRat(prod, 2) : BigRat(prod);
        }

        ResolvedConfig rc = resolve_config(o, d);
        std::cout << "  n=" << n << "  target=" << target << "  ";
        try {
            UcResult r = compute_uc(d, target, rc, o);
            std::cout << "uc=" << r.min_radius2.str()
                      << (r.certified ? " (certified)" : " (heuristic)");
            if (theorem_bound) {
                std::cout << "  bound=" << theorem_bound->str();
                if (*theorem_bound == r.min_radius2) std::cout << "  [bound attained]";
            }
        } catch (const bound_exhausted_error& e) {
            exit_code = kExitBoundExhausted;
            std::cout << "bound exhausted at " << e.bound_used.str();
            if (theorem_bound) std::cout << "  bound=" << theorem_bound->str();
        }
        std::cout << "\n";
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal circles through exactly n lattice points of the nine "
                 "class-number-one quadratic lattices"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto* uc_cmd = app.add_subcommand("uc", "compute uc(d, n) with a certificate or as an upper bound");
    std::string uc_d, uc_n;
    CommonOpts uc_opts;
    uc_cmd->add_option("--d", uc_d, "lattice d value or comma list")->required();
    uc_cmd->add_option("--n", uc_n, "point count n or range lo..hi")->required();
    add_common(uc_cmd, uc_opts);

    auto* table_cmd = app.add_subcommand("table", "tabulate uc(d, 3..10)");
    std::string table_d = "1,2,3,7,11,19,43,67,163";
    bool table_check = false;
    CommonOpts table_opts;
    table_opts.format = "md";
    table_cmd->add_option("--d", table_d, "lattice d values (comma list)");
    table_cmd->add_flag("--check", table_check, "compare against the built-in reference table");
    add_common(table_cmd, table_opts);

    auto* thm2_cmd = app.add_subcommand("thm2", "build and verify the explicit prime-product circles");
    std::string thm2_variant;
    int thm2_k = 0;
    CommonOpts thm2_opts;
    thm2_cmd->add_option("--variant", thm2_variant, "gauss|eisenstein")
        ->required()
        ->check(CLI::IsMember({"gauss", "eisenstein"}));
    thm2_cmd->add_option("--k", thm2_k, "index (number of primes in the product)");
    add_common(thm2_cmd, thm2_opts, false);

    auto* count_cmd = app.add_subcommand("count", "count lattice points on a given circle");
    int count_d = 1;
    std::string count_center, count_r2;
    CommonOpts count_opts;
    count_cmd->add_option("--d", count_d, "lattice d value")->required();
    count_cmd->add_option("--center", count_center, "center as x,y (fractions, y in sqrt(d) units)")
        ->required();
    count_cmd->add_option("--r2", count_r2, "squared radius as a fraction")->required();
    add_common(count_cmd, count_opts, false);

    auto* seq_cmd = app.add_subcommand("sequence", "tabulate uc along the 4n / 6n families");
    std::string seq_family;
    int seq_max = 3;
    CommonOpts seq_opts;
    seq_cmd->add_option("--family", seq_family, "gauss-4n|eisenstein-6n")
        ->required()
        ->check(CLI::IsMember({"gauss-4n", "eisenstein-6n"}));
    seq_cmd->add_option("--max", seq_max, "largest n");
    add_common(seq_cmd, seq_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (uc_cmd->parsed()) return cmd_uc(uc_d, uc_n, uc_opts);
        if (table_cmd->parsed()) return cmd_table(table_d, table_check, table_opts);
        if (thm2_cmd->parsed()) return cmd_thm2(thm2_variant, thm2_k, thm2_opts);
        if (count_cmd->parsed()) return cmd_count(count_d, count_center, count_r2, count_opts);
        if (seq_cmd->parsed()) return cmd_sequence(seq_family, seq_max, seq_opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const integrity_error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
