#include "horomean/cli.hpp"

#include "horomean/census.hpp"
#include "horomean/chi.hpp"
#include "horomean/mean.hpp"
#include "horomean/modmath.hpp"
#include "horomean/prime_table.hpp"
#include "horomean/series.hpp"
#include "horomean/theorem1.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <variant>

namespace horomean::cli {

namespace {

// ---- output ----------------------------------------------------------------
// Every number the tool prints goes through one formatter so the CSV and JSON
// views carry identical numeric content. Floats use 17 significant digits,
// which round-trips doubles exactly.

std::string fmt17(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

using Field = std::variant<u64, double, bool, std::string>;

std::string field_text(const Field& f) {
    if (std::holds_alternative<u64>(f)) return std::to_string(std::get<u64>(f));
    if (std::holds_alternative<double>(f)) return fmt17(std::get<double>(f));
    if (std::holds_alternative<bool>(f)) return std::get<bool>(f) ? "true" : "false";
    return std::get<std::string>(f);
}

std::string field_json(const Field& f) {
    if (std::holds_alternative<double>(f)) {
        double v = std::get<double>(f);
        if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\""; // not a JSON numeral
        return fmt17(v);
    }
    if (std::holds_alternative<std::string>(f)) return '"' + std::get<std::string>(f) + '"';
    return field_text(f);
}

struct OutTable {
    std::vector<std::pair<std::string, Field>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Field>> rows;
};

void write_csv(std::ostream& out, const OutTable& t) {
    for (const auto& [k, v] : t.meta) out << "# " << k << '=' << field_text(v) << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << field_text(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const std::string& command, const OutTable& t) {
    out << "{\"command\":\"" << command << "\"";
    if (!t.meta.empty()) {
        out << ",\"meta\":{";
        for (std::size_t i = 0; i < t.meta.size(); ++i)
            out << (i ? "," : "") << '"' << t.meta[i].first << "\":" << field_json(t.meta[i].second);
        out << '}';
    }
    out << ",\"rows\":[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << (r ? "," : "") << '{';
        for (std::size_t i = 0; i < t.rows[r].size(); ++i)
            out << (i ? "," : "") << '"' << t.columns[i] << "\":" << field_json(t.rows[r][i]);
        out << '}';
    }
    out << "]}\n";
}

void emit(std::ostream& out, const std::string& format, const std::string& command,
          const OutTable& t) {
    if (format == "json")
        write_json(out, command, t);
    else
        write_csv(out, t);
}

// ---- shared plumbing --------------------------------------------------------

// Table acquisition with the disk cache: exact (q, x) hits load, misses build
// and, when a cache directory is configured, save for next time. A warm cache
// must never change numbers, which load-time validation enforces.
PrimeTable acquire_table(u64 q, u64 x, const std::string& cache_dir, std::ostream& err) {
    if (x < 2) x = 2;
    if (cache_dir.empty()) return PrimeTable::build(q, x);

    std::filesystem::path path = std::filesystem::path(cache_dir) /
        ("ptable-q" + std::to_string(q) + "-x" + std::to_string(x) + ".txt");
    if (std::filesystem::exists(path)) {
        PrimeTable t = PrimeTable::load(path.string());
        if (t.q() != q || t.limit() != x)
            throw std::invalid_argument("cache file header disagrees with its name: " +
                                        path.string());
        return t;
    }
    PrimeTable t = PrimeTable::build(q, x);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    try {
        t.save(path.string());
    } catch (const std::exception& e) {
        err << "warning: could not write cache file: " << e.what() << '\n';
    }
    return t;
}

struct ChiSpec {
    std::string kind; // chi0|psi|varpi|psit|psipow|const[:a/d]
    std::optional<u64> t;
    std::optional<u64> k;
};

UnitRotation parse_rotation(const std::string& s) {
    if (s == "0") return UnitRotation::zero();
    std::size_t slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("rotation must look like a/d or 0: " + s);
    u64 a = std::stoull(s.substr(0, slash));
    u64 d = std::stoull(s.substr(slash + 1));
    return UnitRotation::rot(a, d);
}

u64 to_cutoff(double raw) {
    if (!(raw >= 1.0) || raw > 4.0e9)
        throw std::invalid_argument("cutoff must be in [1, 4e9]");
    return static_cast<u64>(raw);
}

ChiFunction make_chi(const ChiSpec& spec, const PrimeTable& table) {
    const std::string& k = spec.kind;
    if (k == "chi0") return ChiFunction::chi0(table);
    if (k == "psi") return ChiFunction::psi(table);
    if (k == "varpi") return ChiFunction::varpi(table);
    if (k == "psit") {
        if (!spec.t) throw std::invalid_argument("--chi psit needs --t");
        return ChiFunction::psit(table, *spec.t);
    }
    if (k == "psipow") {
        if (!spec.k) throw std::invalid_argument("--chi psipow needs --k");
        return ChiFunction::psipow(table, *spec.k);
    }
    if (k == "const") return ChiFunction::constant(table, UnitRotation::one());
    if (k.rfind("const:", 0) == 0)
        return ChiFunction::constant(table, parse_rotation(k.substr(6)));
    throw std::invalid_argument("unknown chi kind: " + k +
                                " (expected chi0|psi|varpi|psit|psipow|const[:a/d])");
}

// The p = q conventions are design choices; surface them next to the data.
void add_convention_meta(OutTable& t, const ChiFunction& chi) {
    switch (chi.kind()) {
    case ChiKind::psi:
    case ChiKind::psipow: t.meta.emplace_back("convention", std::string("psi(q)=0")); break;
    case ChiKind::varpi: t.meta.emplace_back("convention", std::string("varpi(q)=0")); break;
    case ChiKind::psit: t.meta.emplace_back("convention", std::string("psit(q)=+1")); break;
    default: break;
    }
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "horomean: multiplicative orders f_q(p), their quotients t = (p-1)/f, and the mean\n"
        "values, Dirichlet series, and censuses of the root-of-unity multiplicative\n"
        "functions built from them"};
    app.require_subcommand(1);

    // shared option state
    std::string format = "csv";
    std::string cache_dir;
    ChiSpec chi_spec;
    u64 q = 0, t_param = 0, k_param = 0, x = 0, n = 0, m = 0;
    bool have_t = false, have_k = false;
    std::vector<u64> n_list, checkpoints;
    std::vector<double> s_grid;
    double cutoff_raw = 0.0;
    bool exclude_q = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--cache-dir", cache_dir,
                        "directory for prime table cache files")
            ->envname("HOROMEAN_CACHE");
    };
    auto add_chi = [&](CLI::App* cmd) {
        cmd->add_option("--chi", chi_spec.kind,
                        "multiplicative function: chi0|psi|varpi|psit|psipow|const[:a/d]")
            ->required();
        cmd->add_option("--q", q, "prime base q")->required();
        cmd->add_option("--t", t_param, "quotient parameter for psit")
            ->each([&](const std::string&) { have_t = true; });
        cmd->add_option("--k", k_param, "exponent for psipow")
            ->each([&](const std::string&) { have_k = true; });
    };

    // table: build f/t records for all primes p <= x, p != q, and cache them
    CLI::App* c_table = app.add_subcommand(
        "table", "build the (p, f, t) order table: f = ord_p(q), t = (p-1)/f");
    c_table->add_option("--q", q, "prime base q")->required();
    c_table->add_option("--x", x, "table limit")->required();
    add_common(c_table);

    // mean: running mean M_n(chi) = (1/n) sum_{m<=n} chi(m) at checkpoints
    CLI::App* c_mean = app.add_subcommand(
        "mean", "running mean (1/n) sum_{m<=n} chi(m) at geometric checkpoints");
    add_chi(c_mean);
    c_mean->add_option("--n", n, "range limit n_max")->required();
    c_mean->add_option("--checkpoints", checkpoints, "explicit checkpoint list")
        ->delimiter(',');
    add_common(c_mean);

    // bound: explicit inequality |M_n| <= (1/n) sum_k d_k/(N-k)! (...) per n
    CLI::App* c_bound = app.add_subcommand(
        "bound", "explicit mean-value bound vs measured |M_n| for each requested n");
    add_chi(c_bound);
    c_bound->add_option("--n", n_list, "comma-separated n values")
        ->required()
        ->delimiter(',');
    c_bound->add_flag("--exclude-q", exclude_q, "drop p = q from the prime list");
    add_common(c_bound);

    // series: C(s,chi) two ways, Euler product vs Dirichlet sum
    CLI::App* c_series = app.add_subcommand(
        "series",
        "C(s,chi) = prod_p (1-chi(p)p^-s)^-1 vs sum_m chi(m)m^-s, truncated at the cutoff");
    add_chi(c_series);
    c_series->add_option("--s", s_grid, "s values (each > 1)")->required()->delimiter(',');
    c_series->add_option("--cutoff", cutoff_raw, "prime/term cutoff")->required();
    add_common(c_series);

    // delange: mean-value criterion diagnostics
    CLI::App* c_delange = app.add_subcommand(
        "delange",
        "partial sums of sum_p (1-chi(p))/p and the product prod_p (1-1/p)/(1-chi(p)/p)");
    add_chi(c_delange);
    c_delange->add_option("--x", x, "largest checkpoint (geometric schedule up to x)");
    c_delange->add_option("--checkpoints", checkpoints, "explicit checkpoint list")
        ->delimiter(',');
    add_common(c_delange);

    // residue: (s-1) C_X(s,chi) on a grid approaching s = 1
    CLI::App* c_residue = app.add_subcommand(
        "residue", "(s-1) * C_X(s,chi) on an s grid approaching 1 from above");
    add_chi(c_residue);
    c_residue->add_option("--s", s_grid, "s values (each > 1)")->required()->delimiter(',');
    c_residue->add_option("--cutoff", cutoff_raw, "prime cutoff X")->required();
    add_common(c_residue);

    // eq2: finite identity 2 sum p^-s = log zeta_X - log C_X(psit) - tail
    CLI::App* c_eq2 = app.add_subcommand(
        "eq2",
        "check 2 sum_{t_p=t} p^-s = log zeta_X(s) - log C_X(s,psit) minus the k>=2 tail");
    c_eq2->add_option("--q", q, "prime base q")->required();
    c_eq2->add_option("--t", t_param, "quotient t")->required();
    c_eq2->add_option("--s", s_grid, "s values (each > 1)")->required()->delimiter(',');
    c_eq2->add_option("--cutoff", cutoff_raw, "prime cutoff X")->required();
    add_common(c_eq2);

    // density: share of p <= x with t_q(p) = t, vs the classical constant
    CLI::App* c_density = app.add_subcommand(
        "density", "density of primes with (p-1)/f_q(p) = t among p <= x, with the "
                   "classical density constant for reference");
    c_density->add_option("--q", q, "prime base q")->required();
    c_density->add_option("--t", t_param, "quotient t")->required();
    c_density->add_option("--x", x, "prime limit")->required();
    add_common(c_density);

    // census: S_k rows (t does not divide k) or large-order rows
    CLI::App* c_census = app.add_subcommand(
        "census", "per-prime rows flagging t not dividing k (with --k) or "
                  "f > (p-1)/log p (without)");
    c_census->add_option("--q", q, "prime base q")->required();
    c_census->add_option("--x", x, "prime limit")->required();
    c_census->add_option("--k", k_param, "exponent k selecting the divisibility census")
        ->each([&](const std::string&) { have_k = true; });
    add_common(c_census);

    // iq: divisor-sum count of irreducible factors of x^m - 1 over F_q,
    // cross-checked against direct orbit enumeration
    CLI::App* c_iq = app.add_subcommand(
        "iq", "i_q(m) = sum_{d|m} phi(d)/f_q(d) vs the orbit count of a -> q a mod m");
    c_iq->add_option("--q", q, "prime base q")->required();
    c_iq->add_option("--m", m, "modulus m, coprime to q")->required();
    add_common(c_iq);

    std::vector<const char*> cargv;
    cargv.reserve(argv.size());
    for (const auto& s : argv) cargv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1; // help exits clean, anything else is a usage error
    }

    try {
        if (chi_spec.kind.rfind("psit", 0) == 0 && have_t) chi_spec.t = t_param;
        if (chi_spec.kind.rfind("psipow", 0) == 0 && have_k) chi_spec.k = k_param;

        OutTable tab;
        std::string command;

        if (app.got_subcommand(c_table)) {
            command = "table";
            PrimeTable T = acquire_table(q, x, cache_dir, err);
            tab.columns = {"q", "x", "count"};
            tab.rows.push_back({T.q(), T.limit(), static_cast<u64>(T.records().size())});
        } else if (app.got_subcommand(c_mean)) {
            command = "mean";
            if (n < 1) throw std::invalid_argument("--n must be at least 1");
            PrimeTable T = acquire_table(q, n, cache_dir, err);
            ChiFunction chi = make_chi(chi_spec, T);
            std::vector<u64> cps = checkpoints;
            if (!cps.empty() && cps.back() < n) cps.push_back(n); // schedule always ends at n
            MeanSeries ms = cps.empty() ? mean_series(chi, n) : mean_series(chi, n, cps);
            tab.meta.emplace_back("chi", chi.describe());
            add_convention_meta(tab, chi);
            tab.columns = {"n", "re", "im", "abs"};
            for (const auto& cp : ms.checkpoints)
                tab.rows.push_back({cp.n, cp.mean.real(), cp.mean.imag(), cp.magnitude});
        } else if (app.got_subcommand(c_bound)) {
            command = "bound";
            if (n_list.empty()) throw std::invalid_argument("--n needs at least one value");
            u64 nmax = *std::max_element(n_list.begin(), n_list.end());
            if (*std::min_element(n_list.begin(), n_list.end()) < 1)
                throw std::invalid_argument("--n values must be positive");
            PrimeTable T = acquire_table(q, nmax, cache_dir, err);
            ChiFunction chi = make_chi(chi_spec, T);
            tab.meta.emplace_back("chi", chi.describe());
            std::string variant = exclude_q ? "exclude-q"
                                 : chi.kind() == ChiKind::psi ? "q-as-d1"
                                                              : "none";
            tab.meta.emplace_back("variant", variant);
            add_convention_meta(tab, chi);
            tab.columns = {"n", "N", "bound", "actual", "holds"};
            for (const auto& r : verify_bound(chi, n_list, exclude_q))
                tab.rows.push_back({r.n, r.N, r.bound.value, r.actual, r.holds});
        } else if (app.got_subcommand(c_series)) {
            command = "series";
            u64 cutoff = to_cutoff(cutoff_raw);
            PrimeTable T = acquire_table(q, cutoff, cache_dir, err);
            ChiFunction chi = make_chi(chi_spec, T);
            tab.meta.emplace_back("chi", chi.describe());
            add_convention_meta(tab, chi);
            tab.columns = {"s", "cutoff", "euler_re", "euler_im", "dir_re", "dir_im"};
            for (double s : s_grid) {
                SeriesEval ev = evaluate_series(chi, s, cutoff);
                tab.rows.push_back({ev.s, ev.cutoff, ev.euler.real(), ev.euler.imag(),
                                    ev.dirichlet.real(), ev.dirichlet.imag()});
            }
        } else if (app.got_subcommand(c_delange)) {
            command = "delange";
            std::vector<u64> cps = checkpoints;
            if (cps.empty()) {
                if (x < 1) throw std::invalid_argument("delange needs --x or --checkpoints");
                cps = geometric_checkpoints(x);
            }
            PrimeTable T = acquire_table(q, cps.back(), cache_dir, err);
            ChiFunction chi = make_chi(chi_spec, T);
            DelangeDiag d = delange_diag(chi, cps);
            tab.meta.emplace_back("chi", chi.describe());
            add_convention_meta(tab, chi);
            tab.meta.emplace_back("product_re", d.product_prediction.real());
            tab.meta.emplace_back("product_im", d.product_prediction.imag());
            tab.columns = {"x", "re", "im"};
            for (const auto& [cx, z] : d.partial_sums)
                tab.rows.push_back({cx, z.real(), z.imag()});
        } else if (app.got_subcommand(c_residue)) {
            command = "residue";
            u64 cutoff = to_cutoff(cutoff_raw);
            PrimeTable T = acquire_table(q, cutoff, cache_dir, err);
            ChiFunction chi = make_chi(chi_spec, T);
            tab.meta.emplace_back("chi", chi.describe());
            add_convention_meta(tab, chi);
            tab.meta.emplace_back("cutoff", cutoff);
            tab.columns = {"s", "re", "im"};
            for (const auto& [s, z] : residue_probe(chi, s_grid, cutoff))
                tab.rows.push_back({s, z.real(), z.imag()});
        } else if (app.got_subcommand(c_eq2)) {
            command = "eq2";
            u64 cutoff = to_cutoff(cutoff_raw);
            PrimeTable T = acquire_table(q, cutoff, cache_dir, err);
            tab.columns = {"q", "t", "s", "cutoff", "lhs", "rhs", "k2_tail", "residual"};
            for (double s : s_grid) {
                Eq2Result r = eq2_identity_check(T, t_param, s, cutoff);
                tab.rows.push_back({q, t_param, s, cutoff, r.lhs, r.rhs, r.k2_tail,
                                    r.residual()});
            }
        } else if (app.got_subcommand(c_density)) {
            command = "density";
            PrimeTable T = acquire_table(q, x, cache_dir, err);
            DensityResult d = artin_density(T, t_param, x);
            tab.columns = {"q", "t", "x", "count", "pi", "density", "artin_constant_ref"};
            tab.rows.push_back({q, t_param, x, d.count, d.pi_x, d.density,
                                artin_constant(x)});
        } else if (app.got_subcommand(c_census)) {
            command = "census";
            PrimeTable T = acquire_table(q, x, cache_dir, err);
            CensusResult res = have_k ? sk_census(T, k_param, x) : large_order_census(T, x);
            tab.meta.emplace_back("kind", std::string(have_k ? "sk" : "large-order"));
            if (have_k) tab.meta.emplace_back("k", k_param);
            tab.meta.emplace_back("count", res.count);
            tab.columns = {"p", "f", "t", "flag"};
            for (const auto& r : res.rows) tab.rows.push_back({r.p, r.f, r.t, r.flag});
        } else if (app.got_subcommand(c_iq)) {
            command = "iq";
            PrimeTable T = acquire_table(q, std::max<u64>(m, 2), cache_dir, err);
            u64 iq = iq_count(T, m);
            u64 cosets = cyclotomic_coset_count(q, m);
            bool match = iq == cosets;
            tab.columns = {"m", "iq", "coset_count", "match"};
            tab.rows.push_back({m, iq, cosets, match});
            emit(out, format, command, tab);
            return match ? 0 : 2; // a mismatch means the order data lied
        }

        emit(out, format, command, tab);
        return 0;
    } catch (const consistency_error& e) {
        err << "consistency error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace horomean::cli
