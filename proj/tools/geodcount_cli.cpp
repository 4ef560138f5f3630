#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "geodcount/counting.hpp"
#include "geodcount/group.hpp"
#include "geodcount/quadfield.hpp"
#include "geodcount/trace.hpp"
#include "geodcount/verify.hpp"

using json = nlohmann::json;
namespace gq = geodcount::quadfield;
namespace gg = geodcount::group;
namespace gc = geodcount::counting;

namespace {

// exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource error
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct GridSpec {
    bool geometric = false;
    int count = 50;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    auto pos = text.find(':');
    std::string kind = text.substr(0, pos);
    if (kind == "geo") g.geometric = true;
    else if (kind != "lin") throw CLI::ValidationError("--grid", "expected lin:N or geo:N");
    if (pos != std::string::npos) g.count = std::stoi(text.substr(pos + 1));
    if (g.count < 2) throw CLI::ValidationError("--grid", "grid count must be >= 2");
    return g;
}

std::vector<double> make_grid(double lo, double hi, const GridSpec& g) {
    std::vector<double> xs;
    xs.reserve(g.count);
    for (int i = 0; i < g.count; ++i) {
        double f = double(i) / double(g.count - 1);
        xs.push_back(g.geometric ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f);
    }
    return xs;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::trunc);
    if (!file) throw geodcount::ResourceError("cannot open output file: " + path);
    return file;
}

// sieve cache resolution: explicit --cache, else GEODESIC_COUNT_CACHE, else in-memory
gq::IdealCountTable load_table(const std::string& cache, std::uint64_t limit, int workers) {
    std::string path = cache;
    if (path.empty()) {
        if (const char* env = std::getenv("GEODESIC_COUNT_CACHE")) path = env;
    }
    if (!path.empty() && std::filesystem::exists(path)) {
        auto table = gq::read_sieve_cache(path);
        if (table.limit >= limit) return table;
    }
    auto table = gq::ideal_count_sieve(limit, workers);
    if (!path.empty()) gq::write_sieve_cache(table, path);
    return table;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting oriented geodesic images under arithmetic Fuchsian groups"};
    app.set_config("--config");
    app.require_subcommand(1);

    std::int64_t p = 3;
    std::string sign_name = "plus";
    double x_max = 100.0;
    double d_frac = 0.1;
    std::string grid_text = "lin:50";
    std::string cache_path;
    std::string out_path;
    std::string format = "csv";
    int workers = 0;
    std::vector<std::string> tol_overrides;

    app.add_option("--p", p, "prime p of the quaternion group");
    app.add_option("--sign", sign_name, "branch: plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    app.add_option("--xmax", x_max, "upper limit X");
    app.add_option("--d", d_frac, "smoothing fraction D in (0,1)");
    app.add_option("--grid", grid_text, "grid spec lin:N or geo:N");
    app.add_option("--cache", cache_path, "sieve cache path (default env GEODESIC_COUNT_CACHE)");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--workers", workers, "worker threads (0 = all cores)");
    app.add_option("--tol", tol_overrides, "tolerance override NAME=VAL for verify");

    auto* cmd_sieve = app.add_subcommand("sieve", "write the N2SIEVE1 ideal-count cache");
    std::uint64_t sieve_limit = 0;
    cmd_sieve->add_option("--limit", sieve_limit, "sieve limit")->required();

    auto* cmd_correlate =
        app.add_subcommand("correlate", "correlation sum S, main term M and error E on a grid");
    double corr_xmin = 1.0;
    cmd_correlate->add_option("--xmin", corr_xmin, "grid start (default 1)");

    auto* cmd_cosets = app.add_subcommand("cosets", "double-coset classes with |B| <= X as CSV");
    auto* cmd_report = app.add_subcommand("report", "counting report N1..N4 and the (mu,mu') cells");
    auto* cmd_mainterm = app.add_subcommand("mainterm", "c_p and the main-term coefficient");
    auto* cmd_scan = app.add_subcommand("error-scan", "error series E(x) on a grid, with slope fits");
    double scan_xmin = 1e4;
    bool scan_fit = false;
    cmd_scan->add_option("--xmin", scan_xmin, "scan start");
    cmd_scan->add_flag("--fit", scan_fit, "emit exponent fits");
    auto* cmd_verify = app.add_subcommand("verify", "run a module identity suite");
    std::string suite = "specfun";
    cmd_verify->add_option("suite", suite, "geometry | specfun | trace | group")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    int sign = sign_name == "plus" ? 1 : -1;

    try {
        std::ofstream file;
        if (*cmd_sieve) {
            if (out_path.empty())
                throw CLI::ValidationError("--out", "sieve requires an output path");
            auto table = gq::ideal_count_sieve(sieve_limit, workers);
            gq::write_sieve_cache(table, out_path);
            std::cout << "wrote " << out_path << " (limit " << sieve_limit << ")\n";
        } else if (*cmd_correlate) {
            auto xm = static_cast<std::int64_t>(std::floor(x_max));
            auto table = load_table(cache_path, std::uint64_t(std::max<std::int64_t>(p * xm + 1, 2)),
                                    workers);
            auto grid = parse_grid(grid_text);
            auto xs = x_max <= corr_xmin ? std::vector<double>{x_max}
                                         : make_grid(std::max(corr_xmin, 1.0), x_max, grid);
            auto es = gc::error_series(table, p, sign, xs);
            if (es.unmodeled_spectral_terms)
                std::cerr << "warning: p = " << p
                          << " is outside the verified list; E(x) contains unmodeled X^s terms\n";
            std::ostream& out = open_out(file, out_path);
            if (format == "json") {
                json j;
                j["config"] = {{"command", "correlate"}, {"p", p}, {"sign", sign},
                               {"xmax", x_max}, {"grid", grid_text}};
                j["rows"] = json::array();
                for (std::size_t i = 0; i < es.xs.size(); ++i)
                    j["rows"].push_back({{"x", es.xs[i]}, {"S", es.S[i]}, {"M", es.M[i]},
                                         {"E", es.E[i]}});
                out << j.dump(2) << '\n';
            } else {
                out << "x,S,M,E\n";
                for (std::size_t i = 0; i < es.xs.size(); ++i)
                    out << fmt_double(es.xs[i]) << ',' << std::int64_t(es.S[i]) << ','
                        << fmt_double(es.M[i]) << ',' << fmt_double(es.E[i]) << '\n';
            }
        } else if (*cmd_cosets) {
            auto classes = gg::enumerate_double_cosets(p, std::int64_t(std::floor(x_max)));
            std::ostream& out = open_out(file, out_path);
            gg::write_classes_csv(out, classes);
        } else if (*cmd_report) {
            auto rep = gc::count_report(p, std::int64_t(std::floor(x_max)));
            std::ostream& out = open_out(file, out_path);
            if (format == "json") {
                json j;
                j["config"] = {{"command", "report"}, {"p", p}, {"xmax", rep.x_max}};
                j["N1"] = rep.n1; j["N2"] = rep.n2; j["N3"] = rep.n3; j["N4"] = rep.n4;
                j["pairs_plus"] = rep.pairs_plus; j["pairs_minus"] = rep.pairs_minus;
                for (int mu : {1, -1})
                    for (int mp : {1, -1})
                        j["Nmumu"][(mu > 0 ? "+" : "-") + std::string(mp > 0 ? "+" : "-")] =
                            rep.cell(mu, mp);
                out << j.dump(2) << '\n';
            } else {
                out << "p,xmax,N1,N2,N3,N4,Npp,Npm,Nmp,Nmm,pairs_plus,pairs_minus\n";
                out << rep.p << ',' << rep.x_max << ',' << rep.n1 << ',' << rep.n2 << ','
                    << rep.n3 << ',' << rep.n4 << ',' << rep.cell(1, 1) << ',' << rep.cell(1, -1)
                    << ',' << rep.cell(-1, 1) << ',' << rep.cell(-1, -1) << ','
                    << rep.pairs_plus << ',' << rep.pairs_minus << '\n';
            }
        } else if (*cmd_mainterm) {
            std::ostream& out = open_out(file, out_path);
            if (format == "json") {
                json j;
                j["p"] = p;
                j["c_p"] = gc::c_p(p);
                j["coefficient"] = gc::main_coefficient(p);
                out << j.dump(2) << '\n';
            } else {
                out << "p,c_p,coefficient\n";
                out << p << ',' << gc::c_p(p) << ',' << fmt_double(gc::main_coefficient(p))
                    << '\n';
            }
        } else if (*cmd_scan) {
            auto xm = static_cast<std::int64_t>(std::floor(x_max));
            auto table = load_table(cache_path, std::uint64_t(p * xm + 1), workers);
            auto grid = parse_grid(grid_text);
            auto xs = make_grid(scan_xmin, x_max, grid);
            auto es = gc::error_series(table, p, sign, xs);
            if (es.unmodeled_spectral_terms)
                std::cerr << "warning: p = " << p
                          << " is outside the verified list; E(x) contains unmodeled X^s terms\n";
            std::ostream& out = open_out(file, out_path);
            out << "x,E\n";
            for (std::size_t i = 0; i < es.xs.size(); ++i)
                out << fmt_double(es.xs[i]) << ',' << fmt_double(es.E[i]) << '\n';
            if (scan_fit) {
                std::vector<std::pair<double, double>> samples;
                for (std::size_t i = 0; i < es.xs.size(); ++i)
                    samples.emplace_back(es.xs[i], es.E[i]);
                auto fit = gc::exponent_fit_detailed(samples);
                json j;
                j["config"] = {{"command", "error-scan"}, {"p", p}, {"sign", sign},
                               {"xmin", scan_xmin}, {"xmax", x_max}};
                j["fit"] = {{"slope", fit.slope}, {"stderr", fit.stderr_slope},
                            {"window", {fit.x_lo, fit.x_hi}}};
                if (2 * std::int64_t(scan_xmin) <= xm &&
                    table.limit >= std::uint64_t(2 * p * (xm / 2) + 1)) {
                    auto rms = gc::exponent_fit_rms_detailed(table, p, sign,
                                                             std::int64_t(scan_xmin), xm);
                    j["fit_rms"] = {{"slope", rms.slope}, {"stderr", rms.stderr_slope},
                                    {"window", {rms.x_lo, rms.x_hi}}};
                }
                std::cerr << j.dump(2) << '\n';
            }
        } else if (*cmd_verify) {
            geodcount::verify::VerifyOptions opts;
            opts.p = p;
            opts.X = std::min(x_max, 100.0);
            opts.D = d_frac;
            for (const auto& ov : tol_overrides) {
                auto pos = ov.find('=');
                if (pos == std::string::npos)
                    throw CLI::ValidationError("--tol", "expected NAME=VAL");
                opts.tol_overrides[ov.substr(0, pos)] = std::stod(ov.substr(pos + 1));
            }
            auto results = geodcount::verify::run_suite(suite, opts);
            bool all_pass = true;
            json report = json::array();
            for (const auto& r : results) {
                report.push_back({{"identity", r.identity}, {"grid", r.grid},
                                  {"max_rel_err", r.max_rel_err}, {"tol", r.tol},
                                  {"pass", r.pass}});
                if (format != "json")
                    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.identity << "  err="
                              << fmt_double(r.max_rel_err) << "  tol=" << fmt_double(r.tol)
                              << "  (" << r.grid << ")\n";
                all_pass = all_pass && r.pass;
            }
            if (format == "json") std::cout << report.dump(2) << '\n';
            if (!all_pass) {
                for (const auto& r : results)
                    if (!r.pass) {
                        std::cerr << "verification failed: " << r.identity << '\n';
                        break;
                    }
                return kExitVerifyFail;
            }
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const geodcount::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const geodcount::SieveRangeError& e) {
        std::cerr << "range error: " << e.what() << '\n';
        return kExitResource;
    } catch (const geodcount::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
