#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sjack/json_io.hpp"
#include "sjack/verify.hpp"

namespace {

using namespace sjack;

Partition parse_partition(const std::string& s) {
    if (s.empty()) return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw bad_input("bad partition literal: " + s);
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

std::string render_sympoly_text(const SymPoly& p) {
    if (p.is_zero()) return "0";
    Json j = to_json(p);
    std::string out;
    for (const auto& term : j["terms"]) {
        if (!out.empty()) out += " + ";
        std::string c = term["c"].get<std::string>();
        std::string key = Json(term["key"]).dump();
        out += (c == "1" ? "" : c + "*") + "m" + key;
    }
    return out;
}

std::string render_bisym_text(const BiSymPoly& p) {
    if (p.is_zero()) return "0";
    Json j = to_json(p);
    std::string out;
    for (const auto& term : j["terms"]) {
        if (!out.empty()) out += " + ";
        std::string c = term["c"].get<std::string>();
        out += (c == "1" ? "" : c + "*") + "m" + Json(term["mu"]).dump() + "m" +
               Json(term["nu"]).dump();
    }
    return out;
}

void emit(const std::string& payload, const std::string& output_file) {
    if (output_file.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream f(output_file);
        if (!f) throw bad_input("cannot open output file " + output_file);
        f << payload << "\n";
    }
}

std::string gram_text(const GramReport& rep) {
    std::ostringstream os;
    os << "# method=" << rep.method << " n=" << rep.n << " m=" << rep.m
       << " degree=" << rep.degree << (rep.cumulative ? " (cumulative)" : "")
       << " theta=" << rep.theta;
    if (rep.method != "exact-ct")
        os << " xi=" << rep.xi << " xi_prime=" << rep.xi_prime << " grid=" << rep.grid;
    os << "\n";
    for (std::size_t i = 0; i < rep.index.size(); ++i) {
        os << rep.index[i].to_string() << ":";
        for (std::size_t j = 0; j < rep.index.size(); ++j) {
            if (!rep.exact_values.empty()) os << " " << rep.exact_values[i][j].get_str();
            else os << " " << rep.numeric_values[i][j];
        }
        os << "\n";
    }
    os << "# max_offdiag_abs=" << rep.max_offdiag_abs;
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical computations with Jack and super-Jack polynomials,\n"
                 "deformed CMS quantum integrals, and the Hermitian torus product."};
    app.require_subcommand(1);

    std::string format = "text", output_file, theta_str = "t", lambda_str, mode = "numeric";
    std::string method = "exact", suite = "all", gram_file;
    int n = 1, m = 0, degree = 4, rmax = 3;
    bool cumulative = false;
    QuadConfig cfg;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--output", output_file, "Write the main payload to a file");
    };
    auto add_quad = [&](CLI::App* cmd) {
        cmd->add_option("--xi", cfg.xi, "Radius of the z torus (default 1)");
        cmd->add_option("--xi-prime", cfg.xi_prime, "Radius of the w torus (default 2)");
        cmd->add_option("--grid", cfg.grid, "Trapezoid points per angle (default 256)");
        cmd->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample count");
        cmd->add_option("--seed", cfg.seed, "Monte Carlo seed");
        cmd->add_option("--tol", cfg.tol, "Tolerance for verification checks");
    };

    auto* cmd_jack = app.add_subcommand("jack", "Print the Jack polynomial P_lambda");
    cmd_jack->add_option("--lambda", lambda_str, "Partition, e.g. 3,1");
    cmd_jack->add_option("--n", n, "Number of variables")->required();
    cmd_jack->add_option("--theta", theta_str, "Rational p/q or t for symbolic");
    add_common(cmd_jack);

    auto* cmd_sj = app.add_subcommand("superjack", "Print the super-Jack polynomial SP_lambda");
    cmd_sj->add_option("--lambda", lambda_str, "Partition");
    cmd_sj->add_option("--n", n, "z variables")->required();
    cmd_sj->add_option("--m", m, "w variables")->required();
    cmd_sj->add_option("--theta", theta_str, "Rational p/q or t for symbolic");
    add_common(cmd_sj);

    auto* cmd_norm = app.add_subcommand("norm", "Norm of P_lambda (m = 0) or SP_lambda");
    cmd_norm->add_option("--lambda", lambda_str, "Partition");
    cmd_norm->add_option("--n", n, "z variables")->required();
    cmd_norm->add_option("--m", m, "w variables (omit for the classical norm)");
    cmd_norm->add_option("--theta", theta_str, "Rational p/q, or t with --mode exact-ratio");
    cmd_norm->add_option("--mode", mode, "numeric | exact-ratio")
        ->check(CLI::IsMember({"numeric", "exact-ratio"}));
    add_common(cmd_norm);

    auto* cmd_gram = app.add_subcommand("gram", "Gram matrix of the super-Jack family");
    cmd_gram->add_option("--n", n, "z variables")->required();
    cmd_gram->add_option("--m", m, "w variables")->required();
    cmd_gram->add_option("--degree", degree, "Degree of the block")->required();
    cmd_gram->add_option("--theta", theta_str, "Rational p/q");
    cmd_gram->add_option("--method", method, "exact | quadrature | monte-carlo")
        ->check(CLI::IsMember({"exact", "quadrature", "monte-carlo"}));
    cmd_gram->add_flag("--cumulative", cumulative, "Index over |lambda| <= degree");
    add_quad(cmd_gram);
    add_common(cmd_gram);

    auto* cmd_eig = app.add_subcommand("eig", "Spectral data of the quantum integrals");
    cmd_eig->add_option("--lambda", lambda_str, "Partition");
    cmd_eig->add_option("--n", n, "z variables")->required();
    cmd_eig->add_option("--m", m, "w variables")->required();
    cmd_eig->add_option("--theta", theta_str, "Rational p/q or t for symbolic");
    cmd_eig->add_option("--rmax", rmax, "Highest operator order (default 3)");
    add_common(cmd_eig);

    auto* cmd_ker = app.add_subcommand("kernel", "Kernel partitions of the product");
    cmd_ker->add_option("--n", n, "z variables")->required();
    cmd_ker->add_option("--m", m, "w variables")->required();
    cmd_ker->add_option("--degree", degree, "Maximum weight")->required();
    add_common(cmd_ker);

    auto* cmd_ver = app.add_subcommand("verify", "Run a named verification suite");
    cmd_ver->add_option("--suite", suite,
                        "jack-orthogonality | orthogonality-exact | kernel | numeric-norms | "
                        "route-equivalence | quasi-invariance | eigen | dualities | positivity | all");
    cmd_ver->add_option("--gram-file", gram_file, "Re-validate a stored GramReport JSON");
    add_quad(cmd_ver);
    add_common(cmd_ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const bool json_out = format == "json";
        if (app.got_subcommand(cmd_jack)) {
            Partition lam = parse_partition(lambda_str);
            ThetaValue th = ThetaValue::parse(theta_str);
            SymPoly p = jack(lam, n);
            if (!th.is_symbolic()) p = specialize(p, th.value());
            emit(json_out ? to_json(p).dump() : render_sympoly_text(p), output_file);
        } else if (app.got_subcommand(cmd_sj)) {
            Partition lam = parse_partition(lambda_str);
            ThetaValue th = ThetaValue::parse(theta_str);
            BiSymPoly p = super_jack(lam, n, m);
            if (!th.is_symbolic()) p = specialize(p, th.value());
            emit(json_out ? to_json(p).dump() : render_bisym_text(p), output_file);
        } else if (app.got_subcommand(cmd_norm)) {
            Partition lam = parse_partition(lambda_str);
            ThetaValue th = ThetaValue::parse(theta_str);
            const bool super = cmd_norm->count("--m") > 0;
            Json j{{"lambda", to_json(lam)}, {"n", n},
                   {"theta", th.to_string()}, {"mode", mode}};
            if (super) j["m"] = m;
            std::string text;
            if (mode == "numeric") {
                double v = super ? norm_super_numeric(lam, n, m, th.value())
                                 : norm_jack_numeric(lam, n, rat_to_double(th.value()));
                j["value"] = v;
                text = std::to_string(v);
            } else {
                RatFunc ratio = super ? norm_super_ratio(lam, n, m) : norm_jack_ratio(lam, n);
                if (th.is_symbolic()) {
                    j["value"] = ratio.to_string();
                    text = ratio.to_string();
                } else {
                    Rat v = ratio.evaluate(th.value());
                    j["value"] = v.get_str();
                    text = v.get_str();
                }
            }
            emit(json_out ? j.dump() : text, output_file);
        } else if (app.got_subcommand(cmd_gram)) {
            ThetaValue th = ThetaValue::parse(theta_str);
            FatHookParams hp(n, m);
            GramReport rep;
            if (method == "exact") {
                rep = gram_exact(hp, degree, th, cumulative);
            } else {
                if (cfg.xi == cfg.xi_prime) throw radii_equal();
                rep = gram_numeric(hp, degree, th.value(), cfg, method == "monte-carlo",
                                   cumulative);
            }
            emit(json_out ? to_json(rep).dump() : gram_text(rep), output_file);
        } else if (app.got_subcommand(cmd_eig)) {
            Partition lam = parse_partition(lambda_str);
            ThetaValue th = ThetaValue::parse(theta_str);
            EigenData d = spectral_data(lam, n, m, th.as_ratfunc(), rmax);
            if (json_out) {
                emit(to_json(d).dump(), output_file);
            } else {
                std::ostringstream os;
                os << "lambda=" << lam.to_string() << " nu=(";
                for (std::size_t i = 0; i < d.nu.size(); ++i) os << (i ? "," : "") << d.nu[i];
                os << ")";
                for (const auto& [r, v] : d.eigenvalues)
                    os << " eig[" << r << "]=" << v.to_string();
                os << " h=" << d.h_eigenvalue.to_string();
                emit(os.str(), output_file);
            }
        } else if (app.got_subcommand(cmd_ker)) {
            auto ker = kernel_basis(FatHookParams(n, m), degree);
            if (json_out) {
                Json j = Json::array();
                for (const auto& lam : ker) j.push_back(to_json(lam));
                emit(j.dump(), output_file);
            } else {
                std::ostringstream os;
                for (const auto& lam : ker) os << lam.to_string() << "\n";
                emit(os.str(), output_file);
            }
        } else if (app.got_subcommand(cmd_ver)) {
            if (!gram_file.empty()) {
                std::ifstream f(gram_file);
                if (!f) throw bad_input("cannot open " + gram_file);
                Json j = Json::parse(f);
                GramReport rep = gram_report_from_json(j);
                bool ok = true;
                const bool exact = rep.method == "exact-ct";
                for (std::size_t i = 0; i < rep.index.size(); ++i) {
                    Rat formula = exact && rep.theta == "1"
                                      ? norm_super_exact_theta1(rep.index[i], rep.n, rep.m)
                                      : Rat(0);
                    for (std::size_t j2 = 0; j2 < rep.index.size(); ++j2) {
                        if (exact) {
                            const Rat& v = rep.exact_values[i][j2];
                            ok = ok && (i == j2 ? v == formula : v == 0);
                        } else {
                            double v = rep.numeric_values[i][j2];
                            double ref = i == j2 ? norm_super_numeric(rep.index[i], rep.n, rep.m,
                                                                      parse_rational(rep.theta))
                                                 : 0.0;
                            ok = ok && std::abs(v - ref) <= cfg.tol * std::max(1.0, std::abs(ref));
                        }
                    }
                }
                std::cout << (ok ? "PASS" : "FAIL") << " gram-file " << gram_file << "\n";
                return ok ? 0 : 1;
            }
            bool all_pass = true;
            Json results = Json::array();
            for (const auto& [name, fn] : verification_suites()) {
                if (suite != "all" && suite != name) continue;
                CheckResult res = fn();
                all_pass = all_pass && res.pass;
                std::cout << (res.pass ? "PASS" : "FAIL") << " " << res.name << " ["
                          << res.seconds << "s] " << res.detail << "\n";
                results.push_back({{"name", res.name},
                                   {"pass", res.pass},
                                   {"seconds", res.seconds},
                                   {"detail", res.detail}});
            }
            if (results.empty()) throw bad_input("unknown suite: " + suite);
            if (!output_file.empty()) emit(results.dump(), output_file);
            return all_pass ? 0 : 1;
        }
    } catch (const bad_input& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
