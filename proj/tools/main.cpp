#include "eistheta/cyclotomic.hpp"
#include "eistheta/eisenstein.hpp"
#include "eistheta/elliptic.hpp"
#include "eistheta/modular.hpp"
#include "eistheta/qseries.hpp"
#include "eistheta/quadform.hpp"
#include "eistheta/serialize.hpp"
#include "eistheta/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace eistheta;

// FNV-1a over the exposed surface: subcommand names, then the suite
// registry. Stable across runs; moves exactly when the surface moves.
std::string manifest_hash() {
    unsigned long long h = 14695981039346656037ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= static_cast<unsigned char>('\n');
        h *= 1099511628211ULL;
    };
    for (const char* name :
         {"cusps", "basis", "theta", "repcount", "decompose", "curve-count", "verify"})
        mix(name);
    for (const std::string& s : suite_registry()) mix(s);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string exponent_str(const Rational& e) {
    if (e == 0) return "";
    if (e == 1) return "q";
    if (e.get_den() == 1) return "q^" + rational_str(e);
    return "q^(" + rational_str(e) + ")";
}

std::string series_str(const FourierSeries& f) {
    if (f.empty()) return "0";
    std::string out;
    for (const auto& [key, coeff] : f.terms()) {
        std::string c = coeff.str();
        std::string sign = "+";
        if (c.find(' ') != std::string::npos) {
            c = "(" + c + ")";
        } else if (c[0] == '-') {
            sign = "-";
            c = c.substr(1);
        }
        std::string mono = exponent_str(frac(key, f.delta()));
        std::string body = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
        if (out.empty())
            out = (sign == "-" ? "-" : "") + body;
        else
            out += " " + sign + " " + body;
    }
    return out;
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_cusps(long long level, bool json) {
    std::vector<Cusp> cusps = enumerate_cusps(level);
    long long dim = eisenstein_dim(level);
    if (json) {
        nlohmann::ordered_json j;
        j["level"] = level;
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const Cusp& c : cusps)
            list.push_back(nlohmann::ordered_json::array({c.h, c.k}));
        j["cusps"] = std::move(list);
        j["count"] = static_cast<long long>(cusps.size());
        j["eis_dim"] = dim;
        emit(j);
        return 0;
    }
    std::cout << "level " << level << ": " << cusps.size()
              << " cusp classes, Eisenstein dimension " << dim << "\n";
    for (const Cusp& c : cusps) std::cout << "  " << cusp_str(c) << "\n";
    return 0;
}

int run_basis(long long p, long long k, long long terms, bool json) {
    std::vector<EisElement> basis = basis_gamma0_prime_power(p, k);
    long long level = 1;
    for (long long i = 0; i < k; ++i) level *= p;
    if (json) {
        nlohmann::ordered_json j;
        j["prime"] = p;
        j["power"] = k;
        j["level"] = level;
        j["dim"] = static_cast<long long>(basis.size());
        nlohmann::ordered_json elems = nlohmann::ordered_json::array();
        for (const EisElement& e : basis) {
            nlohmann::ordered_json entry;
            entry["label"] = e.label;
            entry["word"] = e.word();
            entry["expansion"] = to_json(expansion(e, frac(terms)));
            elems.push_back(std::move(entry));
        }
        j["elements"] = std::move(elems);
        emit(j);
        return 0;
    }
    std::cout << "level " << level << ": " << basis.size() << " basis elements\n";
    for (const EisElement& e : basis) {
        std::cout << e.label << " = " << e.word() << "\n";
        std::cout << "  " << series_str(expansion(e, frac(terms))) << " + O(q^" << terms
                  << ")\n";
    }
    return 0;
}

int run_theta(long long s, long long M, long long terms, bool json) {
    FourierSeries th = theta_series(four_squares_form(s, M), terms);
    if (json) {
        emit(to_json(th));
        return 0;
    }
    std::cout << "theta_{" << s << "," << M << "} = " << series_str(th) << " + O(q^"
              << terms << ")\n";
    return 0;
}

int run_repcount(const std::vector<long long>& gram_flat,
                 const std::vector<long long>& residues,
                 const std::vector<long long>& moduli, long long n, bool json) {
    Gram gram{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gram[i][j] = gram_flat[4 * i + j];
    std::array<long long, 4> res{}, mod{};
    for (int i = 0; i < 4; ++i) {
        res[i] = residues[i];
        mod[i] = moduli[i];
    }
    CongruentForm form(gram, res, mod);
    long long count = representation_count(form, n);
    if (json) {
        nlohmann::ordered_json j;
        j["gram"] = gram_flat;
        j["residues"] = residues;
        j["moduli"] = moduli;
        j["n"] = n;
        j["count"] = count;
        emit(j);
        return 0;
    }
    std::cout << "r(" << n << ") = " << count << "\n";
    return 0;
}

std::vector<std::string> cusp_column_names(long long level) {
    if (level == 36) return {"eta(6t)^4"};
    if (level == 144) return {"eta(6t)^4", "eta(6t)^4|V(2)", "eta(6t)^4|V(4)"};
    return {};
}

int run_decompose(const std::string& path, long long level, bool json) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open target file " + path);
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("target is not valid JSON: ") + e.what());
    }
    FourierSeries target = series_from_json(parsed);

    std::vector<EisElement> elements;
    std::vector<FourierSeries> cuspforms;
    if (level == 36 || level == 144) {
        elements = spanning_set_gamma0(level);
        cuspforms = cuspform_columns_gamma0(level, target.trunc());
    } else {
        long long p = 2;
        while (p * p <= level && level % p != 0) ++p;
        if (level % p != 0) p = level;
        long long k = 0;
        long long rest = level;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (rest != 1 || level <= 1)
            throw std::invalid_argument(
                "level must be 36, 144, or a supported prime power");
        elements = basis_gamma0_prime_power(p, k);
    }

    DecomposeReport rep =
        decompose_by_expansion(target, elements, cuspforms, target.trunc());
    std::vector<std::string> cusp_names = cusp_column_names(level);

    if (json) {
        nlohmann::ordered_json j;
        j["level"] = level;
        j["consistent"] = rep.consistent;
        j["underdetermined"] = rep.underdetermined;
        j["rank"] = rep.rank;
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (size_t i = 0; i < elements.size(); ++i) {
            nlohmann::ordered_json e;
            e["label"] = elements[i].label;
            e["value"] = to_json(rep.coeffs[i]);
            coeffs.push_back(std::move(e));
        }
        j["coefficients"] = std::move(coeffs);
        nlohmann::ordered_json cc = nlohmann::ordered_json::array();
        for (size_t i = 0; i < rep.cusp_coeffs.size(); ++i) {
            nlohmann::ordered_json e;
            e["label"] = i < cusp_names.size() ? cusp_names[i] : "cusp" + std::to_string(i);
            e["value"] = to_json(rep.cusp_coeffs[i]);
            cc.push_back(std::move(e));
        }
        j["cusp_coefficients"] = std::move(cc);
        j["exact"] = rep.exact;
        j["first_mismatch"] =
            rep.first_mismatch ? nlohmann::ordered_json(rational_str(*rep.first_mismatch))
                               : nlohmann::ordered_json(nullptr);
        emit(j);
        return 0;
    }

    if (!rep.consistent) {
        std::cout << "no decomposition: the linear system is inconsistent (rank "
                  << rep.rank << ")\n";
        return 0;
    }
    std::cout << "decomposition over level " << level << " (rank " << rep.rank;
    if (rep.underdetermined) std::cout << ", underdetermined, free parts pinned to 0";
    std::cout << ")\n";
    for (size_t i = 0; i < elements.size(); ++i)
        if (rep.coeffs[i] != 0)
            std::cout << "  " << elements[i].label << ": " << rational_str(rep.coeffs[i])
                      << "\n";
    for (size_t i = 0; i < rep.cusp_coeffs.size(); ++i)
        if (rep.cusp_coeffs[i] != 0)
            std::cout << "  "
                      << (i < cusp_names.size() ? cusp_names[i]
                                                : "cusp" + std::to_string(i))
                      << ": " << rational_str(rep.cusp_coeffs[i]) << "\n";
    if (rep.exact)
        std::cout << "recombination exact below q^" << rational_str(target.trunc())
                  << "\n";
    else
        std::cout << "recombination mismatch at q^"
                  << (rep.first_mismatch ? rational_str(*rep.first_mismatch) : "?") << "\n";
    return 0;
}

int run_curve_count(const std::vector<long long>& curve, long long p, int k, bool json) {
    std::array<long long, 5> a{};
    for (int i = 0; i < 5; ++i) a[i] = curve[i];
    FrobeniusData f = frobenius_data(reduce_curve(a, p));
    const char* reduction = f.reduction == Reduction::good ? "good"
                            : f.reduction == Reduction::multiplicative
                                ? "multiplicative"
                                : "additive";
    if (f.reduction != Reduction::good && k > 1)
        throw std::invalid_argument("extension counts require good reduction at " +
                                    std::to_string(p));
    double size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<double>(p);
    if (size > 4.0e18) throw std::invalid_argument("p^k exceeds the 64-bit range");

    long long trace = trace_power(f, k);
    bool have_points = f.reduction == Reduction::good;
    long long points = have_points ? point_count_pk(f, k) : 0;
    if (json) {
        nlohmann::ordered_json j;
        j["curve"] = curve;
        j["p"] = p;
        j["k"] = k;
        j["reduction"] = reduction;
        j["trace"] = trace;
        j["points"] = have_points ? nlohmann::ordered_json(points)
                                  : nlohmann::ordered_json(nullptr);
        emit(j);
        return 0;
    }
    std::cout << "curve [" << curve[0] << "," << curve[1] << "," << curve[2] << ","
              << curve[3] << "," << curve[4] << "] mod " << p << ": " << reduction
              << " reduction\n";
    if (have_points)
        std::cout << "  N_" << p << "(" << k << ") = " << points << ", trace = " << trace
                  << "\n";
    else
        std::cout << "  a_" << p << " = " << f.a_p << "\n";
    return 0;
}

int run_verify(const std::string& selection, long long bound, int workers, bool json) {
    std::vector<std::string> names = resolve_suites(selection);
    VerifyConfig cfg;
    cfg.bound = bound;
    cfg.workers = workers;
    bool any_failed = false;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const std::string& name : names) {
        SuiteReport report = run_suite(name, cfg);
        any_failed = any_failed || report.failed > 0;
        if (json) {
            all.push_back(nlohmann::ordered_json::parse(to_json_string(report)));
            continue;
        }
        std::cout << report.suite << ": " << report.passed << " passed, " << report.failed
                  << " failed\n";
        for (const SuiteCase& c : report.cases) {
            std::cout << (c.pass ? "  [ ok ] " : "  [FAIL] ") << c.name;
            if (!c.pass) std::cout << ": expected " << c.expected << ", got " << c.actual;
            if (!c.flag.empty()) std::cout << " [" << c.flag << "]";
            std::cout << "\n";
        }
    }
    if (json) {
        if (all.size() == 1)
            std::cout << all[0].dump(2) << "\n";
        else
            std::cout << all.dump(2) << "\n";
    }
    return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operator calculus on weight-2 Eisenstein series"};
    app.require_subcommand(1);
    app.set_version_flag("--version", manifest_hash());

    bool json = false;
    long long terms = 30;
    long long bound = 200;
    int workers = 1;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--terms", terms, "expansion truncation")->check(CLI::PositiveNumber);
    app.add_option("--bound", bound, "prime sweep ceiling")->check(CLI::PositiveNumber);
    app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 64));

    CLI::App* c_cusps = app.add_subcommand("cusps", "list the cusp classes of Gamma_0(N)");
    long long level = 0;
    c_cusps->add_option("--level", level, "group level N")
        ->required()
        ->check(CLI::PositiveNumber);
    c_cusps->add_flag("--json", json, "emit JSON instead of text");

    CLI::App* c_basis =
        app.add_subcommand("basis", "Eisenstein basis for Gamma_0(p^k)");
    long long prime = 0, power = 0;
    c_basis->add_option("--prime", prime, "prime p")->required();
    c_basis->add_option("--power", power, "exponent k")->required();
    c_basis->add_option("--terms", terms, "expansion truncation")
        ->check(CLI::PositiveNumber);
    c_basis->add_flag("--json", json, "emit JSON instead of text");

    CLI::App* c_theta =
        app.add_subcommand("theta", "theta series of the congruent four-squares form");
    long long residue = -1, modulus = 0;
    c_theta->add_option("--residue", residue, "congruence residue s")->required();
    c_theta->add_option("--modulus", modulus, "congruence modulus M")->required();
    c_theta->add_option("--terms", terms, "expansion truncation")
        ->check(CLI::PositiveNumber);
    c_theta->add_flag("--json", json, "emit JSON instead of text");

    CLI::App* c_repcount =
        app.add_subcommand("repcount", "representation count of a congruent form");
    std::vector<long long> gram_flat, residues, moduli;
    long long rep_n = 0;
    c_repcount->add_option("--gram", gram_flat, "Gram matrix, 16 row-major entries")
        ->required()
        ->expected(16);
    c_repcount->add_option("--residues", residues, "coordinate residues")
        ->required()
        ->expected(4);
    c_repcount->add_option("--moduli", moduli, "coordinate moduli")
        ->required()
        ->expected(4);
    c_repcount->add_option("--n", rep_n, "target value")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_repcount->add_flag("--json", json, "emit JSON instead of text");

    CLI::App* c_decompose =
        app.add_subcommand("decompose", "decompose a series over a spanning set");
    std::string target_path;
    long long dec_level = 0;
    c_decompose->add_option("--target", target_path, "series JSON file")->required();
    c_decompose->add_option("--level", dec_level, "group level")
        ->required()
        ->check(CLI::PositiveNumber);
    c_decompose->add_flag("--json", json, "emit JSON instead of text");

    CLI::App* c_curve =
        app.add_subcommand("curve-count", "point counts and Frobenius trace mod p");
    std::vector<long long> curve;
    long long curve_p = 0;
    int curve_k = 1;
    c_curve->add_option("--curve", curve, "coefficients a1,a2,a3,a4,a6")
        ->required()
        ->delimiter(',')
        ->expected(5);
    c_curve->add_option("--p", curve_p, "prime p")->required();
    c_curve->add_option("--k", curve_k, "extension degree")->check(CLI::Range(1, 40));
    c_curve->add_flag("--json", json, "emit JSON instead of text");

    CLI::App* c_verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    c_verify->add_option("--suite", suite, "suite name, 'appendix', or 'all'")->required();
    c_verify->add_option("--bound", bound, "prime sweep ceiling")
        ->check(CLI::PositiveNumber);
    c_verify->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 64));
    c_verify->add_flag("--json", json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_cusps)) return run_cusps(level, json);
        if (app.got_subcommand(c_basis)) return run_basis(prime, power, terms, json);
        if (app.got_subcommand(c_theta)) return run_theta(residue, modulus, terms, json);
        if (app.got_subcommand(c_repcount))
            return run_repcount(gram_flat, residues, moduli, rep_n, json);
        if (app.got_subcommand(c_decompose))
            return run_decompose(target_path, dec_level, json);
        if (app.got_subcommand(c_curve))
            return run_curve_count(curve, curve_p, curve_k, json);
        if (app.got_subcommand(c_verify)) return run_verify(suite, bound, workers, json);
    } catch (const NotConstructible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
