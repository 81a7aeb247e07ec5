// Command-line front end for the hookenum library.

#include "hookenum/bijection.hpp"
#include "hookenum/counting.hpp"
#include "hookenum/motzkin.hpp"
#include "hookenum/perm.hpp"
#include "hookenum/series.hpp"
#include "hookenum/verify.hpp"
#include "hookenum/vhc.hpp"
#include "hookenum/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hookenum;
using nlohmann::json;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

void emit_pairs(const std::vector<std::pair<int, Count>>& rows, const std::string& format, const std::string& key)
{
    if (format == "json") {
        json arr = json::array();
        for (const auto& [n, v] : rows) {
            arr.push_back({{key, n}, {"value", to_decimal(v)}});
        }
        std::cout << arr.dump() << "\n";
    } else if (format == "bfile") {
        for (const auto& [n, v] : rows) {
            std::cout << n << " " << v << "\n";
        }
    } else {
        for (const auto& [n, v] : rows) {
            std::cout << n << "," << v << "\n";
        }
    }
}

std::string render_path(const MotzkinPath& p) { return p.word().empty() ? "-" : p.word(); }

MotzkinPath read_path(const std::string& text) { return MotzkinPath(text == "-" ? "" : text); }

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) {
            continue;
        }
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw invalid_input("not an integer: " + tok);
        }
    }
    return out;
}

json config_json(const HookConfig& cfg)
{
    json hooks = json::array();
    for (const Hook& h : cfg.hooks()) {
        hooks.push_back({h.sw, h.ne});
    }
    return {{"perm", cfg.pi.entries()}, {"hooks", hooks}};
}

std::string config_text(const HookConfig& cfg)
{
    std::string s = cfg.pi.str() + " |";
    for (const Hook& h : cfg.hooks()) {
        s += " " + std::to_string(h.sw) + "->" + std::to_string(h.ne);
    }
    return s;
}

int print_reports(const std::vector<VerificationReport>& reports, const std::string& format)
{
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back({{"name", r.name},
                           {"n_lo", r.n_lo},
                           {"n_hi", r.n_hi},
                           {"status", r.status()},
                           {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
                           {"seconds", r.seconds}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << std::left << std::setw(24) << r.status() << r.name << " [" << r.n_lo << ".." << r.n_hi << "] "
                      << std::fixed << std::setprecision(2) << r.seconds << "s";
            if (r.counterexample) {
                std::cout << "  " << *r.counterexample;
            }
            std::cout << "\n";
        }
    }
    return all_required_passed(reports) ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Valid hook configurations, Motzkin path posets and related counts"};
    app.require_subcommand(1);

    std::string format = "csv";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv, json or bfile")->check(CLI::IsMember({"csv", "json", "bfile"}));
    };

    // seq
    auto* seq = app.add_subcommand("seq", "Print a counting sequence for n = 1..max-n");
    std::string family;
    int max_n = 10;
    seq->add_option("--family", family, "Sequence family")->required();
    seq->add_option("--max-n", max_n, "Largest n")->check(CLI::NonNegativeNumber);
    add_format(seq);

    // vhc
    auto* vhc = app.add_subcommand("vhc", "Valid hook configurations");
    vhc->require_subcommand(1);
    auto* vhc_count = vhc->add_subcommand("count", "Count configurations over a pattern class");
    std::string patterns;
    int n = 0;
    vhc_count->add_option("--patterns", patterns, "Comma-separated patterns, e.g. 312,321")->required();
    vhc_count->add_option("--n", n, "Permutation length")->check(CLI::NonNegativeNumber);
    vhc_count->add_option("--max-n", max_n, "Largest length, when --n is absent")->check(CLI::NonNegativeNumber);
    add_format(vhc_count);
    auto* vhc_enum = vhc->add_subcommand("enumerate", "List the configurations of one permutation");
    std::string perm_text;
    vhc_enum->add_option("--perm", perm_text, "Permutation, comma-separated")->required();
    add_format(vhc_enum);

    // motzkin
    auto* mot = app.add_subcommand("motzkin", "Motzkin path posets");
    mot->require_subcommand(1);
    auto* mot_iv = mot->add_subcommand("intervals", "Count intervals for n = 0..max-n");
    std::string kind_text = "C";
    mot_iv->add_option("--kind", kind_text, "S, C, T or A")->check(CLI::IsMember({"S", "C", "T", "A"}));
    mot_iv->add_option("--max-n", max_n, "Largest path length")->check(CLI::NonNegativeNumber);
    add_format(mot_iv);

    // bijection
    auto* bij = app.add_subcommand("bijection", "Configurations of 312-avoiders and class-refined intervals");
    bij->require_subcommand(1);
    auto* fwd = bij->add_subcommand("forward", "Map a configuration to an interval");
    std::string hooks_text;
    fwd->add_option("--perm", perm_text, "Permutation, comma-separated")->required();
    fwd->add_option("--hooks", hooks_text, "Northeast endpoint per descent, comma-separated");
    auto* inv = bij->add_subcommand("inverse", "Map an interval to a configuration");
    std::string lower, upper;
    inv->add_option("--lower", lower, "Lower path word ('-' for empty)")->required();
    inv->add_option("--upper", upper, "Upper path word ('-' for empty)")->required();
    auto* rt = bij->add_subcommand("roundtrip", "Check both compositions are identities");
    rt->add_option("--max-n", max_n, "Largest permutation length")->check(CLI::PositiveNumber);

    // walks
    auto* wk = app.add_subcommand("walks", "Closed quarter-plane walks w(k) for k = 0..max-n");
    wk->add_option("--max-n", max_n, "Largest walk length")->check(CLI::NonNegativeNumber);
    add_format(wk);

    // series
    auto* ser = app.add_subcommand("series", "Expand a named generating function");
    std::string gf_name;
    int order = 40;
    ser->add_option("--name", gf_name, "motzkin, thm_132_321, thm_231_321, thm_231_1243, prop_231_312_321, "
                                       "conj_132_3241, or q_residual")
        ->required();
    ser->add_option("--order", order, "Number of coefficients")->check(CLI::PositiveNumber);
    add_format(ser);

    // root
    auto* root = app.add_subcommand("root", "Isolate the growth constants rho and beta");
    std::string which = "rho";
    std::string tol_text = "1e-9";
    root->add_option("--name", which, "rho or beta")->check(CLI::IsMember({"rho", "beta"}));
    root->add_option("--digits", tol_text, "Bisection tolerance written as 1e-k");

    // verify
    auto* ver = app.add_subcommand("verify", "Run the cross-verification matrix");
    std::string level = "quick";
    ver->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    ver->add_option("--format", format, "text or json")->check(CLI::IsMember({"csv", "text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (seq->parsed()) {
            const Family& fam = find_family(family);
            const std::vector<Count> values = max_n > 0 ? fam.sequence(max_n) : std::vector<Count>{};
            std::vector<std::pair<int, Count>> rows;
            for (int k = 1; k <= max_n; ++k) {
                rows.emplace_back(k, values[k]);
            }
            emit_pairs(rows, format, "n");
            return kOk;
        }
        if (vhc_count->parsed()) {
            const PatternSet pats = parse_patterns(patterns);
            std::vector<std::pair<int, Count>> rows;
            if (vhc_count->count("--n") > 0) {
                rows.emplace_back(n, count_vhcs_of_class(n, pats));
            } else {
                for (int k = 1; k <= max_n; ++k) {
                    rows.emplace_back(k, count_vhcs_of_class(k, pats));
                }
            }
            emit_pairs(rows, format, "n");
            return kOk;
        }
        if (vhc_enum->parsed()) {
            const std::vector<HookConfig> all = enumerate_vhcs(Permutation::parse(perm_text));
            if (format == "json") {
                json arr = json::array();
                for (const auto& c : all) {
                    arr.push_back(config_json(c));
                }
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& c : all) {
                    std::cout << config_text(c) << "\n";
                }
            }
            return kOk;
        }
        if (mot_iv->parsed()) {
            const PosetKind kind = parse_poset_kind(kind_text);
            std::vector<std::pair<int, Count>> rows;
            for (int k = 0; k <= max_n; ++k) {
                rows.emplace_back(k, count_intervals(k, kind));
            }
            emit_pairs(rows, format, "n");
            return kOk;
        }
        if (fwd->parsed()) {
            const HookConfig cfg{Permutation::parse(perm_text), parse_int_list(hooks_text)};
            const PathInterval iv = forward(cfg);
            std::cout << render_path(iv.lower) << " " << render_path(iv.upper) << "\n";
            return kOk;
        }
        if (inv->parsed()) {
            const InverseResult res = inverse_detailed({read_path(lower), read_path(upper)});
            std::cout << config_text(res.cfg) << "\n";
            if (res.used_fallback) {
                std::cerr << "note: hook assignment used the exhaustive fallback\n";
            }
            return kOk;
        }
        if (rt->parsed()) {
            return print_reports({check_bijection_roundtrip(max_n)}, "text");
        }
        if (wk->parsed()) {
            const std::vector<Count> w = walk_sequence(max_n);
            std::vector<std::pair<int, Count>> rows;
            for (int k = 0; k <= max_n; ++k) {
                rows.emplace_back(k, w[k]);
            }
            emit_pairs(rows, format, "k");
            return kOk;
        }
        if (ser->parsed()) {
            const TruncatedSeries s = gf_name == "q_residual" ? q_residual(order) : named_gf(parse_named_gf(gf_name), order);
            if (format == "json") {
                json arr = json::array();
                for (const Rational& c : s.coeffs()) {
                    arr.push_back(denominator(c) == 1 ? numerator(c).str() : c.str());
                }
                std::cout << arr.dump() << "\n";
            } else {
                for (int i = 0; i < s.order(); ++i) {
                    std::cout << i << ": " << numerator(s[i]) << "/" << denominator(s[i]) << "\n";
                }
            }
            return kOk;
        }
        if (root->parsed()) {
            if (tol_text.rfind("1e-", 0) != 0) {
                throw invalid_input("--digits must look like 1e-k");
            }
            const int k = std::stoi(tol_text.substr(3));
            const Rational tol(1, boost::multiprecision::pow(Count(10), static_cast<unsigned>(k)));
            const RootBracket b = which == "rho" ? real_root(rho_polynomial(), 4, 5, tol)
                                                 : real_root(beta_polynomial(), Rational(7, 10), Rational(9, 10), tol);
            std::cout << std::setprecision(k + 2) << to_double(b.mid()) << "\n";
            return kOk;
        }
        if (ver->parsed()) {
            VerifyOptions opt;
            opt.level = level == "full" ? VerifyLevel::full : VerifyLevel::quick;
            return print_reports(run_verification(opt), format);
        }
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
