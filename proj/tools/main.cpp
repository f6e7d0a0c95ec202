// Command-line front end: hypertree inspection and enumeration, Chen-Coskun
// divisor classes, the D_k extremality arithmetic, the divisor-class
// database builder, and a verification suite. Output is JSON on stdout
// unless --text is given. Exit codes: 0 success, 1 domain error, 2 usage.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "m0nbar/m0nbar.hpp"

namespace {

using namespace m0nbar;
using Clock = std::chrono::steady_clock;

struct Options {
    bool text = false;
    bool zero_based = false;
    bool fast = false;
    bool deep = false;
    bool oracle = false;
    int basis = 1;
    long long k = 0;
    int n = 0;
    int n_min = 6;
    int n_max = 8;
    long long budget_seconds = 0;
    std::string file;
    std::string out;
    std::string weights;
    std::string expr;
};

std::vector<long long> parse_weights(const std::string& text) {
    std::vector<long long> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw invalid_weights("empty weight list");
    return out;
}

Hypertree load_hypertree(const Options& opt) {
    std::ifstream in(opt.file);
    if (!in.good()) throw error("cannot open " + opt.file);
    return hypertree_from_json(json::parse(in), opt.zero_based);
}

MultiplicityMode mode_of(const Options& opt) {
    return opt.fast ? MultiplicityMode::sampled : MultiplicityMode::exact;
}

void print(const Options& opt, const json& j) {
    if (opt.text) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

void print_class(const Options& opt, const DivisorClass& c, json extra = json::object()) {
    json j = to_json(c);
    for (auto& [key, value] : extra.items()) j[key] = value;
    if (opt.text) {
        std::ostringstream line;
        line << c.h_coeff() << "*H";
        for (const auto& [I, coeff] : c.e_coeffs()) {
            line << " - " << coeff << "*E_{";
            for (std::size_t i = 0; i < I.size(); ++i) line << (i ? "," : "") << I[i];
            line << "}";
        }
        std::cout << line.str() << "\n";
        for (auto& [key, value] : extra.items()) std::cout << key << ": " << value.dump() << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

void require_deep(const Options& opt, int n) {
    if (n >= 9 && !opt.deep)
        throw CLI::ValidationError("--deep", "n >= 9 runs for minutes to hours; pass --deep to confirm");
}

int run_verify_all(const Options&) {
    int failures = 0;
    const auto step = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        bool ok = true;
        std::mt19937 gen(7);
        auto rand_poly = [&]() {
            Polynomial p;
            std::uniform_int_distribution<int> coeff(-9, 9), var(1, 6), expn(1, 3), len(0, 8), width(0, 3);
            int terms = len(gen);
            for (int t = 0; t < terms; ++t) {
                std::vector<Monomial::Entry> entries;
                int w = width(gen);
                for (int v = 0; v < w; ++v) entries.emplace_back(var(gen), expn(gen));
                int c = coeff(gen);
                if (c != 0) p += Polynomial::term(c, Monomial::make(std::move(entries)));
            }
            return p;
        };
        for (int trial = 0; trial < 25 && ok; ++trial) {
            Polynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
            ok = ok && (a + b) + c == a + (b + c) && a * b == b * a && a * (b + c) == a * b + a * c;
            Polynomial q = rand_poly();
            if (!q.is_zero()) ok = ok && exact_divide(a * q, q) == a;
        }
        step("polynomial ring laws and exact division", ok);
    }

    step("enumeration counts n = 6, 7, 8", enumerate_irreducible(6).size() == 1 &&
                                               enumerate_irreducible(7).size() == 1 &&
                                               enumerate_irreducible(8).size() == 3);

    {
        bool ok = true;
        for (int n = 6; n <= 8 && ok; ++n)
            for (const Hypertree& h : enumerate_irreducible(n)) {
                Polynomial g = divisor_polynomial(h);
                ok = ok && g.degree() == static_cast<int>(h.blocks.size()) - 1 &&
                     is_difference_translation_invariant(g, n);
                if (!ok) break;
            }
        step("hypertree polynomial degree law and invariance", ok);
    }

    {
        bool ok = true;
        for (int n = 3; n <= 4 && ok; ++n) {
            std::vector<long long> a(static_cast<std::size_t>(n));
            long long total = 1;
            for (int i = 0; i < n; ++i) total *= 5;
            for (long long code = 0; code < total && ok; ++code) {
                long long c = code, sum = 0, abs_sum = 0, g = 0;
                for (int i = 0; i < n; ++i) {
                    a[static_cast<std::size_t>(i)] = (c % 5) - 2;
                    c /= 5;
                    sum += a[static_cast<std::size_t>(i)];
                    abs_sum += std::llabs(a[static_cast<std::size_t>(i)]);
                    g = std::gcd(g, a[static_cast<std::size_t>(i)]);
                }
                if (sum != 0 || g != 1 || abs_sum > 6) continue;
                WeightVector w(a);
                ok = classes_equal(pullback_class_closed_form(w),
                                   pullback_class_from_polynomial(lambda_polynomial(w), w.n() + 2));
            }
        }
        step("closed-form classes against the multiplicity engine (desk scale)", ok);
    }

    {
        bool ok = true;
        for (int k = 2; k <= 2 && ok; ++k) {
            std::vector<long long> a(static_cast<std::size_t>(k), 1);
            a.insert(a.end(), static_cast<std::size_t>(k), -1);
            ok = classes_equal(class_from_polynomial(divisor_polynomial(bipyramid(k)), 2 * k + 2, 1),
                               class_in_basis(WeightVector(a), 1));
        }
        step("bipyramid divisor matches its Chen-Coskun class (k = 2)", ok);
    }

    {
        bool ok = true;
        for (long long k = 1; k <= 4 && ok; ++k) ok = dk_pairing(k).pairing == -1;
        step("D_k pairing -1 (k = 1..4)", ok);
    }

    {
        bool ok = true;
        for (long long k = 1; k <= 6 && ok; ++k)
            ok = counterexample_check(k).is_counterexample == (k >= 2);
        step("counterexample gate (k = 1..6)", ok);
    }

    step("restriction identity samples",
         restriction_check(WeightVector({1, 1, -1, -1})) &&
             restriction_check(WeightVector({1, 1, 1, -1, -1, -1})) &&
             restriction_check(WeightVector({2, 1, -1, -1, -1})));

    std::cout << (failures == 0 ? "verify all: OK" : "verify all: FAILURES") << "\n";
    return failures == 0 ? 0 : 1;
}

int dispatch(const Options& opt, const std::string& command) {
    if (command == "ht-validate") {
        print(opt, to_json(validate(load_hypertree(opt))));
        return 0;
    }
    if (command == "ht-poly") {
        Hypertree h = load_hypertree(opt);
        ValidationReport report = validate(h);
        if (!report.valid()) throw invalid_hypertree("input fails the hypertree axioms");
        Polynomial g = divisor_polynomial(h);
        if (opt.text) std::cout << to_string(g) << "\n";
        else print(opt, {{"n", h.n}, {"degree", g.degree()}, {"polynomial", to_string(g)}});
        return 0;
    }
    if (command == "ht-class") {
        Hypertree h = load_hypertree(opt);
        if (opt.basis < 1 || opt.basis > h.n) throw bad_index();
        DivisorClass c = class_from_polynomial(divisor_polynomial(h), h.n, opt.basis, mode_of(opt));
        print_class(opt, c);
        return 0;
    }
    if (command == "ht-enum") {
        require_deep(opt, opt.n);
        auto all = enumerate_irreducible(opt.n);
        json list = json::array();
        for (const Hypertree& h : all) list.push_back(to_json(h));
        print(opt, {{"n", opt.n}, {"count", all.size()}, {"hypertrees", list}});
        return 0;
    }
    if (command == "ht-aut") {
        print(opt, {{"automorphism_order", automorphism_group_size(load_hypertree(opt))}});
        return 0;
    }
    if (command == "ht-bipyramid") {
        print(opt, to_json(bipyramid(static_cast<int>(opt.k))));
        return 0;
    }
    if (command == "cc-poly") {
        WeightVector w(parse_weights(opt.weights));
        Polynomial p = lambda_polynomial(w);
        if (opt.text) std::cout << to_string(p) << "\n";
        else print(opt, {{"weights", w.weights()}, {"degree", p.degree()}, {"polynomial", to_string(p)}});
        return 0;
    }
    if (command == "cc-class") {
        WeightVector w(parse_weights(opt.weights));
        DivisorClass c = class_in_basis(w, opt.basis);
        json extra = json::object();
        if (opt.oracle) {
            DivisorClass engine = class_from_polynomial(lambda_polynomial(w), w.n() + 2, opt.basis, mode_of(opt));
            extra["oracle_agrees"] = classes_equal(c, engine);
        }
        print_class(opt, c, extra);
        return 0;
    }
    if (command == "cc-restrict") {
        WeightVector w(parse_weights(opt.weights));
        std::vector<long long> merged(w.weights().begin(), w.weights().end() - 2);
        merged.push_back(w[w.n() - 1] + w[w.n()]);
        print(opt, {{"weights", w.weights()}, {"merged", merged}, {"holds", restriction_check(w)}});
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact divisor-class computations on moduli of stable rational marked curves"};
    app.require_subcommand(1);
    app.add_flag("--text", opt.text, "human-readable output instead of JSON");

    std::string pending;

    // ht ----------------------------------------------------------------
    CLI::App* ht = app.add_subcommand("ht", "hypertree operations");
    ht->require_subcommand(1);

    CLI::App* ht_validate = ht->add_subcommand("validate", "check the hypertree axioms");
    ht_validate->add_option("file", opt.file, "hypertree JSON file")->required();
    ht_validate->add_flag("--zero-based", opt.zero_based, "input labels start at 0");
    ht_validate->callback([&] { pending = "ht-validate"; });

    CLI::App* ht_poly = ht->add_subcommand("poly", "divisor polynomial of a hypertree");
    ht_poly->add_option("file", opt.file)->required();
    ht_poly->add_flag("--zero-based", opt.zero_based);
    ht_poly->callback([&] { pending = "ht-poly"; });

    CLI::App* ht_class = ht->add_subcommand("class", "divisor class of a hypertree");
    ht_class->add_option("file", opt.file)->required();
    ht_class->add_option("--basis", opt.basis, "Kapranov basis index (default 1)");
    ht_class->add_flag("--zero-based", opt.zero_based);
    ht_class->add_flag("--fast", opt.fast, "probabilistic multiplicity mode");
    ht_class->callback([&] { pending = "ht-class"; });

    CLI::App* ht_enum = ht->add_subcommand("enum", "enumerate irreducible hypertrees up to relabeling");
    ht_enum->add_option("--n", opt.n, "number of vertices")->required();
    ht_enum->add_flag("--deep", opt.deep, "allow n = 9, 10");
    ht_enum->callback([&] { pending = "ht-enum"; });

    CLI::App* ht_aut = ht->add_subcommand("aut", "automorphism group order");
    ht_aut->add_option("file", opt.file)->required();
    ht_aut->add_flag("--zero-based", opt.zero_based);
    ht_aut->callback([&] { pending = "ht-aut"; });

    CLI::App* ht_bip = ht->add_subcommand("bipyramid", "bipyramid hypertree on 2k+2 vertices");
    ht_bip->add_option("--k", opt.k)->required();
    ht_bip->callback([&] { pending = "ht-bipyramid"; });

    // cc ----------------------------------------------------------------
    CLI::App* cc = app.add_subcommand("cc", "Chen-Coskun divisor operations");
    cc->require_subcommand(1);

    CLI::App* cc_poly = cc->add_subcommand("poly", "defining polynomial of Lambda_a");
    cc_poly->add_option("--weights", opt.weights, "comma-separated integers")->required();
    cc_poly->callback([&] { pending = "cc-poly"; });

    CLI::App* cc_class = cc->add_subcommand("class", "class of Lambda_a in a Kapranov basis");
    cc_class->add_option("--weights", opt.weights)->required();
    cc_class->add_option("--basis", opt.basis);
    cc_class->add_flag("--oracle", opt.oracle, "also run the multiplicity engine and compare");
    cc_class->add_flag("--fast", opt.fast);
    cc_class->callback([&] { pending = "cc-class"; });

    CLI::App* cc_restrict = cc->add_subcommand("restrict", "boundary restriction identity");
    cc_restrict->add_option("--weights", opt.weights)->required();
    cc_restrict->callback([&] { pending = "cc-restrict"; });

    // dk ----------------------------------------------------------------
    bool want_pair = false, want_counter = false;
    CLI::App* dk = app.add_subcommand("dk", "the divisor D_k = Lambda_(k,1,-1..-1)");
    dk->add_option("--k", opt.k)->required();
    dk->add_flag("--pair", want_pair, "intersection pairing with the covering family");
    dk->add_flag("--counterexample", want_counter, "hypertree-degree counterexample gate");
    dk->callback([&] { pending = "dk"; });

    // db ----------------------------------------------------------------
    CLI::App* db = app.add_subcommand("db", "divisor-class database");
    db->require_subcommand(1);
    CLI::App* db_build = db->add_subcommand("build", "build records for n_min..n_max");
    db_build->add_option("--n-min", opt.n_min)->required();
    db_build->add_option("--n-max", opt.n_max)->required();
    db_build->add_option("--out", opt.out, "output JSON file")->required();
    db_build->add_flag("--deep", opt.deep, "allow n = 9, 10");
    db_build->add_option("--budget-seconds", opt.budget_seconds, "stop and truncate after this many seconds");
    db_build->callback([&] { pending = "db-build"; });

    // verify --------------------------------------------------------------
    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    CLI::App* verify_bip = verify->add_subcommand("bipyramid", "bipyramid class identification");
    verify_bip->add_option("--k", opt.k)->required();
    verify_bip->callback([&] { pending = "verify-bipyramid"; });
    CLI::App* verify_all = verify->add_subcommand("all", "property suite at desk scale");
    verify_all->callback([&] { pending = "verify-all"; });

    // poly ----------------------------------------------------------------
    CLI::App* poly = app.add_subcommand("poly", "raw polynomial operations");
    poly->require_subcommand(1);
    CLI::App* poly_class = poly->add_subcommand("class", "class of the divisor cut out by a polynomial");
    poly_class->add_option("--expr", opt.expr, "polynomial in x1..xn, e.g. '(x1-x2)*(x3-x4)'")->required();
    poly_class->add_option("--n", opt.n, "number of markings")->required();
    poly_class->add_option("--basis", opt.basis, "push down to this Kapranov basis index (0 = keep pullback)");
    poly_class->add_flag("--fast", opt.fast);
    poly_class->callback([&] { pending = "poly-class"; });

    // let the global --text appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pending == "dk") {
            json out{{"k", opt.k}, {"class", to_json(class_in_basis(dk_weights(opt.k), 1))}};
            if (want_pair) out["pairing"] = to_json(dk_pairing(opt.k));
            if (want_counter) out["counterexample"] = to_json(counterexample_check(opt.k));
            print(opt, out);
            return 0;
        }
        if (pending == "db-build") {
            if (opt.n_max >= 9 && !opt.deep)
                throw CLI::ValidationError("--deep", "n >= 9 runs for minutes to hours; pass --deep to confirm");
            std::ofstream out(opt.out);
            if (!out.good()) throw error("cannot open " + opt.out + " for writing");
            auto start = Clock::now();
            long long written = 0;
            bool truncated = false;
            out << "[";
            build_database(opt.n_min, opt.n_max, [&](const DatabaseRecord& record) {
                if (opt.budget_seconds > 0 &&
                    std::chrono::duration<double>(Clock::now() - start).count() >
                        static_cast<double>(opt.budget_seconds)) {
                    truncated = true;
                    return false;
                }
                out << (written ? ",\n" : "\n") << to_json(record).dump();
                out.flush();
                ++written;
                return true;
            });
            if (truncated) out << (written ? ",\n" : "\n") << json{{"truncated", true}}.dump();
            out << "\n]\n";
            print(opt, {{"out", opt.out}, {"records_written", written}, {"truncated", truncated}});
            return truncated ? 1 : 0;
        }
        if (pending == "verify-bipyramid") {
            int k = static_cast<int>(opt.k);
            std::vector<long long> a(static_cast<std::size_t>(k), 1);
            a.insert(a.end(), static_cast<std::size_t>(k), -1);
            DivisorClass ht_class = class_from_polynomial(divisor_polynomial(bipyramid(k)), 2 * k + 2, 1);
            bool equal = classes_equal(ht_class, class_in_basis(WeightVector(a), 1));
            print(opt, {{"k", k}, {"classes_equal", equal}});
            return equal ? 0 : 1;
        }
        if (pending == "verify-all") return run_verify_all(opt);
        if (pending == "poly-class") {
            Polynomial f = primitive_normalize(parse_polynomial(opt.expr));
            if (opt.basis == 0) {
                print_class(opt, pullback_class_from_polynomial(f, opt.n, mode_of(opt)));
            } else {
                if (opt.basis < 0 || opt.basis > opt.n) throw bad_index();
                print_class(opt, class_from_polynomial(f, opt.n, opt.basis, mode_of(opt)));
            }
            return 0;
        }
        return dispatch(opt, pending);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const m0nbar::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: bad input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
