#include "perazzo/errors.hpp"
#include "perazzo/io.hpp"
#include "perazzo/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace perazzo;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerifyFailed = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PERAZZO_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw UsageError("PERAZZO_SEED must be a non-negative integer");
    }
    return 42;
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw UsageError("cannot read " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

template <Field F>
const FormDocument<F>& validated(const FormDocument<F>& doc) {
    auto report = validate(doc.form);
    if (!report.valid())
        throw ValidationError(std::move(report.violations));
    return doc;
}

template <class Fn>
void with_document(const std::string& input, Fn&& fn) {
    const auto doc = parse_form_document(read_input(input));
    std::visit([&](const auto& d) { fn(validated(d)); }, doc);
}

void print_json(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        int n = 0, m = 0;
        char comma = 0, extra = 0;
        std::istringstream is(item);
        if (!(is >> n >> comma >> m) || comma != ',' || (is >> extra))
            throw UsageError("bad pair \"" + item + "\" (expected n,m)");
        out.emplace_back(n, m);
    }
    if (out.empty())
        throw UsageError("no pairs given");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int d = std::stoi(text);
            return {d, d};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad degree range \"" + text + "\" (expected a..b)");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::string extremes_text(const ExtremesReport& r) {
    std::ostringstream out;
    const auto abg_text = [](const Abg& a) {
        return "alpha=" + std::to_string(a.alpha) + " beta=" + std::to_string(a.beta) + " gamma=" + std::to_string(a.gamma);
    };
    out << "n=" << r.n << " m=" << r.m << " d=" << r.d << "\n"
        << "h_max: " << r.hmax.to_string() << (r.hmax_unimodal ? "  unimodal" : "  not unimodal") << "\n"
        << "h_min: " << r.hmin.to_string() << (r.hmin_unimodal ? "  unimodal" : "  not unimodal") << "\n"
        << "n+1 <= beta_(s-1): " << (r.hmin_inequality ? "yes" : "no") << "\n"
        << "extremes coincide: " << (r.coincide ? "yes" : "no") << "\n"
        << "s=" << r.s << "  at s-1: " << abg_text(r.at_s_minus_1) << "  at s: " << abg_text(r.at_s) << "\n";
    return out.str();
}

template <Field F>
void print_verdict(const char* name, const LefschetzVerdict<F>& v, const F& field, bool json) {
    if (json) {
        print_json(to_json(v));
        return;
    }
    if (const auto* h = std::get_if<Holds<F>>(&v.result)) {
        std::cout << name << ": holds\nwitness:";
        for (const auto& c : h->witness)
            std::cout << " " << field.to_string(c);
        std::cout << "\n";
        return;
    }
    const auto& fail = std::get<FailsGeneric>(v.result);
    std::cout << name << ": fails_generic (" << fail.trials << " trials)\n";
    for (const auto& e : fail.deficits)
        std::cout << "  degree " << e.degree << ", power " << e.power << ": rank " << e.rank << " < " << e.required << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perazzo forms: Hilbert functions, Lefschetz properties and Betti tables"};
    app.require_subcommand(1);

    int n = 2, m = 2, d = 5;
    std::string format = "text";
    std::string input = "-";
    std::uint64_t seed = 0;
    int trials = kDefaultTrials;
    std::optional<std::uint64_t> seed_opt;

    const auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", seed_opt, "random seed (default $PERAZZO_SEED or 42)"); };
    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", input, "form document file, - for standard input")->capture_default_str();
    };
    const auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
        sub->add_option("--format", format)->check(CLI::IsMember(choices))->capture_default_str();
    };

    auto* extremes_cmd = app.add_subcommand("extremes", "closed-form maximal and minimal h-vectors");
    extremes_cmd->add_option("--n", n)->required();
    extremes_cmd->add_option("--m", m)->required();
    extremes_cmd->add_option("--d", d)->required();
    add_format(extremes_cmd, {"text", "json"});

    auto* gen_cmd = app.add_subcommand("gen", "generate a form document");
    std::string canonical;
    std::string lambda;
    bool gen_min_flag = false, gen_general_flag = false, gen_mixed_flag = false, with_g = false;
    int power_sum = 0;
    std::string field_text = "prime";
    auto* g_canon = gen_cmd->add_option("--canonical", canonical, "minimal P^4 form, case i, ii or iii")
                        ->check(CLI::IsMember({"i", "ii", "iii"}));
    gen_cmd->add_option("--lambda", lambda, "lambda for case iii (default: random nonzero)")->needs(g_canon);
    auto* g_min = gen_cmd->add_flag("--min", gen_min_flag, "sum X_i L_i^(d-1)");
    auto* g_gen = gen_cmd->add_flag("--general", gen_general_flag, "random p_i");
    auto* g_ps = gen_cmd->add_option("--power-sum", power_sum, "p_i sums of K powers of linear forms");
    auto* g_mix = gen_cmd->add_flag("--mixed", gen_mixed_flag, "each p_i a power, two powers or random");
    gen_cmd->add_flag("--with-g", with_g, "add a random G");
    g_canon->excludes(g_min, g_gen, g_ps, g_mix);
    g_min->excludes(g_gen, g_ps, g_mix);
    g_gen->excludes(g_ps, g_mix);
    g_ps->excludes(g_mix);
    gen_cmd->add_option("--n", n);
    gen_cmd->add_option("--m", m);
    gen_cmd->add_option("--d", d);
    gen_cmd->add_option("--field", field_text, "prime, rational or a decimal prime")->capture_default_str();
    add_seed(gen_cmd);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of a form");
    bool full_check = false;
    hilbert_cmd->add_flag("--full-check", full_check, "compute every degree instead of using symmetry");
    add_input(hilbert_cmd);
    add_format(hilbert_cmd, {"text", "json"});

    auto* wlp_cmd = app.add_subcommand("wlp", "weak Lefschetz property");
    auto* slp_cmd = app.add_subcommand("slp", "strong Lefschetz property");
    for (auto* sub : {wlp_cmd, slp_cmd}) {
        add_input(sub);
        add_seed(sub);
        sub->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
        add_format(sub, {"text", "json"});
    }

    auto* hessian_cmd = app.add_subcommand("hessian", "vanishing of the Hessian determinant");
    bool symbolic = false;
    hessian_cmd->add_flag("--symbolic", symbolic, "expand the determinant (at most 5 variables, d <= 6)");
    hessian_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
    add_input(hessian_cmd);
    add_seed(hessian_cmd);

    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of A_F");
    add_input(betti_cmd);
    add_format(betti_cmd, {"text", "json", "both"});

    auto* verify_cmd = app.add_subcommand("verify", "run the check suite");
    std::string pairs_text, range_text = "4..10", checks_text, golden_dir;
    double rational_fraction = 0.2;
    int formula_d_max = 64;
    verify_cmd->add_option("--pairs", pairs_text, "n,m pairs separated by ';' (default: built-in grid)");
    verify_cmd->add_option("--d-range", range_text, "degrees a..b")->capture_default_str();
    verify_cmd->add_option("--formula-d-max", formula_d_max, "top degree for formula-only checks")->capture_default_str();
    verify_cmd->add_option("--rational-fraction", rational_fraction)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    verify_cmd->add_option("--golden-dir", golden_dir, "directory with betti_min_p4_d<d>.txt");
    verify_cmd->add_option("--checks", checks_text, "comma-separated subset of the checks");
    verify_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
    add_seed(verify_cmd);
    add_format(verify_cmd, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        seed = seed_opt ? *seed_opt : default_seed();
        const bool json = format == "json";

        if (*extremes_cmd) {
            const auto r = extremes(n, m, d);
            if (json)
                print_json(to_json(r));
            else
                std::cout << extremes_text(r);
        } else if (*gen_cmd) {
            const auto spec = FieldSpec::parse(field_text);
            with_field(spec, [&](const auto& field) {
                using F = std::decay_t<decltype(field)>;
                FormDocument<F> doc;
                doc.metadata.seed = seed;
                if (!canonical.empty()) {
                    const auto which = canonical == "i" ? CanonicalCase::I : canonical == "ii" ? CanonicalCase::II
                                                                                                : CanonicalCase::III;
                    std::optional<typename F::Element> lam;
                    if (!lambda.empty()) {
                        try {
                            lam = field.parse(lambda);
                        } catch (const std::exception& e) {
                            throw UsageError("bad --lambda: " + std::string(e.what()));
                        }
                    }
                    doc.form = gen_canonical(field, which, d, lam, seed);
                    doc.metadata.generator = "canonical-" + canonical;
                } else if (gen_min_flag) {
                    doc.form = gen_min(field, n, m, d, seed);
                    doc.metadata.generator = "min";
                } else if (power_sum > 0) {
                    doc.form = gen_power_sum(field, n, m, d, power_sum, with_g, seed);
                    doc.metadata.generator = "power-sum-" + std::to_string(power_sum);
                } else if (gen_mixed_flag) {
                    doc.form = gen_mixed(field, n, m, d, with_g, seed);
                    doc.metadata.generator = "mixed";
                } else if (gen_general_flag) {
                    doc.form = gen_general(field, n, m, d, with_g, seed);
                    doc.metadata.generator = "general";
                } else {
                    throw UsageError("choose one of --canonical, --min, --general, --power-sum, --mixed");
                }
                print_json(to_json(doc));
            });
        } else if (*hilbert_cmd) {
            with_document(input, [&](const auto& doc) {
                const auto& f = doc.form;
                const auto h = hilbert_function(f, full_check);
                const auto hmax = h_max(f.n, f.m, f.d);
                const auto hmin = h_min(f.n, f.m, f.d);
                std::string position = "intermediate";
                if (h == hmin && h == hmax)
                    position = "min=max";
                else if (h == hmin)
                    position = "min";
                else if (h == hmax)
                    position = "max";
                if (json)
                    print_json({{"h", to_json(h)}, {"position", position}});
                else
                    std::cout << h.to_string() << "  " << position << "\n";
            });
        } else if (*wlp_cmd || *slp_cmd) {
            with_document(input, [&](const auto& doc) {
                const auto model = build_model(assemble(doc.form));
                if (*wlp_cmd)
                    print_verdict("wlp", wlp(model, trials, seed), doc.form.field, json);
                else
                    print_verdict("slp", slp(model, trials, seed), doc.form.field, json);
            });
        } else if (*hessian_cmd) {
            with_document(input, [&](const auto& doc) {
                const auto poly = assemble(doc.form);
                if (symbolic) {
                    const auto det = hessian_determinant(poly);
                    const auto names = doc.form.layout().names();
                    std::cout << "hessian: " << (det.is_zero() ? "vanishes" : "nonzero") << " (symbolic)\n";
                    if (!det.is_zero())
                        std::cout << det.to_string(names) << "\n";
                } else {
                    std::cout << "hessian: " << (hessian_vanishes(poly, trials, seed) ? "vanishes" : "nonzero") << " ("
                              << trials << " trials)\n";
                }
            });
        } else if (*betti_cmd) {
            with_document(input, [&](const auto& doc) {
                const auto table = betti(build_model(assemble(doc.form)).module);
                if (format != "json")
                    std::cout << render_m2(table);
                if (format != "text")
                    print_json(to_json(table));
            });
        } else if (*verify_cmd) {
            VerifyOptions opt;
            if (!pairs_text.empty())
                opt.pairs = parse_pairs(pairs_text);
            std::tie(opt.d_min, opt.d_max) = parse_range(range_text);
            opt.formula_d_max = std::max(formula_d_max, opt.d_max);
            opt.seed = seed;
            opt.rational_fraction = rational_fraction;
            opt.golden_dir = golden_dir;
            opt.checks = split(checks_text, ',');
            opt.trials = trials;
            VerifyReport report;
            try {
                report = run_verify(opt);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (json)
                print_json(to_json(report));
            else
                std::cout << render_text(report);
            return report.ok() ? 0 : kExitVerifyFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: invalid Perazzo form\n";
        for (const auto& v : e.violations())
            std::cerr << "  " << v << "\n";
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const IndependenceLost& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const RetryExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
