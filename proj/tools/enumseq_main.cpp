#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "enumseq/asympk.hpp"
#include "enumseq/congruence.hpp"
#include "enumseq/curves.hpp"
#include "enumseq/decimal.hpp"
#include "enumseq/derivation.hpp"
#include "enumseq/lines.hpp"
#include "enumseq/seqio.hpp"
#include "enumseq/symbolic.hpp"

namespace {

using enumseq::BigDecimal;
using enumseq::Integer;
using enumseq::Rational;
using enumseq::TheoremReport;
using json = nlohmann::json;

struct RunConfig {
    int precision = BigDecimal::kDefaultPrecision;
    int default_k = 0;  // 0 selects the order heuristic
    std::string format = "text";
    std::string cache_dir = ".enumseq-cache";
    bool strict = false;
};

// ---- report emission ----

json report_to_json(const TheoremReport& rep) {
    json j;
    j["asserted"] = rep.asserted;
    if (rep.counterexample) {
        j["counterexample"] = {{"actual", rep.counterexample->actual},
                               {"expected", rep.counterexample->expected},
                               {"location", rep.counterexample->location}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["params"] = rep.params;
    j["part"] = rep.check;
    j["pass"] = rep.pass;
    return j;
}

void print_reports(const std::vector<TheoremReport>& reports, const RunConfig& config) {
    if (config.format == "json") {
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(report_to_json(rep));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (const auto& rep : reports) {
        if (config.format == "csv") {
            std::cout << rep.check << "," << rep.params << "," << (rep.asserted ? "asserted" : "observed")
                      << "," << (rep.pass ? "pass" : "fail");
            if (rep.counterexample) std::cout << "," << rep.counterexample->location;
            std::cout << "\n";
            continue;
        }
        std::cout << rep.check << " [" << rep.params << "] "
                  << (rep.asserted ? "" : "(observation) ") << (rep.pass ? "PASS" : "FAIL");
        if (rep.counterexample) {
            std::cout << " at " << rep.counterexample->location << ": expected "
                      << rep.counterexample->expected << ", got " << rep.counterexample->actual;
        }
        std::cout << "\n";
    }
}

int reports_exit_code(const std::vector<TheoremReport>& reports, const RunConfig& config) {
    for (const auto& rep : reports) {
        if (!rep.pass && (rep.asserted || config.strict)) return 1;
    }
    return 0;
}

// ---- sequence cache ----

// Extends (or creates) the cached prefix of an integer sequence so it covers
// index `hi`. Gaps are filled with `term`; an unreadable or foreign cache file
// is rewritten from scratch.
void update_cache(const RunConfig& config, const std::string& id, long natural_start, long hi,
                  const std::function<Integer(long)>& term) {
    if (config.cache_dir.empty()) return;
    auto path = enumseq::sequence_cache_path(config.cache_dir, id);
    enumseq::IntegerSequenceFile file;
    file.header.sequence_id = id;
    file.start = natural_start;
    if (std::filesystem::exists(path)) {
        try {
            auto existing = enumseq::read_integer_sequence(path);
            if (existing.start == natural_start) file.values = std::move(existing.values);
        } catch (const std::exception&) {
            // fall through and rewrite
        }
    }
    if (static_cast<long>(file.values.size()) > hi - natural_start) return;
    while (static_cast<long>(file.values.size()) <= hi - natural_start) {
        file.values.push_back(term(natural_start + static_cast<long>(file.values.size())));
    }
    enumseq::write_integer_sequence(path, file);
}

// ---- v ----

int cmd_v(const RunConfig& config, long n, long from, long to, const std::string& method_name) {
    auto method = enumseq::parse_vn_method(method_name);
    if (!method) {
        std::cerr << "unknown method: " << method_name << "\n";
        return 2;
    }
    bool single = n >= 0;
    if (single) {
        from = n;
        to = n;
    }
    if (from < 0 || to < from) {
        std::cerr << "invalid range\n";
        return 2;
    }
    std::vector<Integer> values;
    values.reserve(static_cast<std::size_t>(to - from + 1));
    for (long i = from; i <= to; ++i) values.push_back(enumseq::v_by_method(i, *method));

    if (config.format == "json") {
        for (long i = from; i <= to; ++i) {
            json j;
            j["method"] = enumseq::to_string(*method);
            j["n"] = i;
            j["value"] = enumseq::to_string(values[static_cast<std::size_t>(i - from)]);
            std::cout << j.dump() << "\n";
        }
    } else if (config.format == "csv") {
        std::cout << "n,method,value\n";
        for (long i = from; i <= to; ++i) {
            std::cout << i << "," << enumseq::to_string(*method) << ","
                      << enumseq::to_string(values[static_cast<std::size_t>(i - from)]) << "\n";
        }
    } else {
        for (long i = from; i <= to; ++i) {
            if (!single) std::cout << i << " ";
            std::cout << enumseq::to_string(values[static_cast<std::size_t>(i - from)]) << "\n";
        }
    }

    update_cache(config, "v", 0, to, [&](long i) {
        if (i >= from && i <= to) return values[static_cast<std::size_t>(i - from)];
        return enumseq::v_defn(i);
    });
    return 0;
}

// ---- table ----

int cmd_table(const RunConfig& config, const std::string& seq, long mod, long depth) {
    if (mod < 2) {
        std::cerr << "bad modulus: " << mod << "\n";
        return 2;
    }
    if (depth < 1) {
        std::cerr << "bad depth: " << depth << "\n";
        return 2;
    }
    enumseq::CongruenceTable table;
    if (seq == "v") {
        table = enumseq::residue_table_v(mod, depth);
    } else if (seq == "nd") {
        auto counts = enumseq::kontsevich(mod * depth);
        table = enumseq::residue_table([&](long d) { return counts.at(d); }, mod, depth);
    } else if (seq == "qd") {
        auto counts = enumseq::extract_instantons(static_cast<int>(mod * depth));
        table = enumseq::residue_table(
            [&](long d) {
                const Rational& q = counts.values[static_cast<std::size_t>(d - 1)];
                if (!counts.integral[static_cast<std::size_t>(d - 1)]) {
                    throw std::runtime_error("q_" + std::to_string(d) + " is not an integer");
                }
                return Integer(q.get_num());
            },
            mod, depth);
    } else {
        std::cerr << "unknown sequence: " << seq << "\n";
        return 2;
    }

    if (config.format == "json") {
        json j;
        j["depth"] = depth;
        j["mod"] = mod;
        j["rows"] = table.rows;
        j["seq"] = seq;
        std::cout << j.dump(2) << "\n";
    } else {
        const char* sep = config.format == "csv" ? "," : " ";
        for (long r = 1; r <= mod; ++r) {
            for (long l = 0; l < depth; ++l) {
                if (l > 0) std::cout << sep;
                std::cout << table.entry(r, l);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

// ---- verify ----

struct VerifyParams {
    long k = 0;
    long p = 0;
    long q = 0;
    long j = 1;
    long l = -1;
    long r = 1;
    long depth = 0;
    long from = -1;
    long to = -1;
};

long theorem1_default_depth(int part, long k) {
    if (part == 5) return k + 2;
    if (part == 6 || part == 7) return k + 1;
    return 12;
}

bool small_prime(long k) {
    if (k < 2) return false;
    for (long d = 2; d * d <= k; ++d) {
        if (k % d == 0) return false;
    }
    return true;
}

bool power_of_two(long k) { return k >= 2 && (k & (k - 1)) == 0; }

std::vector<int> theorem1_parts_for(long k) {
    std::vector<int> parts = {1, 2};
    parts.push_back(k % 2 == 0 ? 3 : 4);
    if (small_prime(k)) {
        parts.push_back(5);
        if (k > 2) {
            parts.push_back(6);
            parts.push_back(7);
        }
    }
    if (power_of_two(k)) {
        parts.push_back(8);
        if (k > 2) {
            parts.push_back(9);
            parts.push_back(10);
        }
    }
    return parts;
}

std::vector<TheoremReport> run_lucas(long p) {
    if (!small_prime(p)) throw std::invalid_argument("lucas: p must be prime");
    std::vector<TheoremReport> reports;
    auto check = [&](const std::string& label, const Integer& n, const Integer& m,
                     std::uint64_t expected) {
        TheoremReport rep;
        rep.check = "lemma.lucas." + label;
        rep.params = "p=" + std::to_string(p);
        std::uint64_t digitwise = enumseq::binomial_mod_lucas(n, m, static_cast<std::uint64_t>(p));
        std::uint64_t direct = enumseq::mod_nonneg_u64(
            enumseq::binomial(n.get_ui(), m.get_ui()), static_cast<std::uint64_t>(p));
        if (digitwise != expected || direct != expected) {
            rep.pass = false;
            rep.counterexample =
                enumseq::Counterexample{"C(" + enumseq::to_string(n) + "," + enumseq::to_string(m) + ")",
                                        std::to_string(expected), std::to_string(digitwise)};
        }
        reports.push_back(std::move(rep));
    };
    Integer pp(p);
    check("central", pp * pp - 2, 2 * pp - 2, static_cast<std::uint64_t>(p - 1));
    check("adjacent", 2 * pp - 1, pp - 1, 1);
    return reports;
}

int cmd_verify(const RunConfig& config, const std::string& theorem, const std::string& lemma,
               const VerifyParams& params) {
    if (theorem.empty() == lemma.empty()) {
        std::cerr << "exactly one of --theorem / --lemma is required\n";
        return 2;
    }
    std::vector<TheoremReport> reports;
    if (!theorem.empty()) {
        if (theorem == "1" || theorem.rfind("1.", 0) == 0) {
            if (params.k < 2) {
                std::cerr << "--k >= 2 is required for theorem 1\n";
                return 2;
            }
            std::vector<int> parts;
            if (theorem == "1") {
                parts = theorem1_parts_for(params.k);
            } else {
                parts.push_back(std::stoi(theorem.substr(2)));
            }
            for (int part : parts) {
                long depth = params.depth > 0 ? params.depth : theorem1_default_depth(part, params.k);
                reports.push_back(enumseq::check_theorem1(part, params.k, depth));
            }
        } else if (theorem == "2" || theorem == "2.1" || theorem == "2.2") {
            if (params.p < 2) {
                std::cerr << "--p is required for theorem 2\n";
                return 2;
            }
            if (theorem != "2.2") reports.push_back(enumseq::check_extra1_part1(params.p));
            if (theorem != "2.1") {
                reports.push_back(enumseq::check_extra1_part2(static_cast<int>(params.r), params.p));
            }
        } else {
            std::cerr << "unknown theorem selector: " << theorem << "\n";
            return 2;
        }
    } else {
        long l = params.l;
        if (lemma == "4") {
            if (params.k < 3) {
                std::cerr << "--k (odd, >= 3) is required for lemma 4\n";
                return 2;
            }
            reports.push_back(enumseq::check_lemma4(params.k, l < 0 ? 1 : l));
        } else if (lemma == "cube") {
            long from = params.from < 0 ? 2 : params.from;
            long to = params.to < 0 ? 60 : params.to;
            reports.push_back(enumseq::check_divisibility_cube(from, to));
        } else if (lemma == "catalan") {
            long from = params.from < 0 ? 0 : params.from;
            long to = params.to < 0 ? 40 : params.to;
            reports.push_back(enumseq::check_catalan_mod3(from, to));
        } else if (lemma == "12" || lemma == "13a" || lemma == "13b") {
            if (params.q < 1) {
                std::cerr << "--q is required for lemma " << lemma << "\n";
                return 2;
            }
            if (lemma == "12") reports.push_back(enumseq::check_lemma12(params.q, params.j));
            if (lemma == "13a") reports.push_back(enumseq::check_lemma13a(params.q, params.j));
            if (lemma == "13b") reports.push_back(enumseq::check_lemma13b(params.q, params.j));
        } else if (lemma == "carl") {
            if (params.p < 2) {
                std::cerr << "--p is required for lemma carl\n";
                return 2;
            }
            reports.push_back(enumseq::check_lemma_carl(params.p, l < 0 ? 2 : l));
        } else if (lemma == "periodicity") {
            if (params.q < 1) {
                std::cerr << "--q is required for lemma periodicity\n";
                return 2;
            }
            reports.push_back(enumseq::check_periodicity_equidistribution(params.q));
        } else if (lemma == "lucas") {
            if (params.p < 2) {
                std::cerr << "--p is required for lemma lucas\n";
                return 2;
            }
            auto lucas = run_lucas(params.p);
            reports.insert(reports.end(), lucas.begin(), lucas.end());
        } else {
            std::cerr << "unknown lemma selector: " << lemma << "\n";
            return 2;
        }
    }
    print_reports(reports, config);
    return reports_exit_code(reports, config);
}

// ---- asymp ----

json estimate_to_json(const enumseq::CoefficientEstimate& est) {
    json j;
    j["confidence"] = est.confidence;
    if (est.recognized) {
        j["recognized"] = enumseq::to_string(*est.recognized);
    } else {
        j["recognized"] = nullptr;
    }
    j["value"] = est.value.to_string();
    return j;
}

void print_model(const enumseq::AsymptoticModel& model, const RunConfig& config) {
    if (config.format == "json") {
        json j;
        j["coefficients"] = json::array();
        for (const auto& est : model.coefficients) j["coefficients"].push_back(estimate_to_json(est));
        j["form"] = enumseq::to_string(model.form);
        j["log_term"] = model.log_term ? estimate_to_json(*model.log_term) : json(nullptr);
        j["power"] = model.power ? estimate_to_json(*model.power) : json(nullptr);
        j["slope"] = model.slope ? estimate_to_json(*model.slope) : json(nullptr);
        std::cout << j.dump(2) << "\n";
        return;
    }
    auto line = [](const char* name, const enumseq::CoefficientEstimate& est) {
        std::cout << name << " = " << est.value.to_string() << "  (confidence " << est.confidence
                  << " digits";
        if (est.recognized) std::cout << ", recognized " << enumseq::to_string(*est.recognized);
        std::cout << ")\n";
    };
    std::cout << "form " << enumseq::to_string(model.form) << "\n";
    if (model.slope) line("slope", *model.slope);
    if (model.log_term) line("log", *model.log_term);
    if (model.power) line("power", *model.power);
    for (std::size_t i = 0; i < model.coefficients.size(); ++i) {
        line(("c" + std::to_string(i)).c_str(), model.coefficients[i]);
    }
}

int cmd_asymp(const RunConfig& config, const std::string& input, const std::string& variant,
              int k, int depth, int prec) {
    int precision = prec > 0 ? prec : config.precision;
    auto sequence = enumseq::read_decimal_sequence(input, precision);
    int order = k > 0 ? k : (config.default_k > 0
                                 ? config.default_k
                                 : enumseq::default_asympk_order(
                                       static_cast<long>(sequence.values.size())));
    enumseq::AsymptoticModel model;
    if (variant == "plain") {
        model = enumseq::extract_coefficients(sequence, order, depth);
    } else if (variant == "I") {
        model = enumseq::variant_I(sequence, order, depth);
    } else if (variant == "II") {
        model = enumseq::variant_II(sequence, order, depth);
    } else if (variant == "III") {
        model = enumseq::variant_III(sequence, order, depth);
    } else {
        std::cerr << "unknown variant: " << variant << "\n";
        return 2;
    }
    print_model(model, config);
    return 0;
}

// ---- derive ----

int cmd_derive(const RunConfig& config, const std::string& form, int terms) {
    if (terms < 1) {
        std::cerr << "--terms must be positive\n";
        return 2;
    }
    std::vector<Rational> coefficients;
    std::optional<enumseq::LogExpansion> log_expansion;
    if (form == "D") {
        coefficients = enumseq::vn_asymptotic_D(terms).coefficients;
    } else if (form == "n") {
        coefficients = enumseq::convert_D_to_n(enumseq::vn_asymptotic_D(terms), terms);
    } else if (form == "2n") {
        coefficients = enumseq::convert_to_2n_form(enumseq::vn_asymptotic_D(terms), terms);
    } else if (form == "log") {
        log_expansion = enumseq::log_form(terms);
        coefficients = log_expansion->tail;
    } else {
        std::cerr << "unknown form: " << form << "\n";
        return 2;
    }

    if (config.format == "json") {
        json j;
        j["coefficients"] = json::array();
        for (const auto& c : coefficients) j["coefficients"].push_back(enumseq::to_string(c));
        if (log_expansion) {
            j["constant"] = {{"log2", enumseq::to_string(log_expansion->constant.log2)},
                             {"log3", enumseq::to_string(log_expansion->constant.log3)},
                             {"logpi", enumseq::to_string(log_expansion->constant.logpi)},
                             {"unit", enumseq::to_string(log_expansion->constant.unit)}};
            j["log_coefficient"] = enumseq::to_string(log_expansion->log_coefficient);
            j["slope"] = enumseq::to_string(log_expansion->slope);
        } else {
            j["constant"] = nullptr;
        }
        j["form"] = form;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (log_expansion) {
        std::cout << "slope " << enumseq::to_string(log_expansion->slope) << "\n";
        std::cout << "log coefficient " << enumseq::to_string(log_expansion->log_coefficient)
                  << "\n";
        std::cout << "constant " << log_expansion->constant.to_string() << "\n";
        std::cout << "tail";
        for (const auto& c : coefficients) std::cout << " " << enumseq::to_string(c);
        std::cout << "\n";
        return 0;
    }
    // The series opens with its constant term 1; print the decaying part.
    bool first = true;
    for (std::size_t i = 1; i < coefficients.size(); ++i) {
        if (!first) std::cout << ", ";
        std::cout << enumseq::to_string(coefficients[i]);
        first = false;
    }
    std::cout << "\n";
    return 0;
}

// ---- curves / instantons ----

int cmd_curves(const RunConfig& config, long dmax, bool patterns, bool asymptotics) {
    auto counts = enumseq::kontsevich(dmax);
    std::vector<TheoremReport> reports;
    if (patterns) reports = enumseq::nd_congruence_report(dmax);

    if (config.format == "json") {
        json j;
        if (asymptotics) {
            auto model = enumseq::nd_asymptotics(dmax, config.precision);
            j["asymptotics"] = {{"A", model.a.to_string()},
                                {"B0", model.b0.to_string()},
                                {"B1", model.b1.to_string()},
                                {"B2", model.b2.to_string()}};
        }
        j["dmax"] = dmax;
        if (patterns) {
            j["patterns"] = json::array();
            for (const auto& rep : reports) j["patterns"].push_back(report_to_json(rep));
        }
        j["values"] = json::array();
        for (long d = 1; d <= dmax; ++d) j["values"].push_back(enumseq::to_string(counts.at(d)));
        std::cout << j.dump(2) << "\n";
    } else {
        for (long d = 1; d <= dmax; ++d) {
            if (config.format == "csv") {
                std::cout << d << "," << enumseq::to_string(counts.at(d)) << "\n";
            } else {
                std::cout << d << " " << enumseq::to_string(counts.at(d)) << "\n";
            }
        }
        if (patterns) print_reports(reports, config);
        if (asymptotics) {
            auto model = enumseq::nd_asymptotics(dmax, config.precision);
            std::cout << "A = " << model.a.to_string() << "\n";
            std::cout << "B0 = " << model.b0.to_string() << "\n";
            std::cout << "B1 = " << model.b1.to_string() << "\n";
            std::cout << "B2 = " << model.b2.to_string() << "\n";
        }
    }
    update_cache(config, "nd", 1, dmax, [&](long d) { return counts.at(d); });
    return reports_exit_code(reports, config);
}

int cmd_instantons(const RunConfig& config, long dmax, bool patterns) {
    auto counts = enumseq::extract_instantons(static_cast<int>(dmax));
    std::vector<TheoremReport> reports;
    if (patterns) reports = enumseq::qd_congruence_report(dmax);

    if (config.format == "json") {
        json j;
        j["dmax"] = dmax;
        j["integral"] = counts.integral;
        if (patterns) {
            j["patterns"] = json::array();
            for (const auto& rep : reports) j["patterns"].push_back(report_to_json(rep));
        }
        j["values"] = json::array();
        for (const auto& q : counts.values) j["values"].push_back(enumseq::to_string(q));
        std::cout << j.dump(2) << "\n";
    } else {
        for (long d = 1; d <= dmax; ++d) {
            const auto& q = counts.values[static_cast<std::size_t>(d - 1)];
            if (config.format == "csv") {
                std::cout << d << "," << enumseq::to_string(q) << "\n";
            } else {
                std::cout << d << " " << enumseq::to_string(q)
                          << (counts.integral[static_cast<std::size_t>(d - 1)] ? ""
                                                                               : "  (non-integral)")
                          << "\n";
            }
        }
        if (patterns) print_reports(reports, config);
    }

    bool all_integral = true;
    for (bool flag : counts.integral) all_integral = all_integral && flag;
    if (all_integral) {
        update_cache(config, "qd", 1, dmax, [&](long d) {
            return Integer(counts.values[static_cast<std::size_t>(d - 1)].get_num());
        });
    }
    return reports_exit_code(reports, config);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for counting lines on hypersurfaces, rational plane curves, "
                 "and quintic instantons"};
    app.require_subcommand(1);

    RunConfig config;
    auto* opt_precision =
        app.add_option("--precision", config.precision,
                       "Working decimal precision (>= 20; env ENUMSEQ_PRECISION)")
            ->check(CLI::Range(20, 1000000));
    app.add_option("--default-k", config.default_k, "Default acceleration order (0 = heuristic)");
    app.add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache-dir", config.cache_dir, "Sequence cache directory ('' disables)")
        ->envname("ENUMSEQ_CACHE_DIR");
    app.add_flag("--strict", config.strict, "Failed observations also affect the exit code");

    // v
    long v_n = -1, v_from = -1, v_to = -1;
    std::string v_method = "defn";
    auto* sub_v = app.add_subcommand("v", "Count lines on hypersurfaces of degree 2n-3 in P^n");
    sub_v->add_option("--n", v_n, "Single index");
    sub_v->add_option("--from", v_from, "Range start");
    sub_v->add_option("--to", v_to, "Range end");
    sub_v->add_option("--method", v_method,
                      "defn|equivariant|residue|stirling|dominici|alternate");
    sub_v->fallthrough();

    // table
    std::string table_seq = "v";
    long table_mod = 0, table_depth = 8;
    auto* sub_table = app.add_subcommand("table", "Residue tables of a sequence mod k");
    sub_table->add_option("--seq", table_seq, "v|nd|qd");
    sub_table->add_option("--mod", table_mod, "Modulus k (rows are residue classes)")->required();
    sub_table->add_option("--depth", table_depth, "Columns per row");
    sub_table->fallthrough();

    // verify
    std::string verify_theorem, verify_lemma;
    VerifyParams params;
    auto* sub_verify = app.add_subcommand("verify", "Run congruence checks and emit a report");
    sub_verify->add_option("--theorem", verify_theorem, "1, 1.<part>, 2, 2.1, or 2.2");
    sub_verify->add_option("--lemma", verify_lemma,
                           "4|cube|catalan|12|13a|13b|carl|periodicity|lucas");
    sub_verify->add_option("--k", params.k, "Modulus");
    sub_verify->add_option("--p", params.p, "Prime");
    sub_verify->add_option("--q", params.q, "Exponent of 2");
    sub_verify->add_option("--j", params.j, "Odd shift parameter");
    sub_verify->add_option("--l", params.l, "Column / exponent parameter");
    sub_verify->add_option("--r", params.r, "Row-block parameter");
    sub_verify->add_option("--depth", params.depth, "Table depth (0 = per-part default)");
    sub_verify->add_option("--from", params.from, "Range start");
    sub_verify->add_option("--to", params.to, "Range end");
    sub_verify->fallthrough();

    // asymp
    std::string asymp_input, asymp_variant = "plain";
    int asymp_k = 0, asymp_depth = 3, asymp_prec = 0;
    auto* sub_asymp = app.add_subcommand("asymp", "Accelerated coefficient extraction on a sequence file");
    sub_asymp->add_option("--input", asymp_input, "Sequence file (index value per line)")
        ->required();
    sub_asymp->add_option("--variant", asymp_variant, "plain|I|II|III");
    sub_asymp->add_option("--k", asymp_k, "Acceleration order (0 = heuristic)");
    sub_asymp->add_option("--depth", asymp_depth, "Number of expansion coefficients");
    sub_asymp->add_option("--prec", asymp_prec, "Parse precision (0 = global)");
    sub_asymp->fallthrough();

    // derive
    std::string derive_form = "log";
    int derive_terms = 7;
    auto* sub_derive = app.add_subcommand("derive", "Exact asymptotic expansion of the line counts");
    sub_derive->add_option("--form", derive_form, "D|n|2n|log");
    sub_derive->add_option("--terms", derive_terms, "Expansion depth");
    sub_derive->fallthrough();

    // curves
    long curves_dmax = 10;
    bool curves_patterns = false, curves_asymptotics = false;
    auto* sub_curves = app.add_subcommand("curves", "Rational plane curve counts n_d");
    sub_curves->add_option("--dmax", curves_dmax, "Largest degree")->required();
    sub_curves->add_flag("--patterns", curves_patterns, "Check observed congruence patterns");
    sub_curves->add_flag("--asymptotics", curves_asymptotics,
                         "Extract growth constants (needs --dmax >= 100)");
    sub_curves->fallthrough();

    // instantons
    long inst_dmax = 10;
    bool inst_patterns = false;
    auto* sub_inst = app.add_subcommand("instantons", "Quintic instanton numbers q_d");
    sub_inst->add_option("--dmax", inst_dmax, "Largest degree")->required();
    sub_inst->add_flag("--patterns", inst_patterns, "Check observed congruence patterns");
    sub_inst->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    // A flag wins over the environment, but an unusable environment value is an
    // error rather than a silent fallback to the default.
    if (opt_precision->count() == 0) {
        if (const char* env = std::getenv("ENUMSEQ_PRECISION"); env != nullptr && *env != '\0') {
            char* end = nullptr;
            long value = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || value < 20 || value > 1000000) {
                std::cerr << "error: ENUMSEQ_PRECISION must be an integer in [20, 1000000], got '"
                          << env << "'\n";
                return 2;
            }
            config.precision = static_cast<int>(value);
        }
    }

    try {
        if (sub_v->parsed()) return cmd_v(config, v_n, v_from, v_to, v_method);
        if (sub_table->parsed()) return cmd_table(config, table_seq, table_mod, table_depth);
        if (sub_verify->parsed()) return cmd_verify(config, verify_theorem, verify_lemma, params);
        if (sub_asymp->parsed()) {
            return cmd_asymp(config, asymp_input, asymp_variant, asymp_k, asymp_depth, asymp_prec);
        }
        if (sub_derive->parsed()) return cmd_derive(config, derive_form, derive_terms);
        if (sub_curves->parsed()) {
            return cmd_curves(config, curves_dmax, curves_patterns, curves_asymptotics);
        }
        if (sub_inst->parsed()) return cmd_instantons(config, inst_dmax, inst_patterns);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
