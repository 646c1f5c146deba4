// quiverlab: Kac polynomials of quivers, their generating series, and
// brute-force verification counts over small finite fields.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "qlab/counting.hpp"
#include "qlab/error.hpp"
#include "qlab/io.hpp"
#include "qlab/verify.hpp"

namespace {

using namespace qlab;
using nlohmann::json;

enum class Format { json, csv, pretty };

struct CommonOpts {
    std::string quiver_path;
    std::string box;
    std::string dim;
    std::string framing;
    std::string field;
    std::string subset;
    std::string codim;
    unsigned long long budget = 100'000'000;
    int workers = 1;
    std::string format = "pretty";
};

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "pretty") return Format::pretty;
    throw UsageError("unknown format '" + name + "' (expected json, csv or pretty)");
}

CountOptions count_options(const CommonOpts& o) {
    if (o.budget == 0) throw UsageError("budget must be positive");
    CountOptions c;
    c.budget = o.budget;
    c.workers = o.workers;
    return c;
}

std::vector<int> parse_subset(const Quiver& q, const std::string& subset) {
    std::vector<int> j;
    if (subset.empty()) return j;
    std::string cur;
    const auto flush = [&] {
        if (!cur.empty()) j.push_back(q.vertex_index(cur));
        cur.clear();
    };
    for (char ch : subset) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    flush();
    return j;
}

json checks_to_json(const std::vector<CheckResult>& checks) {
    json out = json::array();
    for (const CheckResult& c : checks) out.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    return out;
}

void emit(const json& report, Format format) {
    if (format == Format::json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    if (format == Format::csv) {
        for (const json& row : report.value("results", json::array())) {
            if (row.contains("exponent")) {
                std::string line;
                for (const json& e : row["exponent"]) line += e.dump() + ",";
                std::cout << line << row["coefficient"].get<std::string>() << "\n";
            } else if (row.contains("dim") && row.contains("poly")) {
                std::string line;
                for (const json& e : row["dim"]) line += e.dump() + ",";
                std::cout << line << row["poly"].dump() << "\n";
            } else if (row.contains("codim")) {
                std::string line;
                for (const json& e : row["codim"]) line += e.dump() + ",";
                std::cout << line << row["count"].dump() << "\n";
            } else if (row.contains("count")) {
                std::cout << row["count"].dump() << "\n";
            }
        }
        for (const json& c : report.value("checks", json::array()))
            std::cout << c["id"].get<std::string>() << "," << (c["pass"].get<bool>() ? "pass" : "FAIL") << ","
                      << c["detail"].get<std::string>() << "\n";
        return;
    }
    // pretty
    std::cout << report["command"].get<std::string>() << "\n";
    for (const json& row : report.value("results", json::array())) {
        if (row.contains("exponent"))
            std::cout << "  z^" << row["exponent"].dump() << "  " << row["coefficient"].get<std::string>()
                      << "\n";
        else if (row.contains("dim") && row.contains("poly"))
            std::cout << "  A_" << row["dim"].dump() << " = " << row["poly"].dump() << " (lowest first)\n";
        else if (row.contains("codim"))
            std::cout << "  codim " << row["codim"].dump() << ": " << row["count"].dump() << "\n";
        else
            std::cout << "  " << row.dump() << "\n";
    }
    for (const json& c : report.value("checks", json::array()))
        std::cout << "  [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] " << c["id"].get<std::string>()
                  << (c["pass"].get<bool>() ? "" : "  " + c["detail"].get<std::string>()) << "\n";
}

json config_json(const CommonOpts& o) {
    json c{{"budget", o.budget}, {"workers", o.workers}, {"format", o.format}};
    if (!o.quiver_path.empty()) c["quiver"] = o.quiver_path;
    if (!o.box.empty()) c["box"] = o.box;
    if (!o.dim.empty()) c["dim"] = o.dim;
    if (!o.framing.empty()) c["framing"] = o.framing;
    if (!o.field.empty()) c["field"] = o.field;
    if (!o.subset.empty()) c["subset"] = o.subset;
    if (!o.codim.empty()) c["codim"] = o.codim;
    return c;
}

int finish(const json& report, const CommonOpts& o, bool checks_ok) {
    emit(report, parse_format(o.format));
    return checks_ok ? 0 : 1;
}

int run_kac(const CommonOpts& o) {
    const Quiver q = load_quiver(o.quiver_path);
    const KacTable table = kac_polynomials(q, parse_dim_list(o.box));
    std::vector<CheckResult> checks;
    for (const KacEntryCheck& c : kac_table_checks(table)) {
        std::string d;
        for (int x : c.dim) d += (d.empty() ? "" : ",") + std::to_string(x);
        checks.push_back({"kac-structure/d=" + d, c.ok(),
                          c.ok() ? "ok"
                                 : std::string(c.monic ? "" : "not monic ") +
                                       (c.degree_matches ? "" : "wrong degree ") +
                                       (c.nonneg_integer_coeffs ? "" : "bad coefficients")});
    }
    const json report{{"command", "kac"},
                      {"config", config_json(o)},
                      {"results", kac_table_to_json(table)},
                      {"checks", checks_to_json(checks)}};
    return finish(report, o, all_pass(checks));
}

int run_predict(const CommonOpts& o) {
    const Quiver q = load_quiver(o.quiver_path);
    const DimVector box = parse_dim_list(o.box);
    const SeriesRF p = p_series(q, box);
    json results;
    if (o.field.empty()) {
        results = series_to_json(p);
    } else {
        const FiniteField f = FiniteField::parse(o.field);
        results = series_to_json(evaluate_t(p, BigRational(f.q())));
    }
    const json report{{"command", "predict"},
                      {"config", config_json(o)},
                      {"results", results},
                      {"checks", json::array()}};
    return finish(report, o, true);
}

json count_record(const Quiver& q, const json& dims, const FiniteField& f, unsigned long long count,
                  const CountStats& stats) {
    json rec{{"quiver", quiver_to_json(q)},
             {"field", f.name()},
             {"count", count},
             {"elapsed", stats.seconds},
             {"enumerated", stats.enumerated}};
    rec.update(dims);
    return rec;
}

int run_count(const CommonOpts& o, const std::string& what) {
    const Quiver q = load_quiver(o.quiver_path);
    const FiniteField f = FiniteField::parse(o.field);
    const DimVector d = parse_dim_list(o.dim);
    const CountOptions opts = count_options(o);
    CountStats stats;
    json results = json::array();
    if (what == "lambda") {
        results.push_back(count_record(q, {{"d", d}}, f, count_lambda(q, d, f, opts, &stats), stats));
    } else if (what == "mu") {
        results.push_back(count_record(q, {{"d", d}}, f, count_mu_fiber(q, d, f, opts, &stats), stats));
    } else if (what == "nakajima") {
        if (o.framing.empty()) throw UsageError("count nakajima needs --framing");
        const DimVector w = parse_dim_list(o.framing);
        const NakajimaCount c = count_nakajima_l(q, d, w, f, opts, &stats);
        results.push_back(count_record(q, {{"v", d}, {"w", w}}, f, c.count, stats));
    } else { // strata
        if (o.subset.empty()) throw UsageError("count strata needs --subset");
        if (o.codim.empty()) throw UsageError("count strata needs --codim");
        const std::vector<int> j = parse_subset(q, o.subset);
        const DimVector n = parse_dim_list(o.codim);
        results.push_back(count_record(q, {{"d", d}, {"codim", n}}, f,
                                       count_strata(q, j, d, n, f, opts, &stats), stats));
    }
    const json report{{"command", "count " + what},
                      {"config", config_json(o)},
                      {"results", results},
                      {"checks", json::array()}};
    return finish(report, o, true);
}

int run_strata(const CommonOpts& o) {
    const Quiver q = load_quiver(o.quiver_path);
    const FiniteField f = FiniteField::parse(o.field);
    const DimVector d = parse_dim_list(o.dim);
    const std::vector<int> j = parse_subset(q, o.subset);
    const CountOptions opts = count_options(o);
    CountStats stats;
    const auto buckets = strata_counts(q, j, d, f, opts, &stats);
    unsigned long long sum = 0;
    json results = json::array();
    for (const auto& [n, c] : buckets) {
        results.push_back({{"codim", n}, {"count", c}});
        sum += c;
    }
    results.push_back({{"total", sum}, {"elapsed", stats.seconds}, {"enumerated", stats.enumerated}});
    const unsigned long long direct = count_lambda(q, d, f, opts);
    std::vector<CheckResult> checks{{"strata-completeness", sum == direct,
                                     sum == direct ? "ok"
                                                   : "strata sum " + std::to_string(sum) +
                                                         " != " + std::to_string(direct)}};
    const json report{{"command", "strata"},
                      {"config", config_json(o)},
                      {"results", results},
                      {"checks", checks_to_json(checks)}};
    return finish(report, o, all_pass(checks));
}

int run_verify(const CommonOpts& o, const std::string& suite) {
    const CountOptions opts = count_options(o);
    std::vector<CheckResult> checks;
    if (!o.quiver_path.empty()) {
        // custom sweep over one quiver
        const Quiver q = load_quiver(o.quiver_path);
        const DimVector box =
            o.box.empty() ? DimVector(static_cast<size_t>(q.num_vertices()), 1) : parse_dim_list(o.box);
        const std::vector<int> fields =
            o.field.empty() ? std::vector<int>{2, 3} : std::vector<int>{FiniteField::parse(o.field).q()};
        checks = verify_lambda_identity("custom", q, box, fields, opts);
        auto mu = verify_mu_identity("custom", q, box, fields, opts);
        checks.insert(checks.end(), mu.begin(), mu.end());
    } else if (suite == "all") {
        checks = verify_default_suite(opts);
    } else if (suite == "qbinom") {
        checks = verify_qbinom_identity(6);
    } else if (suite == "commuting") {
        checks = verify_commuting_identity(3, {2, 3}, opts);
    } else {
        throw UsageError("unknown suite '" + suite + "' (expected all, qbinom or commuting)");
    }
    const json report{{"command", "verify"},
                      {"config", config_json(o)},
                      {"results", json::array()},
                      {"checks", checks_to_json(checks)}};
    return finish(report, o, all_pass(checks));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kac polynomials of quivers, generating series, and exhaustive finite-field checks"};
    app.require_subcommand(1);

    CommonOpts o;
    const auto add_common = [&o](CLI::App* cmd, bool with_counting) {
        cmd->add_option("--format", o.format, "Output format: json, csv or pretty");
        if (with_counting) {
            cmd->add_option("--budget", o.budget, "Cap on enumerated candidate tuples");
            cmd->add_option("--workers", o.workers, "Worker threads for the enumeration");
        }
    };

    CLI::App* kac = app.add_subcommand("kac", "Kac polynomial table of a quiver");
    kac->add_option("--quiver", o.quiver_path, "Quiver file")->required();
    kac->add_option("--box", o.box, "Truncation box, e.g. 2,2")->required();
    add_common(kac, false);

    CLI::App* predict = app.add_subcommand("predict", "Generating series of nilpotent-fiber mass");
    predict->add_option("--quiver", o.quiver_path, "Quiver file")->required();
    predict->add_option("--box", o.box, "Truncation box")->required();
    predict->add_option("--field", o.field, "Evaluate at q = |F| instead of symbolically");
    add_common(predict, false);

    CLI::App* count = app.add_subcommand("count", "Exhaustive point counts");
    count->require_subcommand(1);
    std::vector<std::string> count_kinds{"lambda", "mu", "nakajima", "strata"};
    for (const std::string& kind : count_kinds) {
        CLI::App* sub = count->add_subcommand(kind);
        sub->add_option("--quiver", o.quiver_path, "Quiver file")->required();
        sub->add_option("--dim", o.dim, "Dimension vector")->required();
        sub->add_option("--field", o.field, "Finite field p or p^r")->required();
        if (kind == "nakajima") sub->add_option("--framing", o.framing, "Framing dimension vector");
        if (kind == "strata") {
            sub->add_option("--subset", o.subset, "Vertex subset J (ids, comma separated)");
            sub->add_option("--codim", o.codim, "Codimension vector over J");
        }
        add_common(sub, true);
    }

    CLI::App* strata = app.add_subcommand("strata", "Full stratum table with completeness check");
    strata->add_option("--quiver", o.quiver_path, "Quiver file")->required();
    strata->add_option("--dim", o.dim, "Dimension vector")->required();
    strata->add_option("--subset", o.subset, "Vertex subset J (ids, comma separated)")->required();
    strata->add_option("--field", o.field, "Finite field p or p^r")->required();
    add_common(strata, true);

    CLI::App* verify = app.add_subcommand("verify", "Run the identity suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "all, qbinom or commuting");
    verify->add_option("--quiver", o.quiver_path, "Custom sweep: quiver file");
    verify->add_option("--box", o.box, "Custom sweep: truncation box");
    verify->add_option("--field", o.field, "Custom sweep: single field");
    add_common(verify, true);

    try {
        app.parse(argc, argv);
        if (kac->parsed()) return run_kac(o);
        if (predict->parsed()) return run_predict(o);
        if (count->parsed()) {
            for (const std::string& kind : count_kinds)
                if (count->get_subcommand(kind)->parsed()) return run_count(o, kind);
        }
        if (strata->parsed()) return run_strata(o);
        if (verify->parsed()) return run_verify(o, suite);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
