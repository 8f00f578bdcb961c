#pragma once

#include "schurlab/families.hpp"
#include "schurlab/identity.hpp"
#include "schurlab/lemmas.hpp"
#include "schurlab/parallel.hpp"
#include "schurlab/report.hpp"
#include "schurlab/specialization.hpp"
#include "schurlab/transforms.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace schurlab {

inline unsigned default_workers()
{
    if (const char* env = std::getenv("SCHURLAB_WORKERS")) {
        const long v = std::atol(env);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    return 1;
}

struct run_config {
    enum class command {
        verify_identity,
        verify_lemmas,
        verify_qlc,
        verify_bridge,
        verify_transform,
        counterexample,
        expand,
    };
    enum class format { text, json };

    command cmd = command::verify_identity;
    format output = format::text;
    std::string out_path; // empty = report returned only

    unsigned workers = default_workers();

    long r_max = 12;          // verify-identity
    long t_max = 4;           // verify-lemmas
    std::string lemma_filter; // "", or one of 3.2 .. 3.10
    long qlc_n_max = 30;      // verify-qlc
    long bridge_n_max = 10;   // verify-bridge
    long shuffle_r_max = 8;   // verify-bridge
    long n_factor = 20;       // verify-transform: factorization + derivative sweep
    long n_sign = 40;         // verify-transform: sign change + closed form sweep
    long n_preserve = 25;     // verify-transform: preservation corpus length
    long power_m = 3;         // counterexample
    long power_n_max = 20;    // counterexample

    std::string eproduct_expr; // expand
    std::string family_expr;   // expand
    std::string minus_family;  // expand: optional second family to subtract
    long family_t = 0;         // expand

    std::string sequences_path; // verify-qlc: extra user sequences (JSON)
    std::string array_path;     // verify-transform: custom array (JSON)
    std::string corpus_path;    // verify-transform: custom corpus (JSON)
};

struct run_result {
    int exit_code = 0;
    std::string report;
};

namespace runner_detail {

using task_fn = std::function<std::vector<check_result>()>;

inline std::vector<check_result> run_tasks(const std::vector<task_fn>& tasks, unsigned workers)
{
    std::vector<std::vector<check_result>> slots(tasks.size());
    parallel_for(tasks.size(), workers, [&](std::size_t i) {
        try {
            slots[i] = tasks[i]();
        } catch (const std::exception& ex) {
            slots[i] = {check_result{"task-error", "", false, "", "", ex.what(), ""}};
        }
    });
    std::vector<check_result> out;
    for (auto& s : slots)
        for (auto& c : s)
            out.push_back(std::move(c));
    return out;
}

inline check_result from_lemma_report(const lemma_report& rep)
{
    return {rep.lemma,
            rep.parameter,
            rep.passed,
            to_string(rep.lhs),
            to_string(rep.rhs),
            to_string(rep.discrepancy),
            ""};
}

inline Int parse_int_value(const nlohmann::json& v, const char* what)
{
    if (v.is_number_integer())
        return Int(v.get<long>());
    if (v.is_string())
        return Int(v.get<std::string>());
    throw std::invalid_argument(std::string(what) + ": entries must be integers or strings");
}

inline Rat parse_rat_value(const nlohmann::json& v, const char* what)
{
    if (v.is_number_integer())
        return Rat(v.get<long>());
    if (v.is_string()) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), v.get<std::string>().c_str(), 10) != 0)
            throw std::invalid_argument(std::string(what) + ": bad rational literal");
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument(std::string(what) + ": entries must be integers or strings");
}

inline nlohmann::json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    nlohmann::json doc;
    in >> doc;
    return doc;
}

// JSON: array of coefficient arrays, index = n
inline std::vector<qpolynomial> load_sequences(const std::string& path)
{
    const auto doc = load_json_file(path);
    if (!doc.is_array())
        throw std::invalid_argument("sequence file: expected a JSON array");
    std::vector<qpolynomial> out;
    for (const auto& row : doc) {
        if (!row.is_array())
            throw std::invalid_argument("sequence file: expected arrays of coefficients");
        std::vector<Int> coeffs;
        for (const auto& v : row)
            coeffs.push_back(parse_int_value(v, "sequence file"));
        out.push_back(qpolynomial(std::move(coeffs)));
    }
    return out;
}

// JSON: array of rows, row n holding n+1 integers (decimal strings preserve
// precision)
inline triangular_array load_array(const std::string& path)
{
    const auto doc = load_json_file(path);
    if (!doc.is_array())
        throw std::invalid_argument("array file: expected a JSON array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : doc) {
        if (!row.is_array())
            throw std::invalid_argument("array file: expected arrays of entries");
        std::vector<Int> r;
        for (const auto& v : row)
            r.push_back(parse_int_value(v, "array file"));
        rows.push_back(std::move(r));
    }
    return triangular_array::from_rows(std::move(rows));
}

// JSON: array of sequences, entries integer or "p/q" strings
inline std::vector<std::pair<std::string, std::vector<Rat>>>
load_corpus(const std::string& path)
{
    const auto doc = load_json_file(path);
    if (!doc.is_array())
        throw std::invalid_argument("corpus file: expected a JSON array");
    std::vector<std::pair<std::string, std::vector<Rat>>> out;
    long idx = 0;
    for (const auto& row : doc) {
        if (!row.is_array())
            throw std::invalid_argument("corpus file: expected arrays of values");
        std::vector<Rat> seq;
        for (const auto& v : row)
            seq.push_back(parse_rat_value(v, "corpus file"));
        out.emplace_back("seq" + std::to_string(idx++), std::move(seq));
    }
    return out;
}

inline std::vector<check_result> suite_identity(const run_config& cfg)
{
    std::vector<task_fn> tasks;
    for (long r = 1; r <= cfg.r_max; ++r)
        tasks.push_back([r] {
            return std::vector<check_result>{from_lemma_report(verify_main_identity(r))};
        });
    return run_tasks(tasks, cfg.workers);
}

inline std::vector<check_result> suite_lemmas(const run_config& cfg)
{
    struct group {
        const char* name;
        std::function<std::vector<lemma_report>(long)> run;
    };
    static const std::vector<group> groups = {
        {"3.2", [](long t) { auto a = check_lemma_3_2(t); return std::vector<lemma_report>(a.begin(), a.end()); }},
        {"3.3", [](long t) { return check_lemma_3_3(t); }},
        {"3.4", [](long t) { return std::vector<lemma_report>{check_lemma_3_4(t)}; }},
        {"3.5", [](long t) { return check_lemma_3_5(t); }},
        {"3.6", [](long t) { return check_lemma_3_6(t); }},
        {"3.7", [](long t) { return check_lemma_3_7(t); }},
        {"3.8", [](long t) { auto a = check_lemma_3_8(t); return std::vector<lemma_report>(a.begin(), a.end()); }},
        {"3.9", [](long t) { auto a = check_lemma_3_9(t); return std::vector<lemma_report>(a.begin(), a.end()); }},
        {"3.10", [](long t) { auto a = check_lemma_3_10(t); return std::vector<lemma_report>(a.begin(), a.end()); }},
    };
    std::vector<task_fn> tasks;
    for (const auto& g : groups) {
        if (!cfg.lemma_filter.empty() && cfg.lemma_filter != g.name)
            continue;
        for (long t = 0; t <= cfg.t_max; ++t) {
            auto runner = g.run;
            tasks.push_back([runner, t] {
                std::vector<check_result> out;
                for (const auto& rep : runner(t))
                    out.push_back(from_lemma_report(rep));
                return out;
            });
        }
    }
    return run_tasks(tasks, cfg.workers);
}

inline check_result qlc_check_of(const std::string& name, const std::string& param,
                                 const qpolynomial& defect)
{
    check_result c{name, param, true, to_string(defect), "", "", ""};
    for (long r = 0; r <= defect.degree(); ++r)
        if (defect.coeff(r) < 0) {
            c.passed = false;
            c.discrepancy = "negative coefficient " + str(defect.coeff(r)) + " at q^" +
                            std::to_string(r);
            break;
        }
    return c;
}

inline std::vector<check_result> suite_qlc(const run_config& cfg)
{
    std::vector<task_fn> tasks;
    for (long n = 1; n <= cfg.qlc_n_max; ++n)
        tasks.push_back([n] {
            return std::vector<check_result>{
                qlc_check_of("qlc-W", "n=" + std::to_string(n), qlc_defect(w_polynomial, n))};
        });
    const long n_max = cfg.qlc_n_max;
    tasks.push_back([n_max] {
        std::vector<Rat> b, d;
        for (long n = 0; n <= n_max; ++n) {
            auto [bn, dn] = central_values(n);
            b.emplace_back(bn);
            d.emplace_back(dn);
        }
        auto mk = [n_max](const char* name, const std::vector<Rat>& x) {
            const auto res = is_log_convex(x, n_max);
            check_result c{"log-convex", std::string("sequence=") + name, res.ok, "", "", "", ""};
            if (!res.ok)
                c.discrepancy = "violation at k=" + std::to_string(res.first_violation);
            return c;
        };
        return std::vector<check_result>{mk("central-binomial", b), mk("central-delannoy", d)};
    });
    if (!cfg.sequences_path.empty()) {
        // the file is one polynomial sequence: entry n = coefficients of f_n
        const auto seq = load_sequences(cfg.sequences_path);
        for (long n = 1; n + 1 < static_cast<long>(seq.size()); ++n)
            tasks.push_back([n, seq] {
                auto at = [&seq](long i) { return seq[static_cast<std::size_t>(i)]; };
                return std::vector<check_result>{
                    qlc_check_of("qlc-user", "n=" + std::to_string(n), qlc_defect(at, n))};
            });
    }
    return run_tasks(tasks, cfg.workers);
}

inline std::vector<check_result> suite_bridge(const run_config& cfg)
{
    std::vector<task_fn> tasks;
    for (long n = 2; n <= cfg.bridge_n_max; ++n)
        tasks.push_back([n] {
            std::vector<check_result> out;
            const qpolynomial defect = qlc_defect(w_polynomial, n);
            {
                check_result c{"bridge", "n=" + std::to_string(n) + " r=0",
                               defect.coeff(0) == 0, str(defect.coeff(0)), "0", "", ""};
                if (!c.passed)
                    c.discrepancy = "constant defect coefficient is nonzero";
                out.push_back(std::move(c));
            }
            for (long r = 1; r <= 2 * n; ++r) {
                const Int lhs = defect.coeff(r);
                const Int rhs = 2 * ps_expansion(lhs_L(r), n - 1);
                check_result c{"bridge", "n=" + std::to_string(n) + " r=" + std::to_string(r),
                               lhs == rhs, str(lhs), str(rhs), "", ""};
                if (!c.passed)
                    c.discrepancy = "defect coefficient != 2 ps(L)";
                out.push_back(std::move(c));
            }
            return out;
        });
    for (long r = 1; r <= cfg.shuffle_r_max; ++r)
        tasks.push_back([r] {
            std::vector<check_result> out;
            const auto res = shuffle_relations_check(r);
            for (std::size_t i = 0; i < res.size(); ++i)
                out.push_back({"shuffle",
                               "r=" + std::to_string(r) + " relation=" + std::to_string(i + 1),
                               res[i], "", "",
                               res[i] ? "" : "expansions differ", ""});
            return out;
        });
    return run_tasks(tasks, cfg.workers);
}

inline std::vector<check_result> suite_transform(const run_config& cfg)
{
    std::vector<task_fn> tasks;
    const bool custom = !cfg.array_path.empty();
    const triangular_array array =
        custom ? load_array(cfg.array_path) : triangular_array::binomial_squared();
    const auto corpus = cfg.corpus_path.empty() ? builtin_corpus(cfg.n_preserve)
                                                : load_corpus(cfg.corpus_path);
    if (custom) {
        const long need = std::max(cfg.n_sign + 1, cfg.n_preserve) + 1;
        if (array.rows_provided() < need)
            throw std::invalid_argument("array file must provide at least " +
                                        std::to_string(need) + " rows for these sweeps");
    }
    for (const auto& [name, seq] : corpus)
        if (static_cast<long>(seq.size()) < cfg.n_preserve + 1)
            throw std::invalid_argument(name + " is shorter than --n-preserve + 1 entries");

    if (!custom) {
        for (long n = 1; n <= cfg.n_factor; ++n)
            tasks.push_back([n] {
                check_result c{"alpha-factorization", "n=" + std::to_string(n), true, "", "", "", ""};
                for (long r = 0; r <= 2 * n && c.passed; ++r)
                    for (long k = std::max(0l, r - n); k <= r / 2 && c.passed; ++k)
                        if (!alpha_factorization_check(n, r, k)) {
                            c.passed = false;
                            c.discrepancy =
                                "fails at r=" + std::to_string(r) + " k=" + std::to_string(k);
                        }
                return std::vector<check_result>{c};
            });
        for (long n = 1; n <= cfg.n_factor; ++n)
            tasks.push_back([n] {
                check_result c{"f-derivative", "n=" + std::to_string(n), true, "", "", "", ""};
                for (long r = 0; r <= 2 * n; ++r) {
                    try {
                        make_fg(n, r); // construction asserts f' = 2(2x-r) g
                    } catch (const std::exception& ex) {
                        c.passed = false;
                        c.discrepancy = ex.what();
                        break;
                    }
                }
                return std::vector<check_result>{c};
            });
        for (long n = 1; n <= cfg.n_sign; ++n)
            tasks.push_back([n] {
                check_result c{"f-closed-form", "n=" + std::to_string(n), true, "", "", "", ""};
                for (long r = 0; r <= 2 * n && c.passed; ++r) {
                    const fg_polys fg = make_fg(n, r);
                    const Rat v = fg.f.eval(Rat(r) / 2);
                    if (v != f_half_r_closed_form(n, r) || v > 0) {
                        c.passed = false;
                        c.discrepancy = "r=" + std::to_string(r) + " f(r/2)=" + str(v);
                    }
                }
                return std::vector<check_result>{c};
            });
    }
    for (long n = 1; n <= cfg.n_sign; ++n)
        tasks.push_back([n, array] {
            check_result c{"sign-change", "n=" + std::to_string(n), true, "", "", "", ""};
            for (long r = 0; r <= 2 * n && c.passed; ++r)
                if (!sign_change_index(array, n, r)) {
                    c.passed = false;
                    c.discrepancy = "no single sign change at r=" + std::to_string(r);
                }
            return std::vector<check_result>{c};
        });
    {
        const long n_preserve = cfg.n_preserve;
        tasks.push_back([array, corpus, n_preserve] {
            std::vector<check_result> out;
            for (const auto& rep : preservation_suite(array, corpus, n_preserve)) {
                check_result c{"preservation", "sequence=" + rep.sequence, rep.passed(), "", "", "", ""};
                if (!rep.input_log_convex)
                    c.discrepancy = "input sequence not log-convex, index " +
                                    std::to_string(rep.violation_index);
                else if (!rep.output_log_convex)
                    c.discrepancy = "transformed sequence violates log-convexity at k=" +
                                    std::to_string(rep.violation_index);
                out.push_back(std::move(c));
            }
            return out;
        });
    }
    return run_tasks(tasks, cfg.workers);
}

inline std::vector<check_result> suite_counterexample(const run_config& cfg)
{
    const auto witness = power_m_counterexample(cfg.power_m, cfg.power_n_max);
    check_result c{"power-counterexample",
                   "m=" + std::to_string(cfg.power_m) + " n-max=" + std::to_string(cfg.power_n_max),
                   witness.has_value(), "", "", "", ""};
    if (witness) {
        c.note = "witness n=" + std::to_string(witness->n) + " r=" + std::to_string(witness->r) +
                 " coefficient=" + str(witness->coefficient);
    } else {
        c.discrepancy = "no negative defect coefficient found in range";
    }
    return {c};
}

inline eproduct parse_eproduct_expr(const std::string& expr)
{
    std::vector<long> idx;
    std::size_t pos = 0;
    if (expr == "1")
        return eproduct{};
    while (pos < expr.size()) {
        std::size_t star = expr.find('*', pos);
        std::string tok = expr.substr(pos, star == std::string::npos ? star : star - pos);
        // trim
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
            tok.erase(tok.begin());
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.pop_back();
        if (tok.size() < 2 || tok[0] != 'e')
            throw std::invalid_argument("eproduct: expected factors like e2*e3");
        idx.push_back(std::stol(tok.substr(1)));
        if (star == std::string::npos)
            break;
        pos = star + 1;
    }
    return eproduct(idx);
}

} // namespace runner_detail

inline run_result run(const run_config& cfg)
{
    using namespace runner_detail;
    using command = run_config::command;

    auto command_name = [&]() -> std::string {
        switch (cfg.cmd) {
        case command::verify_identity: return "verify-identity";
        case command::verify_lemmas: return "verify-lemmas";
        case command::verify_qlc: return "verify-qlc";
        case command::verify_bridge: return "verify-bridge";
        case command::verify_transform: return "verify-transform";
        case command::counterexample: return "counterexample";
        case command::expand: return "expand";
        }
        return "?";
    };

    auto invalid = [&](const std::string& message) {
        run_result res;
        res.exit_code = 2;
        if (cfg.output == run_config::format::json) {
            nlohmann::ordered_json doc;
            doc["schema"] = 1;
            doc["command"] = command_name();
            doc["error"] = message;
            res.report = doc.dump(2) + "\n";
        } else {
            res.report = "error: " + message + "\n";
        }
        return res;
    };

    if (cfg.workers < 1)
        return invalid("workers must be >= 1");

    std::vector<check_result> checks;
    try {
        switch (cfg.cmd) {
        case command::verify_identity:
            if (cfg.r_max < 1)
                return invalid("--r-max must be >= 1");
            checks = suite_identity(cfg);
            break;
        case command::verify_lemmas: {
            if (cfg.t_max < 0)
                return invalid("--t-max must be >= 0");
            static const char* known[] = {"3.2", "3.3", "3.4", "3.5", "3.6",
                                          "3.7", "3.8", "3.9", "3.10"};
            if (!cfg.lemma_filter.empty()) {
                bool ok = false;
                for (const char* k : known)
                    ok = ok || cfg.lemma_filter == k;
                if (!ok)
                    return invalid("--lemma must be one of 3.2 .. 3.10");
            }
            checks = suite_lemmas(cfg);
            break;
        }
        case command::verify_qlc:
            if (cfg.qlc_n_max < 1)
                return invalid("--n-max must be >= 1");
            checks = suite_qlc(cfg);
            break;
        case command::verify_bridge:
            if (cfg.bridge_n_max < 2)
                return invalid("--n-max must be >= 2");
            if (cfg.shuffle_r_max < 1)
                return invalid("--r-shuffle-max must be >= 1");
            checks = suite_bridge(cfg);
            break;
        case command::verify_transform:
            if (cfg.n_factor < 1 || cfg.n_sign < 1 || cfg.n_preserve < 2)
                return invalid("range parameters must be positive");
            checks = suite_transform(cfg);
            break;
        case command::counterexample:
            if (cfg.power_m < 3)
                return invalid("--m must be >= 3");
            if (cfg.power_n_max < 1)
                return invalid("--n-max must be >= 1");
            checks = suite_counterexample(cfg);
            break;
        case command::expand: {
            const bool has_e = !cfg.eproduct_expr.empty();
            const bool has_f = !cfg.family_expr.empty();
            if (has_e == has_f)
                return invalid("expand needs exactly one of --eproduct or --family");
            std::string input;
            schur_expansion result;
            if (has_e) {
                const eproduct p = parse_eproduct_expr(cfg.eproduct_expr);
                result = expand_eproduct(p);
                input = to_string(p);
            } else {
                if (cfg.family_t < 0)
                    return invalid("--t must be >= 0");
                result = family_sum(parse_family_id(cfg.family_expr), cfg.family_t);
                input = cfg.family_expr + "(t=" + std::to_string(cfg.family_t) + ")";
                if (!cfg.minus_family.empty()) {
                    result = result - family_sum(parse_family_id(cfg.minus_family), cfg.family_t);
                    input += " - " + cfg.minus_family + "(t=" + std::to_string(cfg.family_t) + ")";
                }
            }
            run_result res;
            if (cfg.output == run_config::format::json) {
                nlohmann::ordered_json doc;
                doc["schema"] = 1;
                doc["command"] = "expand";
                doc["input"] = input;
                doc["expansion"] = to_string(result);
                res.report = doc.dump(2) + "\n";
            } else {
                res.report = to_string(result) + "\n";
            }
            if (!cfg.out_path.empty()) {
                std::ofstream out(cfg.out_path, std::ios::binary);
                if (!out)
                    return invalid("cannot write " + cfg.out_path);
                out << res.report;
            }
            return res;
        }
        }
    } catch (const std::invalid_argument& ex) {
        return invalid(ex.what());
    }

    run_result res;
    res.exit_code = all_passed(checks) ? 0 : 1;
    res.report = cfg.output == run_config::format::json ? render_json(command_name(), checks)
                                                        : render_text(command_name(), checks);
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out)
            return invalid("cannot write " + cfg.out_path);
        out << res.report;
    }
    return res;
}

} // namespace schurlab
