// dacs: build deformed-algebra representations and coherent states, run the
// verification suite, and export tables.
//
// Exit status: 0 = all checks pass, 1 = numerical check failure,
// 2 = configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dacs/dacs.hpp"

namespace {

using dacs::complexd;
using nlohmann::json;

struct run_config {
    std::string algebra;
    double a = 0.0;
    double c_param = 1.0;
    double h_param = 0.0;
    double q = 2.0;
    double h0 = 0.0;
    bool have_h0 = false;
    int dim = 64;
    double tail_ceiling = dacs::default_tail_ceiling;
    std::string out;
    std::string format = "csv";

    // check
    std::vector<std::string> state_params;
    // state / scan
    std::string family = "aocs";
    std::string param;
    bool normalize = false;
    bool mapped_pair = false;
    int b = 1;
    std::optional<double> epsilon{};
    // scan
    std::string axis;
    double from = 0.0, to = 0.0, step = 0.0;
    // probe
    int max_n = 64;
    double tol = 1e-10;
};

dacs::algebra_spec make_spec(const run_config& cfg) {
    dacs::algebra_spec spec;
    if (cfg.algebra == "su11")
        spec = dacs::algebra_spec::su11();
    else if (cfg.algebra == "quadratic")
        spec = dacs::algebra_spec::quadratic(cfg.a);
    else if (cfg.algebra == "higgs")
        spec = dacs::algebra_spec::higgs(cfg.c_param, cfg.h_param);
    else if (cfg.algebra == "qdeformed")
        spec = dacs::algebra_spec::q_deformed(cfg.q);
    else
        throw dacs::config_error("unknown algebra '" + cfg.algebra +
                                 "' (expected su11|quadratic|higgs|qdeformed)");
    spec.validate();
    return spec;
}

std::string spec_meta(const run_config& cfg) {
    std::string m = "algebra=" + cfg.algebra;
    if (cfg.algebra == "quadratic") m += " a=" + dacs::format_double(cfg.a);
    if (cfg.algebra == "higgs")
        m += " c=" + dacs::format_double(cfg.c_param) + " h=" + dacs::format_double(cfg.h_param);
    if (cfg.algebra == "qdeformed") m += " q=" + dacs::format_double(cfg.q);
    m += " h0=" + dacs::format_double(cfg.h0) + " dim=" + std::to_string(cfg.dim) +
         " tail_ceiling=" + dacs::format_double(cfg.tail_ceiling) + " format=" + cfg.format;
    return m;
}

void emit(const run_config& cfg, const dacs::table& t) {
    std::ostringstream body;
    if (cfg.format == "csv") {
        dacs::write_csv(body, t);
    } else if (cfg.format == "json") {
        body << dacs::table_to_json(t).dump(2) << "\n";
    } else {
        throw dacs::config_error("unknown format '" + cfg.format + "' (expected csv|json)");
    }
    if (cfg.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream os(cfg.out);
        if (!os) throw dacs::config_error("cannot open output file '" + cfg.out + "'");
        os << body.str();
    }
}

void require_h0(const run_config& cfg) {
    if (!cfg.have_h0) throw dacs::config_error("--h0 is required");
}

int cmd_check(const run_config& cfg) {
    require_h0(cfg);
    const dacs::algebra_spec spec = make_spec(cfg);
    std::vector<complexd> params;
    for (const auto& s : cfg.state_params) params.push_back(dacs::parse_complex(s));

    dacs::suite_options opt;
    opt.tail_ceiling = cfg.tail_ceiling;
    const dacs::verification_report report = dacs::run_suite(spec, cfg.h0, cfg.dim, params, opt);

    std::string meta = "command=check " + spec_meta(cfg) + " state_params=";
    for (std::size_t i = 0; i < params.size(); ++i)
        meta += (i ? ";" : "") + dacs::format_complex(params[i]);
    if (params.empty()) meta += "none";

    dacs::table t = dacs::report_to_table(report, meta);
    if (cfg.format == "json" && cfg.out.empty()) {
        std::cout << dacs::report_to_json(report, meta).dump(2) << "\n";
    } else if (cfg.format == "json") {
        std::ofstream os(cfg.out);
        if (!os) throw dacs::config_error("cannot open output file '" + cfg.out + "'");
        os << dacs::report_to_json(report, meta).dump(2) << "\n";
    } else {
        emit(cfg, t);
    }
    if (!cfg.out.empty())
        std::cout << "check: " << (report.overall_pass() ? "pass" : "FAIL") << " ("
                  << report.entries.size() << " entries, max residual "
                  << dacs::format_double(report.max_residual()) << ")\n";
    return report.overall_pass() ? 0 : 1;
}

dacs::coherent_state build_state(const dacs::representation& rep, const std::string& family,
                                 complexd param, bool normalize, double tail_ceiling,
                                 bool mapped_pair, int b, std::optional<double> epsilon) {
    if (family == "aocs") return dacs::aocs(dacs::conjugate_raising(rep), param, normalize, tail_ceiling);
    if (family == "dual") return dacs::dual_cs(rep, param, normalize, tail_ceiling);
    if (family == "perelomov") {
        dacs::perelomov_options opt;
        opt.use_mapped_pair = mapped_pair;
        opt.b = b;
        opt.epsilon = epsilon;
        return dacs::perelomov_cs(rep, param, opt);
    }
    throw dacs::config_error("unknown family '" + family + "' (expected aocs|dual|perelomov)");
}

int cmd_state(const run_config& cfg) {
    require_h0(cfg);
    if (cfg.param.empty()) throw dacs::config_error("--param is required for 'state'");
    const dacs::algebra_spec spec = make_spec(cfg);
    const complexd param = dacs::parse_complex(cfg.param);

    const dacs::representation rep = dacs::build_lowest_weight_rep(spec, cfg.h0, cfg.dim);
    const dacs::coherent_state st = build_state(rep, cfg.family, param, cfg.normalize,
                                                cfg.tail_ceiling, cfg.mapped_pair, cfg.b,
                                                cfg.epsilon);

    dacs::table t;
    t.meta = "command=state " + spec_meta(cfg) + " rep_dim=" + std::to_string(rep.dim) +
             " family=" + cfg.family + " param=" + dacs::format_complex(param) +
             " normalized=" + (st.normalized ? "true" : "false") +
             " tail_mass=" + dacs::format_double(st.tail_mass);
    t.header = {"n", "weight", "coeff_re", "coeff_im", "prob"};
    const double norm2 = st.coeffs.squaredNorm();
    for (int n = 0; n < rep.dim; ++n) {
        const complexd cn = st.coeffs[n];
        t.rows.push_back({std::to_string(n), dacs::format_double(rep.weight(n)),
                          dacs::format_double(cn.real()), dacs::format_double(cn.imag()),
                          dacs::format_double(std::norm(cn) / norm2)});
    }
    emit(cfg, t);
    return 0;
}

int cmd_scan(const run_config& cfg) {
    require_h0(cfg);
    static const std::set<std::string> axes{"a", "c", "h", "q", "beta", "xi"};
    if (!axes.count(cfg.axis))
        throw dacs::config_error("--axis must be one of a|c|h|q|beta|xi");
    if (cfg.step <= 0.0) throw dacs::config_error("--step must be > 0");
    const bool state_axis = cfg.axis == "beta" || cfg.axis == "xi";
    if (cfg.axis == "a" && cfg.algebra != "quadratic")
        throw dacs::config_error("axis 'a' requires --algebra quadratic");
    if ((cfg.axis == "c" || cfg.axis == "h") && cfg.algebra != "higgs")
        throw dacs::config_error("axis '" + cfg.axis + "' requires --algebra higgs");
    if (cfg.axis == "q" && cfg.algebra != "qdeformed")
        throw dacs::config_error("axis 'q' requires --algebra qdeformed");
    if (!state_axis && cfg.param.empty())
        throw dacs::config_error("--param is required when scanning an algebra parameter");
    if (!state_axis) make_spec(cfg); // validate base algebra parameters up front

    const std::string family = state_axis ? (cfg.axis == "beta" ? "aocs" : "perelomov")
                                          : cfg.family;

    dacs::table t;
    t.meta = "command=scan " + spec_meta(cfg) + " axis=" + cfg.axis +
             " from=" + dacs::format_double(cfg.from) + " to=" + dacs::format_double(cfg.to) +
             " step=" + dacs::format_double(cfg.step) + " family=" + family +
             (state_axis ? "" : " param=" + dacs::format_complex(dacs::parse_complex(cfg.param)));
    t.header = {"value", "h_expectation", "epem_expectation", "norm", "tail_mass",
                "eigen_residual", "error"};

    bool any_failed = false;
    for (int k = 0;; ++k) {
        const double value = cfg.from + k * cfg.step;
        if (value > cfg.to + 0.5 * cfg.step) break;
        std::vector<std::string> row(7, "");
        row[0] = dacs::format_double(value);
        try {
            run_config point = cfg;
            if (cfg.axis == "a") point.a = value;
            if (cfg.axis == "c") point.c_param = value;
            if (cfg.axis == "h") point.h_param = value;
            if (cfg.axis == "q") point.q = value;
            const complexd param = state_axis ? complexd{value, 0.0}
                                              : dacs::parse_complex(cfg.param);

            const dacs::representation rep =
                dacs::build_lowest_weight_rep(make_spec(point), cfg.h0, cfg.dim);
            dacs::coherent_state st =
                build_state(rep, family, param, false, cfg.tail_ceiling, cfg.mapped_pair,
                            cfg.b, cfg.epsilon);
            const double norm = st.coeffs.norm();

            dacs::coherent_state unit = st;
            unit.coeffs /= norm;
            unit.normalized = true;
            const dacs::operator_matrix epem{rep.eplus.mat * rep.eminus.mat,
                                             rep.eplus.trust_rows};
            row[1] = dacs::format_double(dacs::expectation(unit, rep.h).real());
            row[2] = dacs::format_double(dacs::expectation(unit, epem).real());
            row[3] = dacs::format_double(norm);
            row[4] = dacs::format_double(st.tail_mass);
            if (family == "aocs")
                row[5] = dacs::format_double(
                    dacs::eigen_residual(rep.eminus.mat, unit.coeffs, param));
            else if (family == "dual")
                row[5] = dacs::format_double(dacs::eigen_residual(
                    dacs::dual_conjugate(dacs::conjugate_raising(rep)).mat, unit.coeffs, param));
        } catch (const dacs::error& e) {
            std::string msg = e.what();
            for (auto& ch : msg)
                if (ch == ',' || ch == '\n') ch = ';';
            row[6] = msg;
            any_failed = true;
        }
        t.rows.push_back(std::move(row));
    }
    emit(cfg, t);
    return any_failed ? 1 : 0;
}

int cmd_probe(const run_config& cfg) {
    require_h0(cfg);
    const dacs::algebra_spec spec = make_spec(cfg);
    const dacs::rep_probe probe = dacs::probe_dimension(spec, cfg.h0, cfg.max_n, cfg.tol);

    dacs::table t;
    t.meta = "command=probe " + spec_meta(cfg) + " max_n=" + std::to_string(cfg.max_n) +
             " tol=" + dacs::format_double(cfg.tol);
    t.header = {"verdict", "n", "first_nonpositive"};
    const char* verdict = probe.verdict == dacs::probe_verdict::finite ? "finite"
                          : probe.verdict == dacs::probe_verdict::invalid_at ? "invalid_at"
                                                                             : "infinite_up_to";
    t.rows.push_back({verdict, std::to_string(probe.n),
                      probe.first_nonpositive ? std::to_string(*probe.first_nonpositive) : ""});
    emit(cfg, t);
    return probe.verdict == dacs::probe_verdict::invalid_at ? 1 : 0;
}

// Config file: JSON object whose keys mirror the CLI flags; unknown keys are
// rejected.  Flags given on the command line override file values.
void apply_config_file(const std::string& path, run_config& cfg,
                       const std::set<std::string>& overridden) {
    std::ifstream is(path);
    if (!is) throw dacs::config_error("cannot open config file '" + path + "'");
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw dacs::config_error("config file parse error: " + std::string(e.what()));
    }
    if (!j.is_object()) throw dacs::config_error("config file must be a JSON object");

    const auto want_d = [&](const json& v, const char* key) {
        if (!v.is_number()) throw dacs::config_error(std::string("config key '") + key + "' must be a number");
        return v.get<double>();
    };
    const auto want_s = [&](const json& v, const char* key) {
        if (!v.is_string()) throw dacs::config_error(std::string("config key '") + key + "' must be a string");
        return v.get<std::string>();
    };

    for (const auto& [key, value] : j.items()) {
        if (overridden.count(key)) continue;
        if (key == "algebra") cfg.algebra = want_s(value, "algebra");
        else if (key == "a") cfg.a = want_d(value, "a");
        else if (key == "c") cfg.c_param = want_d(value, "c");
        else if (key == "h") cfg.h_param = want_d(value, "h");
        else if (key == "q") cfg.q = want_d(value, "q");
        else if (key == "h0") { cfg.h0 = want_d(value, "h0"); cfg.have_h0 = true; }
        else if (key == "dim") cfg.dim = value.get<int>();
        else if (key == "tail_ceiling") cfg.tail_ceiling = want_d(value, "tail_ceiling");
        else if (key == "out") cfg.out = want_s(value, "out");
        else if (key == "format") cfg.format = want_s(value, "format");
        else if (key == "state_params") {
            if (!value.is_array()) throw dacs::config_error("config key 'state_params' must be an array");
            cfg.state_params.clear();
            for (const auto& e : value) cfg.state_params.push_back(want_s(e, "state_params[]"));
        }
        else if (key == "family") cfg.family = want_s(value, "family");
        else if (key == "param") cfg.param = want_s(value, "param");
        else if (key == "normalize") cfg.normalize = value.get<bool>();
        else if (key == "mapped_pair") cfg.mapped_pair = value.get<bool>();
        else if (key == "b") cfg.b = value.get<int>();
        else if (key == "epsilon") cfg.epsilon = want_d(value, "epsilon");
        else if (key == "axis") cfg.axis = want_s(value, "axis");
        else if (key == "from") cfg.from = want_d(value, "from");
        else if (key == "to") cfg.to = want_d(value, "to");
        else if (key == "step") cfg.step = want_d(value, "step");
        else if (key == "max_n") cfg.max_n = value.get<int>();
        else if (key == "tol") cfg.tol = want_d(value, "tol");
        else throw dacs::config_error("unknown config key '" + key + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    run_config cfg;
    std::string config_path;
    double epsilon_flag = 0.0;
    std::vector<CLI::Option*> epsilon_options;

    CLI::App app{"deformed-algebra coherent states"};
    app.set_help_flag("--help", "print help"); // plain -h is taken by the higgs parameter
    app.require_subcommand(1);

    // flag name -> config file key, for override tracking
    std::vector<std::pair<CLI::Option*, std::string>> tracked;
    const auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        tracked.push_back({sub->add_option("--algebra", cfg.algebra,
                                           "algebra kind: su11|quadratic|higgs|qdeformed"),
                           "algebra"});
        tracked.push_back({sub->add_option("--a", cfg.a, "quadratic deformation parameter"), "a"});
        tracked.push_back({sub->add_option("--c", cfg.c_param, "higgs linear coefficient"), "c"});
        tracked.push_back({sub->add_option("--h", cfg.h_param, "higgs cubic coefficient"), "h"});
        tracked.push_back({sub->add_option("--q", cfg.q, "q-deformation parameter"), "q"});
        CLI::Option* oh0 = sub->add_option("--h0", cfg.h0, "lowest weight");
        tracked.push_back({oh0, "h0"});
        tracked.push_back({sub->add_option("--dim", cfg.dim, "truncation dimension"), "dim"});
        tracked.push_back({sub->add_option("--tail-ceiling", cfg.tail_ceiling,
                                           "truncation tail-mass ceiling"),
                           "tail_ceiling"});
        tracked.push_back({sub->add_option("--out", cfg.out, "output path (default stdout)"), "out"});
        tracked.push_back({sub->add_option("--format", cfg.format, "output format: csv|json"),
                           "format"});
        sub->add_option("--config", config_path, "JSON config file; flags override");
        return oh0;
    };

    CLI::App* check = app.add_subcommand("check", "run the verification suite");
    add_common(check);
    tracked.push_back({check->add_option("--state-param", cfg.state_params,
                                         "coherent-state parameter (repeatable, re+imi form)"),
                       "state_params"});

    CLI::App* state = app.add_subcommand("state", "emit coherent-state coefficient table");
    add_common(state);
    tracked.push_back({state->add_option("--family", cfg.family, "aocs|dual|perelomov"), "family"});
    tracked.push_back({state->add_option("--param", cfg.param, "state parameter (re+imi form)"),
                       "param"});
    tracked.push_back({state->add_flag("--normalize", cfg.normalize, "normalize coefficients"),
                       "normalize"});
    tracked.push_back({state->add_flag("--mapped-pair", cfg.mapped_pair,
                                       "perelomov: use the mapped lowering operator"),
                       "mapped_pair"});
    tracked.push_back({state->add_option("--b", cfg.b, "lie-map sign (+1 su11, -1 su2)"), "b"});
    epsilon_options.push_back(state->add_option("--epsilon", epsilon_flag, "lie-map constant"));
    tracked.push_back({epsilon_options.back(), "epsilon"});

    CLI::App* scan = app.add_subcommand("scan", "sweep a parameter axis");
    add_common(scan);
    tracked.push_back({scan->add_option("--axis", cfg.axis, "a|c|h|q|beta|xi"), "axis"});
    tracked.push_back({scan->add_option("--from", cfg.from, "axis start"), "from"});
    tracked.push_back({scan->add_option("--to", cfg.to, "axis end (inclusive)"), "to"});
    tracked.push_back({scan->add_option("--step", cfg.step, "axis step"), "step"});
    tracked.push_back({scan->add_option("--family", cfg.family, "aocs|dual|perelomov"), "family"});
    tracked.push_back({scan->add_option("--param", cfg.param, "state parameter (re+imi form)"),
                       "param"});
    tracked.push_back({scan->add_flag("--mapped-pair", cfg.mapped_pair,
                                      "perelomov: use the mapped lowering operator"),
                       "mapped_pair"});
    tracked.push_back({scan->add_option("--b", cfg.b, "lie-map sign (+1 su11, -1 su2)"), "b"});
    epsilon_options.push_back(scan->add_option("--epsilon", epsilon_flag, "lie-map constant"));
    tracked.push_back({epsilon_options.back(), "epsilon"});

    CLI::App* probe = app.add_subcommand("probe", "probe the representation dimension");
    add_common(probe);
    tracked.push_back({probe->add_option("--max-n", cfg.max_n, "scan bound"), "max_n"});
    tracked.push_back({probe->add_option("--tol", cfg.tol, "zero/sign tolerance"), "tol"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::set<std::string> overridden;
        for (const auto& [option, key] : tracked)
            if (option->count() > 0) overridden.insert(key);
        for (const auto& [option, key] : tracked)
            if (key == "h0" && option->count() > 0) cfg.have_h0 = true;
        for (CLI::Option* option : epsilon_options)
            if (option->count() > 0) cfg.epsilon = epsilon_flag;
        if (!config_path.empty()) apply_config_file(config_path, cfg, overridden);

        if (app.got_subcommand(check)) return cmd_check(cfg);
        if (app.got_subcommand(state)) return cmd_state(cfg);
        if (app.got_subcommand(scan)) return cmd_scan(cfg);
        return cmd_probe(cfg);
    } catch (const dacs::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const dacs::truncation_error& e) {
        std::cerr << "numerical failure: " << e.what()
                  << " (tail_mass=" << dacs::format_double(e.tail_mass) << ")\n";
        return 1;
    } catch (const dacs::error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
