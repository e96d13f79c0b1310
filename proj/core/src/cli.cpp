#include "secant/cli.hpp"

#include <array>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "secant/chow.hpp"
#include "secant/cylinder.hpp"
#include "secant/expr.hpp"
#include "secant/kstab.hpp"
#include "secant/ledger.hpp"
#include "secant/report.hpp"
#include "secant/scalar_io.hpp"

namespace secant::cli {

namespace {

struct CsvRow {
    std::string d;
    std::string name;
    std::string num;
    std::string den;
};

struct Build {
    report::Node node;
    std::vector<CsvRow> rows;
    bool ok = true;
};

template <class K>
void put_value(report::Node& n, std::vector<CsvRow>& rows, const std::string& dlabel,
               const std::string& name, const K& v) {
    n.put(name, to_display(v));
    auto [num, den] = display_pair(v);
    rows.push_back({dlabel, name, num, den});
}

void put_flag(report::Node& n, std::vector<CsvRow>& rows, const std::string& dlabel,
              const std::string& name, bool v) {
    n.put(name, v);
    rows.push_back({dlabel, name, v ? "1" : "0", "1"});
}

/// Copies a check's certificate into the node and records pass rows.
void put_check(report::Node& n, std::vector<CsvRow>& rows, const std::string& dlabel,
               const Check& c) {
    for (const auto& leaf : c.details.leaves()) {
        n.put(leaf.path, leaf.value);
        if (leaf.value == "true" || leaf.value == "false")
            rows.push_back({dlabel, leaf.path, leaf.value == "true" ? "1" : "0", "1"});
    }
}

template <class K>
void build_invariants(const std::string& dlabel, const K& d, report::Node& n,
                      std::vector<CsvRow>& rows) {
    chow::ChowRing<K> ring(d);
    const auto coeffs = ring.solve_anticanonical_coeffs();
    const auto cfg = ledger::builtin_config("enp-secant-resolution");
    const auto led = ledger::replay<K>(cfg, [&](const RatFuncD& c) {
        if constexpr (std::is_same_v<K, RatFuncD>) return c;
        else return c.eval(d);
    });
    const auto lct = led.lct(cfg.boundary);
    const K volume = ring.anticanonical_volume();

    put_value(n, rows, dlabel, "deg_Sigma", ring.degree_sigma());
    put_value(n, rows, dlabel, "antiK_cubed", volume);
    put_value(n, rows, dlabel, "coeff_a", coeffs.a);
    put_value(n, rows, dlabel, "coeff_b", coeffs.b);
    put_value(n, rows, dlabel, "coeff_c", ring.solve_pullback_coeff());
    put_value(n, rows, dlabel, "lct_T", lct.value);
    n.put("lct_argmin", lct.argmin);
    put_value(n, rows, dlabel, "alpha_G", lct.value);
    if constexpr (std::is_same_v<K, RatFuncD>)
        n.put("alpha_G_limit", lct.value.limit_at_infinity().to_string() + " as d -> infinity");
    put_value(n, rows, dlabel, "alpha_upper_bound", Rat(1, 2));
    put_value(n, rows, dlabel, "S_T",
              kstab::s_invariant(kstab::cubic_volume_profile(volume), volume));
    put_value(n, rows, dlabel, "A_T", led.log_discrepancy("T"));
    put_value(n, rows, dlabel, "A_Z", led.log_discrepancy("Z"));
    put_value(n, rows, dlabel, "A_E1", led.log_discrepancy("E1"));
    put_value(n, rows, dlabel, "A_E2", led.log_discrepancy("E2"));
}

template <class K>
void build_ledger_rows(const ledger::BlowupLedger<K>& led, const std::string& dlabel,
                       report::Node& n, std::vector<CsvRow>& rows) {
    for (const auto& tracked : led.tracked_names()) {
        auto& rn = n.child(tracked == ledger::kKRow ? "K_row" : "transform_" + tracked);
        for (const auto& divisor : led.divisor_order()) {
            const K c = led.coefficient(tracked, divisor);
            if (c.is_zero() && led.row(tracked).find(divisor) == led.row(tracked).end()) continue;
            rn.put(divisor, to_display(c));
            auto [num, den] = display_pair(c);
            rows.push_back({dlabel, tracked + "." + divisor, num, den});
        }
    }
    auto& an = n.child("log_discrepancy");
    for (const auto& divisor : led.divisor_order())
        put_value(an, rows, dlabel, "A(" + divisor + ")", led.log_discrepancy(divisor));
}

template <class K>
void build_lct(const ledger::BlowupConfig& cfg, const std::string& dlabel, const K& d,
               report::Node& n, std::vector<CsvRow>& rows) {
    const auto led = ledger::replay<K>(cfg, [&](const RatFuncD& c) {
        if constexpr (std::is_same_v<K, RatFuncD>) return c;
        else return c.eval(d);
    });
    const auto lct = led.lct(cfg.boundary);
    n.put("config", cfg.name);
    n.put("boundary", cfg.boundary);
    put_value(n, rows, dlabel, "lct", lct.value);
    n.put("argmin", lct.argmin);
    auto& tn = n.child("ratios");
    for (const auto& e : lct.table) {
        auto& en = tn.child(e.divisor);
        put_value(en, rows, dlabel, "A(" + e.divisor + ")", e.log_discrepancy);
        put_value(en, rows, dlabel, "ord(" + e.divisor + ")", e.order);
        put_value(en, rows, dlabel, "ratio(" + e.divisor + ")", e.ratio);
    }
}

template <class K>
bool build_zhuang(const std::string& dlabel, const K& d, report::Node& n,
                  std::vector<CsvRow>& rows) {
    auto verdict = [&] {
        if constexpr (std::is_same_v<K, RatFuncD>) return kstab::zhuang_check_symbolic();
        else return kstab::zhuang_check_at(d);
    }();
    for (const auto& leaf : verdict.details.leaves()) n.put(leaf.path, leaf.value);
    put_value(n, rows, dlabel, "margin_T", verdict.margin_T);
    put_value(n, rows, dlabel, "bound_factor_C", verdict.bound_factor_C);
    put_value(n, rows, dlabel, "margin_factor_C", verdict.margin_factor_C);
    put_value(n, rows, dlabel, "t_used", verdict.t_used);
    put_flag(n, rows, dlabel, "polystable", verdict.polystable);
    return verdict.polystable;
}

template <class K>
bool build_cylinder(const std::string& dlabel, const K& d, report::Node& n,
                    std::vector<CsvRow>& rows) {
    const Check c = cylinder::cylinder_full_verify(d);
    put_check(n, rows, dlabel, c);
    put_flag(n, rows, dlabel, "pass", c.pass);
    return c.pass;
}

template <class K>
void build_higher_secant(unsigned k, const std::string& dlabel, const K& d, report::Node& n,
                         std::vector<CsvRow>& rows) {
    auto inv = [&] {
        if constexpr (std::is_same_v<K, RatFuncD>) return chow::higher_secant_invariants(k);
        else return chow::higher_secant_invariants(k, d);
    }();
    n.put("k", std::to_string(k));
    put_value(n, rows, dlabel, "anticanonical_coeff", inv.anticanonical_coeff);
    put_value(n, rows, dlabel, "degree", inv.degree);
    put_value(n, rows, dlabel, "anticanonical_volume", inv.anticanonical_volume);
    put_value(n, rows, dlabel, "discrepancy_coeff", inv.discrepancy_coeff);
}

template <class K>
void build_chow_eval(const std::string& expr, const std::string& dlabel, const K& d,
                     report::Node& n, std::vector<CsvRow>& rows) {
    chow::ChowRing<K> ring(d);
    using Class = chow::ChowClass<K>;
    const Class value = parse_expression<Class>(
        expr,
        [&](const std::string& sym) -> Class {
            if (sym == "d") return ring.scalar(d);
            return ring.named(sym);
        },
        [&](const Rat& r) { return ring.scalar(K(r)); });
    n.put("expr", expr);
    n.put("class", value.to_string());
    const std::array<std::pair<const char*, const K*>, 6> comps = {{
        {"coeff[1]", &value.c0},
        {"coeff[h]", &value.ch},
        {"coeff[xi]", &value.cxi},
        {"coeff[h^2]", &value.ch2},
        {"coeff[h*xi]", &value.chxi},
        {"coeff[h^2*xi]", &value.cpt},
    }};
    for (const auto& [name, coeff] : comps)
        if (!coeff->is_zero()) put_value(n, rows, dlabel, name, *coeff);
    put_value(n, rows, dlabel, "point_class_coefficient", value.cpt);
}

const char* command_name(Command c) {
    switch (c) {
    case Command::Invariants: return "invariants";
    case Command::Lct: return "lct";
    case Command::ZhuangCheck: return "zhuang-check";
    case Command::CylinderVerify: return "cylinder-verify";
    case Command::ChowEval: return "chow-eval";
    case Command::HigherSecant: return "higher-secant";
    case Command::LedgerReplay: return "ledger-replay";
    }
    return "?";
}

} // namespace

void RunSpec::set_d(const std::string& text) {
    if (text == "symbolic") {
        d_mode = DMode::Symbolic;
        return;
    }
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            d_mode = DMode::Single;
            d_single = std::stoll(text);
        } else {
            d_mode = DMode::Range;
            d_lo = std::stoll(text.substr(0, dots));
            d_hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw InvalidArgument("--d expects an integer, LO..HI, or 'symbolic'");
    }
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        const long long min_d =
            spec.command == Command::HigherSecant ? 2LL * spec.k + 1 : 4;
        if (spec.d_mode == DMode::Single && spec.d_single < min_d)
            throw DomainError("this computation requires d >= " + std::to_string(min_d));
        if (spec.d_mode == DMode::Range) {
            if (spec.d_lo > spec.d_hi) throw InvalidArgument("--d range needs LO <= HI");
            if (spec.d_lo < min_d)
                throw DomainError("this computation requires d >= " + std::to_string(min_d));
        }
        if (spec.command == Command::ChowEval && !spec.expr)
            throw InvalidArgument("chow-eval requires --expr");

        ledger::BlowupConfig cfg = spec.config_path ? ledger::load_config(*spec.config_path)
                                                    : ledger::builtin_config("enp-secant-resolution");

        report::Node master;
        master.put("command", command_name(spec.command));
        std::vector<CsvRow> rows;
        bool all_ok = true;

        auto run_one = [&](const std::string& node_label, const std::string& label,
                           const auto& dval) {
            auto& n = master.child(node_label);
            switch (spec.command) {
            case Command::Invariants:
                build_invariants(label, dval, n, rows);
                break;
            case Command::Lct:
                build_lct(cfg, label, dval, n, rows);
                break;
            case Command::ZhuangCheck:
                all_ok = build_zhuang(label, dval, n, rows) && all_ok;
                break;
            case Command::CylinderVerify:
                all_ok = build_cylinder(label, dval, n, rows) && all_ok;
                break;
            case Command::HigherSecant:
                build_higher_secant(spec.k, label, dval, n, rows);
                break;
            case Command::ChowEval:
                build_chow_eval(*spec.expr, label, dval, n, rows);
                break;
            case Command::LedgerReplay: {
                const auto led = ledger::replay<std::decay_t<decltype(dval)>>(
                    cfg, [&](const RatFuncD& c) {
                        if constexpr (std::is_same_v<std::decay_t<decltype(dval)>, RatFuncD>)
                            return c;
                        else
                            return c.eval(dval);
                    });
                n.put("config", cfg.name);
                build_ledger_rows(led, label, n, rows);
                break;
            }
            }
        };

        if (spec.d_mode == DMode::Symbolic) {
            run_one("symbolic", "symbolic", RatFuncD::variable());
        } else if (spec.d_mode == DMode::Single) {
            run_one("d=" + std::to_string(spec.d_single), std::to_string(spec.d_single),
                    Rat(spec.d_single));
        } else {
            for (long long v = spec.d_lo; v <= spec.d_hi; ++v)
                run_one("d=" + std::to_string(v), std::to_string(v), Rat(v));
        }

        switch (spec.output) {
        case Output::Table:
            out << master.to_text();
            break;
        case Output::Json:
            out << master.to_json_string() << "\n";
            break;
        case Output::Csv:
            out << "d,name,numerator,denominator\n";
            for (const auto& r : rows)
                out << r.d << "," << r.name << "," << r.num << "," << r.den << "\n";
            break;
        }
        return all_ok ? 0 : 1;
    } catch (const IndefiniteSign& e) {
        err << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DivisionByZero& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // internal consistency checks double as verification
        err << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants, resolutions, and cylinder certificates for secant "
                 "varieties of rational normal curves"};
    app.require_subcommand(1);

    RunSpec spec;
    std::string d_text = "symbolic";
    std::string output_text = "table";
    std::string config_text;
    std::string expr_text;

    const std::vector<std::pair<Command, std::pair<const char*, const char*>>> cmds = {
        {Command::Invariants,
         {"invariants", "degree, anticanonical volume, lct, alpha, S and A values"}},
        {Command::Lct, {"lct", "log canonical threshold from a blow-up ledger"}},
        {Command::ZhuangCheck, {"zhuang-check", "equivariant K-polystability criterion"}},
        {Command::CylinderVerify, {"cylinder-verify", "anticanonical polar cylinder certificates"}},
        {Command::ChowEval, {"chow-eval", "evaluate a divisor-class expression in the Chow ring"}},
        {Command::HigherSecant, {"higher-secant", "closed forms for the k-th secant variety"}},
        {Command::LedgerReplay, {"ledger-replay", "replay a blow-up configuration"}},
    };
    for (const auto& [cmd, names] : cmds) {
        auto* sub = app.add_subcommand(names.first, names.second);
        sub->add_option("--d", d_text, "integer, LO..HI, or 'symbolic'")
            ->capture_default_str();
        sub->add_option("--output", output_text, "table, json, or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        if (cmd == Command::Lct || cmd == Command::LedgerReplay)
            sub->add_option("--config", config_text, "blow-up chain config file (JSON)");
        if (cmd == Command::ChowEval)
            sub->add_option("--expr", expr_text, "divisor-class expression, e.g. \"H*H*H\"");
        if (cmd == Command::HigherSecant)
            sub->add_option("--k", spec.k, "secant index k >= 1");
        sub->callback([&spec, cmd] { spec.command = cmd; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        spec.set_d(d_text);
        spec.output = output_text == "json" ? Output::Json
                                            : (output_text == "csv" ? Output::Csv : Output::Table);
        const CLI::App* sub = app.get_subcommands().front();
        if ((spec.command == Command::Lct || spec.command == Command::LedgerReplay) &&
            sub->count("--config"))
            spec.config_path = config_text;
        if (spec.command == Command::ChowEval && sub->count("--expr")) spec.expr = expr_text;
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    return run(spec, out, err);
}

} // namespace secant::cli
