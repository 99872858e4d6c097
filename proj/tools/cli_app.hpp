#pragma once

// Command-line front end. run_cli is kept separate from main so the tests can drive it.

#include "cutglue/cutglue.hpp"
#include "cutglue/serialize.hpp"

#include <CLI11.hpp>
#include <boost/version.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cutglue::cli {

enum ExitCode : int { ok = 0, certificate_failure = 1, invalid_input = 2, budget_exceeded = 3 };

struct RunConfig {
    std::string command;
    std::string n;
    std::string d;
    std::string w;
    long long a = 0;
    long long b = 0;
    std::string m;
    unsigned rank = 0;
    long long bound = 10;
    std::string format = "json";
    std::string out;
    unsigned workers = 1;
    std::uint64_t node_budget = CountOptions{}.node_budget;
    double time_box = SeparationOptions{}.time_box_seconds;
    bool strict = false;
    bool command_has_ab = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Integer parse_integer(const std::string& s, const char* what) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
        throw UsageError(std::string(what) + ": '" + s + "' is not an integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline std::vector<Integer> parse_vector(const std::string& s) {
    if (s.empty()) throw UsageError("--w is required");
    std::vector<Integer> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_integer(part, "--w"));
    return out;
}

/// "4", "2,3,5" or "2-30"; an empty range is an error.
inline std::vector<Integer> parse_range(const std::string& s, const char* flag) {
    if (s.empty()) throw UsageError(std::string(flag) + " is required");
    std::vector<Integer> out;
    for (const auto& part : split(s, ',')) {
        auto dash = part.find('-', 1);
        if (dash == std::string::npos) {
            out.push_back(parse_integer(part, flag));
            continue;
        }
        Integer lo = parse_integer(part.substr(0, dash), flag), hi = parse_integer(part.substr(dash + 1), flag);
        for (Integer x = lo; x <= hi; ++x) out.push_back(x);
    }
    if (out.empty()) throw UsageError(std::string(flag) + ": empty range '" + s + "'");
    return out;
}

inline unsigned parse_n(const std::string& s) {
    Integer n = parse_integer(s, "--n");
    if (n < 1 || n > 64) throw UsageError("--n must lie in [1, 64]");
    return n.convert_to<unsigned>();
}

inline json versions() {
    return {{"cutglue", version},
            {"boost", BOOST_LIB_VERSION},
            {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                  std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                  std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
}

inline json certificates_json(const std::vector<Certificate>& certs) {
    json a = json::array();
    for (const auto& c : certs) a.push_back(to_json(c));
    return a;
}

inline std::string verdict_summary(const std::vector<Certificate>& certs) {
    std::string s;
    for (const auto& c : certs) {
        if (!s.empty()) s += ';';
        s += std::string(to_string(c.statement)) + "=" + std::string(to_string(c.verdict));
    }
    return s;
}

inline std::string joined(const Vector& w) {
    std::string s;
    for (const auto& e : w) {
        if (!s.empty()) s += ';';
        s += e.str();
    }
    return s;
}

inline void write_text_certificates(std::ostream& os, const std::vector<Certificate>& certs) {
    for (const auto& c : certs) {
        os << "  " << to_string(c.statement) << ": " << to_string(c.verdict);
        if (!c.note.empty()) os << " (" << c.note << ")";
        os << '\n';
    }
}

inline const char* csv_header = "n,d,b,w,norm,ring,level,count_method,verdicts";

struct Row {
    std::string n, d, b, w, norm, ring, level, count_method, verdicts;
    std::string csv() const { return n + "," + d + "," + b + "," + w + "," + norm + "," + ring + "," + level + "," + count_method + "," + verdicts; }
    json to_json() const {
        return {{"n", n}, {"d", d}, {"b", b}, {"w", w}, {"norm", norm}, {"ring", ring},
                {"level", level}, {"count_method", count_method}, {"verdicts", verdicts}};
    }
};

class App {
public:
    App(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

    int dispatch() {
        if (cfg_.format != "json" && cfg_.format != "csv" && cfg_.format != "text")
            throw UsageError("--format must be json, csv or text");
        if (cfg_.command == "construct") return construct();
        if (cfg_.command == "certify") return certify();
        if (cfg_.command == "table") return table();
        if (cfg_.command == "group-order") return group_order();
        if (cfg_.command == "volume-bound") return volume();
        if (cfg_.command == "quadfield") return quadfield();
        throw UsageError("unknown command '" + cfg_.command + "'");
    }

    std::string output() const { return buf_.str(); }

private:
    CountOptions count_options() const { return {cfg_.node_budget, cfg_.workers, !cfg_.strict}; }
    SeparationOptions separation_options() const {
        SeparationOptions s;
        s.time_box_seconds = cfg_.time_box;
        return s;
    }

    static int exit_for(const std::vector<Certificate>& certs, bool inconclusive_fails) {
        for (const auto& c : certs) {
            if (c.verdict == Verdict::failed) return certificate_failure;
            if (inconclusive_fails && c.verdict == Verdict::inconclusive) return certificate_failure;
        }
        return ok;
    }

    Row row_for(const CutConfiguration& c, const std::string& d, const std::string& b, const std::string& ring,
                const std::vector<Certificate>& certs) {
        Row r{std::to_string(c.n), d, b, joined(c.w), c.norm_w.str(), ring, "", "", verdict_summary(certs)};
        if (c.over_rationals()) {
            auto level = congruence_level(c);
            r.level = level.m.str();
            try {
                r.count_method = std::string(to_string(count_orthogonal_mod(c.form, level.m, count_options()).method));
            } catch (const BudgetExceeded&) {
                r.count_method = "budget-exceeded";
            }
        }
        return r;
    }

    void emit_bundle(json input, json configuration, const std::vector<Certificate>& certs, const Row& row) {
        if (cfg_.format == "json") {
            json j = {{"input", std::move(input)},
                      {"configuration", std::move(configuration)},
                      {"certificates", certificates_json(certs)},
                      {"versions", versions()}};
            buf_ << j.dump(2) << '\n';
        } else if (cfg_.format == "csv") {
            buf_ << csv_header << '\n' << row.csv() << '\n';
        } else {
            buf_ << "n = " << row.n << ", w = (" << row.w << "), <w,w> = " << row.norm << '\n';
            if (!row.ring.empty()) buf_ << "adjoint trace ring: " << row.ring << '\n';
            if (!row.level.empty()) buf_ << "congruence level: " << row.level << '\n';
            write_text_certificates(buf_, certs);
        }
    }

    int construct() {
        unsigned n = parse_n(cfg_.n);
        Integer d = parse_integer(cfg_.d, "--d");
        Construction c = construct_gamma_d(n, d);
        json conf = to_json(c.config);
        conf["b"] = c.b.str();
        conf["ring"] = c.bounds.lower.str();
        emit_bundle({{"command", "construct"}, {"n", n}, {"d", d.str()}}, std::move(conf), c.certificates,
                    row_for(c.config, d.str(), c.b.str(), c.bounds.lower.str(), c.certificates));
        return exit_for(c.certificates, true);
    }

    int certify() {
        unsigned n = parse_n(cfg_.n);
        auto w = parse_vector(cfg_.w);
        CutConfiguration c = make_rational_configuration(n, w);
        TraceRingBounds bounds;
        auto certs = certify_configuration(c, &bounds);
        json conf = to_json(c);
        conf["ring_bounds"] = {{"lower", bounds.lower.str()}, {"upper", bounds.upper.str()}, {"pinched", bounds.pinched}};
        std::string ring = bounds.pinched ? bounds.lower.str() : bounds.lower.str() + ".." + bounds.upper.str();
        emit_bundle({{"command", "certify"}, {"n", n}, {"w", cfg_.w}}, std::move(conf), certs, row_for(c, "", "", ring, certs));
        return exit_for(certs, false);
    }

    int table() {
        auto ns = parse_range(cfg_.n, "--n");
        auto ds = parse_range(cfg_.d, "--d");
        std::vector<Integer> squarefree;
        for (const auto& d : ds)
            if (d > 1 && is_squarefree(d)) squarefree.push_back(d);
        if (squarefree.empty()) throw UsageError("--d: no square-free d > 1 in range");
        int code = ok;
        if (cfg_.format == "csv") buf_ << csv_header << '\n';
        for (const auto& nn : ns) {
            if (nn < 4 || nn > 64) throw UsageError("--n: table rows need 4 <= n <= 64");
            unsigned n = nn.convert_to<unsigned>();
            for (const auto& d : squarefree) {
                Row row;
                try {
                    Construction c = construct_gamma_d(n, d);
                    row = row_for(c.config, d.str(), c.b.str(), c.bounds.lower.str(), c.certificates);
                    if (exit_for(c.certificates, true) != ok) code = certificate_failure;
                } catch (const std::exception& e) {
                    row = Row{std::to_string(n), d.str(), "", "", "", "", "", "", std::string("error: ") + e.what()};
                    code = certificate_failure;
                }
                if (cfg_.format == "csv") buf_ << row.csv() << '\n';
                else if (cfg_.format == "json") buf_ << row.to_json().dump() << '\n';
                else buf_ << "n=" << row.n << " d=" << row.d << " b=" << row.b << " w=(" << row.w << ") ring=" << row.ring
                          << " level=" << row.level << " count=" << row.count_method << " [" << row.verdicts << "]\n";
            }
        }
        return code;
    }

    int group_order() {
        if (cfg_.rank < 1 || cfg_.rank > 64) throw UsageError("--rank must lie in [1, 64]");
        Integer m = parse_integer(cfg_.m, "--m");
        if (m < 2) throw UsageError("--m must be at least 2");
        std::vector<Integer> diag(cfg_.rank, Integer(1));
        diag[0] = -1;
        CountResult r = count_orthogonal_mod(diag, m, count_options());
        json input = {{"command", "group-order"}, {"rank", cfg_.rank}, {"m", m.str()}};
        if (cfg_.format == "json") {
            buf_ << json{{"input", input}, {"result", to_json(r)}, {"versions", versions()}}.dump(2) << '\n';
        } else if (cfg_.format == "csv") {
            buf_ << "rank,m,count,method,verified\n"
                 << cfg_.rank << ',' << m << ',' << r.value << ',' << to_string(r.method) << ',' << (r.verified ? 1 : 0) << '\n';
        } else {
            buf_ << "|O(Z/" << m << ")| for rank " << cfg_.rank << " = " << r.value << " (" << to_string(r.method)
                 << (r.verified ? "" : ", unverified") << ")\n";
        }
        return ok;
    }

    int volume() {
        unsigned n = parse_n(cfg_.n);
        CutConfiguration c = make_rational_configuration(n, parse_vector(cfg_.w));
        VolumeBound vb;
        try {
            vb = volume_bound(c, count_options(), separation_options());
        } catch (const SeparationNotVerified& e) {
            err_ << e.what() << '\n';
            return certificate_failure;
        }
        std::vector<Certificate> certs{vb.separation, vb.certificate};
        json input = {{"command", "volume-bound"}, {"n", n}, {"w", cfg_.w}};
        if (cfg_.format == "json") {
            json conf = to_json(c);
            conf["volume_bound"] = to_json(vb, c.form);
            buf_ << json{{"input", input}, {"configuration", conf}, {"certificates", certificates_json(certs)}, {"versions", versions()}}.dump(2)
                 << '\n';
        } else if (cfg_.format == "csv") {
            buf_ << "n,w,level,count,multiplier,count_method,verified\n"
                 << n << ',' << joined(c.w) << ',' << vb.level.m << ',' << vb.count.value << ',' << vb.multiplier << ','
                 << to_string(vb.count.method) << ',' << (vb.count.verified ? 1 : 0) << '\n';
        } else {
            buf_ << "level m = " << vb.level.m << '\n' << vb.certificate.note << '\n';
            write_text_certificates(buf_, certs);
        }
        return exit_for(certs, false);
    }

    int quadfield() {
        unsigned n = parse_n(cfg_.n);
        Integer d = parse_integer(cfg_.d, "--d");
        if (cfg_.command_has_ab) {
            auto q = construct_quadfield(n, d, cfg_.a, cfg_.b);
            auto certs = certify_configuration(q.config);
            certs.push_back(q.integrality);
            Row row{std::to_string(n), d.str(), std::to_string(cfg_.b), joined(q.config.w), q.config.norm_w.str(), "", "", "", verdict_summary(certs)};
            json conf = to_json(q.config);
            conf["xi"] = to_json(q.xi);
            emit_bundle({{"command", "quadfield"}, {"n", n}, {"d", d.str()}, {"a", cfg_.a}, {"b", cfg_.b}}, std::move(conf), certs, row);
            return exit_for(certs, false);
        }
        if (cfg_.bound < 0) throw UsageError("--bound must be non-negative");
        auto found = search_quadfield(n, d, cfg_.bound);
        if (cfg_.format == "json") {
            json hits = json::array();
            for (const auto& [a, b] : found) hits.push_back({{"a", a.str()}, {"b", b.str()}});
            buf_ << json{{"input", {{"command", "quadfield"}, {"n", n}, {"d", d.str()}, {"bound", cfg_.bound}}},
                         {"found", hits},
                         {"versions", versions()}}.dump(2)
                 << '\n';
        } else {
            if (cfg_.format == "csv") buf_ << "a,b\n";
            for (const auto& [a, b] : found) buf_ << a << (cfg_.format == "csv" ? "," : " ") << b << '\n';
        }
        return found.empty() ? certificate_failure : ok;
    }

    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
    std::ostringstream buf_;

public:
    void flush() {
        if (cfg_.out.empty()) {
            out_ << buf_.str();
            return;
        }
        std::ofstream f(cfg_.out, std::ios::binary);
        if (!f) throw UsageError("cannot open --out path '" + cfg_.out + "'");
        f << buf_.str();
    }
};

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact construction and certification of doubly-cut hyperbolic glueings", "cutglue"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(version));

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "Write output to PATH instead of stdout");
    };
    auto counting = [&](CLI::App* sub) {
        sub->add_option("--workers", cfg.workers, "Threads for 2-adic counting")->check(CLI::Range(1u, 256u))->capture_default_str();
        sub->add_option("--node-budget", cfg.node_budget, "Backtracking node budget per count")->capture_default_str();
        sub->add_flag("--strict", cfg.strict, "Fail with exit 3 instead of extrapolating over budget");
    };

    auto* construct = app.add_subcommand("construct", "Build the cut data for Gamma_d and certify it");
    construct->add_option("--n", cfg.n, "Dimension n >= 4")->required();
    construct->add_option("--d", cfg.d, "Square-free d > 1")->required();
    common(construct);
    counting(construct);

    auto* certify = app.add_subcommand("certify", "Certify a user-supplied integral w");
    certify->add_option("--n", cfg.n, "Dimension n >= 4")->required();
    certify->add_option("--w", cfg.w, "Comma-separated integral coordinates of w")->required();
    common(certify);
    counting(certify);

    auto* table = app.add_subcommand("table", "Tabulate constructions over ranges of n and d");
    table->add_option("--n", cfg.n, "n values: 4, 4,5 or 4-8")->required();
    table->add_option("--d", cfg.d, "d values: 2-30; non-square-free entries are skipped")->required();
    common(table);
    counting(table);

    auto* order = app.add_subcommand("group-order", "|O_f(Z/mZ)| for the standard form of a given rank");
    order->add_option("--rank", cfg.rank, "Rank of -x0^2 + x1^2 + ...")->required();
    order->add_option("--m", cfg.m, "Modulus m >= 2")->required();
    common(order);
    counting(order);

    auto* volume = app.add_subcommand("volume-bound", "Congruence level and volume multiplier for w");
    volume->add_option("--n", cfg.n, "Dimension n >= 4")->required();
    volume->add_option("--w", cfg.w, "Comma-separated integral coordinates of w")->required();
    volume->add_option("--time-box", cfg.time_box, "Seconds spent on separation spot checks")->capture_default_str();
    common(volume);
    counting(volume);

    auto* quad = app.add_subcommand("quadfield", "Quadratic-field variant: one (a, b) or a search over a");
    quad->add_option("--n", cfg.n, "Dimension n >= 5")->required();
    quad->add_option("--d", cfg.d, "Square-free d > 1")->required();
    auto* a_opt = quad->add_option("--a", cfg.a, "Coordinate w1 = a");
    auto* b_opt = quad->add_option("--b", cfg.b, "Sum of squares b with 0 <= b < sqrt(d)");
    quad->add_option("--bound", cfg.bound, "Search 0 <= a <= bound when --a is absent")->capture_default_str();
    a_opt->needs(b_opt);
    b_opt->needs(a_opt);
    common(quad);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return invalid_input;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.command_has_ab = a_opt->count() > 0;

    App runner(cfg, out, err);
    try {
        int code = runner.dispatch();
        runner.flush();
        return code;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget_exceeded;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return certificate_failure;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return invalid_input;
    }
}

} // namespace cutglue::cli
