#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "atanderiv/arctan.hpp"
#include "atanderiv/identities.hpp"

namespace atanderiv::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

std::map<std::string, Format> const kFormats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

// Thrown for bad user input that CLI11 cannot catch itself (n = 0, bad rationals).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigRational parse_rational_arg(std::string const& text, std::string const& what) {
    try {
        return BigRational::parse(text);
    } catch (std::invalid_argument const& e) {
        throw UsageError(what + ": " + e.what());
    }
}

std::vector<BigRational> parse_points(std::string const& text) {
    std::vector<BigRational> points;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) points.push_back(parse_rational_arg(item, "--points"));
    if (points.empty()) throw UsageError("--points: empty list");
    return points;
}

json coefficient_rows(Polynomial const& p) {
    json rows = json::array();
    auto const& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        rows.push_back({{"power", i},
                        {"numerator", c[i].numerator().to_string()},
                        {"denominator", c[i].denominator().to_string()}});
    }
    return rows;
}

void write_coefficient_csv(std::ostream& out, Polynomial const& p, std::string const& prefix) {
    auto const& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        out << prefix << i << ',' << c[i].numerator() << ',' << c[i].denominator() << '\n';
    }
}

json mismatch_json(Mismatch const& mm) {
    json j{{"n", mm.n}, {"label", mm.label}, {"lhs", mm.lhs}, {"rhs", mm.rhs}};
    if (mm.m) j["m"] = *mm.m;
    if (mm.point) j["point"] = *mm.point;
    return j;
}

int emit_report(CheckReport const& report, Format format, std::ostream& out, json extra = {}) {
    switch (format) {
        case Format::json: {
            json j{{"check", report.check},
                   {"n_max", report.n_max},
                   {"cases", report.cases},
                   {"passed", report.passed()},
                   {"failures", json::array()}};
            for (auto const& mm : report.failures) j["failures"].push_back(mismatch_json(mm));
            if (extra.is_object()) j.update(extra);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "check,n_max,cases,failures,status\n"
                << report.check << ',' << report.n_max << ',' << report.cases << ','
                << report.failures.size() << ',' << (report.passed() ? "pass" : "fail") << '\n';
            break;
        case Format::text: {
            out << report.check << ": n_max=" << report.n_max << " cases=" << report.cases
                << " failures=" << report.failures.size() << ' '
                << (report.passed() ? "PASS" : "FAIL") << '\n';
            constexpr std::size_t kShown = 20;
            for (std::size_t i = 0; i < std::min(kShown, report.failures.size()); ++i)
                out << "  " << describe(report.failures[i]) << '\n';
            if (report.failures.size() > kShown)
                out << "  ... " << report.failures.size() - kShown << " more\n";
            break;
        }
    }
    return report.passed() ? kPass : kMismatch;
}

CheckReport merge(CheckReport first, CheckReport const& second) {
    first.cases += second.cases;
    first.failures.insert(first.failures.end(), second.failures.begin(), second.failures.end());
    return first;
}

int do_qpoly(unsigned n, Format format, std::ostream& out) {
    Polynomial const q = q_polynomial(n);
    switch (format) {
        case Format::text:
            out << to_string(q) << '\n';
            break;
        case Format::csv:
            out << "power,numerator,denominator\n";
            write_coefficient_csv(out, q, "");
            break;
        case Format::json:
            out << json{{"n", n}, {"text", to_string(q)}, {"coefficients", coefficient_rows(q)}}
                       .dump(2)
                << '\n';
            break;
    }
    return kPass;
}

ArctanRational symbolic_derivative(std::string const& method, unsigned n) {
    if (method == "closed") return arctan_deriv_closed(n);
    if (method == "prop12") return arctan_deriv_prop12(n);
    return arctan_deriv_oracle(n);
}

int do_derive(unsigned n, std::string const& method, std::optional<std::string> const& x_text,
              Format format, std::ostream& out) {
    if (n == 0) throw UsageError("derive: n must be >= 1");
    std::optional<BigRational> x;
    if (x_text) x = parse_rational_arg(*x_text, "--x");
    if (method == "fdb" && !x) throw UsageError("derive: --method=fdb requires --x");

    if (x) {
        BigRational const value =
            method == "fdb" ? arctan_deriv_fdb(n, *x) : ar_eval(symbolic_derivative(method, n), *x);
        switch (format) {
            case Format::text:
                out << value << '\n';
                break;
            case Format::csv:
                out << "n,method,x,value\n" << n << ',' << method << ',' << *x << ',' << value << '\n';
                break;
            case Format::json:
                out << json{{"n", n}, {"method", method}, {"x", x->to_string()},
                            {"value", value.to_string()}}
                           .dump(2)
                    << '\n';
                break;
        }
        return kPass;
    }

    ArctanRational const r = symbolic_derivative(method, n);
    switch (format) {
        case Format::text:
            out << to_string(r) << '\n';
            break;
        case Format::csv:
            out << "exponent,power,numerator,denominator\n";
            write_coefficient_csv(out, r.numerator(), std::to_string(r.exponent()) + ",");
            break;
        case Format::json:
            out << json{{"n", n},
                        {"method", method},
                        {"exponent", r.exponent()},
                        {"numerator", coefficient_rows(r.numerator())},
                        {"text", to_string(r)}}
                       .dump(2)
                << '\n';
            break;
    }
    return kPass;
}

std::vector<unsigned> bench_orders(unsigned n_max) {
    std::vector<unsigned> orders;
    for (unsigned decade = 1; decade <= n_max && decade != 0; decade *= 10) {
        for (unsigned step : {1U, 2U, 5U}) {
            unsigned n = decade * step;
            if (n <= n_max) orders.push_back(n);
        }
        if (decade > n_max / 10) break;
    }
    if (n_max > 0 && (orders.empty() || orders.back() != n_max)) orders.push_back(n_max);
    return orders;
}

int do_bench(unsigned n_max, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    BigRational const x(3, 7);
    std::vector<std::pair<std::string, std::function<void(unsigned)>>> const methods{
        {"closed", [](unsigned n) { (void)arctan_deriv_closed(n); }},
        {"prop12", [](unsigned n) { (void)arctan_deriv_prop12(n); }},
        {"oracle", [](unsigned n) { (void)arctan_deriv_oracle(n); }},
        {"fdb", [&x](unsigned n) { (void)arctan_deriv_fdb(n, x); }},
    };
    out << "method,n,micros\n";
    for (auto const& [name, fn] : methods) {
        for (unsigned n : bench_orders(n_max)) {
            auto const start = clock::now();
            fn(n);
            auto const micros =
                std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - start).count();
            out << name << ',' << n << ',' << micros << '\n';
        }
    }
    return kPass;
}

CLI::Option* add_format(CLI::App* cmd, Format& format) {
    return cmd->add_option("--format", format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact higher derivatives of arctan and the binomial identities behind them",
                 "atanderiv"};
    app.require_subcommand(1);

    Format format = Format::text;
    bool inject_fault = false;
    unsigned n = 0;
    std::string method = "closed";
    std::optional<std::string> x_text;
    std::string points_text;

    auto* qpoly = app.add_subcommand("qpoly", "Print the numerator polynomial q_n");
    qpoly->add_option("n", n, "Polynomial index")->required();
    add_format(qpoly, format);

    auto* derive = app.add_subcommand("derive", "n-th derivative of arctan");
    derive->add_option("n", n, "Derivative order (>= 1)")->required();
    derive->add_option("--method", method, "closed, prop12, oracle or fdb")
        ->check(CLI::IsMember({"closed", "prop12", "oracle", "fdb"}));
    derive->add_option("--x", x_text, "Evaluate at this rational (p or p/q)");
    add_format(derive, format);

    struct Sweep {
        char const* name;
        char const* help;
        unsigned default_n;
        CLI::App* cmd = nullptr;
    };
    std::vector<Sweep> sweeps{
        {"check-identity", "Verify the binomial identity for all n <= n_max", 200},
        {"check-corollary", "Verify the corollary sum and its recurrence for n <= n_max", 200},
        {"check-2f1", "Verify the terminating 2F1 representation for n <= n_max", 60},
        {"crosscheck", "Cross-check all four derivative methods for n <= n_max", 50},
    };
    for (auto& s : sweeps) {
        s.cmd = app.add_subcommand(s.name, s.help);
        s.cmd->add_option("n_max", n, "Largest n to check")->default_val(s.default_n);
        add_format(s.cmd, format);
        s.cmd->add_flag("--inject-fault", inject_fault, "Corrupt one value (self-test)")->group("");
    }
    sweeps.back().cmd->add_option("--points", points_text,
                                  "Comma-separated rational sample points");

    auto* bench = app.add_subcommand("bench", "Time each derivative method (csv)");
    bench->add_option("n_max", n, "Largest order to time")->default_val(100);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    CheckOptions const options{inject_fault};
    try {
        if (qpoly->parsed()) return do_qpoly(n, format, out);
        if (derive->parsed()) return do_derive(n, method, x_text, format, out);
        if (bench->parsed()) return do_bench(n, out);
        if (sweeps[0].cmd->parsed()) return emit_report(check_identity_sweep(n, options), format, out);
        if (sweeps[1].cmd->parsed()) {
            // The fault goes into the corollary sweep only, so the recurrence stays honest.
            CheckReport report = merge(check_corollary_sweep(n, options),
                                       check_corollary_recurrence(n));
            return emit_report(report, format, out);
        }
        if (sweeps[2].cmd->parsed()) return emit_report(check_2f1_sweep(n, options), format, out);
        if (sweeps[3].cmd->parsed()) {
            if (n == 0) throw UsageError("crosscheck: n_max must be >= 1");
            std::vector<BigRational> const points =
                points_text.empty() ? default_sample_points() : parse_points(points_text);
            json extra{{"points", json::array()}};
            for (auto const& p : points) extra["points"].push_back(p.to_string());
            return emit_report(crosscheck(n, points, options), format, out, extra);
        }
    } catch (UsageError const& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}

}  // namespace atanderiv::cli
