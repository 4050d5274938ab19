// Command-line surface: coefficient generation and ingestion, sign
// statistics, truncated-formula diagnostics, short-interval reports, and
// the verification suite. Exit codes: 0 ok, 1 a pass/fail check failed,
// 2 usage/config error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hecke/bfree.hpp"
#include "hecke/errors.hpp"
#include "hecke/forms.hpp"
#include "hecke/intervals.hpp"
#include "hecke/verify.hpp"
#include "hecke/voronoi.hpp"

namespace {

using hecke::EigenForm;
using hecke::Error;
using hecke::ErrorKind;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct FormSpec {
    enum class Kind { level1, curve, file } kind = Kind::level1;
    int weight = 12;
    hecke::WeierstrassCoeffs curve{};
    std::uint64_t conductor = 1;
    std::string path;
};

FormSpec parse_form_spec(const std::string& text) {
    FormSpec spec;
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::usage,
                    "form spec must be level1:<k> | curve:a1,a2,a3,a4,a6,N | file:<path>");
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (head == "level1") {
        spec.kind = FormSpec::Kind::level1;
        try {
            spec.weight = std::stoi(rest);
        } catch (...) {
            throw Error(ErrorKind::usage, "bad weight in form spec: " + rest);
        }
    } else if (head == "curve") {
        spec.kind = FormSpec::Kind::curve;
        std::vector<long long> vals;
        std::istringstream is(rest);
        std::string part;
        while (std::getline(is, part, ',')) {
            try {
                vals.push_back(std::stoll(part));
            } catch (...) {
                throw Error(ErrorKind::usage, "bad curve coefficient: " + part);
            }
        }
        if (vals.size() != 6)
            throw Error(ErrorKind::usage, "curve spec needs a1,a2,a3,a4,a6,N");
        spec.curve = {vals[0], vals[1], vals[2], vals[3], vals[4]};
        if (vals[5] <= 0) throw Error(ErrorKind::usage, "conductor must be positive");
        spec.conductor = static_cast<std::uint64_t>(vals[5]);
    } else if (head == "file") {
        spec.kind = FormSpec::Kind::file;
        spec.path = rest;
    } else {
        throw Error(ErrorKind::usage, "unknown form kind: " + head);
    }
    return spec;
}

EigenForm build_form(const FormSpec& spec, std::uint64_t bound) {
    switch (spec.kind) {
        case FormSpec::Kind::level1: return hecke::from_level1(spec.weight, bound);
        case FormSpec::Kind::curve:
            return hecke::from_elliptic_curve(spec.curve, spec.conductor, bound);
        case FormSpec::Kind::file: return hecke::from_file(spec.path);
    }
    throw Error(ErrorKind::usage, "unreachable form kind");
}

// `lo:hi:count`, log-spaced, or a single value.
std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ':')) parts.push_back(part);
    try {
        if (parts.size() == 1) return {std::stod(parts[0])};
        if (parts.size() == 3) {
            double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
            long count = std::stol(parts[2]);
            if (lo <= 0 || hi < lo || count < 1)
                throw Error(ErrorKind::usage, "bad range: " + text);
            std::vector<double> xs;
            for (long i = 0; i < count; ++i) {
                double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
                xs.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
            }
            return xs;
        }
    } catch (const Error&) {
        throw;
    } catch (...) {
    }
    throw Error(ErrorKind::usage, "range must be `<x>` or `<lo>:<hi>:<count>`: " + text);
}

hecke::TruncationPolicy parse_m_policy(const std::string& text) {
    hecke::TruncationPolicy p;
    if (text == "x") return p;
    if (text.rfind("x/", 0) == 0) {
        double div = std::stod(text.substr(2));
        if (div <= 0) throw Error(ErrorKind::usage, "bad M policy: " + text);
        p.scale = 1.0 / div;
        return p;
    }
    if (text.rfind("x^", 0) == 0) {
        p.exponent = std::stod(text.substr(2));
        if (p.exponent <= 0 || p.exponent > 2.0)
            throw Error(ErrorKind::usage, "M policy exponent must lie in (0, 2]");
        return p;
    }
    try {
        long long fixed = std::stoll(text);
        if (fixed >= 1) {
            p.fixed = static_cast<std::uint64_t>(fixed);
            return p;
        }
    } catch (...) {
    }
    throw Error(ErrorKind::usage, "M policy must be x, x/<div>, x^<A> or a fixed length");
}

struct OutputTarget {
    std::string path;  // empty = stdout
    std::ofstream file;
    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw Error(ErrorKind::usage, "cannot write " + path);
        }
        return file;
    }
};

int exit_code_for(ErrorKind kind) {
    return kind == ErrorKind::invariant_violation ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke eigenvalue sign experiments"};
    app.fallthrough();  // lets --config appear after the subcommand name
    app.set_config("--config", "", "key=value config file merged under flags");
    app.require_subcommand(1);

    std::string form_text, out_path, range_text, format = "csv", m_text = "x",
                precision_text = "standard";
    std::uint64_t bound = 0, prime_bound = 0;
    double C = 3.0, eps = 0.1, psi_exp = 3.0, triple_scale = 0.05, x_floor = 0.0;
    std::vector<int> criteria;

    auto add_form = [&](CLI::App* cmd, bool need_bound) {
        cmd->add_option("--form", form_text,
                        "level1:<k> | curve:a1,a2,a3,a4,a6,N | file:<path>")
            ->required();
        auto* b = cmd->add_option("--bound", bound, "coefficient table length");
        if (need_bound) b->required();
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    auto* cmd_coeffs = app.add_subcommand("coeffs", "generate a coefficient file");
    add_form(cmd_coeffs, true);

    auto* cmd_signs = app.add_subcommand("signs", "sign counts, lower bounds, densities");
    add_form(cmd_signs, true);
    cmd_signs->add_option("--x", range_text, "grid `<x>` or `lo:hi:count` (default: bound)");
    cmd_signs->add_option("--P", prime_bound, "prime search bound (default sqrt(limit))");
    cmd_signs->add_option("--format", format, "csv|json");

    auto* cmd_bfree = app.add_subcommand("bfree", "B-free membership and signs as CSV");
    add_form(cmd_bfree, true);
    cmd_bfree->add_option("--P", prime_bound, "prime search bound (default sqrt(bound))");

    auto* cmd_voronoi = app.add_subcommand("voronoi", "truncated-formula residual scan");
    add_form(cmd_voronoi, false);
    cmd_voronoi->add_option("--x", range_text, "grid `<x>` or `lo:hi:count`")->required();
    cmd_voronoi->add_option("--M", m_text, "truncation policy: x, x/<div>, x^<A>, or fixed");
    cmd_voronoi->add_option("--format", format, "csv|json");
    cmd_voronoi->add_option("--precision", precision_text, "standard|extended");

    auto* cmd_intervals = app.add_subcommand("intervals", "short-interval same-sign report");
    add_form(cmd_intervals, false);
    cmd_intervals->add_option("--x", range_text, "window start")->required();
    cmd_intervals->add_option("--C", C, "window constant (default 3)");
    cmd_intervals->add_option("--eps", eps, "threshold exponent offset (default 0.1)");
    cmd_intervals->add_option("--psi-exponent", psi_exp, "exponent of Psi(N) (default 3)");
    cmd_intervals->add_option("--triple-scale", triple_scale,
                              "threshold scale for the alternating triple");
    cmd_intervals->add_option("--x-floor", x_floor,
                              "flag (do not fail) windows starting below this x");

    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    cmd_verify->add_option("--criteria", criteria, "subset of criteria to run (1-10)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        OutputTarget out{out_path, {}};

        if (*cmd_verify) {
            auto results = hecke::run_acceptance(std::cout, criteria);
            return hecke::all_passed(results) ? 0 : 1;
        }

        FormSpec spec = parse_form_spec(form_text);

        if (*cmd_coeffs) {
            if (bound < 10) throw Error(ErrorKind::usage, "bound must be >= 10");
            EigenForm f = build_form(spec, bound);
            hecke::write_coefficients(f, out.stream());
            return 0;
        }

        if (*cmd_signs) {
            if (bound < 10) throw Error(ErrorKind::usage, "bound must be >= 10");
            std::vector<double> grid = range_text.empty()
                                           ? std::vector<double>{static_cast<double>(bound)}
                                           : parse_range(range_text);
            EigenForm f = build_form(spec, bound);
            std::uint64_t limit = bound;
            std::uint64_t P = prime_bound ? prime_bound
                                          : static_cast<std::uint64_t>(std::sqrt((double)limit));
            hecke::BSet bset = hecke::build_bset(f, P);
            hecke::BFreeSieve sieve = hecke::sieve_bfree(bset, limit);
            hecke::SignPartition part = hecke::partition_signs(f, sieve);
            double density = hecke::density_product(bset);

            std::ostream& os = out.stream();
            bool json = format == "json";
            if (json) os << "[";
            else os << "x,plus,minus,plus_over_x,minus_over_x,lb_plus,lb_minus,bfree_scaled,density\n";
            bool first = true;
            for (double xv : grid) {
                std::uint64_t x = static_cast<std::uint64_t>(std::llround(xv));
                if (x < 1 || x > limit) throw Error(ErrorKind::usage, "grid point outside [1, bound]");
                auto direct = hecke::direct_sign_count(f, x);
                auto lb = hecke::lower_bound_count(f, part, x);
                if (json) {
                    os << (first ? "" : ",") << "{\"x\":" << x << ",\"plus\":" << direct.plus
                       << ",\"minus\":" << direct.minus << ",\"lb_plus\":" << lb.plus
                       << ",\"lb_minus\":" << lb.minus << ",\"bfree_scaled\":" << lb.bfree_scaled
                       << ",\"density\":" << fmt12(density) << "}";
                } else {
                    os << x << ',' << direct.plus << ',' << direct.minus << ','
                       << fmt12(static_cast<double>(direct.plus) / x) << ','
                       << fmt12(static_cast<double>(direct.minus) / x) << ',' << lb.plus << ','
                       << lb.minus << ',' << lb.bfree_scaled << ',' << fmt12(density) << '\n';
                }
                first = false;
            }
            if (json) os << "]\n";
            return 0;
        }

        if (*cmd_bfree) {
            if (bound < 10) throw Error(ErrorKind::usage, "bound must be >= 10");
            EigenForm f = build_form(spec, bound);
            std::uint64_t P = prime_bound ? prime_bound
                                          : static_cast<std::uint64_t>(std::sqrt((double)bound));
            hecke::BSet bset = hecke::build_bset(f, P);
            hecke::BFreeSieve sieve = hecke::sieve_bfree(bset, bound);
            hecke::write_bfree_csv(out.stream(), f, sieve, bound);
            return 0;
        }

        if (*cmd_voronoi) {
            std::vector<double> xs;
            {
                auto raw = parse_range(range_text);
                for (double x : raw) {
                    double snapped = std::floor(x) + 0.5;  // avoid integer jump ambiguity
                    if (xs.empty() || snapped > xs.back()) xs.push_back(snapped);
                }
            }
            hecke::TruncationPolicy policy = parse_m_policy(m_text);
            hecke::Precision prec = precision_text == "extended" ? hecke::Precision::extended
                                                                 : hecke::Precision::standard;
            if (bound == 0) {
                double need = 0;
                for (double x : xs) need = std::max({need, x, (double)policy.length_at(x)});
                bound = static_cast<std::uint64_t>(std::ceil(need)) + 1;
            }
            if (bound < 10) bound = 10;
            EigenForm f = build_form(spec, bound);
            auto rows = hecke::residual_scan(f, xs, policy, prec);
            if (format == "json") {
                out.stream() << hecke::voronoi_summary_json(rows) << "\n";
            } else {
                hecke::write_voronoi_csv(out.stream(), rows);
            }
            return 0;
        }

        if (*cmd_intervals) {
            auto grid = parse_range(range_text);
            double x_max = *std::max_element(grid.begin(), grid.end());
            double cn = hecke::c_N(spec.kind == FormSpec::Kind::curve ? spec.conductor : 1, C,
                                   psi_exp);
            if (bound == 0)
                bound = static_cast<std::uint64_t>(
                            std::ceil(x_max + 3.1 * cn * std::sqrt(x_max))) + 2;
            if (bound < 10) bound = 10;
            EigenForm f = build_form(spec, bound);
            const double cn_form = hecke::c_N(f.level(), C, psi_exp);

            std::ostream& os = out.stream();
            bool all_pass = true;
            os << "[";
            bool first = true;
            for (double x : grid) {
                hecke::IntervalReport r;
                r.x = x;
                r.h = cn_form * std::sqrt(x);
                r.threshold = std::pow(static_cast<double>(f.level()) * x, 0.25 - eps);
                r.below_floor = x < x_floor;
                auto counts = hecke::window_counts(f, x, r.h);
                r.plus = counts.plus;
                r.minus = counts.minus;
                r.pass = static_cast<double>(std::min(r.plus, r.minus)) >= r.threshold;
                r.triple = hecke::alternating_triple(f, x, cn_form, triple_scale);
                if (r.below_floor && !r.pass)
                    std::cerr << "note: window at x=" << fmt12(x)
                              << " is below the configured onset; not counted as failure\n";
                all_pass = all_pass && (r.pass || r.below_floor);
                os << (first ? "" : ",") << hecke::interval_report_json(r);
                first = false;
            }
            os << "]\n";
            return all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << hecke::error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
