#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "parallel.hpp"
#include "record.hpp"

#include "quatrace/quat.hpp"
#include "quatrace/trace.hpp"
#include "quatrace/verify.hpp"

namespace qt = quatrace;
using qt::Int;
using qt::cli::int_value;
using qt::cli::Json;
using qt::cli::parallel_map;
using qt::cli::rat_string;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

unsigned resolve_jobs(int flag) {
    if (flag > 0) return static_cast<unsigned>(flag);
    if (const char* env = std::getenv("QUATRACE_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

/// Line-delimited record sink: stdout by default, a file with --out.
struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        out = &file;
    }
    void line(const std::string& s) { *out << s << '\n'; }
};

int emit_error(Sink& sink, const std::string& command, const std::string& message, int code) {
    Json rec;
    rec["command"] = command;
    rec["error"] = message;
    sink.line(rec.dump());
    return code;
}

Json check_record(const qt::IdentityCheck& check) {
    Json rec;
    rec["command"] = "verify";
    rec["identity"] = check.identity;
    for (const auto& [key, value] : check.parameters) rec[key] = int_value(value);
    rec["left"] = rat_string(check.left);
    rec["right"] = rat_string(check.right);
    rec["pass"] = check.pass;
    return rec;
}

int emit_report_lines(Sink& sink, const std::string& identity,
                      const std::vector<std::pair<std::string, bool>>& rendered) {
    long long failures = 0;
    for (const auto& [text, pass] : rendered) {
        sink.line(text);
        if (!pass) ++failures;
    }
    Json summary;
    summary["command"] = "verify";
    summary["identity"] = identity;
    summary["checks"] = static_cast<long long>(rendered.size());
    summary["failures"] = failures;
    summary["all_pass"] = failures == 0;
    sink.line(summary.dump());
    return failures == 0 ? kExitPass : kExitViolation;
}

// ----- trace ---------------------------------------------------------------

struct TraceArgs {
    std::string space;
    long long level = 0;
    long long new_part = 0;
    long long D = 0;
    long long N = 1;
    int k = 0;
    long long n = 0;
    long long n_max = 0;
    bool csv = false;
    int jobs = 0;
    std::string out;
};

int run_trace(const TraceArgs& args) {
    Sink sink;
    sink.open(args.out);
    try {
        bool quat_space = args.space == "quat-eichler" || args.space == "quat-suborder";
        std::optional<qt::QuaternionSpec> spec;
        Int level;
        Int new_part = 0;
        if (quat_space) {
            if (args.D == 0)
                throw std::invalid_argument("--D is required for quaternionic spaces");
            spec = qt::QuaternionSpec::make(args.D, args.N);
            level = spec->dn();
        } else {
            if (args.level == 0) throw std::invalid_argument("--level is required");
            level = args.level;
            new_part = args.new_part > 0 ? args.new_part : args.level;
        }
        if (args.n == 0 && args.n_max == 0)
            throw std::invalid_argument("one of --n or --n-max is required");
        if (args.n != 0 && args.n_max != 0)
            throw std::invalid_argument("--n and --n-max are mutually exclusive");

        std::vector<Int> ns;
        if (args.n != 0) {
            ns.emplace_back(args.n);
        } else {
            for (Int n = 1; n <= args.n_max; ++n)
                if (gcd(n, level) == 1) ns.push_back(n);
        }

        auto compute = [&](const Int& n) -> qt::TraceResult {
            if (args.space == "gamma0")
                return qt::trace_gamma0(qt::FactoredInt::of(level), args.k, n);
            if (args.space == "new")
                return qt::trace_new_part(qt::FactoredInt::of(level),
                                          qt::FactoredInt::of(new_part), args.k, n);
            if (args.space == "quat-eichler") return qt::trace_gammaDN(*spec, args.k, n);
            return qt::trace_gamma_prime(*spec, args.k, n);
        };

        auto render = [&](std::size_t i) -> std::string {
            const Int& n = ns[i];
            qt::TraceResult t = compute(n);
            if (args.csv) {
                std::ostringstream row;
                row << args.space << ',';
                if (quat_space)
                    row << spec->D.value() << ',' << spec->N.value() << ',';
                else
                    row << ",,";
                row << level << ',' << args.k << ',' << n << ',' << t.value << ','
                    << rat_string(t.identity_term) << ',' << rat_string(t.elliptic_term) << ','
                    << rat_string(t.hyperbolic_term) << ',' << rat_string(t.parabolic_term);
                return row.str();
            }
            Json rec;
            rec["command"] = "trace";
            rec["space"] = args.space;
            if (quat_space) {
                rec["D"] = int_value(spec->D.value());
                rec["N"] = int_value(spec->N.value());
            } else {
                rec["level"] = int_value(level);
                if (args.space == "new") rec["new_part"] = int_value(new_part);
            }
            rec["k"] = args.k;
            rec["n"] = int_value(n);
            qt::cli::add_trace_fields(rec, t);
            return rec.dump();
        };

        std::vector<std::string> rows =
            parallel_map<std::string>(ns.size(), resolve_jobs(args.jobs), render);
        if (args.csv)
            sink.line(
                "space,D,N,level,k,n,trace,identity_term,elliptic_term,hyperbolic_term,"
                "parabolic_term");
        for (const std::string& row : rows) sink.line(row);
        return kExitPass;
    } catch (const std::invalid_argument& e) {
        return emit_error(sink, "trace", e.what(), kExitUsage);
    } catch (const std::logic_error& e) {
        return emit_error(sink, "trace", e.what(), kExitViolation);
    }
}

// ----- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string identity;
    long long D = 0;
    long long N = 1;
    int k_max = 12;
    long long n_max = 0;
    long long n = 0;
    long long bound = 10000;
    long long cm_bound = 400;
    int jobs = 0;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    Sink sink;
    sink.open(args.out);
    try {
        std::vector<qt::QuaternionSpec> specs;
        if (args.D != 0)
            specs.push_back(qt::QuaternionSpec::make(args.D, args.N));
        else
            specs = qt::default_specs();
        unsigned jobs = resolve_jobs(args.jobs);

        if (args.identity == "jl" || args.identity == "classical-jl" ||
            args.identity == "jl1-sum") {
            qt::SweepConfig cfg{specs, args.k_max, args.n_max > 0 ? Int(args.n_max) : Int(100)};
            std::vector<qt::SweepPoint> points = qt::sweep_points(cfg);
            auto check_one = [&](const qt::SweepPoint& p) {
                if (args.identity == "jl") return qt::check_jl(p.spec, p.k, p.n);
                if (args.identity == "classical-jl")
                    return qt::check_classical_jl(p.spec, p.k, p.n);
                return qt::check_jl1_consequence(p.spec, p.k, p.n);
            };
            auto rendered = parallel_map<std::pair<std::string, bool>>(
                points.size(), jobs, [&](std::size_t i) {
                    qt::IdentityCheck c = check_one(points[i]);
                    return std::make_pair(check_record(c).dump(), c.pass);
                });
            return emit_report_lines(sink, args.identity, rendered);
        }

        if (args.identity == "goal") {
            std::vector<std::pair<qt::QuaternionSpec, Int>> points;
            for (const qt::QuaternionSpec& spec : specs) {
                if (args.n != 0) {
                    points.emplace_back(spec, args.n);
                    continue;
                }
                Int limit = args.n_max > 0 ? Int(args.n_max) : Int(50);
                for (Int n = 1; n <= limit; ++n)
                    if (gcd(n, spec.dn()) == 1) points.emplace_back(spec, n);
            }
            auto rendered = parallel_map<std::pair<std::string, long long>>(
                points.size(), jobs, [&](std::size_t i) {
                    const auto& [spec, n] = points[i];
                    std::vector<qt::IdentityCheck> checks = qt::check_goal_identity(spec, n);
                    std::ostringstream block;
                    long long failed = 0;
                    for (std::size_t j = 0; j < checks.size(); ++j) {
                        if (j) block << '\n';
                        block << check_record(checks[j]).dump();
                        if (!checks[j].pass) ++failed;
                    }
                    return std::make_pair(block.str(), failed);
                });
            long long failures = 0;
            long long emitted = 0;
            for (const auto& [text, failed] : rendered) {
                sink.line(text);
                emitted += static_cast<long long>(std::count(text.begin(), text.end(), '\n')) + 1;
                failures += failed;
            }
            Json summary;
            summary["command"] = "verify";
            summary["identity"] = "goal";
            summary["checks"] = emitted;
            summary["failures"] = failures;
            summary["all_pass"] = failures == 0;
            sink.line(summary.dump());
            return failures == 0 ? kExitPass : kExitViolation;
        }

        if (args.identity == "convolutions") {
            qt::VerificationReport report =
                qt::verify_convolutions(args.bound, specs, args.cm_bound);
            std::vector<std::pair<std::string, bool>> rendered;
            rendered.reserve(report.checks.size());
            for (const qt::IdentityCheck& c : report.checks)
                rendered.emplace_back(check_record(c).dump(), c.pass);
            return emit_report_lines(sink, "convolutions", rendered);
        }

        throw std::invalid_argument("unknown identity: " + args.identity);
    } catch (const std::invalid_argument& e) {
        return emit_error(sink, "verify", e.what(), kExitUsage);
    } catch (const std::logic_error& e) {
        return emit_error(sink, "verify", e.what(), kExitViolation);
    }
}

// ----- quat -----------------------------------------------------------------

struct QuatArgs {
    long long D = 0;
    std::string out;
    // search-norm
    long long target = 0;
    long long height = 0;
    bool suborder = false;
    // membership
    std::vector<long long> coords;
};

Json quat_base(const std::string& subcommand, long long D, const Int& q) {
    Json rec;
    rec["command"] = "quat";
    rec["subcommand"] = subcommand;
    rec["D"] = D;
    rec["q"] = int_value(q);
    return rec;
}

int run_quat_check_example(const QuatArgs& args, Sink& sink) {
    Int q = qt::example_q(args.D);
    std::vector<std::pair<std::string, bool>> results;
    auto push = [&](const std::string& name, bool pass) { results.emplace_back(name, pass); };

    qt::QuatElement one = qt::QuatElement::scalar(q, 1);
    qt::QuatElement minus_one = qt::QuatElement::scalar(q, -1);
    qt::QuatElement i = qt::QuatElement::integral(q, 0, 1, 0, 0);
    qt::QuatElement j = qt::QuatElement::integral(q, 0, 0, 1, 0);
    qt::QuatElement ij = qt::QuatElement::integral(q, 0, 0, 0, 1);
    push("i^2 = -1", multiply(i, i) == minus_one);
    push("j^2 = q", multiply(j, j) == qt::QuatElement::scalar(q, q));
    push("ij = i*j", multiply(i, j) == ij);
    push("ji = -ij", multiply(j, i) == qt::QuatElement::integral(q, 0, 0, 0, -1));
    push("(1+i+j+ij)/2 in order, odd trace",
         !qt::in_suborder(qt::QuatElement::half_unit(q)));

    if (args.D == 6) {
        std::vector<qt::QuatElement> g = qt::norm_one_generators_d6();
        for (const qt::QuatElement& gen : g) push("nrd = 1", qt::reduced_norm(gen) == 1);
        push("gamma2^2 = -1", multiply(g[1], g[1]) == minus_one);
        push("gamma3^3 = -1", multiply(multiply(g[2], g[2]), g[2]) == minus_one);
        push("gamma4^3 = -1", multiply(multiply(g[3], g[3]), g[3]) == minus_one);
        qt::QuatElement prod = multiply(multiply(g[1], g[2]), g[3]);
        push("gamma1 = (gamma2 gamma3 gamma4)^-1",
             multiply(prod, g[0]) == one && multiply(g[0], prod) == one);
        push("gamma3 has odd reduced trace", !qt::in_suborder(g[2]));
    }

    bool all = true;
    for (const auto& [name, pass] : results) {
        Json rec = quat_base("check-example", args.D, q);
        rec["check"] = name;
        rec["pass"] = pass;
        sink.line(rec.dump());
        all = all && pass;
    }
    Json summary = quat_base("check-example", args.D, q);
    summary["checks"] = static_cast<long long>(results.size());
    summary["all_pass"] = all;
    sink.line(summary.dump());
    return all ? kExitPass : kExitViolation;
}

int run_quat_search(const QuatArgs& args, Sink& sink) {
    Int q = qt::example_q(args.D);
    if (args.height < 1) throw std::invalid_argument("--height must be positive");
    std::vector<qt::QuatElement> hits =
        qt::search_norm(q, args.target, args.height, args.suborder);
    for (const qt::QuatElement& hit : hits) {
        Json rec = quat_base("search-norm", args.D, q);
        rec["target"] = args.target;
        rec["height"] = args.height;
        rec["suborder"] = args.suborder;
        rec["x0"] = int_value(hit.x0);
        rec["x1"] = int_value(hit.x1);
        rec["x2"] = int_value(hit.x2);
        rec["x3"] = int_value(hit.x3);
        rec["nrd"] = rat_string(qt::reduced_norm(hit));
        rec["trd"] = int_value(qt::reduced_trace(hit));
        sink.line(rec.dump());
    }
    Json summary = quat_base("search-norm", args.D, q);
    summary["target"] = args.target;
    summary["height"] = args.height;
    summary["suborder"] = args.suborder;
    summary["hits"] = static_cast<long long>(hits.size());
    sink.line(summary.dump());
    return kExitPass;
}

int run_quat_membership(const QuatArgs& args, Sink& sink) {
    Int q = qt::example_q(args.D);
    if (args.coords.size() != 4)
        throw std::invalid_argument("--coords needs exactly four doubled coordinates");
    Json rec = quat_base("membership", args.D, q);
    rec["x0"] = args.coords[0];
    rec["x1"] = args.coords[1];
    rec["x2"] = args.coords[2];
    rec["x3"] = args.coords[3];
    try {
        qt::QuatElement elem = qt::QuatElement::make(q, args.coords[0], args.coords[1],
                                                     args.coords[2], args.coords[3]);
        rec["in_order"] = true;
        rec["trd"] = int_value(qt::reduced_trace(elem));
        rec["nrd"] = rat_string(qt::reduced_norm(elem));
        rec["in_suborder"] = qt::in_suborder(elem);
    } catch (const std::invalid_argument&) {
        rec["in_order"] = false;
        rec["in_suborder"] = false;
    }
    sink.line(rec.dump());
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hecke traces and identity checks for quaternionic orders"};
    app.require_subcommand(1);

    TraceArgs trace_args;
    CLI::App* trace = app.add_subcommand("trace", "Evaluate one trace formula");
    trace->add_option("--space", trace_args.space, "gamma0|new|quat-eichler|quat-suborder")
        ->required()
        ->check(CLI::IsMember({"gamma0", "new", "quat-eichler", "quat-suborder"}));
    trace->add_option("--level", trace_args.level, "Level M (gamma0/new spaces)");
    trace->add_option("--new-part", trace_args.new_part,
                      "Newform level part (defaults to the full level)");
    trace->add_option("--D", trace_args.D, "Quaternion discriminant");
    trace->add_option("--N", trace_args.N, "Level of the order (default 1)");
    trace->add_option("--k", trace_args.k, "Weight (even, >= 2)")->required();
    trace->add_option("--n", trace_args.n, "Hecke index");
    trace->add_option("--n-max", trace_args.n_max, "Sweep n = 1.. coprime to the level");
    trace->add_flag("--csv", trace_args.csv, "Emit CSV instead of JSON lines");
    trace->add_option("--jobs", trace_args.jobs, "Worker threads (default $QUATRACE_JOBS or 1)");
    trace->add_option("--out", trace_args.out, "Write records to a file instead of stdout");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Check a trace identity over a sweep");
    verify->add_option("--identity", verify_args.identity,
                       "jl|classical-jl|jl1-sum|goal|convolutions")
        ->required()
        ->check(CLI::IsMember({"jl", "classical-jl", "jl1-sum", "goal", "convolutions"}));
    verify->add_option("--D", verify_args.D, "Restrict to one spec (default: built-in set)");
    verify->add_option("--N", verify_args.N, "Level of the order (default 1)");
    verify->add_option("--k-max", verify_args.k_max, "Largest weight (default 12)");
    verify->add_option("--n-max", verify_args.n_max, "Largest Hecke index");
    verify->add_option("--n", verify_args.n, "Single Hecke index (goal identity)");
    verify->add_option("--bound", verify_args.bound,
                       "Upper n for the scalar convolution identities (default 10000)");
    verify->add_option("--cm-bound", verify_args.cm_bound,
                       "Largest |d| for the CM convolutions (default 400)");
    verify->add_option("--jobs", verify_args.jobs, "Worker threads (default $QUATRACE_JOBS or 1)");
    verify->add_option("--out", verify_args.out, "Write records to a file instead of stdout");

    QuatArgs quat_args;
    CLI::App* quat = app.add_subcommand("quat", "Concrete order arithmetic desk checks");
    quat->add_option("--D", quat_args.D, "Discriminant 2*p1*...*pr, pi = 3 mod 4, r odd")
        ->required();
    quat->add_option("--out", quat_args.out, "Write records to a file instead of stdout");
    quat->require_subcommand(1);
    CLI::App* check_example =
        quat->add_subcommand("check-example", "Verify the explicit unit relations");
    CLI::App* search = quat->add_subcommand("search-norm", "Enumerate elements of a given norm");
    search->add_option("--target", quat_args.target, "Reduced norm to search for")->required();
    search->add_option("--height", quat_args.height,
                       "Coefficient height bound (doubled coordinates up to 2*height)")
        ->required();
    search->add_flag("--suborder", quat_args.suborder, "Restrict to even reduced trace");
    CLI::App* membership = quat->add_subcommand("membership", "Order membership of an element");
    membership
        ->add_option("--coords", quat_args.coords,
                     "Doubled coordinates x0 x1 x2 x3 over {1, i, j, ij}")
        ->expected(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json rec;
        rec["command"] = "cli";
        rec["error"] = e.what();
        std::cout << rec.dump() << '\n';
        return kExitUsage;
    }

    if (trace->parsed()) return run_trace(trace_args);
    if (verify->parsed()) return run_verify(verify_args);

    Sink sink;
    try {
        sink.open(quat_args.out);
        if (!qt::is_example_form(quat_args.D))
            throw std::invalid_argument(
                "--D must be 2*p1*...*pr with distinct primes pi = 3 mod 4, r odd");
        if (check_example->parsed()) return run_quat_check_example(quat_args, sink);
        if (search->parsed()) return run_quat_search(quat_args, sink);
        return run_quat_membership(quat_args, sink);
    } catch (const std::invalid_argument& e) {
        return emit_error(sink, "quat", e.what(), kExitUsage);
    } catch (const std::logic_error& e) {
        return emit_error(sink, "quat", e.what(), kExitViolation);
    }
}
