#include "bmsord/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bmsord/channel.hpp"
#include "bmsord/extremal.hpp"
#include "bmsord/lambda.hpp"
#include "bmsord/sampler.hpp"
#include "bmsord/sweep.hpp"

namespace bmsord {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

SolverConfig solver_from_env() {
    SolverConfig cfg;
    if (const char* env = std::getenv("BMSORD_QUAD_TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(tol > 0.0))
            throw InvalidParameter("BMSORD_QUAD_TOL must be a positive number, got '" +
                                   std::string(env) + "'");
        cfg.quad_tol = tol;
    }
    return cfg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParameter("cannot write file: " + path.string());
    out << text;
}

// Output sink: --out PATH or the given stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw InvalidParameter("cannot write file: " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void print_gap_rows(std::ostream& os, const std::vector<CapacityGapRow>& rows,
                    int digits) {
    os << "c,c_star,c_under,d_gap,u_gap\n";
    for (const CapacityGapRow& r : rows)
        os << fmt(r.c, digits) << ',' << fmt(r.c_star, digits) << ','
           << fmt(r.c_under, digits) << ',' << fmt(r.d_gap, digits) << ','
           << fmt(r.u_gap, digits) << '\n';
}

void print_profile_csv(std::ostream& os, const PiecewiseLinear& pl, int digits,
                       const std::string& prefix = "") {
    for (std::size_t i = 0; i < pl.breaks().size(); ++i)
        os << prefix << fmt(pl.breaks()[i], digits) << ','
           << fmt(pl.values()[i], digits) << '\n';
}

int cmd_eps_bsc(double c, int digits, const std::string& out_path, std::ostream& out) {
    const ExtremalProfile p = extremal_profile(c, solver_from_env());
    Sink sink(out_path, out);
    sink.get() << "eps_bsc,z_bsc,x_bsc\n"
               << fmt(p.eps_bsc, digits) << ',' << fmt(p.z_bsc, digits) << ','
               << fmt(p.x_bsc(), digits) << '\n';
    return 0;
}

int cmd_gap_table(double from, double to, double step, int digits,
                  const std::string& out_path, std::ostream& out) {
    const SolverConfig cfg = solver_from_env();
    const std::vector<CapacityGapRow> rows = gap_rows(capacity_grid(from, to, step), cfg);
    Sink sink(out_path, out);
    print_gap_rows(sink.get(), rows, digits);
    return 0;
}

int cmd_sweep(double from, double to, double step, int digits,
              const std::string& out_path, std::ostream& out) {
    const SolverConfig cfg = solver_from_env();
    const std::vector<CapacityGapRow> rows = gap_rows(capacity_grid(from, to, step), cfg);
    const SweepSummary s = summarize(rows);
    Sink sink(out_path, out);
    print_gap_rows(sink.get(), rows, digits);
    sink.get() << "# summary: max_d_gap=" << fmt(s.max_d_gap, digits)
               << " at c=" << fmt(s.argmax_d, digits)
               << "; max_u_gap=" << fmt(s.max_u_gap, digits)
               << " at c=" << fmt(s.argmax_u, digits) << '\n';
    return 0;
}

int cmd_extremal(double c, std::size_t grid, int digits, const std::string& out_path,
                 std::ostream& out) {
    if (grid < 2) throw InvalidParameter("extremal: --grid must be >= 2");
    const SolverConfig cfg = solver_from_env();
    const ExtremalProfile p = extremal_profile(c, cfg);

    std::vector<double> zs;
    zs.reserve(grid + 2);
    for (std::size_t i = 0; i < grid; ++i)
        zs.push_back(static_cast<double>(i) / static_cast<double>(grid - 1));
    zs.push_back(p.z_bsc);   // seam of lambda_under
    zs.push_back(p.x_bsc()); // seam of lambda_bar / lambda_star
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

    Sink sink(out_path, out);
    sink.get() << "z,lambda_bar,lambda_star,lambda_under\n";
    for (double z : zs)
        sink.get() << fmt(z, digits) << ',' << fmt(lambda_bar(p, z), digits) << ','
                   << fmt(lambda_star(p, z), digits) << ','
                   << fmt(lambda_under(p, z, cfg), digits) << '\n';
    return 0;
}

std::string lambda_csv(const DiscreteChannel& ch, int digits) {
    std::ostringstream os;
    os << "z,value\n";
    print_profile_csv(os, lambda_profile(ch), digits);
    return os.str();
}

int cmd_sample(double c, int masses, std::size_t count, std::uint64_t seed,
               const std::string& out_path, bool array_mode, bool emit_lambda,
               int digits, std::ostream& out) {
    SamplerConfig cfg{c, masses, seed};
    const std::vector<DiscreteChannel> batch =
        ChannelSampler(cfg, solver_from_env()).batch(count);

    if (array_mode) {
        std::string doc = "[";
        for (std::size_t i = 0; i < batch.size(); ++i) {
            doc += (i == 0 ? "\n  " : ",\n  ");
            doc += to_json(batch[i]);
        }
        doc += "\n]\n";
        write_file(out_path, doc);
        if (emit_lambda) {
            std::ostringstream os;
            os << "channel,z,value\n";
            for (std::size_t i = 0; i < batch.size(); ++i)
                print_profile_csv(os, lambda_profile(batch[i]), digits,
                                  std::to_string(i) + ",");
            write_file(fs::path(out_path).replace_extension(".lambda.csv"), os.str());
        }
        out << "wrote " << batch.size() << " channels to " << out_path << '\n';
        return 0;
    }

    fs::path dir(out_path);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InvalidParameter("cannot create directory: " + out_path);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "ch_%05zu", i);
        write_file(dir / (std::string(name) + ".json"), to_json(batch[i]) + "\n");
        if (emit_lambda)
            write_file(dir / (std::string(name) + ".lambda.csv"),
                       lambda_csv(batch[i], digits));
    }
    out << "wrote " << batch.size() << " channel files to " << out_path << '\n';
    return 0;
}

int cmd_eval(const std::string& channel_path, std::size_t grid, int digits,
             const std::string& out_path, std::ostream& out) {
    const DiscreteChannel ch = channel_from_json(read_file(channel_path));
    const PiecewiseLinear pl = lambda_profile(ch);
    Sink sink(out_path, out);
    sink.get() << "metric,value\n"
               << "capacity," << fmt(capacity(ch), digits) << '\n'
               << "entropy," << fmt(entropy(ch), digits) << '\n'
               << "bhattacharyya," << fmt(bhattacharyya(ch), digits) << '\n'
               << "error_probability," << fmt(error_probability(ch), digits) << '\n'
               << '\n'
               << "z,value\n";
    if (grid < 2) {
        print_profile_csv(sink.get(), pl, digits);
        return 0;
    }
    // breakpoints refined with a uniform grid
    std::vector<double> zs = pl.breaks();
    for (std::size_t i = 0; i < grid; ++i)
        zs.push_back(static_cast<double>(i) / static_cast<double>(grid - 1));
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    for (double z : zs)
        sink.get() << fmt(z, digits) << ',' << fmt(pl(z), digits) << '\n';
    return 0;
}

int cmd_check_order(const std::string& a_path, const std::string& b_path,
                    const std::string& out_path, std::ostream& out) {
    const PiecewiseLinear a = lambda_profile(channel_from_json(read_file(a_path)));
    const PiecewiseLinear b = lambda_profile(channel_from_json(read_file(b_path)));
    const char* label = "";
    switch (compare(a, b)) {
        case Ordering::Equivalent: label = "equivalent"; break;
        case Ordering::DegradedOf: label = "A_degraded_wrt_B"; break;
        case Ordering::UpgradedOf: label = "A_upgraded_wrt_B"; break;
        case Ordering::Incomparable: label = "incomparable"; break;
    }
    Sink sink(out_path, out);
    sink.get() << label << '\n';
    return 0;
}

std::string quote_csv(const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += "\"\"";
        else q += ch;
    }
    q += "\"";
    return q;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degradation ordering and extremal bounds for discrete BMS channels"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited: lets --digits appear after the subcommand

    int digits = 6;
    app.add_option("--digits", digits, "decimal places in CSV output")
        ->check(CLI::Range(1, 17));

    double capacity_arg = 0.5;
    double gap_from = 0.1, gap_to = 0.9, gap_step = 0.1;
    double sweep_from = 0.001, sweep_to = 0.999, sweep_step = 0.001;
    std::size_t grid = 1001, count = 0;
    int masses = 2;
    std::uint64_t seed = 0;
    std::string out_path, channel_path, a_path, b_path;
    bool array_mode = false, emit_lambda = false;

    CLI::App* eps = app.add_subcommand(
        "eps-bsc", "crossover probability and seam points for capacity c");
    eps->add_option("--capacity", capacity_arg, "channel capacity in (0,1)")->required();
    eps->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* gap = app.add_subcommand(
        "gap-table", "capacity gaps of the extremal channels, CSV");
    gap->add_option("--from", gap_from, "first capacity")->capture_default_str();
    gap->add_option("--to", gap_to, "last capacity")->capture_default_str();
    gap->add_option("--step", gap_step, "capacity increment")->capture_default_str();
    gap->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "fine capacity sweep with a gap-maxima summary line");
    sweep->add_option("--from", sweep_from, "first capacity")->capture_default_str();
    sweep->add_option("--to", sweep_to, "last capacity")->capture_default_str();
    sweep->add_option("--step", sweep_step, "capacity increment")->capture_default_str();
    sweep->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* extremal = app.add_subcommand(
        "extremal", "lambda_bar/lambda_star/lambda_under curves, CSV");
    extremal->add_option("--capacity", capacity_arg, "channel capacity in (0,1)")
        ->required();
    extremal->add_option("--grid", grid, "uniform grid size (seams are added)");
    extremal->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* sample = app.add_subcommand(
        "sample", "draw random channels of exact capacity c");
    sample->add_option("--capacity", capacity_arg, "channel capacity in (0,1)")
        ->required();
    sample->add_option("--masses", masses, "masses per channel (2 or 3)")->required();
    sample->add_option("--count", count, "number of channels")->required();
    sample->add_option("--seed", seed, "batch seed")->required();
    sample->add_option("--out", out_path, "output directory (or file with --array)")
        ->required();
    sample->add_flag("--array", array_mode, "write one JSON array instead of a directory");
    sample->add_flag("--emit-lambda", emit_lambda, "also write lambda breakpoint CSVs");

    std::size_t eval_grid = 0;
    CLI::App* eval = app.add_subcommand("eval", "functionals and lambda of a channel file");
    eval->add_option("--channel", channel_path, "channel JSON file")->required();
    eval->add_option("--grid", eval_grid,
                     "refine the lambda CSV with a uniform grid of this size");
    eval->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* order = app.add_subcommand("check-order", "degradation order of two channels");
    order->add_option("--a", a_path, "first channel JSON file")->required();
    order->add_option("--b", b_path, "second channel JSON file")->required();
    order->add_option("--out", out_path, "output file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error,Usage," << quote_csv(e.what()) << '\n';
        return 1;
    }

    try {
        if (eps->parsed()) return cmd_eps_bsc(capacity_arg, digits, out_path, out);
        if (gap->parsed())
            return cmd_gap_table(gap_from, gap_to, gap_step, digits, out_path, out);
        if (sweep->parsed())
            return cmd_sweep(sweep_from, sweep_to, sweep_step, digits, out_path, out);
        if (extremal->parsed())
            return cmd_extremal(capacity_arg, grid, digits, out_path, out);
        if (sample->parsed())
            return cmd_sample(capacity_arg, masses, count, seed, out_path, array_mode,
                              emit_lambda, digits, out);
        if (eval->parsed())
            return cmd_eval(channel_path, eval_grid, digits, out_path, out);
        if (order->parsed()) return cmd_check_order(a_path, b_path, out_path, out);
    } catch (const Error& e) {
        err << "error," << error_kind(e) << ',' << quote_csv(e.what()) << '\n';
        return 2;
    }
    return 1;
}

}  // namespace bmsord
