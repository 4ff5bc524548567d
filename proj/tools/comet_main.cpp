// comet_main.cpp
// Command-line front end. Subcommands:
//   comet      g(n) over [3, N]                      -> CSV
//   estimate   g, h, G, trend, Sylvester-1871        -> CSV
//   classify   g(n) plus d / sigma / stratum columns -> CSV
//   sigma      the sigma table of a primorial        -> CSV
//   sequence   generate a family                     -> one element per line
//   correlate  g_X(n) for a family                   -> CSV
//   render     CSV -> SVG scatter
// Exit codes: 0 ok, 1 usage error, 2 computation error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "goldbach/csv.hpp"
#include "goldbach/hl.hpp"
#include "goldbach/paircount.hpp"
#include "goldbach/primes.hpp"
#include "goldbach/residue.hpp"
#include "goldbach/sequences.hpp"
#include "goldbach/svg.hpp"

namespace {

using namespace goldbach;

constexpr uint64_t kSieveMargin = 4096;

// stdout when path is "-"
class OutFile {
public:
    explicit OutFile(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        stream().flush();
        if (file_.is_open() && !file_) throw std::runtime_error("write failure");
    }
private:
    std::ofstream file_;
};

struct SeriesOptions {
    uint64_t n_max = 500000;
    std::string convention = "ordered";
    std::string backend = "bitset";
    unsigned threads = 0;
    std::string out = "-";

    Convention conv() const {
        return convention == "unordered" ? Convention::unordered : Convention::ordered;
    }
};

void add_series_flags(CLI::App* cmd, SeriesOptions& o) {
    cmd->add_option("--n-max", o.n_max, "upper end of the n range")->required();
    cmd->add_option("--convention", o.convention, "ordered | unordered")
        ->check(CLI::IsMember({"ordered", "unordered"}));
    cmd->add_option("--backend", o.backend, "bitset | fft")
        ->check(CLI::IsMember({"bitset", "fft"}));
    cmd->add_option("--threads", o.threads, "worker threads (0 = machine parallelism)");
    cmd->add_option("--out", o.out, "output file, - for stdout");
}

struct SequenceOptions {
    std::string family = "r";
    std::string strategy = "pseudorandom";
    uint64_t seed = 0;
    int32_t coprime_index = -1;          // <0: no coprime preference
    std::string composite_bias = "none";

    FamilyRequest request() const {
        FamilyRequest req;
        req.family = family[0];
        if (strategy == "min-odd") req.strategy = PickStrategy::min_odd;
        else if (strategy == "max-odd") req.strategy = PickStrategy::max_odd;
        else req.strategy = PickStrategy::pseudorandom;
        req.seed = seed;
        if (coprime_index >= 0) {
            CoprimePreference cp;
            cp.h = static_cast<uint32_t>(coprime_index);
            cp.bias = composite_bias == "max" ? CompositeBias::max : CompositeBias::none;
            req.coprime = cp;
        }
        return req;
    }
};

void add_sequence_flags(CLI::App* cmd, SequenceOptions& o) {
    cmd->add_option("--family", o.family, "r | s | t | u | v | w")
        ->required()
        ->check(CLI::IsMember({"r", "s", "t", "u", "v", "w"}));
    cmd->add_option("--strategy", o.strategy, "min-odd | max-odd | pseudorandom")
        ->check(CLI::IsMember({"min-odd", "max-odd", "pseudorandom"}));
    cmd->add_option("--seed", o.seed, "seed for the pseudorandom strategy");
    cmd->add_option("--coprime-index", o.coprime_index,
                    "h: prefer odds coprime to 3*5*...*p_h (off when absent)");
    cmd->add_option("--composite-bias", o.composite_bias,
                    "none | max (max prefers composite coprime candidates)")
        ->check(CLI::IsMember({"none", "max"}));
}

PairCountSeries compute_prime_series(const PrimeTable& table, const SeriesOptions& o) {
    auto ind = IndicatorBits::odd_primes(table, 2 * o.n_max);
    return o.backend == "fft" ? goldbach_series_convolution(ind, o.n_max, o.conv())
                              : goldbach_series_bitset(ind, o.n_max, o.conv(), o.threads);
}

int cmd_comet(const SeriesOptions& o) {
    PrimeTable table(2 * o.n_max + kSieveMargin);
    auto series = compute_prime_series(table, o);
    OutFile out(o.out);
    write_series_csv(out.stream(), series, nullptr);
    out.finish();
    return 0;
}

int cmd_classify(const SeriesOptions& o, uint32_t primorial_index) {
    PrimeTable table(2 * o.n_max + kSieveMargin);
    auto series = compute_prime_series(table, o);
    SigmaTable st = strata(primorial_index);
    OutFile out(o.out);
    write_series_csv(out.stream(), series, &st);
    out.finish();
    return 0;
}

int cmd_estimate(const SeriesOptions& o, uint64_t prime_limit) {
    PrimeTable table(2 * o.n_max + kSieveMargin);
    auto series = compute_prime_series(table, o);
    if (prime_limit == 0) prime_limit = std::min<uint64_t>(table.limit(), 1000000);
    HLConstant c = hl_constant(table, prime_limit);
    auto G = normalize(series, table);

    OutFile out(o.out);
    auto& os = out.stream();
    os << "n,g,h,G,trend,sylvester1871\n";
    char buf[256];
    for (uint64_t n = PairCountSeries::n_min; n <= o.n_max; ++n) {
        Rational S = sylvester_factor(table.odd_prime_factors(n));
        double h = hl_estimate(n, c, S);
        double trend = hl_estimate(n, c, Rational{1, 1});
        double s1871 = sylvester1871_estimate(n, c, S);
        std::snprintf(buf, sizeof buf, "%" PRIu64 ",%u,%.10g,%.10g,%.10g,%.10g\n", n,
                      series.counts[n - PairCountSeries::n_min],
                      h, G[n - PairCountSeries::n_min], trend, s1871);
        os << buf;
    }
    out.finish();
    return 0;
}

int cmd_sigma(uint32_t primorial_index, const std::string& out_path) {
    SigmaTable st = strata(primorial_index);
    OutFile out(out_path);
    auto& os = out.stream();
    os << "d,sigma,stratum,color\n";
    char buf[160];
    for (const auto& row : st.rows) {
        std::snprintf(buf, sizeof buf, "%" PRIu64 ",%" PRIu64 ",%u,%s\n", row.d, row.sigma,
                      row.stratum_rank, row.color.c_str());
        os << buf;
    }
    out.finish();
    std::cerr << "m = " << st.m << ", " << st.rows.size() << " even divisors, "
              << st.distinct_sigmas << " distinct sigma values\n";
    return 0;
}

int cmd_sequence(const SequenceOptions& seq_opts, uint64_t count, uint64_t limit,
                 const std::string& out_path) {
    FamilyRequest req = seq_opts.request();
    std::unique_ptr<PrimeTable> table;
    bool needs_table = req.family == 'r' || req.family == 's' ||
                       (req.coprime && req.coprime->bias == CompositeBias::max);
    if (needs_table) {
        uint64_t lim = limit ? limit + kSieveMargin
                             : std::max<uint64_t>(count * 32 + kSieveMargin, 1 << 20);
        table = std::make_unique<PrimeTable>(lim);
    }
    OddSequence s = limit ? generate_covering(req, limit, table.get())
                          : generate_sequence(req, count, table.get());
    OutFile out(out_path);
    auto& os = out.stream();
    for (uint64_t e : s.elements) os << e << "\n";
    out.finish();
    std::cerr << s.id << ": " << s.elements.size() << " elements, coverage "
              << s.coverage_limit << ", " << s.recipe.deviations.size() << " deviations\n";
    return 0;
}

int cmd_correlate(const SequenceOptions& seq_opts, const SeriesOptions& o) {
    FamilyRequest req = seq_opts.request();
    PrimeTable table(2 * o.n_max + kSieveMargin);
    OddSequence s = generate_covering(req, 2 * o.n_max - 3, &table);
    auto series = correlated_series(s, o.n_max, o.conv(),
                                    o.backend == "fft" ? Backend::fft : Backend::bitset,
                                    o.threads);
    OutFile out(o.out);
    write_series_csv(out.stream(), series, nullptr);
    out.finish();
    return 0;
}

int cmd_render(const std::vector<std::string>& inputs, const std::string& out_path,
               const std::string& palette, const std::string& column, int width, int height,
               double point_size, uint64_t n_lo, uint64_t n_hi) {
    // overlay shades for the second, third, ... input
    static const char* overlay[] = {"black", "grey", "lightgrey", "silver", "gainsboro"};
    std::vector<PlotLayer> layers;
    for (size_t i = 0; i < inputs.size(); ++i) {
        std::ifstream in(inputs[i], std::ios::binary);
        if (!in) throw std::runtime_error("cannot open input file: " + inputs[i]);
        CsvTable t = read_csv(in);
        size_t ncol = t.column("n");
        size_t ycol = t.column(column);
        size_t scol = SIZE_MAX;
        for (size_t c = 0; c < t.header.size(); ++c)
            if (t.header[c] == "stratum") scol = c;
        PlotLayer layer;
        layer.fallback_color = overlay[std::min(i, sizeof(overlay) / sizeof(*overlay) - 1)];
        layer.points.reserve(t.rows.size());
        for (const auto& row : t.rows) {
            PlotPoint p;
            p.n = row[ncol];
            p.y = row[ycol];
            if (i == 0 && scol != SIZE_MAX && !std::isnan(row[scol]))
                p.stratum = static_cast<uint32_t>(row[scol]);
            layer.points.push_back(p);
        }
        layers.push_back(std::move(layer));
    }
    PlotSpec spec;
    spec.palette_id = palette;
    spec.width = width;
    spec.height = height;
    spec.point_size = point_size;
    spec.n_lo = static_cast<double>(n_lo);
    spec.n_hi = static_cast<double>(n_hi);
    std::string svg = render_svg(layers, spec);
    OutFile out(out_path);
    out.stream() << svg;
    out.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldbach comet toolkit: pair counts, estimators, residue strata, "
                 "odd sequences, CSV and SVG emission"};
    app.require_subcommand(1);

    SeriesOptions comet_opts;
    auto* comet = app.add_subcommand("comet", "g(n) over [3, N] as CSV");
    add_series_flags(comet, comet_opts);

    SeriesOptions est_opts;
    uint64_t est_prime_limit = 0;
    auto* estimate = app.add_subcommand("estimate", "h(n), G(n) and overlays as CSV");
    add_series_flags(estimate, est_opts);
    estimate->add_option("--prime-limit", est_prime_limit,
                         "primes used for the constant c (0 = min(sieve, 1e6))");

    SeriesOptions cls_opts;
    uint32_t cls_h = 3;
    auto* classify_cmd = app.add_subcommand("classify", "g(n) with d/sigma/stratum columns");
    add_series_flags(classify_cmd, cls_opts);
    classify_cmd->add_option("--primorial-index", cls_h, "h, modulus = primorial(h)")
        ->required();

    uint32_t sig_h = 3;
    std::string sig_out = "-";
    auto* sigma_cmd = app.add_subcommand("sigma", "sigma table of a primorial modulus");
    sigma_cmd->add_option("--primorial-index", sig_h, "h, modulus = primorial(h)")->required();
    sigma_cmd->add_option("--out", sig_out, "output file, - for stdout");

    SequenceOptions seq_opts;
    uint64_t seq_count = 0, seq_limit = 0;
    std::string seq_out = "-";
    auto* sequence_cmd = app.add_subcommand("sequence", "generate an odd sequence family");
    add_sequence_flags(sequence_cmd, seq_opts);
    auto* count_opt = sequence_cmd->add_option("--count", seq_count, "number of elements");
    auto* limit_opt =
        sequence_cmd->add_option("--limit", seq_limit, "generate until coverage reaches this");
    count_opt->excludes(limit_opt);
    sequence_cmd->add_option("--out", seq_out, "output file, - for stdout");

    SequenceOptions cor_seq_opts;
    SeriesOptions cor_opts;
    auto* correlate = app.add_subcommand("correlate", "g_X(n) for a family as CSV");
    add_sequence_flags(correlate, cor_seq_opts);
    add_series_flags(correlate, cor_opts);

    std::vector<std::string> render_in;
    std::string render_out = "-", render_palette = "mono", render_column = "count";
    int render_w = 1200, render_h = 800;
    double render_ps = 1.0;
    uint64_t render_nlo = 0, render_nhi = 0;
    auto* render = app.add_subcommand("render", "CSV -> SVG scatter plot");
    render->add_option("--in", render_in, "input CSV (repeat to overlay; first on top)")
        ->required();
    render->add_option("--out", render_out, "output SVG, - for stdout");
    render->add_option("--palette", render_palette, "mono | m6 | m30 | m210 | m2310")
        ->check(CLI::IsMember({"mono", "m6", "m30", "m210", "m2310"}));
    render->add_option("--column", render_column, "y column to plot (default: count)");
    render->add_option("--width", render_w, "canvas width in px");
    render->add_option("--height", render_h, "canvas height in px");
    render->add_option("--point-size", render_ps, "marker radius in px");
    render->add_option("--n-min", render_nlo, "crop: smallest n");
    render->add_option("--n-max", render_nhi, "crop: largest n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(comet)) return cmd_comet(comet_opts);
        if (app.got_subcommand(estimate)) return cmd_estimate(est_opts, est_prime_limit);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(cls_opts, cls_h);
        if (app.got_subcommand(sigma_cmd)) return cmd_sigma(sig_h, sig_out);
        if (app.got_subcommand(sequence_cmd)) {
            if (seq_count == 0 && seq_limit == 0)
                throw std::invalid_argument("sequence: give --count or --limit");
            return cmd_sequence(seq_opts, seq_count, seq_limit, seq_out);
        }
        if (app.got_subcommand(correlate)) return cmd_correlate(cor_seq_opts, cor_opts);
        if (app.got_subcommand(render))
            return cmd_render(render_in, render_out, render_palette, render_column, render_w,
                              render_h, render_ps, render_nlo, render_nhi);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
