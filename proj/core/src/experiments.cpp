#include "umda/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "umda/rng.hpp"

namespace umda {
namespace experiments {

ParamRule ParamRule::parse(const std::string& text) {
    ParamRule r{text};
    r.evaluate(16);  // validate eagerly
    return r;
}

std::size_t ParamRule::evaluate(std::size_t n) const {
    const double nd = static_cast<double>(n);
    double coeff = 1.0;
    std::string body = spec;
    if (body.rfind("mul:", 0) == 0) {
        const auto second = body.find(':', 4);
        if (second == std::string::npos)
            throw std::invalid_argument("rule: expected mul:<a>:<base>");
        coeff = std::stod(body.substr(4, second - 4));
        body = body.substr(second + 1);
    }
    double v;
    if (body == "sqrt") {
        v = coeff * std::sqrt(nd);
    } else if (body == "log") {
        v = coeff * std::log(nd);
    } else if (body.rfind("const:", 0) == 0) {
        v = coeff * std::stod(body.substr(6));
    } else {
        throw std::invalid_argument("rule: unknown form '" + spec + "'");
    }
    const double up = std::ceil(v - 1e-12);
    if (!(up >= 1.0))
        throw std::invalid_argument("rule: '" + spec + "' evaluates below 1");
    return static_cast<std::size_t>(up);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    if (config.replicates < 1)
        throw std::invalid_argument("sweep: replicates must be >= 1");
    const FitnessFunction f = fitness_by_name(config.fitness);

    std::vector<SweepRow> rows(config.n_values.size() * config.replicates);
    std::vector<UmdaParams> params(rows.size());
    for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
        const std::size_t n = config.n_values[ni];
        UmdaParams p;
        p.n = n;
        p.lambda = config.lambda_rule.evaluate(n);
        p.mu = std::min(config.mu_rule.evaluate(n), p.lambda);
        p.margin = config.margin_mu_over_n
                       ? static_cast<double>(p.mu) / static_cast<double>(n)
                       : config.margin;
        p.max_generations = config.max_generations;
        for (std::size_t r = 0; r < config.replicates; ++r) {
            const std::size_t idx = ni * config.replicates + r;
            params[idx] = p;
            params[idx].seed = derive_seed(config.master_seed, n, r);
            rows[idx].n = n;
            rows[idx].replicate = r;
        }
        params[ni * config.replicates].validate();
    }

    const std::size_t jobs =
        std::max<std::size_t>(1, std::min(config.jobs, rows.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            rows[i].record = run(params[i], f).record;
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::pair<double, double> bootstrap_ci(const std::vector<double>& samples,
                                       std::size_t B, double level,
                                       std::uint64_t seed) {
    if (samples.empty())
        throw std::invalid_argument("bootstrap_ci: empty samples");
    if (!(level > 0.0 && level < 1.0) || B < 1)
        throw std::invalid_argument("bootstrap_ci: invalid level or B");
    Xoshiro256 rng(seed);
    std::vector<double> means(B);
    for (std::size_t b = 0; b < B; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i)
            s += samples[rng.below(samples.size())];
        means[b] = s / static_cast<double>(samples.size());
    }
    std::sort(means.begin(), means.end());
    auto percentile = [&](double q) {
        const double h = (static_cast<double>(B) - 1.0) * q;
        const std::size_t lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, B - 1);
        return means[lo] + (h - static_cast<double>(lo)) * (means[hi] - means[lo]);
    };
    const double alpha = (1.0 - level) / 2.0;
    return {percentile(alpha), percentile(1.0 - alpha)};
}

std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows,
                                  std::size_t bootstrap_samples, double level,
                                  std::uint64_t seed) {
    std::vector<SummaryRow> out;
    std::vector<std::size_t> sizes;
    for (const auto& row : rows)
        if (std::find(sizes.begin(), sizes.end(), row.n) == sizes.end())
            sizes.push_back(row.n);
    for (std::size_t n : sizes) {
        std::vector<double> hits;
        std::size_t total = 0;
        for (const auto& row : rows) {
            if (row.n != n) continue;
            ++total;
            if (row.record.hit_optimum)
                hits.push_back(
                    static_cast<double>(row.record.first_hit_evals));
        }
        SummaryRow s;
        s.n = n;
        s.success_rate =
            static_cast<double>(hits.size()) / static_cast<double>(total);
        if (!hits.empty()) {
            double sum = 0.0;
            for (double h : hits) sum += h;
            s.mean = sum / static_cast<double>(hits.size());
            auto [lo, hi] = bootstrap_ci(hits, bootstrap_samples, level,
                                         derive_seed(seed, n, 0x6273));
            s.ci_lo = lo;
            s.ci_hi = hi;
        }
        out.push_back(s);
    }
    return out;
}

namespace {

double growth(const std::string& name, double n) {
    if (name == "n*log(n)") return n * std::log(n);
    if (name == "n^1.5") return std::pow(n, 1.5);
    if (name == "n^2") return n * n;
    throw std::invalid_argument("fit_model: unknown model '" + name + "'");
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double num = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    if (va <= 0.0 || vb <= 0.0)
        throw std::invalid_argument("fit_model: degenerate data");
    return num / std::sqrt(va * vb);
}

}  // namespace

FitResult fit_model(const std::vector<double>& n_values,
                    const std::vector<double>& means, const std::string& name) {
    if (n_values.size() != means.size() || n_values.size() < 2)
        throw std::invalid_argument("fit_model: need >= 2 matched points");
    std::vector<double> g(n_values.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = growth(name, n_values[i]);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        num += means[i] * g[i];
        den += g[i] * g[i];
    }
    FitResult r;
    r.model = name;
    r.coefficient = num / den;
    std::vector<double> fitted(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) fitted[i] = r.coefficient * g[i];
    r.correlation = pearson(means, fitted);
    return r;
}

std::vector<FitResult> compare_models(const std::vector<SummaryRow>& summary) {
    if (summary.size() < 3)
        throw std::invalid_argument("compare_models: need >= 3 points");
    std::vector<double> ns, ys;
    for (const auto& s : summary) {
        ns.push_back(static_cast<double>(s.n));
        ys.push_back(s.mean);
    }
    std::vector<FitResult> fits = {fit_model(ns, ys, "n*log(n)"),
                                   fit_model(ns, ys, "n^1.5"),
                                   fit_model(ns, ys, "n^2")};
    std::sort(fits.begin(), fits.end(), [](const auto& a, const auto& b) {
        return a.correlation > b.correlation;
    });
    return fits;
}

void write_runs_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "# schema_version=1\n";
    os << "n,replicate,seed,hit,generations,samples_T,first_hit_evals\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.replicate << ',' << r.record.seed << ','
           << (r.record.hit_optimum ? 1 : 0) << ',' << r.record.generations
           << ',' << r.record.samples_T << ',' << r.record.first_hit_evals
           << '\n';
    }
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
    os << "# schema_version=1\n";
    os << "n,mean,ci_lo,ci_hi,success_rate\n";
    os << std::setprecision(17);
    for (const auto& r : rows)
        os << r.n << ',' << r.mean << ',' << r.ci_lo << ',' << r.ci_hi << ','
           << r.success_rate << '\n';
}

std::vector<SummaryRow> read_summary_csv(std::istream& is) {
    std::vector<SummaryRow> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0)
            continue;
        std::istringstream row(line);
        SummaryRow s;
        char comma;
        if (row >> s.n >> comma >> s.mean >> comma >> s.ci_lo >> comma >>
            s.ci_hi >> comma >> s.success_rate)
            out.push_back(s);
    }
    if (out.empty())
        throw std::invalid_argument("summary csv: no data rows");
    return out;
}

void write_fits_json(std::ostream& os, const std::vector<FitResult>& fits) {
    os << "{\n  \"schema_version\": 1,\n  \"fits\": [\n";
    for (std::size_t i = 0; i < fits.size(); ++i) {
        os << "    {\"model\": \"" << fits[i].model << "\", \"coefficient\": "
           << std::setprecision(10) << fits[i].coefficient
           << ", \"correlation\": " << fits[i].correlation << "}";
        os << (i + 1 < fits.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
}

void write_plot_svg(std::ostream& os, const std::vector<SummaryRow>& summary,
                    const std::vector<FitResult>& fits) {
    const double width = 720, height = 480;
    const double ml = 70, mr = 20, mt = 20, mb = 50;
    double xmax = 1, ymax = 1;
    for (const auto& s : summary) {
        xmax = std::max(xmax, static_cast<double>(s.n));
        ymax = std::max(ymax, s.ci_hi > 0 ? s.ci_hi : s.mean);
    }
    for (const auto& f : fits)
        ymax = std::max(ymax, f.coefficient * growth(f.model, xmax));
    ymax *= 1.05;
    auto px = [&](double n) {
        return ml + (width - ml - mr) * n / xmax;
    };
    auto py = [&](double y) {
        return height - mb - (height - mt - mb) * y / ymax;
    };
    os << "<!-- schema_version=1 -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
       << width - mr << "\" y2=\"" << height - mb
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
       << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (width / 2) << "\" y=\"" << height - 10
       << "\" text-anchor=\"middle\">n</text>\n";
    os << "<text x=\"15\" y=\"" << (height / 2)
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
       << (height / 2) << ")\">first-hit evaluations</text>\n";
    // fitted curves
    const char* colors[] = {"#1b9e77", "#d95f02", "#7570b3"};
    for (std::size_t fi = 0; fi < fits.size(); ++fi) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[fi % 3]
           << "\" points=\"";
        for (int i = 1; i <= 100; ++i) {
            const double n = xmax * i / 100.0;
            os << px(n) << ',' << py(fits[fi].coefficient * growth(fits[fi].model, n))
               << ' ';
        }
        os << "\"/>\n";
        os << "<text x=\"" << width - mr - 200 << "\" y=\""
           << mt + 18 * (fi + 1) << "\" fill=\"" << colors[fi % 3] << "\">"
           << fits[fi].model << " (r=" << std::setprecision(4)
           << fits[fi].correlation << ")</text>\n";
    }
    // data points with error bars
    for (const auto& s : summary) {
        const double x = px(static_cast<double>(s.n));
        os << "<line x1=\"" << x << "\" y1=\"" << py(s.ci_lo) << "\" x2=\""
           << x << "\" y2=\"" << py(s.ci_hi) << "\" stroke=\"black\"/>\n";
        os << "<circle cx=\"" << x << "\" cy=\"" << py(s.mean)
           << "\" r=\"3\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace experiments
}  // namespace umda
