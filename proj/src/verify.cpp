#include "biharm/verify.hpp"

#include "biharm/errors.hpp"
#include "biharm/grid_io.hpp"
#include "biharm/kernel.hpp"
#include "biharm/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace biharm {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

CheckReport start(TheoremId id, const std::string& name, double alpha, double beta = std::nan("")) {
    CheckReport r;
    r.theorem = id;
    r.function = name;
    r.alpha = alpha;
    r.beta = beta;
    return r;
}

CheckReport skip(CheckReport r, const std::string& why) {
    r.skipped = true;
    r.pass = r.within_band = true;
    r.notes = why;
    return r;
}

// max(a/b, b/a); infinite when exactly one side vanishes.
double two_sided(double a, double b) {
    if (a == 0.0 && b == 0.0) return 1.0;
    if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
    return std::max(a / b, b / a);
}

double ratio(double num, double den) {
    if (num == 0.0) return 0.0;
    return den == 0.0 ? std::numeric_limits<double>::infinity() : num / den;
}

bool finite(double v) { return std::isfinite(v); }

} // namespace

std::string to_string(TheoremId id) {
    switch (id) {
    case TheoremId::T1_2: return "T1_2";
    case TheoremId::T1_3i: return "T1_3i";
    case TheoremId::T1_3ii: return "T1_3ii";
    case TheoremId::T1_5: return "T1_5";
    case TheoremId::T1_6: return "T1_6";
    case TheoremId::T1_7: return "T1_7";
    case TheoremId::T1_8: return "T1_8";
    case TheoremId::T1_9a: return "T1_9a";
    case TheoremId::T1_9b: return "T1_9b";
    case TheoremId::T1_10: return "T1_10";
    case TheoremId::L2_2: return "L2_2";
    case TheoremId::P2_3: return "P2_3";
    }
    return "?";
}

bool is_degenerate(const GridFunction& f) {
    const double spread = sup_norm(f.without_mean());
    return spread == 0.0 || spread <= 1e-12 * sup_norm(f);
}

CheckReport check_characterization(const GridFunction& f, const std::string& name, double alpha) {
    CheckReport r = start(TheoremId::T1_2, name, alpha);
    if (is_degenerate(f)) return skip(r, "degenerate");
    const auto S = seminorm_heat(f, alpha);
    const auto P = seminorm_poisson(f, alpha);
    const auto N = seminorm_second_diff(f, alpha);
    r.observed_constant = std::max(two_sided(S.value, N.value), two_sided(P.value, N.value));
    r.boundary_flag = S.boundary_flag || P.boundary_flag || N.boundary_flag;
    r.within_band = finite(r.observed_constant) && r.observed_constant <= kRatioBand;
    r.pass = r.within_band && !r.boundary_flag;
    r.notes = "S=" + fmt(S.value) + ";S~=" + fmt(P.value) + ";N=" + fmt(N.value);
    return r;
}

CheckReport check_homogeneous(const GridFunction& f, const std::string& name, double alpha) {
    CheckReport r = start(TheoremId::T1_5, name, alpha);
    if (is_degenerate(f)) return skip(r, "degenerate");
    const GridFunction g = f.without_mean();
    const auto S = seminorm_heat(g, alpha);
    const auto N = seminorm_second_diff(g, alpha);
    r.observed_constant = two_sided(S.value, N.value);
    r.boundary_flag = S.boundary_flag || N.boundary_flag;
    r.within_band = finite(r.observed_constant) && r.observed_constant <= kRatioBand;
    r.pass = r.within_band && !r.boundary_flag;
    r.notes = "S=" + fmt(S.value) + ";N=" + fmt(N.value);
    return r;
}

CheckReport check_bessel(const GridFunction& f, const std::string& name, double alpha, double beta,
                         bool second) {
    CheckReport r = start(second ? TheoremId::T1_3ii : TheoremId::T1_3i, name, alpha, beta);
    if (is_degenerate(f)) return skip(r, "degenerate");
    const GridFunction J = apply(SymbolSpec(symbol::BesselPotential{beta}), f);
    double num = sup_norm(J), den = sup_norm(f);
    if (second) {
        const auto SJ = seminorm_heat(J, beta);
        num += SJ.value;
        r.boundary_flag = SJ.boundary_flag;
        r.notes = "S_b[Jf]=" + fmt(SJ.value);
    } else {
        const auto SJ = seminorm_heat(J, alpha + beta);
        const auto Sf = seminorm_heat(f, alpha);
        num += SJ.value;
        den += Sf.value;
        r.boundary_flag = SJ.boundary_flag || Sf.boundary_flag;
        r.notes = "S_a+b[Jf]=" + fmt(SJ.value) + ";S_a[f]=" + fmt(Sf.value);
    }
    r.observed_constant = ratio(num, den);
    r.within_band = finite(r.observed_constant);
    r.pass = r.within_band && !r.boundary_flag;
    return r;
}

CheckReport check_derivative_theorem(const GridFunction& f, const std::string& name, double alpha) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw DomainError("derivative theorem needs 1 < alpha <= 2, got " + std::to_string(alpha));
    CheckReport r = start(TheoremId::T1_6, name, alpha);
    if (is_degenerate(f)) return skip(r, "degenerate");
    const auto S = seminorm_heat(f, alpha);
    double sum = 0.0;
    bool boundary = S.boundary_flag;
    for (int i = 1; i <= f.spec().dim(); ++i) {
        const GridFunction d = apply(SymbolSpec(symbol::PartialDerivative{i, 1}), f);
        const auto Sd = seminorm_heat(d, alpha - 1.0);
        sum += Sd.value;
        boundary = boundary || Sd.boundary_flag;
    }
    r.observed_constant = two_sided(S.value, sum);
    r.boundary_flag = boundary;
    r.within_band = finite(r.observed_constant) && r.observed_constant <= kRatioBand;
    r.pass = r.within_band && !boundary;
    r.notes = "S_a[f]=" + fmt(S.value) + ";sum S_a-1[d_i f]=" + fmt(sum);
    return r;
}

CheckReport check_fractional(const GridFunction& f, const std::string& name, double alpha, double beta,
                             FractionalDirection direction) {
    const bool integral = direction == FractionalDirection::Integral;
    CheckReport r = start(integral ? TheoremId::T1_7 : TheoremId::T1_8, name, alpha, beta);
    if (!(alpha > 0.0 && beta > 0.0)) throw DomainError("fractional checks need alpha, beta > 0");
    if (!integral && !(beta < alpha))
        throw DomainError("Hoelder estimate needs 0 < beta < alpha");
    if (integral) require_zero_mean(f, "fractional integral check");
    if (is_degenerate(f)) return skip(r, "degenerate");

    const auto Sf = seminorm_heat(f, alpha);
    const GridFunction g =
        integral ? apply(SymbolSpec(symbol::FractionalIntegral{beta}, ZeroModePolicy::Forbid), f)
                 : apply(SymbolSpec(symbol::FractionalPower{beta}), f);
    const auto Sg = seminorm_heat(g, integral ? alpha + beta : alpha - beta);
    r.observed_constant = ratio(Sg.value, Sf.value);
    r.boundary_flag = Sf.boundary_flag || Sg.boundary_flag;
    r.within_band = finite(r.observed_constant);
    r.pass = r.within_band && !r.boundary_flag;
    r.notes = "S_a[f]=" + fmt(Sf.value) + ";S_target=" + fmt(Sg.value);

    if (!integral) {
        const double q = 0.25 * beta;
        if (q == std::floor(q)) {
            r.notes += ";round trip skipped (beta multiple of 4)";
        } else {
            // Power then Integral through the quadrature oracles, on mean-zero data.
            const GridFunction h = f.without_mean();
            const GridFunction back = gamma_quadrature_oracle(fractional_power_oracle(h, beta), beta, false);
            const double defect = sup_norm(back - h) / sup_norm(h);
            r.notes += ";round trip defect=" + fmt(defect);
            if (!(defect <= kRoundTripTolerance)) {
                r.pass = false;
                r.within_band = false;
                r.notes += " exceeds " + fmt(kRoundTripTolerance);
            }
        }
    }
    return r;
}

CheckReport check_riesz(const GridFunction& f, const std::string& name, double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw DomainError("Riesz check needs 0 < alpha <= 2, got " + std::to_string(alpha));
    const bool pre = alpha <= 1.0;
    CheckReport r = start(pre ? TheoremId::T1_9a : TheoremId::T1_9b, name, alpha);
    require_zero_mean(f, "Riesz check");
    if (is_degenerate(f)) return skip(r, "degenerate");

    const auto Sf = seminorm_heat(f, alpha);
    double worst = 0.0, gap = 0.0;
    bool boundary = Sf.boundary_flag;
    for (int i = 1; i <= f.spec().dim(); ++i) {
        const GridFunction a = apply(SymbolSpec(symbol::RieszPre{i}), f);
        const GridFunction b = apply(SymbolSpec(symbol::RieszPost{i}), f);
        gap = std::max(gap, sup_norm(a - b) / sup_norm(f));
        const auto SR = seminorm_heat(pre ? a : b, alpha);
        worst = std::max(worst, ratio(SR.value, Sf.value));
        boundary = boundary || SR.boundary_flag;
    }
    r.observed_constant = worst;
    r.boundary_flag = boundary;
    r.within_band = finite(worst) && worst <= kRatioBand && gap <= kRieszAgreement;
    r.pass = r.within_band && !boundary;
    r.notes = std::string(pre ? "d_i(Delta^2)^-1/4" : "(Delta^2)^-1/4 d_i") +
              ";orderings agree to " + fmt(gap);
    return r;
}

CheckReport check_laplace_multiplier(const GridFunction& f, const std::string& name, double alpha,
                                     const StepProfile& a, const std::string& profile_name) {
    CheckReport r = start(TheoremId::T1_10, name + ":" + profile_name, alpha);
    if (is_degenerate(f)) return skip(r, "degenerate");
    const double bound = a.sup_abs();
    const SymbolSpec m(symbol::LaplaceMultiplier{a});
    const GridFunction mf = apply(m, f);

    const GridSpec& spec = f.spec();
    double symbol_sup = 0.0;
    for (std::size_t i = 0; i < spec.size(); ++i)
        symbol_sup = std::max(symbol_sup, std::abs(symbol_value(m, spec.frequency(i), spec.dim())));
    const double l2 = ratio(l2_norm(mf), l2_norm(f));

    const auto Sf = seminorm_heat(f, alpha);
    const auto Sm = seminorm_heat(mf, alpha);
    r.observed_constant = ratio(Sm.value, Sf.value);
    r.boundary_flag = Sf.boundary_flag || Sm.boundary_flag;
    const bool l2_ok = l2 <= bound * (1.0 + kL2Excess);
    const bool symbol_ok = symbol_sup <= bound + 1e-12;
    r.within_band = finite(r.observed_constant) && r.observed_constant <= kRatioBand * bound && l2_ok && symbol_ok;
    r.pass = r.within_band && !r.boundary_flag;
    if (bound == 0.0) r.pass = r.within_band = r.observed_constant == 0.0 && l2_ok && symbol_ok;
    r.notes = "L2 ratio=" + fmt(l2) + ";sup|m|=" + fmt(symbol_sup) + ";|a|=" + fmt(bound);
    if (!l2_ok) r.notes += ";L2 bound violated";
    if (!symbol_ok) r.notes += ";symbol bound violated";
    return r;
}

CheckReport check_raise_order(const GridFunction& f, const std::string& name, double alpha) {
    CheckReport r = start(TheoremId::P2_3, name, alpha);
    if (is_degenerate(f)) return skip(r, "degenerate");
    const int k = heat_order(alpha);
    const auto Vk = seminorm_heat(f, alpha);
    const auto Vk1 = seminorm_heat(f, alpha, {}, k + 1);
    r.observed_constant = ratio(Vk1.value, Vk.value);
    r.boundary_flag = Vk.boundary_flag || Vk1.boundary_flag;
    r.within_band = finite(r.observed_constant);
    r.pass = r.within_band && !r.boundary_flag;
    r.notes = "k=" + std::to_string(k) + ";V_k=" + fmt(Vk.value) + ";V_k+1=" + fmt(Vk1.value);
    return r;
}

CheckReport check_kernel_decay(int dim, int l, int k, int quad_nodes) {
    CheckReport r = start(TheoremId::L2_2,
                          "W_dim" + std::to_string(dim) + "_l" + std::to_string(l) + "_k" + std::to_string(k),
                          std::nan(""));
    KernelQuadrature quad;
    quad.nodes = quad_nodes;
    // The polynomial weight of the derivative bound pushes the peak of the
    // ratio to r ~ 15, so derivative profiles need a longer window.
    const bool plain = l == 0 && k == 0;
    const KernelProfile p = make_profile(dim, l, k, plain ? 10.0 : 25.0, plain ? 401 : 801, 1.2, quad);
    const DecayCheck d = check_decay(p);
    r.observed_constant = d.observed_C;
    r.pass = r.within_band = d.pass;
    r.boundary_flag = !d.pass;
    r.notes = "c'=c/2;argmax r=" + fmt(d.argmax_r) + ";nodes=" + std::to_string(quad_nodes);
    return r;
}

// ---------------------------------------------------------------------------
// Suite

SuiteConfig SuiteConfig::default_suite() { return SuiteConfig{}; }

SuiteConfig SuiteConfig::full_suite() {
    SuiteConfig c;
    c.levels = {256, 512, 1024};
    c.alphas = {0.2, 0.3, 0.5, 0.7, 1.0, 1.2, 1.5, 1.8};
    c.betas = {0.25, 0.5, 1.0, 2.0, 3.0};
    return c;
}

namespace {

// One check evaluated at level index `level` of the suite.
struct Job {
    std::string context;
    std::function<CheckReport(std::size_t level)> run;
};

CheckReport merge(const std::vector<CheckReport>& rows, const std::string& level_note) {
    CheckReport out = rows.back();
    bool all_pass = true, in_band = true, boundary = false, skipped = true;
    double drift = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        all_pass = all_pass && rows[i].pass;
        in_band = in_band && rows[i].within_band;
        boundary = boundary || rows[i].boundary_flag;
        skipped = skipped && rows[i].skipped;
        if (i == 0) continue;
        const double a = rows[i - 1].observed_constant, b = rows[i].observed_constant;
        double d = 0.0;
        if (!(a == b)) d = (a == 0.0 || !finite(a) || !finite(b)) ? std::numeric_limits<double>::infinity()
                                                                : std::abs(b - a) / std::abs(a);
        drift = std::max(drift, d);
    }
    out.boundary_flag = boundary;
    out.skipped = skipped;
    out.drift = skipped ? 0.0 : drift;
    out.pass = skipped || (all_pass && drift <= kDriftBand);
    out.within_band = skipped || (in_band && drift <= kDriftBand);
    out.notes += (out.notes.empty() ? "" : ";") + level_note;
    if (!skipped && drift > kDriftBand) out.notes += ";drift above band";
    return out;
}

int level_for_dim(int level, int dim) { return dim == 1 ? level : std::max(32, level / 4); }

std::vector<CorpusFunction> selected(int dim, const std::vector<std::string>& names) {
    std::vector<CorpusFunction> out;
    for (const CorpusFunction& c : default_corpus(dim))
        for (const std::string& n : names)
            if (n == "all" || n == c.name) {
                out.push_back(c);
                break;
            }
    return out;
}

struct Profiles {
    std::string name;
    StepProfile profile;
};

std::vector<Profiles> suite_profiles() {
    return {{"ones10", StepProfile({0.0, 10.0}, {1.0})},
            {"alternating", StepProfile({0.0, 1.0, 2.0}, {1.0, -1.0})}};
}

void run_jobs(const std::vector<Job>& jobs, std::size_t levels, int threads,
              std::vector<std::vector<CheckReport>>& out) {
    out.assign(jobs.size(), std::vector<CheckReport>(levels));
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            try {
                for (std::size_t l = 0; l < levels; ++l) out[j][l] = jobs[j].run(l);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(threads, int(jobs.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    // Report the first failure in job order, independent of scheduling.
    for (std::size_t j = 0; j < jobs.size(); ++j)
        if (errors[j]) {
            try {
                std::rethrow_exception(errors[j]);
            } catch (...) {
                rethrow_with_context(jobs[j].context);
            }
        }
}

} // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
    if (config.levels.size() < 2)
        throw ConfigError("levels: at least two grid levels are needed for refinement drift (got " +
                          std::to_string(config.levels.size()) + ")");
    for (std::size_t i = 1; i < config.levels.size(); ++i)
        if (config.levels[i] <= config.levels[i - 1])
            throw ConfigError("levels: must increase strictly");
    for (const std::string& n : config.functions) {
        if (n == "all") continue;
        bool known = false;
        for (int dim : {1, 2})
            for (const CorpusFunction& c : default_corpus(dim)) known = known || c.name == n;
        if (!known) throw ConfigError("functions: no corpus entry named '" + n + "'");
    }
    const double L = config.side_length > 0.0 ? config.side_length : default_side_length();

    std::vector<Job> jobs;
    std::string level_note = "N=";
    for (std::size_t i = 0; i < config.levels.size(); ++i)
        level_note += (i ? "/" : "") + std::to_string(config.levels[i]);

    // Grids and corpus samples are built once per (dim, level) and shared read-only.
    using Samples = std::vector<std::pair<CorpusFunction, GridFunction>>;
    std::vector<std::vector<Samples>> samples(3);
    for (int dim : {1, 2}) {
        if (dim == 2 && !config.include_2d) continue;
        const auto chosen = selected(dim, config.functions);
        for (int level : config.levels) {
            const GridSpec spec(dim, level_for_dim(level, dim), L);
            Samples s;
            for (const CorpusFunction& c : chosen) s.emplace_back(c, build(c, spec));
            samples[std::size_t(dim)].push_back(std::move(s));
        }
    }

    auto add = [&](int dim, std::size_t index, const std::string& what,
                   std::function<CheckReport(const GridFunction&, const std::string&)> fn) {
        const std::string name = samples[std::size_t(dim)][0][index].first.name;
        jobs.push_back({what + " " + name, [&samples, dim, index, fn, name](std::size_t level) {
                            return fn(samples[std::size_t(dim)][level][index].second, name);
                        }});
    };

    for (int dim : {1, 2}) {
        if (samples[std::size_t(dim)].empty()) continue;
        const std::size_t count = samples[std::size_t(dim)][0].size();
        for (std::size_t idx = 0; idx < count; ++idx) {
            for (double a : config.alphas) {
                const std::string at = " alpha=" + fmt(a);
                if (a > 0.0 && a < 2.0) {
                    add(dim, idx, "T1_2" + at, [a](const GridFunction& f, const std::string& n) {
                        return check_characterization(f, n, a);
                    });
                    add(dim, idx, "T1_5" + at, [a](const GridFunction& f, const std::string& n) {
                        return check_homogeneous(f, n, a);
                    });
                }
                if (a > 1.0 && a <= 2.0)
                    add(dim, idx, "T1_6" + at, [a](const GridFunction& f, const std::string& n) {
                        return check_derivative_theorem(f, n, a);
                    });
                if (a <= 2.0)
                    add(dim, idx, "T1_9" + at, [a](const GridFunction& f, const std::string& n) {
                        return check_riesz(f.without_mean(), n, a);
                    });
                if (dim == 2) continue;

                add(dim, idx, "P2_3" + at, [a](const GridFunction& f, const std::string& n) {
                    return check_raise_order(f, n, a);
                });
                for (const Profiles& p : suite_profiles())
                    add(dim, idx, "T1_10" + at, [a, p](const GridFunction& f, const std::string& n) {
                        return check_laplace_multiplier(f, n, a, p.profile, p.name);
                    });
                for (double b : config.betas) {
                    const std::string ab = at + " beta=" + fmt(b);
                    add(dim, idx, "T1_3i" + ab, [a, b](const GridFunction& f, const std::string& n) {
                        return check_bessel(f, n, a, b, false);
                    });
                    add(dim, idx, "T1_3ii" + ab, [a, b](const GridFunction& f, const std::string& n) {
                        return check_bessel(f, n, a, b, true);
                    });
                    add(dim, idx, "T1_7" + ab, [a, b](const GridFunction& f, const std::string& n) {
                        return check_fractional(f.without_mean(), n, a, b, FractionalDirection::Integral);
                    });
                    if (b < a)
                        add(dim, idx, "T1_8" + ab, [a, b](const GridFunction& f, const std::string& n) {
                            return check_fractional(f, n, a, b, FractionalDirection::Power);
                        });
                }
            }
        }
    }

    std::vector<std::vector<CheckReport>> grid_rows;
    run_jobs(jobs, config.levels.size(), config.jobs, grid_rows);
    std::vector<CheckReport> report;
    for (const auto& rows : grid_rows) report.push_back(merge(rows, level_note));

    // A sup pinned to the end of its scan is the expected outcome when alpha
    // exceeds the function's designed regularity: f is outside the theorem's
    // hypothesis and the flag is the evidence of that. Such rows are noted and
    // skipped; rows outside their band still fail.
    std::map<std::string, double> nominal;
    for (int dim : {1, 2})
        for (const CorpusFunction& c : default_corpus(dim))
            if (c.nominal_alpha) nominal[c.name] = *c.nominal_alpha;
    for (CheckReport& r : report) {
        const auto it = nominal.find(r.function.substr(0, r.function.find(':')));
        if (r.pass || !r.within_band || !r.boundary_flag || it == nominal.end() || !(r.alpha > it->second))
            continue;
        r.skipped = true;
        r.pass = true;
        r.notes = "alpha above nominal regularity " + fmt(it->second) +
                  ", boundary-attained sup is non-membership evidence;" + r.notes;
    }

    if (config.include_kernel && !config.functions.empty()) {
        // Kernel rows refine the quadrature instead of the grid.
        struct KernelCase {
            int dim, l, k;
            std::vector<int> nodes;
        };
        const std::vector<KernelCase> cases{{1, 0, 0, {1024, 2048}}, {1, 1, 0, {1024, 2048}},
                                            {1, 0, 1, {1024, 2048}}, {1, 1, 1, {1024, 2048}},
                                            {2, 0, 0, {512, 1024}}};
        std::vector<Job> kjobs;
        for (const KernelCase& c : cases)
            kjobs.push_back({"L2_2 dim=" + std::to_string(c.dim), [c](std::size_t level) {
                                 return check_kernel_decay(c.dim, c.l, c.k, c.nodes[level]);
                             }});
        std::vector<std::vector<CheckReport>> krows;
        run_jobs(kjobs, 2, config.jobs, krows);
        for (const auto& rows : krows) report.push_back(merge(rows, "quadrature refined"));
    }

    auto key = [](const CheckReport& r) {
        auto num = [](double v) { return std::isnan(v) ? -1.0 : v; };
        return std::make_tuple(int(r.theorem), r.function, num(r.alpha), num(r.beta));
    };
    std::stable_sort(report.begin(), report.end(),
                     [&](const CheckReport& a, const CheckReport& b) { return key(a) < key(b); });
    return report;
}

std::string report_csv(const std::vector<CheckReport>& rows) {
    std::ostringstream os;
    os << "theorem_id,function,alpha,beta,observed_constant,drift,boundary_flag,pass,notes\n";
    auto opt = [](double v) { return std::isnan(v) ? std::string() : format_real(v); };
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    for (const CheckReport& r : rows) {
        os << to_string(r.theorem) << ',' << quote(r.function) << ',' << opt(r.alpha) << ','
           << opt(r.beta) << ',' << format_real(r.observed_constant) << ',' << opt(r.drift) << ','
           << (r.boundary_flag ? "true" : "false") << ',' << (r.pass ? "true" : "false") << ','
           << quote(r.skipped ? "skipped:" + r.notes : r.notes) << '\n';
    }
    return os.str();
}

bool all_pass(const std::vector<CheckReport>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckReport& r) { return r.pass; });
}

} // namespace biharm
