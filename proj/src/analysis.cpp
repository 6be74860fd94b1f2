#include "pb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <tuple>

#include "pb/constants.hpp"
#include "pb/grid.hpp"
#include "pb/numeric_core.hpp"
#include "pb/parallel.hpp"
#include "pb/polya.hpp"

namespace pb {

namespace {

void require_range(NRange range, int lo, int hi) {
    if (range.lo < lo || range.hi > hi || range.lo > range.hi)
        throw DomainError("n", "n-range must lie within [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

double root_n(int n) { return std::sqrt(static_cast<double>(n)); }

/// r(x) = ]nx - sqrt(n)[, or -1 on the zero branch.
long long r_of(int n, double x) {
    const long long r = strict_floor_bracket(n * x - root_n(n)).value;
    return r < 0 ? -1 : r;
}

double f_n_c_unchecked(int n, double x, double c) {
    const long long r = r_of(n, x);
    if (r < 0) return 0.0;
    return binomial(n - 1, static_cast<int>(r)) * factorial_ratio(x, static_cast<int>(r), n, c);
}

double lower_tail_from(const Pmf& dist, int n, double x) {
    const double a = n * x - root_n(n);
    const double eps = default_snap_eps(a);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k)
        if (a - k > eps) sum += (x - static_cast<double>(k) / n) * dist[k];
    return sum;
}

double upper_tail_from(const Pmf& dist, int n, double x) {
    const double root = root_n(n);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double a = (k - n * x) - root;
        if (a > default_snap_eps(k - n * x)) sum += (static_cast<double>(k) / n - x) * dist[k];
    }
    return sum;
}

/// Uniform c grid from c_lo to c_hi (both included); an exact 0 stays +0.0.
std::vector<double> c_grid(double c_lo, double c_hi, int samples) {
    std::vector<double> out;
    if (samples <= 1 || c_lo == c_hi) return {c_hi == 0.0 ? 0.0 : c_hi};
    out.reserve(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double t = static_cast<double>(j) / (samples - 1);
        double c = j == samples - 1 ? c_hi : c_lo + (c_hi - c_lo) * t;
        if (c == 0.0) c = 0.0;
        out.push_back(c);
    }
    return out;
}

/// Min-margin accumulator with lexicographic (n, x) tie-break: the first
/// sample (in sweep order) attaining the minimum wins.
struct MarginTracker {
    double worst = std::numeric_limits<double>::infinity();
    Witness witness;
    long long samples = 0;
    long long violations = 0;

    void observe(double margin, bool violation, Witness w) {
        ++samples;
        if (violation) ++violations;
        if (margin < worst) {
            worst = margin;
            witness = w;
        }
    }

    void merge(const MarginTracker& other) {
        samples += other.samples;
        violations += other.violations;
        if (other.worst < worst) {
            worst = other.worst;
            witness = other.witness;
        }
    }

    VerificationReport finish(std::string claim_id, double tolerance) const {
        VerificationReport report;
        report.claim_id = std::move(claim_id);
        report.tolerance = tolerance;
        report.worst_margin = samples > 0 ? worst : 0.0;
        report.witness = witness;
        report.samples_checked = samples;
        report.violations = violations;
        report.passed = violations == 0;
        return report;
    }
};

/// Runs `cell(n, x)` over every (n, grid x) pair, in parallel, and merges the
/// trackers in (n, x) order.
template <class Cell>
MarginTracker sweep(NRange range, const GridSpec& grid, RunOptions options, Cell&& cell) {
    struct Row {
        int n;
        std::vector<double> xs;
    };
    std::vector<Row> rows;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (int n = range.lo; n <= range.hi; ++n) {
        rows.push_back({n, build_x_grid(grid, n)});
        for (std::size_t i = 0; i < rows.back().xs.size(); ++i) cells.emplace_back(rows.size() - 1, i);
    }
    const auto partial = parallel_map<MarginTracker>(cells.size(), options.workers, [&](std::size_t idx) {
        const auto [row, i] = cells[idx];
        MarginTracker t;
        cell(rows[row].n, rows[row].xs[i], t);
        return t;
    });
    MarginTracker total;
    for (const auto& t : partial) total.merge(t);
    return total;
}

struct Best {
    double value = -std::numeric_limits<double>::infinity();
    double x = 0.0;

    void offer(double v, double at) {
        if (v > value || (v == value && at < x)) {
            value = v;
            x = at;
        }
    }
};

/// Max of `eval` over sorted `xs` restricted to `keep`, then golden-section
/// polish around every local maximum of each smooth piece (pieces are runs of
/// equal `piece_key`). Evaluated points are mirror-snapped so re-evaluation
/// at the returned x is bit-exact.
Best piecewise_sup(const std::vector<double>& xs, const std::function<double(double)>& eval,
                   const std::function<long long(double)>& piece_key, const std::function<bool(double)>& keep) {
    std::vector<double> px;
    std::vector<double> values;
    std::vector<long long> keys;
    for (double x : xs) {
        if (!keep(x)) continue;
        px.push_back(x);
        values.push_back(eval(x));
        keys.push_back(piece_key(x));
    }
    Best best;
    for (std::size_t i = 0; i < px.size(); ++i) best.offer(values[i], px[i]);

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t i = 0; i < px.size(); ++i) {
        const bool has_left = i > 0 && keys[i - 1] == keys[i];
        const bool has_right = i + 1 < px.size() && keys[i + 1] == keys[i];
        if (!has_left && !has_right) continue;
        if (has_left && values[i - 1] > values[i]) continue;
        if (has_right && values[i + 1] > values[i]) continue;
        const bool strict = (has_left && values[i] > values[i - 1]) || (has_right && values[i] > values[i + 1]);
        if (!strict) continue;

        double lo = has_left ? px[i - 1] : px[i];
        double hi = has_right ? px[i + 1] : px[i];
        auto probe = [&](double x) {
            const double s = mirror_snap(std::clamp(x, lo, hi));
            if (!keep(s) || piece_key(s) != keys[i]) return -std::numeric_limits<double>::infinity();
            const double v = eval(s);
            best.offer(v, s);
            return v;
        };
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = probe(x1), f2 = probe(x2);
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
            if (f1 >= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = probe(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = probe(x2);
            }
        }
    }
    return best;
}

long long sikkema_piece_key(int n, double x, CMode mode) {
    const long long left = r_of(n, x) + 1;
    const long long right = r_of(n, 1.0 - x) + 1;
    const long long side = mode == CMode::r_n && x > 0.5 ? 1 : 0;
    return (left * (n + 2) + right) * 2 + side;
}

} // namespace

double c_of(CMode mode, int n, double x) {
    return mode == CMode::zero ? 0.0 : CProfile::r_n().at(n, x);
}

double f_n_c(int n, double x, double c) {
    if (n < 2) throw DomainError("n", "F_n^c requires n > 1");
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x", "x must lie in [0,1]");
    validate(PolyaParams{n, x, 1.0 - x, c});
    return f_n_c_unchecked(n, x, c);
}

double sikkema_function(int n, double x, CMode mode) {
    const double c = c_of(mode, n, x);
    return 1.0 + root_n(n) * (f_n_c(n, x, c) + f_n_c(n, 1.0 - x, c));
}

double sikkema_bracket_function(int n, double x) {
    if (n < 1) throw DomainError("n", "n must be >= 1");
    const Pmf dist = pmf(PolyaParams{n, x, 1.0 - x, 0.0});
    const double root = root_n(n);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double lambda = std::abs(x - static_cast<double>(k) / n) * root;
        sum += static_cast<double>(1 + strict_floor_bracket(lambda).value) * dist[k];
    }
    return sum;
}

double lower_tail_sum(int n, double x, double c) {
    return lower_tail_from(pmf(PolyaParams{n, x, 1.0 - x, c}), n, x);
}

double upper_tail_sum(int n, double x, double c) {
    return upper_tail_from(pmf(PolyaParams{n, x, 1.0 - x, c}), n, x);
}

ScanReport scan_sup(NRange range, CMode mode, const GridSpec& grid, RunOptions options) {
    require_range(range, 2, 200);
    grid.validate(1000);

    const auto rows = parallel_map<PerNSup>(static_cast<std::size_t>(range.count()), options.workers,
                                            [&](std::size_t i) {
        const int n = range.lo + static_cast<int>(i);
        const Best best = piecewise_sup(
            build_x_grid(grid, n), [&](double x) { return sikkema_function(n, x, mode); },
            [&](double x) { return sikkema_piece_key(n, x, mode); }, [](double) { return true; });
        return PerNSup{n, best.value, best.x};
    });

    ScanReport report;
    report.quantity = mode == CMode::zero ? "sikkema/zero" : "sikkema/rn";
    report.grid = grid;
    report.per_n = rows;
    report.sup = -std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        if (row.sup > report.sup) {
            report.sup = row.sup;
            report.argmax_x = row.argmax_x;
            report.argmax_n = row.n;
        }
    }
    return report;
}

ScanReport scan_popoviciu(const FunctionSpec& f, NRange range, OperatorKind op, const GridSpec& grid,
                          int omega_resolution, RunOptions options) {
    require_range(range, op == OperatorKind::r_n ? 2 : 1, 200);
    const auto rows = parallel_map<ScanReport>(static_cast<std::size_t>(range.count()), options.workers,
                                               [&](std::size_t i) {
        return popoviciu_ratio(f, range.lo + static_cast<int>(i), grid, op, omega_resolution);
    });

    ScanReport report;
    report.quantity = rows.front().quantity;
    report.grid = grid;
    report.sup = -std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        report.per_n.push_back(row.per_n.front());
        if (row.sup > report.sup) {
            report.sup = row.sup;
            report.argmax_x = row.argmax_x;
            report.argmax_n = row.argmax_n;
        }
    }
    return report;
}

std::vector<CurvePoint> sikkema_curve(NRange range, CMode mode, const GridSpec& grid, RunOptions options) {
    require_range(range, 2, 200);
    grid.validate();
    const auto rows = parallel_map<std::vector<CurvePoint>>(
        static_cast<std::size_t>(range.count()), options.workers, [&](std::size_t i) {
            const int n = range.lo + static_cast<int>(i);
            std::vector<CurvePoint> out;
            for (double x : build_x_grid(grid, n)) out.push_back({n, x, sikkema_function(n, x, mode)});
            return out;
        });
    std::vector<CurvePoint> all;
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    return all;
}

VerificationReport verify_lemma_claim(NRange range, const GridSpec& grid, int c_samples, RunOptions options) {
    require_range(range, 2, 200);
    grid.validate();
    if (c_samples < 2) throw DomainError("c-samples", "need at least 2 c samples");

    const MarginTracker total = sweep(range, grid, options, [&](int n, double x, MarginTracker& t) {
        const long long r_max = snapped_floor(n * x - root_n(n));
        if (r_max < 0) return;
        const double x_complement = 1.0 - x;
        const double c_min = -std::min(x, x_complement) / (n - 1);
        for (double c : c_grid(c_min, 0.0, c_samples)) {
            for (int r = 0; r <= r_max; ++r) {
                const double lhs = factorial_ratio(x, x_complement, r, n, c);
                const double rhs = power_product(x, r + 1, x_complement, n - r);
                const double margin = rhs - lhs;
                const bool violation =
                    margin < -kLemmaTolerance || (c < -kLemmaStrictCutoff && !(margin > 0.0));
                t.observe(margin, violation, Witness{n, x, c, r});
            }
        }
    });
    return total.finish("lemma_rising_factorial", kLemmaTolerance);
}

VerificationReport verify_kozniewska(NRange range, const GridSpec& grid, CSweep sweep_mode, int c_samples,
                                     RunOptions options) {
    require_range(range, 2, 200);
    grid.validate();
    if (sweep_mode == CSweep::uniform && c_samples < 2)
        throw DomainError("c-samples", "need at least 2 c samples");

    const MarginTracker total = sweep(range, grid, options, [&](int n, double x, MarginTracker& t) {
        const double c_min = -std::min(x, 1.0 - x) / (n - 1);
        std::vector<double> cs;
        switch (sweep_mode) {
            case CSweep::zero: cs = {0.0}; break;
            case CSweep::r_n: cs = {c_min == 0.0 ? 0.0 : c_min}; break;
            case CSweep::uniform: cs = c_grid(c_min, 0.0, c_samples); break;
        }
        for (double c : cs) {
            const PolyaParams params{n, x, 1.0 - x, c};
            const Pmf dist = pmf(params);
            auto check = [&](double closed, double direct, int r) {
                const double diff = std::abs(closed - direct);
                t.observe(-diff, diff > kIdentityTolerance, Witness{n, x, c, r});
            };
            double prefix = 0.0;
            for (int r = 0; r <= n - 1; ++r) {
                prefix += (x - static_cast<double>(r) / n) * dist[r];
                check(truncated_first_moment(params, r), prefix, r);
            }
            check(f_n_c(n, x, c), lower_tail_from(dist, n, x), -1);
            check(f_n_c(n, 1.0 - x, c), upper_tail_from(dist, n, x), -2);
        }
    });
    auto report = total.finish("kozniewska_identity", kIdentityTolerance);
    // r = -1 / -2 in the witness mark the lower-tail / reflected upper-tail checks.
    if (report.witness.r && *report.witness.r < 0) report.witness.r.reset();
    return report;
}

VerificationReport verify_f_dominance(NRange range, const GridSpec& grid, RunOptions options) {
    require_range(range, 2, 200);
    grid.validate();
    const MarginTracker total = sweep(range, grid, options, [&](int n, double x, MarginTracker& t) {
        const double c = c_of(CMode::r_n, n, x);
        const double margin = f_n_c(n, x, 0.0) - f_n_c(n, x, c);
        t.observe(margin, margin < -kLemmaTolerance, Witness{n, x, c, std::nullopt});
    });
    return total.finish("f_dominance", kLemmaTolerance);
}

VerificationReport n6_case_check(const GridSpec& grid) {
    grid.validate(1000);
    constexpr int n = 6;
    const double s6 = 1.0 / std::sqrt(6.0);
    const auto xs = build_x_grid(grid, n);
    auto f_rn = [](double x) { return f_n_c(n, x, c_of(CMode::r_n, n, x)); };
    auto key = [&](double x) { return sikkema_piece_key(n, x, CMode::r_n); };

    VerificationReport report;
    report.claim_id = "n6_case";
    report.tolerance = kPaperConstantTolerance;
    report.worst_margin = std::numeric_limits<double>::infinity();

    auto record = [&](std::string name, const Best& best, double bound, bool passed) {
        const double margin = bound - best.value;
        report.details.push_back({std::move(name), best.value, bound, passed});
        ++report.samples_checked;
        if (!passed) ++report.violations;
        if (margin < report.worst_margin) {
            report.worst_margin = margin;
            report.witness = Witness{n, best.x, c_of(CMode::r_n, n, best.x), static_cast<int>(r_of(n, best.x))};
        }
    };

    const Best first = piecewise_sup(xs, f_rn, key, [&](double x) { return x > s6 && x <= 0.5; });
    record("sup F on (1/sqrt6, 1/2]", first, 0.0072168, first.value <= 0.0072168);

    // F must vanish identically here; max |F| is compared against 0 exactly.
    Best zero_band;
    for (double x : xs)
        if (x > 0.5 && x <= s6 + 1.0 / 6.0) zero_band.offer(std::abs(f_rn(x)), x);
    record("max |F| on (1/2, 1/sqrt6 + 1/6]", zero_band, 0.0, zero_band.value == 0.0);

    for (int k = 1; k <= 3; ++k) {
        const double lo = s6 + k / 6.0;
        const double hi = std::min(1.0, s6 + (k + 1) / 6.0);
        const Best piece = piecewise_sup(xs, f_rn, key, [&](double x) { return x > lo && x <= hi; });
        record("sup F on (1/sqrt6 + " + std::to_string(k) + "/6, " +
                   (k == 3 ? std::string("1]") : "1/sqrt6 + " + std::to_string(k + 1) + "/6]"),
               piece, constants::kN6FBound, piece.value <= constants::kN6FBound + kPaperConstantTolerance);
    }

    const Best global = piecewise_sup(xs, f_rn, key, [](double) { return true; });
    record("sup F on [0,1]", global, constants::kN6FBound,
           global.value <= constants::kN6FBound + kPaperConstantTolerance);

    const Best sik = piecewise_sup(
        xs, [](double x) { return sikkema_function(n, x, CMode::r_n); }, key, [](double) { return true; });
    record("sup 1 + sqrt6 (F(x) + F(1-x))", sik, constants::kN6SikkemaBound,
           sik.value <= constants::kN6SikkemaBound + kPaperConstantTolerance);

    report.passed = report.violations == 0;
    return report;
}

VerificationReport conjecture_scan(NRange range, const GridSpec& grid, int c_grid_size, double c_max,
                                   RunOptions options) {
    require_range(range, 2, 200);
    grid.validate();
    if (c_grid_size < 2) throw DomainError("c-grid", "c grid needs at least 2 points");
    if (!(c_max >= 0.0) || !std::isfinite(c_max)) throw DomainError("c-max", "c_max must be finite and >= 0");

    const MarginTracker total = sweep(range, grid, options, [&](int n, double x, MarginTracker& t) {
        const double x_complement = 1.0 - x;
        const double m = std::min(x, x_complement);
        if (m == 0.0) return;
        const long long r_max = snapped_floor(n * x - root_n(n));
        if (r_max < 0) return;
        const auto cs = c_grid(-m / (n - 1), c_max, c_grid_size);
        for (double c : cs) validate(PolyaParams{n, x, x_complement, c});
        for (int r = 0; r <= r_max; ++r) {
            double previous = factorial_ratio(x, x_complement, r, n, cs.front());
            for (std::size_t j = 1; j < cs.size(); ++j) {
                const double current = factorial_ratio(x, x_complement, r, n, cs[j]);
                const double scale = std::max(std::abs(previous), std::numeric_limits<double>::min());
                const double rel_step = (current - previous) / scale;
                t.observe(rel_step, rel_step < -kMonotoneRelTolerance, Witness{n, x, cs[j], r});
                previous = current;
            }
        }
    });
    auto report = total.finish("conjecture_monotone_in_c", kMonotoneRelTolerance);
    report.finding = report.violations > 0;
    return report;
}

} // namespace pb
