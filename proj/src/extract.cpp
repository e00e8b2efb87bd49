#include "dicke/extract.hpp"

#include <algorithm>
#include <cmath>

namespace dicke {

void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw InvalidParamsError("fft_radix2: size must be a power of two");
    }
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

namespace {

double ls_slope(const std::vector<double>& t, const std::vector<double>& y, std::size_t begin,
                std::size_t end) {
    const double n = static_cast<double>(end - begin);
    double st = 0.0, sy = 0.0;
    for (std::size_t k = begin; k < end; ++k) {
        st += t[k];
        sy += y[k];
    }
    const double mt = st / n, my = sy / n;
    double num = 0.0, den = 0.0;
    for (std::size_t k = begin; k < end; ++k) {
        num += (t[k] - mt) * (y[k] - my);
        den += (t[k] - mt) * (t[k] - mt);
    }
    return den > 0.0 ? num / den : 0.0;
}

// |sum_k r_k exp(-2 pi i nu t_k)|, the spectral amplitude at a continuous frequency
double projection_amplitude(const std::vector<double>& r, const std::vector<double>& t,
                            double nu) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < r.size(); ++k) {
        acc += r[k] * std::polar(1.0, -2.0 * M_PI * nu * t[k]);
    }
    return std::abs(acc);
}

double golden_max(const std::vector<double>& r, const std::vector<double>& t, double lo,
                  double hi) {
    constexpr double kInvPhi = 0.61803398874989484820;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = projection_amplitude(r, t, x1);
    double f2 = projection_amplitude(r, t, x2);
    for (int it = 0; it < 48; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = projection_amplitude(r, t, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = projection_amplitude(r, t, x1);
        }
    }
    return 0.5 * (a + b);
}

// Least-squares fit of a*cos(2 pi nu t) + b*sin(2 pi nu t), weighted by the
// window, subtracted from the residual in place.  Returns the amplitude.
double fit_and_subtract(std::vector<double>& r, const std::vector<double>& t,
                        const std::vector<double>& w, double nu) {
    double scc = 0.0, sss = 0.0, ssc = 0.0, rc = 0.0, rs = 0.0;
    std::vector<double> c(r.size()), s(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        c[k] = w[k] * std::cos(2.0 * M_PI * nu * t[k]);
        s[k] = w[k] * std::sin(2.0 * M_PI * nu * t[k]);
        scc += c[k] * c[k];
        sss += s[k] * s[k];
        ssc += s[k] * c[k];
        rc += r[k] * c[k];
        rs += r[k] * s[k];
    }
    const double det = scc * sss - ssc * ssc;
    if (det <= 0.0) return 0.0;
    const double a = (rc * sss - rs * ssc) / det;
    const double b = (rs * scc - rc * ssc) / det;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= a * c[k] + b * s[k];
    return std::hypot(a, b);
}

struct Peak {
    double nu = 0.0;
    double amp = 0.0;
};

// Strongest spectral bin of the padded Hann spectrum within [nu_min, nu_max],
// refined by a continuous-frequency projection search around it.
bool locate_peak(const std::vector<double>& r, const std::vector<double>& t, double dt,
                 double nu_min, double nu_max, int pad_factor, Peak& out) {
    std::size_t fft_size = 64;
    while (fft_size < r.size() * static_cast<std::size_t>(pad_factor)) fft_size <<= 1;
    std::vector<std::complex<double>> buf(fft_size, {0.0, 0.0});
    for (std::size_t k = 0; k < r.size(); ++k) buf[k] = r[k];
    fft_radix2(buf);

    const double dnu = 1.0 / (static_cast<double>(fft_size) * dt);
    const std::size_t j_lo = static_cast<std::size_t>(std::ceil(nu_min / dnu));
    const std::size_t j_hi =
        std::min(fft_size / 2, static_cast<std::size_t>(std::floor(nu_max / dnu)));
    if (j_lo >= j_hi) return false;

    std::size_t best = j_lo;
    double best_amp = 0.0;
    for (std::size_t j = j_lo; j <= j_hi; ++j) {
        const double amp = std::abs(buf[j]);
        if (amp > best_amp) {
            best_amp = amp;
            best = j;
        }
    }
    if (best_amp <= 0.0) return false;

    const double raw_bin = 1.0 / (static_cast<double>(r.size()) * dt);
    const double lo = std::max(nu_min, best * dnu - raw_bin);
    const double hi = std::min(nu_max, best * dnu + raw_bin);
    out.nu = golden_max(r, t, lo, hi);
    out.amp = best_amp;
    return true;
}

} // namespace

ExtractionResult extract_observables(const EchoSeries& series, const ExtractionOptions& opt) {
    const EchoSeries s = truncate_to_valid(series);
    const std::size_t n = s.size();
    if (n < 16) {
        throw WindowTooShortError("extract_observables: fewer than 16 valid samples");
    }
    const double dt = s.grid.dt;
    const double t_valid = s.grid.t_end();

    std::vector<double> times(n), log_l(n);
    for (std::size_t k = 0; k < n; ++k) {
        times[k] = s.grid.time(k);
        log_l[k] = std::log(s.values[k]);
    }
    const std::vector<double> d = log_derivative(s);

    ExtractionResult result;
    result.t_valid = t_valid;

    // decay rate: slope of ln L over the late half of the validity window
    const std::size_t half = n / 2;
    result.obs.lambda = ls_slope(times, log_l, half, n) / opt.omega;

    // frequency window: late half of the stretch where the echo is still
    // comfortably above double-precision overlap noise
    std::size_t kf_end = n;
    while (kf_end > 0 && s.values[kf_end - 1] < opt.frequency_echo_floor) --kf_end;
    const std::size_t kf_begin = kf_end / 2;
    const std::size_t m = kf_end - kf_begin;

    if (m >= 16) {
        std::vector<double> wt(m), tw(m), res(m);
        double sw = 0.0, swd = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            wt[k] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(k) /
                                          static_cast<double>(m - 1)));
            tw[k] = times[kf_begin + k];
            sw += wt[k];
            swd += wt[k] * d[kf_begin + k];
        }
        const double mean_d = swd / sw;
        result.obs.balance = mean_d / opt.omega;

        double rms2 = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double dev = d[kf_begin + k] - mean_d;
            res[k] = wt[k] * dev;
            rms2 += wt[k] * dev * dev;
        }
        const double rms = std::sqrt(rms2 / sw);
        const double scale = std::max(std::abs(mean_d), 0.05 * opt.omega);

        if (rms >= opt.osc_rel_floor * scale) {
            const double window = tw.back() - tw.front();
            const double nu_min = 2.0 / window;
            const double nu_max = 0.45 / dt;
            Peak p1;
            if (!locate_peak(res, tw, dt, nu_min, nu_max, opt.pad_factor, p1)) {
                throw WindowTooShortError(
                    "extract_observables: oscillation present but not resolvable in the window");
            }
            const double amp1 = fit_and_subtract(res, tw, wt, p1.nu);
            result.n_peaks = 1;
            result.peak_amp1 = amp1;
            double nu1 = p1.nu, nu2 = 0.0;

            Peak p2;
            if (locate_peak(res, tw, dt, nu_min, nu_max, opt.pad_factor, p2) &&
                std::abs(p2.nu - nu1) > 1.0 / window) {
                const double amp2 = fit_and_subtract(res, tw, wt, p2.nu);
                const bool harmonic =
                    std::abs(p2.nu - 2.0 * nu1) <= opt.harmonic_rel_tol * 2.0 * nu1;
                if (!harmonic && amp2 >= opt.peak_rel_threshold * amp1) {
                    result.n_peaks = 2;
                    result.peak_amp2 = amp2;
                    nu2 = p2.nu;
                }
            }

            result.obs.f1 = std::max(nu1, nu2) / opt.omega;
            result.obs.f2 = (nu2 > 0.0 ? std::min(nu1, nu2) : 0.0) / opt.omega;
            result.obs.f = (nu1 + nu2) / opt.omega;
        }
    } else {
        double acc = 0.0;
        for (std::size_t k = kf_begin; k < kf_end; ++k) acc += d[k];
        result.obs.balance = m > 0 ? acc / static_cast<double>(m) / opt.omega : 0.0;
    }

    // resolvability guards on whatever was detected
    const double abs_time = t_valid * opt.omega;  // window length in 1/omega units
    if (result.obs.f > 0.0 && result.obs.f * abs_time < opt.min_cycles) {
        throw WindowTooShortError("extract_observables: fewer than " +
                                  std::to_string(opt.min_cycles) +
                                  " oscillation periods fit in the validity window");
    }
    if (result.obs.lambda < -opt.decay_floor &&
        std::abs(result.obs.lambda) * abs_time < opt.min_cycles) {
        throw WindowTooShortError("extract_observables: fewer than " +
                                  std::to_string(opt.min_cycles) +
                                  " decay constants fit in the validity window");
    }
    return result;
}

} // namespace dicke
