// extract.hpp — pulls the decay rate and frequency content out of an echo
// series: least-squares slope of ln L over the late half of the validity
// window, and refined spectral peaks of the Hann-windowed, mean-removed
// log-derivative.  The same pipeline runs on analytic, effective and finite
// series so window biases cancel in comparisons.

#pragma once

#include "dicke/echo.hpp"

namespace dicke {

struct ExtractionOptions {
    double omega = 1.0;
    double min_cycles = 4.0;              // WindowTooShort guard threshold
    double peak_rel_threshold = 0.15;     // secondary peak acceptance vs the strongest
    double osc_rel_floor = 0.02;          // oscillation RMS significance vs |balance|
    double decay_floor = 0.05;            // |lambda| below this counts as non-decaying
    double frequency_echo_floor = 1e-12;  // exclude noise-dominated tail from the FFT window
    int pad_factor = 16;                  // FFT zero padding
    double harmonic_rel_tol = 0.04;       // reject peak 2 when nu2 ≈ 2 nu1 within this
};

struct ExtractionResult {
    QuenchObservables obs;
    double t_valid = 0.0;     // analysed validity horizon
    int n_peaks = 0;
    double peak_amp1 = 0.0;   // log-derivative oscillation amplitudes (diagnostic)
    double peak_amp2 = 0.0;
};

// Throws WindowTooShortError when a detected oscillation or decay does not
// fit min_cycles times into the validity window, and InvalidParamsError for
// degenerate input.
ExtractionResult extract_observables(const EchoSeries& series, const ExtractionOptions& opt = {});

// In-place radix-2 FFT (size must be a power of two); used by the peak
// search and exposed for tests.
void fft_radix2(std::vector<std::complex<double>>& data);

} // namespace dicke
