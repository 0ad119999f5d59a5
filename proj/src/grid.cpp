#include "orbitquant/grid.hpp"

#include <fftw3.h>

#include <mutex>

namespace orbitquant {

void fft(std::vector<cd>& data, bool inverse) {
    static std::mutex mu; // FFTW planning is not thread-safe
    const int n = int(data.size());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(mu);
        plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(data.data()),
                                reinterpret_cast<fftw_complex*>(data.data()),
                                inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(mu);
        fftw_destroy_plan(plan);
    }
    if (inverse)
        for (auto& v : data) v /= double(n);
}

CVec fractional_shift(const Grid1D& g, const CVec& phi, double a) {
    std::vector<cd> buf(phi.data(), phi.data() + g.m);
    fft(buf, false);
    for (int j = 0; j < g.m; ++j) buf[j] *= std::exp(cd(0, g.freq(j) * a));
    fft(buf, true);
    CVec out(g.m);
    for (int k = 0; k < g.m; ++k) out[k] = buf[k];
    return out;
}

cd trig_eval(const Grid1D& g, const CVec& phi, double q) {
    std::vector<cd> buf(phi.data(), phi.data() + g.m);
    fft(buf, false);
    cd acc = 0;
    // interpolant: (1/m) sum_j F_j e^{i kappa_j (q + L)}  with samples at q_k = -L + k h
    for (int j = 0; j < g.m; ++j)
        acc += buf[j] * std::exp(cd(0, g.freq(j) * (q + g.half_width)));
    return acc / double(g.m);
}

CMat shift_matrix(const Grid1D& g, double a) {
    CMat s(g.m, g.m);
    // S = F^* diag(e^{i kappa a}) F; build via m shifted delta columns at once.
    std::vector<cd> col(g.m);
    // Row k, column l entry: (1/m) sum_j e^{i kappa_j (a + (k-l) h)}
    std::vector<cd> row0(g.m);
    for (int didx = 0; didx < g.m; ++didx) {
        cd acc = 0;
        for (int j = 0; j < g.m; ++j)
            acc += std::exp(cd(0, g.freq(j) * (a + didx * g.h())));
        row0[didx] = acc / double(g.m);
    }
    for (int k = 0; k < g.m; ++k)
        for (int l = 0; l < g.m; ++l) {
            int d = k - l;
            if (d < 0) d += g.m; // e^{i kappa_j d h} is m-periodic in d
            s(k, l) = row0[d];
        }
    return s;
}

CMat second_derivative_matrix(const Grid1D& g) {
    CMat out(g.m, g.m);
    std::vector<cd> row0(g.m);
    for (int didx = 0; didx < g.m; ++didx) {
        cd acc = 0;
        for (int j = 0; j < g.m; ++j) {
            double k = g.freq(j);
            acc += -k * k * std::exp(cd(0, k * didx * g.h()));
        }
        row0[didx] = acc / double(g.m);
    }
    for (int k = 0; k < g.m; ++k)
        for (int l = 0; l < g.m; ++l) {
            int d = k - l;
            if (d < 0) d += g.m;
            out(k, l) = row0[d];
        }
    return out;
}

CMat dilation_matrix(const Grid1D& g, double s) {
    CMat u(g.m, g.m);
    const double rt = std::sqrt(s);
    for (int k = 0; k < g.m; ++k) {
        double target = s * g.point(k);
        if (target < -g.half_width || target >= g.half_width) {
            // Outside the window the periodic interpolant would wrap a spurious
            // copy of the function back in; a resolved function is zero there.
            u.row(k).setZero();
            continue;
        }
        for (int l = 0; l < g.m; ++l) {
            // l-th cardinal function evaluated at target
            cd acc = 0;
            for (int j = 0; j < g.m; ++j)
                acc += std::exp(cd(0, g.freq(j) * (target - g.point(l))));
            u(k, l) = rt * acc / double(g.m);
        }
    }
    return u;
}

double GridOperator::op_norm() const {
    Eigen::JacobiSVD<CMat> svd(a);
    return svd.singularValues()(0);
}

} // namespace orbitquant
