#include "orbitquant/quantize.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitquant {

// ---------------------------------------------------------------------------
// GridND and the sampled Euclidean Fourier transform
// ---------------------------------------------------------------------------

long GridND::total() const {
    long t = 1;
    for (const auto& a : axes) t *= a.m;
    return t;
}

double GridND::cell() const {
    double c = 1;
    for (const auto& a : axes) c *= a.h();
    return c;
}

std::vector<double> GridND::point(long flat) const {
    std::vector<double> p(axes.size());
    for (int a = int(axes.size()) - 1; a >= 0; --a) {
        p[a] = axes[a].point(int(flat % axes[a].m));
        flat /= axes[a].m;
    }
    return p;
}

long GridND::flat_index(const std::vector<int>& idx) const {
    long f = 0;
    for (size_t a = 0; a < axes.size(); ++a) f = f * axes[a].m + idx[a];
    return f;
}

Grid1D dual_axis(const Grid1D& g) { return Grid1D{g.m, M_PI / g.h()}; }

GridND dual_grid(const GridND& g) {
    GridND d;
    for (const auto& a : g.axes) d.axes.push_back(dual_axis(a));
    return d;
}

namespace {

// Apply the M x M matrix t along one axis of the flattened array.
void axis_apply(std::vector<cd>& data, const GridND& g, int axis, const CMat& t) {
    long stride = 1;
    for (int a = g.dim() - 1; a > axis; --a) stride *= g.axes[a].m;
    const int m = g.axes[axis].m;
    const long block = stride * m;
    CVec line(m), out(m);
    for (long base = 0; base < g.total(); base += block) {
        for (long off = 0; off < stride; ++off) {
            for (int k = 0; k < m; ++k) line[k] = data[base + off + k * stride];
            out = t * line;
            for (int k = 0; k < m; ++k) data[base + off + k * stride] = out[k];
        }
    }
}

} // namespace

std::vector<cd> fourier_g_gstar(const GridND& g, const std::vector<cd>& h,
                                bool inverse) {
    if (long(h.size()) != g.total())
        throw std::invalid_argument("fourier_g_gstar: sample count mismatch");
    std::vector<cd> data = h;
    GridND dual = dual_grid(g);
    for (int a = 0; a < g.dim(); ++a) {
        const Grid1D& gx = g.axes[a];
        const Grid1D& gxi = dual.axes[a];
        CMat t(gx.m, gx.m);
        if (!inverse) {
            for (int j = 0; j < gx.m; ++j)
                for (int k = 0; k < gx.m; ++k)
                    t(j, k) = gx.h() * std::exp(cd(0, -gxi.point(j) * gx.point(k)));
        } else {
            for (int k = 0; k < gx.m; ++k)
                for (int j = 0; j < gx.m; ++j)
                    t(k, j) = gxi.h() / (2 * M_PI) *
                              std::exp(cd(0, gxi.point(j) * gx.point(k)));
        }
        // The flattened layout is indexed by the *point-count* structure, which
        // forward and inverse share (same m per axis).
        axis_apply(data, g, a, t);
    }
    return data;
}

// ---------------------------------------------------------------------------
// lambda-Weyl calculus
// ---------------------------------------------------------------------------

GridOperator weyl_lambda(const Grid1D& g, double lambda, const Symbol2& psi,
                         int m_eta, double l_eta) {
    if (lambda == 0) throw std::invalid_argument("weyl_lambda: lambda = 0");
    Grid1D ge = dual_axis(g);
    if (m_eta > 0) ge.m = m_eta;
    if (l_eta > 0) ge.half_width = l_eta;
    const int m = g.m, me = ge.m;
    const double c = g.h() * ge.h() / (2 * M_PI);

    // psi sampled at (eta_j, lambda (q_k + q_l) / 2); the midpoint takes the
    // 2m-1 values lambda (-2L + r h)/2, r = k + l.
    CMat p(2 * m - 1, me);
    for (int r = 0; r < 2 * m - 1; ++r) {
        double v = lambda * (-2 * g.half_width + r * g.h()) / 2;
        for (int j = 0; j < me; ++j) p(r, j) = psi(ge.point(j), v);
    }
    // e^{i (k - l) h eta_j}
    CMat d(2 * m - 1, me);
    for (int r = 0; r < 2 * m - 1; ++r) {
        double diff = (r - (m - 1)) * g.h();
        for (int j = 0; j < me; ++j) d(r, j) = std::exp(cd(0, diff * ge.point(j)));
    }
    GridOperator op{g, CMat(m, m)};
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            cd acc = 0;
            for (int j = 0; j < me; ++j) acc += p(k + l, j) * d(k - l + m - 1, j);
            op.a(k, l) = c * acc;
        }
    return op;
}

GridOperator pedersen_quantize(const RepChart& rc, const Symbol2& psi) {
    return weyl_lambda(rc.grid, rc.lambda(), psi);
}

cd rep_trace_pairing(const RepChart& rc, const CMat& s_mat, int j, double p) {
    const Grid1D& g = rc.grid;
    const double q = g.point(j);
    const double lam = rc.lambda();
    const int off = j - g.m / 2; // q = off * h
    cd acc = 0;
    for (int k = 0; k < g.m; ++k) {
        // The matrix is a kernel on the window [-L, L); the periodic corner
        // blocks are wrap artifacts whose midpoint argument lies outside the
        // window, so a resolved operator vanishes there.
        int l = k + off;
        if (l < 0 || l >= g.m) continue;
        double phase = (g.point(k) * p + q * p / 2) * lam;
        acc += s_mat(k, l) * std::exp(cd(0, -phase));
    }
    return acc;
}

CMat pedersen_dequantize(const RepChart& rc, const CMat& s_mat, const Grid1D& gp,
                         const Grid1D& grho, const Grid1D& gtheta) {
    const Grid1D& g = rc.grid;
    const double lam = rc.lambda();
    // G(j, jp) = Tr[S pi(q_j, p_jp)^*]
    CMat gtab(g.m, gp.m);
    for (int j = 0; j < g.m; ++j)
        for (int jp = 0; jp < gp.m; ++jp)
            gtab(j, jp) = rep_trace_pairing(rc, s_mat, j, gp.point(jp));
    const double c = std::abs(lam) / (2 * M_PI) * g.h() * gp.h();
    // factorized double Fourier sum
    CMat hmat(g.m, gtheta.m);
    for (int j = 0; j < g.m; ++j)
        for (int it = 0; it < gtheta.m; ++it) {
            cd acc = 0;
            for (int jp = 0; jp < gp.m; ++jp)
                acc += std::exp(cd(0, gp.point(jp) * gtheta.point(it))) * gtab(j, jp);
            hmat(j, it) = acc;
        }
    CMat out(grho.m, gtheta.m);
    for (int ir = 0; ir < grho.m; ++ir)
        for (int it = 0; it < gtheta.m; ++it) {
            cd acc = 0;
            for (int j = 0; j < g.m; ++j)
                acc += std::exp(cd(0, g.point(j) * grho.point(ir))) * hmat(j, it);
            out(ir, it) = c * acc;
        }
    return out;
}

cd pedersen_dequantize_at(const RepChart& rc, const CMat& s_mat, const Grid1D& gp,
                          double rho, double theta) {
    const Grid1D& g = rc.grid;
    cd acc = 0;
    for (int j = 0; j < g.m; ++j) {
        cd inner = 0;
        for (int jp = 0; jp < gp.m; ++jp)
            inner += std::exp(cd(0, gp.point(jp) * theta)) *
                     rep_trace_pairing(rc, s_mat, j, gp.point(jp));
        acc += std::exp(cd(0, g.point(j) * rho)) * inner;
    }
    return std::abs(rc.lambda()) / (2 * M_PI) * g.h() * gp.h() * acc;
}

CMat sharp_product(const RepChart& rc, const Symbol2& a, const Symbol2& b,
                   const Grid1D& gp, const Grid1D& grho, const Grid1D& gtheta) {
    CMat prod = pedersen_quantize(rc, a).a * pedersen_quantize(rc, b).a;
    return pedersen_dequantize(rc, prod, gp, grho, gtheta);
}

// ---------------------------------------------------------------------------
// Group Fourier transform
// ---------------------------------------------------------------------------

GridOperator group_fourier(const RepChart& rc, const GaussPoly& u) {
    if (u.dim() != rc.group_dim())
        throw std::invalid_argument("group_fourier: symbol dimension mismatch");
    GaussPoly uhat = u;
    for (int a = 1; a < u.dim(); ++a) uhat = uhat.fourier_axis(a, false);
    const Grid1D& g = rc.grid;
    const double lam = rc.lambda();
    GridOperator op{g, CMat(g.m, g.m)};
    const double period = 2 * g.half_width;
    for (int k = 0; k < g.m; ++k)
        for (int l = 0; l < g.m; ++l) {
            double v = lam * (g.point(k) + g.point(l)) / 2;
            std::vector<double> arg =
                rc.kind == RepGroupKind::Center2
                    ? std::vector<double>{0.0, v, rc.sigma, rc.tau}
                    : std::vector<double>{0.0, v, rc.sigma};
            // Match the sampled-window convention: the kernel is periodized
            // in the separation variable (one wrap image each side suffices
            // for kernels resolved by the window).
            cd val = 0;
            for (int n = -1; n <= 1; ++n) {
                arg[0] = g.point(k) - g.point(l) + n * period;
                val += uhat.eval(arg);
            }
            op.a(k, l) = g.h() * val;
        }
    return op;
}

cd trace_rep_times(const RepChart& rc, const std::vector<double>& z,
                   const CMat& s_mat) {
    const Grid1D& g = rc.grid;
    const int m = g.m;
    const double q = z[0], p = z[1];
    const double lam = rc.lambda();
    double central = z[2] * rc.sigma;
    if (rc.kind == RepGroupKind::Center2) central += z[3] * rc.tau;
    // circulant profile of the band-limited shift by q
    std::vector<cd> cvec(m);
    for (int j = 0; j < m; ++j) cvec[j] = std::exp(cd(0, g.freq(j) * q));
    fft(cvec, true); // c(r) = (1/m) sum_j e^{i kappa_j q} e^{2 pi i j r / m}
    cd acc = 0;
    for (int k = 0; k < m; ++k) {
        // Interpolate the kernel column at row position q_k + q. Positions
        // outside the window, and the periodic corner blocks of the matrix
        // (wrapped separation beyond half the window), are artifacts of the
        // sampled representation; a resolved kernel vanishes there.
        double target = g.point(k) + q;
        if (target < -g.half_width || target >= g.half_width) continue;
        cd phase = std::exp(cd(0, central + (g.point(k) * p + q * p / 2) * lam));
        cd row = 0;
        for (int l = 0; l < m; ++l) {
            int d = ((k - l) % m + m) % m; // wrapped separation index
            int sep = l - k;
            if (sep > m / 2 || sep < -m / 2) continue;
            row += cvec[d] * s_mat(l, k);
        }
        acc += phase * row;
    }
    return acc;
}

cd inverse_group_fourier(const ZGrid& zg, double delta, const Grid1D& rep_grid,
                         const OperatorField& b, const std::vector<double>& x) {
    cd acc = 0;
    for (int is = 0; is < zg.gs.m; ++is)
        for (int it = 0; it < zg.gt.m; ++it) {
            double sigma = zg.gs.point(is), tau = zg.gt.point(it);
            double pf = sigma + delta * tau;
            if (std::abs(pf) < zg.pf_margin) continue;
            RepChart rcn{RepGroupKind::Center2, delta, sigma, tau, rep_grid};
            acc += trace_rep_times(rcn, x, b(sigma, tau)) * std::abs(pf);
        }
    return acc * zg.gs.h() * zg.gt.h() / std::pow(2 * M_PI, 3);
}

CMat principal_band(CMat a) {
    const int m = int(a.rows());
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            if (std::abs(k - l) > m / 2) a(k, l) = 0;
    return a;
}

double plancherel_norm2(const ZGrid& zg, double delta, const OperatorField& b) {
    double acc = 0;
    for (int is = 0; is < zg.gs.m; ++is)
        for (int it = 0; it < zg.gt.m; ++it) {
            double sigma = zg.gs.point(is), tau = zg.gt.point(it);
            double pf = sigma + delta * tau;
            if (std::abs(pf) < zg.pf_margin) continue;
            // Hilbert-Schmidt norm over the kernel window; the periodic
            // corner blocks would double-count the off-diagonal tails.
            double n = principal_band(b(sigma, tau)).squaredNorm();
            acc += n * std::abs(pf);
        }
    return acc * zg.gs.h() * zg.gt.h() / std::pow(2 * M_PI, 3);
}

SeparableSection::SeparableSection(Symbol2 orbit_factor, Symbol2 central_factor,
                                   double delta, Grid1D rep_grid)
    : b1_(std::move(orbit_factor)), b2_(std::move(central_factor)),
      delta_(delta), grid_(rep_grid) {}

const CMat& SeparableSection::orbit_op(double lambda) const {
    long long key = llround(lambda * 1e9);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, weyl_lambda(grid_, lambda, b1_).a).first;
    return it->second;
}

CMat SeparableSection::operator()(double sigma, double tau) const {
    return b2_(sigma, tau) * orbit_op(sigma + delta_ * tau);
}

CMat w_transform_at(const std::function<cd(double, double, double, double)>& B,
                    double delta, const Grid1D& rep_grid, double sigma,
                    double tau) {
    double lambda = sigma + delta * tau;
    return weyl_lambda(rep_grid, lambda,
                       [&](double r, double t) { return B(r, t, sigma, tau); })
        .a;
}

// ---------------------------------------------------------------------------
// Operator calculi on the group
// ---------------------------------------------------------------------------

cd op_g_gstar_kernel(const LieAlgebraSpec& g, const GStarSymbol& f,
                     const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> z = bch<double>(g, group_inverse(y), x);
    return f(x).fourier_all(true).eval(z);
}

cd op_g_gstar_apply(const LieAlgebraSpec& g, const GStarSymbol& f,
                    const std::vector<double>& x, const GridND& ygrid,
                    const std::vector<cd>& u) {
    GaussPoly kx = f(x).fourier_all(true);
    cd acc = 0;
    for (long i = 0; i < ygrid.total(); ++i) {
        std::vector<double> y = ygrid.point(i);
        acc += kx.eval(bch<double>(g, group_inverse(y), x)) * u[i];
    }
    return acc * ygrid.cell();
}

cd op_group_kernel(const ZGrid& zg, double delta, const Grid1D& rep_grid,
                   const LieAlgebraSpec& g, const OperatorSymbol& sigma_sym,
                   const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> z = bch<double>(g, group_inverse(y), x);
    cd acc = 0;
    for (int is = 0; is < zg.gs.m; ++is)
        for (int it = 0; it < zg.gt.m; ++it) {
            double sigma = zg.gs.point(is), tau = zg.gt.point(it);
            double pf = sigma + delta * tau;
            if (std::abs(pf) < zg.pf_margin) continue;
            RepChart rcn{RepGroupKind::Center2, delta, sigma, tau, rep_grid};
            acc += trace_rep_times(rcn, z, sigma_sym(x, sigma, tau)) * std::abs(pf);
        }
    return acc * zg.gs.h() * zg.gt.h() / std::pow(2 * M_PI, 3);
}

cd conv_right(const LieAlgebraSpec& g, const GridND& ygrid,
              const std::vector<cd>& u, const GroupFunction& w,
              const std::vector<double>& x) {
    cd acc = 0;
    for (long i = 0; i < ygrid.total(); ++i) {
        std::vector<double> y = ygrid.point(i);
        acc += u[i] * w(bch<double>(g, group_inverse(y), x));
    }
    return acc * ygrid.cell();
}

} // namespace orbitquant
