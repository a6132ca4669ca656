#include "percell/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rng.hpp"

namespace percell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Path loss on squared distance: 1 inside the unit clamp, d^-alpha outside.
inline double path_loss_sq(double d2, bool alpha_is_4, double neg_half_alpha) {
    if (d2 <= 1.0) return 1.0;
    if (alpha_is_4) return 1.0 / (d2 * d2);
    return std::pow(d2, neg_half_alpha);
}

// Per-pixel field of one spectrum: all sites of `sites` transmit, every other
// same-spectrum site interferes. The SINR >= beta test is evaluated in the
// equivalent received-power form
//   l_i >= beta*(n0 + gamma*pt*T) / ((1+gamma*beta)*pt),  T = sum_j l_j,
// so one accumulation pass per pixel covers every candidate BS at once.
struct SpectrumField {
    std::vector<uint16_t> count;     // sites covering the pixel
    std::vector<int32_t> nearest;    // argmin distance, -1 if no sites
    std::vector<double> nearest_l;   // path loss of the nearest site
    std::vector<double> nearest_d2;  // squared distance of the nearest site
    std::vector<double> threshold_l; // coverage threshold in path-loss units
};

SpectrumField evaluate_spectrum(const std::vector<Point>& sites,
                                const Window& w, const SystemParams& p) {
    const int nx = w.nx(), ny = w.ny();
    const size_t npx = size_t(nx) * ny;
    SpectrumField f;
    f.count.assign(npx, 0);
    f.nearest.assign(npx, -1);
    f.nearest_l.assign(npx, 0.0);
    f.nearest_d2.assign(npx, kInf);
    f.threshold_l.assign(npx, kInf);

    const int n = int(sites.size());
    if (n == 0) return f;

    std::vector<double> sx(n), sy(n);
    for (int i = 0; i < n; ++i) {
        sx[i] = sites[i].x;
        sy[i] = sites[i].y;
    }

    const double pt = p.pt();
    const double n0 = p.n0();
    const double beta = p.beta();
    const double gamma = p.gamma;
    const bool a4 = p.alpha == 4.0;
    const double nha = -0.5 * p.alpha;
    const double thr_scale = beta / ((1.0 + gamma * beta) * pt);

    std::vector<double> lbuf(n);
    for (int iy = 0; iy < ny; ++iy) {
        const double zy = (iy + 0.5) * w.pixel;
        for (int ix = 0; ix < nx; ++ix) {
            const double zx = (ix + 0.5) * w.pixel;
            double total = 0.0;
            double best_d2 = kInf;
            int best = -1;
            for (int i = 0; i < n; ++i) {
                const double dx = zx - sx[i];
                const double dy = zy - sy[i];
                const double d2 = dx * dx + dy * dy;
                const double l = path_loss_sq(d2, a4, nha);
                lbuf[i] = l;
                total += l;
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = i;
                }
            }
            const double thr_l = thr_scale * (n0 + gamma * pt * total);
            uint16_t c = 0;
            for (int i = 0; i < n; ++i) c += lbuf[i] >= thr_l;
            const size_t px = size_t(iy) * nx + ix;
            f.count[px] = c;
            f.nearest[px] = best;
            f.nearest_l[px] = lbuf[best];
            f.nearest_d2[px] = best_d2;
            f.threshold_l[px] = thr_l;
        }
    }
    return f;
}

std::vector<Point> concat(const std::vector<Point>& a,
                          const std::vector<Point>& b) {
    std::vector<Point> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

int Window::nx() const { return int(std::lround(width / pixel)); }
int Window::ny() const { return int(std::lround(height / pixel)); }

void Window::check() const {
    std::ostringstream os;
    if (!(width > 0.0 && height > 0.0 && pixel > 0.0)) {
        os << "window extents and pixel must be positive (" << width << " x "
           << height << ", pixel " << pixel << ")";
        fail(ErrorCode::InvalidWindow, os.str());
    }
    if (!(guard >= 0.0)) {
        os << "guard must be nonnegative, got " << guard;
        fail(ErrorCode::InvalidWindow, os.str());
    }
    if (!(pixel <= std::min(width, height) / 10.0)) {
        os << "pixel " << pixel << " m too coarse for window " << width
           << " x " << height << " m (needs >= 10 pixels per side)";
        fail(ErrorCode::InvalidWindow, os.str());
    }
}

double CoverageGrid::covered_fraction() const {
    if (covered.empty()) return 0.0;
    long on = 0;
    for (uint8_t v : covered) on += v;
    return double(on) / double(covered.size());
}

std::vector<Point> sample_ppp(double lambda, const Window& window,
                              uint64_t seed) {
    window.check();
    const double xlo = -window.guard, xhi = window.width + window.guard;
    const double ylo = -window.guard, yhi = window.height + window.guard;
    const double mean = lambda * (xhi - xlo) * (yhi - ylo);
    detail::Rng rng(seed);
    const long n = rng.next_poisson(mean);
    std::vector<Point> pts;
    pts.reserve(size_t(n));
    for (long i = 0; i < n; ++i) {
        double x = rng.next_uniform(xlo, xhi);
        double y = rng.next_uniform(ylo, yhi);
        pts.push_back({x, y});
    }
    return pts;
}

Deployment sample_deployment(double lambda_a, double lambda_b,
                             const Window& window, uint64_t seed) {
    Deployment d;
    d.lambda_a = lambda_a;
    d.lambda_b = lambda_b;
    d.window = window;
    d.seed = seed;
    d.points_a = sample_ppp(lambda_a, window, detail::mix_seed(seed, 0xA1));
    d.points_b = sample_ppp(lambda_b, window, detail::mix_seed(seed, 0xB2));
    return d;
}

double sinr_at(Point z, Point signal_bs, const std::vector<Point>& interferers,
               const SystemParams& p) {
    const bool a4 = p.alpha == 4.0;
    const double nha = -0.5 * p.alpha;
    const double dxs = z.x - signal_bs.x, dys = z.y - signal_bs.y;
    const double s = p.pt() * path_loss_sq(dxs * dxs + dys * dys, a4, nha);
    double interference = 0.0;
    for (const Point& q : interferers) {
        const double dx = z.x - q.x, dy = z.y - q.y;
        interference += p.pt() * path_loss_sq(dx * dx + dy * dy, a4, nha);
    }
    return s / (p.n0() + p.gamma * interference);
}

CoverageGrid coverage_grid(SharingStrategy strategy,
                           const Deployment& deployment,
                           const SystemParams& p) {
    const Window& w = deployment.window;
    w.check();
    CoverageGrid g;
    g.nx = w.nx();
    g.ny = w.ny();
    g.strategy = strategy;
    const size_t npx = size_t(g.nx) * g.ny;
    g.covered.assign(npx, 0);
    g.cover_count.assign(npx, 0);
    g.serving_index.assign(npx, -1);

    switch (strategy) {
        case SharingStrategy::NoSharing: {
            SpectrumField f = evaluate_spectrum(deployment.points_a, w, p);
            for (size_t i = 0; i < npx; ++i) {
                g.cover_count[i] = f.count[i];
                g.covered[i] = f.count[i] > 0;
                g.serving_index[i] = f.nearest[i];
            }
            break;
        }
        case SharingStrategy::PassiveSharing: {
            SpectrumField f = evaluate_spectrum(
                concat(deployment.points_a, deployment.points_b), w, p);
            for (size_t i = 0; i < npx; ++i) {
                g.cover_count[i] = f.count[i];
                g.covered[i] = f.count[i] > 0;
                g.serving_index[i] = f.nearest[i];
            }
            break;
        }
        case SharingStrategy::ActiveSharing: {
            // Separate spectra: each network is evaluated against its own
            // interference only; a pixel is covered if either covers it.
            SpectrumField fa = evaluate_spectrum(deployment.points_a, w, p);
            SpectrumField fb = evaluate_spectrum(deployment.points_b, w, p);
            const int32_t offset = int32_t(deployment.points_a.size());
            for (size_t i = 0; i < npx; ++i) {
                g.cover_count[i] = uint16_t(fa.count[i] + fb.count[i]);
                g.covered[i] = (fa.count[i] + fb.count[i]) > 0;
                // nearest accessible site across both networks
                if (fb.nearest[i] < 0 ||
                    (fa.nearest[i] >= 0 &&
                     fa.nearest_d2[i] <= fb.nearest_d2[i])) {
                    g.serving_index[i] = fa.nearest[i];
                } else {
                    g.serving_index[i] = fb.nearest[i] + offset;
                }
            }
            break;
        }
    }
    return g;
}

SetEqualityReport sca_union_equals_ca_union(const Deployment& deployment,
                                            const SystemParams& p,
                                            SharingStrategy strategy) {
    if (strategy == SharingStrategy::ActiveSharing) {
        fail(ErrorCode::InvalidConfig,
             "strongest-coverage comparison needs a single-spectrum "
             "composition (none or passive)");
    }
    const Window& w = deployment.window;
    w.check();
    const std::vector<Point> sites =
        strategy == SharingStrategy::PassiveSharing
            ? concat(deployment.points_a, deployment.points_b)
            : deployment.points_a;
    SpectrumField f = evaluate_spectrum(sites, w, p);
    SetEqualityReport rep;
    const size_t npx = f.count.size();
    for (size_t i = 0; i < npx; ++i) {
        const bool any = f.count[i] > 0;                       // CA union
        const bool nearest_only =
            f.nearest[i] >= 0 && f.nearest_l[i] >= f.threshold_l[i];  // SCA union
        rep.mismatches += any != nearest_only;
    }
    rep.equal = rep.mismatches == 0;
    return rep;
}

LabelResult label_components(const CoverageGrid& grid,
                             Connectivity connectivity) {
    const int nx = grid.nx, ny = grid.ny;
    LabelResult out;
    out.nx = nx;
    out.ny = ny;
    out.labels.assign(size_t(nx) * ny, 0);
    if (nx == 0 || ny == 0) return out;

    std::vector<int32_t> parent(size_t(nx) * ny);
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = int32_t(i);
    auto find = [&](int32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int32_t a, int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };

    const bool eight = connectivity == Connectivity::Eight;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const size_t i = size_t(iy) * nx + ix;
            if (!grid.covered[i]) continue;
            if (ix > 0 && grid.covered[i - 1]) unite(int32_t(i), int32_t(i - 1));
            if (iy > 0) {
                const size_t up = i - nx;
                if (grid.covered[up]) unite(int32_t(i), int32_t(up));
                if (eight) {
                    if (ix > 0 && grid.covered[up - 1])
                        unite(int32_t(i), int32_t(up - 1));
                    if (ix + 1 < nx && grid.covered[up + 1])
                        unite(int32_t(i), int32_t(up + 1));
                }
            }
        }
    }

    // dense label per root, in scan order
    std::vector<int32_t> dense(parent.size(), 0);
    int32_t next = 0;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const size_t i = size_t(iy) * nx + ix;
            if (!grid.covered[i]) continue;
            const int32_t root = find(int32_t(i));
            if (dense[root] == 0) {
                dense[root] = ++next;
                out.sizes.push_back(0);
            }
            out.labels[i] = dense[root];
            ++out.sizes[dense[root] - 1];
        }
    }
    return out;
}

namespace {

bool spans(const LabelResult& lab, bool horizontal) {
    const int nx = lab.nx, ny = lab.ny;
    const size_t k = lab.sizes.size();
    if (k == 0) return false;
    std::vector<uint8_t> lo_side(k + 1, 0), hi_side(k + 1, 0);
    if (horizontal) {
        for (int iy = 0; iy < ny; ++iy) {
            lo_side[lab.labels[size_t(iy) * nx]] = 1;
            hi_side[lab.labels[size_t(iy) * nx + nx - 1]] = 1;
        }
    } else {
        for (int ix = 0; ix < nx; ++ix) {
            lo_side[lab.labels[size_t(ix)]] = 1;
            hi_side[lab.labels[size_t(ny - 1) * nx + ix]] = 1;
        }
    }
    for (size_t c = 1; c <= k; ++c)
        if (lo_side[c] && hi_side[c]) return true;
    return false;
}

} // namespace

bool has_crossing(const LabelResult& labels, CrossingAxis axis) {
    const bool lr = spans(labels, true);
    if (axis == CrossingAxis::LeftRight) return lr;
    return lr && spans(labels, false);
}

CoverageGrid disk_union_grid(const std::vector<Point>& centers, double radius,
                             const Window& window) {
    window.check();
    CoverageGrid g;
    g.nx = window.nx();
    g.ny = window.ny();
    g.strategy = SharingStrategy::NoSharing;
    const size_t npx = size_t(g.nx) * g.ny;
    g.covered.assign(npx, 0);
    g.cover_count.assign(npx, 0);
    g.serving_index.assign(npx, -1);

    const double px = window.pixel;
    const double r2 = radius * radius;
    for (const Point& c : centers) {
        const int ix0 = std::max(0, int(std::floor((c.x - radius) / px)) - 1);
        const int ix1 = std::min(g.nx - 1, int(std::ceil((c.x + radius) / px)) + 1);
        const int iy0 = std::max(0, int(std::floor((c.y - radius) / px)) - 1);
        const int iy1 = std::min(g.ny - 1, int(std::ceil((c.y + radius) / px)) + 1);
        for (int iy = iy0; iy <= iy1; ++iy) {
            const double dy = (iy + 0.5) * px - c.y;
            for (int ix = ix0; ix <= ix1; ++ix) {
                const double dx = (ix + 0.5) * px - c.x;
                if (dx * dx + dy * dy <= r2) {
                    const size_t i = size_t(iy) * g.nx + ix;
                    ++g.cover_count[i];
                    g.covered[i] = 1;
                }
            }
        }
    }
    return g;
}

} // namespace percell
