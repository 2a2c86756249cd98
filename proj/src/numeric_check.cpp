#include "recurv/numeric_check.hpp"

#include <cmath>
#include <sstream>

namespace recurv {

namespace {

using Mat = std::vector<std::vector<double>>;

Mat metric_at(const Tensor& g, const std::vector<double>& p) {
    int n = g.dim();
    Mat m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = g.at({i, j}).evaluate_double(p);
    return m;
}

Mat invert(Mat a) {
    int n = static_cast<int>(a.size());
    Mat inv(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        double d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Christoffel symbols from finite differences of the metric at p.
std::vector<double> gamma_numeric(const Tensor& g, const std::vector<double>& p, double h) {
    int n = g.dim();
    auto gid = [n](int a, int i, int j) { return (a * n + i) * n + j; };
    std::vector<double> dg(n * n * n, 0.0);
    for (int l = 0; l < n; ++l) {
        std::vector<double> hi = p, lo = p;
        hi[l] += h;
        lo[l] -= h;
        Mat ghi = metric_at(g, hi), glo = metric_at(g, lo);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dg[gid(l, i, j)] = (ghi[i][j] - glo[i][j]) / (2 * h);
    }
    Mat ginv = invert(metric_at(g, p));
    std::vector<double> gamma(n * n * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int k = 0; k < n; ++k)
                    acc += ginv[a][k] * (dg[gid(i, j, k)] + dg[gid(j, i, k)] - dg[gid(k, i, j)]);
                gamma[gid(a, i, j)] = 0.5 * acc;
            }
    return gamma;
}

} // namespace

CrosscheckSummary numeric_crosscheck(const CurvatureBundle& b,
                                     const std::vector<std::vector<Rational>>& points,
                                     double step, double tol) {
    CrosscheckSummary sum;
    sum.tolerance = tol;
    int n = b.dim();
    auto gid = [n](int a, int i, int j) { return (a * n + i) * n + j; };
    auto names = b.chart()->coordinates;

    for (const auto& qpt : points) {
        std::vector<Rational> rp(qpt.begin(), qpt.end());
        std::vector<double> p;
        for (const auto& q : qpt) p.push_back(rational_to_double(q));

        // Pole check on the exact side: every compared component must be
        // finite at the point.
        try {
            (void)b.metric.det.evaluate(rp);
        } catch (const PoleError&) {
            sum.ok = false;
            sum.failures.push_back("determinant pole at sample point");
            continue;
        }

        std::vector<double> gnum = gamma_numeric(b.g(), p, step);

        auto record = [&](const std::string& what, double exact, double approx) {
            double denom = std::max(1.0, std::fabs(exact));
            double rel = std::fabs(exact - approx) / denom;
            sum.max_rel_error = std::max(sum.max_rel_error, rel);
            if (rel > tol) {
                std::ostringstream os;
                os << what << ": exact " << exact << " vs numeric " << approx;
                sum.failures.push_back(os.str());
                sum.ok = false;
            }
        };

        bool pole = false;
        try {
            for (int a = 0; a < n && !pole; ++a)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        double exact =
                            rational_to_double(b.gamma[gid(a, i, j)].evaluate(rp));
                        record("Gamma", exact, gnum[gid(a, i, j)]);
                    }

            // Riemann via nested central differences of the numeric Gamma.
            std::vector<std::vector<double>> dgamma(n);
            for (int l = 0; l < n; ++l) {
                std::vector<double> hi = p, lo = p;
                hi[l] += step;
                lo[l] -= step;
                std::vector<double> ghi = gamma_numeric(b.g(), hi, step);
                std::vector<double> glo = gamma_numeric(b.g(), lo, step);
                dgamma[l].resize(ghi.size());
                for (std::size_t t = 0; t < ghi.size(); ++t)
                    dgamma[l][t] = (ghi[t] - glo[t]) / (2 * step);
            }
            Mat gmat = metric_at(b.g(), p), ginv = invert(gmat);
            std::vector<double> rnum(n * n * n * n, 0.0);
            auto rid = [n](int h, int i, int j, int k) {
                return ((h * n + i) * n + j) * n + k;
            };
            for (int h = 0; h < n; ++h)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) {
                            double up = dgamma[j][gid(h, i, k)] - dgamma[k][gid(h, i, j)];
                            for (int q = 0; q < n; ++q)
                                up += gnum[gid(h, j, q)] * gnum[gid(q, i, k)] -
                                      gnum[gid(h, k, q)] * gnum[gid(q, i, j)];
                            rnum[rid(h, i, j, k)] = up;
                        }
            for (int h = 0; h < n; ++h)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) {
                            double low = 0.0;
                            for (int q = 0; q < n; ++q)
                                low += gmat[h][q] * rnum[rid(q, i, j, k)];
                            double exact =
                                rational_to_double(b.riemann.at({h, i, j, k}).evaluate(rp));
                            record("Riemann", exact, low);
                        }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = 0.0;
                    for (int pidx = 0; pidx < n; ++pidx)
                        for (int q = 0; q < n; ++q) {
                            double low = 0.0;
                            for (int t = 0; t < n; ++t)
                                low += gmat[pidx][t] * rnum[rid(t, i, j, q)];
                            acc += ginv[pidx][q] * low;
                        }
                    double exact = rational_to_double(b.ricci.at({i, j}).evaluate(rp));
                    record("Ricci", exact, acc);
                }
        } catch (const PoleError&) {
            sum.ok = false;
            sum.failures.push_back("pole in an exact component at sample point");
            continue;
        }
        ++sum.points_tested;
        (void)names;
    }
    return sum;
}

std::vector<std::vector<Rational>> sample_points(const CurvatureBundle& b, int count,
                                                 unsigned seed) {
    int n = b.dim();
    unsigned long long s = seed * 2862933555777941757ULL + 3037000493ULL;
    auto next = [&s](unsigned bound) {
        s = s * 2862933555777941757ULL + 3037000493ULL;
        return static_cast<unsigned>((s >> 33) % bound);
    };
    std::vector<std::vector<Rational>> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < count && guard < 1000 * count) {
        ++guard;
        std::vector<Rational> p;
        for (int i = 0; i < n; ++i)
            p.push_back(make_rational(1 + static_cast<long>(next(40)),
                                      1 + static_cast<long>(next(4))));
        try {
            Rational det = b.metric.det.evaluate(p);
            if (det == 0) continue;
            bool pole = false;
            for (std::size_t fl = 0; fl < b.riemann.size() && !pole; ++fl) {
                try {
                    (void)b.riemann[fl].evaluate(p);
                } catch (const PoleError&) {
                    pole = true;
                }
            }
            for (int i = 0; i < n * n * n && !pole; ++i) {
                try {
                    (void)b.gamma[i].evaluate(p);
                } catch (const PoleError&) {
                    pole = true;
                }
            }
            if (pole) continue;
        } catch (const PoleError&) {
            continue;
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

} // namespace recurv
