#include "monostatic/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace monostatic {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Angle-sorted test that the origin lies strictly inside the convex hull of
// a planar point set: every half-plane through the origin must contain a
// point on its positive side, i.e. the largest angular gap is below pi.
bool origin_strictly_inside(const std::vector<Vec2>& pts) {
    if (pts.size() < 3) return false;
    std::vector<double> ang;
    ang.reserve(pts.size());
    for (const Vec2& p : pts) {
        if (p.norm() <= 0.0) return false;
        ang.push_back(std::atan2(p.y, p.x));
    }
    std::sort(ang.begin(), ang.end());
    double max_gap = ang.front() + 2.0 * kPi - ang.back();
    for (std::size_t i = 1; i < ang.size(); ++i)
        max_gap = std::max(max_gap, ang[i] - ang[i - 1]);
    return max_gap < kPi - 1e-12;
}

}  // namespace

std::vector<Vec3> fibonacci_sphere(int samples) {
    std::vector<Vec3> dirs;
    dirs.reserve(samples);
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int m = 0; m < samples; ++m) {
        double z = 1.0 - 2.0 * (m + 0.5) / samples;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double th = golden * m;
        dirs.emplace_back(r * std::cos(th), r * std::sin(th), z);
    }
    return dirs;
}

std::vector<std::array<int, 6>> fibonacci_neighbors(const std::vector<Vec3>& dirs) {
    const int N = static_cast<int>(dirs.size());
    const double delta = std::sqrt(4.0 * kPi / N);  // mean angular spacing
    const int rows = std::max(1, static_cast<int>(std::ceil(kPi / delta)));

    std::vector<double> theta(N), phi(N);
    std::vector<int> row_of(N);
    std::vector<int> bins_per_row(rows);
    for (int r = 0; r < rows; ++r) {
        double t = (r + 0.5) * kPi / rows;
        bins_per_row[r] = std::max(1, static_cast<int>(2.0 * kPi * std::sin(t) / delta));
    }
    std::vector<std::vector<std::vector<int>>> bins(rows);
    for (int r = 0; r < rows; ++r) bins[r].resize(bins_per_row[r]);
    for (int m = 0; m < N; ++m) {
        theta[m] = std::acos(std::clamp(dirs[m].z, -1.0, 1.0));
        phi[m] = std::atan2(dirs[m].y, dirs[m].x);
        int r = std::min(rows - 1, static_cast<int>(theta[m] / kPi * rows));
        row_of[m] = r;
        int nb = bins_per_row[r];
        int b = static_cast<int>((phi[m] + kPi) / (2.0 * kPi) * nb) % nb;
        bins[r][b].push_back(m);
    }

    const double reach = 2.5 * delta;
    std::vector<std::array<int, 6>> nn(N);
    std::vector<std::pair<double, int>> cand;
    for (int m = 0; m < N; ++m) {
        cand.clear();
        int r0 = std::max(0, static_cast<int>((theta[m] - reach) / kPi * rows));
        int r1 = std::min(rows - 1, static_cast<int>((theta[m] + reach) / kPi * rows));
        for (int r = r0; r <= r1; ++r) {
            int nb = bins_per_row[r];
            double sin_t = std::sin((r + 0.5) * kPi / rows);
            double bin_width = 2.0 * kPi * sin_t / nb;  // geodesic bin width
            int span = (bin_width <= 0.0) ? nb
                                          : static_cast<int>(std::ceil(reach / bin_width)) + 1;
            if (2 * span + 1 >= nb) {
                for (int b = 0; b < nb; ++b)
                    for (int idx : bins[r][b])
                        if (idx != m) cand.emplace_back((dirs[idx] - dirs[m]).norm2(), idx);
            } else {
                int bc = static_cast<int>((phi[m] + kPi) / (2.0 * kPi) * nb) % nb;
                for (int d = -span; d <= span; ++d) {
                    int b = ((bc + d) % nb + nb) % nb;
                    for (int idx : bins[r][b])
                        if (idx != m) cand.emplace_back((dirs[idx] - dirs[m]).norm2(), idx);
                }
            }
        }
        std::sort(cand.begin(), cand.end());
        for (int j = 0; j < 6; ++j)
            nn[m][j] = (j < static_cast<int>(cand.size())) ? cand[j].second : m;
    }
    return nn;
}

OracleResult sampling_oracle(const Polyhedron& poly, const Centroid& c, int samples,
                             Execution exec) {
    if (samples < 1000) throw InvalidParameter("sampling_oracle: need at least 1000 samples");
    const int nv = poly.vertex_count();
    std::vector<Vec3> rel(nv);
    for (int i = 0; i < nv; ++i) rel[i] = poly.vertices[i] - c.point;
    const double diam = poly.diameter();
    const double delta = std::sqrt(4.0 * kPi / samples);
    const double tau = 1e-9 * diam;

    const std::vector<Vec3> dirs = fibonacci_sphere(samples);
    const std::vector<std::array<int, 6>> nn = fibonacci_neighbors(dirs);

    std::vector<double> h(samples);
    std::vector<std::uint8_t> is_min(samples, 0), is_max(samples, 0);

    auto support_at = [&](const Vec3& u) {
        double best = rel[0].dot(u);
        for (int i = 1; i < nv; ++i) best = std::max(best, rel[i].dot(u));
        return best;
    };

    const bool parallel = (exec == Execution::Parallel);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int m = 0; m < samples; ++m) h[m] = support_at(dirs[m]);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int m = 0; m < samples; ++m) {
        bool lo = true, hi = true;
        for (int j = 0; j < 6; ++j) {
            double hn = h[nn[m][j]];
            lo = lo && (h[m] < hn);
            hi = hi && (h[m] > hn);
        }
        is_min[m] = lo;
        is_max[m] = hi;
    }
    (void)parallel;

    OracleResult out;
    std::set<std::vector<int>> faces_found;
    std::set<int> verts_found;

    for (int m = 0; m < samples; ++m) {
        if (is_min[m]) ++out.min_candidates;
        if (is_max[m]) ++out.max_candidates;
    }

    // Verify minima: find the exact supporting plane near the sample.
    for (int m = 0; m < samples; ++m) {
        if (!is_min[m]) continue;
        const Vec3& u = dirs[m];
        // Local active set: vertices whose support is within the basin slack.
        std::vector<std::pair<double, int>> active;
        for (int i = 0; i < nv; ++i) {
            double s = rel[i].dot(u);
            if (s >= h[m] - 4.0 * delta * diam) active.emplace_back(-s, i);
        }
        if (active.size() < 3) continue;
        std::sort(active.begin(), active.end());
        if (active.size() > 32) active.resize(32);

        const double cos_cap = std::cos(std::min(4.0 * delta, 1.0));
        bool found = false;
        for (std::size_t ia = 0; ia < active.size() && !found; ++ia)
            for (std::size_t ib = ia + 1; ib < active.size() && !found; ++ib)
                for (std::size_t ic = ib + 1; ic < active.size() && !found; ++ic) {
                    const Vec3& A = rel[active[ia].second];
                    const Vec3& B = rel[active[ib].second];
                    const Vec3& D = rel[active[ic].second];
                    Vec3 n = (B - A).cross(D - A);
                    double ln = n.norm();
                    if (ln <= 1e-14 * diam * diam) continue;
                    n = n / ln;
                    if (n.dot(u) < 0.0) n = -n;
                    if (n.dot(u) < cos_cap) continue;
                    // The triple's plane must be the global support plane.
                    double hn = support_at(n);
                    if (A.dot(n) < hn - tau) continue;
                    std::vector<int> tied;
                    for (int i = 0; i < nv; ++i)
                        if (rel[i].dot(n) >= hn - tau) tied.push_back(i);
                    if (tied.size() < 3) continue;
                    // Tangential projections must strictly surround the origin.
                    Vec3 ref = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
                    Vec3 e1 = n.cross(ref).normalized();
                    Vec3 e2 = n.cross(e1);
                    std::vector<Vec2> proj;
                    proj.reserve(tied.size());
                    for (int i : tied) proj.emplace_back(rel[i].dot(e1), rel[i].dot(e2));
                    if (!origin_strictly_inside(proj)) continue;
                    faces_found.insert(tied);
                    found = true;
                }
    }

    // Verify maxima: the top vertex must be the unique maximizer along its
    // own direction from the centroid.
    for (int m = 0; m < samples; ++m) {
        if (!is_max[m]) continue;
        int best = 0;
        double bs = rel[0].dot(dirs[m]);
        for (int i = 1; i < nv; ++i) {
            double s = rel[i].dot(dirs[m]);
            if (s > bs) { bs = s; best = i; }
        }
        Vec3 u = rel[best].normalized();
        double top = rel[best].dot(u);
        bool unique = true;
        for (int i = 0; i < nv && unique; ++i) {
            if (i == best) continue;
            if (rel[i].dot(u) >= top - tau) unique = false;
        }
        if (unique) verts_found.insert(best);
    }

    for (const auto& f : faces_found) out.stable_features.push_back(f);
    out.unstable_vertices.assign(verts_found.begin(), verts_found.end());
    out.S = static_cast<int>(out.stable_features.size());
    out.U = static_cast<int>(out.unstable_vertices.size());
    return out;
}

}  // namespace monostatic
