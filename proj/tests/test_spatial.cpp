#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "percell/spatial.hpp"
#include "test_util.hpp"

using namespace percell;
using doctest::Approx;
using testutil::error_code;

namespace {

const SystemParams kRef;

// grid with hand-placed coverage for labeling tests
CoverageGrid make_grid(int nx, int ny, const std::vector<int>& on) {
    CoverageGrid g;
    g.nx = nx;
    g.ny = ny;
    g.covered.assign(size_t(nx) * ny, 0);
    g.cover_count.assign(size_t(nx) * ny, 0);
    g.serving_index.assign(size_t(nx) * ny, -1);
    for (int i : on) {
        g.covered[size_t(i)] = 1;
        g.cover_count[size_t(i)] = 1;
    }
    return g;
}

Deployment manual_deployment(std::vector<Point> a, std::vector<Point> b,
                             const Window& w) {
    Deployment d;
    d.points_a = std::move(a);
    d.points_b = std::move(b);
    d.window = w;
    return d;
}

} // namespace

TEST_CASE("window raster geometry and validation") {
    Window w;
    CHECK(w.nx() == 400);
    CHECK(w.ny() == 400);
    CHECK_NOTHROW(w.check());

    Window tall{500.0, 1500.0, 50.0, 2.5};
    CHECK(tall.nx() == 200);
    CHECK(tall.ny() == 600);
    CHECK_NOTHROW(tall.check());

    Window bad = w;
    bad.pixel = 0.0;
    CHECK(error_code([&] { bad.check(); }) == ErrorCode::InvalidWindow);
    bad = w;
    bad.pixel = 500.0;  // fewer than 10 pixels across
    CHECK(error_code([&] { bad.check(); }) == ErrorCode::InvalidWindow);
    bad = w;
    bad.pixel = 400.0;  // exactly 10 pixels is allowed
    CHECK_NOTHROW(bad.check());
    bad = w;
    bad.guard = -1.0;
    CHECK(error_code([&] { bad.check(); }) == ErrorCode::InvalidWindow);
    bad = w;
    bad.width = 0.0;
    CHECK(error_code([&] { bad.check(); }) == ErrorCode::InvalidWindow);
}

TEST_CASE("Poisson sampling is deterministic and in-window") {
    const Window w{4000.0, 4000.0, 1800.0, 10.0};
    const auto p1 = sample_ppp(5e-7, w, 99);
    const auto p2 = sample_ppp(5e-7, w, 99);
    REQUIRE(p1.size() == p2.size());
    for (size_t i = 0; i < p1.size(); ++i) {
        CHECK(p1[i].x == p2[i].x);
        CHECK(p1[i].y == p2[i].y);
    }
    CHECK(sample_ppp(5e-7, w, 100).size() != 0);
    CHECK(sample_ppp(0.0, w, 99).empty());

    for (const Point& q : p1) {
        CHECK(q.x >= -w.guard);
        CHECK(q.x <= w.width + w.guard);
        CHECK(q.y >= -w.guard);
        CHECK(q.y <= w.height + w.guard);
    }

    // empirical mean of the count ~ lambda*(4000+2*1800)^2 = 28.88
    double mean = 0.0;
    for (uint64_t s = 0; s < 200; ++s)
        mean += double(sample_ppp(5e-7, w, s).size());
    mean /= 200.0;
    CHECK(mean > 26.0);
    CHECK(mean < 32.0);
}

TEST_CASE("deployment sampling splits one seed into two streams") {
    const Window w{2000.0, 2000.0, 500.0, 10.0};
    const Deployment d = sample_deployment(5e-7, 3e-7, w, 7);
    const Deployment e = sample_deployment(5e-7, 3e-7, w, 7);
    CHECK(d.points_a.size() == e.points_a.size());
    CHECK(d.points_b.size() == e.points_b.size());
    CHECK(d.lambda_a == 5e-7);
    CHECK(d.lambda_b == 3e-7);
    CHECK(d.seed == 7);
    // equal densities still draw from distinct per-network streams
    const Deployment same = sample_deployment(5e-7, 5e-7, w, 7);
    bool identical = same.points_a.size() == same.points_b.size();
    if (identical && !same.points_a.empty())
        identical = same.points_a[0].x == same.points_b[0].x;
    CHECK_FALSE(identical);
}

TEST_CASE("pointwise SINR") {
    const Point z{0.0, 0.0};
    // near-field clamp: received power = Pt within 1 m
    CHECK(sinr_at(z, {0.5, 0.0}, {}, kRef) ==
          Approx(kRef.beta0()).epsilon(1e-12));
    // single BS at 500 m: SNR = beta0 * 500^-4
    CHECK(sinr_at(z, {500.0, 0.0}, {}, kRef) ==
          Approx(kRef.beta0() / (500.0 * 500.0 * 500.0 * 500.0))
              .epsilon(1e-12));
    // coverage boundary at the SNR radius (1000 m at reference params)
    CHECK(sinr_at(z, {999.0, 0.0}, {}, kRef) > kRef.beta());
    CHECK(sinr_at(z, {1001.0, 0.0}, {}, kRef) < kRef.beta());

    // one interferer, hand-evaluated
    const Point bs{300.0, 0.0}, itf{0.0, 400.0};
    const double s = kRef.pt() * std::pow(300.0, -4.0);
    const double i = kRef.pt() * std::pow(400.0, -4.0);
    CHECK(sinr_at(z, bs, {itf}, kRef) ==
          Approx(s / (kRef.n0() + i)).epsilon(1e-12));

    // equidistant interferer caps SINR below 1/gamma
    CHECK(sinr_at(z, {200.0, 0.0}, {{-200.0, 0.0}}, kRef) <
          1.0 / kRef.gamma);
}

TEST_CASE("single BS covers the SNR disk on the raster") {
    const Window w{4000.0, 4000.0, 0.0, 10.0};
    const Deployment d =
        manual_deployment({{2000.0, 2000.0}}, {}, w);
    const CoverageGrid g = coverage_grid(SharingStrategy::NoSharing, d, kRef);
    // frozen count of pixel centers within 1000 m of the site
    CHECK(g.covered_fraction() == Approx(31428.0 / 160000.0).epsilon(1e-12));
    CHECK(std::fabs(g.covered_fraction() - std::acos(-1.0) / 16.0) < 0.002);

    // center pixel: covered by the only site
    const int cx = 200, cy = 200;
    CHECK(g.at(cx, cy));
    CHECK(g.cover_count[size_t(cy) * 400 + cx] == 1);
    CHECK(g.serving_index[size_t(cy) * 400 + cx] == 0);
    // corner pixel: nearest site known but not covering
    CHECK_FALSE(g.at(0, 0));
    CHECK(g.cover_count[0] == 0);
    CHECK(g.serving_index[0] == 0);

    // empty network: nothing covered, no serving site
    const CoverageGrid none = coverage_grid(
        SharingStrategy::NoSharing, manual_deployment({}, {}, w), kRef);
    CHECK(none.covered_fraction() == 0.0);
    CHECK(none.serving_index[0] == -1);
}

TEST_CASE("walls between equal-power BSs stay uncovered at beta*gamma >= 1/2") {
    // at the exact midpoint of any two sites, the partner's interference
    // alone caps SINR at 1/gamma; with all other sites it only drops
    const Window w{2000.0, 2000.0, 0.0, 10.0};
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        const auto pts = sample_ppp(2e-6, w, seed);
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = 0; j < pts.size(); ++j) {
                if (i == j) continue;
                const Point mid{0.5 * (pts[i].x + pts[j].x),
                                0.5 * (pts[i].y + pts[j].y)};
                std::vector<Point> rest;
                for (size_t k = 0; k < pts.size(); ++k)
                    if (k != i) rest.push_back(pts[k]);
                CHECK(sinr_at(mid, pts[i], rest, kRef) <
                      1.0 / kRef.gamma + 1e-12);
            }
    }
}

TEST_CASE("cover_count never exceeds 1 + max potential serving") {
    const Window w{1000.0, 1000.0, 900.0, 10.0};
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const Deployment d = sample_deployment(5e-7, 0.0, w, seed);
        const CoverageGrid g =
            coverage_grid(SharingStrategy::NoSharing, d, kRef);
        for (uint16_t c : g.cover_count) CHECK(c <= 2);
    }

    // the bound is attained: two nearby sites both cover flank pixels
    const Window small{1000.0, 1000.0, 0.0, 10.0};
    const Deployment pair = manual_deployment(
        {{400.0, 500.0}, {600.0, 500.0}}, {}, small);
    const CoverageGrid g = coverage_grid(SharingStrategy::NoSharing, pair, kRef);
    CHECK(g.cover_count[size_t(30) * 100 + 49] == 2);  // (495, 305)
}

TEST_CASE("strongest-coverage union equals coverage union") {
    const Window w{1000.0, 1000.0, 900.0, 10.0};
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const Deployment d = sample_deployment(5e-7, 2e-7, w, seed);
        const SetEqualityReport none = sca_union_equals_ca_union(d, kRef);
        CHECK(none.equal);
        CHECK(none.mismatches == 0);
        const SetEqualityReport passive = sca_union_equals_ca_union(
            d, kRef, SharingStrategy::PassiveSharing);
        CHECK(passive.equal);
    }
    const Deployment d = sample_deployment(5e-7, 2e-7, w, 1);
    CHECK(error_code([&] {
              sca_union_equals_ca_union(d, kRef,
                                        SharingStrategy::ActiveSharing);
          }) == ErrorCode::InvalidConfig);
}

TEST_CASE("active sharing covers at least each single network") {
    const Window w{1000.0, 1000.0, 900.0, 10.0};
    for (uint64_t seed = 0; seed < 3; ++seed) {
        const Deployment d = sample_deployment(4e-7, 4e-7, w, seed);
        const CoverageGrid active =
            coverage_grid(SharingStrategy::ActiveSharing, d, kRef);
        const CoverageGrid a_only =
            coverage_grid(SharingStrategy::NoSharing, d, kRef);
        const Deployment bd = manual_deployment(d.points_b, {}, w);
        const CoverageGrid b_only =
            coverage_grid(SharingStrategy::NoSharing, bd, kRef);
        for (size_t i = 0; i < active.covered.size(); ++i) {
            CHECK(active.covered[i] >= a_only.covered[i]);
            CHECK(active.covered[i] >= b_only.covered[i]);
            CHECK(active.cover_count[i] ==
                  a_only.cover_count[i] + b_only.cover_count[i]);
        }
    }
}

TEST_CASE("without interference, adding a BS never uncovers a pixel") {
    const SystemParams p = [] {
        SystemParams q;
        q.gamma = 0.0;
        return q;
    }();
    const Window w{1000.0, 1000.0, 500.0, 10.0};
    for (uint64_t seed = 0; seed < 3; ++seed) {
        Deployment d = sample_deployment(3e-7, 0.0, w, seed);
        const CoverageGrid before =
            coverage_grid(SharingStrategy::NoSharing, d, p);
        d.points_a.push_back({500.0, 500.0});
        const CoverageGrid after =
            coverage_grid(SharingStrategy::NoSharing, d, p);
        for (size_t i = 0; i < before.covered.size(); ++i)
            CHECK(after.covered[i] >= before.covered[i]);
    }
}

TEST_CASE("passive sharing with an empty partner equals no sharing") {
    const Window w{1000.0, 1000.0, 900.0, 10.0};
    const Deployment d = sample_deployment(5e-7, 0.0, w, 11);
    const CoverageGrid none = coverage_grid(SharingStrategy::NoSharing, d, kRef);
    const CoverageGrid passive =
        coverage_grid(SharingStrategy::PassiveSharing, d, kRef);
    CHECK(none.covered == passive.covered);
    CHECK(none.cover_count == passive.cover_count);
    CHECK(none.serving_index == passive.serving_index);
}

TEST_CASE("active serving index picks the nearest site across networks") {
    const Window w{1000.0, 1000.0, 0.0, 10.0};
    // site 0 of network a at x=200, site 0 of network b at x=810; the pixel
    // center at x=505 is exactly 305 m from both
    const Deployment d =
        manual_deployment({{200.0, 505.0}}, {{810.0, 505.0}}, w);
    const CoverageGrid g = coverage_grid(SharingStrategy::ActiveSharing, d, kRef);
    const int row = 50;
    CHECK(g.serving_index[size_t(row) * 100 + 10] == 0);  // x=105: nearer a
    CHECK(g.serving_index[size_t(row) * 100 + 90] == 1);  // x=905: nearer b
    CHECK(g.serving_index[size_t(row) * 100 + 50] == 0);  // exact tie -> a
}

TEST_CASE("coverage grids are reproducible") {
    const Window w{1000.0, 1000.0, 500.0, 10.0};
    const Deployment d = sample_deployment(5e-7, 5e-7, w, 3);
    for (SharingStrategy s :
         {SharingStrategy::NoSharing, SharingStrategy::ActiveSharing,
          SharingStrategy::PassiveSharing}) {
        const CoverageGrid g1 = coverage_grid(s, d, kRef);
        const CoverageGrid g2 = coverage_grid(s, d, kRef);
        CHECK(g1.covered == g2.covered);
        CHECK(g1.cover_count == g2.cover_count);
        CHECK(g1.serving_index == g2.serving_index);
    }
}

TEST_CASE("component labeling") {
    // plus shape on 3x3: one 4-connected component of size 5
    const CoverageGrid plus = make_grid(3, 3, {1, 3, 4, 5, 7});
    const LabelResult lp = label_components(plus, Connectivity::Four);
    CHECK(lp.sizes.size() == 1);
    CHECK(lp.sizes[0] == 5);
    CHECK(lp.labels[0] == 0);
    CHECK(lp.labels[4] == 1);

    // two diagonal pixels: separate under 4, joined under 8
    const CoverageGrid diag = make_grid(2, 2, {0, 3});
    CHECK(label_components(diag, Connectivity::Four).sizes.size() == 2);
    CHECK(label_components(diag, Connectivity::Eight).sizes.size() == 1);

    // empty and full grids
    const CoverageGrid empty = make_grid(4, 4, {});
    CHECK(label_components(empty).sizes.empty());
    std::vector<int> all(16);
    for (int i = 0; i < 16; ++i) all[size_t(i)] = i;
    const CoverageGrid full = make_grid(4, 4, all);
    const LabelResult lf = label_components(full);
    CHECK(lf.sizes.size() == 1);
    CHECK(lf.sizes[0] == 16);

    // label ids are dense in scan order and sizes add up
    const CoverageGrid two = make_grid(5, 1, {0, 1, 3});
    const LabelResult lt = label_components(two, Connectivity::Four);
    REQUIRE(lt.sizes.size() == 2);
    CHECK(lt.labels[0] == 1);
    CHECK(lt.labels[3] == 2);
    CHECK(lt.sizes[0] + lt.sizes[1] == 3);
}

TEST_CASE("crossing detection") {
    // full middle row: left-right crossing, no top-bottom one
    const CoverageGrid row = make_grid(5, 4, {10, 11, 12, 13, 14});
    const LabelResult lr = label_components(row);
    CHECK(has_crossing(lr, CrossingAxis::LeftRight));
    CHECK_FALSE(has_crossing(lr, CrossingAxis::BothAxes));

    // full column only: no left-right crossing
    const CoverageGrid col = make_grid(5, 4, {2, 7, 12, 17});
    CHECK_FALSE(has_crossing(label_components(col), CrossingAxis::LeftRight));

    // cross shape: same component spans both axes
    const CoverageGrid cross =
        make_grid(5, 5, {2, 7, 10, 11, 12, 13, 14, 17, 22});
    const LabelResult lc = label_components(cross);
    CHECK(has_crossing(lc, CrossingAxis::LeftRight));
    CHECK(has_crossing(lc, CrossingAxis::BothAxes));

    // disjoint row and column do not make a both-axes crossing together
    const CoverageGrid split = make_grid(5, 5, {10, 11, 12, 13, 14, 4, 9, 24});
    // the x=4 column has a gap at row 3, so no component spans top-bottom
    const LabelResult ls = label_components(split, Connectivity::Four);
    CHECK(has_crossing(ls, CrossingAxis::LeftRight));
    CHECK_FALSE(has_crossing(ls, CrossingAxis::BothAxes));

    CHECK_FALSE(has_crossing(label_components(make_grid(3, 3, {}))));
}

TEST_CASE("disk union raster") {
    const Window w{1000.0, 1000.0, 0.0, 10.0};
    const CoverageGrid g = disk_union_grid({{500.0, 500.0}}, 200.0, w);
    const double pi = std::acos(-1.0);
    CHECK(std::fabs(g.covered_fraction() - pi * 200.0 * 200.0 / 1e6) < 0.003);
    CHECK(g.cover_count[size_t(50) * 100 + 50] == 1);
    CHECK_FALSE(g.at(0, 0));

    // overlapping disks count twice in the lens
    const CoverageGrid two =
        disk_union_grid({{450.0, 500.0}, {550.0, 500.0}}, 200.0, w);
    CHECK(two.cover_count[size_t(50) * 100 + 50] == 2);
    CHECK(two.at(50, 50));

    CHECK(disk_union_grid({}, 200.0, w).covered_fraction() == 0.0);

    // guard-zone disks clip into the interior
    const Window gw{1000.0, 1000.0, 300.0, 10.0};
    const CoverageGrid clip = disk_union_grid({{-100.0, 500.0}}, 200.0, gw);
    CHECK(clip.at(0, 50));       // x=5: within 105 m of the center
    CHECK_FALSE(clip.at(30, 50));  // x=305: outside the disk
}
