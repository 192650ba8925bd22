#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "oracle.hpp"
#include "pbsc/bsc_capacity.hpp"

using namespace pbsc;

namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> grid;
    grid.reserve(count);
    const double l0 = std::log10(lo);
    const double l1 = std::log10(hi);
    for (int i = 0; i < count; ++i) {
        grid.push_back(std::pow(10.0, l0 + (l1 - l0) * i / double(count - 1)));
    }
    return grid;
}

}  // namespace

TEST_SUITE_BEGIN("bsc_capacity");

TEST_CASE("capacity pins at a = 0.01 (50-digit references)") {
    ChannelParams p{};
    p.a = 0.01;
    CHECK(capacity_informed(ChannelKind::channel_i, p).value() ==
          doctest::Approx(0.99027516172571394).epsilon(1e-10));
    CHECK(capacity_noninformed(ChannelKind::channel_i, p).value() ==
          doctest::Approx(0.96161443365071215).epsilon(1e-10));
    CHECK(capacity_informed(ChannelKind::channel_ii, p).value() ==
          doctest::Approx(0.99901141675135714).epsilon(1e-10));
    CHECK(capacity_noninformed(ChannelKind::channel_ii, p).value() ==
          doctest::Approx(0.99815138551774492).epsilon(1e-10));
}

TEST_CASE("channel II saturates: capacity near zero at a = 100") {
    ChannelParams p{};
    p.a = 100.0;
    const double cn = capacity_noninformed(ChannelKind::channel_ii, p).value();
    const double ci = capacity_informed(ChannelKind::channel_ii, p).value();
    CHECK(cn == doctest::Approx(0.022870087921756853).epsilon(1e-9));
    CHECK(ci == doctest::Approx(0.022928388360857628).epsilon(1e-9));
    CHECK(cn < 0.05);
}

TEST_CASE("degenerate sigma_f2 = 0: informed knowledge is worthless") {
    ChannelParams p{};
    p.sigma_f2 = 0.0;
    // Default point: BER underflows to 0 and both capacities are exactly 1.
    CHECK(capacity_informed(ChannelKind::channel_i, p).value() == 1.0);
    CHECK(capacity_noninformed(ChannelKind::channel_i, p).value() == 1.0);
    // Visible-noise variant.
    p.sigma_g2 = p.eb / 8.0;
    for (const double a : {0.01, 1.0, 40.0}) {
        p.a = a;
        const double ci = capacity_informed(ChannelKind::channel_ii, p).value();
        const double cn = capacity_noninformed(ChannelKind::channel_ii, p).value();
        CHECK(std::abs(ci - cn) < 1e-11);
    }
}

TEST_CASE("informed capacity approaches the plateau form for large a") {
    ChannelParams p{};
    p.a = 1000.0;
    const double plateau =
        1.0 - binary_entropy(ber_limit_large_a(ChannelKind::channel_i, p)).value();
    CHECK(std::abs(capacity_informed(ChannelKind::channel_i, p).value() - plateau) <= 1e-3);
    // Informed and non-informed merge there too.
    CHECK(std::abs(capacity_informed(ChannelKind::channel_i, p).value() -
                   capacity_noninformed(ChannelKind::channel_i, p).value()) <= 1e-3);
}

TEST_CASE("informed dominates non-informed over the whole grid") {
    const auto grid = log_grid(1e-3, 1e3, 40);
    for (const ChannelKind kind : {ChannelKind::channel_i, ChannelKind::channel_ii}) {
        for (const double a : grid) {
            ChannelParams p{};
            p.a = a;
            const double ci = capacity_informed(kind, p).value();
            const double cn = capacity_noninformed(kind, p).value();
            CHECK(ci + 1e-12 >= cn);
            CHECK(ci >= 0.0);
            CHECK(ci <= 1.0);
            CHECK(cn >= 0.0);
            CHECK(cn <= 1.0);
        }
    }
}

TEST_CASE("capacities cannot grow when the impulses get stronger") {
    ChannelParams p{};
    p.a = 0.5;
    double prev_ci = 2.0;
    double prev_cn = 2.0;
    for (const double sf2 : {0.0, 1e-5, 1e-4, 7.28e-4, 5e-3}) {
        p.sigma_f2 = sf2;
        const double ci = capacity_informed(ChannelKind::channel_i, p).value();
        const double cn = capacity_noninformed(ChannelKind::channel_i, p).value();
        CHECK(ci <= prev_ci + 1e-12);
        CHECK(cn <= prev_cn + 1e-12);
        prev_ci = ci;
        prev_cn = cn;
    }
}

TEST_CASE("small-a informed loss is about a bits") {
    for (const double a : {0.001, 0.01}) {
        ChannelParams p{};
        p.a = a;
        const double loss = 1.0 - capacity_informed(ChannelKind::channel_i, p).value();
        CHECK(loss >= 0.5 * a);
        CHECK(loss <= 1.5 * a);
    }
}

TEST_CASE("capacity_sweep matches scalar calls and flags bad grid points") {
    const ChannelParams base{};
    const auto single = capacity_sweep(ChannelKind::channel_i, base, std::vector<double>{0.25});
    REQUIRE(single.size() == 1);
    ChannelParams p = base;
    p.a = 0.25;
    CHECK(single[0].c_informed == capacity_informed(ChannelKind::channel_i, p).value());
    CHECK(single[0].c_noninformed == capacity_noninformed(ChannelKind::channel_i, p).value());

    const auto points =
        capacity_sweep(ChannelKind::channel_i, base, std::vector<double>{0.1, -5.0, 2.0});
    REQUIRE(points.size() == 3);
    CHECK(points[0].ok());
    CHECK_FALSE(points[1].ok());
    CHECK(std::isnan(points[1].c_informed));
    CHECK(points[2].ok());
}

TEST_CASE("equal_performance_shift reproduces the informed/non-informed offset") {
    const ChannelParams base{};
    const auto shift = equal_performance_shift(ChannelKind::channel_i, base, 0.02);
    REQUIRE(shift.has_value());
    // Root of c_informed(a) = c_noninformed(0.02); 50-digit reference.
    CHECK(*shift == doctest::Approx(0.078664945030597058).epsilon(2e-5));
    // The located point really has the target capacity.
    ChannelParams at = base;
    at.a = *shift;
    ChannelParams ref = base;
    ref.a = 0.02;
    CHECK(capacity_informed(ChannelKind::channel_i, at).value() ==
          doctest::Approx(capacity_noninformed(ChannelKind::channel_i, ref).value())
              .epsilon(1e-5));
}

TEST_CASE("equal_performance_shift degenerate and no-solution cases") {
    ChannelParams awgn{};
    awgn.sigma_f2 = 0.0;
    awgn.sigma_g2 = awgn.eb / 8.0;
    const auto same = equal_performance_shift(ChannelKind::channel_i, awgn, 0.3);
    REQUIRE(same.has_value());
    CHECK(*same == 0.3);

    // Channel II: the gap is small in bits, but the capacity curve is flat,
    // so the crossing still sits measurably above the starting point. Verify
    // the defining property of the returned a.
    const auto near = equal_performance_shift(ChannelKind::channel_ii, ChannelParams{}, 0.02);
    REQUIRE(near.has_value());
    CHECK(*near > 0.02);
    ChannelParams at{};
    at.a = *near;
    ChannelParams ref{};
    ref.a = 0.02;
    CHECK(capacity_informed(ChannelKind::channel_ii, at).value() ==
          doctest::Approx(capacity_noninformed(ChannelKind::channel_ii, ref).value())
              .epsilon(1e-5));

    // The non-informed capacity at a = 1 sits below the informed curve's
    // dip, so no crossing exists on the monotone stretch.
    const auto none = equal_performance_shift(ChannelKind::channel_i, ChannelParams{}, 1.0);
    CHECK_FALSE(none.has_value());

    CHECK_THROWS_AS(equal_performance_shift(ChannelKind::channel_i, ChannelParams{}, -1.0),
                    std::domain_error);
}

TEST_SUITE_END();
