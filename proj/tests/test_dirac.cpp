// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "spinframe/catalog.hpp"
#include "spinframe/dirac.hpp"
#include "spinframe/sampling.hpp"

using namespace spinframe;

namespace {

SpacetimeSpec spec_of(SpacetimeSpec::Kind k) {
  SpacetimeSpec s;
  s.kind = k;
  return s;
}

const SpacetimeSpec kFlat = spec_of(SpacetimeSpec::Kind::Flat);
const SpacetimeSpec kRindler = spec_of(SpacetimeSpec::Kind::Rindler);
const SpacetimeSpec kSchw = spec_of(SpacetimeSpec::Kind::Schwarzschild);
const SpacetimeSpec kFlrw = spec_of(SpacetimeSpec::Kind::Flrw);

std::vector<Vec4> sample_points(const SpacetimeSpec& spec, int n) {
  const Box box = sampling_box(spec);
  std::vector<Vec4> pts;
  for (int i = 0; i < n; ++i) pts.push_back(box.map(halton_point(static_cast<std::uint64_t>(i))));
  return pts;
}

Vec4 onshell_momentum(std::mt19937_64& gen, double m) {
  Vec4 p{0.0, uniform_range(gen, -1.0, 1.0), uniform_range(gen, -1.0, 1.0),
         uniform_range(gen, -1.0, 1.0)};
  p[0] = std::sqrt(m * m + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
  return p;
}

}  // namespace

TEST_CASE("flat plane waves") {
  const DiracParameters par{1.0, 1.0};

  SECTION("rest branches are the gamma0 eigenvectors") {
    const SpinorField w0 = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    const Vec4c at0 = w0.psi({0, 0, 0, 0});
    REQUIRE(std::abs(at0[0] - cplx(1.0, 0.0)) < 1e-14);
    REQUIRE(std::abs(at0[1]) + std::abs(at0[2]) + std::abs(at0[3]) < 1e-14);

    const SpinorField w1 = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 1);
    const Vec4c b1 = w1.psi({0, 0, 0, 0});
    REQUIRE(std::abs(b1[1] - cplx(1.0, 0.0)) < 1e-14);

    // phase convention: exp(+i m t) at rest
    const Vec4c at_t = w0.psi({0.5, 0.0, 0.0, 0.0});
    REQUIRE(std::abs(at_t[0] - std::exp(cplx(0.0, 0.5))) < 1e-14);
  }
  SECTION("derivative provider matches central differences") {
    std::mt19937_64 gen(3);
    const SpinorField w = flat_plane_wave(par, onshell_momentum(gen, par.mass), 0);
    const Vec4 x{0.3, -0.4, 0.2, 0.8};
    const auto d = w.dpsi(x);
    const double h = 1e-6;
    for (int mu = 0; mu < 4; ++mu) {
      Vec4 xp = x, xm = x;
      xp[static_cast<std::size_t>(mu)] += h;
      xm[static_cast<std::size_t>(mu)] -= h;
      const Vec4c fd = cplx(1.0 / (2.0 * h)) * (w.psi(xp) - w.psi(xm));
      REQUIRE(max_abs(fd - d[static_cast<std::size_t>(mu)]) < 1e-9);
    }
  }
  SECTION("off-shell and bad-branch inputs throw") {
    REQUIRE_THROWS_AS(flat_plane_wave(par, {1.0, 0.5, 0.0, 0.0}, 0), OffShellError);
    REQUIRE_THROWS_AS(flat_plane_wave(par, {-1.0, 0.0, 0.0, 0.0}, 0), OffShellError);
    REQUIRE_THROWS_AS(flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 2), OffShellError);
  }
}

TEST_CASE("dirac residual, direct formulation") {
  const CoframeField flat = load_spacetime(kFlat);
  const PotentialField noA = PotentialField::zero();

  SECTION("rest plane wave solves the equation to 1e-12") {
    const DiracParameters par{1.0, 1.0};
    const SpinorField w = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    for (const Vec4& x : sample_points(kFlat, 10))
      REQUIRE(max_abs(dirac_residual(w, flat, noA, par, x)) < 1e-12);
  }
  SECTION("random on-shell plane waves solve it too") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 10; ++trial) {
      const DiracParameters par{uniform_range(gen, 0.0, 2.0), 1.0};
      const SpinorField w = flat_plane_wave(par, onshell_momentum(gen, par.mass),
                                            static_cast<int>(gen() % 2));
      for (const Vec4& x : sample_points(kFlat, 5))
        REQUIRE(max_abs(dirac_residual(w, flat, noA, par, x)) < 1e-12);
    }
  }
  SECTION("massless constant spinor in flat space is a solution") {
    const DiracParameters par{0.0, 1.0};
    const SpinorField c = SpinorField::constant({cplx(0.3, 0.1), cplx(0.0, -1.0), 1.0, 0.5});
    REQUIRE(max_abs(dirac_residual(c, flat, noA, par, {0.2, 0.4, -0.1, 0.9})) == 0.0);
  }
  SECTION("rindler constant spinor: only the connection term survives") {
    const CoframeField rind = load_spacetime(kRindler);
    const DiracParameters par{0.0, 1.0};
    const Vec4c u{1.0, cplx(0.0, 2.0), -0.5, cplx(1.0, 1.0)};
    const SpinorField c = SpinorField::constant(u);
    const double xx = 2.0;
    const Vec4 x{0.0, xx, 0.0, 0.0};

    // hand reduction: -1/4 K with K = -2 gamma^1 / x leaves gamma^1 u / (2x)
    const GammaRep& rep = GammaRep::standard();
    const Vec4c expected = cplx(1.0 / (2.0 * xx)) * (rep.gamma(1) * u);
    REQUIRE(max_abs(dirac_residual(c, rind, noA, par, x) - expected) < 1e-15);

    // matrix oracle: assemble -1/4 gamma^a gamma^b gamma^c omega_{bc}(v_a)
    // longhand from the spin connection
    const SpinConnection om = spin_connection(rind, x);
    Mat4c k;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cidx = 0; cidx < 4; ++cidx)
          k += cplx(om(a, b, cidx)) * (rep.gamma(a) * rep.gamma(b) * rep.gamma(cidx));
    const Vec4c oracle = cplx(-0.25) * (k * u);
    REQUIRE(max_abs(dirac_residual(c, rind, noA, par, x) - oracle) < 1e-15);
  }
  SECTION("charge term: constant potential shifts a plane wave") {
    // (gamma^a d_a + ie gamma^a A_a + m) u e^{-ipx} picks up e gamma^a A_a u
    // relative to the free residual; with A_mu dx^mu constant this is exact.
    const DiracParameters par{1.0, 0.7};
    const SpinorField w = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    const PotentialField a([](const Vec4&) { return Vec4{0.2, -0.1, 0.0, 0.3}; },
                           [](const Vec4&) { return Mat4d{}; });
    const Vec4 x{0.1, 0.2, 0.3, 0.4};
    const GammaRep& rep = GammaRep::standard();
    Vec4c expected{};
    for (int idx = 0; idx < 4; ++idx) {
      const Vec4 av{0.2, -0.1, 0.0, 0.3};
      expected = expected + (cplx(0.0, par.charge) * cplx(av[static_cast<std::size_t>(idx)])) *
                                (rep.gamma(idx) * w.psi(x));
    }
    REQUIRE(max_abs(dirac_residual(w, flat, a, par, x) - expected) < 1e-13);
  }
}

TEST_CASE("alternative formulation agrees with the direct one") {
  const PotentialField noA = PotentialField::zero();

  SECTION("flat rest wave") {
    const CoframeField flat = load_spacetime(kFlat);
    const DiracParameters par{1.0, 1.0};
    const SpinorField w = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    REQUIRE(max_abs(dirac_residual_alt(w, flat, noA, par, {0.4, 0.1, 0.0, -0.2})) < 1e-12);
  }
  SECTION("random polynomial fields across the analytic catalog, 1e-10") {
    std::mt19937_64 gen(2718);
    for (const auto& spec : {kFlat, kRindler, kSchw, kFlrw}) {
      const CoframeField cf = load_spacetime(spec);
      for (int trial = 0; trial < 5; ++trial) {
        const SpinorField psi = random_cubic_spinor(gen);
        const PotentialField a = random_cubic_potential(gen);
        const DiracParameters par{uniform_range(gen, 0.0, 2.0), uniform_range(gen, -1.0, 1.0)};
        for (const Vec4& x : sample_points(spec, 10)) {
          const Vec4c r1 = dirac_residual(psi, cf, a, par, x);
          const Vec4c r2 = dirac_residual_alt(psi, cf, a, par, x);
          REQUIRE(max_abs(r1 - r2) < 1e-10);
        }
      }
    }
  }
  SECTION("fd derivatives on schwarzschild, 1e-5") {
    SpacetimeSpec fd = kSchw;
    fd.mode = SpacetimeSpec::DerivMode::Fd;
    const CoframeField cf = load_spacetime(fd);
    std::mt19937_64 gen(512);
    const SpinorField psi = random_cubic_spinor(gen);
    const DiracParameters par{1.0, 0.5};
    for (const Vec4& x : sample_points(fd, 10)) {
      const Vec4c r1 = dirac_residual(psi, cf, PotentialField::zero(), par, x);
      const Vec4c r2 = dirac_residual_alt(psi, cf, PotentialField::zero(), par, x);
      REQUIRE(max_abs(r1 - r2) < 1e-5);
    }
  }
}

TEST_CASE("current") {
  const CoframeField flat = load_spacetime(kFlat);

  SECTION("zero spinor gives zero current") {
    const CurrentResult c = current(SpinorField::zero(), flat, 1.0, {0, 0, 0, 0});
    REQUIRE(max_abs(c.j) == 0.0);
    REQUIRE(c.form.max_abs() == 0.0);
  }
  SECTION("rest plane wave with unit charge: j^0 = 1, spatial parts vanish") {
    const DiracParameters par{1.0, 1.0};
    const SpinorField w = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    const CurrentResult c = current(w, flat, par.charge, {0.7, 0.1, -0.3, 0.2});
    REQUIRE(c.j[0] == Catch::Approx(1.0).margin(1e-14));
    for (int i = 1; i < 4; ++i) REQUIRE(std::abs(c.j[static_cast<std::size_t>(i)]) < 1e-14);
    // j_form = j^0 * (*theta_0) = theta^1 ^ theta^2 ^ theta^3
    REQUIRE(c.form(1, 2, 3) == Catch::Approx(1.0).margin(1e-14));
  }
  SECTION("constant lift transforms the current by Lambda") {
    const DiracParameters par{1.0, 1.0};
    const SpinorField rest = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    const GammaRep& rep = GammaRep::standard();
    std::mt19937_64 gen(55);
    for (int trial = 0; trial < 20; ++trial) {
      const LorentzMatrix lam = random_lorentz(gen);
      const SpinHalfTransform lift = spinor_lift(rep, lam);
      const Vec4 x{0.2, 0.4, -0.6, 0.1};
      const Vec4c psi2 = lift.half * rest.psi(x);
      const SpinorField rotated = SpinorField::constant(psi2);
      const CurrentResult c1 = current(rest, flat, par.charge, x);
      const CurrentResult c2 = current(rotated, flat, par.charge, x);
      for (int a = 0; a < 4; ++a) {
        double expected = 0.0;
        for (int b = 0; b < 4; ++b) expected += lam(a, b) * c1.j[static_cast<std::size_t>(b)];
        REQUIRE(c2.j[static_cast<std::size_t>(a)] == Catch::Approx(expected).margin(1e-10));
      }
    }
  }
  SECTION("reality of the bilinear over random fields") {
    std::mt19937_64 gen(808);
    const GammaRep& rep = GammaRep::standard();
    for (int trial = 0; trial < 10; ++trial) {
      const SpinorField psi = random_cubic_spinor(gen);
      for (const Vec4& x : sample_points(kFlat, 10)) {
        const Vec4c v = psi.psi(x);
        const Vec4c b = bar(rep, v);
        for (int a = 0; a < 4; ++a)
          REQUIRE(std::abs(row_dot(b, rep.gamma(a) * v).imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("plane-wave covariance under boosts") {
  const GammaRep& rep = GammaRep::standard();
  const DiracParameters par{1.0, 1.0};
  const double chi = 0.6;
  const LorentzMatrix lam = single_plane_lorentz(0, 1, chi);
  const SpinHalfTransform lift = spinor_lift(rep, lam);

  const Vec4 rest{par.mass, 0.0, 0.0, 0.0};
  Vec4 boosted{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      boosted[static_cast<std::size_t>(a)] += lam(a, b) * rest[static_cast<std::size_t>(b)];

  SECTION("boosted momentum stays on shell and both branches solve") {
    const CoframeField flat = load_spacetime(kFlat);
    for (int branch = 0; branch < 2; ++branch) {
      const SpinorField w = flat_plane_wave(par, boosted, branch);
      for (const Vec4& x : sample_points(kFlat, 5))
        REQUIRE(max_abs(dirac_residual(w, flat, PotentialField::zero(), par, x)) < 1e-12);
    }
  }
  SECTION("the transported rest spinor lies in the boosted null space") {
    const SpinorField w0 = flat_plane_wave(par, rest, 0);
    const Vec4c u2 = lift.half * w0.psi({0, 0, 0, 0});
    Mat4c m2 = cplx(par.mass) * Mat4c::identity();
    const Vec4 p2_lower{-boosted[0], boosted[1], boosted[2], boosted[3]};
    for (int a = 0; a < 4; ++a)
      m2 += cplx(0.0, -p2_lower[static_cast<std::size_t>(a)]) * rep.gamma(a);
    REQUIRE(max_abs(m2 * u2) < 1e-12);
  }
}

TEST_CASE("current divergence") {
  const CoframeField flat = load_spacetime(kFlat);
  const DiracParameters par{1.0, 1.0};

  SECTION("single plane wave: conserved exactly (constant j)") {
    const SpinorField w = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    REQUIRE(std::abs(current_divergence(w, flat, par.charge, {0.1, 0.2, 0.3, 0.4})) < 1e-12);
    DivergenceOptions fd;
    fd.mode = DivergenceOptions::Mode::Fd;
    REQUIRE(std::abs(current_divergence(w, flat, par.charge, {0.1, 0.2, 0.3, 0.4}, fd)) < 1e-10);
  }
  SECTION("superpositions of plane waves conserve current on a grid, fd h=1e-5") {
    std::mt19937_64 gen(1234);
    std::vector<SpinorField> parts;
    std::vector<cplx> coeffs;
    double norm = 0.0;
    for (int i = 0; i < 3; ++i) {
      parts.push_back(flat_plane_wave(par, onshell_momentum(gen, par.mass),
                                      static_cast<int>(gen() % 2)));
      const cplx c = uniform_complex(gen);
      coeffs.push_back(c);
      norm += std::norm(c);
    }
    for (auto& c : coeffs) c /= std::sqrt(norm);
    const SpinorField psi = superpose(parts, coeffs);

    DivergenceOptions fd;
    fd.mode = DivergenceOptions::Mode::Fd;
    fd.fd_step = 1e-5;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Vec4 x{-0.8 + 0.8 * i, 0.5 - 0.5 * j, 0.3, -0.4};
        REQUIRE(std::abs(current_divergence(psi, flat, par.charge, x, fd)) < 1e-8);
        REQUIRE(std::abs(current_divergence(psi, flat, par.charge, x)) < 1e-12);
      }
  }
  SECTION("non-solution fields are visibly non-conserved (negative control)") {
    std::mt19937_64 gen(77);
    const SpinorField psi = random_cubic_spinor(gen);
    const Vec4 x{0.3, 0.5, -0.2, 0.4};
    REQUIRE(std::abs(current_divergence(psi, flat, par.charge, x)) > 1e-3);
  }
  SECTION("two-path oracle on rindler: formula matches d of the coordinate 3-form") {
    // Push j down to coordinate components, take the exterior derivative by
    // central differences, and compare *dj = -(dJ)_{0123}/det(theta).
    const CoframeField rind = load_spacetime(kRindler);
    std::mt19937_64 gen(990);
    const SpinorField psi = random_cubic_spinor(gen, 0.5);
    const Vec4 x{0.2, 1.5, -0.3, 0.4};

    auto coord_form = [&](const Vec4& y) {
      const Mat4d theta = rind.theta(y);
      const CurrentResult c = current(psi, rind, par.charge, y);
      return coordinate_components(theta, c.form);
    };
    const double h = 1e-4;
    // (dJ)_{0123} = d_0 J_{123} - d_1 J_{023} + d_2 J_{013} - d_3 J_{012}
    auto comp = [](const std::vector<double>& j, int a, int b, int c) {
      return j[static_cast<std::size_t>(16 * a + 4 * b + c)];
    };
    double dj0123 = 0.0;
    const int omit[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    for (int mu = 0; mu < 4; ++mu) {
      Vec4 xp = x, xm = x;
      xp[static_cast<std::size_t>(mu)] += h;
      xm[static_cast<std::size_t>(mu)] -= h;
      const auto jp = coord_form(xp);
      const auto jm = coord_form(xm);
      const double d = (comp(jp, omit[mu][0], omit[mu][1], omit[mu][2]) -
                        comp(jm, omit[mu][0], omit[mu][1], omit[mu][2])) /
                       (2.0 * h);
      dj0123 += (mu % 2 == 0 ? 1.0 : -1.0) * d;
    }
    const double expected = -dj0123 / det(rind.theta(x));
    const double got = current_divergence(psi, rind, par.charge, x);
    REQUIRE(got == Catch::Approx(expected).margin(1e-5));
    REQUIRE(std::abs(got) > 1e-2);  // non-trivial instance
  }
}

TEST_CASE("lagrangean density") {
  const CoframeField flat = load_spacetime(kFlat);

  SECTION("pure EM with F_01 = 1 gives +1/2") {
    Mat4d f;
    f(0, 1) = 1.0;
    f(1, 0) = -1.0;
    const PotentialField a = PotentialField::constant_faraday(f);
    const DiracParameters par{1.0, 1.0};
    const cplx l = lagrangean_density(SpinorField::zero(), a, flat, par, {0.3, 0.1, 0.0, 0.0});
    REQUIRE(l.real() == Catch::Approx(0.5).margin(1e-14));
    REQUIRE(l.imag() == 0.0);
    // oracle: -1/4 F^{ab} F_{ab} with F^{01} = -F_01
    const double f2 = 2.0 * (-1.0) * 1.0;
    REQUIRE(l.real() == Catch::Approx(-0.25 * f2).margin(1e-14));
  }
  SECTION("on-shell plane wave with A=0 has vanishing density") {
    const DiracParameters par{1.0, 1.0};
    const SpinorField w = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    const cplx l = lagrangean_density(w, PotentialField::zero(), flat, par, {0.2, 0.5, 0.1, 0.9});
    REQUIRE(std::abs(l) < 1e-12);
  }
  SECTION("real-part variant agrees with Re of the complex one") {
    std::mt19937_64 gen(303);
    const SpinorField psi = random_cubic_spinor(gen);
    const PotentialField a = random_cubic_potential(gen);
    const DiracParameters par{0.8, -0.4};
    for (const Vec4& x : sample_points(kFlat, 10)) {
      const cplx l = lagrangean_density(psi, a, flat, par, x);
      REQUIRE(lagrangean_density_real(psi, a, flat, par, x) ==
              Catch::Approx(l.real()).margin(1e-13));
    }
  }
}

TEST_CASE("rotate coframe and spinor") {
  const CoframeField flat = load_spacetime(kFlat);
  const DiracParameters par{1.0, 1.0};

  SECTION("identity transformation leaves fields unchanged") {
    const SpinorField w = flat_plane_wave(par, {1.0, 0.0, 0.0, 0.0}, 0);
    LocalLorentzField id;
    id.factors.push_back({1, 2, ScalarField::constant(0.0)});
    const auto [cf2, psi2] = rotate_coframe_and_spinor(flat, w, id);
    const Vec4 x{0.4, 0.3, -0.7, 0.1};
    REQUIRE(max_abs(cf2.theta(x) - flat.theta(x)) == 0.0);
    REQUIRE(max_abs(psi2.psi(x) - w.psi(x)) == 0.0);
  }
  SECTION("constant spatial rotation: current and metric unchanged") {
    const SpinorField w = flat_plane_wave(par, {std::sqrt(2.0), 1.0, 0.0, 0.0}, 0);
    LocalLorentzField rot;
    rot.factors.push_back({1, 2, ScalarField::constant(0.8)});
    const auto [cf2, psi2] = rotate_coframe_and_spinor(flat, w, rot);
    for (const Vec4& x : sample_points(kFlat, 10)) {
      REQUIRE(max_abs(metric_from_coframe(cf2, x) - metric_from_coframe(flat, x)) < 1e-12);
      // coordinate components of the current are frame independent
      const CurrentResult c1 = current(w, flat, par.charge, x);
      const CurrentResult c2 = current(psi2, cf2, par.charge, x);
      const Mat4d v1 = frame_from_coframe(flat, x);
      const Mat4d v2 = frame_from_coframe(cf2, x);
      for (int mu = 0; mu < 4; ++mu) {
        double j1 = 0.0, j2 = 0.0;
        for (int a = 0; a < 4; ++a) {
          j1 += c1.j[static_cast<std::size_t>(a)] * v1(a, mu);
          j2 += c2.j[static_cast<std::size_t>(a)] * v2(a, mu);
        }
        REQUIRE(j2 == Catch::Approx(j1).margin(1e-10));
      }
    }
  }
  SECTION("transformed coframe derivative provider matches central differences") {
    const CoframeField rind = load_spacetime(kRindler);
    LocalLorentzField L;
    L.factors.push_back({1, 2, ScalarField::sine(0.3, 1)});
    L.factors.push_back({0, 1, ScalarField::sine(0.2, 0, 0.5)});
    std::mt19937_64 gen(41);
    const SpinorField psi = random_cubic_spinor(gen);
    const auto [cf2, psi2] = rotate_coframe_and_spinor(rind, psi, L);
    const Vec4 x{0.3, 1.8, 0.2, -0.4};
    const auto d_analytic = cf2.dtheta(x);
    const double h = 1e-6;
    for (int nu = 0; nu < 4; ++nu) {
      Vec4 xp = x, xm = x;
      xp[static_cast<std::size_t>(nu)] += h;
      xm[static_cast<std::size_t>(nu)] -= h;
      const Mat4d fd = (1.0 / (2.0 * h)) * (cf2.theta(xp) - cf2.theta(xm));
      REQUIRE(max_abs(fd - d_analytic.d[static_cast<std::size_t>(nu)]) < 1e-8);
    }
    const auto dp_analytic = psi2.dpsi(x);
    for (int nu = 0; nu < 4; ++nu) {
      Vec4 xp = x, xm = x;
      xp[static_cast<std::size_t>(nu)] += h;
      xm[static_cast<std::size_t>(nu)] -= h;
      const Vec4c fd = cplx(1.0 / (2.0 * h)) * (psi2.psi(xp) - psi2.psi(xm));
      REQUIRE(max_abs(fd - dp_analytic[static_cast<std::size_t>(nu)]) < 1e-7);
    }
  }
  SECTION("position-dependent rotation carries solutions to solutions") {
    const SpinorField w = flat_plane_wave(par, {std::sqrt(3.0), 1.0, -1.0, 0.0}, 1);
    LocalLorentzField L;
    L.factors.push_back({1, 2, ScalarField::sine(0.3, 1)});
    const auto [cf2, psi2] = rotate_coframe_and_spinor(flat, w, L);
    for (const Vec4& x : sample_points(kFlat, 15)) {
      const double r1 = max_abs(dirac_residual(w, flat, PotentialField::zero(), par, x));
      const double r2 = max_abs(dirac_residual(psi2, cf2, PotentialField::zero(), par, x));
      REQUIRE(r1 < 1e-10);
      REQUIRE(r2 < 1e-8);
    }
  }
  SECTION("lagrangean invariance for position-dependent rotations and boosts") {
    std::mt19937_64 gen(5150);
    for (const auto& spec : {kFlat, kRindler}) {
      const CoframeField cf = load_spacetime(spec);
      const SpinorField psi = random_cubic_spinor(gen, 0.7);
      const PotentialField a = random_cubic_potential(gen, 0.5);
      LocalLorentzField L;
      L.factors.push_back({1, 2, ScalarField::sine(0.3, 1)});
      L.factors.push_back({0, 3, ScalarField::sine(0.25, 2, 1.0)});
      const auto [cf2, psi2] = rotate_coframe_and_spinor(cf, psi, L);
      for (const Vec4& x : sample_points(spec, 15)) {
        const cplx l1 = lagrangean_density(psi, a, cf, par, x);
        const cplx l2 = lagrangean_density(psi2, a, cf2, par, x);
        REQUIRE(std::abs(l2 - l1) < 1e-9);
      }
    }
  }
  SECTION("rejects malformed planes") {
    LocalLorentzField bad;
    bad.factors.push_back({2, 1, ScalarField::constant(0.1)});
    REQUIRE_THROWS_AS(rotate_coframe_and_spinor(flat, SpinorField::zero(), bad),
                      std::invalid_argument);
  }
}
