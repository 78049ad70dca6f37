#include "cqed/variational.hpp"

#include <cmath>
#include <numbers>

#include "cqed/errors.hpp"
#include "cqed/quadrature.hpp"

namespace cqed {

namespace {

constexpr double kPi = std::numbers::pi;

// unit bump and its radial derivatives on [0, 1)
double bump(double r) {
    const double u = 1.0 - r * r;
    return u > 0 ? std::exp(-1.0 / u) : 0.0;
}

double bump_prime(double r) {
    const double u = 1.0 - r * r;
    if (u <= 0) return 0.0;
    return bump(r) * (-2.0 * r / (u * u));
}

double bump_second(double r) {
    const double u = 1.0 - r * r;
    if (u <= 0) return 0.0;
    const double u2 = u * u;
    return bump(r) * (-2.0 / u2 - 8.0 * r * r / (u2 * u) + 4.0 * r * r / (u2 * u2));
}

// angular average of a radial function over a sphere of radius s whose
// center sits at distance d from the function's origin
double shell_average(const std::function<double(double)>& v_r, double s, double d) {
    auto integrand = [&](double t) { return v_r(std::sqrt(d * d + s * s + 2.0 * d * s * t)); };
    return 0.5 * adaptive_integrate(integrand, -1.0, 1.0, 1e-14, 1e-12).value;
}

// <v_ext> for one normalized mollifier centered at distance d from the origin
double potential_expectation(const ExternalPotential& v_ext, double d,
                             const PhysicalConstants& pc) {
    if (v_ext.kind == ExternalPotential::Kind::zero) return 0.0;
    if (!v_ext.is_radial())
        throw config_error("trial_energy: the trial-state integrals need a radial potential");
    const MollifierMoments& mm = mollifier_moments();
    auto v_r = [&](double r) { return v_ext.radial(r, pc); };
    auto outer = [&](double s) {
        const double f = bump(s);
        return 4.0 * kPi * s * s * mm.norm_const * mm.norm_const * f * f *
               shell_average(v_r, s, d);
    };
    return adaptive_integrate(outer, 0.0, 1.0, 1e-13, 1e-11).value;
}

struct AxisGeometry {
    std::vector<Eigen::Vector3d> centers;
    double sum_x = 0.0;  // sum over centers of the polarization-axis component

    explicit AxisGeometry(const std::vector<Eigen::Vector3d>& c) : centers(c) {
        for (const auto& v : centers) sum_x += v.x();
    }
};

EnergyBreakdown trial_energy_impl(const AxisGeometry& geom, const PhotonTrialState& photon,
                                  const ModeSet& modes, const ExternalPotential& v_ext,
                                  const PhysicalConstants& pc, bool include_dip,
                                  double coulomb) {
    modes.validate(pc);
    photon.validate(modes.size());
    const MollifierMoments& mm = mollifier_moments();
    const int n = static_cast<int>(geom.centers.size());

    EnergyBreakdown e;
    e.dip_included = include_dip;
    e.kinetic = n * mm.kinetic * pc.hbar * pc.hbar / pc.m;
    e.photon = photon.energy(modes, pc);
    for (const auto& c : geom.centers) e.potential += potential_expectation(v_ext, c.norm(), pc);
    e.coulomb = coulomb;
    for (int a = 0; a < modes.size(); ++a)
        e.bilinear -= photon.mean_coordinate(a) * modes[a].signed_lambda() * geom.sum_x;
    if (include_dip) {
        // <(eps.R)^2> = (sum_i eps.c_i)^2 + N * <s^2>/3 for disjoint
        // spherically symmetric orbitals
        const double spread = n * mm.second_moment / 3.0;
        for (int a = 0; a < modes.size(); ++a) {
            const double lam2 = modes[a].lambda * modes[a].lambda;
            e.dip += lam2 / (2.0 * pc.hbar * modes[a].omega) *
                     (geom.sum_x * geom.sum_x + spread);
        }
    }
    e.total = e.kinetic + e.photon + e.potential + e.coulomb + e.bilinear + e.dip;
    return e;
}

double pair_coulomb_quadrature(double d, double rel_tol) {
    const MollifierMoments& mm = mollifier_moments();
    const double n2 = mm.norm_const * mm.norm_const;
    // potential of one orbital at distance u from its center, by raw
    // angular quadrature (no closed shells anywhere)
    auto phi = [&](double u) {
        auto outer = [&](double sj) {
            const double f = bump(sj);
            auto ang = [&](double t) {
                return 1.0 / std::sqrt(u * u + sj * sj - 2.0 * u * sj * t);
            };
            return 2.0 * kPi * sj * sj * n2 * f * f *
                   adaptive_integrate(ang, -1.0, 1.0, 1e-13, rel_tol * 0.1).value;
        };
        return adaptive_integrate(outer, 0.0, 1.0, 1e-13, rel_tol * 0.1).value;
    };
    auto outer_i = [&](double si) {
        const double f = bump(si);
        auto ang = [&](double t) {
            return phi(std::sqrt(d * d + si * si + 2.0 * d * si * t));
        };
        return 2.0 * kPi * si * si * n2 * f * f *
               adaptive_integrate(ang, -1.0, 1.0, 1e-12, rel_tol).value;
    };
    return adaptive_integrate(outer_i, 0.0, 1.0, 1e-12, rel_tol).value;
}

}  // namespace

void SlaterMollifierConfig::validate() const {
    if (n_electrons < 1) throw config_error("SlaterMollifierConfig: n_electrons must be >= 1");
    if (spacing <= 0) throw config_error("SlaterMollifierConfig: spacing must be > 0");
    if (n_electrons > 1 && !supports_disjoint())
        throw config_error("SlaterMollifierConfig: orbital supports overlap (spacing*|kappa| < 2)");
}

PhotonTrialState PhotonTrialState::two_lowest(int n_modes) {
    PhotonTrialState s;
    Eigen::VectorXd w(2);
    w << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    s.weights.assign(n_modes, w);
    return s;
}

void PhotonTrialState::validate(int n_modes) const {
    if (static_cast<int>(weights.size()) != n_modes)
        throw config_error("PhotonTrialState: one weight vector per mode required");
    for (const auto& w : weights) {
        if (w.size() < 1) throw config_error("PhotonTrialState: empty weight vector");
        if (std::abs(w.norm() - 1.0) > 1e-12)
            throw config_error("PhotonTrialState: weights must be normalized");
    }
}

double PhotonTrialState::mean_coordinate(int mode) const {
    const Eigen::VectorXd& w = weights.at(mode);
    double p = 0.0;
    for (int n = 0; n + 1 < w.size(); ++n)
        p += std::sqrt(2.0) * w[n] * w[n + 1] * std::sqrt(n + 1.0);
    return p;
}

double PhotonTrialState::mean_coordinate_squared(int mode) const {
    const Eigen::VectorXd& w = weights.at(mode);
    double p2 = 0.0;
    for (int n = 0; n < w.size(); ++n) p2 += w[n] * w[n] * (n + 0.5);
    for (int n = 0; n + 2 < w.size(); ++n)
        p2 += w[n] * w[n + 2] * std::sqrt((n + 1.0) * (n + 2.0));
    return p2;
}

double PhotonTrialState::energy(const ModeSet& modes, const PhysicalConstants& pc) const {
    double e = 0.0;
    for (int a = 0; a < modes.size(); ++a) {
        const Eigen::VectorXd& w = weights.at(a);
        for (int n = 0; n < w.size(); ++n)
            e += w[n] * w[n] * pc.hbar * modes[a].omega * (n + 0.5);
    }
    return e;
}

const MollifierMoments& mollifier_moments() {
    static const MollifierMoments mm = [] {
        MollifierMoments m;
        m.norm_sq_raw = adaptive_integrate(
                            [](double r) {
                                const double f = bump(r);
                                return 4.0 * kPi * r * r * f * f;
                            },
                            0.0, 1.0, 1e-14, 1e-13)
                            .value;
        m.norm_const = 1.0 / std::sqrt(m.norm_sq_raw);
        const double n2 = m.norm_const * m.norm_const;
        m.kinetic = 0.5 * n2 *
                    adaptive_integrate(
                        [](double r) {
                            const double fp = bump_prime(r);
                            return 4.0 * kPi * r * r * fp * fp;
                        },
                        0.0, 1.0, 1e-14, 1e-13)
                        .value;
        m.kinetic_laplacian = -0.5 * n2 *
                              adaptive_integrate(
                                  [](double r) {
                                      return 4.0 * kPi * bump(r) *
                                             (r * r * bump_second(r) + 2.0 * r * bump_prime(r));
                                  },
                                  0.0, 1.0, 1e-14, 1e-13)
                                  .value;
        m.second_moment = n2 * adaptive_integrate(
                                   [](double r) {
                                       const double f = bump(r);
                                       return 4.0 * kPi * r * r * r * r * f * f;
                                   },
                                   0.0, 1.0, 1e-14, 1e-13)
                                   .value;
        return m;
    }();
    return mm;
}

std::pair<double, double> mollifier_norm_and_kinetic(const PhysicalConstants& pc) {
    const MollifierMoments& mm = mollifier_moments();
    return {mm.norm_const, mm.kinetic * pc.hbar * pc.hbar / pc.m};
}

DipoleMoment dipole_moment(const MollifierConfig& config) {
    const MollifierMoments& mm = mollifier_moments();
    const double n2 = mm.norm_const * mm.norm_const;
    // centered first moment: odd integrand, quadrature should see ~0
    auto outer = [&](double s) {
        const double f = bump(s);
        const double ang = adaptive_integrate([](double t) { return t; }, -1.0, 1.0, 1e-16, 1e-14).value;
        return 2.0 * kPi * s * s * s * n2 * f * f * ang;
    };
    const double res = adaptive_integrate(outer, 0.0, 1.0, 1e-15, 1e-13).value;
    return {config.center(), std::abs(res)};
}

EnergyBreakdown trial_energy(const MollifierConfig& config, const PhotonTrialState& photon,
                             const ModeSet& modes, const ExternalPotential& v_ext,
                             const PhysicalConstants& pc, bool include_dip) {
    AxisGeometry geom({config.center()});
    return trial_energy_impl(geom, photon, modes, v_ext, pc, include_dip, 0.0);
}

EnergyBreakdown trial_energy(const SlaterMollifierConfig& config, const PhotonTrialState& photon,
                             const ModeSet& modes, const ExternalPotential& v_ext,
                             const PhysicalConstants& pc, bool include_dip) {
    config.validate();
    std::vector<Eigen::Vector3d> centers;
    for (int i = 0; i < config.n_electrons; ++i) centers.push_back(config.center(i));
    AxisGeometry geom(centers);
    const double w = config.n_electrons > 1 ? coulomb_point_charge(config, pc) : 0.0;
    return trial_energy_impl(geom, photon, modes, v_ext, pc, include_dip, w);
}

double coulomb_point_charge(const SlaterMollifierConfig& config, const PhysicalConstants& pc) {
    config.validate();
    const double k = pc.e * pc.e / (4.0 * kPi * pc.eps0);
    double w = 0.0;
    for (int i = 0; i < config.n_electrons; ++i)
        for (int j = i + 1; j < config.n_electrons; ++j)
            w += k / (config.center(i) - config.center(j)).norm();
    return w;
}

double coulomb_quadrature(const SlaterMollifierConfig& config, const PhysicalConstants& pc,
                          double rel_tol) {
    config.validate();
    const double k = pc.e * pc.e / (4.0 * kPi * pc.eps0);
    double w = 0.0;
    for (int i = 0; i < config.n_electrons; ++i)
        for (int j = i + 1; j < config.n_electrons; ++j)
            w += k * pair_coulomb_quadrature((config.center(i) - config.center(j)).norm(), rel_tol);
    return w;
}

TrialScanResult unboundedness_scan(const std::vector<double>& a_values, int n_electrons,
                                   const Eigen::Vector3d& kappa, const PhotonTrialState& photon,
                                   const ModeSet& modes, const ExternalPotential& v_ext,
                                   const PhysicalConstants& pc, bool include_dip) {
    if (a_values.size() < 2) throw config_error("unboundedness_scan: need at least two points");

    TrialScanResult out;
    out.a_values = a_values;
    for (double a : a_values) {
        if (n_electrons == 1) {
            MollifierConfig cfg{a, kappa};
            out.energies.push_back(trial_energy(cfg, photon, modes, v_ext, pc, include_dip));
        } else {
            SlaterMollifierConfig cfg;
            cfg.n_electrons = n_electrons;
            cfg.a = a;
            cfg.kappa = kappa;
            out.energies.push_back(trial_energy(cfg, photon, modes, v_ext, pc, include_dip));
        }
    }

    for (int a = 0; a < modes.size(); ++a)
        out.predicted_slope -=
            n_electrons * photon.mean_coordinate(a) * modes[a].signed_lambda() * kappa.x();

    // tail = points where the external potential no longer contributes
    for (std::size_t i = 0; i < out.energies.size(); ++i)
        if (std::abs(out.energies[i].potential) < 1e-12) out.tail_indices.push_back(static_cast<int>(i));
    if (out.tail_indices.size() < 2)
        for (std::size_t i = out.energies.size() / 2; i < out.energies.size(); ++i)
            out.tail_indices.push_back(static_cast<int>(i));

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(out.tail_indices.size());
    for (int i : out.tail_indices) {
        sx += a_values[i];
        sy += out.energies[i].total;
        sxx += a_values[i] * a_values[i];
        sxy += a_values[i] * out.energies[i].total;
    }
    out.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

Eigen::Vector3d default_kappa(const ModeSet& modes) {
    double sum = 0.0;
    for (const auto& m : modes.modes) sum += m.signed_lambda();
    if (modes.size() == 1 && modes[0].lambda != 0.0) {
        const double lam = modes[0].signed_lambda();
        return {lam / (lam * lam), 0.0, 0.0};
    }
    if (sum == 0.0) return {1.0, 0.0, 0.0};
    return {sum > 0 ? 1.0 : -1.0, 0.0, 0.0};
}

}  // namespace cqed
