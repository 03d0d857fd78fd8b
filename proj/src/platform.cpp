#include "forge/platform.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "forge/errors.hpp"
#include "forge/floquet.hpp"
#include "forge/parallel.hpp"

namespace forge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// mu_B/hbar in rad/(s*T)
constexpr double kMuBOverHbar = kTwoPi * kMuBOverH_GHzPerT * 1e9;
constexpr double kGaussPerTesla = 1e4;

// Real trigonometric polynomial sum_k a_k cos(k w t) + b_k sin(k w t) with
// integer harmonics; closed under products, which is what makes the frame
// change exact.
struct HarmonicSeries {
  std::map<int, double> cos_terms;  // k >= 0
  std::map<int, double> sin_terms;  // k >= 1

  static HarmonicSeries constant(double a) {
    HarmonicSeries s;
    if (a != 0.0) s.cos_terms[0] = a;
    return s;
  }
  static HarmonicSeries cosine(int k, double a) {
    HarmonicSeries s;
    s.add_cos(k, a);
    return s;
  }
  static HarmonicSeries sine(int k, double a) {
    HarmonicSeries s;
    s.add_sin(k, a);
    return s;
  }

  void add_cos(int k, double a) {
    if (a == 0.0) return;
    cos_terms[std::abs(k)] += a;  // cos(-x) = cos(x)
  }
  void add_sin(int k, double a) {
    if (a == 0.0 || k == 0) return;
    if (k < 0) a = -a;  // sin(-x) = -sin(x)
    sin_terms[std::abs(k)] += a;
  }
  void accumulate(const HarmonicSeries& other) {
    for (auto [k, a] : other.cos_terms) cos_terms[k] += a;
    for (auto [k, a] : other.sin_terms) sin_terms[k] += a;
  }

  HarmonicSeries times(const HarmonicSeries& o) const {
    HarmonicSeries out;
    for (auto [k1, a1] : cos_terms) {
      for (auto [k2, a2] : o.cos_terms) {  // cos*cos
        out.add_cos(k1 - k2, 0.5 * a1 * a2);
        out.add_cos(k1 + k2, 0.5 * a1 * a2);
      }
      for (auto [k2, a2] : o.sin_terms) {  // cos*sin
        out.add_sin(k1 + k2, 0.5 * a1 * a2);
        out.add_sin(k2 - k1, 0.5 * a1 * a2);
      }
    }
    for (auto [k1, a1] : sin_terms) {
      for (auto [k2, a2] : o.cos_terms) {  // sin*cos
        out.add_sin(k1 + k2, 0.5 * a1 * a2);
        out.add_sin(k1 - k2, 0.5 * a1 * a2);
      }
      for (auto [k2, a2] : o.sin_terms) {  // sin*sin
        out.add_cos(k1 - k2, 0.5 * a1 * a2);
        out.add_cos(k1 + k2, -0.5 * a1 * a2);
      }
    }
    return out;
  }
};

HarmonicSeries series_of(const TimeProfile& p, double amplitude) {
  switch (p.kind) {
    case TimeProfile::Kind::constant:
      return HarmonicSeries::constant(amplitude);
    case TimeProfile::Kind::cosine:
      return HarmonicSeries::cosine(p.harmonic, amplitude);
    case TimeProfile::Kind::sine:
      return HarmonicSeries::sine(p.harmonic, amplitude);
    default:
      throw std::invalid_argument(
          "frame change supports constant/cosine/sine profiles only");
  }
}

int site_multiple(int site, const std::array<int, 2>& multiples) {
  return site == 2 ? multiples[1] : multiples[0];  // A B A unit
}

}  // namespace

NanomagnetParams NanomagnetParams::make(std::array<double, 3> g_a,
                                        std::array<double, 3> g_b, double b_z_tesla,
                                        double j_par_over_2pi_ghz,
                                        double omega_over_j) {
  NanomagnetParams np;
  np.g_a = g_a;
  np.g_b = g_b;
  np.b_z_tesla = b_z_tesla;
  np.j_par = kTwoPi * j_par_over_2pi_ghz * 1e9;
  np.j_perp = np.j_par / 2.0;
  np.omega = omega_over_j * np.coupling_j();
  return np;
}

double NanomagnetParams::larmor(int site) const {
  double g = site == 2 ? g_b[2] : g_a[2];
  return g * kMuBOverHbar * b_z_tesla;
}

double NanomagnetParams::detuning_ratio() const {
  return std::abs((g_a[2] - g_b[2]) * kMuBOverHbar * b_z_tesla) / std::abs(j_perp);
}

FieldAmplitudes nanomagnet_fields(const NanomagnetParams& np, double f0_over_omega,
                                  double f1_over_omega, double f2_over_omega) {
  if (np.g_b[0] <= 0.0 || np.g_b[1] <= 0.0)
    throw std::invalid_argument("transverse g factors of the driven species must be positive");
  auto tesla = [&](double f_over_omega, double g, double factor) {
    return factor * f_over_omega * np.omega / (g * kMuBOverHbar);
  };
  FieldAmplitudes fa;
  fa.b0x = kGaussPerTesla * tesla(f0_over_omega, np.g_b[0], 2.0);
  fa.b1x = kGaussPerTesla * tesla(f1_over_omega, np.g_b[0], 1.0);
  fa.b2x = kGaussPerTesla * tesla(f2_over_omega, np.g_b[0], 1.0);
  fa.b0y = kGaussPerTesla * tesla(f0_over_omega, np.g_b[1], 2.0);
  fa.b1y = kGaussPerTesla * tesla(f1_over_omega, np.g_b[1], 1.0);
  fa.b2y = kGaussPerTesla * tesla(f2_over_omega, np.g_b[1], 1.0);
  return fa;
}

std::array<double, 3> drive_from_fields(const NanomagnetParams& np,
                                        const FieldAmplitudes& fa) {
  auto f_over_omega = [&](double gauss, double g, double factor) {
    return gauss / kGaussPerTesla * g * kMuBOverHbar / (factor * np.omega);
  };
  return {f_over_omega(fa.b0x, np.g_b[0], 2.0), f_over_omega(fa.b1x, np.g_b[0], 1.0),
          f_over_omega(fa.b2x, np.g_b[0], 1.0)};
}

SuperconductingReport superconducting_map(double j_mhz, double omega_over_j,
                                          const DriveProtocol& p, double tau_c_us) {
  SuperconductingReport r;
  r.j_mhz = j_mhz;
  r.omega_mhz = omega_over_j * j_mhz;
  r.j_zxz_mhz = std::abs(p.c_target_over_j()) * j_mhz;
  r.amplitudes_mhz[0] = std::abs(p.f0_over_omega) * r.omega_mhz;
  for (std::size_t j = 0; j < p.harmonics_over_omega.size() && j < 2; ++j)
    r.amplitudes_mhz[j + 1] = std::abs(p.harmonics_over_omega[j]) * r.omega_mhz;
  r.max_amplitude_mhz =
      std::max({r.amplitudes_mhz[0], r.amplitudes_mhz[1], r.amplitudes_mhz[2]});
  r.stroboscopic_period_2t_ns = 2.0e3 / r.omega_mhz;  // 2T = 2/(omega/2pi)
  r.tau_c_us = tau_c_us;
  r.tau_c_over_2t = tau_c_us * 1e3 / r.stroboscopic_period_2t_ns;
  r.strong_coupling_fom = tau_c_us * r.j_zxz_mhz;  // us * MHz = cycles
  return r;
}

LarmorSnap snapped_larmor(const NanomagnetParams& np) {
  if (np.omega <= 0.0) throw std::invalid_argument("drive frequency must be positive");
  LarmorSnap snap;
  snap.multiples[0] =
      static_cast<int>(std::max<long>(1, std::lround(np.larmor(1) / np.omega)));
  snap.multiples[1] =
      static_cast<int>(std::max<long>(1, std::lround(np.larmor(2) / np.omega)));
  snap.product_tesla =
      (snap.multiples[1] - snap.multiples[0]) * np.omega / kMuBOverHbar;
  return snap;
}

TimeDependentHamiltonian lab_frame_hamiltonian(const NanomagnetParams& np,
                                               const FieldAmplitudes& fa,
                                               bool include_crosstalk) {
  const double j = np.coupling_j();
  const double w = np.omega / j;  // omega in units of J
  LarmorSnap snap = snapped_larmor(np);

  PauliSum stat(3);
  for (int site = 1; site <= 3; ++site) {
    std::string z = "III";
    z[site - 1] = 'Z';
    stat.add_term(z, 0.5 * site_multiple(site, snap.multiples) * w);
  }
  stat.add_term("ZZI", 1.0);
  stat.add_term("IZZ", 1.0);
  double perp = np.j_perp / (2.0 * j);
  for (const char* s : {"XXI", "YYI", "IXX", "IYY"}) stat.add_term(s, perp);

  std::vector<DrivenTerm> driven;
  auto add_drive = [&](int site, double g_x, double g_y) {
    std::string xs = "III", ys = "III";
    xs[site - 1] = 'X';
    ys[site - 1] = 'Y';
    PauliSum xk(3, {{xs, 1.0}});
    PauliSum yk(3, {{ys, 1.0}});
    const int mb = snap.multiples[1];  // tones center on the B-spin Larmor line
    struct Tone {
      double gauss;
      int detuning;
    };
    for (const Tone& tone : std::initializer_list<Tone>{
             {fa.b0x, 0}, {fa.b1x, 1}, {fa.b1x, -1}, {fa.b2x, 2}, {fa.b2x, -2}}) {
      double amp = 0.5 * g_x * kMuBOverHbar * tone.gauss / kGaussPerTesla / j;
      if (amp != 0.0)
        driven.push_back({xk, TimeProfile::cosine(mb + tone.detuning, w), amp});
    }
    for (const Tone& tone : std::initializer_list<Tone>{
             {fa.b0y, 0}, {fa.b1y, 1}, {fa.b1y, -1}, {fa.b2y, 2}, {fa.b2y, -2}}) {
      double amp = 0.5 * g_y * kMuBOverHbar * tone.gauss / kGaussPerTesla / j;
      if (amp != 0.0)
        driven.push_back({yk, TimeProfile::sine(mb + tone.detuning, w), amp});
    }
  };
  add_drive(2, np.g_b[0], np.g_b[1]);
  if (include_crosstalk) {
    add_drive(1, np.g_a[0], np.g_a[1]);
    add_drive(3, np.g_a[0], np.g_a[1]);
  }
  return TimeDependentHamiltonian(std::move(stat), std::move(driven));
}

TimeDependentHamiltonian interaction_picture(const TimeDependentHamiltonian& h,
                                             const std::array<int, 2>& multiples,
                                             double omega) {
  if (h.n() != 3) throw dimension_error("frame change implemented for the 3-spin unit");
  // Remove the Zeeman generator, then rotate every remaining term sitewise:
  // X_k -> cos(M_k w t) X_k - sin(M_k w t) Y_k,
  // Y_k -> cos(M_k w t) Y_k + sin(M_k w t) X_k.
  PauliSum rest = h.static_part();
  for (int site = 1; site <= 3; ++site) {
    std::string z = "III";
    z[site - 1] = 'Z';
    rest.add_term(z, -0.5 * site_multiple(site, multiples) * omega);
  }

  std::map<std::string, HarmonicSeries> rotated;
  auto rotate_term = [&](const std::string& s, double coeff,
                         const HarmonicSeries& profile) {
    std::vector<std::pair<std::string, HarmonicSeries>> parts{
        {s, HarmonicSeries::constant(coeff).times(profile)}};
    for (int site = 1; site <= 3; ++site) {
      char l = s[site - 1];
      if (l != 'X' && l != 'Y') continue;
      int m = site_multiple(site, multiples);
      std::vector<std::pair<std::string, HarmonicSeries>> next;
      for (auto& [str, series] : parts) {
        std::string flipped = str;
        flipped[site - 1] = l == 'X' ? 'Y' : 'X';
        double sign = l == 'X' ? -1.0 : 1.0;
        next.emplace_back(str, series.times(HarmonicSeries::cosine(m, 1.0)));
        next.emplace_back(flipped, series.times(HarmonicSeries::sine(m, sign)));
      }
      parts = std::move(next);
    }
    for (auto& [str, series] : parts) rotated[str].accumulate(series);
  };

  for (const auto& [s, c] : rest.terms())
    rotate_term(s, c.real(), HarmonicSeries::constant(1.0));
  for (const auto& d : h.driven())
    for (const auto& [s, c] : d.op.terms())
      rotate_term(s, c.real() * d.amplitude, series_of(d.profile, 1.0));

  // Re-emit grouped by harmonic so the integrator sees few profiles.
  PauliSum stat(3);
  std::map<std::pair<int, int>, PauliSum> groups;  // (0 cos | 1 sin, k) -> op
  for (const auto& [s, series] : rotated) {
    for (auto [k, a] : series.cos_terms) {
      if (std::abs(a) < kPruneThreshold) continue;
      if (k == 0) {
        stat.add_term(s, a);
      } else {
        auto [it, unused] = groups.try_emplace({0, k}, PauliSum(3));
        it->second.add_term(s, a);
      }
    }
    for (auto [k, a] : series.sin_terms) {
      if (std::abs(a) < kPruneThreshold) continue;
      auto [it, unused] = groups.try_emplace({1, k}, PauliSum(3));
      it->second.add_term(s, a);
    }
  }
  std::vector<DrivenTerm> driven;
  for (auto& [key, op] : groups) {
    if (op.empty()) continue;
    TimeProfile p = key.first == 0 ? TimeProfile::cosine(key.second, omega)
                                   : TimeProfile::sine(key.second, omega);
    driven.push_back({std::move(op), p, 1.0});
  }
  return TimeDependentHamiltonian(std::move(stat), std::move(driven));
}

TimeDependentHamiltonian discard_fast_terms(const TimeDependentHamiltonian& h,
                                            int k_min) {
  std::vector<DrivenTerm> kept;
  for (const auto& d : h.driven())
    if (d.profile.max_harmonic() < k_min) kept.push_back(d);
  return TimeDependentHamiltonian(h.static_part(), std::move(kept));
}

std::vector<CrosstalkPoint> crosstalk_distance(const NanomagnetParams& base,
                                               const std::vector<double>& g_bz_values,
                                               double f0_over_omega,
                                               double f1_over_omega,
                                               double f2_over_omega,
                                               const StepControl& sc) {
  if (g_bz_values.empty()) throw std::invalid_argument("sweep needs at least one point");
  FieldAmplitudes fa =
      nanomagnet_fields(base, f0_over_omega, f1_over_omega, f2_over_omega);
  std::vector<CrosstalkPoint> out(g_bz_values.size());
  parallel_for(g_bz_values.size(), [&](std::size_t i) {
    NanomagnetParams np = base;
    np.g_b[2] = g_bz_values[i];
    LarmorSnap snap = snapped_larmor(np);
    double w = np.omega / np.coupling_j();
    double t_period = kTwoPi / w;
    auto extract = [&](bool crosstalk) {
      TimeDependentHamiltonian lab = lab_frame_hamiltonian(np, fa, crosstalk);
      TimeDependentHamiltonian rot = interaction_picture(lab, snap.multiples, w);
      return PauliSum::decompose(log_unitary(evolve(rot, 0.0, t_period, sc), t_period));
    };
    PauliSum with = extract(true);
    PauliSum without = extract(false);
    out[i] = {snap.product_tesla, g_bz_values[i],
              relative_hamiltonian_distance(with, without),
              np.detuning_ratio() <= 50.0};
  });
  return out;
}

}  // namespace forge
