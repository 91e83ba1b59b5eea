// Generated by scripts/gen_oracle_values.py -- do not edit by hand.
// Reference values computed with mpmath at 80 decimal digits; the Bessel
// values are cross-checked against an independent >=40-term power series.
#pragma once

#include <array>

namespace oracle {

inline constexpr double kJ_m075_at_1 = 0.04470111581450463106;  // J_{-3/4}(1)
inline constexpr double kJ_m075_at_05 = 0.5899242250902666984;  // J_{-3/4}(1/2)
inline constexpr double kJp_m075_at_05 = -1.626542907792546110;  // J'_{-3/4}(1/2)
inline constexpr double kJ_m075_at_20 = 0.003541918608971808067;  // J_{-3/4}(20)
inline constexpr double kJ_m05_at_pi = -0.4501581580785530348;  // J_{-1/2}(pi) = -sqrt(2)/pi
inline constexpr double kJp_05_at_half_pi = -0.2026423672846755429;  // J'_{1/2}(pi/2) = -2/pi^2

struct JGolden { double nu; double z; double value; };
inline constexpr std::array<JGolden, 13> kJGolden = {{
    {-0.7500000000000000000, 1.000000000000000000e-8, 463864.8042895003756},
    {-3.950000000000000000, 0.01000000000000000000, -344575616.2394310878},
    {3.950000000000000000, 0.01000000000000000000, 3.658494601996179782e-11},
    {-0.7500000000000000000, 0.5000000000000000000, 0.5899242250902666984},
    {0.3000000000000000000, 2.500000000000000000, 0.1756410827437736690},
    {-2.750000000000000000, 10.00000000000000000, 0.06033944518467800800},
    {2.750000000000000000, 10.00000000000000000, 0.1340289119304364107},
    {-0.9500000000000000000, 14.90000000000000000, -0.2062049343462877415},
    {1.250000000000000000, 15.10000000000000000, 0.2025944244369922812},
    {-1.750000000000000000, 30.00000000000000000, 0.1207798110482323313},
    {3.500000000000000000, 100.0000000000000000, 0.07112340876250937526},
    {-3.250000000000000000, 1000.000000000000000, 0.01395364662261520119},
    {0.5000000000000000000, 1000000.000000000000, -0.0002792544117637987794},
}};

inline constexpr double kHp_m075_at_50_re = 0.1118842778201640975;  // Re H^+_{-3/4}(50)
inline constexpr double kHp_m075_at_50_im = 0.01466626048545189628;  // Im H^+_{-3/4}(50)
inline constexpr double kHp_m075_at_50_abs = 0.1128414410576486369;  // |H^+_{-3/4}(50)|

struct Envelope { double nu; double c_j_large; double c_j_small; double c_h_large; double c_h_small; };
inline constexpr std::array<Envelope, 10> kEnvelopes = {{
    {-3.500000000000000000, 0.8622104093269070397, 12.88765828809626745, 0.8644663372944695136, 12.88765828824288203},
    {-2.750000000000000000, 0.8487673235389235902, 2.651870104620448426, 0.8535624113970988384, 3.751077621815990950},
    {-1.750000000000000000, 0.8431388369521161411, 0.7839850009658174964, 0.8436836212933966465, 1.125615789058727598},
    {-0.9500000000000000000, 0.8386746848764607547, 0.1041837392237512133, 0.8391310755232130100, 0.7800168292805351869},
    {-0.7500000000000000000, 0.8381065853610074308, 0.4870580445034883851, 0.8384251286450724593, 0.7874209248043369612},
    {-0.5500000000000000000, 0.8378024458944376334, 0.7810891461951205677, 0.8378872066845978047, 0.8240582559241998635},
    {0.5000000000000000000, 0.8377787840878639932, 0.8377787888428689939, 0.8377787888430086237, 0.8377787888430086237},
    {1.250000000000000000, 0.8395384656041648581, 0.3896464356031370604, 0.8405096343074715700, 0.8289629457603149807},
    {2.750000000000000000, 0.8506222048579587966, 0.03528913471149133993, 0.8535624113970988384, 3.751077621815990950},
    {3.500000000000000000, 0.8557125978299895397, 0.007978845608028210290, 0.8644663372944695136, 12.88765828824288203},
}};

inline constexpr double kPsi1_mu25_t5_tau1_x3 = -0.02559387270915202305;  // Psi_1(5,1,3), mu=5/2
inline constexpr double kPsi1_mu25_t2_tau1_x0 = 0.4309644062711508252;  // Psi_1(2,1,0), mu=5/2 (zero-frequency closed form)

inline constexpr double kSqrtPi = 1.772453850905516027;  // sqrt(pi): (2,2) mixed norm of unit-disc indicator
inline constexpr double kFourthRootTwoPiSq = 2.107814730510811818;  // (2 pi^2)^{1/4}: (4,2) mixed norm of unit-disc indicator

}  // namespace oracle
