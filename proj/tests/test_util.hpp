// Minimal always-on test harness shared by the unit and acceptance suites.

#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

namespace testutil {

inline int g_checks = 0;
inline int g_failures = 0;

inline void report(bool ok, const std::string& label, const std::string& detail = "") {
  ++g_checks;
  if (ok) return;
  ++g_failures;
  std::fprintf(stderr, "[FAIL] %s%s%s\n", label.c_str(), detail.empty() ? "" : " -- ",
               detail.c_str());
}

inline int finish(const char* suite) {
  if (g_failures == 0) {
    std::printf("[OK] %s: %d checks passed\n", suite, g_checks);
    return 0;
  }
  std::printf("[FAILED] %s: %d of %d checks failed\n", suite, g_failures, g_checks);
  return 1;
}

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

#define CHECK(cond) ::testutil::report((cond), #cond)

#define CHECK_MSG(cond, detail) ::testutil::report((cond), #cond, (detail))

#define CHECK_NEAR(a, b, tol)                                                    \
  do {                                                                           \
    const double va_ = (a);                                                      \
    const double vb_ = (b);                                                      \
    const double tol_ = (tol);                                                   \
    ::testutil::report(std::isfinite(va_) && std::abs(va_ - vb_) <= tol_,        \
                       #a " ~ " #b,                                              \
                       "got " + ::testutil::num(va_) + " vs " +                  \
                           ::testutil::num(vb_) + ", |diff| = " +                \
                           ::testutil::num(std::abs(va_ - vb_)) + " > tol " +    \
                           ::testutil::num(tol_));                               \
  } while (0)

#define CHECK_REL(a, b, tol)                                                     \
  do {                                                                           \
    const double va_ = (a);                                                      \
    const double vb_ = (b);                                                      \
    const double tol_ = (tol);                                                   \
    const double scale_ = std::max(std::abs(vb_), 1e-300);                       \
    ::testutil::report(std::isfinite(va_) &&                                     \
                           std::abs(va_ - vb_) <= tol_ * scale_,                 \
                       #a " ~rel " #b,                                           \
                       "got " + ::testutil::num(va_) + " vs " +                  \
                           ::testutil::num(vb_) + ", rel = " +                   \
                           ::testutil::num(std::abs(va_ - vb_) / scale_) +       \
                           " > tol " + ::testutil::num(tol_));                   \
  } while (0)

#define CHECK_THROWS(expr, exc_type)                                             \
  do {                                                                           \
    bool thrown_ = false;                                                        \
    try {                                                                        \
      (void)(expr);                                                              \
    } catch (const exc_type&) {                                                  \
      thrown_ = true;                                                            \
    } catch (...) {                                                              \
    }                                                                            \
    ::testutil::report(thrown_, #expr " throws " #exc_type);                     \
  } while (0)

// Deterministic uniform double in [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = double(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace testutil
