#pragma once

#include <string>

#include "hypcert/hp_complex.hpp"
#include "hypcert/hp_real.hpp"

inline std::string fixture_path(const char* name) {
  return std::string(HYPCERT_FIXTURE_DIR) + "/" + name;
}

// |x - expected| / |expected| as a double, with the expected value parsed at
// comfortably higher precision than anything under test.
inline double rel_err(const hypcert::HPReal& x, const std::string& expected) {
  hypcert::Precision p(120);
  hypcert::HPReal e = hypcert::HPReal::from_decimal(expected, p);
  hypcert::HPReal err = abs(x - e) / abs(e);
  return err.to_double();
}

inline double abs_err(const hypcert::HPReal& x, const std::string& expected) {
  hypcert::Precision p(120);
  hypcert::HPReal e = hypcert::HPReal::from_decimal(expected, p);
  return abs(x - e).to_double();
}

inline hypcert::HPComplex make_c(const char* re, const char* im, hypcert::Precision p) {
  return hypcert::HPComplex(hypcert::HPReal::from_decimal(re, p),
                            hypcert::HPReal::from_decimal(im, p));
}
