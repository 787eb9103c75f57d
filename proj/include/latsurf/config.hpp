#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <mpfr.h>

namespace latsurf {

inline constexpr const char* kSchemaVersion = "latsurf/1";

struct RunConfig {
  mpfr_prec_t precision_bits = 256;
  double quad_tolerance = 1e-10;
  std::vector<long> m_list = {50, 100, 200, 300, 400};
  int depth = 12;
  std::uint64_t seed = 1;
  std::string format = "json";  // json or csv
  bool serial = false;          // force the serial reference kernels

  std::string json() const {
    std::string ms;
    for (size_t i = 0; i < m_list.size(); ++i) ms += (i ? "," : "") + std::to_string(m_list[i]);
    char quad[32];
    snprintf(quad, sizeof quad, "%g", quad_tolerance);
    return std::string("{\"precision_bits\":") + std::to_string(precision_bits) +
           ",\"quad_tolerance\":" + quad + ",\"m_list\":[" + ms + "]" +
           ",\"depth\":" + std::to_string(depth) + ",\"seed\":" + std::to_string(seed) +
           ",\"serial\":" + (serial ? "true" : "false") + "}";
  }
};

}  // namespace latsurf
