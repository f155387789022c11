#include "bitblas/tile_dim.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "bitblas/error.hpp"
#include "bitblas/parallel.hpp"

namespace bitblas {

TileDim tile_dim_from_int(long long value) {
  switch (value) {
    case 4:
      return TileDim::k4;
    case 8:
      return TileDim::k8;
    case 16:
      return TileDim::k16;
    case 32:
      return TileDim::k32;
    default:
      throw ParameterError("tile dimension must be one of 4, 8, 16, 32 (got " + std::to_string(value) + ")");
  }
}

std::string to_string(TileDim d) { return std::to_string(dim(d)); }

Exec Exec::from_env(unsigned fallback) {
  Exec exec{fallback == 0 ? 1u : fallback};
  const char* env = std::getenv("BITBLAS_THREADS");
  if (env == nullptr) return exec;
  unsigned value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec == std::errc{} && ptr == end && value > 0) exec.workers = value;
  return exec;
}

}  // namespace bitblas
