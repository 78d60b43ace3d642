#include "qp/precision.hpp"

#include <cstdlib>
#include <string>

namespace qp {

namespace {

long env_long(const char* name, long fallback, long lo, long hi) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || (end && *end)) return fallback;
  if (v < lo) v = lo;
  if (v > hi) v = hi;
  return v;
}

}  // namespace

long default_precision() {
  static const long v = env_long("QP_PRECISION_BITS", 256, 32, 1L << 24);
  return v;
}

long max_precision() {
  static const long v = env_long("QP_MAX_PRECISION_BITS", 4096, 32, 1L << 24);
  return v;
}

std::vector<long> precision_ladder() {
  const long start = default_precision();
  const long cap = max_precision();
  std::vector<long> rungs;
  for (long p : {start, 2 * start, 4 * start}) {
    if (p <= cap && (rungs.empty() || p > rungs.back())) rungs.push_back(p);
  }
  if (rungs.empty() || cap > rungs.back()) rungs.push_back(cap);
  return rungs;
}

}  // namespace qp
