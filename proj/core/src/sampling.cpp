#include "osculant/sampling.hpp"

namespace osculant {

namespace {

std::uint64_t fnv1a(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 14695981039346656037ull ^ seed;
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

PointSampler::PointSampler(const SampleProtocol& proto, std::string_view tag)
    : eng_(fnv1a(proto.seed, tag)), bound_(proto.bound) {}

long PointSampler::next_int() {
  // Modulo draw: deterministic across platforms, bias irrelevant here.
  std::uint64_t span = 2 * static_cast<std::uint64_t>(bound_) + 1;
  return static_cast<long>(eng_() % span) - bound_;
}

std::vector<Rational> PointSampler::point(int k) {
  std::vector<Rational> p;
  p.reserve(k);
  for (int i = 0; i < k; ++i) p.emplace_back(next_int());
  return p;
}

std::vector<Rational> PointSampler::nonzero_point(int k) {
  std::vector<Rational> p;
  p.reserve(k);
  for (int i = 0; i < k; ++i) {
    long v = next_int();
    if (v == 0) v = 1;
    p.emplace_back(v);
  }
  return p;
}

}  // namespace osculant
