#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace srzf {

/// Split-able deterministic seed stream. Forking by label or index derives an
/// independent child stream; the result depends only on the root seed and the
/// fork path, never on call order or thread count.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(mix(seed + kGamma)) {}

  RandomStream fork(std::string_view label) const {
    return RandomStream(mix(state_ ^ fnv1a(label)), Raw{});
  }

  RandomStream fork(std::uint64_t index) const {
    return RandomStream(mix(state_ ^ mix(index + kGamma)), Raw{});
  }

  std::mt19937_64 engine() const { return std::mt19937_64(state_); }

  std::uint64_t state() const { return state_; }

 private:
  struct Raw {};
  RandomStream(std::uint64_t raw_state, Raw) : state_(raw_state) {}

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  // splitmix64 finalizer
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  static constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::uint64_t state_;
};

}  // namespace srzf
