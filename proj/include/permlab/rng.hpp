#pragma once

#include <array>
#include <cstdint>

namespace permlab {

// Philox 4x64-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
// The key is (seed, stream); distinct streams are independent by
// construction, so concurrent workers never share state. Integer-only, hence
// bit-identical across platforms.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream)
      : key0_(seed), key1_(stream), ctr_lo_(0), ctr_hi_(0), idx_(4) {}

  std::uint64_t next_u64() {
    if (idx_ == 4) refill();
    return block_[idx_++];
  }

  // uniform on [0, 1), 53 random bits
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // unbiased uniform on {0, ..., n-1} (rejection against 2^64 mod n)
  std::uint64_t next_bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  std::uint64_t seed() const { return key0_; }
  std::uint64_t stream() const { return key1_; }

 private:
  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
    const unsigned __int128 p =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
  }

  void refill() {
    constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    std::uint64_t x0 = ctr_lo_, x1 = ctr_hi_, x2 = 0, x3 = 0;
    std::uint64_t k0 = key0_, k1 = key1_;
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi0, lo0, hi1, lo1;
      mulhilo(kMul0, x0, hi0, lo0);
      mulhilo(kMul1, x2, hi1, lo1);
      const std::uint64_t y0 = hi1 ^ x1 ^ k0;
      const std::uint64_t y1 = lo1;
      const std::uint64_t y2 = hi0 ^ x3 ^ k1;
      const std::uint64_t y3 = lo0;
      x0 = y0;
      x1 = y1;
      x2 = y2;
      x3 = y3;
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    block_ = {x0, x1, x2, x3};
    if (++ctr_lo_ == 0) ++ctr_hi_;
    idx_ = 0;
  }

  std::array<std::uint64_t, 4> block_{};
  std::uint64_t key0_, key1_;
  std::uint64_t ctr_lo_, ctr_hi_;
  int idx_;
};

// Poisson draw: sequential inversion below lambda = 10, Hormann's PTRD
// transformed rejection above (uniform O(1) cost across the means spectrum).
std::int64_t poisson_draw(Philox& rng, double lambda);

}  // namespace permlab
