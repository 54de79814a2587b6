#pragma once

#include <cstdint>

#include "mpd/errors.hpp"

namespace mpd {

// Arithmetic context for the prime field F_p, p < 2^31.
class Fp {
  public:
    explicit Fp(uint32_t p) : p_(p) {
        if (!is_prime(p)) throw DomainError("field characteristic must be prime: " + std::to_string(p));
    }

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a % p_ == 0) throw DomainError("inverse of zero in F_p");
        return pow(a % p_, p_ - 2);
    }
    // Canonical residue of a signed integer.
    uint32_t from_int(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

  private:
    uint32_t p_;
};

}  // namespace mpd
