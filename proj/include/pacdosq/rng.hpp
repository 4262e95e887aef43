// Randomness sources. Rng is the injectable interface the protocol code
// takes; DetRng is the seedable generator used for reproducible runs. Byte
// extraction is spelled out by hand so streams are identical across
// platforms and standard-library versions.
#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <sys/random.h>

#include "pacdosq/bytes.hpp"

namespace pacdosq {

class Rng {
public:
    virtual ~Rng() = default;
    virtual void fill(uint8_t* out, size_t n) = 0;

    Bytes bytes(size_t n) {
        Bytes b(n);
        fill(b.data(), n);
        return b;
    }
    uint64_t u64() {
        uint8_t b[8];
        fill(b, 8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = v << 8 | b[i];
        return v;
    }
    // Unbiased value in [0, bound) via rejection sampling.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = u64();
        } while (v >= limit);
        return v % bound;
    }
};

// Deterministic stream from a 64-bit seed.
class DetRng final : public Rng {
public:
    explicit DetRng(uint64_t seed) : gen_(seed) {}

    void fill(uint8_t* out, size_t n) override {
        for (size_t i = 0; i < n; ++i) {
            if (have_ == 0) {
                word_ = gen_();
                have_ = 8;
            }
            out[i] = uint8_t(word_);
            word_ >>= 8;
            --have_;
        }
    }

    // Derives an independent child stream; used to give each simulated
    // entity its own generator from one experiment seed.
    DetRng fork(uint64_t label) {
        uint64_t s = u64() ^ (label * 0x9E3779B97F4A7C15ull);
        return DetRng(s);
    }

private:
    std::mt19937_64 gen_;
    uint64_t word_ = 0;
    int have_ = 0;
};

class OsRng final : public Rng {
public:
    void fill(uint8_t* out, size_t n) override {
        size_t off = 0;
        while (off < n) {
            ssize_t got = getrandom(out + off, n - off, 0);
            if (got < 0) throw std::runtime_error("getrandom failed");
            off += size_t(got);
        }
    }
};

}  // namespace pacdosq
