// Byte-string helpers: big-endian integer packing, hex, and a bounds-checked
// reader used by every wire-format parser in the project.
#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pacdosq {

using Bytes = std::vector<uint8_t>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void put_u16(Bytes& out, uint16_t v) {
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v));
}

inline void put_u32(Bytes& out, uint32_t v) {
    for (int i = 3; i >= 0; --i) out.push_back(uint8_t(v >> (8 * i)));
}

inline void put_u64(Bytes& out, uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(uint8_t(v >> (8 * i)));
}

inline void put_bytes(Bytes& out, std::span<const uint8_t> b) {
    out.insert(out.end(), b.begin(), b.end());
}

// Sequential reader over a byte span. Every accessor throws ParseError on
// underrun; parse failures must never read past the buffer.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    size_t remaining() const { return data_.size() - pos_; }
    bool empty() const { return remaining() == 0; }

    uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    uint16_t u16() {
        need(2);
        uint16_t v = uint16_t(data_[pos_]) << 8 | data_[pos_ + 1];
        pos_ += 2;
        return v;
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = v << 8 | data_[pos_ + i];
        pos_ += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = v << 8 | data_[pos_ + i];
        pos_ += 8;
        return v;
    }
    Bytes take(size_t n) {
        need(n);
        Bytes b(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return b;
    }
    std::span<const uint8_t> view(size_t n) {
        need(n);
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

private:
    void need(size_t n) const {
        if (remaining() < n) throw ParseError("short read");
    }
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

inline std::string to_hex(std::span<const uint8_t> b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (uint8_t v : b) {
        s.push_back(digits[v >> 4]);
        s.push_back(digits[v & 0xF]);
    }
    return s;
}

inline Bytes from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw ParseError("odd hex length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ParseError("bad hex digit");
    };
    Bytes out(s.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = uint8_t(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
    return out;
}

}  // namespace pacdosq
