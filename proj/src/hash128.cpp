#include "odd/hash128.hpp"

#include <cstring>

namespace odd {
namespace {

inline std::uint64_t rotl64(std::uint64_t x, int r) {
    return (x << r) | (x >> (64 - r));
}

inline std::uint64_t fmix64(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return k;
}

inline std::uint64_t load64(const unsigned char* p) {
    std::uint64_t v;
    std::memcpy(&v, p, 8);
    return v; // little-endian platforms only, which is all we target
}

} // namespace

HashCode hash128(const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    const std::size_t nblocks = len / 16;

    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    const std::uint64_t c1 = 0x87c37b91114253d5ULL;
    const std::uint64_t c2 = 0x4cf5ad432745937fULL;

    for (std::size_t i = 0; i < nblocks; i++) {
        std::uint64_t k1 = load64(bytes + i * 16);
        std::uint64_t k2 = load64(bytes + i * 16 + 8);

        k1 *= c1;
        k1 = rotl64(k1, 31);
        k1 *= c2;
        h1 ^= k1;
        h1 = rotl64(h1, 27);
        h1 += h2;
        h1 = h1 * 5 + 0x52dce729;

        k2 *= c2;
        k2 = rotl64(k2, 33);
        k2 *= c1;
        h2 ^= k2;
        h2 = rotl64(h2, 31);
        h2 += h1;
        h2 = h2 * 5 + 0x38495ab5;
    }

    const unsigned char* tail = bytes + nblocks * 16;
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    switch (len & 15) {
    case 15: k2 ^= std::uint64_t(tail[14]) << 48; [[fallthrough]];
    case 14: k2 ^= std::uint64_t(tail[13]) << 40; [[fallthrough]];
    case 13: k2 ^= std::uint64_t(tail[12]) << 32; [[fallthrough]];
    case 12: k2 ^= std::uint64_t(tail[11]) << 24; [[fallthrough]];
    case 11: k2 ^= std::uint64_t(tail[10]) << 16; [[fallthrough]];
    case 10: k2 ^= std::uint64_t(tail[9]) << 8; [[fallthrough]];
    case 9:
        k2 ^= std::uint64_t(tail[8]);
        k2 *= c2;
        k2 = rotl64(k2, 33);
        k2 *= c1;
        h2 ^= k2;
        [[fallthrough]];
    case 8: k1 ^= std::uint64_t(tail[7]) << 56; [[fallthrough]];
    case 7: k1 ^= std::uint64_t(tail[6]) << 48; [[fallthrough]];
    case 6: k1 ^= std::uint64_t(tail[5]) << 40; [[fallthrough]];
    case 5: k1 ^= std::uint64_t(tail[4]) << 32; [[fallthrough]];
    case 4: k1 ^= std::uint64_t(tail[3]) << 24; [[fallthrough]];
    case 3: k1 ^= std::uint64_t(tail[2]) << 16; [[fallthrough]];
    case 2: k1 ^= std::uint64_t(tail[1]) << 8; [[fallthrough]];
    case 1:
        k1 ^= std::uint64_t(tail[0]);
        k1 *= c1;
        k1 = rotl64(k1, 31);
        k1 *= c2;
        h1 ^= k1;
        break;
    case 0: break;
    }

    h1 ^= std::uint64_t(len);
    h2 ^= std::uint64_t(len);
    h1 += h2;
    h2 += h1;
    h1 = fmix64(h1);
    h2 = fmix64(h2);
    h1 += h2;
    h2 += h1;

    return HashCode{h1, h2};
}

HashCode hash128(std::string_view bytes) {
    return hash128(bytes.data(), bytes.size());
}

std::string to_hex(const HashCode& c) {
    static const char digits[] = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 0; i < 16; i++) {
        out[15 - i] = digits[(c.hi >> (4 * i)) & 0xf];
        out[31 - i] = digits[(c.lo >> (4 * i)) & 0xf];
    }
    return out;
}

namespace canonical {
namespace {

constexpr char kInternalTag = 'N';

void append_code(std::string& buf, const HashCode& c) {
    char tmp[16];
    std::memcpy(tmp, &c.lo, 8);
    std::memcpy(tmp + 8, &c.hi, 8);
    buf.append(tmp, 16);
}

} // namespace

std::string leaf_bytes(std::string_view label) {
    std::string buf;
    buf.reserve(4 + label.size());
    std::uint32_t n = static_cast<std::uint32_t>(label.size());
    char len[4];
    std::memcpy(len, &n, 4);
    buf.append(len, 4);
    buf.append(label);
    return buf;
}

HashCode leaf_code(std::string_view label) {
    return hash128(leaf_bytes(label));
}

InternalBytes::InternalBytes(const HashCode& label_code) {
    buf_.reserve(17 + 16 * 4);
    buf_.push_back(kInternalTag);
    append_code(buf_, label_code);
}

void InternalBytes::add_child(const HashCode& child_code) {
    append_code(buf_, child_code);
}

HashCode InternalBytes::code() const {
    return hash128(buf_);
}

} // namespace canonical
} // namespace odd
