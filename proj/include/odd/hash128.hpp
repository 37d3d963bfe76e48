#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace odd {

// 128-bit code used to identify subtree structures. Ordering is numeric
// (hi word first), which stands in for the lexicographic ordering of the
// encoded trees.
struct HashCode {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    friend auto operator<=>(const HashCode&, const HashCode&) = default;
};

// MurmurHash3 x64 128-bit, fixed seed 0. Unseeded on purpose: codes must be
// comparable across processes and machines.
HashCode hash128(const void* data, std::size_t len);
HashCode hash128(std::string_view bytes);

// 32 lowercase hex digits, hi word first.
std::string to_hex(const HashCode& c);

namespace canonical {

// Byte layouts fed to hash128. A leaf is hashed as its length-prefixed
// label bytes; an internal node as a tag byte, the label's leaf code and
// the child codes in order. The tag keeps the two layouts disjoint.
std::string leaf_bytes(std::string_view label);
HashCode leaf_code(std::string_view label);

class InternalBytes {
public:
    explicit InternalBytes(const HashCode& label_code);
    void add_child(const HashCode& child_code);
    HashCode code() const;

private:
    std::string buf_;
};

} // namespace canonical

} // namespace odd
