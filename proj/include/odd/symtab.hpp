#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "odd/hash128.hpp"

namespace odd {

// Interned label symbol. Labels are strings, not integers: datasets carry
// whatever token the file had, and degree fallback labels are decimal
// strings. Interning gives O(1) equality and a cached leaf code per label.
// The table is process-global and append-only; lookups after interning are
// lock-free reads.
using Symbol = std::uint32_t;

Symbol intern(std::string_view label);
std::string_view symbol_name(Symbol s);

// hash of the label's length-prefixed bytes; the code of a single-node tree
const HashCode& symbol_code(Symbol s);

} // namespace odd
