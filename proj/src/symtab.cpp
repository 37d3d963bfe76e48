#include "odd/symtab.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace odd {
namespace {

struct Entry {
    std::string name;
    HashCode code;
};

struct Table {
    std::mutex mu;
    std::deque<Entry> entries;                            // stable addresses
    std::unordered_map<std::string_view, Symbol> index;   // views into entries
};

Table& table() {
    static Table t;
    return t;
}

} // namespace

Symbol intern(std::string_view label) {
    Table& t = table();
    std::lock_guard lock(t.mu);
    auto it = t.index.find(label);
    if (it != t.index.end())
        return it->second;
    if (t.entries.size() > 0xffffffffu - 1)
        throw std::runtime_error("symbol table overflow");
    t.entries.push_back(Entry{std::string(label), canonical::leaf_code(label)});
    Symbol s = static_cast<Symbol>(t.entries.size() - 1);
    t.index.emplace(t.entries.back().name, s);
    return s;
}

std::string_view symbol_name(Symbol s) {
    Table& t = table();
    std::lock_guard lock(t.mu);
    return t.entries.at(s).name; // deque: reference stays valid after unlock
}

const HashCode& symbol_code(Symbol s) {
    Table& t = table();
    std::lock_guard lock(t.mu);
    return t.entries.at(s).code;
}

} // namespace odd
