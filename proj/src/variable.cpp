#include "combpfaff/variable.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace combpfaff {

namespace {

struct SymbolTable {
    std::shared_mutex mutex;
    std::deque<std::string> names;  // stable addresses
    std::unordered_map<std::string_view, std::uint32_t> index;
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

}  // namespace

Variable Variable::intern(std::string_view name) {
    SymbolTable& t = table();
    {
        std::shared_lock lock(t.mutex);
        auto it = t.index.find(name);
        if (it != t.index.end()) return Variable(it->second, &t.names[it->second]);
    }
    std::unique_lock lock(t.mutex);
    auto it = t.index.find(name);
    if (it != t.index.end()) return Variable(it->second, &t.names[it->second]);
    auto id = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.index.emplace(t.names.back(), id);
    return Variable(id, &t.names.back());
}

Variable Variable::by_id(std::uint32_t id) {
    SymbolTable& t = table();
    std::shared_lock lock(t.mutex);
    return Variable(id, &t.names.at(id));
}

}  // namespace combpfaff
