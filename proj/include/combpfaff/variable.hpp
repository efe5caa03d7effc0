#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace combpfaff {

// A formal variable, one per graph edge. Variables are interned in a
// process-wide table; the total order on variables is lexicographic by name.
class Variable {
public:
    static Variable intern(std::string_view name);
    static Variable by_id(std::uint32_t id);  // must already be interned

    const std::string& name() const { return *name_; }
    std::uint32_t id() const { return id_; }

    friend bool operator==(Variable a, Variable b) { return a.id_ == b.id_; }
    friend bool operator!=(Variable a, Variable b) { return a.id_ != b.id_; }
    friend bool operator<(Variable a, Variable b) {
        return a.id_ != b.id_ && *a.name_ < *b.name_;
    }

private:
    Variable(std::uint32_t id, const std::string* name) : id_(id), name_(name) {}
    std::uint32_t id_;
    const std::string* name_;  // stable address inside the intern table
};

}  // namespace combpfaff
