#ifndef MPTRI_VARORDER_HPP
#define MPTRI_VARORDER_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mptri/error.hpp"

namespace mptri {

// Ordered list of variable names, lowest first.  The last variable is the
// "main" variable eliminated by the remainder sequences.  Immutable; shared
// by every Poly built against it.
class VarOrder {
public:
    explicit VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw MathError("variable order must contain at least one variable");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw MathError("variable names must be non-empty");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw MathError("duplicate variable name: " + names_[i]);
        }
    }

    static std::shared_ptr<const VarOrder> make(std::vector<std::string> names) {
        return std::make_shared<const VarOrder>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t main_index() const { return names_.size() - 1; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::size_t require(std::string_view name) const {
        auto i = index_of(name);
        if (!i) throw MathError("unknown variable: " + std::string(name));
        return *i;
    }

    friend bool operator==(const VarOrder& a, const VarOrder& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarOrder& a, const VarOrder& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

} // namespace mptri

#endif
