#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quotlab {

/// A finite set of positive integers drawn from [1, ambient_bound].
/// Elements are kept strictly increasing; duplicates in the input are merged.
class IntegerSet {
public:
    IntegerSet(std::vector<std::uint64_t> elements, std::uint64_t ambient_bound);

    /// {1, 2, ..., q}.
    static IntegerSet range(std::uint64_t q);

    /// Takes the ambient bound from the largest element (1 for an empty set).
    static IntegerSet with_inferred_bound(std::vector<std::uint64_t> elements);

    const std::vector<std::uint64_t>& elements() const { return elements_; }
    std::uint64_t ambient_bound() const { return ambient_bound_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

private:
    std::vector<std::uint64_t> elements_;
    std::uint64_t ambient_bound_;
};

} // namespace quotlab
