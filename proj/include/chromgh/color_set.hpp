#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chromgh {

using Color = std::uint32_t;

// Finite set of colors kept as a sorted, duplicate-free list so that
// structural comparison is set comparison.
class ColorSet {
public:
    ColorSet() = default;
    ColorSet(std::initializer_list<Color> colors) : colors_(colors) { canonicalize(); }
    explicit ColorSet(std::vector<Color> colors) : colors_(std::move(colors)) { canonicalize(); }

    bool contains(Color c) const { return std::binary_search(colors_.begin(), colors_.end(), c); }
    bool empty() const { return colors_.empty(); }
    std::size_t size() const { return colors_.size(); }

    bool is_subset_of(const ColorSet& other) const {
        return std::includes(other.colors_.begin(), other.colors_.end(), colors_.begin(), colors_.end());
    }

    ColorSet operator|(const ColorSet& other) const {
        ColorSet out;
        std::set_union(colors_.begin(), colors_.end(), other.colors_.begin(), other.colors_.end(),
                       std::back_inserter(out.colors_));
        return out;
    }

    ColorSet operator&(const ColorSet& other) const {
        ColorSet out;
        std::set_intersection(colors_.begin(), colors_.end(), other.colors_.begin(), other.colors_.end(),
                              std::back_inserter(out.colors_));
        return out;
    }

    void insert(Color c) {
        auto it = std::lower_bound(colors_.begin(), colors_.end(), c);
        if (it == colors_.end() || *it != c) colors_.insert(it, c);
    }

    auto begin() const { return colors_.begin(); }
    auto end() const { return colors_.end(); }
    const std::vector<Color>& values() const { return colors_; }

    auto operator<=>(const ColorSet&) const = default;
    bool operator==(const ColorSet&) const = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < colors_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(colors_[i]);
        }
        return s + "}";
    }

private:
    void canonicalize() {
        std::sort(colors_.begin(), colors_.end());
        colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
    }

    std::vector<Color> colors_;
};

// Sorted, deduplicated list of color sets.
using ColorFamily = std::vector<ColorSet>;

inline void canonicalize(ColorFamily& family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace chromgh
