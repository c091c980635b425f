#include "chromawalk/colors.hpp"

#include <algorithm>
#include <sstream>

namespace chromawalk {

ColorSet::ColorSet(std::vector<std::string> names, std::size_t initial_index)
    : names_(std::move(names)) {
    if (names_.empty() || names_.size() > kMaxColors) {
        throw InputError("color set must have between 1 and " + std::to_string(kMaxColors) +
                         " colors");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) {
                throw InputError("duplicate color name: " + names_[i]);
            }
        }
    }
    if (initial_index >= names_.size()) {
        throw InputError("initial color index out of range");
    }
    initial_ = static_cast<ColorId>(initial_index);
}

const std::string& ColorSet::name(ColorId c) const {
    if (c >= names_.size()) {
        throw InputError("color id out of range: " + std::to_string(c));
    }
    return names_[c];
}

std::optional<ColorId> ColorSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return static_cast<ColorId>(i);
        }
    }
    return std::nullopt;
}

void ColorMultiset::add(ColorId c, std::uint32_t k) {
    if (c >= kMaxColors) {
        throw InputError("color id out of range for multiset");
    }
    counts_[c] += k;
    total_ += k;
}

std::string to_string(const ColorMultiset& m, const ColorSet& colors) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t c = 0; c < kMaxColors; ++c) {
        const auto k = m.count(static_cast<ColorId>(c));
        if (k == 0) {
            continue;
        }
        if (!first) {
            out << ", ";
        }
        first = false;
        if (c < colors.size()) {
            out << colors.name(static_cast<ColorId>(c));
        } else {
            out << '#' << c;
        }
        out << ':' << k;
    }
    out << '}';
    return out.str();
}

}  // namespace chromawalk
