#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chromawalk {

// Colors are small indices into a ColorSet. All palettes in this project
// have at most six colors; eight leaves headroom for ad-hoc test palettes.
using ColorId = std::uint8_t;
inline constexpr std::size_t kMaxColors = 8;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad caller-supplied data (node ids out of range, malformed specs).
class InputError : public Error {
  public:
    using Error::Error;
};

// API misuse (observing a terminated configuration, empty semi-DFS path).
class UsageError : public Error {
  public:
    using Error::Error;
};

class AdversaryError : public Error {
  public:
    using Error::Error;
};

// The ordered palette of an algorithm. Index 0..size()-1 are the color ids;
// one of them is the initial color every node bears at time 0.
class ColorSet {
  public:
    ColorSet(std::vector<std::string> names, std::size_t initial_index = 0);

    std::size_t size() const { return names_.size(); }
    ColorId initial() const { return initial_; }
    const std::string& name(ColorId c) const;
    std::optional<ColorId> find(std::string_view name) const;
    const std::vector<std::string>& names() const { return names_; }

    bool operator==(const ColorSet& other) const = default;

  private:
    std::vector<std::string> names_;
    ColorId initial_ = 0;
};

// Multiset of neighbor colors as observed by the agent. Counts are kept even
// though the rule tables only ever test membership.
class ColorMultiset {
  public:
    ColorMultiset() = default;

    void add(ColorId c, std::uint32_t k = 1);
    std::uint32_t count(ColorId c) const { return c < kMaxColors ? counts_[c] : 0; }
    bool contains(ColorId c) const { return count(c) > 0; }
    std::uint32_t total() const { return total_; }
    // True iff the multiset is nonempty and every element equals c.
    bool all_equal(ColorId c) const { return total_ > 0 && count(c) == total_; }

    bool operator==(const ColorMultiset& other) const = default;

  private:
    std::array<std::uint32_t, kMaxColors> counts_{};
    std::uint32_t total_ = 0;
};

std::string to_string(const ColorMultiset& m, const ColorSet& colors);

}  // namespace chromawalk
