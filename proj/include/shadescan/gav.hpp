#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "shadescan/error.hpp"
#include "shadescan/util.hpp"

namespace shadescan {

// group:artifact pair, versions aggregated away.
struct Ga {
    std::string group;
    std::string artifact;

    std::string to_string() const { return group + ":" + artifact; }
    auto operator<=>(const Ga&) const = default;
};

// group:artifact:version coordinates identifying one registry artifact.
struct Gav {
    std::string group;
    std::string artifact;
    std::string version;

    Ga ga() const { return Ga{group, artifact}; }
    std::string to_string() const { return group + ":" + artifact + ":" + version; }

    static std::optional<Gav> try_parse(std::string_view text) {
        auto parts = split(text, ':');
        if (parts.size() != 3) return std::nullopt;
        for (const auto& p : parts)
            if (p.empty() || contains_whitespace(p)) return std::nullopt;
        return Gav{parts[0], parts[1], parts[2]};
    }

    static Gav parse(std::string_view text) {
        auto gav = try_parse(text);
        if (!gav) raise(ErrorKind::invalid_argument, "not a G:A:V coordinate: \"" + std::string(text) + "\"");
        return *gav;
    }

    auto operator<=>(const Gav&) const = default;
};

} // namespace shadescan
