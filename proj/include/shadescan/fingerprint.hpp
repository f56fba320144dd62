#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shadescan/blob.hpp"
#include "shadescan/error.hpp"
#include "shadescan/zip.hpp"

namespace shadescan {

struct QualifiedClassName {
    std::string package;     // dotted, empty for the default package
    std::string simple_name; // no '.', '/', or '$'

    std::string fqn() const { return package.empty() ? simple_name : package + "." + simple_name; }
    auto operator<=>(const QualifiedClassName&) const = default;
};

struct ClassNameScore {
    std::string name;
    int token_count = 0;
};

// Number of camel-case tokens in an unqualified class name. A boundary opens
// at every lowercase-to-uppercase transition, before the last capital of an
// uppercase run followed by lowercase (an acronym stays one token), and at the
// start of every digit or underscore run.
inline int camel_token_count(std::string_view name) {
    if (name.empty()) return 0;
    auto lower = [](char c) { return c >= 'a' && c <= 'z'; };
    auto upper = [](char c) { return c >= 'A' && c <= 'Z'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    int boundaries = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        char prev = name[i - 1];
        char cur = name[i];
        bool boundary = false;
        if (lower(prev) && upper(cur)) boundary = true;
        else if (upper(prev) && upper(cur) && i + 1 < name.size() && lower(name[i + 1])) boundary = true;
        else if (digit(cur) && !digit(prev)) boundary = true;
        else if (cur == '_' && prev != '_') boundary = true;
        if (boundary) ++boundaries;
    }
    return boundaries + 1;
}

namespace detail {

// Folds an archive member path into a top-level class name, or returns false
// when the member does not name a class (metadata, nested/anonymous classes
// resolve to their outer class, package-info/module-info are dropped).
inline bool member_to_class_name(std::string_view path, std::string_view ext, QualifiedClassName& out) {
    if (path.size() <= ext.size() || !path.ends_with(ext)) return false;
    if (path.starts_with("META-INF/")) return false;
    std::string_view stem = path.substr(0, path.size() - ext.size());
    size_t slash = stem.rfind('/');
    std::string_view dir = slash == std::string_view::npos ? std::string_view{} : stem.substr(0, slash);
    std::string_view simple = slash == std::string_view::npos ? stem : stem.substr(slash + 1);
    size_t dollar = simple.find('$');
    if (dollar != std::string_view::npos) simple = simple.substr(0, dollar);
    if (simple.empty() || simple == "package-info" || simple == "module-info") return false;
    out.package.assign(dir);
    for (char& c : out.package)
        if (c == '/') c = '.';
    out.simple_name.assign(simple);
    return true;
}

} // namespace detail

// Class names present in a binary or sources archive, one entry per top-level
// type.
inline std::set<QualifiedClassName> list_class_names(const std::string& archive_bytes, BlobKind kind) {
    if (kind == BlobKind::pom)
        raise(ErrorKind::invalid_argument, "class listing requires an archive blob");
    ZipReader zip(archive_bytes);
    std::string_view ext = kind == BlobKind::binary_archive ? ".class" : ".java";
    std::set<QualifiedClassName> out;
    for (const auto& entry : zip.entries()) {
        if (entry.is_dir()) continue;
        QualifiedClassName name;
        if (detail::member_to_class_name(entry.name, ext, name)) out.insert(std::move(name));
    }
    return out;
}

inline std::set<QualifiedClassName> list_class_names(const RegistryBlob& archive) {
    return list_class_names(archive.bytes, archive.kind);
}

// The query set: simple names ranked by camel-token count (descending), ties
// by length then lexicographic, truncated to k. Duplicate simple names across
// packages collapse before ranking.
inline std::vector<std::string> select_query_classes(const std::set<QualifiedClassName>& names, int k) {
    if (k < 1) raise(ErrorKind::invalid_argument, "query class count must be positive");
    std::set<std::string> simple;
    for (const auto& n : names) simple.insert(n.simple_name);
    std::vector<std::string> ranked(simple.begin(), simple.end());
    std::sort(ranked.begin(), ranked.end(), [](const std::string& a, const std::string& b) {
        int ca = camel_token_count(a);
        int cb = camel_token_count(b);
        if (ca != cb) return ca > cb;
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    if (ranked.size() > static_cast<size_t>(k)) ranked.resize(static_cast<size_t>(k));
    return ranked;
}

} // namespace shadescan
