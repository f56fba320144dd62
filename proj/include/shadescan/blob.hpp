#pragma once

#include <string>

#include "shadescan/gav.hpp"

namespace shadescan {

enum class BlobKind { pom, sources_archive, binary_archive };

enum class BlobOrigin { network, cache, fixture };

inline const char* to_string(BlobKind k) {
    switch (k) {
        case BlobKind::pom: return "pom";
        case BlobKind::sources_archive: return "sources-archive";
        case BlobKind::binary_archive: return "binary-archive";
    }
    return "unknown";
}

inline const char* to_string(BlobOrigin o) {
    switch (o) {
        case BlobOrigin::network: return "network";
        case BlobOrigin::cache: return "cache";
        case BlobOrigin::fixture: return "fixture";
    }
    return "unknown";
}

// One fetched registry resource. `bytes` is XML for poms and a zip container
// for the archive kinds.
struct RegistryBlob {
    Gav gav;
    BlobKind kind = BlobKind::pom;
    std::string bytes;
    BlobOrigin origin = BlobOrigin::network;
};

// Repository path layout: <group-as-path>/<artifact>/<version>/<artifact>-<version>[-sources].<ext>
inline std::string artifact_rel_path(const Gav& gav, BlobKind kind) {
    std::string group_path = gav.group;
    for (char& c : group_path)
        if (c == '.') c = '/';
    std::string file = gav.artifact + "-" + gav.version;
    switch (kind) {
        case BlobKind::pom: file += ".pom"; break;
        case BlobKind::sources_archive: file += "-sources.jar"; break;
        case BlobKind::binary_archive: file += ".jar"; break;
    }
    return group_path + "/" + gav.artifact + "/" + gav.version + "/" + file;
}

} // namespace shadescan
