#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <unistd.h>

#include "shadescan/error.hpp"

namespace shadescan {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline bool contains_whitespace(std::string_view s) {
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string to_hex(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// ---------------------------------------------------------------------------
// Logging: a process-wide sink so a header-only library stays dependency-free.

enum class LogLevel { debug, info, warn, error };

using LogSink = std::function<void(LogLevel, const std::string&)>;

namespace detail {
inline std::mutex& log_mutex() {
    static std::mutex m;
    return m;
}
inline LogSink& log_sink() {
    static LogSink sink = [](LogLevel level, const std::string& msg) {
        if (level == LogLevel::debug && std::getenv("SHADESCAN_VERBOSE") == nullptr) return;
        const char* tag = level == LogLevel::debug  ? "debug"
                          : level == LogLevel::info ? "info"
                          : level == LogLevel::warn ? "warn"
                                                    : "error";
        std::fprintf(stderr, "[shadescan:%s] %s\n", tag, msg.c_str());
    };
    return sink;
}
} // namespace detail

inline void set_log_sink(LogSink sink) {
    std::lock_guard<std::mutex> lock(detail::log_mutex());
    detail::log_sink() = std::move(sink);
}

inline void log(LogLevel level, const std::string& msg) {
    std::lock_guard<std::mutex> lock(detail::log_mutex());
    if (detail::log_sink()) detail::log_sink()(level, msg);
}

// ---------------------------------------------------------------------------
// File IO

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::io_error, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) raise(ErrorKind::io_error, "read failed for " + path.string());
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorKind::io_error, "cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(ErrorKind::io_error, "write failed for " + path.string());
}

// Write-to-temp then rename, so concurrent readers never observe a torn file.
inline void atomic_write_file(const std::filesystem::path& path, std::string_view bytes) {
    static std::atomic<uint64_t> counter{0};
    std::filesystem::path tmp = path;
    tmp += ".tmp-" + std::to_string(::getpid()) + "-" + std::to_string(counter.fetch_add(1));
    write_file(tmp, bytes);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        raise(ErrorKind::io_error, "rename failed for " + path.string());
    }
}

inline void copy_tree(const std::filesystem::path& from, const std::filesystem::path& to,
                      const std::vector<std::string>& skip_dirs = {"target"}) {
    std::filesystem::create_directories(to);
    for (const auto& entry : std::filesystem::recursive_directory_iterator(from)) {
        auto rel = std::filesystem::relative(entry.path(), from);
        bool skip = false;
        for (const auto& part : rel)
            for (const auto& s : skip_dirs)
                if (part == s) skip = true;
        if (skip) continue;
        auto dest = to / rel;
        if (entry.is_directory()) {
            std::filesystem::create_directories(dest);
        } else if (entry.is_regular_file()) {
            std::filesystem::create_directories(dest.parent_path());
            std::filesystem::copy_file(entry.path(), dest,
                                       std::filesystem::copy_options::overwrite_existing);
        }
    }
}

// ---------------------------------------------------------------------------
// Glob matching ('*' within a component, '**' across components, '?').

inline std::regex glob_to_regex(std::string_view pattern) {
    std::string re;
    for (size_t i = 0; i < pattern.size(); ++i) {
        char c = pattern[i];
        if (c == '*') {
            if (i + 1 < pattern.size() && pattern[i + 1] == '*') {
                re += ".*";
                ++i;
                if (i + 1 < pattern.size() && pattern[i + 1] == '/') ++i;
            } else {
                re += "[^/]*";
            }
        } else if (c == '?') {
            re += "[^/]";
        } else if (std::strchr(".^$+()[]{}|\\", c)) {
            re += '\\';
            re += c;
        } else {
            re += c;
        }
    }
    return std::regex(re);
}

inline bool glob_match(std::string_view pattern, std::string_view path) {
    return std::regex_match(std::string(path), glob_to_regex(pattern));
}

// Expands a file glob relative to the filesystem. A plain directory expands to
// every regular file beneath it. Results are sorted.
inline std::vector<std::filesystem::path> expand_glob(const std::string& pattern) {
    namespace fs = std::filesystem;
    std::vector<fs::path> out;
    if (fs::is_directory(pattern)) {
        for (const auto& e : fs::recursive_directory_iterator(pattern))
            if (e.is_regular_file()) out.push_back(e.path());
    } else {
        // Fixed directory prefix = everything before the first wildcard component.
        fs::path base;
        fs::path rest;
        bool wild = false;
        for (const auto& part : fs::path(pattern)) {
            std::string s = part.string();
            if (!wild && s.find_first_of("*?") != std::string::npos) wild = true;
            if (wild)
                rest /= part;
            else
                base /= part;
        }
        if (!wild) {
            if (fs::is_regular_file(pattern)) out.push_back(pattern);
            return out;
        }
        if (base.empty()) base = ".";
        if (!fs::is_directory(base)) return out;
        auto re = glob_to_regex(rest.generic_string());
        for (const auto& e : fs::recursive_directory_iterator(base)) {
            if (!e.is_regular_file()) continue;
            auto rel = fs::relative(e.path(), base).generic_string();
            if (std::regex_match(rel, re)) out.push_back(e.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Bounded-width parallel map preserving input order. Exceptions from workers
// propagate after all threads join.

template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& items, int workers, Fn fn)
    -> std::vector<decltype(fn(std::declval<const In&>()))> {
    using Out = decltype(fn(std::declval<const In&>()));
    std::vector<Out> results(items.size());
    if (items.empty()) return results;
    workers = std::max(1, std::min<int>(workers, static_cast<int>(items.size())));
    if (workers == 1) {
        for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                try {
                    results[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace shadescan
