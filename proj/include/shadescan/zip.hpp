#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <zlib.h>

#include "shadescan/error.hpp"

namespace shadescan {

// In-memory reader for the zip container format used by jars and sources
// archives. Entries are located through the central directory; stored and
// deflate members are supported. No zip64.
class ZipReader {
public:
    struct Entry {
        std::string name;
        uint16_t method = 0;
        uint32_t crc = 0;
        uint32_t compressed_size = 0;
        uint32_t uncompressed_size = 0;
        uint32_t local_offset = 0;

        bool is_dir() const { return !name.empty() && name.back() == '/'; }
    };

    explicit ZipReader(std::string bytes) : bytes_(std::move(bytes)) { parse_central_directory(); }

    const std::vector<Entry>& entries() const { return entries_; }

    const Entry* find(std::string_view name) const {
        for (const auto& e : entries_)
            if (e.name == name) return &e;
        return nullptr;
    }

    std::string read(const Entry& entry) const {
        // Local header: 30 fixed bytes, then name and extra field, then data.
        size_t off = entry.local_offset;
        if (off + 30 > bytes_.size() || u32(off) != 0x04034b50)
            corrupt("bad local header for " + entry.name);
        size_t name_len = u16(off + 26);
        size_t extra_len = u16(off + 28);
        size_t data = off + 30 + name_len + extra_len;
        if (data + entry.compressed_size > bytes_.size())
            corrupt("truncated data for " + entry.name);

        std::string out;
        if (entry.method == 0) {
            out.assign(bytes_, data, entry.compressed_size);
        } else if (entry.method == 8) {
            out = inflate_raw(bytes_.data() + data, entry.compressed_size, entry.uncompressed_size,
                              entry.name);
        } else {
            corrupt("unsupported compression method for " + entry.name);
        }
        uint32_t crc = static_cast<uint32_t>(
            ::crc32(0, reinterpret_cast<const Bytef*>(out.data()), static_cast<uInt>(out.size())));
        if (crc != entry.crc) corrupt("crc mismatch for " + entry.name);
        return out;
    }

    std::optional<std::string> read(std::string_view name) const {
        const Entry* e = find(name);
        if (!e) return std::nullopt;
        return read(*e);
    }

private:
    [[noreturn]] static void corrupt(const std::string& what) {
        raise(ErrorKind::corrupt_archive, what);
    }

    uint16_t u16(size_t off) const {
        return static_cast<uint16_t>(static_cast<unsigned char>(bytes_[off]) |
                                     (static_cast<unsigned char>(bytes_[off + 1]) << 8));
    }
    uint32_t u32(size_t off) const {
        return static_cast<uint32_t>(static_cast<unsigned char>(bytes_[off])) |
               (static_cast<uint32_t>(static_cast<unsigned char>(bytes_[off + 1])) << 8) |
               (static_cast<uint32_t>(static_cast<unsigned char>(bytes_[off + 2])) << 16) |
               (static_cast<uint32_t>(static_cast<unsigned char>(bytes_[off + 3])) << 24);
    }

    void parse_central_directory() {
        // End-of-central-directory record: 22 bytes plus a comment of up to 64k,
        // searched backwards from the end.
        if (bytes_.size() < 22) corrupt("too small for a zip archive");
        size_t scan_floor = bytes_.size() > 22 + 65535 ? bytes_.size() - 22 - 65535 : 0;
        size_t eocd = std::string::npos;
        for (size_t i = bytes_.size() - 22; ; --i) {
            if (u32(i) == 0x06054b50) {
                eocd = i;
                break;
            }
            if (i == scan_floor) break;
        }
        if (eocd == std::string::npos) corrupt("end-of-central-directory record not found");

        uint16_t total = u16(eocd + 10);
        uint32_t cd_size = u32(eocd + 12);
        uint32_t cd_off = u32(eocd + 16);
        if (static_cast<size_t>(cd_off) + cd_size > bytes_.size()) corrupt("central directory out of bounds");

        size_t pos = cd_off;
        entries_.reserve(total);
        for (uint16_t i = 0; i < total; ++i) {
            if (pos + 46 > bytes_.size() || u32(pos) != 0x02014b50) corrupt("bad central directory entry");
            Entry e;
            e.method = u16(pos + 10);
            e.crc = u32(pos + 16);
            e.compressed_size = u32(pos + 20);
            e.uncompressed_size = u32(pos + 24);
            size_t name_len = u16(pos + 28);
            size_t extra_len = u16(pos + 30);
            size_t comment_len = u16(pos + 32);
            e.local_offset = u32(pos + 42);
            if (pos + 46 + name_len > bytes_.size()) corrupt("truncated entry name");
            e.name = bytes_.substr(pos + 46, name_len);
            pos += 46 + name_len + extra_len + comment_len;
            entries_.push_back(std::move(e));
        }
    }

    std::string inflate_raw(const char* data, size_t size, uint32_t expected, const std::string& name) const {
        std::string out;
        out.resize(expected);
        z_stream zs{};
        if (inflateInit2(&zs, -15) != Z_OK) corrupt("inflate init failed for " + name);
        zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data));
        zs.avail_in = static_cast<uInt>(size);
        zs.next_out = reinterpret_cast<Bytef*>(out.data());
        zs.avail_out = static_cast<uInt>(out.size());
        int rc = inflate(&zs, Z_FINISH);
        inflateEnd(&zs);
        if (rc != Z_STREAM_END || zs.total_out != expected) corrupt("inflate failed for " + name);
        return out;
    }

    std::string bytes_;
    std::vector<Entry> entries_;
};

// Writer producing stored (uncompressed) members only; sufficient for fixture
// archives and small tool outputs.
class ZipWriter {
public:
    void add(std::string_view name, std::string_view bytes) {
        Member m;
        m.name = std::string(name);
        m.crc = static_cast<uint32_t>(::crc32(
            0, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
        m.size = static_cast<uint32_t>(bytes.size());
        m.local_offset = static_cast<uint32_t>(buf_.size());

        put32(0x04034b50);
        put16(20);      // version needed
        put16(0);       // flags
        put16(0);       // method: stored
        put16(0);       // mod time
        put16(0x21);    // mod date
        put32(m.crc);
        put32(m.size);  // compressed
        put32(m.size);  // uncompressed
        put16(static_cast<uint16_t>(m.name.size()));
        put16(0);       // extra len
        buf_ += m.name;
        buf_.append(bytes.data(), bytes.size());
        members_.push_back(std::move(m));
    }

    std::string finish() {
        size_t cd_off = buf_.size();
        for (const auto& m : members_) {
            put32(0x02014b50);
            put16(20);  // version made by
            put16(20);  // version needed
            put16(0);   // flags
            put16(0);   // method
            put16(0);   // mod time
            put16(0x21);
            put32(m.crc);
            put32(m.size);
            put32(m.size);
            put16(static_cast<uint16_t>(m.name.size()));
            put16(0);  // extra
            put16(0);  // comment
            put16(0);  // disk
            put16(0);  // internal attrs
            put32(0);  // external attrs
            put32(m.local_offset);
            buf_ += m.name;
        }
        size_t cd_size = buf_.size() - cd_off;
        put32(0x06054b50);
        put16(0);
        put16(0);
        put16(static_cast<uint16_t>(members_.size()));
        put16(static_cast<uint16_t>(members_.size()));
        put32(static_cast<uint32_t>(cd_size));
        put32(static_cast<uint32_t>(cd_off));
        put16(0);
        return std::move(buf_);
    }

private:
    struct Member {
        std::string name;
        uint32_t crc = 0;
        uint32_t size = 0;
        uint32_t local_offset = 0;
    };

    void put16(uint16_t v) {
        buf_ += static_cast<char>(v & 0xff);
        buf_ += static_cast<char>((v >> 8) & 0xff);
    }
    void put32(uint32_t v) {
        buf_ += static_cast<char>(v & 0xff);
        buf_ += static_cast<char>((v >> 8) & 0xff);
        buf_ += static_cast<char>((v >> 16) & 0xff);
        buf_ += static_cast<char>((v >> 24) & 0xff);
    }

    std::string buf_;
    std::vector<Member> members_;
};

} // namespace shadescan
