#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace flowguard::pipeline {

inline constexpr std::uint32_t kArtifactMajor = 1;
inline constexpr std::uint32_t kArtifactMinor = 0;

// Layout (little-endian):
//   "FGARTIFACT\0\0"  12-byte magic
//   u32 major, u32 minor
//   u64 manifest length, manifest JSON (UTF-8)
//   section payloads, back to back, in manifest order
//   u64 FNV-1a-64 of every preceding byte
// The manifest holds {"kind", "created_by", "meta", "sections": [{"name",
// "offset", "size", "fnv1a64"}]} with offsets relative to the first payload.
class ArtifactWriter {
public:
    explicit ArtifactWriter(std::string kind) : kind_(std::move(kind)) {}

    void add(const std::string& name, std::vector<std::uint8_t> bytes);
    void add_json(const std::string& name, const nlohmann::json& doc);
    void set_meta(nlohmann::json meta) { meta_ = std::move(meta); }

    std::vector<std::uint8_t> serialize() const;
    // Writes to a temporary file, then renames over `path`.
    void write(const std::filesystem::path& path) const;

private:
    std::string kind_;
    nlohmann::json meta_ = nlohmann::json::object();
    std::vector<std::pair<std::string, std::vector<std::uint8_t>>> sections_;
};

class Artifact {
public:
    // Verifies magic, major version, overall checksum and section checksums.
    static Artifact parse(std::vector<std::uint8_t> bytes);
    static Artifact read(const std::filesystem::path& path);

    const std::string& kind() const noexcept { return kind_; }
    const nlohmann::json& manifest() const noexcept { return manifest_; }
    const nlohmann::json& meta() const { return manifest_.at("meta"); }
    bool has(const std::string& name) const { return index_.count(name) > 0; }
    std::span<const std::uint8_t> section(const std::string& name) const;
    nlohmann::json json_section(const std::string& name) const;
    std::uint64_t checksum() const noexcept { return checksum_; }

    // Throws FormatError unless kind() == expected.
    void expect_kind(const std::string& expected) const;

private:
    std::vector<std::uint8_t> bytes_;
    nlohmann::json manifest_;
    std::string kind_;
    std::size_t payload_offset_ = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> index_;
    std::uint64_t checksum_ = 0;
};

} // namespace flowguard::pipeline
