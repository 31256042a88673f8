#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowguard/core/matrix.hpp"

namespace flowguard {

// Little-endian binary encoding used inside artifact sections. Doubles are
// stored as their raw IEEE-754 bits so round trips are bit-exact.
class BinaryWriter {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
    void f64(double v);
    void str(std::string_view s);
    void f64s(std::span<const double> v);
    void u64s(std::span<const std::uint64_t> v);
    void i32s(std::span<const int> v);
    void u8s(std::span<const std::uint8_t> v);
    void matrix(const Matrix& m);
    void raw(std::span<const std::uint8_t> b) { bytes_.insert(bytes_.end(), b.begin(), b.end()); }

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
};

class BinaryReader {
public:
    explicit BinaryReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
    double f64();
    std::string str();
    std::vector<double> f64s();
    std::vector<std::uint64_t> u64s();
    std::vector<int> i32s();
    std::vector<std::uint8_t> u8s();
    Matrix matrix();

    bool at_end() const noexcept { return pos_ == bytes_.size(); }
    std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

private:
    void need(std::size_t n) const;

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

// FNV-1a 64-bit over a byte range.
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed = 0xCBF29CE484222325ULL) noexcept;

} // namespace flowguard
