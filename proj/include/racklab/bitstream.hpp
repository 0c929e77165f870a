// bitstream.hpp
//
// Big-endian bit packing: the first bit written is the most significant bit
// of the first byte. Values wider than 64 bits go through cpp_int.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace racklab {

using BigUint = boost::multiprecision::cpp_int;

/// Smallest w with 2^w >= count (0 for count <= 1).
unsigned bits_for(std::uint64_t count);
unsigned bits_for(const BigUint& count);

class BitWriter {
public:
    void write(std::uint64_t value, unsigned width);
    void write_big(const BigUint& value, unsigned width);
    void write_bit(bool bit);

    std::size_t bit_count() const { return bits_; }
    /// Pads the final partial byte with zero bits.
    std::vector<std::uint8_t> finish() const { return bytes_; }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bits_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    /// Throws CorruptStream when fewer than `width` bits remain.
    std::uint64_t read(unsigned width);
    BigUint read_big(unsigned width);
    bool read_bit();

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return bytes_.size() * 8 - pos_; }

    /// Throws CorruptStream unless only zero padding (< 8 bits) remains.
    void expect_end() const;

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace racklab
