// bitstream.cpp
#include "racklab/bitstream.hpp"

#include <stdexcept>
#include <string>

#include "racklab/errors.hpp"

namespace racklab {

unsigned bits_for(std::uint64_t count) {
    unsigned w = 0;
    while (w < 64 && (std::uint64_t{1} << w) < count) ++w;
    return w;
}

unsigned bits_for(const BigUint& count) {
    if (count <= 1) return 0;
    // msb(count - 1) + 1 bits hold every value below count
    return unsigned(boost::multiprecision::msb(BigUint(count - 1))) + 1;
}

void BitWriter::write_bit(bool bit) {
    if (bits_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= std::uint8_t(0x80u >> (bits_ % 8));
    ++bits_;
}

void BitWriter::write(std::uint64_t value, unsigned width) {
    if (width < 64 && (value >> width) != 0) {
        throw std::logic_error("value " + std::to_string(value) + " does not fit in " +
                               std::to_string(width) + " bits");
    }
    for (unsigned i = width; i-- > 0;) write_bit((value >> i) & 1u);
}

void BitWriter::write_big(const BigUint& value, unsigned width) {
    if (value < 0 || (value != 0 && boost::multiprecision::msb(value) >= width)) {
        throw std::logic_error("big value does not fit in " + std::to_string(width) + " bits");
    }
    for (unsigned i = width; i-- > 0;) write_bit(boost::multiprecision::bit_test(value, i));
}

bool BitReader::read_bit() {
    if (pos_ >= bytes_.size() * 8) throw CorruptStream("truncated stream");
    const bool bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
    ++pos_;
    return bit;
}

std::uint64_t BitReader::read(unsigned width) {
    if (width > 64) throw std::logic_error("read width exceeds 64 bits");
    if (remaining() < width) throw CorruptStream("truncated stream");
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | std::uint64_t(read_bit());
    return v;
}

BigUint BitReader::read_big(unsigned width) {
    if (remaining() < width) throw CorruptStream("truncated stream");
    BigUint v = 0;
    for (unsigned i = 0; i < width; ++i) {
        v <<= 1;
        if (read_bit()) v |= 1;
    }
    return v;
}

void BitReader::expect_end() const {
    if (remaining() >= 8) throw CorruptStream("trailing bytes after end of stream");
    for (std::size_t p = pos_; p < bytes_.size() * 8; ++p) {
        if ((bytes_[p / 8] >> (7 - p % 8)) & 1u) throw CorruptStream("non-zero padding bits");
    }
}

}  // namespace racklab
