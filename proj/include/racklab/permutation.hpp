// permutation.hpp
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace racklab {

/// Element labels are 0..n-1.
using Element = std::uint32_t;

/// A permutation of {0, ..., n-1} acting on the right: (x)p is written p(x)
/// in code, and the product `a * b` means "first a, then b", so
/// (x)(a*b) = ((x)a)b.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t n);

    /// Throws std::invalid_argument if `images` is not a bijection on 0..n-1.
    static Permutation from_images(std::vector<Element> images);

    /// Builds from images without validation. Callers guarantee bijectivity.
    static Permutation from_images_unchecked(std::vector<Element> images);

    std::size_t size() const { return img_.size(); }
    Element operator()(Element x) const { return img_[x]; }
    std::span<const Element> images() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// Number of points moved.
    std::size_t support_size() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const;

private:
    explicit Permutation(std::vector<Element> img) : img_(std::move(img)) {}
    std::vector<Element> img_;
};

/// g^{-1} p g
Permutation conjugate(const Permutation& p, const Permutation& g);

bool is_bijection(std::span<const Element> images);

/// Lehmer code: code[i] = #{ j > i : p(j) < p(i) }.
std::vector<Element> lehmer_code(const Permutation& p);
Permutation from_lehmer_code(std::span<const Element> code);

/// All permutations of 0..n-1 in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace racklab
