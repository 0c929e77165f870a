// permutation.cpp
#include "racklab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace racklab {

Permutation Permutation::identity(std::size_t n) {
    std::vector<Element> img(n);
    std::iota(img.begin(), img.end(), Element{0});
    return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<Element> images) {
    if (!is_bijection(images)) {
        throw std::invalid_argument("image list is not a permutation");
    }
    return Permutation(std::move(images));
}

Permutation Permutation::from_images_unchecked(std::vector<Element> images) {
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<Element> inv(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) inv[img_[x]] = static_cast<Element>(x);
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (img_[x] != x) return false;
    }
    return true;
}

std::size_t Permutation::support_size() const {
    std::size_t moved = 0;
    for (std::size_t x = 0; x < img_.size(); ++x) moved += (img_[x] != x);
    return moved;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Element> img(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) img[x] = b.img_[a.img_[x]];
    return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (x) out += ' ';
        out += std::to_string(img_[x]);
    }
    out += ']';
    return out;
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    return g.inverse() * p * g;
}

bool is_bijection(std::span<const Element> images) {
    std::vector<bool> hit(images.size(), false);
    for (Element v : images) {
        if (v >= images.size() || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

std::vector<Element> lehmer_code(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<Element> code(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Element c = 0;
        for (std::size_t j = i + 1; j < n; ++j) c += (p(Element(j)) < p(Element(i)));
        code[i] = c;
    }
    return code;
}

Permutation from_lehmer_code(std::span<const Element> code) {
    const std::size_t n = code.size();
    std::vector<Element> pool(n);
    std::iota(pool.begin(), pool.end(), Element{0});
    std::vector<Element> img;
    img.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (code[i] >= pool.size()) throw std::invalid_argument("Lehmer digit out of range");
        img.push_back(pool[code[i]]);
        pool.erase(pool.begin() + code[i]);
    }
    return Permutation::from_images_unchecked(std::move(img));
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    std::vector<Element> img(n);
    std::iota(img.begin(), img.end(), Element{0});
    do {
        out.push_back(Permutation::from_images_unchecked(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace racklab
