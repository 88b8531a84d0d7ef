#ifndef PGLCENSUS_PERM_HPP
#define PGLCENSUS_PERM_HPP

#include <string>
#include <vector>

namespace pglcensus {

// Element of S_degree acting on vector coordinates.  1-indexed in all
// I/O (cycle notation), 0-indexed internally.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(unsigned degree);  // identity
    // images[i] = sigma(i), 0-indexed; must be a bijection.
    explicit Permutation(std::vector<unsigned> images);

    // Accepts "(1 3)(2 4)", the compact "(13)(24)" for degree <= 9,
    // and "e", "()", "id" for the identity.
    static Permutation from_cycles(const std::string& text, unsigned degree);

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }
    unsigned image(unsigned i) const { return images_[i]; }
    unsigned preimage(unsigned i) const { return inverse_[i]; }
    bool is_identity() const;

    Permutation inverse() const;
    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    unsigned order() const;
    // Multiset of cycle lengths >= 2, sorted ascending; empty for the identity.
    std::vector<unsigned> cycle_type() const;
    // "e" for the identity, else space-separated cycles like "(1 3)(2 4)".
    std::string to_cycle_string() const;

private:
    void rebuild_inverse();
    std::vector<unsigned> images_;
    std::vector<unsigned> inverse_;
};

// All elements of S_degree in lexicographic order of their image words.
std::vector<Permutation> symmetric_group(unsigned degree);

// Transpositions (i, i+1); generate S_degree.
std::vector<Permutation> adjacent_transpositions(unsigned degree);

}  // namespace pglcensus

#endif
