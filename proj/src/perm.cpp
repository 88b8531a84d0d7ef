#include "pglcensus/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pglcensus {

Permutation::Permutation(unsigned degree) {
    images_.resize(degree);
    std::iota(images_.begin(), images_.end(), 0u);
    inverse_ = images_;
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<char> hit(images_.size(), 0);
    for (unsigned v : images_) {
        if (v >= images_.size() || hit[v])
            throw std::domain_error("Permutation: images are not a bijection");
        hit[v] = 1;
    }
    rebuild_inverse();
}

void Permutation::rebuild_inverse() {
    inverse_.resize(images_.size());
    for (unsigned i = 0; i < images_.size(); ++i)
        inverse_[images_[i]] = i;
}

Permutation Permutation::from_cycles(const std::string& text, unsigned degree) {
    // strip outer whitespace only; spaces inside cycles act as separators
    std::string s = text;
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    s = s.substr(b, e - b);

    if (s.empty() || s == "e" || s == "id" || s == "()")
        return Permutation(degree);

    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.end(), 0u);

    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
        if (s[i] != '(')
            throw std::domain_error("Permutation: expected '(' in cycle notation: " + text);
        ++i;
        std::vector<unsigned> cycle;
        bool spaced = s.find(' ', i) != std::string::npos &&
                      s.find(' ', i) < s.find(')', i);
        bool comma = s.find(',', i) != std::string::npos &&
                     s.find(',', i) < s.find(')', i);
        if (spaced || comma) {
            std::string body;
            while (i < s.size() && s[i] != ')') body.push_back(s[i++]);
            if (i == s.size())
                throw std::domain_error("Permutation: unterminated cycle: " + text);
            ++i;
            std::istringstream is(body);
            std::string tok;
            while (std::getline(is, tok, comma ? ',' : ' ')) {
                if (tok.empty()) continue;
                cycle.push_back(static_cast<unsigned>(std::stoul(tok)));
            }
        } else {
            // compact digits, one point per digit (degree <= 9)
            if (degree > 9)
                throw std::domain_error(
                    "Permutation: compact cycle notation needs degree <= 9; separate points with spaces");
            while (i < s.size() && s[i] != ')') {
                if (!std::isdigit(static_cast<unsigned char>(s[i])))
                    throw std::domain_error("Permutation: bad character in cycle: " + text);
                cycle.push_back(static_cast<unsigned>(s[i] - '0'));
                ++i;
            }
            if (i == s.size())
                throw std::domain_error("Permutation: unterminated cycle: " + text);
            ++i;
        }
        if (cycle.size() < 2)
            continue;  // 1-cycles are fixed points
        std::vector<char> seen(degree, 0);
        for (unsigned& v : cycle) {
            if (v < 1 || v > degree)
                throw std::domain_error("Permutation: point out of range 1.." +
                                        std::to_string(degree) + ": " + text);
            v -= 1;
            if (seen[v])
                throw std::domain_error("Permutation: repeated point in cycle: " + text);
            seen[v] = 1;
        }
        for (size_t j = 0; j < cycle.size(); ++j) {
            unsigned from = cycle[j];
            unsigned to = cycle[(j + 1) % cycle.size()];
            if (images[from] != from)
                throw std::domain_error("Permutation: point appears in two cycles: " + text);
            images[from] = to;
        }
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (unsigned i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_ = inverse_;
    r.inverse_ = images_;
    return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::domain_error("Permutation: degree mismatch in composition");
    std::vector<unsigned> images(a.degree());
    for (unsigned i = 0; i < a.degree(); ++i)
        images[i] = a.images_[b.images_[i]];
    return Permutation(std::move(images));
}

unsigned Permutation::order() const {
    unsigned result = 1;
    for (unsigned len : cycle_type())
        result = std::lcm(result, len);
    return result;
}

std::vector<unsigned> Permutation::cycle_type() const {
    std::vector<unsigned> lens;
    std::vector<char> seen(images_.size(), 0);
    for (unsigned i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0, j = i;
        do {
            seen[j] = 1;
            j = images_[j];
            ++len;
        } while (j != i);
        if (len >= 2) lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (unsigned i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) { seen[i] = 1; continue; }
        os << "(";
        unsigned j = i;
        bool first = true;
        do {
            if (!first) os << " ";
            os << (j + 1);
            seen[j] = 1;
            first = false;
            j = images_[j];
        } while (j != i);
        os << ")";
        any = true;
    }
    return any ? os.str() : "e";
}

std::vector<Permutation> symmetric_group(unsigned degree) {
    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Permutation> adjacent_transpositions(unsigned degree) {
    std::vector<Permutation> out;
    for (unsigned i = 0; i + 1 < degree; ++i) {
        std::vector<unsigned> images(degree);
        std::iota(images.begin(), images.end(), 0u);
        std::swap(images[i], images[i + 1]);
        out.push_back(Permutation(std::move(images)));
    }
    return out;
}

}  // namespace pglcensus
