#pragma once

#include <string>
#include <vector>

namespace hn {

// Reduced word in the genus-g surface group. Letters are signed generator
// indices: +k is the k-th generator, -k its inverse, 1 <= k <= 2g, in the
// fixed order a1, b1, a2, b2, ...  The letter vector carries no adjacent
// cancelling pair (free reduction is an invariant, enforced by constructors).
struct GroupWord {
    int genus = 2;
    std::vector<int> letters;

    bool empty() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const GroupWord&) const = default;
};

// Builds a reduced word from raw letters; throws std::invalid_argument on a
// zero letter or an index outside 1..2g.
GroupWord make_word(int genus, const std::vector<int>& raw);

// Token syntax: "a1 B1 a2"; lowercase = generator, uppercase = inverse.
GroupWord parse_word(int genus, const std::string& text);
std::string word_to_string(const GroupWord& w);

GroupWord compose(const GroupWord& u, const GroupWord& v);
GroupWord invert(const GroupWord& w);
GroupWord conjugate(const GroupWord& w, const GroupWord& c);   // c w c^-1
GroupWord power(const GroupWord& w, int k);

// Strips matching first/last letters: c u c^-1 -> u.
GroupWord cyclic_reduce(const GroupWord& w);

// Signed letter counts, dimension 2g: the class of w in H1 of the surface.
std::vector<long long> abelianize(const GroupWord& w);

// True when the cyclic reduction of w is nonempty and not a proper power,
// detected by minimal rotation period of the cyclic letter sequence.
bool is_primitive(const GroupWord& w);

// Cyclically reduced u with cyclic_reduce(w) = u^k, k maximal.
GroupWord primitive_root(const GroupWord& w);

// Equality of cyclic words (rotation of the cyclic reductions).
bool conjugate_as_cyclic_words(const GroupWord& u, const GroupWord& v);

// a1 b1 a1^-1 b1^-1 a2 ... : the surface relator.
GroupWord relator(int genus);

}  // namespace hn
