#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dyckl/bigint.hpp"
#include "dyckl/errors.hpp"

namespace dyckl {

// Lattice-word types and the statistics defined on them. All words are
// immutable after construction and validated by their constructors; every
// operation here is a pure function. Positions reported through the public
// interface are 1-based.

enum class DyckStep : unsigned char { Up, Down };
enum class MotzkinStep : unsigned char { Up, Flat, Down };
enum class StarLetter : unsigned char { Up, Flat, Down, Star };
enum class CatalanLetter : unsigned char { X, Y, Z };

// -------------------------------------------------------------------------
// Word types
// -------------------------------------------------------------------------

// Dyck path of semilength n: 2n steps in {u,d}, every prefix has
// #u >= #d, endpoint on the axis.
class DyckWord {
public:
    DyckWord() = default;
    explicit DyckWord(std::vector<DyckStep> steps);

    static DyckWord parse(std::string_view text);

    const std::vector<DyckStep>& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }
    int semilength() const { return size() / 2; }
    std::string str() const;

    bool operator==(const DyckWord&) const = default;
    bool operator<(const DyckWord& o) const { return steps_ < o.steps_; }

private:
    std::vector<DyckStep> steps_;
};

// Motzkin path: steps in {u,h,d}, never below the axis, balanced.
class MotzkinWord {
public:
    MotzkinWord() = default;
    explicit MotzkinWord(std::vector<MotzkinStep> steps);

    static MotzkinWord parse(std::string_view text);

    const std::vector<MotzkinStep>& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }
    std::string str() const;

    bool operator==(const MotzkinWord&) const = default;
    bool operator<(const MotzkinWord& o) const { return steps_ < o.steps_; }

private:
    std::vector<MotzkinStep> steps_;
};

// Word over {u,h,d,*} whose star-free subword is a Motzkin path.
class StarWord {
public:
    StarWord() = default;
    explicit StarWord(std::vector<StarLetter> letters);
    explicit StarWord(const MotzkinWord& m);

    static StarWord parse(std::string_view text);

    const std::vector<StarLetter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    int star_count() const;
    MotzkinWord strip_stars() const;
    std::string str() const;

    bool operator==(const StarWord&) const = default;
    bool operator<(const StarWord& o) const { return letters_ < o.letters_; }

private:
    std::vector<StarLetter> letters_;
};

// Word over {x,y,z} of length 3n with every prefix satisfying
// #x >= #y >= #z and all three totals equal.
class CatalanWord {
public:
    CatalanWord() = default;
    explicit CatalanWord(std::vector<CatalanLetter> letters);

    static CatalanWord parse(std::string_view text);

    const std::vector<CatalanLetter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    std::string str() const;

    bool operator==(const CatalanWord&) const = default;
    bool operator<(const CatalanWord& o) const { return letters_ < o.letters_; }

private:
    std::vector<CatalanLetter> letters_;
};

// -------------------------------------------------------------------------
// parse_word / render
// -------------------------------------------------------------------------

enum class Alphabet { Dyck, Motzkin, Star, Catalan };

using ParsedWord = std::variant<DyckWord, MotzkinWord, StarWord, CatalanWord>;

// Parses lowercase text over the declared alphabet (u/d, u/d/h, u/d/h/*,
// x/y/z). Rejects foreign letters, prefix violations, and unbalanced words.
ParsedWord parse_word(std::string_view text, Alphabet alphabet);

std::string render(const ParsedWord& word);

// -------------------------------------------------------------------------
// Statistics
// -------------------------------------------------------------------------

// Cumulative ascent/descent run lengths. Both sequences are strictly
// increasing, a_i >= b_i > 0, and both end at the semilength n.
struct AscDesc {
    std::vector<int> asc;
    std::vector<int> des;

    bool operator==(const AscDesc&) const = default;
};

// The r-s array: column k holds (r_k, s_k) for k = 1..n-1, where r_k counts
// the down steps between the k-th and (k+1)-st up step and s_k counts the up
// steps between the k-th and (k+1)-st down step.
struct RSArray {
    std::vector<std::pair<int, int>> cols;

    int width() const { return static_cast<int>(cols.size()); }
    bool operator==(const RSArray&) const = default;
};

// Per-star context: 1-based position plus the number of ups and downs
// strictly before the star.
struct StarContext {
    struct Entry {
        int pos = 0;
        int ups = 0;
        int downs = 0;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> stars;

    bool operator==(const StarContext&) const = default;
};

AscDesc asc_desc(const DyckWord& d);

// Reconstructs the unique Dyck word with the given ascent/descent sequences.
DyckWord dyck_from_asc_desc(const AscDesc& ad);

RSArray rs_array(const DyckWord& d);

// L(D) = prod_k C(r_k + s_k, r_k); 1 for the empty product.
Int l_statistic(const DyckWord& d);
Int l_from_rs(const RSArray& rs);

// Number of down steps that land on the axis.
int returns(const DyckWord& d);

// Word read backwards with u and d swapped.
MotzkinWord reverse_motzkin(const MotzkinWord& m);

StarContext star_context(const StarWord& w);

// Reverse-complement of a Dyck word (read backwards, u <-> d).
DyckWord reverse_complement(const DyckWord& d);

// 1-based position of the first down step; 0 if the word has none.
int first_down_pos(const MotzkinWord& m);

} // namespace dyckl
