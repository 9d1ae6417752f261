#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lm/rational.hpp"
#include "lm/sequences.hpp"

namespace lm {

/// True for the empty word and the words 0^m, 1^m.
bool is_constant_word(const FinWord& s);

enum class GenKind { x, y };

/// One generator letter x_s^e or y_s^e with nonzero exponent; the empty
/// subscript denotes the unsubscripted generators.
struct GenLetter {
    GenKind kind = GenKind::x;
    FinWord sub;
    Int exp{1};

    bool operator==(const GenLetter& o) const {
        return kind == o.kind && sub == o.sub && exp == o.exp;
    }
    GenLetter inverse() const { return {kind, sub, -exp}; }
    std::string str() const;
};

enum class Marker { G0, G };

/// Freely reduced word over the generator alphabet. A G0-marked word may not
/// contain y-letters with constant subscript.
struct GroupWord {
    std::vector<GenLetter> letters;
    Marker marker = Marker::G;

    static GroupWord make(std::vector<GenLetter> letters, Marker marker);

    bool empty() const { return letters.empty(); }
    size_t length() const; // total letter count with multiplicity

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& o) const; // concatenation, reduced

    bool operator==(const GroupWord& o) const {
        return letters == o.letters && marker == o.marker;
    }

    std::string str() const;
};

GroupWord word_from_letter(GenKind kind, const FinWord& sub, const Int& exp, Marker marker);

/// Grammar: whitespace-separated letters "x[s]" / "y[s]" with binary s,
/// bare "x"/"y" for the empty subscript, optional "^k" integer exponent.
GroupWord parse_word(const std::string& text, Marker marker);

/// The partial action of x_s (dir = +1) or x_s^{-1} (dir = -1) on the
/// cylinder of t: the word t' with x_s(t 2^N) = t' 2^N when that image is a
/// cylinder, nullopt otherwise.
std::optional<FinWord> partial_action(const FinWord& t, const FinWord& s, int dir = +1);

/// The defining relation family, instantiated at subscripts s (and t for
/// relations 2-4). Returns the two sides or nullopt when the preconditions
/// fail (partial action undefined, or s and t compatible for relation 4).
std::optional<std::pair<GroupWord, GroupWord>> relation_instance(int id, const FinWord& s,
                                                                 const FinWord& t = "");

using AbelImage = std::array<Int, 3>;

/// Letterwise abelianization. G0 marker: x -> (1,0,0), x_{0^m} -> (1,-1,0),
/// x_{1^m} -> (0,1,0), other x_s -> 0, y_s -> (0,0,1). G marker: x_s -> 0,
/// y -> (-1,1,1), y_{0^m} -> (0,1,0), y_{1^m} -> (0,0,1), other y_s ->
/// (1,0,0).
AbelImage abelianize(const GroupWord& w);

/// Word in standard form: an x-only head followed by a y-tail whose
/// subscripts satisfy "s_j is a prefix of s_i only if j >= i".
struct StandardForm {
    GroupWord head; // letters all of kind x
    std::vector<std::pair<FinWord, Int>> tail;
    Marker marker = Marker::G;

    GroupWord to_word() const;
    std::string str() const { return to_word().str(); }
};

struct ExponentSums {
    Int left{0}, right{0}, central{0};
};

/// y-exponent sums of the tail grouped by subscript class 0^n, 1^n (n >= 1)
/// and non-constant. The empty subscript belongs to no class.
ExponentSums exponent_sums(const StandardForm& sf);

/// Rewrites w into standard form using the defining relations. No semantic
/// validation; the standardize() wrapper checks the result against w.
StandardForm standardize_unchecked(const GroupWord& w, size_t budget = 1000000);

} // namespace lm
