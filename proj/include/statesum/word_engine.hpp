#pragma once
/// Bracket expansion for structural 2-morphisms.
///
/// A 1-morphism of N(G,H,R) entering the partition function is a composite of
/// simple 1-morphisms labelled by H-elements.  We present such a composite as
/// a *word*: a sequence of parenthesis trees over H-letters, the sequence
/// itself being parenthesized from left to right.  A structural 2-morphism
/// (pi, tau, iota^1/2/3 or an inverse) acts on a contiguous segment of the
/// word; the "funny brackets" of the definition absorb the string of
/// 1-associators (alpha^1 factors) needed to make the rewrite composable.
///
/// The engine makes that absorption explicit and deterministic: every word has
/// a *left-normalization cost* — the alpha^1 exponent of the canonical
/// 2-morphism from the word to its fully left-parenthesized flattening — and
/// applying a move contributes its own exponent plus the cost difference
/// between target and source segments.  Coherence of the 1-associator (the
/// MOR4 identity) is exactly what makes this well defined, and the engine is
/// cross-validated against the displayed 15j expansion in the tests.
#include <vector>

#include "statesum/structure.hpp"

namespace statesum {

/// A parenthesis tree over H-letters: either a leaf or a pair.
struct WordTree {
    int letter = 0;              ///< H element (valid at leaves)
    std::vector<WordTree> kids;  ///< empty for a leaf, otherwise exactly two

    bool is_leaf() const { return kids.empty(); }
    static WordTree leaf(int h) {
        WordTree t;
        t.letter = h;
        return t;
    }
    static WordTree pair(WordTree a, WordTree b) {
        WordTree t;
        t.kids.push_back(std::move(a));
        t.kids.push_back(std::move(b));
        return t;
    }
    bool operator==(const WordTree& o) const;
};

using Word = std::vector<WordTree>;

Word leaves(const std::vector<int>& letters);

class WordEngine {
  public:
    WordEngine(const SemiWeakStructure& S, Word start);

    const Word& word() const { return word_; }
    /// Accumulated zeta_m exponent of the alpha^1 strings and move factors.
    long exponent() const { return exp_; }

    /// Replace word[pos .. pos+src.size()) — which must equal src — by tgt,
    /// adding `factor` plus the left-normalization correction.  Letters before
    /// and after the segment are untouched.
    void apply(size_t pos, const Word& src, const Word& tgt, long factor);

    /// H-product of the whole word.
    int product() const;
    /// True when the current word letter-sequence-with-trees equals w.
    bool word_equals(const Word& w) const { return word_ == w; }

  private:
    const SemiWeakStructure& S_;
    Word word_;
    long exp_ = 0;

    int tree_product(const WordTree& t) const;
    void flatten_into(const WordTree& t, std::vector<int>& out) const;
    /// alpha^1 cost of left-normalizing x composed with the letters of seq:
    /// sum over t >= 2 of alpha1(x, b_1...b_{t-1}, b_t).
    long shift_cost(int x, const std::vector<int>& seq) const;
    /// alpha^1 cost of left-normalizing the tree in isolation.
    long tree_cost(const WordTree& t) const;
    /// Cost of a segment in context: trees normalized and folded into a
    /// running prefix product (prefixed==true when letters precede pos).
    long segment_cost(const Word& seg, bool prefixed, int prefix) const;
};

}  // namespace statesum
