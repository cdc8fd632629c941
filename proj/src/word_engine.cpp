#include "statesum/word_engine.hpp"

#include <stdexcept>

namespace statesum {

bool WordTree::operator==(const WordTree& o) const {
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return letter == o.letter;
    return kids[0] == o.kids[0] && kids[1] == o.kids[1];
}

Word leaves(const std::vector<int>& letters) {
    Word w;
    for (int h : letters) w.push_back(WordTree::leaf(h));
    return w;
}

WordEngine::WordEngine(const SemiWeakStructure& S, Word start)
    : S_(S), word_(std::move(start)) {}

int WordEngine::tree_product(const WordTree& t) const {
    if (t.is_leaf()) return t.letter;
    return S_.H.add(tree_product(t.kids[0]), tree_product(t.kids[1]));
}

void WordEngine::flatten_into(const WordTree& t, std::vector<int>& out) const {
    if (t.is_leaf()) {
        out.push_back(t.letter);
        return;
    }
    flatten_into(t.kids[0], out);
    flatten_into(t.kids[1], out);
}

long WordEngine::shift_cost(int x, const std::vector<int>& seq) const {
    long c = 0;
    int run = seq.empty() ? 0 : seq[0];
    for (size_t t = 1; t < seq.size(); ++t) {
        c += S_.alpha1_at(x, run, seq[t]);
        run = S_.H.add(run, seq[t]);
    }
    return c % S_.m;
}

long WordEngine::tree_cost(const WordTree& t) const {
    if (t.is_leaf()) return 0;
    std::vector<int> right;
    flatten_into(t.kids[1], right);
    return (tree_cost(t.kids[0]) + tree_cost(t.kids[1]) +
            shift_cost(tree_product(t.kids[0]), right)) % S_.m;
}

long WordEngine::segment_cost(const Word& seg, bool prefixed, int prefix) const {
    // Cost of the segment relative to the fully left-bracketed normal form:
    // each tree contributes its internal reassociation cost, and under a
    // nonempty prefix the whole segment is additionally regrouped as a unit,
    // (p t1 t2 ...) => p (t1 t2 ...), which costs the alpha1 string of the
    // prefix across the tree products.
    long c = 0;
    std::vector<int> units;
    for (const WordTree& t : seg) {
        c += tree_cost(t);
        units.push_back(tree_product(t));
    }
    if (prefixed) c += shift_cost(prefix, units);
    return c % S_.m;
}

int WordEngine::product() const {
    int p = 0;
    for (const WordTree& t : word_) p = S_.H.add(p, tree_product(t));
    return p;
}

void WordEngine::apply(size_t pos, const Word& src, const Word& tgt, long factor) {
    if (pos + src.size() > word_.size())
        throw std::invalid_argument("word engine: segment out of range");
    for (size_t i = 0; i < src.size(); ++i)
        if (!(word_[pos + i] == src[i]))
            throw std::invalid_argument("word engine: source pattern mismatch");
    int prefix = 0;
    for (size_t i = 0; i < pos; ++i) prefix = S_.H.add(prefix, tree_product(word_[i]));
    long src_prod = 0, tgt_prod = 0;
    for (const auto& t : src) src_prod = S_.H.add((int)src_prod, tree_product(t));
    for (const auto& t : tgt) tgt_prod = S_.H.add((int)tgt_prod, tree_product(t));
    if (src_prod != tgt_prod)
        throw std::invalid_argument("word engine: move does not preserve the H-product");
    long corr = segment_cost(tgt, pos > 0, prefix) - segment_cost(src, pos > 0, prefix);
    exp_ = ((exp_ + factor + corr) % S_.m + S_.m) % S_.m;
    word_.erase(word_.begin() + pos, word_.begin() + pos + src.size());
    word_.insert(word_.begin() + pos, tgt.begin(), tgt.end());
}

}  // namespace statesum
