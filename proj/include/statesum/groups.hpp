#pragma once
/// Finite groups given by multiplication tables, and finite abelian groups
/// given as products of cyclic factors.  Elements are dense indices so that
/// hot loops stay table-driven.
#include <string>
#include <vector>

namespace statesum {

/// A finite group presented by its multiplication table.  Element 0 is the
/// identity.  mul[a][b] is the product "a then b" (we only ever rely on the
/// table being a group law; for abelian G the order is immaterial).
struct FiniteGroup {
    int n = 1;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;

    int op(int a, int b) const { return mul[a][b]; }
    bool is_abelian() const;
    /// Throws std::invalid_argument if the table is not a group with identity 0.
    void validate() const;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup from_table(std::vector<std::vector<int>> table);
};

/// A finite abelian group Z/n1 x ... x Z/nk, written additively.  Elements are
/// mixed-radix indices: index = c1 + n1*(c2 + n2*(...)).
struct FiniteAbelianGroup {
    std::vector<int> orders;  ///< cyclic factor orders, each >= 1
    int n = 1;                ///< total size

    explicit FiniteAbelianGroup(std::vector<int> ord = {});

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    /// Component vector of an element.
    std::vector<int> components(int a) const;
    int from_components(const std::vector<int>& c) const;
    /// Exponent of the group (lcm of factor orders).
    int exponent() const;
    std::string describe() const;

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(std::vector<int>{}); }
    static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }
};

}  // namespace statesum
