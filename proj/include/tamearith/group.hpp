#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tamearith/error.hpp"

namespace tamearith {

/// Finite group as a full multiplication table on indices 0..order-1.
/// Validation checks associativity and identity/inverse consistency, which is
/// feasible for the supported order cap.
class FiniteGroup {
public:
    static constexpr long kOrderCap = 64;

    FiniteGroup(std::string name, std::vector<std::vector<int>> mul_table);

    const std::string& name() const { return name_; }
    long order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    long exponent() const { return exponent_; }
    long element_order(int a) const { return elt_order_[a]; }
    int power(int a, long k) const;

    bool is_abelian() const;

    /// Conjugate b by a: a b a^{-1}.
    int conj(int a, int b) const { return mul_[mul_[a][b]][inv_[a]]; }

    // table builders used by tests and the bundled corpus
    static FiniteGroup cyclic(long n);
    static FiniteGroup klein_four();
    static FiniteGroup symmetric3();
    static FiniteGroup dihedral4();
    static FiniteGroup quaternion8();
    static FiniteGroup cyclic6();

private:
    std::string name_;
    long order_;
    std::vector<std::vector<int>> mul_;
    int identity_;
    std::vector<int> inv_;
    long exponent_;
    std::vector<long> elt_order_;
};

struct ConjClassData {
    std::vector<std::vector<int>> classes;  // partition, each sorted
    std::vector<int> class_of;              // element -> class index
    std::vector<int> representatives;       // least element of each class
    std::vector<int> inverse_class;         // class of g^{-1}

    size_t count() const { return classes.size(); }
};

/// Orbit partition under conjugation; classes ordered by least element, the
/// representative is the least element.
ConjClassData conjugacy_classes(const FiniteGroup& g);

/// A subgroup presented as a subset of parent element indices.
struct Subgroup {
    std::shared_ptr<const FiniteGroup> parent;
    std::vector<int> elements;       // sorted parent indices
    std::shared_ptr<FiniteGroup> group;  // abstract group on 0..|H|-1
    std::vector<int> to_parent;      // local -> parent index
    std::map<int, int> to_local;     // parent -> local index

    bool contains(int parent_elt) const { return to_local.count(parent_elt) > 0; }
};

/// Builds the subgroup structure; throws NotASubgroup when the subset is not
/// closed or misses identity/inverses.
Subgroup make_subgroup(std::shared_ptr<const FiniteGroup> parent, std::vector<int> elements,
                       const std::string& name = "H");

} // namespace tamearith
