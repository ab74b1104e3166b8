#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tamearith/cyclotomic.hpp"
#include "tamearith/group.hpp"
#include "tamearith/matrix.hpp"

namespace tamearith {

/// Class function with values in Q(zeta_exponent), one value per conjugacy
/// class. Irreducible characters additionally have integral degree and
/// algebraic-integer values.
struct Character {
    std::vector<CyclotomicNumber> values;  // indexed by class
    long degree = 0;
};

/// Explicit matrices for an irreducible representation (entries cyclotomic).
struct IrreducibleRep {
    std::vector<CycMatrix> matrices;  // indexed by element
    long dim = 0;
};

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

/// Integer combination of the irreducibles of a fixed table.
struct VirtualCharacter {
    TablePtr table;
    std::vector<long> coeffs;  // per irreducible index

    CyclotomicNumber value_at_class(size_t cls) const;
    CyclotomicNumber value_at_element(int g) const;
    long degree() const;

    VirtualCharacter& operator+=(const VirtualCharacter& o);
    VirtualCharacter& operator-=(const VirtualCharacter& o);
    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
    VirtualCharacter operator*(long n) const;
};

class CharacterTable : public std::enable_shared_from_this<CharacterTable> {
public:
    std::shared_ptr<const FiniteGroup> group;
    ConjClassData classes;
    std::vector<Character> irreducibles;
    std::vector<std::optional<IrreducibleRep>> reps;  // per irreducible, when known

    size_t size() const { return irreducibles.size(); }
    long exponent() const { return group->exponent(); }

    const CyclotomicNumber& value(size_t irr, int element) const {
        return irreducibles[irr].values[classes.class_of[element]];
    }

    /// Index of the trivial character.
    size_t trivial_index() const { return trivial_; }

    /// Index of the complex-conjugate irreducible.
    size_t conjugate_index(size_t irr) const { return conj_partner_[irr]; }

    /// Permutation of irreducibles induced by zeta -> zeta^k on values.
    std::vector<size_t> galois_permutation(long k) const;

    /// Frobenius-Schur indicator of an irreducible (exactly -1, 0 or 1).
    int frobenius_schur(size_t irr) const;

    VirtualCharacter virtual_char(std::vector<long> coeffs) const;
    VirtualCharacter irreducible_char(size_t irr) const;
    VirtualCharacter regular_char() const;
    VirtualCharacter trivial_char() const;

    void finalize();  // fills trivial_ and conj_partner_, checks orthogonality

private:
    size_t trivial_ = 0;
    std::vector<size_t> conj_partner_;
};

/// Irreducible characters: Burnside-Dixon when not supplied, exact
/// verification either way. `supplied`, when present, must be the complete
/// list of irreducibles (any order); it is verified and kept in that order.
TablePtr character_table(std::shared_ptr<const FiniteGroup> g,
                         std::optional<std::vector<Character>> supplied = std::nullopt);

/// Exact inner product (psi, phi) = |G|^{-1} sum psi(g) phi(g^{-1}).
Rat inner_product_exact(const VirtualCharacter& a, const VirtualCharacter& b);
long inner_product(const VirtualCharacter& a, const VirtualCharacter& b);

/// Symplectic generator descriptions, in table order.
struct SymplecticGenerator {
    VirtualCharacter character;
    enum class Kind { quaternionic, conjugate_pair, doubled_orthogonal } kind;
    size_t irr;         // defining irreducible (first of pair for pairs)
    std::string label;
};

std::vector<SymplecticGenerator> symplectic_generators(const TablePtr& table);

/// Induction of a virtual character of the subgroup, expressed in the parent
/// table; Frobenius reciprocity holds exactly against `restrict_char`.
VirtualCharacter induce(const Subgroup& h, const TablePtr& sub_table,
                        const VirtualCharacter& psi_h, const TablePtr& parent_table);

VirtualCharacter restrict_char(const VirtualCharacter& psi, const Subgroup& h,
                               const TablePtr& sub_table);

/// Regular minus trivial character of a subgroup, in the subgroup's table.
VirtualCharacter augmentation_character(const TablePtr& sub_table);

/// det of T(g); a root of unity, multiplicative in g.
CyclotomicNumber det_character(const IrreducibleRep& rep, int g);

/// Validates T(g)T(h) = T(gh) and trace agreement with the stored character.
void validate_rep(const CharacterTable& table, size_t irr, const IrreducibleRep& rep);

/// 1x1 representations for all characters of an abelian group.
std::vector<IrreducibleRep> abelian_reps(const CharacterTable& table);

} // namespace tamearith
