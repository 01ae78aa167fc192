#pragma once

#include "schubmf/demolition.hpp"
#include "schubmf/lr.hpp"
#include "schubmf/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schubmf {

/// Concrete evidence of multiplicity: a target shape nu together with
/// two distinct LR fillings of nu/lam of content mu.
struct MultiplicityWitness {
    Partition nu;
    LrFilling first;
    LrFilling second;
    std::vector<std::string> notes; // reduction/construction trace
};

/// Brute-force search: the lexicographically least nu in the frame with
/// coefficient >= 2, carrying its first two enumerated fillings; absent
/// when the product is multiplicity-free or zero.
std::optional<MultiplicityWitness> find_witness(const RichardsonQuadruple& q);

/// Hook base case: mu = (b, 1^a) with b >= 2, lam with at least two
/// distinct part sizes, q basic. Builds the horizontal-strip filling and
/// its label surgery; when the surgery is out of range on this
/// orientation it is attempted on the conjugate, and as a last resort
/// the witness is located by search. Output always validates.
MultiplicityWitness witness_hook_case(const RichardsonQuadruple& q);

/// Well-ordered fat-hook base case: the movable-tile construction
/// producing two fillings of one shape. Preconditions: q basic and
/// well-ordered, both shapes fat hooks.
MultiplicityWitness witness_wellordered_case(const RichardsonQuadruple& q);

/// Base configurations with mu a rectangle of shortness >= 2 and lam
/// carrying at least three part sizes: either mu has exactly two rows
/// (or two columns, handled by conjugation), or the fully reduced form
/// lam = (k-1, 2, 1^(l-3)), mu = ((k-2)^h). Throws on any other input.
MultiplicityWitness witness_caseII_base(const RichardsonQuadruple& q);

/// Fat hook lam = (c^d, a^b) of shortness >= 2 against a rectangle
/// mu = (g^h) of shortness >= 3 with 3 <= g <= k-3, 3 <= h <= l-3,
/// g <= k-a and h < l-d (wider parameters are reduced upstream).
/// Column-table fillings F_h and G_h with the boundary adjustments.
MultiplicityWitness witness_caseIII(const RichardsonQuadruple& q);

/// Full reduction driver: demolishes q to a base case, builds a base
/// witness, lifts the witness shape back through every demolition step
/// (part reinsertion for single-shape lines, rotated-complement
/// transport for full lines), and re-derives the two fillings on the
/// original quadruple. Precondition: classify(q) has multiplicity.
MultiplicityWitness witness_via_reduction(const RichardsonQuadruple& q);

} // namespace schubmf
