#pragma once

#include "schubmf/demolition.hpp"
#include "schubmf/partition.hpp"

#include <optional>
#include <string>

namespace schubmf {

/// Reasons a product is multiplicity-free, matching the classification
/// conditions (I)-(IV) on the basic demolition; EmptyShape covers a
/// demolished quadruple whose shapes or frame degenerated.
enum class MfReason { I, II, III, IV, EmptyShape };

enum class Outcome { ZeroProduct, MultiplicityFree, HasMultiplicity };

struct Verdict {
    Outcome outcome = Outcome::ZeroProduct;
    std::optional<MfReason> reason;                 // MultiplicityFree only
    std::optional<MultCase> mult_case;              // HasMultiplicity only
    std::optional<RichardsonQuadruple> demolished;  // absent for ZeroProduct
};

/// Per-case membership test for the multiplicity conditions, measured in
/// the quadruple's own frame:
///   I'   both shapes have at least two distinct part sizes;
///   II'  lam has at least three part sizes, mu a rectangle of shortness >= 2;
///   III' lam a fat hook of shortness >= 2, mu a rectangle of shortness >= 3;
///   IV'  II' or III' with the roles of lam and mu exchanged.
/// A degenerate frame (no rows or no columns) satisfies no case.
bool satisfies_mult_case(const RichardsonQuadruple& q, MultCase c);

/// First multiplicity-free condition that holds, in the order I..IV and
/// lam-first within the symmetric ones:
///   I   lam or mu is a rectangle of shortness 1;
///   II  lam a rectangle of shortness 2 and mu a fat hook (or swapped);
///   III lam a rectangle and mu a fat hook of shortness 1 (or swapped);
///   IV  both rectangles.
/// Preconditions: q basic, both shapes nonempty.
std::optional<MfReason> multiplicity_free_condition(const RichardsonQuadruple& q);

/// First multiplicity case that holds, in the order I'..IV'.
/// Precondition: q basic.
std::optional<MultCase> multiplicity_case(const RichardsonQuadruple& q);

/// Constant-time verdict: ZeroProduct when the placements overlap;
/// otherwise decided on the basic demolition, HasMultiplicity iff some
/// multiplicity case holds there. Throws if a shape does not fit.
Verdict classify(const Partition& lam, const Partition& mu, RectangleFrame frame);

/// Tensor-product verdict in a frame large enough that no term is
/// truncated: (len(lam)+len(mu)) rows by (lam_1+mu_1) columns.
Verdict classify_gl(const Partition& lam, const Partition& mu);

std::string to_string(MfReason r);
std::string to_string(MultCase c);
std::string to_string(Outcome o);

} // namespace schubmf
