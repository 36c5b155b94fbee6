#pragma once

#include <string>

#include "qplab/groups/finite_group.hpp"

namespace qplab::groups {

enum class Action { I, II };

Action parse_action(const std::string& s);  // "i" / "ii"
std::string to_string(Action a);

FiniteGroup cyclic(int n);  // distinguished "g"
FiniteGroup klein_four();   // distinguished "a", "b"
FiniteGroup dihedral(int n);  // order 2n, distinguished "r", "s"
FiniteGroup symmetric(int n);  // distinguished "s1" (transposition), "c" (n-cycle)
FiniteGroup alternating(int n);
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

// Z2^2 x| Z_m with t a t^-1 = a, t b t^-1 = ab (action i, m even) or
// t a t^-1 = b, t b t^-1 = ab (action ii, 3 | m). Element a^i b^j t^k has
// index 4k + i + 2j. IncompatibleAction otherwise.
FiniteGroup build_semidirect(int m, Action action);

}  // namespace qplab::groups
