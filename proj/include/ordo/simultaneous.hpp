#ifndef ORDO_SIMULTANEOUS_HPP
#define ORDO_SIMULTANEOUS_HPP

#include <vector>

#include "ordo/digraph.hpp"
#include "ordo/result.hpp"

namespace ordo {

// Unweighted simultaneous bounds on left-outdegrees and right-indegrees.
// Infeasibility of the two one-sided greedies below yields a stuck set with
// no independent characterization; it is reported unvalidated.

// delta_left(v) <= g_delta(v) and rho_right(v) >= f_rho(v); right-to-left
// greedy on the qualification delta(v, V'\{v}) <= g and rho(v, V\V') >= f.
SolveResult solve_out_upper_in_lower(const Digraph& d, const std::vector<double>& g_delta,
                                     const std::vector<double>& f_rho);

// delta_left(v) >= f_delta(v) and rho_right(v) <= g_rho(v); left-to-right
// mirror.
SolveResult solve_out_lower_in_upper(const Digraph& d, const std::vector<double>& f_delta,
                                     const std::vector<double>& g_rho);

// delta_left == m_delta and rho_right == m_rho exactly. Feasible iff the sums
// match and the relaxation (g_delta := m_delta, f_rho := m_rho) is solvable;
// a sum mismatch is returned as its own witness.
SolveResult solve_exact(const Digraph& d, const std::vector<int>& m_delta,
                        const std::vector<int>& m_rho);

}  // namespace ordo

#endif
