#pragma once

#include <colorsim/colorer.hpp>
#include <colorsim/function.hpp>
#include <colorsim/sim_graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace colorsim
{

/// Parameters of a named gadget; each kind reads only the fields it needs.
struct GadgetParams
{
  int m = 2;
  int n = 3;
  int k = 0;
  int i = 0;
  int j = 1;
  int r = 2;
};

/// L, tau, cs+, cs-, ch, ps, xp, not, and, or, vand, vor, dot, xt, mux, add, sub, edge.
const std::vector<std::string>& gadget_names();

SimGraph build_named_gadget( const std::string& name, const GadgetParams& params );

/// The partial function the gadget simulates; nothing for L, which is a relation between x and y.
std::optional<PartialFunction> gadget_function( const std::string& name, const GadgetParams& params );

/// Inputs on which the simulation is claimed; empty means all of C^p.
std::vector<std::vector<Color>> gadget_points( const std::string& name, const GadgetParams& params );

/// Checks L_{k,n}: with x and y pinned, exactly one extension when (x = k) == (y = k), none otherwise.
VerifyReport verify_L( const SimGraph& g, int k, std::uint64_t cap = 2 );

/// Runs the matching check for a catalog gadget.
VerifyReport verify_gadget( const std::string& name, const GadgetParams& params, const SimGraph& g );

} // namespace colorsim
