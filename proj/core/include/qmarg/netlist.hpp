#pragma once

#include <string>
#include <string_view>

#include "qmarg/gate_network.hpp"

namespace qmarg {

// Line-oriented netlist text format. '#' starts a comment, blank lines are
// ignored. The first two meaningful lines declare the registers, then gates
// and outputs:
//
//   inputs <m>
//   outputs <n>
//   gate <name> = <OP> <src> [<src>]   OP in {NOT, AND, OR, XOR, CONST0, CONST1}
//   out <k> = <src>                    one line per output bit k
//
// A <src> is either "in<i>" (0 <= i < m) or the name of a previously defined
// gate. CONST0/CONST1 take no sources.

// Throws ParseError (carrying the offending line number) on any violation.
GateNetwork parse_netlist(std::string_view text);

// Canonical form: header, gates in definition order, outputs in index order.
// parse_netlist(emit_netlist(net)) reproduces net exactly.
std::string emit_netlist(const GateNetwork& network);

} // namespace qmarg
