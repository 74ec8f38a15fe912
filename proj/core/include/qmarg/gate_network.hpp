#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmarg/errors.hpp"

namespace qmarg {

// A classical sampling circuit: a combinational boolean network computing
// f: {0,1}^m -> {0,1}^n. Fed uniformly random input bits, its output samples
// the distribution p_X = |{x : f(x) = X}| / 2^m.

enum class BoolOp : std::uint8_t { Not, And, Or, Xor, Const0, Const1 };

unsigned arity(BoolOp op);
std::string_view op_name(BoolOp op);
std::optional<BoolOp> op_from_name(std::string_view name);

// Wires are numbered densely: inputs occupy wires 0..m-1, the j-th gate
// drives wire m+j. Gate sources must reference earlier wires (DAG order).
struct GateNode {
    std::string name; // textual identifier, preserved across parse/emit
    BoolOp op = BoolOp::Const0;
    std::array<std::uint32_t, 2> sources{}; // first arity(op) entries used, rest zero

    bool operator==(const GateNode&) const = default;
};

struct GateNetwork {
    std::uint32_t num_inputs = 0;  // m >= 1
    std::uint32_t num_outputs = 0; // n >= 1
    std::vector<GateNode> gates;
    std::vector<std::uint32_t> output_map; // output k reads wire output_map[k]

    std::uint32_t num_wires() const {
        return num_inputs + static_cast<std::uint32_t>(gates.size());
    }
    std::uint32_t gate_wire(std::size_t gate_index) const {
        return num_inputs + static_cast<std::uint32_t>(gate_index);
    }

    // Throws ValidationError on any structural violation (bad register
    // sizes, out-of-order sources, dangling output references, duplicate
    // or malformed gate names).
    void validate() const;

    bool operator==(const GateNetwork&) const = default;
};

// Exact rational distribution over n-bit outcomes: probability of outcome i
// is counts[i] / 2^log2_denominator, all integer arithmetic.
struct ExactDistribution {
    std::vector<std::uint64_t> counts; // size 2^n
    unsigned log2_denominator = 0;     // m

    std::uint64_t total() const;
    double probability(std::size_t outcome) const;
};

// Forward evaluation of f in DAG order. input.size() must equal num_inputs.
std::vector<std::uint8_t> evaluate(const GateNetwork& network,
                                   std::span<const std::uint8_t> input);

inline constexpr unsigned kDefaultEnumerationCap = 20;

// Tallies f(x) over all 2^m inputs. Exact; throws ResourceError when
// m exceeds the enumeration cap.
ExactDistribution brute_force_distribution(const GateNetwork& network,
                                           unsigned enumeration_cap = kDefaultEnumerationCap);

// Incremental construction helper that keeps the wire numbering straight.
class NetworkBuilder {
public:
    NetworkBuilder(std::uint32_t num_inputs, std::uint32_t num_outputs);

    std::uint32_t input_wire(std::uint32_t i) const;
    // Adds a gate and returns the wire it drives. Names default to g0, g1, ...
    std::uint32_t add_gate(BoolOp op, std::uint32_t a = 0, std::uint32_t b = 0);
    void set_output(std::uint32_t index, std::uint32_t wire);

    // Validates and returns the finished network.
    GateNetwork build();

private:
    GateNetwork net_;
};

} // namespace qmarg
