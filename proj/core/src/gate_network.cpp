#include "qmarg/gate_network.hpp"

#include <cctype>
#include <cstddef>

namespace qmarg {

unsigned arity(BoolOp op) {
    switch (op) {
        case BoolOp::Not: return 1;
        case BoolOp::And:
        case BoolOp::Or:
        case BoolOp::Xor: return 2;
        case BoolOp::Const0:
        case BoolOp::Const1: return 0;
    }
    return 0;
}

std::string_view op_name(BoolOp op) {
    switch (op) {
        case BoolOp::Not: return "NOT";
        case BoolOp::And: return "AND";
        case BoolOp::Or: return "OR";
        case BoolOp::Xor: return "XOR";
        case BoolOp::Const0: return "CONST0";
        case BoolOp::Const1: return "CONST1";
    }
    return "?";
}

std::optional<BoolOp> op_from_name(std::string_view name) {
    if (name == "NOT") return BoolOp::Not;
    if (name == "AND") return BoolOp::And;
    if (name == "OR") return BoolOp::Or;
    if (name == "XOR") return BoolOp::Xor;
    if (name == "CONST0") return BoolOp::Const0;
    if (name == "CONST1") return BoolOp::Const1;
    return std::nullopt;
}

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

} // namespace

void GateNetwork::validate() const {
    if (num_inputs < 1) throw ValidationError("network must have at least one input");
    if (num_outputs < 1) throw ValidationError("network must have at least one output");
    if (output_map.size() != num_outputs) {
        throw ValidationError("output map size does not match declared output count");
    }
    for (std::size_t j = 0; j < gates.size(); ++j) {
        const GateNode& g = gates[j];
        const std::uint32_t own_wire = gate_wire(j);
        const unsigned a = arity(g.op);
        for (unsigned s = 0; s < a; ++s) {
            if (g.sources[s] >= own_wire) {
                throw ValidationError("gate '" + g.name + "' references wire " +
                                      std::to_string(g.sources[s]) + " out of DAG order");
            }
        }
        for (unsigned s = a; s < g.sources.size(); ++s) {
            if (g.sources[s] != 0) {
                throw ValidationError("gate '" + g.name + "' carries stale source slots");
            }
        }
        if (!is_identifier(g.name)) {
            throw ValidationError("gate name '" + g.name + "' is not a valid identifier");
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (gates[i].name == g.name) {
                throw ValidationError("duplicate gate name '" + g.name + "'");
            }
        }
    }
    for (std::size_t k = 0; k < output_map.size(); ++k) {
        if (output_map[k] >= num_wires()) {
            throw ValidationError("output " + std::to_string(k) + " references undefined wire " +
                                  std::to_string(output_map[k]));
        }
    }
}

std::uint64_t ExactDistribution::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

double ExactDistribution::probability(std::size_t outcome) const {
    return static_cast<double>(counts.at(outcome)) /
           static_cast<double>(std::uint64_t{1} << log2_denominator);
}

std::vector<std::uint8_t> evaluate(const GateNetwork& network,
                                   std::span<const std::uint8_t> input) {
    if (input.size() != network.num_inputs) {
        throw ValidationError("input length " + std::to_string(input.size()) +
                              " does not match network input count " +
                              std::to_string(network.num_inputs));
    }
    std::vector<std::uint8_t> wires(network.num_wires());
    for (std::size_t i = 0; i < input.size(); ++i) wires[i] = input[i] ? 1 : 0;

    for (std::size_t j = 0; j < network.gates.size(); ++j) {
        const GateNode& g = network.gates[j];
        std::uint8_t v = 0;
        switch (g.op) {
            case BoolOp::Not: v = wires[g.sources[0]] ^ 1; break;
            case BoolOp::And: v = wires[g.sources[0]] & wires[g.sources[1]]; break;
            case BoolOp::Or: v = wires[g.sources[0]] | wires[g.sources[1]]; break;
            case BoolOp::Xor: v = wires[g.sources[0]] ^ wires[g.sources[1]]; break;
            case BoolOp::Const0: v = 0; break;
            case BoolOp::Const1: v = 1; break;
        }
        wires[network.gate_wire(j)] = v;
    }

    std::vector<std::uint8_t> out(network.num_outputs);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = wires[network.output_map[k]];
    return out;
}

namespace {

// Word-parallel evaluation: lane b of each wire word holds the wire value for
// input x = base + b, so one pass evaluates 64 inputs.
void evaluate_block(const GateNetwork& net, std::uint64_t base, unsigned lanes,
                    std::vector<std::uint64_t>& wires,
                    std::vector<std::uint64_t>& counts) {
    constexpr std::uint64_t kLanePatterns[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
    };
    for (std::uint32_t i = 0; i < net.num_inputs; ++i) {
        if (i < 6) {
            wires[i] = kLanePatterns[i];
        } else {
            wires[i] = ((base >> i) & 1) ? ~std::uint64_t{0} : 0;
        }
    }
    for (std::size_t j = 0; j < net.gates.size(); ++j) {
        const GateNode& g = net.gates[j];
        std::uint64_t v = 0;
        switch (g.op) {
            case BoolOp::Not: v = ~wires[g.sources[0]]; break;
            case BoolOp::And: v = wires[g.sources[0]] & wires[g.sources[1]]; break;
            case BoolOp::Or: v = wires[g.sources[0]] | wires[g.sources[1]]; break;
            case BoolOp::Xor: v = wires[g.sources[0]] ^ wires[g.sources[1]]; break;
            case BoolOp::Const0: v = 0; break;
            case BoolOp::Const1: v = ~std::uint64_t{0}; break;
        }
        wires[net.num_inputs + j] = v;
    }
    for (unsigned b = 0; b < lanes; ++b) {
        std::uint64_t outcome = 0;
        for (std::size_t k = 0; k < net.output_map.size(); ++k) {
            outcome |= ((wires[net.output_map[k]] >> b) & 1) << k;
        }
        ++counts[outcome];
    }
}

} // namespace

ExactDistribution brute_force_distribution(const GateNetwork& network,
                                           unsigned enumeration_cap) {
    network.validate();
    if (network.num_inputs > enumeration_cap) {
        throw ResourceError("brute-force enumeration over 2^" +
                            std::to_string(network.num_inputs) +
                            " inputs exceeds the cap of 2^" + std::to_string(enumeration_cap));
    }
    const std::uint64_t num_inputs_total = std::uint64_t{1} << network.num_inputs;

    ExactDistribution dist;
    dist.log2_denominator = network.num_inputs;
    dist.counts.assign(std::uint64_t{1} << network.num_outputs, 0);

    std::vector<std::uint64_t> wires(network.num_wires());
    if (num_inputs_total < 64) {
        evaluate_block(network, 0, static_cast<unsigned>(num_inputs_total), wires, dist.counts);
    } else {
        for (std::uint64_t base = 0; base < num_inputs_total; base += 64) {
            evaluate_block(network, base, 64, wires, dist.counts);
        }
    }
    return dist;
}

NetworkBuilder::NetworkBuilder(std::uint32_t num_inputs, std::uint32_t num_outputs) {
    net_.num_inputs = num_inputs;
    net_.num_outputs = num_outputs;
    net_.output_map.assign(num_outputs, 0);
}

std::uint32_t NetworkBuilder::input_wire(std::uint32_t i) const {
    if (i >= net_.num_inputs) throw ValidationError("input index out of range");
    return i;
}

std::uint32_t NetworkBuilder::add_gate(BoolOp op, std::uint32_t a, std::uint32_t b) {
    GateNode node;
    node.name = "g" + std::to_string(net_.gates.size());
    node.op = op;
    if (arity(op) >= 1) node.sources[0] = a;
    if (arity(op) >= 2) node.sources[1] = b;
    net_.gates.push_back(std::move(node));
    return net_.gate_wire(net_.gates.size() - 1);
}

void NetworkBuilder::set_output(std::uint32_t index, std::uint32_t wire) {
    if (index >= net_.num_outputs) throw ValidationError("output index out of range");
    net_.output_map[index] = wire;
}

GateNetwork NetworkBuilder::build() {
    net_.validate();
    return std::move(net_);
}

} // namespace qmarg
