#include "qmarg/netlist.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

namespace qmarg {

namespace {

// Register sizes beyond this are certainly mistakes, not workloads.
constexpr std::uint32_t kMaxDeclaredRegister = 1u << 16;

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

// "in<i>" with a pure decimal suffix.
std::optional<std::uint32_t> parse_input_ref(std::string_view token) {
    if (token.size() < 3 || token.substr(0, 2) != "in") return std::nullopt;
    auto idx = parse_uint(token.substr(2));
    if (!idx || *idx > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
    return static_cast<std::uint32_t>(*idx);
}

struct Parser {
    std::string_view text;
    GateNetwork net;
    std::unordered_map<std::string, std::uint32_t> gate_wires;
    std::vector<bool> outputs_seen;
    bool have_inputs = false;
    bool have_outputs = false;
    std::size_t line_no = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_no, message);
    }

    std::uint32_t resolve_source(std::string_view token) {
        if (auto idx = parse_input_ref(token)) {
            if (*idx >= net.num_inputs) {
                fail("input reference '" + std::string(token) + "' out of range (m=" +
                     std::to_string(net.num_inputs) + ")");
            }
            return *idx;
        }
        auto it = gate_wires.find(token);
        if (it == gate_wires.end()) {
            fail("undefined wire '" + std::string(token) + "'");
        }
        return it->second;
    }

    void handle_header(std::string_view keyword, const std::vector<std::string_view>& tokens) {
        const bool is_inputs = keyword == "inputs";
        if (tokens.size() != 2) fail("expected '" + std::string(keyword) + " <count>'");
        auto count = parse_uint(tokens[1]);
        if (!count || *count < 1 || *count > kMaxDeclaredRegister) {
            fail("'" + std::string(keyword) + "' count must be an integer in [1, " +
                 std::to_string(kMaxDeclaredRegister) + "]");
        }
        if (is_inputs) {
            net.num_inputs = static_cast<std::uint32_t>(*count);
            have_inputs = true;
        } else {
            net.num_outputs = static_cast<std::uint32_t>(*count);
            net.output_map.assign(net.num_outputs, 0);
            outputs_seen.assign(net.num_outputs, false);
            have_outputs = true;
        }
    }

    void handle_gate(const std::vector<std::string_view>& tokens) {
        // gate <name> = <OP> <src> [<src>]
        if (tokens.size() < 4 || tokens[2] != "=") {
            fail("expected 'gate <name> = <OP> <sources...>'");
        }
        const std::string_view name = tokens[1];
        if (parse_input_ref(name)) {
            fail("gate name '" + std::string(name) + "' collides with the input wire namespace");
        }
        if (gate_wires.contains(name)) {
            fail("duplicate wire '" + std::string(name) + "'");
        }
        auto op = op_from_name(tokens[3]);
        if (!op) fail("unknown operation '" + std::string(tokens[3]) + "'");
        const unsigned want = arity(*op);
        if (tokens.size() != 4 + want) {
            fail(std::string(op_name(*op)) + " takes " + std::to_string(want) +
                 " source(s), got " + std::to_string(tokens.size() - 4));
        }
        GateNode node;
        node.name = std::string(name);
        node.op = *op;
        for (unsigned s = 0; s < want; ++s) {
            node.sources[s] = resolve_source(tokens[4 + s]);
        }
        net.gates.push_back(std::move(node));
        gate_wires.emplace(net.gates.back().name, net.gate_wire(net.gates.size() - 1));
    }

    void handle_out(const std::vector<std::string_view>& tokens) {
        // out <k> = <src>
        if (tokens.size() != 4 || tokens[2] != "=") {
            fail("expected 'out <k> = <src>'");
        }
        auto k = parse_uint(tokens[1]);
        if (!k || *k >= net.num_outputs) {
            fail("output index '" + std::string(tokens[1]) + "' out of range (n=" +
                 std::to_string(net.num_outputs) + ")");
        }
        if (outputs_seen[*k]) {
            fail("output " + std::to_string(*k) + " assigned twice");
        }
        net.output_map[*k] = resolve_source(tokens[3]);
        outputs_seen[*k] = true;
    }

    GateNetwork run() {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t eol = text.find('\n', pos);
            std::string_view line =
                text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
            pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
            ++line_no;

            if (auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            auto tokens = tokenize(line);
            if (tokens.empty()) continue;

            const std::string_view keyword = tokens[0];
            if (!have_inputs) {
                if (keyword != "inputs") fail("expected 'inputs <m>' header first");
                handle_header("inputs", tokens);
            } else if (!have_outputs) {
                if (keyword != "outputs") fail("expected 'outputs <n>' header after 'inputs'");
                handle_header("outputs", tokens);
            } else if (keyword == "gate") {
                handle_gate(tokens);
            } else if (keyword == "out") {
                handle_out(tokens);
            } else {
                fail("unknown directive '" + std::string(keyword) + "'");
            }
        }
        line_no = 0; // end-of-input errors carry no line
        if (!have_inputs || !have_outputs) {
            fail("missing inputs/outputs header");
        }
        for (std::size_t k = 0; k < outputs_seen.size(); ++k) {
            if (!outputs_seen[k]) fail("missing 'out " + std::to_string(k) + "' line");
        }
        net.validate();
        return std::move(net);
    }
};

std::string source_name(const GateNetwork& net, std::uint32_t wire) {
    if (wire < net.num_inputs) return "in" + std::to_string(wire);
    return net.gates[wire - net.num_inputs].name;
}

} // namespace

GateNetwork parse_netlist(std::string_view text) {
    Parser parser{.text = text};
    return parser.run();
}

std::string emit_netlist(const GateNetwork& network) {
    network.validate();
    std::string out;
    out += "inputs " + std::to_string(network.num_inputs) + "\n";
    out += "outputs " + std::to_string(network.num_outputs) + "\n";
    for (const GateNode& g : network.gates) {
        out += "gate " + g.name + " = " + std::string(op_name(g.op));
        for (unsigned s = 0; s < arity(g.op); ++s) {
            out += " " + source_name(network, g.sources[s]);
        }
        out += "\n";
    }
    for (std::size_t k = 0; k < network.output_map.size(); ++k) {
        out += "out " + std::to_string(k) + " = " + source_name(network, network.output_map[k]) + "\n";
    }
    return out;
}

} // namespace qmarg
