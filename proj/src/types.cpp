#include "graphfair/types.hpp"

#include <bit>
#include <charconv>

namespace graphfair {

FairnessRatio::FairnessRatio(Value numerator, Value denominator) : num(numerator), den(denominator) {
    if (num <= 0 || den <= 0 || num > den) {
        throw InvalidInput("fairness ratio must satisfy 0 < P/Q <= 1, got " + std::to_string(num) + "/" +
                           std::to_string(den));
    }
}

FairnessRatio FairnessRatio::parse(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        Value out = 0;
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, out);
        if (ec != std::errc() || ptr != end || part.empty()) {
            throw InvalidInput("ratio must be an integer fraction P/Q, got '" + text + "'");
        }
        return out;
    };
    if (slash == std::string::npos) {
        return FairnessRatio(parse_int(text), 1);
    }
    std::string_view view(text);
    return FairnessRatio(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

std::string FairnessRatio::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

VertexMask to_mask(const Bundle& bundle) {
    VertexMask mask = 0;
    for (Vertex v : bundle) {
        if (v < 0 || v >= 64) {
            throw SizeGuardExceeded("vertex " + std::to_string(v) + " does not fit a 64-bit mask");
        }
        mask |= bit(v);
    }
    return mask;
}

Bundle from_mask(VertexMask mask) {
    Bundle out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace graphfair
