#include "ilifc/serialize.hpp"

#include <sstream>
#include <vector>

namespace ilifc {

namespace {

std::string levels_to_text(const CodeParams& p, std::span<const Level> levels) {
    std::ostringstream out;
    out << p.n << ' ' << p.k << ' ' << p.q << ' ' << p.r << '\n';
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) out << ' ';
        out << static_cast<int>(levels[i]);
    }
    out << '\n';
    return out.str();
}

struct ParsedState {
    int n, k, q, r;
    std::vector<Level> levels;
};

ParsedState parse_state(std::string_view text) {
    std::istringstream in{std::string(text)};
    ParsedState ps{};
    if (!(in >> ps.n >> ps.k >> ps.q >> ps.r)) throw DeserializeError("malformed parameter line");
    long long count = 0, value = 0;
    while (in >> value) {
        if (value < 0 || value > 255) throw DeserializeError("cell level out of range");
        ps.levels.push_back(static_cast<Level>(value));
        ++count;
    }
    if (!in.eof()) throw DeserializeError("trailing garbage after cell levels");
    if (count != ps.n)
        throw DeserializeError("expected " + std::to_string(ps.n) + " levels, got " +
                               std::to_string(count));
    return ps;
}

}  // namespace

std::string state_to_text(const IilifcCodec& codec) {
    return levels_to_text(codec.params(), codec.all_cells());
}

IilifcCodec iilifc_state_from_text(std::string_view text) {
    ParsedState ps = parse_state(text);
    IilifcCodec codec{CodeParams(ps.n, ps.k, ps.q, ps.r)};
    codec.load_cells(ps.levels);
    return codec;
}

std::string state_to_text(const IlifcCodec& codec) {
    if (codec.params().r != 0) throw DeserializeError("plain-codec text requires r = 0");
    return levels_to_text(codec.params(), codec.cells());
}

IlifcCodec ilifc_state_from_text(std::string_view text) {
    ParsedState ps = parse_state(text);
    if (ps.r != 0) throw DeserializeError("plain-codec text requires r = 0");
    IlifcCodec codec{CodeParams(ps.n, ps.k, ps.q, 0)};
    codec.load_cells(ps.levels);
    return codec;
}

}  // namespace ilifc
