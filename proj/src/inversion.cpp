#include "ilifc/inversion.hpp"

#include <algorithm>
#include <cassert>

namespace ilifc {

ModeDecision choose_mode(const BitVector& current, const BitVector& next, bool exhausted) {
    if (current == next) throw SameDataError("new data equals current data");
    const int k = current.size();
    const int d = hamming_distance(current, next);
    ModeDecision dec;
    // Invert only when strictly cheaper: 2d > k + 1. Ties keep the mode.
    if (!exhausted && 2 * d > k + 1) {
        dec.invert = true;
        dec.predicted_data_cost = k - d;
        dec.predicted_inversion_cost = 1;
    } else {
        dec.invert = false;
        dec.predicted_data_cost = d;
        dec.predicted_inversion_cost = 0;
    }
    return dec;
}

void increment_inversion(std::span<Level> inversion_cells, int q) {
    for (auto& cell : inversion_cells) {
        if (cell < q - 1) {
            ++cell;
            return;
        }
    }
    throw ExhaustedError("all inversion cells are at level q-1");
}

IilifcCodec::IilifcCodec(CodeParams params)
    : inversion_(static_cast<std::size_t>(params.r), 0), data_(params), current_(params.k) {}

BitVector IilifcCodec::decode() const {
    BitVector v = data_.decode();
    return storing_mode() == 1 ? v.complemented() : v;
}

EraseDiagnostics IilifcCodec::diagnostics() const {
    EraseDiagnostics d = data_.diagnostics();
    d.exhausted = exhausted();
    return d;
}

void IilifcCodec::bump_mode() {
    increment_inversion(inversion_, params().q);
    ++inv_weight_;
}

WriteOutcome IilifcCodec::attempt(const BitVector& next, bool invert) {
    if (invert && exhausted()) return WriteOutcome::make_erase_required(diagnostics());
    const int new_mode = storing_mode() ^ (invert ? 1 : 0);
    const BitVector target = new_mode == 1 ? next.complemented() : next;
    if (target == data_.decode()) {
        // The slices already hold the new stored sequence; only the mode
        // moves. Keeping the mode with an unchanged target would mean
        // next == current, which the caller has excluded.
        assert(invert);
        bump_mode();
        current_ = next;
        return WriteOutcome::make_applied(0, 1);
    }
    WriteOutcome out = data_.write(target);
    if (out.applied()) {
        if (invert) {
            bump_mode();
            out.inversion_cell_changes = 1;
        }
        current_ = next;
    } else {
        out.diagnostics.exhausted = exhausted();
    }
    return out;
}

WriteOutcome IilifcCodec::write(const BitVector& next, WriteStrategy strategy) {
    if (next.size() != params().k) throw InvalidParamsError("data width mismatch");
    if (next == current_) throw SameDataError("new data equals current data");

    const ModeDecision dec = choose_mode(current_, next, exhausted());
    WriteOutcome first = attempt(next, dec.invert);
    if (first.applied() || strategy == WriteStrategy::UsualOnly) return first;

    // Unusual fallback: the opposite mode of the cost-minimizing choice.
    // Inverting is off the table once the cells are exhausted, and a plan
    // that would touch all k data cells is never taken: flipping the mode
    // alone reaches the same data at cost 1.
    const int d = hamming_distance(current_, next);
    const bool alt_invert = !dec.invert;
    const int alt_data_cost = alt_invert ? params().k - d : d;
    if ((alt_invert && exhausted()) || alt_data_cost >= params().k) return first;

    WriteOutcome second = attempt(next, alt_invert);
    if (second.applied()) second.unusual = true;
    return second;
}

void IilifcCodec::erase() {
    data_.erase();
    std::fill(inversion_.begin(), inversion_.end(), static_cast<Level>(0));
    inv_weight_ = 0;
    current_ = BitVector(params().k);
}

std::vector<Level> IilifcCodec::all_cells() const {
    std::vector<Level> out(inversion_.begin(), inversion_.end());
    auto data = data_.cells();
    out.insert(out.end(), data.begin(), data.end());
    return out;
}

void IilifcCodec::load_cells(std::span<const Level> levels) {
    const CodeParams& p = params();
    if (static_cast<int>(levels.size()) != p.n)
        throw DeserializeError("expected " + std::to_string(p.n) + " cell levels, got " +
                               std::to_string(levels.size()));
    for (int i = 0; i < p.r; ++i)
        if (levels[static_cast<std::size_t>(i)] > p.q - 1)
            throw DeserializeError("inversion cell level exceeds q-1");
    data_.load_cells(levels.subspan(static_cast<std::size_t>(p.r)));
    inv_weight_ = 0;
    for (int i = 0; i < p.r; ++i) {
        inversion_[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i)];
        inv_weight_ += levels[static_cast<std::size_t>(i)];
    }
    current_ = decode();
}

}  // namespace ilifc
