#pragma once

#include <string>
#include <string_view>

#include "ilifc/inversion.hpp"

namespace ilifc {

// Text form of a block state:
//   line 1: "n k q r"
//   line 2: n cell levels, space separated, inversion cells first.
// Loading rebuilds the bit/slice map and the stored data from the raw
// levels alone.
std::string state_to_text(const IilifcCodec& codec);
IilifcCodec iilifc_state_from_text(std::string_view text);

// Plain-codec convenience wrappers; the parameter line must carry r = 0.
std::string state_to_text(const IlifcCodec& codec);
IlifcCodec ilifc_state_from_text(std::string_view text);

}  // namespace ilifc
