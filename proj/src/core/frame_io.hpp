#pragma once

#include <string>
#include <utility>

#include "frame.hpp"

namespace frameineq {

/// Frame file schema:
///   {"dim": N, "label": str, "vectors": [[[re,im], ... N pairs], ... M rows]}
/// Real frames use im = 0. The loader re-validates the frame invariants.
Frame frame_from_json(const std::string& text);
std::string frame_to_json(const Frame& frame);
Frame load_frame(const std::string& path);
void save_frame(const Frame& frame, const std::string& path);

/// Two-frame bundle {"U": <frame>, "V": <frame>} as written by `gen` for
/// pair-producing kinds.
std::pair<Frame, Frame> pair_from_json(const std::string& text);
std::string pair_to_json(const Frame& U, const Frame& V);
std::pair<Frame, Frame> load_pair(const std::string& path);
void save_pair(const Frame& U, const Frame& V, const std::string& path);

/// Signal file schema: {"values": [[re,im], ...]}.
CVec signal_from_json(const std::string& text);
std::string signal_to_json(const CVec& values);
CVec load_signal(const std::string& path);
void save_signal(const CVec& values, const std::string& path);

}  // namespace frameineq
