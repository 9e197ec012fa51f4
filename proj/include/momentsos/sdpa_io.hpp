#pragma once

#include <string>

#include "momentsos/sdp_instance.hpp"

namespace momentsos {

/// Sparse exchange text: comment header (*FORMULATION / *SIDE / *OFFSET),
/// then variable count, block count, signed block sizes, objective row, and
/// one `matno blockno i j value` quintuple per entry (1-based, i <= j,
/// matno 0 = constant matrix). Values print with 17 significant digits, so
/// identical instances serialize byte-identically.
std::string export_sdpa_text(const SdpInstance& sdp);
void export_sdpa(const SdpInstance& sdp, const std::string& path);

/// Inverse of export (numeric values come back as the exact rational form of
/// the printed double). Throws std::invalid_argument naming the bad line.
SdpInstance import_sdpa_text(const std::string& text);
SdpInstance import_sdpa(const std::string& path);

}  // namespace momentsos
