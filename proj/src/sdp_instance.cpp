#include "momentsos/sdp_instance.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace momentsos {

std::string kind_name(FormulationKind k) {
  switch (k) {
    case FormulationKind::NOMINAL_PRIMAL: return "NOMINAL_PRIMAL";
    case FormulationKind::NOMINAL_DUAL: return "NOMINAL_DUAL";
    case FormulationKind::NOISE_DUAL: return "NOISE_DUAL";
    case FormulationKind::PRIORITY_TRACE: return "PRIORITY_TRACE";
    case FormulationKind::PRIORITY_PSD: return "PRIORITY_PSD";
    case FormulationKind::CANONICAL_ROBUST: return "CANONICAL_ROBUST";
  }
  return "UNKNOWN";
}

std::string side_name(FormSide s) { return s == FormSide::PRIMAL ? "PRIMAL" : "DUAL"; }

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void SdpInstance::canonicalize() {
  auto key = [](const SparseEntry& e) {
    return std::tuple<int, int, int, int>(e.mat, e.block, e.row, e.col);
  };
  std::sort(entries.begin(), entries.end(),
            [&](const SparseEntry& a, const SparseEntry& b) { return key(a) < key(b); });
  std::vector<SparseEntry> merged;
  for (auto& e : entries) {
    if (!merged.empty() && key(merged.back()) == key(e)) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const SparseEntry& e) { return e.value == 0; }),
               merged.end());
  entries = std::move(merged);
}

void SdpInstance::validate() const {
  if (block_sizes.empty()) throw std::invalid_argument("instance has no blocks");
  for (int s : block_sizes) {
    if (s == 0) throw std::invalid_argument("zero block size");
  }
  for (const auto& e : entries) {
    if (e.mat < 0 || e.mat > num_vars()) {
      throw std::invalid_argument("entry matrix index out of range");
    }
    if (e.block < 0 || e.block >= num_blocks()) {
      throw std::invalid_argument("entry block index out of range");
    }
    int side_len = std::abs(block_sizes[static_cast<std::size_t>(e.block)]);
    if (e.row < 0 || e.col < 0 || e.row >= side_len || e.col >= side_len) {
      throw std::invalid_argument("entry position out of block range");
    }
    if (e.row > e.col) throw std::invalid_argument("entry below the diagonal (need row <= col)");
    if (block_sizes[static_cast<std::size_t>(e.block)] < 0 && e.row != e.col) {
      throw std::invalid_argument("off-diagonal entry in a diagonal block");
    }
  }
}

bool SdpInstance::same_data(const SdpInstance& o) const {
  if (kind != o.kind || side != o.side || eps != o.eps || eta != o.eta) return false;
  if (block_sizes != o.block_sizes || c != o.c || offset != o.offset) return false;
  if (entries.size() != o.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& a = entries[i];
    const auto& b = o.entries[i];
    if (a.mat != b.mat || a.block != b.block || a.row != b.row || a.col != b.col ||
        a.value != b.value) {
      return false;
    }
  }
  return true;
}

std::string formulation_tag(const SdpInstance& sdp) {
  switch (sdp.kind) {
    case FormulationKind::NOMINAL_PRIMAL:
    case FormulationKind::NOMINAL_DUAL:
      return kind_name(sdp.kind);
    case FormulationKind::NOISE_DUAL:
      return kind_name(sdp.kind) + "(" + fmt17(to_double(sdp.eps)) + "," +
             fmt17(to_double(sdp.eta)) + ")";
    case FormulationKind::PRIORITY_TRACE:
      return kind_name(sdp.kind) + "(" + fmt17(to_double(sdp.eta)) + ")";
    case FormulationKind::PRIORITY_PSD:
    case FormulationKind::CANONICAL_ROBUST:
      return kind_name(sdp.kind) + "(" + fmt17(to_double(sdp.eps)) + ")";
  }
  return kind_name(sdp.kind);
}

ParsedTag parse_formulation_tag(const std::string& tag) {
  auto paren = tag.find('(');
  std::string name = tag.substr(0, paren);
  ParsedTag out{};
  bool found = false;
  for (FormulationKind k :
       {FormulationKind::NOMINAL_PRIMAL, FormulationKind::NOMINAL_DUAL,
        FormulationKind::NOISE_DUAL, FormulationKind::PRIORITY_TRACE,
        FormulationKind::PRIORITY_PSD, FormulationKind::CANONICAL_ROBUST}) {
    if (kind_name(k) == name) {
      out.kind = k;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("unknown formulation tag: " + tag);
  if (paren == std::string::npos) return out;
  auto close = tag.find(')', paren);
  if (close == std::string::npos) throw std::invalid_argument("unterminated tag: " + tag);
  std::string args = tag.substr(paren + 1, close - paren - 1);
  auto comma = args.find(',');
  auto parse_num = [&](const std::string& s) { return rat_of_double(std::stod(s)); };
  if (out.kind == FormulationKind::NOISE_DUAL) {
    if (comma == std::string::npos) throw std::invalid_argument("tag needs two parameters: " + tag);
    out.eps = parse_num(args.substr(0, comma));
    out.eta = parse_num(args.substr(comma + 1));
  } else if (out.kind == FormulationKind::PRIORITY_TRACE) {
    out.eta = parse_num(args);
  } else {
    out.eps = parse_num(args);
  }
  return out;
}

}  // namespace momentsos
