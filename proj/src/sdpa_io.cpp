#include "momentsos/sdpa_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace momentsos {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string export_sdpa_text(const SdpInstance& sdp) {
  sdp.validate();
  std::ostringstream out;
  out << "*FORMULATION " << formulation_tag(sdp) << "\n";
  out << "*SIDE " << side_name(sdp.side) << "\n";
  out << "*OFFSET " << fmt17(to_double(sdp.offset)) << "\n";
  out << sdp.num_vars() << "\n";
  out << sdp.num_blocks() << "\n";
  for (int b = 0; b < sdp.num_blocks(); ++b) {
    out << (b ? " " : "") << sdp.block_sizes[static_cast<std::size_t>(b)];
  }
  out << "\n";
  for (int i = 0; i < sdp.num_vars(); ++i) {
    out << (i ? " " : "") << fmt17(to_double(sdp.c[static_cast<std::size_t>(i)]));
  }
  out << "\n";
  for (const auto& e : sdp.entries) {
    out << e.mat << " " << e.block + 1 << " " << e.row + 1 << " " << e.col + 1 << " "
        << fmt17(to_double(e.value)) << "\n";
  }
  return out.str();
}

void export_sdpa(const SdpInstance& sdp, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << export_sdpa_text(sdp);
}

SdpInstance import_sdpa_text(const std::string& text) {
  SdpInstance sdp;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_m = false, have_nblocks = false, have_sizes = false, have_c = false;
  int m = 0, nblocks = 0;

  auto parse_double = [&](const std::string& tok) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(tok, &pos);
    } catch (...) {
      fail(line_no, "bad numeric value '" + tok + "'");
    }
    if (pos != tok.size()) fail(line_no, "bad numeric value '" + tok + "'");
    return rat_of_double(v);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '*' || line[0] == '"') {
      std::istringstream ls(line.substr(1));
      std::string key, value;
      ls >> key;
      std::getline(ls, value);
      if (!value.empty() && value[0] == ' ') value.erase(0, value.find_first_not_of(' '));
      if (key == "FORMULATION") {
        ParsedTag tag = parse_formulation_tag(value);
        sdp.kind = tag.kind;
        sdp.eps = tag.eps;
        sdp.eta = tag.eta;
      } else if (key == "SIDE") {
        if (value == "PRIMAL") {
          sdp.side = FormSide::PRIMAL;
        } else if (value == "DUAL") {
          sdp.side = FormSide::DUAL;
        } else {
          fail(line_no, "unknown side '" + value + "'");
        }
      } else if (key == "OFFSET") {
        sdp.offset = parse_double(value);
      }
      continue;  // other comments ignored
    }
    std::istringstream ls(line);
    if (!have_m) {
      if (!(ls >> m) || m < 0) fail(line_no, "expected the variable count");
      have_m = true;
    } else if (!have_nblocks) {
      if (!(ls >> nblocks) || nblocks <= 0) fail(line_no, "expected the block count");
      have_nblocks = true;
    } else if (!have_sizes) {
      int s;
      while (ls >> s) sdp.block_sizes.push_back(s);
      if (static_cast<int>(sdp.block_sizes.size()) != nblocks) {
        fail(line_no, "expected " + std::to_string(nblocks) + " block sizes");
      }
      have_sizes = true;
    } else if (!have_c) {
      std::string tok;
      while (ls >> tok) sdp.c.push_back(parse_double(tok));
      if (static_cast<int>(sdp.c.size()) != m) {
        fail(line_no, "expected " + std::to_string(m) + " objective values");
      }
      have_c = true;
    } else {
      SparseEntry e;
      std::string tok;
      if (!(ls >> e.mat >> e.block >> e.row >> e.col >> tok)) {
        fail(line_no, "expected 'matno blockno i j value'");
      }
      std::string extra;
      if (ls >> extra) fail(line_no, "trailing token '" + extra + "'");
      e.value = parse_double(tok);
      e.block -= 1;
      e.row -= 1;
      e.col -= 1;
      if (e.row > e.col) fail(line_no, "entry below the diagonal (need i <= j)");
      sdp.entries.push_back(e);
    }
  }
  if (!have_c) throw std::invalid_argument("truncated file: header incomplete");
  // canonicalize() would silently merge duplicated positions, but in a file
  // they are almost certainly a writer bug: reject instead.
  std::vector<std::tuple<int, int, int, int>> keys;
  keys.reserve(sdp.entries.size());
  for (const auto& e : sdp.entries) keys.emplace_back(e.mat, e.block, e.row, e.col);
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("duplicate entry position in file");
  }
  sdp.canonicalize();
  sdp.validate();
  return sdp;
}

SdpInstance import_sdpa(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return import_sdpa_text(ss.str());
}

}  // namespace momentsos
