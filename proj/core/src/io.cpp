#include "mosaics/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mosaics {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<long long> parse_ints(const std::string& line) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long x;
  while (ss >> x) out.push_back(x);
  if (!ss.eof()) {
    ss.clear();
    std::string rest;
    if (ss >> rest)
      throw ParseError("unexpected token '" + rest + "' in line: " + line);
  }
  return out;
}

DesignParams params_from_triple(int t, int k, long long lambda, int v) {
  // Fill b and r where the divisibility works out; the caller's checks
  // report any inconsistencies, so no exception here.
  DesignParams p;
  p.t = t;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  if (v > 0 && k >= 1 && k <= v && t >= 0 && t <= k && lambda > 0) {
    try {
      p = derive_params(t, v, k, lambda);
    } catch (const NonIntegralParameters&) {
    }
  }
  return p;
}

}  // namespace

std::string mosaic_to_text(const Mosaic& m) {
  std::ostringstream out;
  out << m.v() << " " << m.b() << " " << m.colours() << "\n";
  for (int p = 0; p < m.v(); ++p) {
    for (long long j = 0; j < m.b(); ++j) {
      if (j) out << " ";
      out << m.cell(p, j);
    }
    out << "\n";
  }
  return out.str();
}

RawMatrix parse_mosaic_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  // Header: first non-empty line.
  std::vector<long long> header;
  while (std::getline(in, line)) {
    header = parse_ints(line);
    if (!header.empty()) break;
  }
  if (header.size() != 3)
    throw ParseError("mosaic text must start with a 'v b c' header");
  RawMatrix raw;
  raw.v = static_cast<int>(header[0]);
  raw.b = header[1];
  raw.c = static_cast<int>(header[2]);
  if (raw.v < 1 || raw.b < 1 || raw.c < 1)
    throw ParseError("mosaic header values must be positive");
  while (std::getline(in, line)) {
    std::vector<long long> row = parse_ints(line);
    if (row.empty()) continue;
    if (static_cast<long long>(row.size()) != raw.b)
      throw ParseError("matrix row has " + std::to_string(row.size()) +
                       " entries, expected b = " + std::to_string(raw.b));
    std::vector<int> r(row.begin(), row.end());
    for (int cval : r)
      if (cval < 0 || cval > raw.c)
        throw ParseError("cell value " + std::to_string(cval) +
                         " outside 0..c");
    raw.cells.push_back(std::move(r));
  }
  if (static_cast<int>(raw.cells.size()) != raw.v)
    throw ParseError("matrix has " + std::to_string(raw.cells.size()) +
                     " rows, expected v = " + std::to_string(raw.v));
  return raw;
}

Mosaic mosaic_from_text(const std::string& text, const MosaicScheme& scheme) {
  RawMatrix raw = parse_mosaic_text(text);
  if (raw.v != scheme.v() || raw.b != scheme.b() ||
      raw.c != scheme.colours())
    throw ParseError("matrix header (" + std::to_string(raw.v) + " " +
                     std::to_string(raw.b) + " " + std::to_string(raw.c) +
                     ") does not match the scheme");
  return Mosaic(scheme, std::move(raw.cells));
}

std::vector<std::vector<int>> label_matrix(const Mosaic& m) {
  std::vector<std::vector<int>> out(static_cast<size_t>(m.v()),
                                    std::vector<int>(static_cast<size_t>(m.b())));
  for (int p = 0; p < m.v(); ++p)
    for (long long j = 0; j < m.b(); ++j) {
      int cval = m.cell(p, j);
      out[static_cast<size_t>(p)][static_cast<size_t>(j)] =
          cval == 0 ? -1 : m.scheme().label(cval);
    }
  return out;
}

std::vector<DesignParams> parse_colour_list(const std::string& text) {
  std::vector<DesignParams> out;
  std::istringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    std::istringstream ps(part);
    std::string tok;
    std::vector<long long> nums;
    while (std::getline(ps, tok, ',')) {
      try {
        size_t used = 0;
        long long val = std::stoll(tok, &used);
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(val);
      } catch (const std::exception&) {
        throw ParseError("bad number '" + tok + "' in colour list");
      }
    }
    if (nums.size() != 3)
      throw ParseError("each colour needs exactly t,k,lambda");
    DesignParams p;
    p.t = static_cast<int>(nums[0]);
    p.k = static_cast<int>(nums[1]);
    p.lambda = nums[2];
    out.push_back(p);
  }
  if (out.empty()) throw ParseError("empty colour list");
  return out;
}

std::string colour_list_to_string(const MosaicScheme& scheme) {
  std::string s;
  for (int i = 1; i <= scheme.colours(); ++i) {
    const DesignParams& p = scheme.colour(i);
    if (i > 1) s += ";";
    s += std::to_string(p.t) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda);
  }
  return s;
}

std::string mosaic_to_json_string(const Mosaic& m, int indent) {
  ordered_json j;
  j["v"] = m.v();
  j["b"] = m.b();
  j["c"] = m.colours();
  ordered_json colours = ordered_json::array();
  for (int i = 1; i <= m.colours(); ++i) {
    DesignParams p = m.scheme().resolved_colour(i);
    ordered_json cj;
    cj["t"] = p.t;
    cj["k"] = p.k;
    cj["lambda"] = p.lambda;
    if (p.b)
      cj["b"] = *p.b;
    else
      cj["b"] = nullptr;
    if (p.r)
      cj["r"] = *p.r;
    else
      cj["r"] = nullptr;
    colours.push_back(std::move(cj));
  }
  j["colours"] = std::move(colours);
  j["labels"] = m.scheme().labels();
  j["matrix"] = m.cells();
  return j.dump(indent) + "\n";
}

Mosaic mosaic_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad mosaic JSON: ") + e.what());
  }
  try {
    int v = j.at("v").get<int>();
    long long b = j.at("b").get<long long>();
    std::vector<DesignParams> colours;
    for (const auto& cj : j.at("colours")) {
      DesignParams p;
      p.t = cj.at("t").get<int>();
      p.v = v;
      p.k = cj.at("k").get<int>();
      p.lambda = cj.at("lambda").get<long long>();
      if (cj.contains("b") && !cj.at("b").is_null())
        p.b = cj.at("b").get<long long>();
      if (cj.contains("r") && !cj.at("r").is_null())
        p.r = cj.at("r").get<long long>();
      colours.push_back(p);
    }
    std::vector<int> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
    std::vector<std::vector<int>> cells =
        j.at("matrix").get<std::vector<std::vector<int>>>();
    MosaicScheme scheme(v, b, std::move(colours), std::move(labels));
    return Mosaic(std::move(scheme), std::move(cells));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad mosaic JSON: ") + e.what());
  }
}

std::string design_to_json_string(const Design& d, int indent) {
  ordered_json j;
  j["v"] = d.v();
  if (d.declared()) {
    j["params"] = ordered_json::array(
        {d.declared()->t, d.declared()->k, d.declared()->lambda});
  } else {
    j["params"] = nullptr;
  }
  j["blocks"] = d.point_lists();
  return j.dump(indent) + "\n";
}

Design design_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad design JSON: ") + e.what());
  }
  try {
    int v = j.at("v").get<int>();
    std::optional<DesignParams> declared;
    if (j.contains("params") && !j.at("params").is_null()) {
      auto trip = j.at("params").get<std::vector<long long>>();
      if (trip.size() != 3)
        throw ParseError("design params must be [t, k, lambda]");
      declared = params_from_triple(static_cast<int>(trip[0]),
                                    static_cast<int>(trip[1]), trip[2], v);
    }
    auto lists = j.at("blocks").get<std::vector<std::vector<int>>>();
    return Design::from_point_lists(v, lists, declared);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad design JSON: ") + e.what());
  }
}

std::string qdesign_to_text(const QDesign& d) {
  std::ostringstream out;
  const std::optional<DesignParams>& p = d.declared();
  int t = p ? p->t : 0;
  int k = p ? p->k : (d.blocks().empty() ? 0 : d.blocks().front().dim());
  long long lambda = p ? p->lambda : 0;
  out << d.v() << " 2 " << t << " " << k << " " << lambda << " " << d.b()
      << "\n";
  out << std::hex;
  for (const Subspace& s : d.blocks()) {
    bool first = true;
    for (uint64_t r : s.basis()) {
      if (!first) out << " ";
      first = false;
      out << r;
    }
    if (s.basis().empty()) out << 0;
    out << "\n";
  }
  return out.str();
}

QDesign qdesign_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<long long> header;
  while (std::getline(in, line)) {
    header = parse_ints(line);
    if (!header.empty()) break;
  }
  if (header.size() != 6)
    throw ParseError("q-design text must start with 'v q t k lambda b'");
  int v = static_cast<int>(header[0]);
  if (header[1] != 2) throw ParseError("only q = 2 designs are supported");
  int t = static_cast<int>(header[2]);
  int k = static_cast<int>(header[3]);
  long long lambda = header[4];
  long long b = header[5];
  if (v < 1 || v > 64) throw ParseError("ambient dimension out of range");

  std::vector<Subspace> blocks;
  blocks.reserve(static_cast<size_t>(b));
  uint64_t mask = v == 64 ? ~uint64_t{0} : (uint64_t{1} << v) - 1;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    ss >> std::hex;
    std::vector<uint64_t> rows;
    uint64_t x;
    while (ss >> x) {
      if (x & ~mask)
        throw ParseError("basis row exceeds the ambient dimension");
      rows.push_back(x);
    }
    if (!ss.eof()) {
      ss.clear();
      std::string rest;
      if (ss >> rest)
        throw ParseError("bad basis row '" + rest + "' in line: " + line);
    }
    if (rows.empty()) continue;
    blocks.push_back(Subspace::span(v, rows));
  }
  if (static_cast<long long>(blocks.size()) != b)
    throw ParseError("q-design has " + std::to_string(blocks.size()) +
                     " blocks, header says b = " + std::to_string(b));
  DesignParams p;
  p.t = t;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.b = b;
  return QDesign(v, std::move(blocks), p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace mosaics
