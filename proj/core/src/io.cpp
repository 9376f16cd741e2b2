#include "fusion/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) { throw parse_error(line, msg); }

int to_int(const std::string& tok, int line, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) fail(line, std::string("bad ") + what + ": " + tok);
    return v;
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    fail(line, std::string("bad ") + what + ": " + tok);
  }
}

}  // namespace

FusionRing parse_ring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;

  bool saw_header = false, saw_rank = false, saw_dual = false;
  int rank = 0;
  std::vector<int> dual;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> meta;
  struct Entry {
    int i, j, k, v, line;
  };
  std::vector<Entry> entries;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls{raw};
    std::string word;
    if (!(ls >> word)) continue;

    if (word == "fusionring") {
      std::string version;
      if (!(ls >> version) || version != "1") fail(lineno, "unsupported format version");
      saw_header = true;
    } else if (word == "rank") {
      std::string tok;
      if (!(ls >> tok)) fail(lineno, "rank needs a value");
      rank = to_int(tok, lineno, "rank");
      if (rank < 1) fail(lineno, "rank must be positive");
      saw_rank = true;
    } else if (word == "labels") {
      if (!saw_rank) fail(lineno, "labels before rank");
      labels.clear();
      std::string tok;
      while (ls >> tok) labels.push_back(tok);
      if (static_cast<int>(labels.size()) != rank) fail(lineno, "labels arity mismatch");
    } else if (word == "dual") {
      if (!saw_rank) fail(lineno, "dual before rank");
      dual.clear();
      std::string tok;
      while (ls >> tok) {
        int v = to_int(tok, lineno, "dual index");
        if (v < 0 || v >= rank) fail(lineno, "dual index out of range");
        dual.push_back(v);
      }
      if (static_cast<int>(dual.size()) != rank) fail(lineno, "dual arity mismatch");
      saw_dual = true;
    } else if (word == "meta") {
      std::string key;
      if (!(ls >> key)) fail(lineno, "meta needs a key");
      std::string rest;
      std::getline(ls, rest);
      if (auto p = rest.find_first_not_of(" \t"); p != std::string::npos)
        rest.erase(0, p);
      else
        rest.clear();
      meta.emplace_back(key, rest);
    } else if (word == "N") {
      if (!saw_rank) fail(lineno, "structure constant before rank");
      int vals[4];
      std::string tok;
      for (int& v : vals) {
        if (!(ls >> tok)) fail(lineno, "N needs i j k v");
        v = to_int(tok, lineno, "structure constant");
      }
      if (vals[0] < 0 || vals[0] >= rank || vals[1] < 0 || vals[1] >= rank || vals[2] < 0 ||
          vals[2] >= rank)
        fail(lineno, "structure constant index out of range");
      if (vals[3] < 0) fail(lineno, "structure constants must be nonnegative");
      if (vals[3] > 0) entries.push_back({vals[0], vals[1], vals[2], vals[3], lineno});
    } else {
      fail(lineno, "unknown directive: " + word);
    }
  }

  if (!saw_header) fail(lineno, "missing 'fusionring 1' header");
  if (!saw_rank) fail(lineno, "missing rank");
  if (!saw_dual) fail(lineno, "missing dual");

  std::vector<int> tensor(static_cast<std::size_t>(rank) * rank * rank, 0);
  for (const auto& e : entries) {
    int& slot = tensor[(static_cast<std::size_t>(e.i) * rank + e.j) * rank + e.k];
    if (slot != 0)
      fail(e.line, "duplicate entry N " + std::to_string(e.i) + " " + std::to_string(e.j) + " " +
                       std::to_string(e.k));
    slot = e.v;
  }

  // The unit is the u with N(u, j, k) = delta_jk; re-index it to 0.
  int unit = -1;
  for (int u = 0; u < rank && unit < 0; ++u) {
    bool ok = true;
    for (int j = 0; j < rank && ok; ++j)
      for (int k = 0; k < rank && ok; ++k)
        ok = tensor[(static_cast<std::size_t>(u) * rank + j) * rank + k] == (j == k ? 1 : 0);
    if (ok) unit = u;
  }
  if (unit < 0) throw structural_error("unit", {}, "no basis element acts as the unit");
  if (unit != 0) {
    std::vector<int> perm(rank);  // old index -> new index
    for (int i = 0; i < rank; ++i) perm[i] = i;
    std::swap(perm[0], perm[unit]);
    std::vector<int> nd(rank), nt(tensor.size());
    std::vector<std::string> nl(labels.size());
    for (int i = 0; i < rank; ++i) nd[perm[i]] = perm[dual[i]];
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        for (int k = 0; k < rank; ++k)
          nt[(static_cast<std::size_t>(perm[i]) * rank + perm[j]) * rank + perm[k]] =
              tensor[(static_cast<std::size_t>(i) * rank + j) * rank + k];
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) nl[perm[i]] = labels[i];
    dual = std::move(nd);
    tensor = std::move(nt);
    labels = std::move(nl);
  }

  FusionRing r = make_ring(rank, std::move(dual), std::move(tensor), std::move(labels));
  r.meta = std::move(meta);
  return checked(std::move(r));
}

std::string serialize_ring(const FusionRing& r) {
  std::ostringstream out;
  out << "fusionring 1\n";
  out << "rank " << r.rank << "\n";
  if (!r.labels.empty()) {
    out << "labels";
    for (const auto& l : r.labels) out << " " << l;
    out << "\n";
  }
  out << "dual";
  for (int d : r.dual) out << " " << d;
  out << "\n";
  for (const auto& [k, v] : r.meta) out << "meta " << k << (v.empty() ? "" : " " + v) << "\n";
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < r.rank; ++j)
      for (int k = 0; k < r.rank; ++k)
        if (int v = r.n(i, j, k)) out << "N " << i << " " << j << " " << k << " " << v << "\n";
  return out.str();
}

FusionRing load_ring(const std::string& path) {
  std::ifstream in{path, std::ios::binary};
  if (!in) throw parse_error(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring(buf.str());
}

void save_ring(const FusionRing& r, const std::string& path) {
  std::ofstream out{path, std::ios::binary};
  if (!out) throw parse_error(0, "cannot open " + path + " for writing");
  out << serialize_ring(r);
  if (!out) throw parse_error(0, "write failed: " + path);
}

}  // namespace fusion
