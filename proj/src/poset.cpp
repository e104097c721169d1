#include "kpotent/poset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace kpotent {

Poset Poset::chain(int n) {
  if (n < 1) throw Error("chain needs at least one element");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(std::move(labels), std::move(covers), "chain:" + std::to_string(n));
}

Poset Poset::star(int n, const std::vector<int>& arms) {
  if (n < 0) throw Error("star main chain length must be nonnegative");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  labels.push_back("x0");
  for (int i = 1; i <= n; ++i) {
    labels.push_back("x" + std::to_string(i));
    covers.emplace_back(i - 1, i);
  }
  for (std::size_t t = 0; t < arms.size(); ++t) {
    if (arms[t] < 1) throw EmptyArm("star arm " + std::to_string(t + 2) + " is empty");
    int base = static_cast<int>(labels.size());
    for (int j = 1; j <= arms[t]; ++j)
      labels.push_back("y" + std::to_string(t + 2) + "_" + std::to_string(j));
    covers.emplace_back(0, base);
    for (int j = 0; j + 1 < arms[t]; ++j) covers.emplace_back(base + j, base + j + 1);
  }
  std::string shape = "star:" + std::to_string(n);
  for (std::size_t t = 0; t < arms.size(); ++t)
    shape += (t ? "," : ":") + std::to_string(arms[t]);
  return from_covers(std::move(labels), std::move(covers), std::move(shape));
}

Poset Poset::rhombus(int n, int m) {
  if (n < 1 || m < 1) throw Error("rhombus needs positive chain lengths");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i <= n + 1; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 0; i <= n; ++i) covers.emplace_back(i, i + 1);
  int base = n + 2;
  for (int j = 1; j <= m; ++j) labels.push_back("y" + std::to_string(j));
  for (int j = 0; j + 1 < m; ++j) covers.emplace_back(base + j, base + j + 1);
  covers.emplace_back(0, base);                  // x0 < y1
  covers.emplace_back(base + m - 1, n + 1);      // ym < x_{n+1}
  return from_covers(std::move(labels), std::move(covers),
                     "rhombus:" + std::to_string(n) + ":" + std::to_string(m));
}

Poset Poset::y(int n, int m, int l) {
  if (n < 1 || m < 1 || l < 1) throw Error("y poset needs positive chain lengths");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= n; ++i) labels.push_back("r" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  int sbase = n, tbase = n + m;
  for (int j = 1; j <= m; ++j) labels.push_back("s" + std::to_string(j));
  for (int j = 0; j + 1 < m; ++j) covers.emplace_back(sbase + j, sbase + j + 1);
  for (int j = 1; j <= l; ++j) labels.push_back("t" + std::to_string(j));
  for (int j = 0; j + 1 < l; ++j) covers.emplace_back(tbase + j, tbase + j + 1);
  covers.emplace_back(n - 1, sbase);  // rn < s1
  covers.emplace_back(n - 1, tbase);  // rn < t1
  return from_covers(std::move(labels), std::move(covers),
                     "y:" + std::to_string(n) + ":" + std::to_string(m) + ":" + std::to_string(l));
}

Poset Poset::from_covers(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers,
                         std::string shape) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error("poset needs at least one element");
  {
    std::unordered_set<std::string> seen;
    for (const auto& label : labels)
      if (!seen.insert(label).second) throw DuplicateLabel("duplicate element label '" + label + "'");
  }
  for (auto [a, b] : covers)
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw Error("cover pair out of range");

  // Stable Kahn: always take the smallest declaration index available, so the
  // extension is deterministic and respects declaration order among ties.
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : covers) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) throw CycleError("cover relation contains a cycle");
    placed[pick] = 1;
    order.push_back(pick);
    for (int w : out[pick]) --indeg[w];
  }

  std::vector<int> pos(n);  // declaration index -> extension position
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  Poset poset;
  poset.n_ = n;
  poset.labels_.resize(n);
  for (int i = 0; i < n; ++i) poset.labels_[pos[i]] = std::move(labels[i]);
  for (auto [a, b] : covers) poset.covers_.emplace_back(pos[a], pos[b]);
  std::sort(poset.covers_.begin(), poset.covers_.end());
  poset.covers_.erase(std::unique(poset.covers_.begin(), poset.covers_.end()),
                      poset.covers_.end());
  poset.finish(std::move(shape));
  return poset;
}

void Poset::finish(std::string shape) {
  shape_ = std::move(shape);
  const int n = n_;
  leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq_[static_cast<std::size_t>(i) * n + i] = 1;
  for (auto [a, b] : covers_) leq_[static_cast<std::size_t>(a) * n + b] = 1;
  // Reflexive-transitive closure, in reverse extension order: every cover
  // target has a larger position, so its row is already complete.
  for (int i = n - 1; i >= 0; --i)
    for (auto [a, b] : covers_)
      if (a == i)
        for (int j = 0; j < n; ++j)
          if (leq_[static_cast<std::size_t>(b) * n + j]) leq_[static_cast<std::size_t>(i) * n + j] = 1;

  pair_idx_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (leq(i, j)) {
        pair_idx_[static_cast<std::size_t>(i) * n + j] = static_cast<int>(pairs_.size());
        pairs_.emplace_back(i, j);
      }

  conv_.resize(pairs_.size());
  for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
    auto [i, j] = pairs_[pi];
    for (int t = i; t <= j; ++t)
      if (leq(i, t) && leq(t, j)) conv_[pi].emplace_back(pair_index(i, t), pair_index(t, j));
  }
}

bool Poset::is_chain() const {
  return pair_count() == n_ * (n_ + 1) / 2;
}

Poset Poset::parse(const std::string& text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> cover_labels;
  enum class Section { None, Elements, Covers } section = Section::None;

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      if (token == "elements:") {
        section = Section::Elements;
      } else if (token == "covers:") {
        section = Section::Covers;
      } else if (section == Section::Elements) {
        labels.push_back(token);
      } else if (section == Section::Covers) {
        auto lt = token.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == token.size())
          throw ParseError("bad cover token '" + token + "', expected a<b");
        cover_labels.emplace_back(token.substr(0, lt), token.substr(lt + 1));
      } else {
        throw ParseError("token '" + token + "' before any elements:/covers: section");
      }
    }
  }
  if (labels.empty()) throw ParseError("poset text declares no elements");

  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second)
      throw DuplicateLabel("duplicate element label '" + labels[i] + "'");
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& [a, b] : cover_labels) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw ParseError("unknown element '" + a + "' in covers");
    if (ib == index.end()) throw ParseError("unknown element '" + b + "' in covers");
    if (ia->second == ib->second) throw CycleError("cover " + a + "<" + b + " is reflexive");
    covers.emplace_back(ia->second, ib->second);
  }
  return from_covers(std::move(labels), std::move(covers));
}

std::string Poset::render() const {
  std::string out = "elements:";
  for (const auto& label : labels_) out += " " + label;
  out += "\ncovers:";
  for (auto [a, b] : covers_) out += " " + labels_[a] + "<" + labels_[b];
  out += "\n";
  return out;
}

PosetShape parse_shape(const std::string& text) {
  PosetShape shape;
  if (!text.empty() && text[0] == '@') {
    shape.kind = PosetShape::Kind::File;
    shape.path = text.substr(1);
    if (shape.path.empty()) throw ParseError("empty poset file path");
    return shape;
  }
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(text);
  while (std::getline(stream, field, ':')) fields.push_back(field);
  if (fields.empty()) throw ParseError("empty poset shape");

  auto as_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad number '" + s + "' in poset shape '" + text + "'");
    }
  };

  const std::string& kind = fields[0];
  if (kind == "chain") {
    if (fields.size() != 2) throw ParseError("chain shape is chain:n");
    shape.kind = PosetShape::Kind::Chain;
    shape.n = as_int(fields[1]);
  } else if (kind == "star") {
    if (fields.size() < 2 || fields.size() > 3) throw ParseError("star shape is star:n:m2,...,mr");
    shape.kind = PosetShape::Kind::Star;
    shape.n = as_int(fields[1]);
    if (fields.size() == 3 && !fields[2].empty()) {
      std::istringstream arms(fields[2]);
      std::string arm;
      while (std::getline(arms, arm, ',')) shape.arms.push_back(as_int(arm));
    }
  } else if (kind == "rhombus") {
    if (fields.size() != 3) throw ParseError("rhombus shape is rhombus:n:m");
    shape.kind = PosetShape::Kind::Rhombus;
    shape.n = as_int(fields[1]);
    shape.m = as_int(fields[2]);
  } else if (kind == "y") {
    if (fields.size() != 4) throw ParseError("y shape is y:n:m:l");
    shape.kind = PosetShape::Kind::Y;
    shape.n = as_int(fields[1]);
    shape.m = as_int(fields[2]);
    shape.l = as_int(fields[3]);
  } else {
    throw ParseError("unknown poset shape '" + kind + "'");
  }
  return shape;
}

Poset build_shape(const PosetShape& shape) {
  switch (shape.kind) {
    case PosetShape::Kind::Chain:
      return Poset::chain(shape.n);
    case PosetShape::Kind::Star:
      return Poset::star(shape.n, shape.arms);
    case PosetShape::Kind::Rhombus:
      return Poset::rhombus(shape.n, shape.m);
    case PosetShape::Kind::Y:
      return Poset::y(shape.n, shape.m, shape.l);
    case PosetShape::Kind::File: {
      std::ifstream in(shape.path);
      if (!in) throw ParseError("cannot open poset file '" + shape.path + "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return Poset::parse(buffer.str());
    }
  }
  throw Error("unreachable poset shape kind");
}

}  // namespace kpotent
