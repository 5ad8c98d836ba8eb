#include "minusdom/hitting_set.hpp"

#include <sstream>
#include <stdexcept>

#include "minusdom/graph.hpp"

namespace minusdom {

void HittingSetInstance::validate() const {
  if (universe_size < 0) throw std::invalid_argument("negative universe size");
  for (const auto& t : triples) {
    for (int e : t)
      if (e < 0 || e >= universe_size)
        throw std::invalid_argument("triple element out of range: " + std::to_string(e));
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      throw std::invalid_argument("triple with repeated element");
  }
}

HittingSetInstance parse_hitting_set(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  auto to_int = [](const std::string& tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError(ParseError::Kind::BadToken, "bad hitting-set token: " + tok);
    }
  };
  if (lines.empty() || lines[0].size() != 2)
    throw ParseError(ParseError::Kind::BadHeader, "expected header line \"|U| |C|\"");
  HittingSetInstance inst;
  inst.universe_size = to_int(lines[0][0]);
  int c = to_int(lines[0][1]);
  if (static_cast<int>(lines.size()) - 1 != c)
    throw ParseError(ParseError::Kind::BadHeader, "triple line count does not match header");
  for (int i = 1; i <= c; ++i) {
    if (lines[i].size() != 3)
      throw ParseError(ParseError::Kind::BadEdgeLine, "expected three elements per triple line");
    inst.triples.push_back({to_int(lines[i][0]), to_int(lines[i][1]), to_int(lines[i][2])});
  }
  inst.validate();
  return inst;
}

HittingSetInstance parse_hitting_set(const std::string& text) {
  std::istringstream in(text);
  return parse_hitting_set(in);
}

std::string write_hitting_set(const HittingSetInstance& inst) {
  std::ostringstream out;
  out << inst.universe_size << ' ' << inst.triples.size() << '\n';
  for (const auto& t : inst.triples) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

}  // namespace minusdom
