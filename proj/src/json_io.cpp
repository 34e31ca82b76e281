#include "wqsym/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace wqsym {

using nlohmann::json;

namespace {

json label_to_json(const TreeLabel& label) {
  json j;
  if (const auto* w = std::get_if<PackedWord>(&label)) {
    j["kind"] = "word";
    j["value"] = w->str();
  } else if (const auto* I = std::get_if<MaxPositions>(&label)) {
    j["kind"] = "positions";
    j["value"] = *I;
  } else {
    const auto& L = std::get<LastLetterLabel>(label);
    j["kind"] = "last";
    j["value"] = json{{"letter", L.value}, {"fresh", L.mark == Mark::New}};
  }
  return j;
}

TreeLabel label_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "word") return TreeLabel{PackedWord::parse(j.at("value"))};
  if (kind == "positions") return TreeLabel{j.at("value").get<MaxPositions>()};
  if (kind == "last") {
    const auto& v = j.at("value");
    return TreeLabel{LastLetterLabel{v.at("letter").get<int>(),
                                     v.at("fresh").get<bool>() ? Mark::New : Mark::Repeat}};
  }
  throw std::invalid_argument("unknown label kind: " + kind);
}

json tree_to_json(const BiplaneTree& t) {
  json j;
  j["label"] = label_to_json(t.label);
  j["left"] = json::array();
  for (const auto& c : t.left) j["left"].push_back(tree_to_json(c));
  j["right"] = json::array();
  for (const auto& c : t.right) j["right"].push_back(tree_to_json(c));
  return j;
}

BiplaneTree tree_from_json(const json& j) {
  BiplaneTree t;
  t.label = label_from_json(j.at("label"));
  for (const auto& c : j.at("left")) t.left.push_back(tree_from_json(c));
  for (const auto& c : j.at("right")) t.right.push_back(tree_from_json(c));
  return t;
}

std::string label_text(const TreeLabel& label) {
  if (const auto* w = std::get_if<PackedWord>(&label)) return w->str();
  if (const auto* I = std::get_if<MaxPositions>(&label)) {
    std::ostringstream os;
    for (size_t i = 0; i < I->size(); ++i) os << (i ? "," : "") << (*I)[i];
    return os.str();
  }
  return std::get<LastLetterLabel>(label).str();
}

}  // namespace

json forest_to_json(const BiplaneForest& f) {
  json j;
  j["scheme"] = scheme_name(f.scheme);
  j["trees"] = json::array();
  for (const auto& t : f.trees) j["trees"].push_back(tree_to_json(t));
  return j;
}

BiplaneForest forest_from_json(const json& j) {
  BiplaneForest f;
  f.scheme = scheme_from_name(j.at("scheme"));
  for (const auto& t : j.at("trees")) f.trees.push_back(tree_from_json(t));
  return f;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void dot_tree(const BiplaneTree& t, Scheme scheme, std::ostringstream& os, int& id,
              int parent, bool from_right) {
  const int me = id++;
  os << "  n" << me << " [label=\"" << dot_escape(label_text(t.label)) << "\"];\n";
  if (parent >= 0) {
    const char* left_color = "red";
    const char* right_color = "red";
    switch (scheme) {
      case Scheme::RedSkeleton:
      case Scheme::RedPacked:
        break;
      case Scheme::BlueSkeleton:
      case Scheme::BluePacked:
        left_color = right_color = "blue";
        break;
      case Scheme::RedBlue:
        right_color = "blue";
        break;
      case Scheme::BlueRed:
        left_color = "blue";
        break;
    }
    os << "  n" << parent << " -> n" << me << " [color=" << (from_right ? right_color : left_color)
       << "];\n";
  }
  for (const auto& c : t.left) dot_tree(c, scheme, os, id, me, false);
  for (const auto& c : t.right) dot_tree(c, scheme, os, id, me, true);
}

}  // namespace

std::string forest_to_dot(const BiplaneForest& f, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  int id = 0;
  for (const auto& t : f.trees) dot_tree(t, f.scheme, os, id, -1, false);
  os << "}\n";
  return os.str();
}

std::string matrix_to_csv(const ExactMatrix& m, const std::vector<PackedWord>& order,
                          bool strict_zeros) {
  std::ostringstream os;
  for (size_t i = 0; i < order.size(); ++i) os << ',' << order[i].str();
  os << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    os << (r < static_cast<int>(order.size()) ? order[r].str() : std::to_string(r));
    for (int c = 0; c < m.cols(); ++c) {
      os << ',';
      if (m.at(r, c) == 0 && !strict_zeros)
        os << '.';
      else
        os << m.at(r, c).str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace wqsym
