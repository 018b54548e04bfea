#include "hallcheck/report.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace hallcheck {

ReportNode ReportNode::scalar(std::string value) {
  ReportNode node;
  node._kind = Kind::scalar;
  node._value = std::move(value);
  assert(node._value.find('\n') == std::string::npos);
  return node;
}

ReportNode ReportNode::scalar(std::uint64_t value) {
  return scalar(std::to_string(value));
}

ReportNode ReportNode::scalar(std::int64_t value) {
  return scalar(std::to_string(value));
}

ReportNode ReportNode::scalar(bool value) {
  return scalar(std::string(value ? "true" : "false"));
}

ReportNode ReportNode::list() {
  ReportNode node;
  node._kind = Kind::list;
  return node;
}

ReportNode &ReportNode::set(const std::string &key, ReportNode child) {
  assert(_kind == Kind::map);
  _entries.emplace_back(key, std::move(child));
  return *this;
}

ReportNode &ReportNode::set(const std::string &key, const std::string &value) {
  return set(key, scalar(value));
}

ReportNode &ReportNode::set(const std::string &key, const char *value) {
  return set(key, scalar(std::string(value)));
}

ReportNode &ReportNode::set(const std::string &key, std::uint64_t value) {
  return set(key, scalar(value));
}

ReportNode &ReportNode::set(const std::string &key, bool value) {
  return set(key, scalar(value));
}

const ReportNode *ReportNode::child(const std::string &key) const {
  for (const auto &[k, v] : _entries)
    if (k == key)
      return &v;
  return nullptr;
}

ReportNode &ReportNode::add(ReportNode item) {
  assert(_kind == Kind::list);
  _items.push_back(std::move(item));
  return *this;
}

bool ReportNode::operator==(const ReportNode &rhs) const {
  if (_kind != rhs._kind)
    return false;
  switch (_kind) {
  case Kind::scalar:
    return _value == rhs._value;
  case Kind::map:
    return _entries == rhs._entries;
  case Kind::list:
    return _items == rhs._items;
  }
  return false;
}

namespace {

void write_node(std::ostringstream &out, const ReportNode &node, int indent);

void write_indent(std::ostringstream &out, int indent) {
  for (int i = 0; i < indent; ++i)
    out << "  ";
}

void write_map_entries(std::ostringstream &out, const ReportNode &node,
                       int indent) {
  for (const auto &[key, child] : node.entries()) {
    write_indent(out, indent);
    if (child.is_scalar()) {
      out << key << ": " << child.value() << "\n";
    } else if (child.kind() == ReportNode::Kind::map) {
      if (child.entries().empty()) {
        out << key << ": {}\n";
      } else {
        out << key << ":\n";
        write_map_entries(out, child, indent + 1);
      }
    } else {
      if (child.items().empty()) {
        out << key << ": []\n";
      } else {
        out << key << ":\n";
        write_node(out, child, indent + 1);
      }
    }
  }
}

void write_node(std::ostringstream &out, const ReportNode &node, int indent) {
  switch (node.kind()) {
  case ReportNode::Kind::scalar:
    write_indent(out, indent);
    out << node.value() << "\n";
    break;
  case ReportNode::Kind::map:
    write_map_entries(out, node, indent);
    break;
  case ReportNode::Kind::list:
    for (const ReportNode &item : node.items()) {
      write_indent(out, indent);
      if (item.is_scalar()) {
        out << "- " << item.value() << "\n";
      } else if (item.kind() == ReportNode::Kind::map) {
        if (item.entries().empty()) {
          out << "- {}\n";
        } else {
          // first entry shares the dash line and must be a scalar; the rest
          // align one level deeper
          const auto &[key, child] = item.entries().front();
          if (!child.is_scalar())
            throw std::logic_error(
                "list items must lead with a scalar entry");
          out << "- " << key << ": " << child.value() << "\n";
          ReportNode rest;
          for (std::size_t i = 1; i < item.entries().size(); ++i)
            rest.set(item.entries()[i].first, item.entries()[i].second);
          write_map_entries(out, rest, indent + 1);
        }
      } else {
        throw std::logic_error("nested bare lists are not supported");
      }
    }
    break;
  }
}

} // namespace

std::string ReportNode::serialize() const {
  std::ostringstream out;
  write_node(out, *this, 0);
  return out.str();
}

namespace {

struct Line {
  int indent = 0;   // in two-space units; a "- " counts as one unit
  bool dash = false;
  std::string key;   // empty for bare scalars in lists
  std::string value; // empty when the line opens a nested container
  bool has_value = false;
};

std::vector<Line> lex(const std::string &text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (raw.empty())
      continue;
    Line line;
    std::size_t pos = 0;
    while (pos + 1 < raw.size() && raw[pos] == ' ' && raw[pos + 1] == ' ') {
      pos += 2;
      ++line.indent;
    }
    if (pos < raw.size() && raw[pos] == '-' && pos + 1 < raw.size() &&
        raw[pos + 1] == ' ') {
      line.dash = true;
      pos += 2;
    }
    std::string rest = raw.substr(pos);
    auto colon = rest.find(": ");
    if (colon != std::string::npos) {
      line.key = rest.substr(0, colon);
      line.value = rest.substr(colon + 2);
      line.has_value = true;
    } else if (!rest.empty() && rest.back() == ':') {
      line.key = rest.substr(0, rest.size() - 1);
      line.has_value = false;
    } else {
      line.value = rest;
      line.has_value = true;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

ReportNode parse_scalar_text(const std::string &value) {
  return ReportNode::scalar(value);
}

ReportNode parse_value(const std::string &value) {
  if (value == "{}")
    return ReportNode();
  if (value == "[]")
    return ReportNode::list();
  return parse_scalar_text(value);
}

ReportNode parse_block(const std::vector<Line> &lines, std::size_t &pos,
                       int indent);

// parses map entries at the given indent until the indentation drops
ReportNode parse_map(const std::vector<Line> &lines, std::size_t &pos,
                     int indent, bool stop_at_dash) {
  ReportNode node;
  while (pos < lines.size()) {
    const Line &line = lines[pos];
    if (line.indent < indent)
      break;
    if (line.indent == indent && line.dash && stop_at_dash)
      break;
    if (line.indent != indent || line.dash)
      throw std::invalid_argument("malformed report line");
    if (line.key.empty())
      throw std::invalid_argument("expected key in report map");
    if (line.has_value) {
      node.set(line.key, parse_value(line.value));
      ++pos;
    } else {
      ++pos;
      node.set(line.key, parse_block(lines, pos, indent + 1));
    }
  }
  return node;
}

// parses a nested block that is either a list (dash lines) or a map
ReportNode parse_block(const std::vector<Line> &lines, std::size_t &pos,
                       int indent) {
  if (pos >= lines.size() || lines[pos].indent < indent)
    return ReportNode(); // empty map
  if (!lines[pos].dash)
    return parse_map(lines, pos, indent, false);

  ReportNode list = ReportNode::list();
  while (pos < lines.size() && lines[pos].indent == indent && lines[pos].dash) {
    const Line &line = lines[pos];
    if (line.key.empty()) {
      list.add(parse_value(line.value));
      ++pos;
      continue;
    }
    // a map item: first key on the dash line, the rest one level deeper
    ReportNode item;
    if (line.has_value) {
      item.set(line.key, parse_value(line.value));
      ++pos;
    } else {
      std::string key = line.key;
      ++pos;
      item.set(key, parse_block(lines, pos, indent + 2));
    }
    ReportNode rest = parse_map(lines, pos, indent + 1, true);
    for (const auto &[k, v] : rest.entries())
      item.set(k, v);
    list.add(std::move(item));
  }
  return list;
}

} // namespace

ReportNode ReportNode::parse(const std::string &text) {
  std::vector<Line> lines = lex(text);
  std::size_t pos = 0;
  ReportNode node = parse_block(lines, pos, 0);
  if (pos != lines.size())
    throw std::invalid_argument("trailing content in report document");
  return node;
}

std::string strip_block(const std::string &serialized,
                        const std::string &key) {
  std::istringstream in(serialized);
  std::ostringstream out;
  std::string line;
  bool skipping = false;
  std::string opener = key + ":";
  while (std::getline(in, line)) {
    if (!skipping) {
      if (line == opener || line.rfind(opener + " ", 0) == 0) {
        skipping = true;
        continue;
      }
      out << line << "\n";
    } else {
      if (!line.empty() && line[0] != ' ') {
        skipping = false;
        out << line << "\n";
      }
    }
  }
  return out.str();
}

} // namespace hallcheck
