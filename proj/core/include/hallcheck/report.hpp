#ifndef HALLCHECK_REPORT_HPP
#define HALLCHECK_REPORT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

/**
 * @file report.hpp
 * @brief Structured-text report documents.
 *
 * A report is an ordered tree of maps, lists, and scalar strings. The
 * serialization is a YAML subset with two-space indentation, stable key
 * order, and no quoting; documents round-trip through parse().
 */

namespace hallcheck {

class ReportNode {
public:
  enum class Kind { scalar, map, list };

  ReportNode() : _kind(Kind::map) {}

  static ReportNode scalar(std::string value);
  static ReportNode scalar(std::uint64_t value);
  static ReportNode scalar(std::int64_t value);
  static ReportNode scalar(bool value);
  static ReportNode list();

  Kind kind() const { return _kind; }
  bool is_scalar() const { return _kind == Kind::scalar; }

  // map interface; keys keep insertion order
  ReportNode &set(const std::string &key, ReportNode child);
  ReportNode &set(const std::string &key, const std::string &value);
  ReportNode &set(const std::string &key, const char *value);
  ReportNode &set(const std::string &key, std::uint64_t value);
  ReportNode &set(const std::string &key, bool value);
  const ReportNode *child(const std::string &key) const;
  const std::vector<std::pair<std::string, ReportNode>> &entries() const {
    return _entries;
  }

  // list interface
  ReportNode &add(ReportNode item);
  const std::vector<ReportNode> &items() const { return _items; }

  const std::string &value() const { return _value; }

  std::string serialize() const;
  static ReportNode parse(const std::string &text);

  bool operator==(const ReportNode &rhs) const;

private:
  Kind _kind;
  std::string _value;
  std::vector<std::pair<std::string, ReportNode>> _entries;
  std::vector<ReportNode> _items;
};

// drops the named top-level block (timing data, typically) so reports can be
// compared across runs
std::string strip_block(const std::string &serialized, const std::string &key);

} // namespace hallcheck

#endif
