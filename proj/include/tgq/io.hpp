#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tgq/incidence.hpp"
#include "tgq/kantor.hpp"

namespace tgq {

// Input errors carry a message suitable for the CLI's exit-2 path.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Kantor family text format (.kf), line oriented, '#' comments:
//   KF p <prime> n <dim>
//   member <i>
//   gen <c1>,<c2>,...
//   star <i>
//   gen ...
KantorFamily parse_kf(std::istream& in);
KantorFamily parse_kf_string(const std::string& text);
KantorFamily parse_kf_file(const std::string& path);
std::string serialize_kf(const KantorFamily& fam);

// Incidence structure text format (.inc):
//   INC points <N> lines <M>
//   P <idx> <label-token>
//   L <idx>: <p1> <p2> ...
IncidenceStructure parse_inc(std::istream& in);
IncidenceStructure parse_inc_string(const std::string& text);
IncidenceStructure parse_inc_file(const std::string& path);
std::string serialize_inc(const IncidenceStructure& geom);

// Check stream: "CHECK <name> <PASS|FAIL|INFO> [witness tokens]".
struct ReportLine {
  enum class Verdict { Pass, Fail, Info } verdict;
  std::string name;
  std::vector<std::string> tokens;
};

class Report {
 public:
  void pass(const std::string& name, std::vector<std::string> tokens = {});
  void fail(const std::string& name, std::vector<std::string> tokens);
  void info(const std::string& name, std::vector<std::string> tokens = {});

  bool any_fail() const;
  const std::vector<ReportLine>& lines() const { return lines_; }
  void write(std::ostream& os) const;

 private:
  std::vector<ReportLine> lines_;
};

}  // namespace tgq
