#include "tgq/io.hpp"

#include <fstream>
#include <sstream>

namespace tgq {

namespace {

// Strips comments and surrounding whitespace; empty result = skip the line.
std::string clean_line(const std::string& raw) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_u64(const std::string& tok, const std::string& what) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number for " + what + ", got '" + tok + "'");
  }
}

}  // namespace

KantorFamily parse_kf(std::istream& in) {
  std::string raw;
  std::vector<std::string> lines;
  while (std::getline(in, raw)) {
    std::string line = clean_line(raw);
    if (!line.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) throw ParseError("empty family file");

  auto header = split_ws(lines[0]);
  if (header.size() != 5 || header[0] != "KF" || header[1] != "p" || header[3] != "n")
    throw ParseError("malformed header: expected 'KF p <prime> n <dim>'");
  const std::uint64_t p = parse_u64(header[2], "p");
  const std::uint64_t n = parse_u64(header[4], "n");
  if (!is_prime(static_cast<std::uint32_t>(p))) throw ParseError("p = " + header[2] + " is not prime");
  if (n == 0 || n > 64) throw ParseError("dimension out of range");

  KantorFamily fam;
  fam.p = static_cast<std::uint32_t>(p);
  fam.n = static_cast<std::uint32_t>(n);

  enum class Where { None, Member, Star } where = Where::None;
  std::vector<FpVec> gens;
  bool star_open = false;

  auto flush = [&]() {
    if (where == Where::None) return;
    Subspace sub = Subspace::span(fam.p, fam.n, gens);
    gens.clear();
    if (where == Where::Member) {
      fam.members.push_back({sub, Subspace::zero(fam.p, fam.n)});
      star_open = false;
    } else {
      fam.members.back().star = sub;
      star_open = true;
    }
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i]);
    if (toks[0] == "member") {
      if (toks.size() != 2) throw ParseError("malformed member line: '" + lines[i] + "'");
      flush();
      if (where != Where::None && !star_open) throw ParseError("member " + toks[1] + " preceded by a star-less member");
      const std::uint64_t idx = parse_u64(toks[1], "member index");
      if (idx != fam.members.size()) {
        throw ParseError("member index gap: expected " + std::to_string(fam.members.size()) + ", got " + toks[1]);
      }
      where = Where::Member;
    } else if (toks[0] == "star") {
      if (toks.size() != 2) throw ParseError("malformed star line: '" + lines[i] + "'");
      if (where != Where::Member) throw ParseError("star block without a preceding member block");
      flush();
      const std::uint64_t idx = parse_u64(toks[1], "star index");
      if (idx + 1 != fam.members.size()) throw ParseError("star index " + toks[1] + " does not match its member");
      where = Where::Star;
    } else if (toks[0] == "gen") {
      if (where == Where::None) throw ParseError("gen line outside a member/star block");
      if (toks.size() != 2) throw ParseError("malformed gen line: '" + lines[i] + "'");
      FpVec v;
      try {
        v = parse_vec(toks[1], fam.p);
      } catch (const std::exception& e) {
        throw ParseError(std::string("bad generator: ") + e.what());
      }
      if (v.size() != fam.n) throw ParseError("ragged generator: expected " + std::to_string(fam.n) + " coordinates");
      gens.push_back(std::move(v));
    } else {
      throw ParseError("unrecognized line: '" + lines[i] + "'");
    }
  }
  flush();
  if (where == Where::Member || (where == Where::Star && !star_open))
    throw ParseError("family ends inside an unfinished block");
  if (fam.members.size() < 3) throw ParseError("a family needs at least 3 members");
  return fam;
}

KantorFamily parse_kf_string(const std::string& text) {
  std::istringstream is(text);
  return parse_kf(is);
}

KantorFamily parse_kf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_kf(in);
}

std::string serialize_kf(const KantorFamily& fam) {
  std::ostringstream os;
  os << "KF p " << fam.p << " n " << fam.n << "\n";
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    os << "member " << i << "\n";
    for (const auto& b : fam.members[i].line.basis()) os << "gen " << format_vec(b) << "\n";
    os << "star " << i << "\n";
    for (const auto& b : fam.members[i].star.basis()) os << "gen " << format_vec(b) << "\n";
  }
  return os.str();
}

IncidenceStructure parse_inc(std::istream& in) {
  std::string raw;
  std::vector<std::string> lines;
  while (std::getline(in, raw)) {
    std::string line = clean_line(raw);
    if (!line.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) throw ParseError("empty incidence file");
  auto header = split_ws(lines[0]);
  if (header.size() != 5 || header[0] != "INC" || header[1] != "points" || header[3] != "lines")
    throw ParseError("malformed header: expected 'INC points <N> lines <M>'");
  const std::uint64_t np = parse_u64(header[2], "point count");
  const std::uint64_t nl = parse_u64(header[4], "line count");

  std::vector<std::string> point_labels(np);
  std::vector<bool> point_seen(np, false);
  std::vector<std::vector<std::uint32_t>> line_points(nl);
  std::vector<bool> line_seen(nl, false);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i]);
    if (toks[0] == "P") {
      if (toks.size() != 3) throw ParseError("malformed point line: '" + lines[i] + "'");
      const std::uint64_t idx = parse_u64(toks[1], "point index");
      if (idx >= np) throw ParseError("point index " + toks[1] + " out of range");
      if (point_seen[idx]) throw ParseError("duplicate point index " + toks[1]);
      point_seen[idx] = true;
      point_labels[idx] = toks[2];
    } else if (toks[0] == "L") {
      if (toks.size() < 3 || toks[1].empty() || toks[1].back() != ':')
        throw ParseError("malformed line record: '" + lines[i] + "'");
      const std::uint64_t idx = parse_u64(toks[1].substr(0, toks[1].size() - 1), "line index");
      if (idx >= nl) throw ParseError("line index out of range");
      if (line_seen[idx]) throw ParseError("duplicate line index");
      line_seen[idx] = true;
      std::vector<std::uint32_t> pts;
      for (std::size_t t = 2; t < toks.size(); ++t) {
        const std::uint64_t pt = parse_u64(toks[t], "point index");
        if (pt >= np) throw ParseError("line references point " + toks[t] + " out of range");
        if (!pts.empty() && pt <= pts.back()) throw ParseError("line points must be strictly ascending");
        pts.push_back(static_cast<std::uint32_t>(pt));
      }
      line_points[idx] = std::move(pts);
    } else {
      throw ParseError("unrecognized line: '" + lines[i] + "'");
    }
  }
  for (std::size_t i = 0; i < np; ++i)
    if (!point_seen[i]) throw ParseError("missing point " + std::to_string(i));
  for (std::size_t i = 0; i < nl; ++i)
    if (!line_seen[i]) throw ParseError("missing line " + std::to_string(i));
  try {
    return IncidenceStructure::make(std::move(point_labels), {}, std::move(line_points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

IncidenceStructure parse_inc_string(const std::string& text) {
  std::istringstream is(text);
  return parse_inc(is);
}

IncidenceStructure parse_inc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_inc(in);
}

std::string serialize_inc(const IncidenceStructure& geom) {
  std::ostringstream os;
  os << "INC points " << geom.num_points() << " lines " << geom.num_lines() << "\n";
  for (std::uint32_t i = 0; i < geom.num_points(); ++i) {
    const std::string& label = geom.point_labels()[i];
    os << "P " << i << " " << (label.empty() ? "p" + std::to_string(i) : label) << "\n";
  }
  for (std::uint32_t l = 0; l < geom.num_lines(); ++l) {
    os << "L " << l << ":";
    for (auto pt : geom.line(l)) os << " " << pt;
    os << "\n";
  }
  return os.str();
}

void Report::pass(const std::string& name, std::vector<std::string> tokens) {
  lines_.push_back({ReportLine::Verdict::Pass, name, std::move(tokens)});
}

void Report::fail(const std::string& name, std::vector<std::string> tokens) {
  if (tokens.empty()) tokens.push_back("unwitnessed");
  lines_.push_back({ReportLine::Verdict::Fail, name, std::move(tokens)});
}

void Report::info(const std::string& name, std::vector<std::string> tokens) {
  lines_.push_back({ReportLine::Verdict::Info, name, std::move(tokens)});
}

bool Report::any_fail() const {
  for (const auto& l : lines_)
    if (l.verdict == ReportLine::Verdict::Fail) return true;
  return false;
}

void Report::write(std::ostream& os) const {
  for (const auto& l : lines_) {
    os << "CHECK " << l.name << ' ';
    switch (l.verdict) {
      case ReportLine::Verdict::Pass: os << "PASS"; break;
      case ReportLine::Verdict::Fail: os << "FAIL"; break;
      case ReportLine::Verdict::Info: os << "INFO"; break;
    }
    for (const auto& t : l.tokens) os << ' ' << t;
    os << '\n';
  }
}

}  // namespace tgq
