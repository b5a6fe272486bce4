#include <wcov/errors.hpp>
#include <wcov/report.hpp>
#include <wcov/scenario_io.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace wcov {

namespace {

const char* tf(bool b) { return b ? "T" : "F"; }

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string optional_number(const std::optional<double>& v) { return v ? shortest(*v) : std::string(); }

std::string count(std::size_t k, std::size_t n) { return std::to_string(k) + "/" + std::to_string(n); }

void write_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + file.string());
  out << content;
  if (!out) throw IoError("error writing " + file.string());
}

std::string weights_header() {
  std::string h;
  for (std::size_t i = 1; i <= kWeightCount; ++i) h += ",w" + std::to_string(i);
  return h;
}

void render_table_text(std::ostringstream& os, const CoverageTable& t) {
  os << "  " << t.corner;
  for (std::size_t i = 1; i <= kWeightCount; ++i) os << "\tw" << i;
  os << "\tcount\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    os << "  " << t.row_labels[r];
    for (bool b : t.cells[r]) os << '\t' << tf(b);
    os << '\t' << count(t.row_counts[r], kWeightCount) << '\n';
  }
  os << "  count";
  for (std::size_t c : t.column_counts) os << '\t' << count(c, t.cells.size());
  os << "\n";
}

}  // namespace

std::string render_overall_csv(const CoverageReport& report) {
  std::ostringstream os;
  os << "weight";
  for (OracleKind k : kAllOracles) os << ',' << oracle_name(k);
  os << '\n';
  for (std::size_t i = 0; i < kWeightCount; ++i) {
    os << 'w' << i + 1;
    for (OracleKind k : kAllOracles) os << ',' << tf(report.overall[i][oracle_slot(k)]);
    os << '\n';
  }
  return os.str();
}

std::string render_table_csv(const CoverageTable& t) {
  std::ostringstream os;
  os << t.corner << weights_header() << ",count\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    os << t.row_labels[r];
    for (bool b : t.cells[r]) os << ',' << tf(b);
    os << ',' << count(t.row_counts[r], kWeightCount) << '\n';
  }
  os << "count";
  for (std::size_t c : t.column_counts) os << ',' << count(c, t.cells.size());
  os << ",\n";
  return os.str();
}

std::string render_summary(const CoverageReport& report) {
  std::ostringstream os;
  os << "Weight coverage\n";
  os << "  weight";
  for (OracleKind k : kAllOracles) os << '\t' << oracle_name(k);
  os << '\n';
  for (std::size_t i = 0; i < kWeightCount; ++i) {
    os << "  w" << i + 1;
    for (OracleKind k : kAllOracles) os << '\t' << tf(report.overall[i][oracle_slot(k)]);
    os << '\n';
  }
  for (OracleKind k : kAllOracles) {
    os << "\nCoverage by scenario (" << oracle_name(k) << ")\n";
    render_table_text(os, report.by_scenario[oracle_slot(k)]);
  }
  for (OracleKind k : kAllOracles) {
    os << "\nCoverage by mutation operator (" << oracle_name(k) << ")\n";
    render_table_text(os, report.by_operator[oracle_slot(k)]);
  }
  os << "\nGuard predicates\n";
  if (!report.have_guard_data) {
    os << "  no base-run instrumentation available\n";
  } else {
    for (std::size_t i = 0; i < kWeightCount; ++i) {
      os << "  w" << i + 1 << '\t' << (report.guard_never_fired[i] ? "never fired" : "fired") << '\n';
    }
  }
  return os.str();
}

std::vector<std::string> emit_report(const CoverageReport& report, const std::filesystem::path& dir,
                                     ReportFormat format) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file(dir / name, content);
    written.push_back(name);
  };
  if (format != ReportFormat::Text) {
    emit("coverage_overall.csv", render_overall_csv(report));
    for (OracleKind k : kAllOracles) {
      emit("coverage_by_scenario_" + std::string(oracle_name(k)) + ".csv",
           render_table_csv(report.by_scenario[oracle_slot(k)]));
    }
    for (OracleKind k : kAllOracles) {
      emit("coverage_by_operator_" + std::string(oracle_name(k)) + ".csv",
           render_table_csv(report.by_operator[oracle_slot(k)]));
    }
  }
  if (format != ReportFormat::Csv) emit("summary.txt", render_summary(report));
  return written;
}

void write_kill_matrix(const KillMatrix& matrix, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream km;
  km << "scenario,weight,operator,K,PO,SO,CO,base_min_dis,mutant_min_dis,base_comfort,mutant_comfort\n";
  for (const KillRecord& r : matrix.records) {
    km << r.scenario_id << ',' << r.weight << ',' << r.op_index << ',' << shortest(r.factor);
    for (OracleKind k : kAllOracles) km << ',' << tf(r.killed(k));
    km << ',' << optional_number(r.base_min_dis) << ',' << optional_number(r.mutant_min_dis) << ','
       << shortest(r.base_comfort) << ',' << shortest(r.mutant_comfort) << '\n';
  }
  write_file(dir / "kill_matrix.csv", km.str());

  std::ostringstream br;
  br << "scenario,min_dis,comfort";
  for (std::size_t i = 1; i <= kWeightCount; ++i) br << ",fired_w" << i;
  br << ",fallbacks\n";
  for (const BaseRun& b : matrix.base_runs) {
    br << b.scenario_id << ',' << optional_number(b.min_dis) << ',' << shortest(b.comfort);
    for (std::size_t f : b.firings) br << ',' << f;
    br << ',' << b.fallbacks << '\n';
  }
  write_file(dir / "base_runs.csv", br.str());
}

namespace {

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& file, std::size_t columns) {
  std::istringstream in(read_text_file(file));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) continue;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != columns) {
      throw ParseError(file.filename().string() + ":" + std::to_string(line_no),
                       "expected " + std::to_string(columns) + " columns, got " + std::to_string(cells.size()));
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

template <typename T>
T parse_value(const std::string& s, const std::string& where) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ParseError(where, "bad number '" + s + "'");
  return v;
}

std::optional<double> parse_optional(const std::string& s, const std::string& where) {
  if (s.empty()) return std::nullopt;
  return parse_value<double>(s, where);
}

bool parse_bool(const std::string& s, const std::string& where) {
  if (s == "T") return true;
  if (s == "F") return false;
  throw ParseError(where, "expected T or F, got '" + s + "'");
}

}  // namespace

KillMatrix read_kill_matrix(const std::filesystem::path& dir) {
  KillMatrix m;
  const auto base_rows = read_csv(dir / "base_runs.csv", 4 + kWeightCount);
  for (std::size_t r = 0; r < base_rows.size(); ++r) {
    const auto& row = base_rows[r];
    const std::string where = "base_runs.csv:" + std::to_string(r + 2);
    BaseRun b;
    b.scenario_id = row[0];
    b.min_dis = parse_optional(row[1], where);
    b.comfort = parse_value<double>(row[2], where);
    for (std::size_t i = 0; i < kWeightCount; ++i) b.firings[i] = parse_value<std::size_t>(row[3 + i], where);
    b.fallbacks = parse_value<std::size_t>(row[3 + kWeightCount], where);
    m.scenario_ids.push_back(b.scenario_id);
    m.base_runs.push_back(std::move(b));
  }

  const auto rows = read_csv(dir / "kill_matrix.csv", 11);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = "kill_matrix.csv:" + std::to_string(r + 2);
    KillRecord rec;
    rec.scenario_id = row[0];
    rec.weight = parse_value<std::size_t>(row[1], where);
    rec.op_index = parse_value<std::size_t>(row[2], where);
    rec.factor = parse_value<double>(row[3], where);
    for (std::size_t k = 0; k < 3; ++k) rec.verdicts[k] = parse_bool(row[4 + k], where);
    rec.base_min_dis = parse_optional(row[7], where);
    rec.mutant_min_dis = parse_optional(row[8], where);
    rec.base_comfort = parse_value<double>(row[9], where);
    rec.mutant_comfort = parse_value<double>(row[10], where);
    if (rec.weight < 1 || rec.weight > kWeightCount) throw ParseError(where, "weight index out of range");
    if (rec.op_index < 1) throw ParseError(where, "operator index out of range");
    if (m.operators.size() < rec.op_index) m.operators.resize(rec.op_index);
    MutationOperator& op = m.operators[rec.op_index - 1];
    if (op.index == 0) {
      op = {rec.op_index, rec.factor};
    } else if (op.factor != rec.factor) {
      throw ParseError(where, "operator " + std::to_string(rec.op_index) + " has inconsistent K");
    }
    m.records.push_back(std::move(rec));
  }
  for (const auto& op : m.operators) {
    if (op.index == 0) throw ParseError("kill_matrix.csv", "operator indices are not contiguous");
  }
  try {
    m.check_complete();
  } catch (const Error& e) {
    throw ParseError("kill_matrix.csv", e.what());
  }
  return m;
}

}  // namespace wcov
