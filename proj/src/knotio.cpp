#include "wittknot/knotio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wittknot {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

IntMatrix matrix_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "matrix must be an array of rows");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) fail(where, "matrix row must be an array");
    std::vector<Int> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) fail(where, "matrix entries must be integers");
      r.emplace_back(static_cast<long>(e.get<long long>()));
    }
    m.push_back(std::move(r));
  }
  return m;
}

KnotRecord record_from_json(const ordered_json& j, IngestMode mode,
                            const std::string& where) {
  if (!j.is_object()) fail(where, "record must be an object");
  KnotRecord rec;
  if (!j.contains("name") || !j["name"].is_string())
    fail(where, "record needs a string 'name'");
  rec.name = j["name"].get<std::string>();
  if (j.contains("seifert") && !j["seifert"].is_null() &&
      mode != IngestMode::Scalars)
    rec.matrix = matrix_from_json(j["seifert"], where + " '" + rec.name + "'");
  if (j.contains("symmetric") && !j["symmetric"].is_null())
    rec.symmetric = j["symmetric"].get<bool>();
  else
    rec.symmetric = mode == IngestMode::Symmetric;
  if (j.contains("det") && !j["det"].is_null())
    rec.det = Int(static_cast<long>(j["det"].get<long long>()));
  if (j.contains("sigma") && !j["sigma"].is_null())
    rec.sigma = j["sigma"].get<int>();
  if (j.contains("u1") && !j["u1"].is_null())
    rec.u1_known = j["u1"].get<bool>();
  if (j.contains("lens") && !j["lens"].is_null()) {
    const auto& l = j["lens"];
    if (!l.is_array() || l.size() != 2)
      fail(where, "'lens' must be a [p, q] pair");
    rec.lens = {Int(static_cast<long>(l[0].get<long long>())),
                Int(static_cast<long>(l[1].get<long long>()))};
  }
  if (!rec.matrix && !(rec.det && rec.sigma))
    fail(where + " '" + rec.name + "'",
         "record needs a matrix or both det and sigma");
  return rec;
}

// ---- CSV ----------------------------------------------------------------

std::vector<std::string> split_csv_line(const std::string& line,
                                        const std::string& where) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) fail(where, "unterminated quote");
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

IntMatrix matrix_from_bracketed(const std::string& text,
                                const std::string& where) {
  // Row-major "[[a,b],[c,d]]"; whitespace is ignored.
  IntMatrix m;
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(where, "matrix must look like [[..],[..]]");
  std::string inner = s.substr(1, s.size() - 2);
  if (inner.empty()) return m;  // 0x0
  std::size_t i = 0;
  while (i < inner.size()) {
    if (inner[i] != '[') fail(where, "expected '[' starting a matrix row");
    auto close = inner.find(']', i);
    if (close == std::string::npos) fail(where, "unterminated matrix row");
    std::string row = inner.substr(i + 1, close - i - 1);
    std::vector<Int> r;
    if (!row.empty()) {
      std::stringstream ss(row);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          r.emplace_back(tok);
        } catch (const std::exception&) {
          fail(where, "bad matrix entry '" + tok + "'");
        }
      }
    }
    m.push_back(std::move(r));
    i = close + 1;
    if (i < inner.size() && inner[i] == ',') ++i;
  }
  return m;
}

bool parse_bool(const std::string& s, const std::string& where) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  fail(where, "bad boolean '" + s + "'");
}

}  // namespace

std::vector<KnotRecord> ingest_json_text(const std::string& text,
                                         IngestMode mode) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail("json", e.what());
  }
  if (!j.is_array()) fail("json", "top level must be an array of records");
  std::vector<KnotRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(
        record_from_json(j[i], mode, "record " + std::to_string(i + 1)));
  return out;
}

std::vector<KnotRecord> ingest_csv_text(const std::string& text,
                                        IngestMode mode) {
  std::vector<KnotRecord> out;
  std::stringstream ss(text);
  std::string line;
  std::vector<std::string> header;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::string where = "csv line " + std::to_string(lineno);
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line, where);
    if (header.empty()) {
      for (auto& f : fields) header.push_back(trim(f));
      continue;
    }
    KnotRecord rec;
    bool symmetric_set = false;
    for (std::size_t i = 0; i < fields.size() && i < header.size(); ++i) {
      std::string v = trim(fields[i]);
      if (v.empty()) continue;
      const std::string& col = header[i];
      try {
        if (col == "name") {
          rec.name = v;
        } else if (col == "seifert") {
          if (mode != IngestMode::Scalars)
            rec.matrix = matrix_from_bracketed(v, where);
        } else if (col == "symmetric") {
          rec.symmetric = parse_bool(v, where);
          symmetric_set = true;
        } else if (col == "det") {
          rec.det = Int(v);
        } else if (col == "sigma") {
          rec.sigma = std::stoi(v);
        } else if (col == "u1") {
          rec.u1_known = parse_bool(v, where);
        } else if (col == "lens") {
          IntMatrix pair = matrix_from_bracketed("[" + v + "]", where);
          if (pair.size() != 1 || pair[0].size() != 2)
            fail(where, "'lens' must be a [p, q] pair");
          rec.lens = {pair[0][0], pair[0][1]};
        }  // unknown columns are ignored
      } catch (const std::invalid_argument& e) {
        fail(where, std::string("column '") + col + "': " + e.what());
      }
    }
    if (rec.name.empty()) fail(where, "record needs a name");
    if (!symmetric_set) rec.symmetric = mode == IngestMode::Symmetric;
    if (!rec.matrix && !(rec.det && rec.sigma))
      fail(where + " '" + rec.name + "'",
           "record needs a matrix or both det and sigma");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<KnotRecord> ingest(const std::string& path, IngestFormat format,
                               IngestMode mode) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (trim(text).empty()) return {};
  try {
    return format == IngestFormat::Json ? ingest_json_text(text, mode)
                                        : ingest_csv_text(text, mode);
  } catch (const std::runtime_error& e) {
    fail(path, e.what());
  }
}

std::string emit_json(const std::vector<KnotRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const KnotRecord& r : records) {
    ordered_json j;
    j["name"] = r.name;
    if (r.matrix) {
      ordered_json m = ordered_json::array();
      for (const auto& row : *r.matrix) {
        ordered_json jr = ordered_json::array();
        for (const auto& e : row) jr.push_back(e.get_si());
        m.push_back(jr);
      }
      j["seifert"] = m;
    }
    j["symmetric"] = r.symmetric;
    if (r.det) j["det"] = r.det->get_si();
    if (r.sigma) j["sigma"] = *r.sigma;
    if (r.u1_known) j["u1"] = *r.u1_known;
    if (r.lens)
      j["lens"] = ordered_json::array(
          {r.lens->first.get_si(), r.lens->second.get_si()});
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

ResolvedKnot resolve(const KnotRecord& rec, bool strict_seifert) {
  ResolvedKnot out;
  out.record = rec;
  out.det = 0;
  if (rec.matrix) {
    try {
      if (rec.symmetric) {
        auto q = SymmetricRationalMatrix::from_int(*rec.matrix);
        Rat d = det(q.Q());
        if (d == 0) throw std::domain_error("symmetrized form degenerate");
        out.phi = gram_schmidt_diagonalize(q);
        out.det = abs(Int(d.get_num()));  // integer entries: denominator 1
        out.sigma = signature(*out.phi);
      } else {
        auto v = SeifertMatrix::create(*rec.matrix, strict_seifert,
                                       &out.warnings);
        out.phi = rational_witt_class(v);
        out.det = knot_determinant(v);
        out.sigma = signature(*out.phi);
      }
    } catch (const std::domain_error& e) {
      out.validation_failed = true;
      out.warnings.push_back(e.what());
    }
  }
  if (out.phi) {
    if (rec.det && *rec.det != out.det) {
      out.validation_failed = true;
      out.warnings.push_back("stored det " + rec.det->get_str() +
                             " != computed " + out.det.get_str());
    }
    if (rec.sigma && *rec.sigma != out.sigma) {
      out.validation_failed = true;
      out.warnings.push_back("stored sigma " + std::to_string(*rec.sigma) +
                             " != computed " + std::to_string(out.sigma));
    }
  } else {
    if (rec.det && rec.sigma) {
      out.det = *rec.det;
      out.sigma = *rec.sigma;
    } else if (!out.validation_failed) {
      out.validation_failed = true;
      out.warnings.push_back("no matrix and no stored det/sigma");
    }
  }
  return out;
}

}  // namespace wittknot
