#include "typeb/table_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace typeb::io {

using nlohmann::json;

std::string to_json(const LabeledTable& t) {
  std::ostringstream os;
  os << "{\"family\":" << json(t.family).dump() << ",\"m\":" << t.m
     << ",\"r\":" << t.r << ",\"rows\":[";
  for (std::size_t n = 0; n < t.table.rows.size(); ++n) {
    if (n) os << ',';
    os << '[';
    const auto& row = t.table.rows[n];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      os << row[k].get_str();
    }
    os << ']';
  }
  os << "],\"provenance\":" << json(std::string(riordan::to_string(t.table.provenance))).dump()
     << "}\n";
  return os.str();
}

namespace {

// nlohmann turns integers beyond 64 bits into doubles; the SAX interface
// still hands over the raw token, which is all we need.
class TableReader final : public nlohmann::json_sax<json> {
 public:
  bool null() override { return fail("unexpected null"); }
  bool boolean(bool) override { return fail("unexpected boolean"); }
  bool number_integer(number_integer_t v) override { return number(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) override { return number(raw); }
  bool string(string_t& s) override {
    if (depth_ != 1) return fail("unexpected string");
    if (key_ == "family") {
      family_ = s;
    } else if (key_ == "provenance") {
      provenance_ = s;
    } else {
      return fail("unexpected string for key '" + key_ + "'");
    }
    return true;
  }
  bool binary(binary_t&) override { return fail("unexpected binary value"); }
  bool start_object(std::size_t) override {
    if (depth_ != 0) return fail("nested objects are not allowed");
    ++depth_;
    return true;
  }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    if (key_ != "rows" || depth_ < 1 || depth_ > 2) return fail("unexpected array");
    if (depth_ == 1) {
      if (rows_) return fail("duplicate rows");
      rows_.emplace();
    } else {
      rows_->emplace_back();
    }
    ++depth_;
    return true;
  }
  bool end_array() override {
    --depth_;
    return true;
  }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    return fail(ex.what());
  }

  LabeledTable finish() const {
    if (!error_.empty()) throw DomainError("table json: " + error_);
    if (!family_ || !m_ || !r_ || !rows_ || !provenance_) {
      throw DomainError("table json: missing field");
    }
    LabeledTable t;
    t.family = *family_;
    t.m = *m_;
    t.r = *r_;
    t.table.rows = *rows_;
    t.table.provenance = riordan::provenance_from_string(*provenance_);
    return t;
  }

 private:
  bool fail(const std::string& msg) {
    if (error_.empty()) error_ = msg;
    return false;
  }

  bool number(const std::string& raw) {
    if (raw.empty() || raw.find_first_not_of("-0123456789") != std::string::npos) {
      return fail("non-integer number " + raw);
    }
    ExactInt v(raw);
    if (depth_ == 3 && key_ == "rows") {
      rows_->back().push_back(v);
    } else if (depth_ == 1 && (key_ == "m" || key_ == "r")) {
      if (!v.fits_slong_p()) return fail(key_ + " out of range");
      (key_ == "m" ? m_ : r_) = v.get_si();
    } else {
      return fail("unexpected number");
    }
    return true;
  }

  int depth_ = 0;
  std::string key_;
  std::string error_;
  std::optional<std::string> family_, provenance_;
  std::optional<long> m_, r_;
  std::optional<std::vector<std::vector<ExactInt>>> rows_;
};

}  // namespace

LabeledTable from_json(const std::string& text) {
  TableReader reader;
  json::sax_parse(text, &reader);
  return reader.finish();
}

std::string to_csv(const riordan::TriangleTable& t) {
  std::ostringstream os;
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      os << row[k].get_str();
    }
    os << '\n';
  }
  return os.str();
}

std::string to_pretty(const riordan::TriangleTable& t) {
  std::vector<std::size_t> width;
  for (const auto& row : t.rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      width[k] = std::max(width[k], row[k].get_str().size());
    }
  }
  std::ostringstream os;
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::string s = row[k].get_str();
      if (k) os << ' ';
      os << std::string(width[k] - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace typeb::io
