#include "airslot/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "airslot/rng.hpp"
#include "json.hpp"

namespace airslot {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

/// Shortest decimal string that parses back to the same double.
std::string fmt_shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct CsvRow {
  int line = 0;
  std::vector<std::string> fields;
};

struct CsvFile {
  fs::path path;
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

/// Reads a headered CSV; verifies the header matches exactly.
CsvFile read_csv(const fs::path& path, const std::vector<std::string>& expected_header,
                 std::vector<std::string>& errors) {
  CsvFile file;
  file.path = path;
  std::ifstream in(path);
  if (!in) {
    errors.push_back(path.string() + ": cannot open file");
    return file;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (lineno == 1) {
      file.header = fields;
      if (fields != expected_header) {
        std::ostringstream e;
        e << path.string() << ":1: unexpected header '" << line << "'";
        errors.push_back(e.str());
        return file;
      }
      continue;
    }
    if (fields.size() != expected_header.size()) {
      std::ostringstream e;
      e << path.string() << ":" << lineno << ": expected " << expected_header.size()
        << " fields, got " << fields.size();
      errors.push_back(e.str());
      continue;
    }
    file.rows.push_back({lineno, std::move(fields)});
  }
  return file;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stod(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

long long field_int(const CsvFile& file, const CsvRow& row, int col,
                    std::vector<std::string>& errors) {
  long long v = 0;
  if (!parse_int(row.fields[col], v)) {
    std::ostringstream e;
    e << file.path.string() << ":" << row.line << ": cannot parse '" << row.fields[col]
      << "' as integer (column " << col + 1 << ")";
    errors.push_back(e.str());
  }
  return v;
}

double field_double(const CsvFile& file, const CsvRow& row, int col,
                    std::vector<std::string>& errors) {
  double v = 0.0;
  if (!parse_double(row.fields[col], v)) {
    std::ostringstream e;
    e << file.path.string() << ":" << row.line << ": cannot parse '" << row.fields[col]
      << "' as number (column " << col + 1 << ")";
    errors.push_back(e.str());
  }
  return v;
}

struct ConfigValues {
  MechanismParams params;
  std::uint64_t seed = 0;
};

ConfigValues read_config(const fs::path& path, std::vector<std::string>& errors) {
  ConfigValues cfg;
  std::ifstream in(path);
  if (!in) {
    errors.push_back(path.string() + ": cannot open file");
    return cfg;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream e;
      e << path.string() << ":" << lineno << ": expected key=value, got '" << line << "'";
      errors.push_back(e.str());
      continue;
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    double d = 0.0;
    long long ll = 0;
    auto bad_value = [&](const char* type) {
      std::ostringstream e;
      e << path.string() << ":" << lineno << ": cannot parse '" << value << "' as " << type
        << " for key " << key;
      errors.push_back(e.str());
    };
    if (key == "lambda") {
      parse_double(value, d) ? void(cfg.params.lambda = d) : bad_value("number");
    } else if (key == "g") {
      parse_double(value, d) ? void(cfg.params.g = d) : bad_value("number");
    } else if (key == "delta") {
      parse_double(value, d) ? void(cfg.params.delta = d) : bad_value("number");
    } else if (key == "default_alpha") {
      parse_double(value, d) ? void(cfg.params.default_alpha = d) : bad_value("number");
    } else if (key == "scale") {
      parse_int(value, ll) ? void(cfg.params.scale = ll) : bad_value("integer");
    } else if (key == "seed") {
      parse_int(value, ll) ? void(cfg.seed = static_cast<std::uint64_t>(ll)) : bad_value("integer");
    } else {
      std::ostringstream e;
      e << path.string() << ":" << lineno << ": unknown config key '" << key << "'";
      errors.push_back(e.str());
    }
  }
  return cfg;
}

void validate_histograms(const ValuationHistogram& h, std::vector<std::string>& errors) {
  for (std::size_t j = 0; j < h.per_slot.size(); ++j) {
    const auto& bins = h.per_slot[j];
    if (bins.empty()) {
      std::ostringstream e;
      e << "histogram for slot " << j << " is empty";
      errors.push_back(e.str());
      continue;
    }
    double total = 0.0;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (!(bins[b].lower >= 0.0) || bins[b].upper < bins[b].lower) {
        std::ostringstream e;
        e << "histogram for slot " << j << ", bin " << b << ": invalid bounds [" << bins[b].lower
          << "," << bins[b].upper << "]";
        errors.push_back(e.str());
      }
      if (!(bins[b].frequency >= 0.0)) {
        std::ostringstream e;
        e << "histogram for slot " << j << ", bin " << b << ": negative frequency";
        errors.push_back(e.str());
      }
      if (b > 0 && bins[b].lower < bins[b - 1].upper) {
        std::ostringstream e;
        e << "histogram for slot " << j << ", bin " << b << ": bins must be ascending and disjoint";
        errors.push_back(e.str());
      }
      total += bins[b].frequency;
    }
    if (!(total > 0.0)) {
      std::ostringstream e;
      e << "histogram for slot " << j << ": frequencies sum to zero";
      errors.push_back(e.str());
    }
  }
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

ScenarioFiles ScenarioFiles::in_dir(const fs::path& dir) {
  ScenarioFiles f;
  f.slots = dir / "slots.csv";
  f.cities = dir / "cities.csv";
  f.movements = dir / "movements.csv";
  f.valuations = dir / "valuations.csv";
  f.histograms = dir / "histograms.csv";
  f.current = dir / "current.csv";
  f.config = dir / "config.txt";
  return f;
}

ValuationMatrix sample_valuations(const ValuationHistogram& histograms, int m, int n,
                                  std::uint64_t seed) {
  if (static_cast<int>(histograms.per_slot.size()) != n)
    throw std::invalid_argument("sample_valuations: histogram count does not match slot count");
  std::vector<std::string> errors;
  validate_histograms(histograms, errors);
  if (!errors.empty()) throw std::invalid_argument(errors.front());

  std::vector<double> totals(n, 0.0);
  for (int j = 0; j < n; ++j)
    for (const auto& bin : histograms.per_slot[j]) totals[j] += bin.frequency;

  SplitMix64 rng(seed);
  ValuationMatrix v(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& bins = histograms.per_slot[j];
      double pick = rng.next_double() * totals[j];
      double cum = 0.0;
      const HistogramBin* chosen = &bins.back();
      for (const auto& bin : bins) {
        cum += bin.frequency;
        if (pick < cum) {
          chosen = &bin;
          break;
        }
      }
      v.at(i, j) = chosen->lower + rng.next_double() * (chosen->upper - chosen->lower);
    }
  return v;
}

LoadResult load_scenario(const ScenarioFiles& files) {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  ConfigValues cfg = read_config(files.config, errors);

  RawInstance raw;
  raw.params = cfg.params;

  CsvFile slots = read_csv(files.slots, {"slot_id", "capacity"}, errors);
  for (const auto& row : slots.rows) {
    Slot s;
    s.slot_id = static_cast<int>(field_int(slots, row, 0, errors));
    s.capacity = static_cast<int>(field_int(slots, row, 1, errors));
    raw.slots.push_back(s);
  }

  CsvFile cities = read_csv(files.cities, {"city_id", "name", "spi", "population", "class"}, errors);
  for (const auto& row : cities.rows) {
    City c;
    c.city_id = static_cast<int>(field_int(cities, row, 0, errors));
    c.name = row.fields[1];
    c.spi = field_double(cities, row, 2, errors);
    c.population = field_int(cities, row, 3, errors);
    auto cls = city_class_from_string(row.fields[4]);
    if (!cls) {
      std::ostringstream e;
      e << files.cities.string() << ":" << row.line << ": unknown city class '" << row.fields[4]
        << "' (expected metro, capital or remote)";
      errors.push_back(e.str());
    } else {
      c.cls = *cls;
    }
    raw.cities.push_back(c);
  }

  CsvFile movements = read_csv(
      files.movements, {"movement_id", "airline", "city_id", "requested_slot_id", "alpha"}, errors);
  for (const auto& row : movements.rows) {
    Movement mv;
    mv.movement_id = static_cast<int>(field_int(movements, row, 0, errors));
    mv.airline = row.fields[1];
    mv.city_id = static_cast<int>(field_int(movements, row, 2, errors));
    mv.requested_slot = static_cast<int>(field_int(movements, row, 3, errors));
    if (!row.fields[4].empty()) mv.alpha = field_double(movements, row, 4, errors);
    raw.movements.push_back(mv);
  }

  const int m = static_cast<int>(raw.movements.size());
  const int n = static_cast<int>(raw.slots.size());

  if (fs::exists(files.valuations)) {
    raw.valuations = ValuationMatrix(m, n);
    std::set<std::pair<int, int>> seen;
    CsvFile vals = read_csv(files.valuations, {"movement_id", "slot_id", "valuation"}, errors);
    for (const auto& row : vals.rows) {
      int i = static_cast<int>(field_int(vals, row, 0, errors));
      int j = static_cast<int>(field_int(vals, row, 1, errors));
      double v = field_double(vals, row, 2, errors);
      if (i < 0 || i >= m || j < 0 || j >= n) {
        std::ostringstream e;
        e << files.valuations.string() << ":" << row.line << ": valuation references unknown ids ("
          << i << "," << j << ")";
        errors.push_back(e.str());
        continue;
      }
      if (!seen.insert({i, j}).second) {
        std::ostringstream e;
        e << files.valuations.string() << ":" << row.line << ": duplicate valuation for (" << i
          << "," << j << ")";
        errors.push_back(e.str());
        continue;
      }
      raw.valuations.at(i, j) = v;
    }
    std::size_t missing = static_cast<std::size_t>(m) * n - seen.size();
    if (missing > 0) {
      std::ostringstream w;
      w << missing << " (movement,slot) pairs had no valuation row; defaulted to 0";
      warnings.push_back(w.str());
    }
  } else if (fs::exists(files.histograms)) {
    ValuationHistogram hist;
    hist.per_slot.resize(n);
    CsvFile hrows = read_csv(files.histograms, {"slot_id", "lower", "upper", "frequency"}, errors);
    for (const auto& row : hrows.rows) {
      int j = static_cast<int>(field_int(hrows, row, 0, errors));
      HistogramBin bin;
      bin.lower = field_double(hrows, row, 1, errors);
      bin.upper = field_double(hrows, row, 2, errors);
      bin.frequency = field_double(hrows, row, 3, errors);
      if (j < 0 || j >= n) {
        std::ostringstream e;
        e << files.histograms.string() << ":" << row.line << ": unknown slot id " << j;
        errors.push_back(e.str());
        continue;
      }
      hist.per_slot[j].push_back(bin);
    }
    if (errors.empty()) {
      validate_histograms(hist, errors);
      if (errors.empty()) raw.valuations = sample_valuations(hist, m, n, cfg.seed);
    }
  } else {
    errors.push_back("scenario has neither " + files.valuations.string() + " nor " +
                     files.histograms.string());
  }

  Allocation current(m);
  if (fs::exists(files.current)) {
    CsvFile cur = read_csv(files.current, {"movement_id", "slot_id"}, errors);
    for (const auto& row : cur.rows) {
      int i = static_cast<int>(field_int(cur, row, 0, errors));
      int j = static_cast<int>(field_int(cur, row, 1, errors));
      if (i < 0 || i >= m || j < 0 || j >= n) {
        std::ostringstream e;
        e << files.current.string() << ":" << row.line << ": assignment references unknown ids ("
          << i << "," << j << ")";
        errors.push_back(e.str());
        continue;
      }
      if (current.slot_of[i]) {
        std::ostringstream e;
        e << files.current.string() << ":" << row.line << ": duplicate assignment for movement "
          << i;
        errors.push_back(e.str());
        continue;
      }
      current.slot_of[i] = j;
    }
  } else {
    warnings.push_back(files.current.string() + " not found; current allocation is empty");
  }

  if (!errors.empty()) return {std::nullopt, std::move(errors)};

  ValidationResult validated = validate_instance(raw);
  if (!validated.ok()) return {std::nullopt, std::move(validated.errors)};

  LoadedScenario scenario{std::move(*validated.instance), std::move(current), cfg.seed,
                          std::move(warnings)};
  return {std::move(scenario), {}};
}

SynthScenario synth_scenario(const SynthSpec& spec) {
  if (spec.num_movements < 0 || spec.num_slots < 0)
    throw std::invalid_argument("synth_scenario: dimensions must be non-negative");
  if (spec.num_movements > 0 && spec.num_slots == 0)
    throw std::invalid_argument("synth_scenario: movements without slots");

  SynthScenario out;
  out.params = spec.params;
  out.seed = spec.seed;
  SplitMix64 rng(spec.seed);

  const int m = spec.num_movements;
  const int n = spec.num_slots;

  out.slots.resize(n);
  for (int j = 0; j < n; ++j) {
    int cap;
    if (spec.capacities.empty())
      cap = std::max(1, static_cast<int>(0.85 * m / std::max(1, n)));
    else if (spec.capacities.size() == 1)
      cap = spec.capacities[0];
    else if (static_cast<int>(spec.capacities.size()) == n)
      cap = spec.capacities[j];
    else
      throw std::invalid_argument("synth_scenario: capacities must have 1 or num_slots entries");
    if (cap < 1) throw std::invalid_argument("synth_scenario: capacities must be >= 1");
    out.slots[j] = {j, cap, 0};
  }

  int num_cities = spec.num_cities;
  if (num_cities <= 0) num_cities = m == 0 ? 0 : std::max(3, m / 12);
  const int metro_count = static_cast<int>(std::ceil(spec.metro_fraction * num_cities));
  const int capital_count = static_cast<int>(std::ceil(spec.capital_fraction * num_cities));
  out.cities.resize(num_cities);
  for (int c = 0; c < num_cities; ++c) {
    City city;
    city.city_id = c;
    char name[32];
    std::snprintf(name, sizeof(name), "city%03d", c);
    city.name = name;
    if (c < metro_count) {
      city.cls = CityClass::Metro;
      city.spi = rng.range(65.0, 80.0);
      city.population = 5'000'000 + static_cast<std::int64_t>(rng.below(15'000'001));
    } else if (c < metro_count + capital_count) {
      city.cls = CityClass::Capital;
      city.spi = rng.range(45.0, 70.0);
      city.population = 500'000 + static_cast<std::int64_t>(rng.below(5'500'001));
    } else {
      city.cls = CityClass::Remote;
      city.spi = rng.range(30.0, 55.0);
      city.population = 100'000 + static_cast<std::int64_t>(rng.below(1'100'001));
    }
    city.spi = std::round(city.spi * 100.0) / 100.0;  // two decimals, exact in the CSV
    out.cities[c] = city;
  }

  out.movements.resize(m);
  for (int i = 0; i < m; ++i) {
    Movement mv;
    mv.movement_id = i;
    char airline[16];
    std::snprintf(airline, sizeof(airline), "AL%llu", static_cast<unsigned long long>(rng.below(6)));
    mv.airline = airline;
    mv.city_id = static_cast<int>(rng.below(static_cast<std::uint64_t>(num_cities)));
    // Triangular demand profile: mid-day slots are requested most.
    double t = (rng.next_double() + rng.next_double()) / 2.0;
    mv.requested_slot = std::min(n - 1, static_cast<int>(t * n));
    out.movements[i] = mv;
  }

  out.histograms.per_slot.resize(n);
  for (int j = 0; j < n; ++j) {
    double mid = (n - 1) / 2.0;
    double spread = std::max(1.0, n / 6.0);
    double peak = 1.0 + 0.8 * std::exp(-0.5 * std::pow((j - mid) / spread, 2.0));
    double mean = 2.5e6 * peak;
    out.histograms.per_slot[j] = {
        {std::round(0.40 * mean), std::round(0.80 * mean), 3.0},
        {std::round(0.80 * mean), std::round(1.30 * mean), 5.0},
        {std::round(1.30 * mean), std::round(2.00 * mean), 2.0},
    };
  }

  out.current = Allocation(m);
  std::vector<int> occ(n, 0);
  for (int i = 0; i < m; ++i) {
    int req = out.movements[i].requested_slot;
    if (occ[req] < out.slots[req].capacity) {
      out.current.slot_of[i] = req;
      ++occ[req];
    }
  }

  std::int64_t total_capacity = 0;
  for (const auto& s : out.slots) total_capacity += s.capacity;
  if (m > total_capacity) {
    std::ostringstream w;
    w << "demand " << m << " exceeds total capacity " << total_capacity
      << "; some movements cannot be placed";
    out.warnings.push_back(w.str());
  }
  return out;
}

ScenarioFiles write_scenario(const SynthScenario& scenario, const fs::path& dir) {
  fs::create_directories(dir);
  ScenarioFiles files = ScenarioFiles::in_dir(dir);

  {
    auto out = open_out(files.slots);
    out << "slot_id,capacity\n";
    for (const auto& s : scenario.slots) out << s.slot_id << "," << s.capacity << "\n";
  }
  {
    auto out = open_out(files.cities);
    out << "city_id,name,spi,population,class\n";
    for (const auto& c : scenario.cities)
      out << c.city_id << "," << c.name << "," << fmt("%.2f", c.spi) << "," << c.population << ","
          << to_string(c.cls) << "\n";
  }
  {
    auto out = open_out(files.movements);
    out << "movement_id,airline,city_id,requested_slot_id,alpha\n";
    for (const auto& mv : scenario.movements) {
      out << mv.movement_id << "," << mv.airline << "," << mv.city_id << "," << mv.requested_slot
          << ",";
      if (mv.alpha) out << fmt("%.6f", *mv.alpha);
      out << "\n";
    }
  }
  {
    auto out = open_out(files.histograms);
    out << "slot_id,lower,upper,frequency\n";
    for (std::size_t j = 0; j < scenario.histograms.per_slot.size(); ++j)
      for (const auto& bin : scenario.histograms.per_slot[j])
        out << j << "," << fmt("%.2f", bin.lower) << "," << fmt("%.2f", bin.upper) << ","
            << fmt("%.2f", bin.frequency) << "\n";
  }
  {
    auto out = open_out(files.current);
    out << "movement_id,slot_id\n";
    for (int i = 0; i < scenario.current.num_movements(); ++i)
      if (scenario.current.slot_of[i]) out << i << "," << *scenario.current.slot_of[i] << "\n";
  }
  {
    auto out = open_out(files.config);
    out << "lambda=" << fmt_shortest(scenario.params.lambda) << "\n";
    out << "g=" << fmt_shortest(scenario.params.g) << "\n";
    out << "delta=" << fmt_shortest(scenario.params.delta) << "\n";
    out << "default_alpha=" << fmt_shortest(scenario.params.default_alpha) << "\n";
    out << "scale=" << scenario.params.scale << "\n";
    out << "seed=" << scenario.seed << "\n";
  }
  return files;
}

void write_results(const MechanismResult& result, const fs::path& out_dir) {
  fs::create_directories(out_dir);

  {
    ordered_json doc;
    doc["assignments"] = ordered_json::array();
    for (int i = 0; i < result.allocation.num_movements(); ++i) {
      ordered_json entry;
      entry["movement_id"] = i;
      if (result.allocation.slot_of[i])
        entry["slot_id"] = *result.allocation.slot_of[i];
      else
        entry["slot_id"] = nullptr;
      doc["assignments"].push_back(std::move(entry));
    }
    auto out = open_out(out_dir / "allocation.json");
    out << doc.dump(2) << "\n";
  }
  {
    auto out = open_out(out_dir / "payments.csv");
    out << "movement_id,payment\n";
    for (std::size_t i = 0; i < result.payments.size(); ++i)
      out << i << "," << fmt("%.6f", result.payments[i]) << "\n";
  }
  {
    ordered_json doc;
    doc["social_utility"] = result.social_utility;
    doc["allocated_count"] = result.allocation.assigned_count();
    double total_payment = 0.0;
    for (double p : result.payments) total_payment += p;
    doc["total_payment"] = total_payment;
    int allocated = result.allocation.assigned_count();
    if (allocated > 0) {
      double paid = 0.0;
      for (int i = 0; i < result.allocation.num_movements(); ++i)
        if (result.allocation.slot_of[i]) paid += result.payments[i];
      doc["mean_payment_allocated"] = paid / allocated;
    } else {
      doc["mean_payment_allocated"] = nullptr;
    }
    doc["mean_individual_utility"] =
        result.mean_utility_allocated ? ordered_json(*result.mean_utility_allocated)
                                      : ordered_json(nullptr);
    ordered_json cls;
    const char* names[3] = {"metro", "capital", "remote"};
    for (int c = 0; c < 3; ++c)
      cls[names[c]] = result.class_mean_utility[c] ? ordered_json(*result.class_mean_utility[c])
                                                   : ordered_json(nullptr);
    doc["class_utility"] = std::move(cls);
    doc["slot_congestion"] = result.slot_congestion;
    doc["tiny_rho_movements"] = result.tiny_rho_movements;
    auto out = open_out(out_dir / "metrics.json");
    out << doc.dump(2) << "\n";
  }
}

void write_comparison(const ComparisonReport& report, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  auto out = open_out(out_dir / "comparison.csv");
  out << "scenario,g,mechanism_social_utility,current_social_utility,iata_social_utility,"
         "improvement_vs_current_pct,improvement_vs_iata_pct,current_feasible\n";
  for (const auto& row : report.rows) {
    out << row.scenario << "," << fmt("%.6f", row.g) << ","
        << fmt("%.6f", row.mechanism_social_utility) << ","
        << fmt("%.6f", row.current_social_utility) << "," << fmt("%.6f", row.iata_social_utility)
        << ",";
    out << (row.improvement_vs_current_pct ? fmt("%.4f", *row.improvement_vs_current_pct) : "n/a");
    out << ",";
    out << (row.improvement_vs_iata_pct ? fmt("%.4f", *row.improvement_vs_iata_pct) : "n/a");
    out << "," << (row.current_feasible ? "true" : "false") << "\n";
  }
}

void write_sweep(const std::vector<SweepRow>& rows, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  auto out = open_out(out_dir / "sweep.csv");
  out << "g,method,social_utility,mean_payment,mean_individual_utility,utility_metro,"
         "utility_capital,utility_remote\n";
  auto cell = [](const std::optional<double>& v) { return v ? fmt("%.6f", *v) : "n/a"; };
  for (const auto& row : rows) {
    out << fmt("%.6f", row.g) << "," << row.method << "," << fmt("%.6f", row.social_utility) << ","
        << cell(row.mean_payment) << "," << cell(row.mean_individual_utility);
    for (int c = 0; c < 3; ++c) out << "," << cell(row.class_utility[c]);
    out << "\n";
  }
}

Allocation read_allocation_json(const fs::path& file, int num_movements) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  ordered_json doc = ordered_json::parse(in);
  Allocation allocation(num_movements);
  for (const auto& entry : doc.at("assignments")) {
    int i = entry.at("movement_id").get<int>();
    if (i < 0 || i >= num_movements)
      throw std::runtime_error(file.string() + ": movement id out of range");
    if (!entry.at("slot_id").is_null()) allocation.slot_of[i] = entry.at("slot_id").get<int>();
  }
  return allocation;
}

std::vector<double> read_payments_csv(const fs::path& file) {
  std::vector<std::string> errors;
  CsvFile csv = read_csv(file, {"movement_id", "payment"}, errors);
  if (!errors.empty()) throw std::runtime_error(errors.front());
  std::vector<double> payments;
  for (const auto& row : csv.rows) {
    long long i = field_int(csv, row, 0, errors);
    double p = field_double(csv, row, 1, errors);
    if (!errors.empty()) throw std::runtime_error(errors.front());
    if (i != static_cast<long long>(payments.size()))
      throw std::runtime_error(file.string() + ": movement ids must be dense and ordered");
    payments.push_back(p);
  }
  return payments;
}

}  // namespace airslot
