#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

namespace huffman::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, const std::string& separators) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (separators.find(ch) != std::string::npos) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

bool is_exact_token(const std::string& token) {
  if (token.find('/') != std::string::npos) return true;
  return token.find_first_of(".eEnN") == std::string::npos;
}

std::string csv_cell(const Numeric& v) { return v.to_string(); }

void require_family_length(const std::string& family, int length) {
  bool ok = true;
  if (family == "fib" || family == "fib-cyclic") ok = length >= 7 && length % 4 == 3;
  else if (family == "tangent") ok = length >= 5 && length % 4 == 1;
  else if (family == "int") ok = length >= 3;
  else if (family == "three") ok = length >= 5 && length % 2 == 1;
  else throw Error(Errc::invalid_argument, "unknown family '" + family + "'");
  if (!ok) throw Error(Errc::invalid_length, "length " + std::to_string(length) + " not valid for family " + family);
}

struct Output {
  std::ostream& stdout_stream;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      stdout_stream << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw Error(Errc::invalid_argument, "cannot open output '" + path + "'");
    file << text;
  }
};

void write_plot_data(const std::string& path, const std::vector<std::pair<double, double>>& points) {
  std::ofstream file(path);
  if (!file) throw Error(Errc::invalid_argument, "cannot open plot-data file '" + path + "'");
  for (const auto& [x, y] : points) file << format_double(x) << ' ' << format_double(y) << '\n';
}

// Options selecting the sequence under analysis.
struct SourceOptions {
  std::string family;
  int length = 0;
  std::string scale = "1";
  std::string fixture;
  std::string input;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "fib, fib-cyclic, int, three, tangent");
    cmd->add_option("--length", length, "sequence length (spectrum length L for tangent)");
    cmd->add_option("--scale", scale, "scale s: integer or p/q is exact, decimals are float, 'phi'");
    cmd->add_option("--fixture", fixture, "H_non_11, H_non_9 or H_non_13");
    cmd->add_option("--input", input, "JSON or CSV sequence file");
  }

  HuffmanSequence resolve() const {
    if (!input.empty()) return read_sequence(input);
    if (!fixture.empty()) {
      auto f = huffman::fixture(fixture);
      if (!f) throw Error(Errc::invalid_argument, "unknown fixture '" + fixture + "'");
      return *f;
    }
    if (family.empty()) throw Error(Errc::invalid_argument, "one of --family, --fixture or --input is required");
    return build_family(family, length, scale);
  }
};

json report_json(const HuffmanSequence& seq, std::optional<double> tol) {
  const CorrelationProfile profile = acorr_aperiodic(seq);
  const CanonicalReport report = is_canonical(profile, tol.value_or(default_tolerance(profile)));
  json j{{"canonical", report.is_canonical},
         {"peak", to_json(report.peak)},
         {"end_value", to_json(report.end_value)},
         {"max_interior_abs", to_json(report.max_interior_abs)},
         {"tolerance", report.tolerance_used}};
  try {
    const QualityMetrics m = metrics(seq);
    j["merit_factor"] = to_json(m.merit_factor);
    j["peak_ratio"] = to_json(m.peak_ratio);
    j["flatness"] = m.spectral_flatness;
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_input) throw;
    j["merit_factor"] = nullptr;
    j["peak_ratio"] = nullptr;
    j["flatness"] = nullptr;
  }
  return j;
}

std::string sequence_csv(const HuffmanSequence& seq) {
  std::ostringstream os;
  os << "index,value\n";
  for (std::size_t i = 0; i < seq.size(); ++i) os << i << ',' << csv_cell(seq.elements[i]) << '\n';
  return os.str();
}

// ------------------------------------------------------------------ spectrum

struct SpectrumRow {
  int q;
  std::complex<double> bin;
  std::optional<double> closed_power;
};

std::vector<SpectrumRow> spectrum_rows(const SourceOptions& src, bool closed_form) {
  std::vector<SpectrumRow> rows;
  const bool fib = src.family == "fib" || src.family == "fib-cyclic";
  if (src.family == "tangent" && src.input.empty() && src.fixture.empty()) {
    const Spectrum closed = tangent_spectrum(src.length, Scale::parse(src.scale).value());
    const Eigen::VectorXcd bins = closed_form ? closed.bins : Eigen::VectorXcd(dft(idft(closed).real()));
    for (int q = 0; q < src.length; ++q) rows.push_back({q, bins(q), std::norm(closed.bins(q))});
    return rows;
  }
  const HuffmanSequence seq = src.resolve();
  const int n = static_cast<int>(seq.size());
  const bool has_closed = fib && src.input.empty() && src.fixture.empty();
  if (closed_form && !has_closed) {
    throw Error(Errc::invalid_argument, "no closed-form spectrum for this sequence");
  }
  const Scale s = Scale::parse(src.scale);
  const Spectrum measured = dft(seq);
  for (int q = 0; q < n; ++q) {
    SpectrumRow row{q, measured.bins(q), std::nullopt};
    if (has_closed) {
      row.closed_power = power_spectrum_closed(n, s, q);
      if (closed_form) row.bin = src.family == "fib" ? dft_closed(n, s, q) : dft_closed_cyclic(n, s, q);
    }
    rows.push_back(row);
  }
  return rows;
}

// ------------------------------------------------------------------ sweep

SweepRow sweep_row(const SweepSpec& spec, int length, const Scale& s) {
  SweepRow row;
  row.length = length;
  row.scale = s;
  try {
    const HuffmanSequence seq = spec.family == "tangent" ? build_tangent(length, s.value())
                                                         : build_family(spec.family, length, s.to_string());
    const CorrelationProfile profile = acorr_aperiodic(seq);
    const double tol = spec.tolerance >= 0.0 ? spec.tolerance : default_tolerance(profile);
    const CanonicalReport report = is_canonical(profile, tol);
    row.canonical = report.is_canonical;
    row.peak = report.peak.to_string();
    row.max_interior = report.max_interior_abs.to_string();
    row.end_value = report.end_value.to_string();
    row.flatness = format_double(flatness(seq));
    if ((spec.family == "fib" || spec.family == "fib-cyclic") && s.value() != 0.0) {
      row.flatness_bound = format_double(flatness_bound(length, s));
    }
    if (!row.canonical) row.error = "not-canonical";
  } catch (const Error& e) {
    row.canonical = false;
    row.error = std::string(to_string(e.code()));
  }
  return row;
}

// ------------------------------------------------------------------ identities

json run_identities(std::uint64_t seed, std::size_t count, const std::string& only, bool& all_passed) {
  json summary = json::array();
  all_passed = true;
  for (IdentityKind kind : kAllIdentityKinds) {
    if (!only.empty() && to_string(kind) != only) continue;
    std::size_t passed = 0;
    json first_failure = nullptr;
    for (const IdentityCase& c : random_identity_cases(kind, count, seed)) {
      const IdentityResult r = check_identity(c);
      if (r.holds) {
        ++passed;
      } else if (first_failure.is_null()) {
        first_failure = json{{"n", c.n}, {"r", c.r}, {"m", c.m}, {"a", c.a}, {"b", c.b},
                             {"c", c.c}, {"d", c.d}, {"t", c.t}, {"scale", c.scale.to_string()},
                             {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
      }
    }
    all_passed = all_passed && passed == count;
    summary.push_back(json{{"kind", std::string(to_string(kind))},
                           {"cases", count},
                           {"passed", passed},
                           {"first_failure", first_failure}});
  }
  return summary;
}

}  // namespace

// ====================================================================== public

json to_json(const Numeric& value) {
  if (value.is_infinite()) return "inf";
  if (value.is_exact()) return value.to_string();
  return value.approx();
}

Numeric numeric_from_json(const json& value) {
  if (value.is_string()) return parse_numeric(value.get<std::string>());
  if (value.is_number_integer()) return Numeric(value.get<long>());
  if (value.is_number()) return Numeric(value.get<double>());
  throw Error(Errc::parse_error, "element is neither a number nor a string: " + value.dump());
}

json sequence_to_json(const HuffmanSequence& seq, std::optional<double> tol) {
  json elements = json::array();
  for (const auto& v : seq.elements) elements.push_back(to_json(v));
  json scale = nullptr;
  if (seq.scale) {
    scale = json{{"exact", seq.scale->is_exact()}};
    scale["value"] = seq.scale->is_exact() ? json(seq.scale->to_string()) : json(seq.scale->value());
  }
  json j{{"family", std::string(to_string(seq.family))},
         {"length", seq.size()},
         {"scale", scale},
         {"elements", elements},
         {"rotation_offset", seq.rotation_offset}};
  if (!seq.label.empty()) j["label"] = seq.label;
  if (!seq.elements.empty()) j["report"] = report_json(seq, tol);
  return j;
}

HuffmanSequence parse_sequence_text(const std::string& text, bool as_json) {
  if (as_json) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, e.what());
    }
    const json& elements = doc.is_array() ? doc : doc.value("elements", json());
    if (!elements.is_array()) throw Error(Errc::parse_error, "no 'elements' array");
    std::vector<Numeric> values;
    for (const auto& e : elements) values.push_back(numeric_from_json(e));
    HuffmanSequence seq = make_sequence(std::move(values), doc.is_object() ? doc.value("label", "") : "");
    if (doc.is_object()) seq.rotation_offset = doc.value("rotation_offset", 0);
    return seq;
  }

  std::istringstream is(text);
  std::string line;
  std::vector<Numeric> values;
  int value_column = -1;
  bool first = true;
  while (std::getline(is, line)) {
    const auto cells = split(line, ",; \t\r");
    if (cells.empty()) continue;
    if (first && std::isalpha(static_cast<unsigned char>(cells.front().front())) && cells.front() != "inf") {
      const auto it = std::find(cells.begin(), cells.end(), "value");
      value_column = it != cells.end() ? static_cast<int>(it - cells.begin()) : static_cast<int>(cells.size()) - 1;
      first = false;
      continue;
    }
    first = false;
    if (value_column >= 0) {
      if (value_column >= static_cast<int>(cells.size())) throw Error(Errc::parse_error, "short CSV row: " + line);
      values.push_back(parse_numeric(cells[value_column]));
    } else {
      for (const auto& c : cells) values.push_back(parse_numeric(c));
    }
  }
  if (values.empty()) throw Error(Errc::parse_error, "no values in input");
  return make_sequence(std::move(values));
}

HuffmanSequence read_sequence(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw Error(Errc::parse_error, "cannot read '" + path.string() + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool as_json = path.extension() == ".json" ||
                       (first != std::string::npos && (text[first] == '{' || text[first] == '['));
  HuffmanSequence seq = parse_sequence_text(text, as_json);
  if (seq.label.empty()) seq.label = path.filename().string();
  return seq;
}

HuffmanSequence build_family(const std::string& family, int length, const std::string& scale) {
  require_family_length(family, length);
  if (family == "three") return build_three(length);
  if (family == "tangent") return build_tangent(length, Scale::parse(scale).value());
  const Scale s = Scale::parse(scale);
  if (family == "fib") return build_fib(length, s);
  if (family == "fib-cyclic") return build_fib_cyclic(length, s);
  return build_int(length, s);
}

std::vector<Scale> parse_scale_range(const std::string& text) {
  std::vector<Scale> out;
  if (text.find(':') == std::string::npos) {
    for (const auto& token : split(text, ", ")) out.push_back(Scale::parse(token));
    if (out.empty()) throw Error(Errc::parse_error, "empty scale list");
    return out;
  }
  const auto parts = split(text, ":");
  if (parts.size() != 3) throw Error(Errc::parse_error, "scale range must be start:stop:step");
  const bool exact = std::all_of(parts.begin(), parts.end(), is_exact_token);
  if (exact) {
    const Rational start = parse_rational(parts[0]);
    const Rational stop = parse_rational(parts[1]);
    const Rational step = parse_rational(parts[2]);
    if (step <= 0) throw Error(Errc::parse_error, "scale step must be positive");
    for (Rational v = start; v <= stop; v += step) out.emplace_back(v);
  } else {
    const double start = Scale::parse(parts[0]).value();
    const double stop = Scale::parse(parts[1]).value();
    const double step = Scale::parse(parts[2]).value();
    if (!(step > 0.0)) throw Error(Errc::parse_error, "scale step must be positive");
    const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) {
      // Snap to 12 decimals so 0.1-steps print as 0.3 rather than 0.30000000000000004.
      out.emplace_back(std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12);
    }
  }
  if (out.empty()) throw Error(Errc::parse_error, "empty scale range");
  return out;
}

std::vector<int> parse_length_range(const std::string& text) {
  std::vector<int> out;
  auto to_int = [](const std::string& t) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "not an integer: '" + t + "'");
    }
  };
  if (text.find(':') == std::string::npos) {
    for (const auto& token : split(text, ", ")) out.push_back(to_int(token));
  } else {
    const auto parts = split(text, ":");
    if (parts.size() != 3) throw Error(Errc::parse_error, "length range must be start:stop:step");
    const int start = to_int(parts[0]), stop = to_int(parts[1]), step = to_int(parts[2]);
    if (step <= 0) throw Error(Errc::parse_error, "length step must be positive");
    for (int n = start; n <= stop; n += step) out.push_back(n);
  }
  if (out.empty()) throw Error(Errc::parse_error, "empty length range");
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
  for (int n : spec.lengths) require_family_length(spec.family, n);

  std::vector<std::pair<int, Scale>> work;
  for (int n : spec.lengths)
    for (const Scale& s : spec.scales) work.emplace_back(n, s);
  std::stable_sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.value() < b.second.value();
  });

  std::vector<SweepRow> rows(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) rows[i] = sweep_row(spec, work[i].first, work[i].second);
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

std::string sweep_csv(const std::string& family, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family,N,s,canonical,peak,max_interior_abs,end_value,flatness,flatness_bound,error\n";
  for (const auto& r : rows) {
    os << family << ',' << r.length << ',' << r.scale.to_string() << ',' << (r.canonical ? "true" : "false") << ','
       << r.peak << ',' << r.max_interior << ',' << r.end_value << ',' << r.flatness << ',' << r.flatness_bound
       << ',' << r.error << '\n';
  }
  return os.str();
}

// ====================================================================== run

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical delta-correlated Huffman sequences: construction, verification and spectra"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  std::optional<double> tol;
  std::uint64_t seed = 20240101;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output to PATH instead of stdout");
  app.add_option("--tol", tol, "relative tolerance for canonical checks");
  app.add_option("--seed", seed, "seed for randomized identity cases");

  SourceOptions src;

  auto* generate = app.add_subcommand("generate", "construct a family member");
  generate->add_option("--family", src.family, "fib, fib-cyclic, int, three, tangent")->required();
  generate->add_option("--length", src.length, "length (spectrum length L for tangent)")->required();
  generate->add_option("--scale", src.scale, "scale s");

  std::string plot_path;
  auto* verify = app.add_subcommand("verify", "check the canonical condition and report metrics");
  src.attach(verify);
  verify->add_option("--emit-plot-data", plot_path, "write 'shift value' auto-correlation pairs to PATH");

  bool closed_form = false;
  bool use_fft = false;
  auto* spectrum = app.add_subcommand("spectrum", "per-bin Fourier table");
  src.attach(spectrum);
  auto* closed_flag = spectrum->add_flag("--closed-form", closed_form, "bins from the closed-form expression");
  spectrum->add_flag("--fft", use_fft, "bins from the reference DFT (default)")->excludes(closed_flag);
  spectrum->add_option("--emit-plot-data", plot_path, "write 'q magnitude' pairs to PATH");

  double radius_tol = 1e-4;
  double angle_tol = 1e-6;
  auto* zeros = app.add_subcommand("zeros", "z-transform zeros and their circle geometry");
  src.attach(zeros);
  zeros->add_option("--radius-tol", radius_tol, "relative radius tolerance for clustering");
  zeros->add_option("--angle-tol", angle_tol, "angular spacing tolerance (radians)");
  zeros->add_option("--emit-plot-data", plot_path, "write 're im' pairs to PATH");

  std::string lengths_text, scales_text, exclude_text;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "canonical check over a (length, scale) grid");
  sweep->add_option("--family", src.family, "fib, fib-cyclic, int, three, tangent")->required();
  sweep->add_option("--lengths", lengths_text, "start:stop:step or comma list")->required();
  sweep->add_option("--scales", scales_text, "start:stop:step or comma list")->default_val("1");
  sweep->add_option("--exclude-scales", exclude_text, "comma list of scales to skip");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "print the stored example arrays");

  std::size_t cases = 1000;
  std::string kind;
  auto* identities = app.add_subcommand("identities", "randomized Fibonacci-polynomial identity suite");
  identities->add_option("--cases", cases, "cases per identity kind");
  identities->add_option("--kind", kind, "restrict to one identity kind");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kUsageError;
  }

  const Output output{out, out_path};
  try {
    if (generate->parsed()) {
      const HuffmanSequence seq = build_family(src.family, src.length, src.scale);
      output.write(format == "csv" ? sequence_csv(seq) : sequence_to_json(seq, tol).dump(2) + "\n");
      return kSuccess;
    }

    if (verify->parsed()) {
      const HuffmanSequence seq = src.resolve();
      if (!plot_path.empty()) {
        const CorrelationProfile profile = acorr_aperiodic(seq);
        std::vector<std::pair<double, double>> pairs;
        for (int d = profile.min_shift(); d <= profile.max_shift(); ++d) pairs.emplace_back(d, profile.at(d).approx());
        write_plot_data(plot_path, pairs);
      }
      json report = report_json(seq, tol);
      report["length"] = seq.size();
      report["source"] = seq.label.empty() ? std::string(to_string(seq.family)) : seq.label;
      if (format == "csv") {
        std::ostringstream os;
        os << "source,length,canonical,peak,end_value,max_interior_abs,merit_factor,peak_ratio,flatness\n";
        auto cell = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        os << cell(report["source"]) << ',' << report["length"] << ',' << report["canonical"] << ','
           << cell(report["peak"]) << ',' << cell(report["end_value"]) << ',' << cell(report["max_interior_abs"])
           << ',' << cell(report["merit_factor"]) << ',' << cell(report["peak_ratio"]) << ','
           << cell(report["flatness"]) << '\n';
        output.write(os.str());
      } else {
        output.write(report.dump(2) + "\n");
      }
      return report["canonical"].get<bool>() ? kSuccess : kPropertyFailure;
    }

    if (spectrum->parsed()) {
      const auto rows = spectrum_rows(src, closed_form);
      double closed_scale = 0.0;
      for (const auto& r : rows)
        if (r.closed_power) closed_scale = std::max(closed_scale, std::abs(*r.closed_power));
      std::vector<std::pair<double, double>> plot;
      json table = json::array();
      std::ostringstream os;
      os << "q,re,im,magnitude,power,closed_form_power,abs_rel_diff\n";
      for (const auto& r : rows) {
        const double power = std::norm(r.bin);
        plot.emplace_back(r.q, std::abs(r.bin));
        json row{{"q", r.q}, {"re", r.bin.real()}, {"im", r.bin.imag()}, {"magnitude", std::abs(r.bin)},
                 {"power", power}, {"closed_form_power", nullptr}, {"abs_rel_diff", nullptr}};
        std::string closed_cell, diff_cell;
        if (r.closed_power) {
          // A bin whose closed form is exactly zero is measured against the table's scale.
          const double denom = *r.closed_power != 0.0 ? std::abs(*r.closed_power) : closed_scale;
          const double diff = denom > 0.0 ? std::abs(power - *r.closed_power) / denom : std::abs(power);
          row["closed_form_power"] = *r.closed_power;
          row["abs_rel_diff"] = diff;
          closed_cell = format_double(*r.closed_power);
          diff_cell = format_double(diff);
        }
        table.push_back(row);
        os << r.q << ',' << format_double(r.bin.real()) << ',' << format_double(r.bin.imag()) << ','
           << format_double(std::abs(r.bin)) << ',' << format_double(power) << ',' << closed_cell << ','
           << diff_cell << '\n';
      }
      if (!plot_path.empty()) write_plot_data(plot_path, plot);
      output.write(format == "csv" ? os.str() : table.dump(2) + "\n");
      return kSuccess;
    }

    if (zeros->parsed()) {
      const HuffmanSequence seq = src.resolve();
      const auto roots = z_zeros(seq);
      const ZeroReport report = circle_fit(roots, radius_tol, angle_tol);
      const Eigen::VectorXd coeffs = seq.to_vector();
      double residual = 0.0;
      json root_list = json::array();
      std::vector<std::pair<double, double>> plot;
      for (const auto& z : roots) {
        residual = std::max(residual, root_residual(coeffs, z));
        root_list.push_back({z.real(), z.imag()});
        plot.emplace_back(z.real(), z.imag());
      }
      json clusters = json::array();
      for (const auto& c : report.radii_clusters) clusters.push_back({{"radius", c.radius}, {"count", c.count}});
      json j{{"length", seq.size()},
             {"roots", root_list},
             {"radii_clusters", clusters},
             {"angle_gaps", report.angle_gaps},
             {"max_radius_dev", report.max_radius_dev},
             {"max_angle_dev", report.max_angle_dev},
             {"union_angle_dev", report.union_angle_dev},
             {"equi_angular", report.equi_angular},
             {"reciprocal_pair", report.reciprocal_pair},
             {"max_residual", residual}};
      if (!plot_path.empty()) write_plot_data(plot_path, plot);
      if (format == "csv") {
        std::ostringstream os;
        os << "radius,count\n";
        for (const auto& c : report.radii_clusters) os << format_double(c.radius) << ',' << c.count << '\n';
        output.write(os.str());
      } else {
        output.write(j.dump(2) + "\n");
      }
      return kSuccess;
    }

    if (sweep->parsed()) {
      SweepSpec spec;
      spec.family = src.family;
      spec.lengths = parse_length_range(lengths_text);
      const std::vector<Scale> excluded = exclude_text.empty() ? std::vector<Scale>{} : parse_scale_range(exclude_text);
      for (const Scale& s : parse_scale_range(scales_text)) {
        const bool skip = std::any_of(excluded.begin(), excluded.end(),
                                      [&](const Scale& x) { return std::abs(x.value() - s.value()) <= 1e-12; });
        if (!skip) spec.scales.push_back(s);
      }
      if (spec.scales.empty()) throw Error(Errc::invalid_argument, "every scale was excluded");
      spec.tolerance = tol.value_or(-1.0);
      const auto rows = run_sweep(spec, jobs);
      if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back({{"family", spec.family}, {"N", r.length}, {"s", r.scale.to_string()},
                         {"canonical", r.canonical}, {"peak", r.peak}, {"max_interior_abs", r.max_interior},
                         {"end_value", r.end_value}, {"flatness", r.flatness},
                         {"flatness_bound", r.flatness_bound}, {"error", r.error}});
        }
        output.write(arr.dump(2) + "\n");
      } else {
        output.write(sweep_csv(spec.family, rows));
      }
      const bool failed = std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.canonical; });
      return failed ? kPropertyFailure : kSuccess;
    }

    if (fixtures_cmd->parsed()) {
      const auto all = fixtures();
      if (format == "csv") {
        std::ostringstream os;
        os << "label,index,value\n";
        for (const auto& f : all)
          for (std::size_t i = 0; i < f.size(); ++i) os << f.label << ',' << i << ',' << csv_cell(f.elements[i]) << '\n';
        output.write(os.str());
      } else {
        json arr = json::array();
        for (const auto& f : all) arr.push_back(sequence_to_json(f, tol));
        output.write(arr.dump(2) + "\n");
      }
      return kSuccess;
    }

    if (identities->parsed()) {
      if (!kind.empty() && !parse_identity_kind(kind)) throw Error(Errc::invalid_argument, "unknown identity kind '" + kind + "'");
      bool all_passed = false;
      const json summary = run_identities(seed, cases, kind, all_passed);
      output.write(json{{"seed", seed}, {"all_passed", all_passed}, {"kinds", summary}}.dump(2) + "\n");
      return all_passed ? kSuccess : kPropertyFailure;
    }
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace huffman::cli
