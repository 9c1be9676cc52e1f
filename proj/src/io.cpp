#include "stpade/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace stpade {

namespace {

double parse_double(const std::string& token, std::size_t line_number) {
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
        std::ostringstream os;
        os << "line " << line_number << ": '" << token << "' is not a number";
        throw ConfigError(os.str());
    }
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        const auto first = field.find_first_not_of(" \t\r");
        const auto last = field.find_last_not_of(" \t\r");
        out.push_back(first == std::string::npos ? std::string()
                                                 : field.substr(first, last - first + 1));
    }
    return out;
}

const std::vector<std::string> kEpsHeader = {"omega",   "re_eps1", "im_eps1", "re_eps2",
                                             "im_eps2", "re_d",    "im_d"};
const std::vector<std::string> kSHeader = {"omega", "re_s", "im_s", "re_d", "im_d"};

} // namespace

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

nlohmann::json measure_to_json(const SpectralMeasure& measure) {
    nlohmann::json j;
    j["atoms"] = nlohmann::json::array();
    for (const Atom& atom : measure.atoms())
        j["atoms"].push_back({{"z", atom.position}, {"lambda", atom.weight}});
    if (!measure.density()) {
        j["density"] = nullptr;
        return j;
    }
    const ContinuousDensity& density = *measure.density();
    switch (density.kind()) {
    case DensityKind::checkerboard:
        j["density"] = {{"kind", "checkerboard"}};
        break;
    case DensityKind::table:
        j["density"] = {{"kind", "table"},
                        {"z", density.table_z()},
                        {"w", density.table_w()}};
        break;
    case DensityKind::custom:
        throw ConfigError("custom densities have no serialized form");
    }
    return j;
}

SpectralMeasure measure_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("measure JSON must be an object");
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
        if (!j["atoms"].is_array()) throw ConfigError("'atoms' must be an array");
        for (const auto& entry : j["atoms"]) {
            if (!entry.contains("z") || !entry.contains("lambda"))
                throw ConfigError("each atom needs 'z' and 'lambda'");
            atoms.push_back({entry["z"].get<double>(), entry["lambda"].get<double>()});
        }
    }
    if (!j.contains("density") || j["density"].is_null())
        return SpectralMeasure(std::move(atoms), std::nullopt);
    const auto& dj = j["density"];
    if (!dj.is_object() || !dj.contains("kind"))
        throw ConfigError("'density' must be null or an object with 'kind'");
    const std::string kind = dj["kind"].get<std::string>();
    if (kind == "checkerboard")
        return SpectralMeasure(std::move(atoms), ContinuousDensity::checkerboard());
    if (kind == "table") {
        if (!dj.contains("z") || !dj.contains("w"))
            throw ConfigError("table density needs 'z' and 'w' arrays");
        return SpectralMeasure(std::move(atoms),
                               ContinuousDensity::table(dj["z"].get<std::vector<double>>(),
                                                        dj["w"].get<std::vector<double>>()));
    }
    throw ConfigError("unknown density kind '" + kind + "'");
}

SpectralMeasure load_measure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open measure file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid JSON in '" + path + "': " + e.what());
    }
    return measure_from_json(j);
}

nlohmann::json pole_residue_to_json(const PoleResidueForm& form) {
    nlohmann::json j;
    j["variable"] = form.variable == PoleVariable::s ? "s" : "xi";
    j["pairs"] = nlohmann::json::array();
    for (const auto& pr : form.pairs)
        j["pairs"].push_back({{"pole", pr.pole}, {"residue", pr.residue}});
    return j;
}

PoleResidueForm pole_residue_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("variable") || !j.contains("pairs"))
        throw ConfigError("pole/residue JSON needs 'variable' and 'pairs'");
    PoleResidueForm form;
    const std::string variable = j["variable"].get<std::string>();
    if (variable == "s")
        form.variable = PoleVariable::s;
    else if (variable == "xi")
        form.variable = PoleVariable::xi;
    else
        throw ConfigError("variable must be 's' or 'xi', got '" + variable + "'");
    for (const auto& entry : j["pairs"]) {
        if (!entry.contains("pole") || !entry.contains("residue"))
            throw ConfigError("each pair needs 'pole' and 'residue'");
        form.pairs.push_back({entry["pole"].get<double>(), entry["residue"].get<double>()});
    }
    form.certificate = validate_pole_residue(form.pairs, form.variable);
    return form;
}

nlohmann::json reconstruction_to_json(const ReconstructionResult& result) {
    nlohmann::json j;
    switch (result.status) {
    case ReconstructionStatus::converged: j["status"] = "converged"; break;
    case ReconstructionStatus::best_effort: j["status"] = "best_effort"; break;
    case ReconstructionStatus::no_contrast: j["status"] = "no_contrast"; break;
    }
    j["form"] = pole_residue_to_json(result.form);
    j["moments"] = result.moments.values();
    j["residual"] = result.residual;
    j["relative_residual"] = result.relative_residual;
    j["iterations"] = result.iterations;
    j["certificate"] = {{"feasible", result.certificate.feasible},
                        {"residue_sum", result.certificate.residue_sum},
                        {"min_pole_gap", result.certificate.min_pole_gap},
                        {"notes", result.certificate.notes},
                        {"structure",
                         {{"passed", result.form.certificate.passed},
                          {"violations", result.form.certificate.violations}}}};
    j["per_point_residuals"] = result.per_point_residuals;
    return j;
}

void write_dataset_csv(std::ostream& out, const FrequencyDataset& dataset) {
    bool with_eps = !dataset.empty();
    for (const auto& rec : dataset.records())
        if (!rec.eps1) with_eps = false;
    const auto& header = with_eps ? kEpsHeader : kSHeader;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& rec : dataset.records()) {
        out << format_double(rec.omega);
        if (with_eps)
            out << "," << format_double(rec.eps1->real()) << ","
                << format_double(rec.eps1->imag()) << "," << format_double(rec.eps2->real())
                << "," << format_double(rec.eps2->imag());
        else
            out << "," << format_double(rec.s.real()) << "," << format_double(rec.s.imag());
        out << "," << format_double(rec.d.real()) << "," << format_double(rec.d.imag())
            << "\n";
    }
}

FrequencyDataset read_dataset_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("CSV input is empty");
    const std::vector<std::string> header = split_csv_line(line);
    bool with_eps;
    if (header == kEpsHeader)
        with_eps = true;
    else if (header == kSHeader)
        with_eps = false;
    else
        throw ConfigError("unrecognized CSV header '" + line + "'");

    std::vector<DataRecord> records;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            std::ostringstream os;
            os << "line " << line_number << ": expected " << header.size()
               << " fields, got " << fields.size();
            throw ConfigError(os.str());
        }
        std::vector<double> v;
        v.reserve(fields.size());
        for (const auto& f : fields) v.push_back(parse_double(f, line_number));
        DataRecord rec;
        rec.omega = v[0];
        if (with_eps) {
            rec.eps1 = std::complex<double>(v[1], v[2]);
            rec.eps2 = std::complex<double>(v[3], v[4]);
            rec.s = s_from_permittivities(*rec.eps1, *rec.eps2);
            rec.d = {v[5], v[6]};
        } else {
            rec.s = {v[1], v[2]};
            rec.d = {v[3], v[4]};
        }
        records.push_back(rec);
    }
    if (records.empty()) throw ConfigError("CSV contains no data rows");
    return FrequencyDataset(std::move(records), 0.0);
}

void save_dataset_csv(const std::string& path, const FrequencyDataset& dataset) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    write_dataset_csv(out, dataset);
}

FrequencyDataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open dataset file '" + path + "'");
    return read_dataset_csv(in);
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << content;
}

} // namespace stpade
