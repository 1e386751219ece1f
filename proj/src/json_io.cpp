#include "nbly/json_io.hpp"

#include <sstream>

namespace nbly {

void to_json(nlohmann::json& j, const Series& s) {
    j = nlohmann::json{{"order", s.order()}, {"coeffs", s.coeffs()}};
}

void to_json(nlohmann::json& j, const NeighborlyPartition& np) {
    j = nlohmann::json{{"mu1", np.mu1}, {"mu2", np.mu2}};
}

void to_json(nlohmann::json& j, const Component& c) {
    j = nlohmann::json{{"k", c.k}, {"n", c.n}, {"cuts", c.cuts}};
}

std::string series_to_csv(const Series& s) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (int e = 0; e <= s.order(); ++e) os << e << "," << s.coeff(e) << "\n";
    return os.str();
}

namespace harness {

void to_json(nlohmann::json& j, const Mismatch& m) {
    j = nlohmann::json{{"location", m.location}, {"expected", m.expected}, {"actual", m.actual}};
}

void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"check", r.check},
                       {"params", r.params},
                       {"status", status(r)},
                       {"mismatches", r.mismatches},
                       {"counts", r.counts}};
    if (r.series) j["series"] = *r.series;
    if (!r.note.empty()) j["note"] = r.note;
}

}  // namespace harness

}  // namespace nbly
