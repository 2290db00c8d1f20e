#include "drg/report.hpp"

#include <json.hpp>

namespace drg {

std::string VerificationReport::to_text() const {
    nlohmann::ordered_json root;
    root["checks"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["status"] = e.status;
        nlohmann::ordered_json jc = nlohmann::ordered_json::object();
        for (const auto& [k, v] : e.counts) jc[k] = v;
        je["counts"] = jc;
        if (!e.witness.empty()) je["witness"] = e.witness;
        root["checks"].push_back(je);
    }
    return root.dump(2) + "\n";
}

}  // namespace drg
