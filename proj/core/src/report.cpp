#include "apery/claims.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace apery {

std::optional<Format> parse_format(std::string_view s) {
    if (s == "jsonl") return Format::Jsonl;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    return std::nullopt;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

std::string ms(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
}

}  // namespace

void write_report(const Report& r, Format f, std::ostream& os, bool timings) {
    switch (f) {
        case Format::Jsonl:
            for (const auto& o : r.outcomes) {
                nlohmann::ordered_json j;
                j["claim_id"] = o.claim_id;
                j["prime"] = o.prime;
                j["params"] = o.params;
                j["status"] = status_name(o.status);
                j["modulus"] = o.modulus;
                j["lhs"] = o.lhs;
                j["rhs"] = o.rhs;
                if (timings) j["elapsed_ms"] = o.elapsed_ms;
                if (!o.note.empty()) j["note"] = o.note;
                os << j.dump() << '\n';
            }
            break;
        case Format::Csv:
            os << "claim_id,prime,params,status,modulus,lhs,rhs" << (timings ? ",elapsed_ms" : "") << ",note\n";
            for (const auto& o : r.outcomes) {
                os << csv_field(o.claim_id) << ',' << o.prime << ',' << csv_field(o.params) << ','
                   << status_name(o.status) << ',' << o.modulus << ',' << o.lhs << ',' << o.rhs;
                if (timings) os << ',' << ms(o.elapsed_ms);
                os << ',' << csv_field(o.note) << '\n';
            }
            break;
        case Format::Text: {
            std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
            std::vector<std::string> order;
            for (const auto& o : r.outcomes) {
                if (o.status != Status::Holds && o.status != Status::NotApplicable) {
                    os << status_name(o.status) << ' ' << o.claim_id << " p=" << o.prime;
                    if (!o.params.empty()) os << ' ' << o.params;
                    if (!o.modulus.empty()) os << " mod " << o.modulus << " lhs=" << o.lhs << " rhs=" << o.rhs;
                    if (!o.note.empty()) os << " (" << o.note << ')';
                    os << '\n';
                }
                if (o.status == Status::NotApplicable) continue;
                auto [it, fresh] = tally.try_emplace(o.claim_id, 0, 0);
                if (fresh) order.push_back(o.claim_id);
                if (o.status == Status::Holds) ++it->second.first;
                ++it->second.second;
            }
            for (const auto& id : order)
                os << std::left << std::setw(16) << id << ' ' << tally[id].first << '/' << tally[id].second
                   << " HOLDS\n";
            os << "total:";
            for (Status s : {Status::Holds, Status::Fails, Status::NotApplicable, Status::Error}) {
                auto it = r.counts.find(s);
                os << ' ' << status_name(s) << '=' << (it == r.counts.end() ? 0 : it->second);
            }
            os << '\n';
            break;
        }
    }
}

}  // namespace apery
