#include "minkorder/json_io.hpp"

#include "minkorder/errors.hpp"

namespace minkorder {

namespace {

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON input");
    return j;
}

Rational rational_from_json(const json& j, const char* what) {
    if (!j.is_string()) throw input_error(std::string(what) + " must be a rational string");
    return Rational::parse(j.get<std::string>());
}

RatVec vec_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
    RatVec v;
    v.reserve(j.size());
    for (const auto& c : j) v.push_back(rational_from_json(c, what));
    return v;
}

json vec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.str());
    return a;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<int>();
}

} // namespace

EventSet events_from_json(const json& j) {
    if (!j.is_object()) throw input_error("event file must be a JSON object");
    EventSet es;
    es.n = int_field(j, "n");
    if (!j.contains("events") || !j["events"].is_array())
        throw input_error("missing \"events\" array");
    for (const auto& ej : j["events"]) {
        if (!ej.is_object() || !ej.contains("t") || !ej.contains("x"))
            throw input_error("each event needs fields \"t\" and \"x\"");
        Event e;
        e.t = rational_from_json(ej["t"], "event time");
        e.x = vec_from_json(ej["x"], "event space coordinates");
        es.events.push_back(std::move(e));
    }
    es.validate();
    return es;
}

EventSet events_from_string(const std::string& text) { return events_from_json(parse_text(text)); }

json events_to_json(const EventSet& es) {
    json out;
    out["n"] = es.n;
    json evs = json::array();
    for (const auto& e : es.events) evs.push_back({{"t", e.t.str()}, {"x", vec_to_json(e.x)}});
    out["events"] = evs;
    return out;
}

PointSet points_from_json(const json& j) {
    if (!j.is_object()) throw input_error("point file must be a JSON object");
    PointSet ps;
    ps.n = int_field(j, "n");
    if (!j.contains("points") || !j["points"].is_array())
        throw input_error("missing \"points\" array");
    for (const auto& pj : j["points"]) ps.points.push_back(vec_from_json(pj, "point"));
    ps.validate();
    return ps;
}

PointSet points_from_string(const std::string& text) { return points_from_json(parse_text(text)); }

json perm_to_json(const Perm& p) {
    json a = json::array();
    for (int i : p) a.push_back(i + 1);
    return a;
}

json order_set_to_json(const OrderSet& os) {
    json out;
    out["ball_restricted"] = os.ball_restricted;
    out["count"] = os.orders.size();
    json orders = json::array();
    for (const auto& p : os.orders) orders.push_back(perm_to_json(p));
    out["orders"] = orders;
    json wits = json::array();
    for (const auto& w : os.witnesses)
        wits.push_back({{"order", perm_to_json(w.order)}, {"v", vec_to_json(w.velocity)}});
    out["witnesses"] = wits;
    return out;
}

json poly_to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

json poset_to_json(const IntersectionPoset& ip) {
    json out;
    out["dim"] = ip.ambient_dim;
    auto covers = ip.covers();
    json elems = json::array();
    for (size_t i = 0; i < ip.flats.size(); ++i) {
        const auto& f = ip.flats[i];
        json e;
        e["index"] = i;
        e["dim"] = f.dim;
        e["mu"] = f.mu.get_str();
        e["covers"] = covers[i];
        e["defining"] = json::array();
        for (int h : f.defining) e["defining"].push_back(h);
        elems.push_back(std::move(e));
    }
    out["elements"] = elems;
    return out;
}

json sweep_to_json(const CriticalVelocityTable& table, const LambdaSequence& lambda,
                   const std::vector<int>& word) {
    json out;
    json v = json::object();
    for (const auto& [pr, val] : table)
        v["(" + std::to_string(pr.first + 1) + "," + std::to_string(pr.second + 1) + ")"] =
            val.str();
    out["v"] = v;
    json lam = json::array();
    for (const auto& p : lambda.perms) lam.push_back(perm_to_json(p));
    out["lambda"] = lam;
    out["word"] = word;
    return out;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

} // namespace minkorder
