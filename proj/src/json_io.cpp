#include "stratakit/json_io.hpp"

namespace stratakit {

Json to_json(const Int& v) {
    if (fits_int64(v)) return Json(to_int64(v));
    return Json(to_string(v));
}

Json to_json(const std::vector<Int>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

Json to_json(const Parity& p) { return Json{{"parity", bit_name(p.bit)}, {"conditional", p.conditional}}; }

Json to_json(const ComponentDescriptor& c) {
    Json out;
    out["kind"] = kind_tag(c.kind);
    if (c.kind == ComponentKind::Rotation) out["rotation"] = to_json(c.d);
    if (c.kind == ComponentKind::PowerLocus) out["power"] = to_json(c.d);
    if (c.parity) {
        out["parity"] = bit_name(c.parity->bit);
        out["conditional"] = c.parity->conditional;
    }
    if (c.primitive) out["primitive"] = *c.primitive;
    if (c.coincides_with) out["coincides_with"] = kind_tag(*c.coincides_with);
    out["provenance"] = c.provenance;
    return out;
}

Json to_json(const ClassificationResult& r) {
    Json comps = Json::array();
    for (const auto& c : r.components) comps.push_back(to_json(c));
    return Json{{"status", status_tag(r.status)}, {"components", comps}, {"notes", r.notes}};
}

Json to_json(const CoverProfile& p) {
    Json locals = Json::array();
    for (const auto& l : p.locals)
        locals.push_back(Json{{"preimages", to_json(l.r)}, {"ramification", to_json(l.ell)}, {"order", to_json(l.m_hat)}});
    return Json{{"locals", locals}, {"cover_genus", to_json(p.cover_genus)}, {"possibly_disconnected", p.possibly_disconnected}};
}

Json to_json(const MergeResult& m) {
    Json out{{"merged", to_json(m.merged.orders())}, {"genus", to_json(m.merged.genus)}};
    out["bound"] = m.bound ? to_json(*m.bound) : Json(nullptr);
    return out;
}

Json to_json(const OplusState& s) {
    return Json{{"genus", to_json(s.genus)},
                {"zero_order", to_json(s.zero_order)},
                {"other_orders", to_json(s.other_orders)},
                {"base_label", s.base_label},
                {"holomorphic_power", s.holomorphic_power},
                {"primitive", s.primitive}};
}

Json to_json(const NormalizeResult& r) {
    Json reps = Json::array();
    for (const auto& p : r.representatives) reps.push_back(to_json(p));
    return Json{{"representatives", reps},
                {"class_size", r.class_size},
                {"expanded", r.expanded},
                {"revisits", r.revisits},
                {"truncated", r.truncated},
                {"reached_floor", r.reached_floor}};
}

}  // namespace stratakit
