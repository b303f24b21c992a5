// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON serialization of the library's value types (nlohmann::json).

#pragma once

#include <json.hpp>

#include "wittcharge/metric_group.hpp"
#include "wittcharge/signatures.hpp"
#include "wittcharge/so_odd.hpp"
#include "wittcharge/witt.hpp"

namespace wittcharge {

using Json = nlohmann::ordered_json;

inline Json to_json(const CycloElem& x) {
    Json coeffs = Json::array();
    for (const BigRational& c : x.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

inline Json to_json(const RootOfUnity& r) {
    return Json{{"order", r.order()}, {"exp", r.exponent()}};
}

inline Json to_json(const SignatureSample& s) {
    Json values = Json::object();
    for (const auto& [k, v] : s.values) values[std::to_string(k)] = v;
    return Json{{"modulus", s.modulus}, {"values", values}};
}

inline Json to_json(const MetricGroup& g) {
    Json q = Json::object();
    for (const auto& [x, v] : g.qvals) {
        std::string key;
        for (size_t i = 0; i < x.size(); ++i)
            key += (i ? "," : "") + std::to_string(x[i]);
        q[key] = to_json(v);
    }
    return Json{{"orders", g.orders}, {"q", q}};
}

inline Json to_json(const SimpleData& s) {
    return Json{{"coords2", s.weight.coords2},
                {"twist", to_json(s.twist)},
                {"qdim", to_json(s.qdim)}};
}

inline Json to_json(const CategoryInvariants& inv, bool include_simples = false) {
    Json out{{"r", inv.rank},
             {"num_simples", static_cast<i64>(inv.simples.size())},
             {"fs_exponent", inv.fs_exponent},
             {"xi1", to_json(inv.xi1)},
             {"dim", to_json(inv.dim)},
             {"sqrt_dim", to_json(inv.sqrt_dim)}};
    if (include_simples) {
        Json simples = Json::array();
        for (const SimpleData& s : inv.simples) simples.push_back(to_json(s));
        out["simples"] = simples;
    }
    return out;
}

inline Json to_json(const WittWord& w, const KernelReport& rep) {
    Json out{{"word", w.to_string()},
             {"xi1", to_json(xi1_of(w))},
             {"in_kernel", rep.in_kernel}};
    if (rep.witness_k) out["witness_k"] = *rep.witness_k;
    else out["witness_k"] = nullptr;
    out["checks"] = Json::array({rep.reason});
    return out;
}

}  // namespace wittcharge
