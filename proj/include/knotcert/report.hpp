#pragma once

#include <string>

#include "knotcert/homotopy.hpp"

namespace knotcert {

/// Line-oriented, diff-friendly certificate reports. All rationals appear as
/// "p/q" text; nothing is ever rounded. Deserializing a report and
/// re-validating it against the input polygon reproduces every verdict.
std::string serialize_certificate(const IsotopyCertificate& cert);
IsotopyCertificate parse_certificate(const std::string& text);

std::string serialize_push(const PushCertificate& cert);
PushCertificate parse_push(const std::string& text);

std::string serialize_transition(const TransitionInterval& t);

/// Recheck a parsed certificate against the polygon it claims to certify:
/// monotone axes recomputed, every separation witness re-evaluated by exact
/// plane sides, enclosure evidence replayed, the diagram reprojected and the
/// class recomputed. Returns an empty string when everything holds, else the
/// first discrepancy.
std::string revalidate_certificate(const ControlPolygon& cp, const IsotopyCertificate& cert);

/// Recheck a push certificate (sweep disjointness and end-polygon simplicity).
std::string revalidate_push(const ControlPolygon& cp, const PushCertificate& cert);

} // namespace knotcert
