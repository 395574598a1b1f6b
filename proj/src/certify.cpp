#include "knotcert/certify.hpp"

#include <algorithm>

#include "knotcert/errors.hpp"
#include "knotcert/predicates.hpp"

namespace knotcert {

namespace {

std::vector<Point3> shared_endpoints(const SubdivisionForest& forest, int i, int j, bool closed) {
    const int n = static_cast<int>(forest.pieces.size());
    std::vector<Point3> out;
    if (j == i + 1) out.push_back(forest.pieces[i].back());
    if (closed && i == 0 && j == n - 1) out.push_back(forest.pieces[0].front());
    return out;
}

Axis pick_axis(const AxisSet& s) {
    if (s.x) return Axis::X;
    if (s.y) return Axis::Y;
    return Axis::Z;
}

// normal candidates for one half-space: the canonical zero-component normal
// first, then a small rational grid of rotations within the line's
// orthogonal plane
std::vector<Point3> normal_candidates(const Point3& line_dir, const Point3& canonical) {
    std::vector<Point3> out{canonical};
    const Point3 second = cross3(line_dir, canonical);
    if (second.is_zero()) return out;
    const std::array<std::pair<long, long>, 6> mix{{{1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {2, 1}, {-2, 1}}};
    for (const auto& [num, den] : mix)
        out.push_back(canonical + Rational(Int(num), Int(den)) * second);
    return out;
}

EnclosureRepair attempt_enclosure(const SubdivisionForest& forest, const std::vector<ConvexHull3>& hulls,
                                  int piece_idx, std::pair<int, int> offending, bool closed,
                                  const Point3& nl, const Point3& nr) {
    const ControlPolygon& piece = forest.pieces[piece_idx];
    const Point3 mid = evaluate(piece, Rational(Int(1), Int(2)));
    EnclosureRepair rep;
    rep.piece = piece_idx;
    rep.offending = offending;
    rep.enclosure = build_enclosure(piece, mid, nl, nr);
    const Rational q(Int(1), Int(4));
    const std::array<Rational, 3> samples{q, Rational(Int(1), Int(2)), Rational(3) * q};
    rep.evidence = curve_in_enclosure(piece, rep.enclosure, samples);
    const int n = static_cast<int>(forest.pieces.size());
    // test the offending partner first so failing candidates die cheaply
    std::vector<int> order;
    const int partner = offending.first == piece_idx ? offending.second : offending.first;
    order.push_back(partner);
    for (int m = 0; m < n; ++m)
        if (m != piece_idx && m != partner) order.push_back(m);
    for (int m : order) {
        const int lo = std::min(m, piece_idx), hi = std::max(m, piece_idx);
        const auto allowed = shared_endpoints(forest, lo, hi, closed);
        EnclosureSeparation sep = enclosure_disjoint(rep.enclosure, hulls[m], allowed);
        if (sep.verdict == SeparationResult::Verdict::overlapping)
            throw certification_failure("enclosure of piece " + std::to_string(piece_idx) +
                                        " still overlaps hull of piece " + std::to_string(m));
        rep.against.emplace_back(m, std::move(sep));
    }
    std::sort(rep.against.begin(), rep.against.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rep;
}

EnclosureRepair try_repair(const SubdivisionForest& forest, const std::vector<ConvexHull3>& hulls,
                           int piece_idx, std::pair<int, int> offending, bool closed, bool grid_search) {
    const ControlPolygon& piece = forest.pieces[piece_idx];
    const Point3 mid = evaluate(piece, Rational(Int(1), Int(2)));
    const auto [nl0, nr0] = default_enclosure_normals(piece, mid);
    std::vector<Point3> ls{nl0}, rs{nr0};
    if (grid_search) {
        ls = normal_candidates(piece.front() - mid, nl0);
        rs = normal_candidates(piece.back() - mid, nr0);
    }
    std::string why;
    for (const Point3& nl : ls)
        for (const Point3& nr : rs) {
            try {
                return attempt_enclosure(forest, hulls, piece_idx, offending, closed, nl, nr);
            } catch (const certification_failure& e) {
                why = e.what();
            } catch (const input_error& e) {
                why = e.what();
            }
        }
    throw certification_failure("no enclosure normal candidate works for piece " +
                                std::to_string(piece_idx) + ": " + why);
}

} // namespace

IsotopyCertificate certify_isotopy(const ControlPolygon& cp, int level, const CertifyOptions& opts) {
    if (!cp.closed) throw input_error("certify_isotopy: control polygon is not closed");
    if (level < 1) throw input_error("certify_isotopy: level must be at least 1");

    IsotopyCertificate cert;
    cert.level = level;
    SubdivisionForest forest = subdivide_levels(cp, level);
    const int n = static_cast<int>(forest.pieces.size());

    for (int i = 0; i < n; ++i) {
        AxisSet axes = monotone_axes(forest.pieces[i]);
        if (axes.empty())
            throw certification_failure("level " + std::to_string(level) + ": piece " + std::to_string(i) +
                                        " is not strictly monotone in any coordinate");
        cert.pieces.push_back({i, pick_axis(axes), axes, convex_hull(forest.pieces[i].points)});
    }

    std::vector<ConvexHull3> hulls;
    hulls.reserve(n);
    for (const PieceCertificate& pc : cert.pieces) hulls.push_back(pc.hull);

    std::vector<std::pair<int, int>> offending;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            auto allowed = shared_endpoints(forest, i, j, true);
            SeparationResult r = separate(hulls[i], hulls[j], allowed);
            if (r.verdict == SeparationResult::Verdict::overlapping) {
                if (adjacent)
                    throw certification_failure("level " + std::to_string(level) + ": adjacent pieces " +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                " overlap beyond their shared endpoint");
                offending.emplace_back(i, j);
            }
            cert.separations.push_back({i, j, std::move(allowed), std::move(r)});
        }
    }

    if (!offending.empty()) {
        if (!opts.enclosure_repair)
            throw certification_failure("level " + std::to_string(level) + ": hulls of pieces " +
                                        std::to_string(offending[0].first) + " and " +
                                        std::to_string(offending[0].second) + " overlap");
        std::vector<int> repaired;
        for (const auto& pair : offending) {
            const bool covered = std::any_of(repaired.begin(), repaired.end(), [&](int p) {
                return p == pair.first || p == pair.second;
            });
            if (covered) continue;
            std::string why;
            bool done = false;
            for (int candidate : {pair.second, pair.first}) {
                try {
                    cert.enclosures.push_back(
                        try_repair(forest, hulls, candidate, pair, true, opts.normal_grid_search));
                    repaired.push_back(candidate);
                    done = true;
                    break;
                } catch (const certification_failure& e) {
                    why = e.what();
                } catch (const input_error& e) {
                    why = e.what();
                }
            }
            if (!done)
                throw certification_failure("level " + std::to_string(level) + ": hulls of pieces " +
                                            std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                                            " overlap and enclosure repair failed: " + why);
        }
    }

    cert.refinement = forest.refinement_vertices();
    const PLKnot refinement(cert.refinement);
    const SimplicityCertificate simple = is_simple(refinement);
    if (!simple.simple())
        throw certification_failure("level " + std::to_string(level) + ": PL refinement is not simple");

    bool projected = false;
    std::string why;
    for (Axis drop : {Axis::Z, Axis::X, Axis::Y}) {
        try {
            cert.diagram = project_diagram(refinement, drop);
            cert.diagram_axis = drop;
            projected = true;
            break;
        } catch (const degenerate_projection& e) {
            why = e.what();
        }
    }
    if (!projected)
        throw certification_failure("level " + std::to_string(level) +
                                    ": no regular projection among XY, YZ, XZ (" + why + ")");
    cert.pl_knot_class = classify(cert.diagram);
    return cert;
}

std::pair<KnotClass, IsotopyCertificate> bezier_knot_type(const ControlPolygon& cp, int max_level) {
    if (!cp.closed) throw input_error("bezier_knot_type: control polygon is not closed");
    std::string last;
    for (int level = 1; level <= max_level; ++level) {
        try {
            IsotopyCertificate cert = certify_isotopy(cp, level);
            KnotClass cls = cert.pl_knot_class;
            return {std::move(cls), std::move(cert)};
        } catch (const certification_failure& e) {
            last = e.what();
        }
    }
    throw certification_failure("no certificate up to level " + std::to_string(max_level) +
                                "; last obstruction: " + last);
}

TriSegHit triangle_segment_intersection(const Point3& t0, const Point3& t1, const Point3& t2,
                                        const Segment3& s) {
    const Point3 n = cross3(t1 - t0, t2 - t0);
    TriSegHit hit;

    if (n.is_zero()) {
        // degenerate triangle: its convex hull is a segment (or point)
        const ConvexHull3 h = convex_hull(std::array<Point3, 3>{t0, t1, t2});
        if (h.dim == HullDim::point) {
            const Point3& p = h.vertices[0];
            const Point3 d = s.q - s.p;
            if (cross3(d, p - s.p).is_zero()) {
                const Rational t = dot3(p - s.p, d) / dot3(d, d);
                if (t.sign() >= 0 && t <= Rational(1)) {
                    hit.kind = TriSegHit::Kind::point;
                    hit.a = p;
                }
            }
            return hit;
        }
        const Segment3 tri_seg{h.vertices[0], h.vertices[1]};
        const Point3 u = tri_seg.q - tri_seg.p;
        const Point3 v = s.q - s.p;
        if (cross3(u, v).is_zero() && cross3(u, s.p - tri_seg.p).is_zero()) {
            // collinear: exact overlap interval in s's parameter
            const Rational dd = dot3(v, v);
            Rational a0 = dot3(tri_seg.p - s.p, v) / dd;
            Rational a1 = dot3(tri_seg.q - s.p, v) / dd;
            Rational lo = max(min(a0, a1), Rational(0));
            Rational hi = min(max(a0, a1), Rational(1));
            if (lo > hi) return hit;
            hit.a = s.p + lo * v;
            hit.b = s.p + hi * v;
            hit.kind = lo == hi ? TriSegHit::Kind::point : TriSegHit::Kind::segment;
            return hit;
        }
        const Seg3Hit sh = seg3_intersection(tri_seg, s);
        if (sh.kind == Seg3Hit::Kind::disjoint) return hit;
        hit.kind = TriSegHit::Kind::point;
        hit.a = sh.at;
        return hit;
    }

    auto inward = [&](const Point3& u, const Point3& v) { return cross3(n, v - u); };
    const std::array<std::pair<Point3, Point3>, 3> edges{{{t0, t1}, {t1, t2}, {t2, t0}}};

    auto clip_in_plane = [&](const Point3& p, const Point3& q) {
        // intersect the in-plane segment p->q with the triangle
        Rational lo(0), hi(1);
        const Point3 d = q - p;
        for (const auto& [u, v] : edges) {
            const Point3 w = inward(u, v);
            const Rational f0 = dot3(p - u, w);
            const Rational fd = dot3(d, w);
            if (fd.is_zero()) {
                if (f0.sign() < 0) { lo = Rational(1); hi = Rational(0); break; }
                continue;
            }
            const Rational t = -f0 / fd;
            if (fd.sign() > 0)
                lo = max(lo, t);
            else
                hi = min(hi, t);
        }
        if (lo > hi) return;
        hit.a = p + lo * d;
        hit.b = p + hi * d;
        hit.kind = lo == hi ? TriSegHit::Kind::point : TriSegHit::Kind::segment;
    };

    const Rational fp = dot3(s.p - t0, n);
    const Rational fq = dot3(s.q - t0, n);
    if (fp.sign() * fq.sign() > 0) return hit;
    if (fp.is_zero() && fq.is_zero()) {
        clip_in_plane(s.p, s.q);
        return hit;
    }
    const Rational t = fp / (fp - fq);
    const Point3 x = s.p + t * (s.q - s.p);
    for (const auto& [u, v] : edges)
        if (dot3(x - u, inward(u, v)).sign() < 0) return hit;
    hit.kind = TriSegHit::Kind::point;
    hit.a = x;
    return hit;
}

PushCertificate certify_push(const ControlPolygon& cp, int vertex, const Point3& target) {
    if (!cp.closed) throw input_error("certify_push: control polygon is not closed");
    const int last = static_cast<int>(cp.points.size()) - 1;
    if (vertex <= 0 || vertex >= last)
        throw input_error("certify_push: vertex must be an interior index (not the duplicated endpoint)");

    const PLKnot knot = PLKnot::from_closed_polygon(cp);
    if (!is_simple(knot).simple())
        throw input_error("certify_push: starting polygon is not a simple PL knot");

    const int n = knot.edge_count();
    const int v = vertex; // knot vertex index equals polygon index here
    const Point3 start = knot.vertices[v];
    const Point3& prev = knot.vertices[(v + n - 1) % n];
    const Point3& next = knot.vertices[(v + 1) % n];

    PushCertificate cert;
    cert.vertex = vertex;
    cert.start = start;
    cert.target = target;
    cert.tri_prev = {prev, start, target};
    cert.tri_next = {next, start, target};

    if (!(start == target)) {
        for (int e = 0; e < n; ++e) {
            if (e == v || (e + 1) % n == v) continue; // edges incident to the moved vertex sweep
            const Segment3 seg = knot.edge(e);
            struct Tri {
                const std::array<Point3, 3>& t;
                const Point3& hinge;
            };
            for (const auto& [tri, hinge] : {Tri{cert.tri_prev, prev}, Tri{cert.tri_next, next}}) {
                const TriSegHit h = triangle_segment_intersection(tri[0], tri[1], tri[2], seg);
                if (h.kind == TriSegHit::Kind::empty) continue;
                const bool edge_at_hinge = seg.p == hinge || seg.q == hinge;
                if (h.kind == TriSegHit::Kind::point && edge_at_hinge && h.a == hinge) continue;
                const Point3 witness = (h.kind == TriSegHit::Kind::segment && h.a == hinge) ? h.b : h.a;
                throw certification_failure("push sweep of vertex " + std::to_string(vertex) + " hits edge " +
                                            std::to_string(e) + " at " + witness.str());
            }
            ++cert.edges_checked;
        }
    }

    std::vector<Point3> moved = cp.points;
    moved[v] = target;
    if (v == 0 || v == last) moved[0] = moved[last] = target; // unreachable by precondition
    const ControlPolygon moved_cp(moved);
    if (!is_simple(PLKnot::from_closed_polygon(moved_cp)).simple())
        throw certification_failure("push result is not a simple PL knot");
    return cert;
}

} // namespace knotcert
