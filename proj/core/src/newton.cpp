#include "adjalex/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace adjalex {

WeightVector primitive_vector(long p, long q) {
    require(p >= 0 && q >= 0 && (p > 0 || q > 0), ErrorKind::Precondition, "weight vector must be nonnegative and nonzero");
    long g = std::gcd(p, q);
    return WeightVector{p / g, q / g};
}

std::string to_string(const WeightVector& w) { return "(" + std::to_string(w.p) + "," + std::to_string(w.q) + ")"; }

bool NewtonData::nondegenerate() const {
    return std::none_of(faces.begin(), faces.end(), [](const NewtonFace& f) { return f.degenerate; });
}

std::vector<WeightVector> NewtonData::weights() const {
    std::vector<WeightVector> w;
    for (const auto& f : faces) w.push_back(f.weight);
    return w;
}

std::size_t Fan::index_of(const WeightVector& w) const {
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (vectors[i] == w) return i;
    fail(ErrorKind::Precondition, "vector " + to_string(w) + " not in fan");
}

void factor_face(NewtonFace& face) {
    face.roots.clear();
    face.irrational.clear();
    face.degenerate = false;
    for (auto& [part, mult] : squarefree_decomposition(face.z_poly)) {
        UniPoly rest = part;
        for (const auto& g : rational_roots(part)) {
            face.roots.push_back(FaceRoot{g, mult});
            rest = divmod(rest, UniPoly({-g, Rational(1)})).first;
        }
        if (rest.degree() > 0) face.irrational.push_back(IrrationalBlock{rest, mult});
        if (mult >= 2) face.degenerate = true;
    }
    std::sort(face.roots.begin(), face.roots.end(),
              [](const FaceRoot& a, const FaceRoot& b) { return a.gamma < b.gamma; });
}

namespace {

NewtonData build(const BiPoly& f, int bound) {
    require(!f.is_zero(), ErrorKind::Precondition, "Newton boundary of the zero polynomial");
    std::map<int, int> min_a;  // b -> min a
    for (const auto& [e, c] : f.terms()) {
        if (e.a >= bound) continue;
        auto it = min_a.find(e.b);
        if (it == min_a.end() || e.a < it->second) min_a[e.b] = e.a;
    }
    require(!min_a.empty(), ErrorKind::Truncation, "no terms below the truncation bound");
    std::vector<Exp> pts;
    for (auto [b, a] : min_a) pts.push_back(Exp{a, b});
    // start: minimal a, then minimal b
    Exp cur = *std::min_element(pts.begin(), pts.end(), [](const Exp& x, const Exp& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    int bmin = min_a.begin()->first;
    if (bound != kExact) {
        int end_a = min_a.begin()->second;
        require(bmin == 0 && end_a < bound, ErrorKind::Truncation,
                "Newton boundary not certified below truncation bound " + std::to_string(bound));
    }
    NewtonData nd;
    nd.vertices.push_back(cur);
    while (cur.b > bmin) {
        // minimise da/db, ties broken by the farthest point
        const Exp* best = nullptr;
        for (const auto& p : pts) {
            if (p.b >= cur.b) continue;
            if (!best) {
                best = &p;
                continue;
            }
            long lhs = static_cast<long>(p.a - cur.a) * (cur.b - best->b);
            long rhs = static_cast<long>(best->a - cur.a) * (cur.b - p.b);
            if (lhs < rhs || (lhs == rhs && p.b < best->b)) best = &p;
        }
        Exp nxt = *best;
        NewtonFace face;
        face.upper = cur;
        face.lower = nxt;
        long db = cur.b - nxt.b, da = nxt.a - cur.a;
        face.weight = primitive_vector(db, da);
        face.length = static_cast<int>(std::gcd(db, da));
        face.degree = face.weight.p * cur.a + face.weight.q * cur.b;
        face.face_poly = f.weighted_part(face.weight.p, face.weight.q, face.degree);
        // z-polynomial: point upper + i*(q,-p) contributes z^(L-i)
        std::vector<Rational> z(face.length + 1);
        for (const auto& [e, c] : face.face_poly.terms()) {
            long i = (e.a - cur.a) / face.weight.q;
            z[face.length - i] = c;
        }
        face.z_poly = UniPoly(std::move(z));
        face.leading = face.face_poly.coeff(cur.a, cur.b);
        factor_face(face);
        nd.faces.push_back(std::move(face));
        nd.vertices.push_back(nxt);
        cur = nxt;
    }
    return nd;
}

}  // namespace

NewtonData newton_boundary(const BiPoly& f) { return build(f, kExact); }

NewtonData newton_boundary(const TruncBiPoly& f) { return build(f.poly, f.bound); }

Fan canonical_subdivision(const std::vector<WeightVector>& raw) {
    require(raw.size() >= 2, ErrorKind::Precondition, "fan needs at least two vectors");
    for (const auto& w : raw) {
        require(w.p >= 0 && w.q >= 0 && std::gcd(w.p, w.q) == 1, ErrorKind::Precondition,
                "non-primitive vector " + to_string(w));
    }
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
        require(det(raw[i], raw[i + 1]) > 0, ErrorKind::Precondition,
                "vectors misordered at " + to_string(raw[i]) + ", " + to_string(raw[i + 1]));
    Fan fan;
    fan.vectors.push_back(raw.front());
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        WeightVector a = raw[i];
        const WeightVector& b = raw[i + 1];
        long n = det(a, b);
        while (n > 1) {
            long k = 1;
            while ((b.p + k * a.p) % n != 0 || (b.q + k * a.q) % n != 0) ++k;
            WeightVector x{(b.p + k * a.p) / n, (b.q + k * a.q) / n};
            fan.vectors.push_back(x);
            a = x;
            n = k;
        }
        fan.vectors.push_back(b);
    }
    return fan;
}

Fan face_fan(const NewtonData& nd) {
    std::vector<WeightVector> raw{kE1};
    for (const auto& f : nd.faces) raw.push_back(f.weight);
    raw.push_back(kE2);
    Fan fan = canonical_subdivision(raw);
    for (const auto& f : nd.faces) fan.face_markers.push_back(fan.index_of(f.weight));
    return fan;
}

long newton_number(const BiPoly& f) {
    require(!f.is_zero(), ErrorKind::Precondition, "newton_number of the zero polynomial");
    if (sgn(f.coeff(0, 0)) != 0) return 0;
    NewtonData nd = newton_boundary(f);
    const Exp& first = nd.vertices.front();
    const Exp& last = nd.vertices.back();
    require(first.a == 0 && last.b == 0, ErrorKind::Precondition, "newton_number: f is not convenient");
    require(nd.nondegenerate(), ErrorKind::Precondition, "newton_number: degenerate Newton boundary");
    // twice the area under the boundary, via the shoelace formula on
    // (0,0), (a,0), ..., (0,b)
    std::vector<Exp> poly{Exp{0, 0}};
    for (auto it = nd.vertices.rbegin(); it != nd.vertices.rend(); ++it) poly.push_back(*it);
    long twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Exp& p = poly[i];
        const Exp& q = poly[(i + 1) % poly.size()];
        twice += static_cast<long>(p.a) * q.b - static_cast<long>(q.a) * p.b;
    }
    return std::abs(twice) - last.a - first.b + 1;
}

long brieskorn_mu(long p, long q) {
    require(p >= 1 && q >= 1, ErrorKind::Precondition, "brieskorn_mu needs p, q >= 1");
    return (p - 1) * (q - 1);
}

std::string fan_to_dot(const Fan& fan) {
    std::ostringstream os;
    os << "graph fan {\n";
    for (std::size_t i = 0; i < fan.vectors.size(); ++i) {
        bool marked = std::find(fan.face_markers.begin(), fan.face_markers.end(), i) != fan.face_markers.end();
        os << "  n" << i << " [label=\"" << to_string(fan.vectors[i]) << "\"" << (marked ? ", shape=box" : "")
           << "];\n";
    }
    for (std::size_t i = 0; i + 1 < fan.vectors.size(); ++i) os << "  n" << i << " -- n" << i + 1 << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace adjalex
