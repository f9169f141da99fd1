#include "clband/arrangement.hpp"

namespace clband {

const char* to_string(ValidationCode code) {
    switch (code) {
        case ValidationCode::InvalidCoefficients: return "InvalidCoefficients";
        case ValidationCode::EmptyRealLocus: return "EmptyRealLocus";
        case ValidationCode::PointLocus: return "PointLocus";
        case ValidationCode::DoubleLine: return "DoubleLine";
        case ValidationCode::ReducibleConic: return "ReducibleConic";
        case ValidationCode::DuplicateCurve: return "DuplicateCurve";
    }
    return "?";
}

int Arrangement::index_of_label(const std::string& label) const {
    for (int k = 0; k < size(); ++k)
        if (curves[static_cast<size_t>(k)].label == label) return k;
    return -1;
}

namespace {

[[noreturn]] void reject(ValidationCode code, int idx, const std::string& what) {
    throw ValidationError(code, idx,
                          "curve " + std::to_string(idx) + ": " + what + " [" +
                              to_string(code) + "]");
}

// 3x3 determinant of the symmetric matrix of the quadratic (doubled to stay integral-friendly):
// M = [2A B D; B 2C E; D E 2F], det(M) = 2*det(classical) * 4 ... only the sign/zeroness is used.
Rational conic_matrix_det(const Curve& c) {
    Rational a = 2 * c.A, b = c.B, d = c.D;
    Rational e = 2 * c.C, f = c.E;
    Rational g = 2 * c.F;
    return a * (e * g - f * f) - b * (b * g - f * d) + d * (b * f - e * d);
}

void validate_conic(const Curve& c, int idx) {
    if (c.A == 0 && c.B == 0 && c.C == 0)
        reject(ValidationCode::InvalidCoefficients, idx, "conic with zero quadratic part");
    Rational det3 = conic_matrix_det(c);
    Rational disc = c.B * c.B - 4 * c.A * c.C;
    if (det3 != 0) {
        // irreducible conic; only ellipses can have empty or pointless real loci
        if (disc < 0) {
            auto [cx, cy] = c.center();
            Rational v = c.eval(cx, cy);
            // definite quadratic part: sign of A tells the orientation
            int inside = sign_of(v), outer = sign_of(c.A);
            if (inside == 0)
                reject(ValidationCode::PointLocus, idx, "real locus is a single point");
            if (inside == outer)
                reject(ValidationCode::EmptyRealLocus, idx, "real locus is empty");
        }
        return;  // parabola / hyperbola / real ellipse
    }
    // degenerate: factors into lines over C
    if (disc > 0)
        reject(ValidationCode::ReducibleConic, idx, "conic factors into two crossing lines");
    if (disc < 0)
        reject(ValidationCode::PointLocus, idx, "real locus is a single point");
    // disc == 0, det3 == 0: f is a quadratic in one linear form z = u x + v y,
    // f = a2 z^2 + a1 z + F with a2 = A/u^2 (or C/v^2), a1 = D/u (or E/v).
    Rational u = c.A != 0 ? 2 * c.A : c.B;
    Rational v = c.A != 0 ? c.B : 2 * c.C;
    Rational a2, a1;
    if (u != 0) {
        a2 = c.A / (u * u);
        a1 = c.D / u;
        if (a1 * v != c.E || a2 * v * v != c.C)
            throw std::logic_error("validate: degenerate conic not a function of one form");
    } else {
        a2 = c.C / (v * v);
        a1 = c.E / v;
        if (c.D != 0) throw std::logic_error("validate: degenerate conic not a function of one form");
    }
    Rational q_disc = a1 * a1 - 4 * a2 * c.F;
    if (q_disc == 0) reject(ValidationCode::DoubleLine, idx, "conic is a double line");
    if (q_disc > 0)
        reject(ValidationCode::ReducibleConic, idx, "conic factors into two parallel lines");
    reject(ValidationCode::EmptyRealLocus, idx, "real locus is empty (complex parallel lines)");
}

}  // namespace

Arrangement validate(std::vector<Curve> curves) {
    for (int i = 0; i < static_cast<int>(curves.size()); ++i) {
        Curve& c = curves[static_cast<size_t>(i)];
        if (c.label.empty()) c.label = "H" + std::to_string(i + 1);
        if (c.kind == CurveKind::Line) {
            if (c.D == 0 && c.E == 0)
                reject(ValidationCode::InvalidCoefficients, i, "line with a = b = 0");
            if (c.A != 0 || c.B != 0 || c.C != 0)
                reject(ValidationCode::InvalidCoefficients, i, "line with quadratic terms");
        } else {
            validate_conic(c, i);
        }
    }
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            if (same_locus(curves[i], curves[j]))
                reject(ValidationCode::DuplicateCurve, static_cast<int>(j),
                       "same zero locus as curve " + std::to_string(i));
    Arrangement arr;
    arr.curves = std::move(curves);
    return arr;
}

Arrangement deleted_arrangement(const Arrangement& arr, int h) {
    if (h < 0 || h >= arr.size()) throw std::invalid_argument("deleted_arrangement: bad index");
    Arrangement out;
    for (int k = 0; k < arr.size(); ++k)
        if (k != h) out.curves.push_back(arr[k]);
    return out;
}

}  // namespace clband
