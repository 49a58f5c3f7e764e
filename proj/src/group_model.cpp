#include "polyplan/group_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polyplan/errors.hpp"

namespace polyplan {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

GroupElement slice(const GroupElement& a, std::size_t off, std::size_t len) {
    return GroupElement{std::vector<double>(a.coords.begin() + static_cast<std::ptrdiff_t>(off),
                                            a.coords.begin() + static_cast<std::ptrdiff_t>(off + len))};
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// ---------------------------------------------------------------------------
// Circle: unit complex numbers (x, y).
// ---------------------------------------------------------------------------

// Complex product. Multiplying by the exact identity (1, +/-0) or the exact
// antipode (-1, 0) is bit-exact; no renormalization happens here, since it
// would break that exactness.
void circle_mul(const double* a, const double* b, double* out) {
    out[0] = a[0] * b[0] - a[1] * b[1];
    out[1] = a[0] * b[1] + a[1] * b[0];
}

void circle_inv(const double* a, double* out) {
    out[0] = a[0];
    out[1] = -a[1];
}

// Geodesic angle. For bitwise-equal inputs the cross term cancels exactly and
// the result is 0.0.
double circle_dist(const double* a, const double* b) {
    const double dot = a[0] * b[0] + a[1] * b[1];
    const double cross = a[0] * b[1] - a[1] * b[0];
    return std::fabs(std::atan2(cross, dot));
}

bool circle_in_cover(int k, const double* a) {
    if (k == 0) return !(a[0] == -1.0 && a[1] == 0.0);
    return !(a[0] == 1.0 && a[1] == 0.0);
}

// H_0: constant-speed shortest arc to 1. For a == (1, +/-0) the angle is
// +/-0 and the output reproduces the identity bit-exactly at every t.
void circle_contract0(const double* a, double t, double* out) {
    const double theta = std::atan2(a[1], a[0]);
    const double ang = theta * (1.0 - t);
    out[0] = std::cos(ang);
    out[1] = std::sin(ang);
}

// H_1: shortest arc to -1 inside S^1 \ {1} on [0,1/2], then the fixed lower
// semicircle from -1 to 1 through -i on [1/2,1].
void circle_contract1(const double* a, double t, double* out) {
    double ang;
    if (t <= 0.5) {
        double theta = std::atan2(a[1], a[0]);  // (-pi, pi], nonzero on N_1
        if (theta < 0.0) theta += 2.0 * kPi;    // chart (0, 2*pi) on N_1
        ang = theta + (kPi - theta) * (2.0 * t);
    } else {
        ang = 2.0 * kPi * t;  // pi -> 2*pi, passing 3*pi/2 = -i
    }
    out[0] = std::cos(ang);
    out[1] = std::sin(ang);
}

// ---------------------------------------------------------------------------
// Sphere3: unit quaternions (w, x, y, z).
// ---------------------------------------------------------------------------

void quat_mul(const double* a, const double* b, double* out) {
    out[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
    out[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
    out[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
    out[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
}

void quat_inv(const double* a, double* out) {
    out[0] = a[0];
    out[1] = -a[1];
    out[2] = -a[2];
    out[3] = -a[3];
}

double quat_dot(const double* a, const double* b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// Great-circle angle, computed as 2*atan2(|a-b|, |a+b|). This equals the
// arccos of the dot product but stays well-conditioned at both ends of the
// range: bitwise-equal inputs give exactly 0, antipodal ones exactly pi.
double quat_dist(const double* a, const double* b) {
    double diff2 = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double d = a[i] - b[i];
        const double s = a[i] + b[i];
        diff2 += d * d;
        sum2 += s * s;
    }
    return 2.0 * std::atan2(std::sqrt(diff2), std::sqrt(sum2));
}

bool quat_in_cover(int k, const double* a) {
    if (k == 0) return !(a[0] == -1.0 && a[1] == 0.0 && a[2] == 0.0 && a[3] == 0.0);
    return !(a[0] == 1.0 && a[1] == 0.0 && a[2] == 0.0 && a[3] == 0.0);
}

// Great-circle interpolation from a to the constant target. Returns a
// unchanged when the angle is exactly zero, which keeps the k = 0 contraction
// bit-exact at the identity.
void quat_slerp_to(const double* a, const double* target, double t, double* out) {
    const double omega = std::acos(clamp_unit(quat_dot(a, target)));
    if (omega == 0.0) {
        for (int i = 0; i < 4; ++i) out[i] = a[i];
        return;
    }
    const double s = std::sin(omega);
    const double ca = std::sin((1.0 - t) * omega) / s;
    const double cb = std::sin(t * omega) / s;
    double norm2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        out[i] = ca * a[i] + cb * target[i];
        norm2 += out[i] * out[i];
    }
    const double norm = std::sqrt(norm2);
    for (int i = 0; i < 4; ++i) out[i] /= norm;
}

constexpr double kQuatIdentity[4] = {1.0, 0.0, 0.0, 0.0};
constexpr double kQuatAntipode[4] = {-1.0, 0.0, 0.0, 0.0};

void quat_contract0(const double* a, double t, double* out) {
    quat_slerp_to(a, kQuatIdentity, t, out);
}

// H_1: great circle to -1 on [0,1/2] (the arc is shorter than pi, so it
// avoids 1), then the fixed embedded circle (cos, sin, 0, 0) from -1 to 1.
void quat_contract1(const double* a, double t, double* out) {
    if (t <= 0.5) {
        quat_slerp_to(a, kQuatAntipode, 2.0 * t, out);
    } else {
        const double ang = 2.0 * kPi * t;
        out[0] = std::cos(ang);
        out[1] = std::sin(ang);
        out[2] = 0.0;
        out[3] = 0.0;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupModel
// ---------------------------------------------------------------------------

GroupModel GroupModel::circle() {
    GroupModel g;
    g.kind_ = Kind::Circle;
    g.cat_ = 1;
    g.diameter_ = kPi;
    g.coord_count_ = 2;
    return g;
}

GroupModel GroupModel::sphere3() {
    GroupModel g;
    g.kind_ = Kind::Sphere3;
    g.cat_ = 1;
    g.diameter_ = kPi;
    g.coord_count_ = 4;
    return g;
}

GroupModel GroupModel::product(std::vector<GroupModel> factors) {
    if (factors.empty()) throw ValidationError("product group needs at least one factor");
    GroupModel g;
    g.kind_ = Kind::Product;
    g.cat_ = 0;
    g.diameter_ = 0.0;
    g.coord_count_ = 0;
    for (const auto& f : factors) {
        g.cat_ += f.cat_;
        g.diameter_ += f.diameter_;
        g.coord_count_ += f.coord_count_;
    }
    g.factors_ = std::move(factors);
    return g;
}

GroupElement GroupModel::identity() const {
    GroupElement e;
    e.coords.assign(coord_count_, 0.0);
    switch (kind_) {
        case Kind::Circle:
        case Kind::Sphere3:
            e.coords[0] = 1.0;
            break;
        case Kind::Product: {
            std::size_t off = 0;
            for (const auto& f : factors_) {
                e.coords[off] = 1.0;
                off += f.coord_count_;
            }
            break;
        }
    }
    return e;
}

GroupElement GroupModel::antipode() const {
    GroupElement a = identity();
    std::size_t off = 0;
    if (kind_ == Kind::Product) {
        for (const auto& f : factors_) {
            a.coords[off] = -1.0;
            off += f.coord_count_;
        }
    } else {
        a.coords[0] = -1.0;
    }
    return a;
}

GroupElement GroupModel::normalized(std::vector<double> raw) const {
    if (raw.size() != coord_count_) {
        std::ostringstream msg;
        msg << "element has " << raw.size() << " coordinates, expected " << coord_count_;
        throw ValidationError(msg.str());
    }
    // Normalize leaf blocks independently.
    std::size_t off = 0;
    auto normalize_block = [&raw](std::size_t start, std::size_t len) {
        double norm2 = 0.0;
        for (std::size_t i = start; i < start + len; ++i) {
            if (!std::isfinite(raw[i])) throw ValidationError("non-finite element coordinate");
            norm2 += raw[i] * raw[i];
        }
        const double norm = std::sqrt(norm2);
        if (!(norm > 1e-12)) throw ValidationError("element coordinates have near-zero norm");
        for (std::size_t i = start; i < start + len; ++i) raw[i] /= norm;
    };
    switch (kind_) {
        case Kind::Circle:
            normalize_block(0, 2);
            break;
        case Kind::Sphere3:
            normalize_block(0, 4);
            break;
        case Kind::Product:
            for (const auto& f : factors_) {
                // recurse through a temporary view
                std::vector<double> part(raw.begin() + static_cast<std::ptrdiff_t>(off),
                                         raw.begin() + static_cast<std::ptrdiff_t>(off + f.coord_count_));
                GroupElement sub = f.normalized(std::move(part));
                std::copy(sub.coords.begin(), sub.coords.end(),
                          raw.begin() + static_cast<std::ptrdiff_t>(off));
                off += f.coord_count_;
            }
            break;
    }
    return GroupElement{std::move(raw)};
}

namespace {

void check_arity(const GroupModel& g, const GroupElement& a) {
    if (a.coords.size() != g.coord_count()) {
        throw std::invalid_argument("group element arity does not match its model");
    }
}

}  // namespace

GroupElement GroupModel::multiply(const GroupElement& a, const GroupElement& b) const {
    check_arity(*this, a);
    check_arity(*this, b);
    GroupElement out;
    out.coords.assign(coord_count_, 0.0);
    switch (kind_) {
        case Kind::Circle:
            circle_mul(a.coords.data(), b.coords.data(), out.coords.data());
            break;
        case Kind::Sphere3:
            quat_mul(a.coords.data(), b.coords.data(), out.coords.data());
            break;
        case Kind::Product: {
            std::size_t off = 0;
            for (const auto& f : factors_) {
                if (f.kind_ == Kind::Circle) {
                    circle_mul(a.coords.data() + off, b.coords.data() + off, out.coords.data() + off);
                } else if (f.kind_ == Kind::Sphere3) {
                    quat_mul(a.coords.data() + off, b.coords.data() + off, out.coords.data() + off);
                } else {
                    GroupElement fo = f.multiply(slice(a, off, f.coord_count_),
                                                 slice(b, off, f.coord_count_));
                    std::copy(fo.coords.begin(), fo.coords.end(),
                              out.coords.begin() + static_cast<std::ptrdiff_t>(off));
                }
                off += f.coord_count_;
            }
            break;
        }
    }
    return out;
}

GroupElement GroupModel::inverse(const GroupElement& a) const {
    check_arity(*this, a);
    GroupElement out;
    out.coords.assign(coord_count_, 0.0);
    switch (kind_) {
        case Kind::Circle:
            circle_inv(a.coords.data(), out.coords.data());
            break;
        case Kind::Sphere3:
            quat_inv(a.coords.data(), out.coords.data());
            break;
        case Kind::Product: {
            std::size_t off = 0;
            for (const auto& f : factors_) {
                GroupElement fo = f.inverse(slice(a, off, f.coord_count_));
                std::copy(fo.coords.begin(), fo.coords.end(),
                          out.coords.begin() + static_cast<std::ptrdiff_t>(off));
                off += f.coord_count_;
            }
            break;
        }
    }
    return out;
}

double GroupModel::distance(const GroupElement& a, const GroupElement& b) const {
    check_arity(*this, a);
    check_arity(*this, b);
    switch (kind_) {
        case Kind::Circle:
            return circle_dist(a.coords.data(), b.coords.data());
        case Kind::Sphere3:
            return quat_dist(a.coords.data(), b.coords.data());
        case Kind::Product: {
            double sum = 0.0;
            std::size_t off = 0;
            for (const auto& f : factors_) {
                if (f.kind_ == Kind::Circle) {
                    sum += circle_dist(a.coords.data() + off, b.coords.data() + off);
                } else if (f.kind_ == Kind::Sphere3) {
                    sum += quat_dist(a.coords.data() + off, b.coords.data() + off);
                } else {
                    sum += f.distance(slice(a, off, f.coord_count_), slice(b, off, f.coord_count_));
                }
                off += f.coord_count_;
            }
            return sum;
        }
    }
    return 0.0;
}

bool GroupModel::in_cover_set(int k, const GroupElement& a) const {
    check_arity(*this, a);
    require(k >= 0 && k <= cat_, "cover index out of range");
    switch (kind_) {
        case Kind::Circle:
            return circle_in_cover(k, a.coords.data());
        case Kind::Sphere3:
            return quat_in_cover(k, a.coords.data());
        case Kind::Product:
            // N_k = elements whose per-factor least indices sum to k.
            return least_cover_index(a) == k;
    }
    return false;
}

int GroupModel::least_cover_index(const GroupElement& a) const {
    check_arity(*this, a);
    switch (kind_) {
        case Kind::Circle:
            return circle_in_cover(0, a.coords.data()) ? 0 : 1;
        case Kind::Sphere3:
            return quat_in_cover(0, a.coords.data()) ? 0 : 1;
        case Kind::Product: {
            int sum = 0;
            std::size_t off = 0;
            for (const auto& f : factors_) {
                sum += f.least_cover_index(slice(a, off, f.coord_count_));
                off += f.coord_count_;
            }
            return sum;
        }
    }
    throw std::logic_error("cover does not contain the element (broken group model)");
}

GroupElement GroupModel::contract(int k, const GroupElement& a, double t) const {
    check_arity(*this, a);
    require(k >= 0 && k <= cat_, "cover index out of range");
    require(t >= 0.0 && t <= 1.0, "contraction parameter outside [0,1]");
    GroupElement out;
    out.coords.assign(coord_count_, 0.0);
    switch (kind_) {
        case Kind::Circle:
            require(circle_in_cover(k, a.coords.data()), "element not in the requested cover set");
            if (k == 0) {
                circle_contract0(a.coords.data(), t, out.coords.data());
            } else {
                circle_contract1(a.coords.data(), t, out.coords.data());
            }
            break;
        case Kind::Sphere3:
            require(quat_in_cover(k, a.coords.data()), "element not in the requested cover set");
            if (k == 0) {
                quat_contract0(a.coords.data(), t, out.coords.data());
            } else {
                quat_contract1(a.coords.data(), t, out.coords.data());
            }
            break;
        case Kind::Product: {
            // Contract every factor along its own least cover set.
            require(least_cover_index(a) == k, "element not in the requested cover set");
            std::size_t off = 0;
            for (const auto& f : factors_) {
                const GroupElement fa = slice(a, off, f.coord_count_);
                GroupElement fo = f.contract(f.least_cover_index(fa), fa, t);
                std::copy(fo.coords.begin(), fo.coords.end(),
                          out.coords.begin() + static_cast<std::ptrdiff_t>(off));
                off += f.coord_count_;
            }
            break;
        }
    }
    return out;
}

GroupElement GroupModel::sample(Rng& rng) const {
    GroupElement out;
    out.coords.assign(coord_count_, 0.0);
    switch (kind_) {
        case Kind::Circle: {
            const double theta = (2.0 * rng.uniform01() - 1.0) * kPi;
            out.coords[0] = std::cos(theta);
            out.coords[1] = std::sin(theta);
            break;
        }
        case Kind::Sphere3: {
            double norm = 0.0;
            do {
                double norm2 = 0.0;
                for (int i = 0; i < 4; ++i) {
                    out.coords[static_cast<std::size_t>(i)] = rng.normal();
                    norm2 += out.coords[static_cast<std::size_t>(i)] *
                             out.coords[static_cast<std::size_t>(i)];
                }
                norm = std::sqrt(norm2);
            } while (norm < 1e-3);
            for (int i = 0; i < 4; ++i) out.coords[static_cast<std::size_t>(i)] /= norm;
            break;
        }
        case Kind::Product: {
            std::size_t off = 0;
            for (const auto& f : factors_) {
                GroupElement fo = f.sample(rng);
                std::copy(fo.coords.begin(), fo.coords.end(),
                          out.coords.begin() + static_cast<std::ptrdiff_t>(off));
                off += f.coord_count_;
            }
            break;
        }
    }
    return out;
}

std::vector<GroupElement> GroupModel::split(const GroupElement& a) const {
    check_arity(*this, a);
    if (kind_ != Kind::Product) return {a};
    std::vector<GroupElement> parts;
    parts.reserve(factors_.size());
    std::size_t off = 0;
    for (const auto& f : factors_) {
        parts.push_back(slice(a, off, f.coord_count_));
        off += f.coord_count_;
    }
    return parts;
}

GroupElement GroupModel::join(const std::vector<GroupElement>& parts) const {
    if (kind_ != Kind::Product) {
        require(parts.size() == 1, "join on a leaf model expects one part");
        check_arity(*this, parts[0]);
        return parts[0];
    }
    require(parts.size() == factors_.size(), "join arity does not match factor count");
    GroupElement out;
    out.coords.reserve(coord_count_);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        check_arity(factors_[i], parts[i]);
        out.coords.insert(out.coords.end(), parts[i].coords.begin(), parts[i].coords.end());
    }
    return out;
}

std::size_t total_coords(const std::vector<GroupModel>& models) {
    std::size_t n = 0;
    for (const auto& g : models) n += g.coord_count();
    return n;
}

}  // namespace polyplan
