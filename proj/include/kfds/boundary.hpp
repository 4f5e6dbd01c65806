#pragma once

#include "kfds/common.hpp"

namespace kfds {

enum class BcKind {
    Dirichlet,      // ghost cells hold the boundary value
    Extrapolation,  // zero-order copy of the nearest interior cell
    Periodic,       // index wrap; must be set on both sides
    Reflective,     // mirror; SWE/2D walls (velocity negation handled per solver)
};

struct BcSide {
    BcKind kind = BcKind::Extrapolation;
    double value = 0.0;  // Dirichlet only
};

struct BoundaryCondition {
    BcSide left;
    BcSide right;

    static BoundaryCondition periodic() {
        return {{BcKind::Periodic, 0.0}, {BcKind::Periodic, 0.0}};
    }
    static BoundaryCondition extrapolation() {
        return {{BcKind::Extrapolation, 0.0}, {BcKind::Extrapolation, 0.0}};
    }
    static BoundaryCondition dirichlet(double left_value, double right_value) {
        return {{BcKind::Dirichlet, left_value}, {BcKind::Dirichlet, right_value}};
    }
    static BoundaryCondition reflective() {
        return {{BcKind::Reflective, 0.0}, {BcKind::Reflective, 0.0}};
    }

    bool is_periodic() const { return left.kind == BcKind::Periodic; }

    void validate() const {
        const bool lp = left.kind == BcKind::Periodic;
        const bool rp = right.kind == BcKind::Periodic;
        if (lp != rp) throw ConfigError("periodic BC must be set on both sides or neither");
    }
};

/// Returns u extended by `width` ghost cells on each side; result[width + j] = u[j].
inline ArrayXd pad_with_ghosts(const ArrayXd& u, const BoundaryCondition& bc, int width) {
    if (width != 1 && width != 2) throw ConfigError("ghost width must be 1 or 2");
    bc.validate();
    const int n = static_cast<int>(u.size());
    if (n < width) throw ConfigError("field too small for ghost width");
    ArrayXd ext(n + 2 * width);
    ext.segment(width, n) = u;
    for (int k = 1; k <= width; ++k) {
        switch (bc.left.kind) {
            case BcKind::Periodic: ext[width - k] = u[(n - k) % n]; break;
            case BcKind::Dirichlet: ext[width - k] = bc.left.value; break;
            case BcKind::Extrapolation: ext[width - k] = u[0]; break;
            case BcKind::Reflective: ext[width - k] = u[k - 1]; break;
        }
        switch (bc.right.kind) {
            case BcKind::Periodic: ext[width + n - 1 + k] = u[(k - 1) % n]; break;
            case BcKind::Dirichlet: ext[width + n - 1 + k] = bc.right.value; break;
            case BcKind::Extrapolation: ext[width + n - 1 + k] = u[n - 1]; break;
            case BcKind::Reflective: ext[width + n - 1 + k] = u[n - k]; break;
        }
    }
    return ext;
}

}  // namespace kfds
