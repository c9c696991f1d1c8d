#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace quermass {

// Symbolic atoms of the identity catalog. Every mean curvature integral
// carries the dimension of the space it is measured in, so mixing up "M_i of
// the projection inside the subspace" with "M_i of the projection as a
// flattened body of the ambient space" is a type error, not a silent bug.
//
//   Rho               parallel-body distance rho
//   Width             the constant width h
//   MciProj(r, i)     M^(r)_i of the projection, measured inside the r-plane
//   MciFlat(n, i)     M^(n)_i of the projection as a flattened n-dim body
//   MciBody(n, i)     M^(n)_i of the ambient body itself
//   VolProj(r)        r-dimensional volume of the projection
//   Quermass(n, i)    quermassintegral W^(n)_i
//   QuermassProj(r, i) quermassintegral W^(r)_i of the projection
//
// The enum order fixes the canonical monomial order used in serialized
// polynomials and golden files.
enum class AtomKind : int {
    VolProj = 0,
    MciProj = 1,
    MciFlat = 2,
    MciBody = 3,
    Quermass = 4,
    QuermassProj = 5,
    Width = 6,
    Rho = 7,
};

class Atom {
public:
    static Atom rho() { return Atom(AtomKind::Rho, 0, 0); }
    static Atom width() { return Atom(AtomKind::Width, 0, 0); }
    static Atom mci_proj(int r, int i) {
        check_mci(r, i, "MciProj");
        return Atom(AtomKind::MciProj, r, i);
    }
    static Atom mci_flat(int n, int i) {
        check_mci(n, i, "MciFlat");
        return Atom(AtomKind::MciFlat, n, i);
    }
    static Atom mci_body(int n, int i) {
        check_mci(n, i, "MciBody");
        return Atom(AtomKind::MciBody, n, i);
    }
    static Atom vol_proj(int r) {
        if (r < 1) throw std::invalid_argument("VolProj: need r >= 1");
        return Atom(AtomKind::VolProj, r, 0);
    }
    static Atom quermass(int n, int i) {
        check_quermass(n, i, "Quermass");
        return Atom(AtomKind::Quermass, n, i);
    }
    static Atom quermass_proj(int r, int i) {
        check_quermass(r, i, "QuermassProj");
        return Atom(AtomKind::QuermassProj, r, i);
    }

    AtomKind kind() const { return kind_; }
    int dim() const { return a_; }
    int index() const { return b_; }

    auto operator<=>(const Atom&) const = default;

    std::string str() const {
        switch (kind_) {
            case AtomKind::Rho: return "rho";
            case AtomKind::Width: return "h";
            case AtomKind::VolProj: return "V'_" + std::to_string(a_);
            case AtomKind::MciProj:
                return "M'(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
            case AtomKind::MciFlat:
                return "Mflat(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
            case AtomKind::MciBody:
                return "M(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
            case AtomKind::Quermass:
                return "W(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
            case AtomKind::QuermassProj:
                return "W'(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
        }
        return "?";
    }

private:
    Atom(AtomKind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

    static void check_mci(int d, int i, const char* what) {
        if (d < 1) throw std::invalid_argument(std::string(what) + ": need dim >= 1");
        if (i < 0 || i > d - 1)
            throw std::invalid_argument(std::string(what) + ": index out of range 0.." +
                                        std::to_string(d - 1));
    }
    static void check_quermass(int d, int i, const char* what) {
        if (d < 1) throw std::invalid_argument(std::string(what) + ": need dim >= 1");
        if (i < 0 || i > d)
            throw std::invalid_argument(std::string(what) + ": index out of range 0.." +
                                        std::to_string(d));
    }

    AtomKind kind_;
    int a_;  // dimension tag (r or n); 0 for rho/h
    int b_;  // integral index; 0 for rho/h/VolProj
};

}  // namespace quermass
