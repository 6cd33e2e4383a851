#pragma once

#include <optional>
#include <string>
#include <utility>

#include "quadeuler/error.hpp"
#include "quadeuler/int_types.hpp"

namespace quadeuler {

// ============================================================================
// Fields
// ============================================================================

/// The base field enters only through the relations it imposes on the
/// subring Z<1> + Z<-1> of its Grothendieck-Witt ring.
struct FieldSpec {
    enum class Kind {
        QuadraticallyClosed,  // <-1> = <1>
        RealClosed,           // free: (rank, signature) separates elements
        FiniteOdd,            // 2<-1> = 2<1>; minus_one_square tells if <-1> = <1>
        Universal,            // no relations beyond <-1>^2 = <1>
    };

    Kind kind = Kind::Universal;
    bool minus_one_square = false;  // only meaningful for FiniteOdd

    [[nodiscard]] static FieldSpec quadratically_closed() {
        return {Kind::QuadraticallyClosed, false};
    }
    [[nodiscard]] static FieldSpec real_closed() { return {Kind::RealClosed, false}; }
    [[nodiscard]] static FieldSpec finite_odd(bool minus_one_is_square) {
        return {Kind::FiniteOdd, minus_one_is_square};
    }
    [[nodiscard]] static FieldSpec universal() { return {Kind::Universal, false}; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Kind::FiniteOdd || a.minus_one_square == b.minus_one_square;
    }

    [[nodiscard]] std::string name() const {
        switch (kind) {
            case Kind::QuadraticallyClosed: return "quadratically-closed";
            case Kind::RealClosed: return "real-closed";
            case Kind::FiniteOdd:
                return minus_one_square ? "finite-odd(-1 square)" : "finite-odd(-1 nonsquare)";
            case Kind::Universal: return "universal";
        }
        return "?";
    }
};

// ============================================================================
// GW elements
// ============================================================================

/// Element m<1> + n<-1> of GW(F), kept in the field's normal form:
///   QuadraticallyClosed, FiniteOdd(-1 square):  n = 0
///   FiniteOdd(-1 nonsquare):                    n in {0, 1} via 2<-1> = 2<1>
///   RealClosed, Universal:                      free
class GWElem {
public:
    GWElem(Int ones, Int minus_ones, FieldSpec field)
        : m_(std::move(ones)), n_(std::move(minus_ones)), field_(field) {
        normalize();
    }

    [[nodiscard]] static GWElem zero(FieldSpec f) { return {0, 0, f}; }
    [[nodiscard]] static GWElem unit(FieldSpec f) { return {1, 0, f}; }

    [[nodiscard]] const Int& ones() const { return m_; }
    [[nodiscard]] const Int& minus_ones() const { return n_; }
    [[nodiscard]] const FieldSpec& field() const { return field_; }
    [[nodiscard]] bool is_zero() const { return m_ == 0 && n_ == 0; }

    friend bool operator==(const GWElem& a, const GWElem& b) {
        return a.field_ == b.field_ && a.m_ == b.m_ && a.n_ == b.n_;
    }

    /// Canonical rendering `a + b·h`: the <-1> coefficient is absorbed into
    /// h maximally, e.g. 15<1> + 12<-1> renders "3 + 12h".
    [[nodiscard]] std::string render() const {
        Int a = m_ - n_;
        const Int& b = n_;
        if (a == 0 && b == 0) return "0";
        std::string s;
        if (a != 0) s = to_decimal(a);
        if (b != 0) {
            Int mag = b < 0 ? Int(-b) : b;
            if (s.empty()) {
                if (b < 0) s = "-";
            } else {
                s += b > 0 ? " + " : " - ";
            }
            if (mag != 1) s += to_decimal(mag);
            s += "h";
        }
        return s;
    }

private:
    void normalize() {
        switch (field_.kind) {
            case FieldSpec::Kind::QuadraticallyClosed:
                m_ += n_;
                n_ = 0;
                break;
            case FieldSpec::Kind::FiniteOdd:
                if (field_.minus_one_square) {
                    m_ += n_;
                    n_ = 0;
                } else {
                    Int keep = ((n_ % 2) + 2) % 2;  // 2<-1> = 2<1>: keep n mod 2
                    m_ += n_ - keep;
                    n_ = keep;
                }
                break;
            case FieldSpec::Kind::RealClosed:
            case FieldSpec::Kind::Universal: break;
        }
    }

    Int m_;
    Int n_;
    FieldSpec field_;
};

inline void require_same_field(const GWElem& a, const GWElem& b) {
    if (!(a.field() == b.field())) throw domain_error("GW arithmetic: field mismatch");
}

inline GWElem gw_add(const GWElem& a, const GWElem& b) {
    require_same_field(a, b);
    return {a.ones() + b.ones(), a.minus_ones() + b.minus_ones(), a.field()};
}

inline GWElem gw_neg(const GWElem& a) { return {-a.ones(), -a.minus_ones(), a.field()}; }

inline GWElem gw_sub(const GWElem& a, const GWElem& b) { return gw_add(a, gw_neg(b)); }

/// Bilinear product with <1> the unit and <-1>·<-1> = <1>.
inline GWElem gw_mul(const GWElem& a, const GWElem& b) {
    require_same_field(a, b);
    return {a.ones() * b.ones() + a.minus_ones() * b.minus_ones(),
            a.ones() * b.minus_ones() + a.minus_ones() * b.ones(), a.field()};
}

/// The hyperbolic form h = <1> + <-1>.
inline GWElem hyperbolic_form(FieldSpec f) { return {1, 1, f}; }

/// H(n) = n·h.
inline GWElem hyperbolic(const Int& n, FieldSpec f) { return {n, n, f}; }

/// Rank homomorphism GW -> Z (rank of the underlying form).
inline Int rank_map(const GWElem& a) { return a.ones() + a.minus_ones(); }

/// Forgetful map to the Milnor side; in degree 0 this is the rank.
inline Int forgetful(const GWElem& a) { return rank_map(a); }

// ============================================================================
// Witt quotient
// ============================================================================

/// Image of a GWElem in W(F) = GW(F)/(h), stored as the canonical class
/// value per field:
///   RealClosed/Universal: the signature m - n in Z (modulus 0)
///   QuadraticallyClosed and FiniteOdd(-1 square): rank mod 2
///   FiniteOdd(-1 nonsquare): (m - n) mod 4, since W is cyclic of order 4
struct WittElem {
    Int value;
    Int modulus;  // 0 for Z
    FieldSpec field;

    [[nodiscard]] bool is_zero() const { return value == 0; }

    friend bool operator==(const WittElem& a, const WittElem& b) {
        return a.field == b.field && a.modulus == b.modulus && a.value == b.value;
    }

    /// Parity of the rank of any representative (well defined in W).
    [[nodiscard]] Int rank_parity() const { return ((value % 2) + 2) % 2; }
};

inline WittElem witt_image(const GWElem& a) {
    Int sig = a.ones() - a.minus_ones();
    switch (a.field().kind) {
        case FieldSpec::Kind::RealClosed:
        case FieldSpec::Kind::Universal: return {sig, 0, a.field()};
        case FieldSpec::Kind::QuadraticallyClosed: return {((sig % 2) + 2) % 2, 2, a.field()};
        case FieldSpec::Kind::FiniteOdd:
            if (a.field().minus_one_square) return {((sig % 2) + 2) % 2, 2, a.field()};
            return {((sig % 4) + 4) % 4, 4, a.field()};
    }
    throw domain_error("witt_image: unknown field kind");
}

// ============================================================================
// Trivialized Chow-Witt classes
// ============================================================================

/// Element of the top Chow-Witt group in the non-orientable (trivialized)
/// case: the fiber product of the Chow value with a Z/2 Witt-side class,
/// compatible mod 2.
class TrivializedCWClass {
public:
    TrivializedCWClass(Int chow, int witt_part) : chow_(std::move(chow)), witt_(witt_part) {
        if (witt_ != 0 && witt_ != 1)
            throw domain_error("TrivializedCWClass: witt part must be 0 or 1");
        if (((chow_ % 2) + 2) % 2 != witt_)
            throw domain_error("TrivializedCWClass: witt part must equal the Chow degree mod 2");
    }

    [[nodiscard]] const Int& chow() const { return chow_; }
    [[nodiscard]] int witt_part() const { return witt_; }

    friend bool operator==(const TrivializedCWClass&, const TrivializedCWClass&) = default;

private:
    Int chow_;
    int witt_;
};

/// The unique class over a given Chow degree: the Witt part is forced by the
/// fiber-product compatibility.
inline TrivializedCWClass cw_from_chow(const Int& n) {
    return {n, static_cast<int>(((n % 2) + 2) % 2)};
}

/// (N/2)·h when the Chow degree N is even (the Witt part is then 0);
/// absent when N is odd.
inline std::optional<GWElem> cw_as_hyperbolic(const TrivializedCWClass& c,
                                              FieldSpec f = FieldSpec::universal()) {
    if (c.chow() % 2 != 0) return std::nullopt;
    return hyperbolic(c.chow() / 2, f);
}

}  // namespace quadeuler
