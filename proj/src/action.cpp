#include "orbifold/action.hpp"

namespace orbifold {

Vector add(Vector u, Vector w, int p) { return {fp::add(u.x1, w.x1, p), fp::add(u.x2, w.x2, p)}; }
Vector sub(Vector u, Vector w, int p) { return {fp::sub(u.x1, w.x1, p), fp::sub(u.x2, w.x2, p)}; }
Vector scale(Vector u, Scalar s, int p) { return {fp::mul(u.x1, s, p), fp::mul(u.x2, s, p)}; }

Vector act(Prime p, std::int64_t i, Vector v)
{
    const Scalar e = fp::reduce(i, p);
    return {fp::add(v.x1, fp::mul(e, v.x2, p), p), v.x2};
}

Scalar action_determinant(Prime p, std::int64_t i)
{
    const Vector c1 = act(p, i, kV1);
    const Vector c2 = act(p, i, kV2);
    return wedge_coordinate(c1, c2, p);
}

Scalar wedge_coordinate(Vector u, Vector w, int p)
{
    return fp::sub(fp::mul(u.x1, w.x2, p), fp::mul(u.x2, w.x1, p), p);
}

VGroupElement::VGroupElement(GroupAlgebraElement v1, GroupAlgebraElement v2) : rows_{std::move(v1), std::move(v2)}
{
    if (rows_[0].p() != rows_[1].p()) throw MismatchedPrime(rows_[0].p(), rows_[1].p());
}

void VGroupElement::add_to_column(std::int64_t i, Vector v)
{
    rows_[0].accumulate(i, v.x1);
    rows_[1].accumulate(i, v.x2);
}

VGroupElement& VGroupElement::operator+=(VGroupElement const& other)
{
    rows_[0] += other.rows_[0];
    rows_[1] += other.rows_[1];
    return *this;
}

VGroupElement& VGroupElement::operator-=(VGroupElement const& other)
{
    rows_[0] -= other.rows_[0];
    rows_[1] -= other.rows_[1];
    return *this;
}

VGroupElement VGroupElement::operator*(Scalar s) const { return {rows_[0] * s, rows_[1] * s}; }

VGroupElement act_ga(VGroupElement const& x, std::int64_t h)
{
    VGroupElement r(x.prime());
    for (int i = 0; i < x.p(); ++i) r.add_to_column(i, act(x.prime(), h, x.column(i)));
    return r;
}

Quad2 sym_mul(Vector u, Vector w, int p)
{
    return {fp::mul(u.x1, w.x1, p), fp::add(fp::mul(u.x1, w.x2, p), fp::mul(u.x2, w.x1, p), p),
            fp::mul(u.x2, w.x2, p)};
}

void Quad2GroupElement::add_to_column(std::int64_t i, Quad2 q)
{
    rows_[0].accumulate(i, q.v1v1);
    rows_[1].accumulate(i, q.v1v2);
    rows_[2].accumulate(i, q.v2v2);
}

Quad2GroupElement sym_mul_ga(Prime p, Vector u, Vector w)
{
    Quad2GroupElement r(p);
    r.add_to_column(0, sym_mul(u, w, p));
    return r;
}

namespace {

void append_term(std::string& out, Scalar c, std::string const& monomial, int i)
{
    if (c == 0) return;
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*" + monomial;
    if (i == 1)
        out += "*g";
    else if (i > 1)
        out += "*g^" + std::to_string(i);
}

}  // namespace

std::string to_string(Vector v)
{
    std::string out;
    append_term(out, v.x1, "v1", 0);
    append_term(out, v.x2, "v2", 0);
    return out.empty() ? "0" : out;
}

std::string to_string(VGroupElement const& x)
{
    std::string out;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < x.p(); ++i) append_term(out, x.row(j)[i], j == 0 ? "v1" : "v2", i);
    return out.empty() ? "0" : out;
}

std::string to_string(Quad2GroupElement const& x)
{
    static const char* names[] = {"v1^2", "v1*v2", "v2^2"};
    std::string out;
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < x.p(); ++i) append_term(out, x.row(m)[i], names[m], i);
    return out.empty() ? "0" : out;
}

}  // namespace orbifold
