"""Coefficient ring for upper half-plane computations.

Functions are Laurent polynomials in v = gamma - conj(gamma) with
polynomial coefficients in u = gamma, over Gaussian rationals.  In these
variables the holomorphic and antiholomorphic derivatives are

    d/dgamma = d/du + d/dv        d/dconj(gamma) = -d/dv

and the hyperbolic metric data is exact: H = -2i v^-2, H^-1 = (i/2) v^2,
the connection form theta = -2 v^-1 dconj(gamma).
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import Scalar, ZERO, ONE, I


class ChartFn:
    """Map (u-degree, v-degree) -> Scalar; u-degree >= 0, v-degree any."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for (du, dv), coeff in terms.items():
                if du < 0:
                    raise ValueError("negative u-degree")
                coeff = Scalar.coerce(coeff)
                if coeff:
                    self.terms[(du, dv)] = coeff

    @staticmethod
    def const(c) -> "ChartFn":
        return ChartFn({(0, 0): c})

    @staticmethod
    def u_pow(n, coeff=1) -> "ChartFn":
        return ChartFn({(n, 0): coeff})

    @staticmethod
    def v_pow(n, coeff=1) -> "ChartFn":
        return ChartFn({(0, n): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ChartFn):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, ZERO) + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        f = ChartFn()
        f.terms = out
        return f

    def __neg__(self):
        f = ChartFn()
        f.terms = {k: -c for k, c in self.terms.items()}
        return f

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ChartFn):
            return self.scale(other)
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                v = out.get(key, ZERO) + c1 * c2
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        f = ChartFn()
        f.terms = out
        return f

    def scale(self, c) -> "ChartFn":
        c = Scalar.coerce(c)
        f = ChartFn()
        if c:
            f.terms = {k: c * v for k, v in self.terms.items()}
        return f

    __rmul__ = scale

    def d_u(self) -> "ChartFn":
        f = ChartFn()
        for (du, dv), c in self.terms.items():
            if du:
                f.terms[(du - 1, dv)] = c * du
        return f

    def d_v(self) -> "ChartFn":
        f = ChartFn()
        for (du, dv), c in self.terms.items():
            if dv:
                f.terms[(du, dv - 1)] = c * dv
        return f

    def d_gamma(self) -> "ChartFn":
        return self.d_u() + self.d_v()

    def d_gammabar(self) -> "ChartFn":
        return -self.d_v()

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (du, dv) in sorted(self.terms):
            c = self.terms[(du, dv)]
            piece = "(%r)" % c
            if du:
                piece += "*u^%d" % du if du > 1 else "*u"
            if dv:
                piece += "*v^%d" % dv if dv != 1 else "*v"
            parts.append(piece)
        return " + ".join(parts)


@dataclass(frozen=True)
class MetricData:
    h: ChartFn            # hermitian metric i / (2 y^2) = -2i v^-2
    h_inv: ChartFn        # (i/2) v^2
    theta_coeff: ChartFn  # dconj(gamma)-coefficient of the connection form
    b0_theta: Scalar      # H^-1 d_gamma(theta_coeff)


def metric_data() -> MetricData:
    from fractions import Fraction

    h = ChartFn.v_pow(-2, Scalar(0, -2))
    h_inv = ChartFn.v_pow(2, Scalar(0, Fraction(1, 2)))
    theta_coeff = ChartFn.v_pow(-1, -2)
    prod = h_inv * theta_coeff.d_gamma()
    b0 = prod.terms.get((0, 0), ZERO)
    return MetricData(h=h, h_inv=h_inv, theta_coeff=theta_coeff, b0_theta=b0)
