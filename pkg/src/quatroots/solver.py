"""Zero finding for simple (left-coefficient) quaternionic polynomials.

The pipeline: normalize the constant term to 0 or 1, split each quaternion
coefficient p = z1 + z2*j into the pair of complex "derived" polynomials
(f1, f2), and form the real discriminant f1*conj(f1) + f2*conj(f2).  Its
real roots are exactly the real zeros; each conjugate pair of complex roots
yields either a whole sphere of zeros (when all four derived polynomials
vanish there) or a single isolated zero given in closed form.

Two routes are provided: solve_discriminant works on the full discriminant,
solve_factored first divides out g = gcd(f1, f2), which isolates the real
zeros and spheres inside g and leaves a smaller residual polynomial for the
isolated nonreal zeros.  solve_complex_coeffs is the fast path for inputs
whose coefficients are all complex (or all real).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cpoly import ComplexPolynomial, TRIM_REL, gcd as poly_gcd, gcd_many
from .quaternion import (ConjugacyClass, K, Quaternion, embed_complex, split)
from .roots import all_roots, classify_real, polish_multiples


class DegreeError(ValueError):
    """Constant polynomials have no meaningful zero set here."""


class NonRealDiscriminantError(ArithmeticError):
    """The discriminant failed its real-coefficient check (arithmetic bug)."""


class InexactDivisionError(ArithmeticError):
    """Dividing out the gcd left a remainder beyond tolerance."""


class BothDenominatorsZeroError(ArithmeticError):
    """Both closed-form denominators vanished; impossible for a genuine
    isolated-zero root, so this flags an internal inconsistency."""


class NotComplexCoefficientsError(ValueError):
    """The complex-coefficient fast path got a genuinely quaternionic input."""


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by the solver routes.

    real:   |Im| below which a root counts as real
    zero:   |f(eta)| below which a derived polynomial counts as vanishing
    gcd:    relative remainder cutoff for the approximate gcd
    accept: relative residual acceptance for verification
    dedup:  relative distance for merging equal zeros
    """

    real: float = 1e-5
    zero: float = 1e-10
    gcd: float = 1e-8
    accept: float = 1e-8
    dedup: float = 1e-8


DEFAULT_TOLS = Tolerances()


def _as_quaternion(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(float(value))
    if isinstance(value, complex):
        return embed_complex(value)
    raise TypeError(f"cannot interpret {value!r} as a quaternion")


class SimplePolynomial:
    """q_n x^n + ... + q_1 x + q_0 with quaternion coefficients on the left.

    Coefficients are stored constant-term first; trailing (leading-power)
    coefficients that are relatively zero are trimmed away.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        qs = [_as_quaternion(c) for c in coeffs]
        top = max((abs(q) for q in qs), default=0.0)
        if top == 0.0:
            raise ValueError("the zero polynomial is not a valid input")
        while qs and abs(qs[-1]) <= TRIM_REL * top:
            qs.pop()
        self.coeffs = tuple(qs)

    @classmethod
    def from_rows(cls, rows) -> SimplePolynomial:
        """Build from [a0, a1, a2, a3] component rows, constant term first."""
        return cls([Quaternion(*(float(x) for x in row)) for row in rows])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient_scale(self) -> float:
        return max(abs(q) for q in self.coeffs)

    def left_scaled(self, c: Quaternion) -> SimplePolynomial:
        """The polynomial c * p (same zero set for c != 0)."""
        return SimplePolynomial([c * q for q in self.coeffs])

    def conjugated_coeffs(self) -> SimplePolynomial:
        return SimplePolynomial([q.conjugate() for q in self.coeffs])

    def __repr__(self) -> str:
        return f"SimplePolynomial(degree={self.degree}, coeffs={[str(q) for q in self.coeffs]})"


@dataclass(frozen=True)
class NormalizedPolynomial:
    """p_n x^n + ... + p_1 x + d0 with d0 either 0 or 1.

    coeffs holds p_1 .. p_n (index k is the coefficient of x^(k+1)).
    """

    coeffs: tuple[Quaternion, ...]
    d0: int

    @property
    def degree(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class DerivedPolynomials:
    """The four complex polynomials induced by splitting each coefficient.

    f1 carries the z1 components plus the constant d0, f2 the z2 components
    with zero constant term; the bars are coefficient-wise conjugates.
    """

    f1: ComplexPolynomial
    f2: ComplexPolynomial
    f1bar: ComplexPolynomial
    f2bar: ComplexPolynomial


@dataclass(frozen=True)
class ZeroSet:
    """The full solution set: real points, nonreal isolated points, spheres."""

    real_zeros: tuple[float, ...]
    isolated_zeros: tuple[Quaternion, ...]
    spherical: tuple[ConjugacyClass, ...]

    @classmethod
    def build(cls, reals, isolated, classes, dedup: float = 1e-8) -> ZeroSet:
        """Deduplicate, drop isolated zeros subsumed by a sphere, and sort."""
        rs: list[float] = []
        for x in sorted(float(v) for v in reals):
            if not rs or abs(x - rs[-1]) > dedup * max(1.0, abs(x)):
                rs.append(x)
        cl: list[ConjugacyClass] = []
        for c in sorted(classes, key=lambda c: (c.re, c.modulus)):
            if not cl or cl[-1].distance(c) > dedup * max(1.0, c.modulus):
                cl.append(c)
        iso: list[Quaternion] = []
        for q in sorted(isolated, key=lambda q: q.components()):
            s = max(1.0, abs(q))
            if any(abs(q - r) <= dedup * s for r in iso):
                continue
            if any(c.contains(q, dedup) for c in cl):
                continue
            iso.append(q)
        return cls(tuple(rs), tuple(iso), tuple(cl))

    def class_count(self) -> int:
        return len(self.real_zeros) + len(self.isolated_zeros) + len(self.spherical)

    def is_empty(self) -> bool:
        return self.class_count() == 0

    def conjugated(self) -> ZeroSet:
        """Component-wise conjugate set (spheres are self-conjugate)."""
        return ZeroSet(self.real_zeros,
                       tuple(q.conjugate() for q in self.isolated_zeros),
                       self.spherical)


def normalize(p: SimplePolynomial) -> NormalizedPolynomial:
    """Left-multiply by the inverse of the constant term (when nonzero).

    Left unit multiples do not change the zero set, so the result solves the
    same problem with d0 in {0, 1}.
    """
    if p.degree < 1:
        raise DegreeError("cannot normalize a constant polynomial")
    q0 = p.coeffs[0]
    if abs(q0) <= TRIM_REL * p.coefficient_scale():
        return NormalizedPolynomial(p.coeffs[1:], 0)
    inv = q0.inverse()
    return NormalizedPolynomial(tuple(inv * q for q in p.coeffs[1:]), 1)


def derived(np_: NormalizedPolynomial) -> DerivedPolynomials:
    """Split p_i = z1 + z2*j coefficient-wise into the four derived polynomials."""
    z1s: list[complex] = [complex(np_.d0)]
    z2s: list[complex] = [0j]
    for q in np_.coeffs:
        z1, z2 = split(q)
        z1s.append(z1)
        z2s.append(z2)
    f1 = ComplexPolynomial(z1s)
    f2 = ComplexPolynomial(z2s)
    return DerivedPolynomials(f1, f2, f1.conj_coeffs(), f2.conj_coeffs())


def discriminant(dp: DerivedPolynomials, tol: float = 1e-10) -> ComplexPolynomial:
    """The real polynomial f1*f1bar + f2*f2bar whose roots index all zeros.

    Nonnegative on the real axis; a failed real-coefficient check means an
    arithmetic bug, not bad input.
    """
    pt = dp.f1 * dp.f1bar + dp.f2 * dp.f2bar
    if not pt.is_real_coeffs(tol):
        raise NonRealDiscriminantError(
            f"imaginary residue {np.abs(pt.c.imag).max():.3e} exceeds tolerance")
    return pt.real()


def is_spherical_root(dp: DerivedPolynomials, eta: complex,
                      tol_zero: float = 1e-10) -> bool:
    """Whether all four derived polynomials vanish at eta.

    True means the whole conjugacy sphere of eta consists of zeros; False
    means the sphere contains exactly one (isolated) zero.  The threshold is
    scaled by each polynomial's largest coefficient.
    """
    for f in (dp.f1, dp.f2, dp.f1bar, dp.f2bar):
        if abs(f(eta)) > tol_zero * f.max_coeff():
            return False
    return True


# spec-facing name: classifies eta into the spherical (T1) or isolated (T2) set
def classify_eta(dp: DerivedPolynomials, eta: complex,
                 tol_zero: float = 1e-10) -> str:
    return "T1" if is_spherical_root(dp, eta, tol_zero) else "T2"


def _with_cross_term(w: complex, cross: complex) -> Quaternion:
    # w + cross*k with both complex values embedded along the i axis
    return embed_complex(w) + embed_complex(cross) * K


def isolated_zero(dp: DerivedPolynomials, eta: complex) -> Quaternion:
    """The single zero lying on the conjugacy sphere of eta.

    Two equivalent closed forms exist, one evaluating f1, f2 at eta and one
    at conj(eta); their denominators cannot both vanish, and the better
    conditioned (larger) one is used.
    """
    ec = eta.conjugate()
    f1e, f2e = dp.f1(eta), dp.f2(eta)
    f1c, f2c = dp.f1(ec), dp.f2(ec)
    dplus = abs(f1e) ** 2 + abs(f2e) ** 2
    dminus = abs(f1c) ** 2 + abs(f2c) ** 2
    scale = max(dp.f1.max_coeff(), dp.f2.max_coeff(), 1.0) * max(1.0, abs(eta)) ** max(
        dp.f1.degree, dp.f2.degree, 1)
    if max(dplus, dminus) <= (TRIM_REL * scale) ** 2:
        raise BothDenominatorsZeroError(
            f"both denominators vanished at {eta}; classification bug")
    im = eta.imag
    if dplus >= dminus:
        w = (abs(f2e) ** 2 * eta + abs(f1e) ** 2 * ec) / dplus
        cross = (-2.0 * f2e * f1e.conjugate() * im) / dplus
    else:
        w = (abs(f1c) ** 2 * eta + abs(f2c) ** 2 * ec) / dminus
        cross = (2.0 * f2c * f1c.conjugate() * im) / dminus
    return _with_cross_term(w, cross)


def _isolated_zero_cofactor(g1: ComplexPolynomial, g2: ComplexPolynomial,
                            eta: complex) -> Quaternion:
    """Isolated zero from the gcd cofactors, evaluated at conj(eta).

    Valid at eta exactly as listed by the factored route; the representative
    must not be flipped, since the common-factor cancellation underlying the
    formula fails at the conjugate.
    """
    ec = eta.conjugate()
    g1c, g2c = g1(ec), g2(ec)
    d = abs(g1c) ** 2 + abs(g2c) ** 2
    scale = max(g1.max_coeff(), g2.max_coeff(), 1.0) * max(1.0, abs(eta)) ** max(
        g1.degree, g2.degree, 1)
    if d <= (1e-12 * scale) ** 2:
        raise BothDenominatorsZeroError(
            f"cofactors both vanish at {ec}; gcd tolerance mismatch")
    w = (abs(g2c) ** 2 * ec + abs(g1c) ** 2 * eta) / d
    cross = (2.0 * g2c * g1c.conjugate() * eta.imag) / d
    return _with_cross_term(w, cross)


def solve_discriminant(p: SimplePolynomial,
                       tols: Tolerances = DEFAULT_TOLS) -> ZeroSet:
    """Full solution set via the roots of the discriminant polynomial."""
    np_ = normalize(p)
    dp = derived(np_)
    pt = discriminant(dp)
    rl = polish_multiples(pt, all_roots(pt))
    reals, pairs = classify_real(rl, tols.real)
    real_zeros = [x for x, _ in reals]
    isolated: list[Quaternion] = []
    classes: list[ConjugacyClass] = []
    for eta, _ in pairs:
        if is_spherical_root(dp, eta, tols.zero):
            classes.append(ConjugacyClass.from_complex(eta))
        else:
            isolated.append(isolated_zero(dp, eta))
    return ZeroSet.build(real_zeros, isolated, classes, tols.dedup)


def factor_g(np_: NormalizedPolynomial, tol: float = 1e-8):
    """Factor the derived pair as (g*g1, g*g2) with g = gcd(f1, f2) monic.

    The Euclidean gcd can overshoot on ill-conditioned remainder sequences
    (coefficient growth makes a later remainder look relatively zero); a
    candidate that fails the division check is retried at stricter zero
    tolerances, which drives the sequence down to the true common factor.
    Raises InexactDivisionError when no tolerance yields an exact division.

    Returns (g, g1, g2).
    """
    dp = derived(np_)
    for attempt_tol in (tol, tol * 1e-2, tol * 1e-4):
        g = poly_gcd(dp.f1, dp.f2, attempt_tol)
        g1, r1 = dp.f1.divrem(g)
        g2, r2 = dp.f2.divrem(g)
        if (r1.coeff_norm() <= tol * max(dp.f1.coeff_norm(), 1e-300)
                and r2.coeff_norm() <= tol * max(dp.f2.coeff_norm(), 1e-300)):
            return g, g1, g2
    raise InexactDivisionError("gcd does not divide the derived pair to tolerance")


def _cofactor_discriminant(g1: ComplexPolynomial, g2: ComplexPolynomial,
                           tol: float = 1e-10) -> ComplexPolynomial:
    gt = g1 * g1.conj_coeffs() + g2 * g2.conj_coeffs()
    if not gt.is_real_coeffs(tol):
        raise NonRealDiscriminantError(
            f"imaginary residue {np.abs(gt.c.imag).max():.3e} in cofactor discriminant")
    return gt.real()


def _classify_complex_root_values(values, tol_real: float):
    """Split distinct complex roots into reals, conjugate-paired, unpaired.

    Paired values are canonicalized to Im > 0 (averaged with the partner);
    unpaired values are returned exactly as found.
    """
    reals: list[float] = []
    nonreal: list[complex] = []
    for v in values:
        if abs(v.imag) < tol_real:
            reals.append(v.real)
        else:
            nonreal.append(v)
    paired: list[complex] = []
    unpaired: list[complex] = []
    consumed = [False] * len(nonreal)
    arr = np.array(nonreal, dtype=np.complex128)
    for i, v in enumerate(nonreal):
        if consumed[i]:
            continue
        dist = np.abs(arr - v.conjugate())
        dist[i] = np.inf
        for j in np.nonzero(consumed)[0]:
            dist[j] = np.inf
        j = int(dist.argmin()) if len(nonreal) > 1 else i
        if len(nonreal) > 1 and dist[j] <= tol_real * (1.0 + abs(v)):
            consumed[i] = consumed[j] = True
            zpos = v if v.imag > 0 else nonreal[j]
            zneg = nonreal[j] if v.imag > 0 else v
            eta = 0.5 * (zpos + zneg.conjugate())
            paired.append(complex(eta.real, abs(eta.imag)))
        else:
            consumed[i] = True
            unpaired.append(v)
    return reals, paired, unpaired


def solve_factored(p: SimplePolynomial,
                   tols: Tolerances = DEFAULT_TOLS) -> ZeroSet:
    """Solution set via the gcd factorization of the derived pair.

    Real zeros and zero-spheres come from g = gcd(f1, f2); the remaining
    isolated zeros come from unpaired roots of g and from the cofactor
    discriminant g1*conj(g1) + g2*conj(g2), skipping roots already seen in g.
    """
    np_ = normalize(p)
    dp = derived(np_)
    g, g1, g2 = factor_g(np_, tols.gcd)
    real_zeros: list[float] = []
    isolated: list[Quaternion] = []
    classes: list[ConjugacyClass] = []
    g_values: list[complex] = []

    def emit(eta: complex) -> None:
        try:
            isolated.append(_isolated_zero_cofactor(g1, g2, eta))
        except BothDenominatorsZeroError:
            # gcd artifact: fall back to classification by the full derived pair
            canon = eta if eta.imag > 0 else eta.conjugate()
            if is_spherical_root(dp, canon, tols.zero):
                classes.append(ConjugacyClass.from_complex(canon))
            else:
                isolated.append(isolated_zero(dp, canon))

    if g.degree >= 1:
        rg = polish_multiples(g, all_roots(g))
        g_values = [v for v, _ in rg.roots]
        reals_g, paired_g, unpaired_g = _classify_complex_root_values(
            g_values, tols.real)
        real_zeros.extend(reals_g)
        classes.extend(ConjugacyClass.from_complex(v) for v in paired_g)
    else:
        unpaired_g = []

    gt = _cofactor_discriminant(g1, g2)
    if gt.degree >= 1:
        rt = polish_multiples(gt, all_roots(gt))
        treals, tpairs = classify_real(rt, tols.real)
        # a real root here can only be a gcd-tolerance artifact; it still
        # certifies a genuine real zero (both f1 and f2 vanish there)
        real_zeros.extend(x for x, _ in treals)
        for eta, _ in tpairs:
            if any(abs(eta - v) <= tols.dedup * (1.0 + abs(eta))
                   or abs(eta.conjugate() - v) <= tols.dedup * (1.0 + abs(eta))
                   for v in g_values):
                continue
            emit(eta)
    for eta in unpaired_g:
        emit(eta)
    return ZeroSet.build(real_zeros, isolated, classes, tols.dedup)


def solve_complex_coeffs(p: SimplePolynomial,
                         tols: Tolerances = DEFAULT_TOLS) -> ZeroSet:
    """Fast path for inputs whose coefficients all lie in the complex plane.

    The quaternionic zero set follows from the complex roots alone: real
    roots stay, conjugate pairs become spheres, and a nonreal root whose
    conjugate is not a root stays as an isolated complex zero.
    """
    scale = p.coefficient_scale()
    for q in p.coeffs:
        if max(abs(q.a2), abs(q.a3)) > TRIM_REL * scale:
            raise NotComplexCoefficientsError(
                "coefficients have j/k components; use a general solver")
    if p.degree < 1:
        raise DegreeError("cannot solve a constant polynomial")
    cp = ComplexPolynomial([split(q).z1 for q in p.coeffs])
    rl = polish_multiples(cp, all_roots(cp))
    reals, paired, unpaired = _classify_complex_root_values(
        [v for v, _ in rl.roots], tols.real)
    classes = [ConjugacyClass.from_complex(v) for v in paired]
    isolated = [embed_complex(v) for v in unpaired]
    return ZeroSet.build(reals, isolated, classes, tols.dedup)


def is_finite_zero_set(dp: DerivedPolynomials, tol_real: float = 1e-5,
                       tol_gcd: float = 1e-8) -> bool:
    """Whether the zero set is finite (no spheres).

    Equivalent to the common gcd of all four derived polynomials having no
    nonreal root.
    """
    polys = [f for f in (dp.f1, dp.f2, dp.f1bar, dp.f2bar) if not f.is_zero]
    common = gcd_many(polys, tol_gcd)
    if common.degree < 1:
        return True
    rl = all_roots(common)
    return all(abs(z.imag) < tol_real for z, _ in rl.roots)
