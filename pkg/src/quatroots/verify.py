"""Independent residual evaluation and zero-set auditing.

eval_qpoly evaluates the original quaternionic polynomial by accumulating
powers with plain quaternion multiplication; it shares no code with the
solver pipelines beyond the multiplication itself, so it serves as the
acceptance oracle for every solver route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quaternion import Quaternion
from .solver import DEFAULT_TOLS, SimplePolynomial, Tolerances, ZeroSet


def eval_qpoly(p: SimplePolynomial, z: Quaternion) -> Quaternion:
    """p(z) = sum q_j z^j by repeated quaternion multiplication."""
    acc = Quaternion(1.0)
    total = p.coeffs[0]
    for q in p.coeffs[1:]:
        acc = acc * z
        total = total + q * acc
    return total


def residual(p: SimplePolynomial, z: Quaternion) -> float:
    return abs(eval_qpoly(p, z))


def residual_limit(p: SimplePolynomial, z: Quaternion, accept: float) -> float:
    """Acceptance bound accept * sum|q_i| * max(1, |z|)^degree."""
    s = sum(abs(q) for q in p.coeffs)
    return accept * s * max(1.0, abs(z)) ** p.degree


@dataclass(frozen=True)
class ZeroSetDiff:
    """Unmatched entries from a pairwise zero-set comparison ("left"/"right")."""

    real: tuple[tuple[str, float], ...] = ()
    isolated: tuple[tuple[str, Quaternion], ...] = ()
    spherical: tuple[tuple[str, tuple[float, float]], ...] = ()

    def __bool__(self) -> bool:
        return bool(self.real or self.isolated or self.spherical)

    def describe(self) -> str:
        if not self:
            return "zero sets agree"
        lines = []
        for side, x in self.real:
            lines.append(f"unmatched real zero ({side}): {x:.12g}")
        for side, q in self.isolated:
            lines.append(f"unmatched isolated zero ({side}): {q}")
        for side, (re, mod) in self.spherical:
            lines.append(f"unmatched sphere ({side}): Re {re:.12g}, |.| {mod:.12g}")
        return "\n".join(lines)


@dataclass(frozen=True)
class VerificationReport:
    """Residuals of every reported zero plus structural count checks."""

    entries: tuple[tuple[str, float, float], ...]  # (descriptor, residual, bound)
    max_residual: float
    bounds_ok: bool
    agreement: ZeroSetDiff | None = None

    @property
    def residuals_ok(self) -> bool:
        return all(r <= limit for _, r, limit in self.entries)

    @property
    def passed(self) -> bool:
        ok = self.residuals_ok and self.bounds_ok
        if self.agreement is not None:
            ok = ok and not self.agreement
        return ok


def audit(p: SimplePolynomial, zs: ZeroSet, tols: Tolerances = DEFAULT_TOLS,
          samples_per_class: int = 8) -> VerificationReport:
    """Evaluate p at every reported zero and sampled sphere member.

    Also checks the structural bounds: at most degree-many zero classes in
    total and at most floor(degree/2) spheres.
    """
    entries: list[tuple[str, float, float]] = []
    for x in zs.real_zeros:
        z = Quaternion(x)
        entries.append((f"real {x:.12g}", residual(p, z),
                        residual_limit(p, z, tols.accept)))
    for q in zs.isolated_zeros:
        entries.append((f"isolated {q}", residual(p, q),
                        residual_limit(p, q, tols.accept)))
    for cls in zs.spherical:
        for t, member in enumerate(cls.sample(samples_per_class)):
            entries.append((f"sphere {cls} member {t}", residual(p, member),
                            residual_limit(p, member, tols.accept)))
    n = p.degree
    bounds_ok = (zs.class_count() <= n
                 and len(zs.spherical) <= n // 2
                 and len(zs.real_zeros) <= n)
    max_residual = max((r for _, r, _ in entries), default=0.0)
    return VerificationReport(tuple(entries), max_residual, bounds_ok)


def _greedy_match(left, right, dist, tol):
    """Greedy global-minimum matching; returns unmatched items per side."""
    left = list(left)
    right = list(right)
    lu = set(range(len(left)))
    ru = set(range(len(right)))
    while lu and ru:
        best = None
        for i in lu:
            for j in ru:
                d = dist(left[i], right[j])
                if best is None or d < best[0]:
                    best = (d, i, j)
        d, i, j = best
        if d > tol(left[i], right[j]):
            break
        lu.discard(i)
        ru.discard(j)
    return [left[i] for i in sorted(lu)], [right[j] for j in sorted(ru)]


def compare(zs1: ZeroSet, zs2: ZeroSet, tol: float = 1e-6) -> ZeroSetDiff:
    """Nearest-match the two zero sets category by category."""
    lr, rr = _greedy_match(
        zs1.real_zeros, zs2.real_zeros,
        dist=lambda a, b: abs(a - b),
        tol=lambda a, b: tol * max(1.0, abs(a), abs(b)))
    li, ri = _greedy_match(
        zs1.isolated_zeros, zs2.isolated_zeros,
        dist=lambda a, b: abs(a - b),
        tol=lambda a, b: tol * max(1.0, abs(a), abs(b)))
    ls, rs = _greedy_match(
        zs1.spherical, zs2.spherical,
        dist=lambda a, b: a.distance(b),
        tol=lambda a, b: tol * max(1.0, a.modulus, b.modulus))
    return ZeroSetDiff(
        real=tuple([("left", x) for x in lr] + [("right", x) for x in rr]),
        isolated=tuple([("left", q) for q in li] + [("right", q) for q in ri]),
        spherical=tuple([("left", (c.re, c.modulus)) for c in ls]
                        + [("right", (c.re, c.modulus)) for c in rs]))
