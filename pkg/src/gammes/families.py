"""Scale families produced by recursive tone breaking.

Family 1 splits the octave into a fifth (tone) and a fourth (semitone). Each
following family breaks the tone with the previous semitone, keeping the new
tone strictly larger than the new semitone. The sign ``epsilon`` tracks how
the tone and semitone sit on the line of fifths: ``theta = xi(eps * D)`` and
``delta = xi(-eps * T)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .pitch import TWO, PitchRatio, compare

__all__ = [
    "Family",
    "LinearFamily",
    "family_base",
    "family_next",
    "family",
    "families",
    "family_xi_indices",
    "linear_family_next",
    "convergents",
]


@dataclass(frozen=True)
class Family:
    k: int
    p: int
    tones: int
    semitones: int
    theta: PitchRatio
    delta: PitchRatio
    epsilon: int
    n_scales: int

    def check(self) -> None:
        """Raise ``AssertionError`` if a structural invariant does not hold."""
        assert self.p == self.tones + self.semitones
        assert self.theta**self.tones * self.delta**self.semitones == TWO
        assert compare(self.delta, self.theta) < 0
        assert self.n_scales == comb(self.p, self.tones)
        assert self.epsilon in (1, -1)


def family_base() -> Family:
    return Family(
        k=1,
        p=2,
        tones=1,
        semitones=1,
        theta=PitchRatio(1, 1),
        delta=PitchRatio(-1, -2),
        epsilon=1,
        n_scales=2,
    )


def family_next(f: Family) -> Family:
    t, d = f.tones, f.semitones
    if compare(f.theta, f.delta * f.delta) < 0:
        # the old semitone becomes the new tone
        theta, delta = f.delta, f.theta / f.delta
        tones, semitones, eps = t + d, t, -f.epsilon
    else:
        theta, delta = f.theta / f.delta, f.delta
        tones, semitones, eps = t, t + d, f.epsilon
    p = f.p + t
    return Family(f.k + 1, p, tones, semitones, theta, delta, eps, comb(p, tones))


def family(k: int) -> Family:
    if k < 1:
        raise ValueError(f"family index must be >= 1, got {k}")
    f = family_base()
    for _ in range(k - 1):
        f = family_next(f)
    return f


def families(k_max: int) -> list[Family]:
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    out = [family_base()]
    while len(out) < k_max:
        out.append(family_next(out[-1]))
    return out


def family_xi_indices(f: Family) -> tuple[int, int]:
    """Line-of-fifths shifts of a tone and of a semitone step."""
    return f.epsilon * f.semitones, -f.epsilon * f.tones


@dataclass(frozen=True)
class LinearFamily:
    """Outcome of the unconditional (Fibonacci) breaking rule.

    The record may be degenerate; ``delta_below_one`` and
    ``delta_above_theta`` say how.
    """

    k: int
    p: int
    tones: int
    semitones: int
    theta: PitchRatio
    delta: PitchRatio

    @property
    def delta_below_one(self) -> bool:
        return compare(self.delta, PitchRatio(0, 0)) < 0

    @property
    def delta_above_theta(self) -> bool:
        return compare(self.delta, self.theta) > 0

    @property
    def valid(self) -> bool:
        return not (self.delta_below_one or self.delta_above_theta)


def linear_family_next(f: Family | LinearFamily) -> LinearFamily:
    """Break the tone as ``theta' = delta``, ``delta' = theta / delta`` always."""
    return LinearFamily(
        k=f.k + 1,
        p=f.p + f.tones,
        tones=f.tones + f.semitones,
        semitones=f.tones,
        theta=f.delta,
        delta=f.theta / f.delta,
    )


def _below_log2_3_2(p: int, q: int) -> bool:
    # p/q < log2(3/2)  <=>  2**(p+q) < 3**q
    return 2 ** (p + q) < 3**q


def convergents(n: int) -> list[Fraction]:
    """First ``n`` convergents of the continued fraction of ``log2(3/2)``.

    The leading convergent 0/1 is skipped, so the list starts
    ``1, 1/2, 3/5, 7/12``. Partial quotients are found by exact comparison
    ``2**(p+q)`` against ``3**q``; the cost grows with the denominators.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    h2, k2, h1, k1 = 0, 1, 1, 0  # h_{i-2}/k_{i-2}, h_{i-1}/k_{i-1}
    out: list[Fraction] = []
    i = 0
    while len(out) < n:
        below = i % 2 == 0  # even convergents sit below the target

        def on_side(a: int) -> bool:
            h, k = a * h1 + h2, a * k1 + k2
            return _below_log2_3_2(h, k) == below

        # on_side(0) holds; gallop to a failing a, then bisect
        hi = 1
        while on_side(hi):
            hi *= 2
        lo = hi // 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if on_side(mid):
                lo = mid
            else:
                hi = mid
        a = lo
        h2, k2, h1, k1 = h1, k1, a * h1 + h2, a * k1 + k2
        if i > 0:
            out.append(Fraction(h1, k1))
        i += 1
    return out
