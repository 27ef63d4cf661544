"""Exact and approximate revival searches organized by cycle length.

Every family follows the same recipe: choose the total coin phase delta so
the number of independent block-weight forms collapses, seed the remaining
form(s) with reduced fractions, complete the set of fractions sharing the
resulting weight (exact integer arithmetic), and take the LCM of all
denominators as the candidate period.  Each emitted certificate is verified
by powering the operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .revival import (
    CERTIFICATION_TOL,
    UNDEFINED_DENOMINATOR_TOL,
    RevivalCertificate,
    lcm_denominators,
    power_deviation,
)
from .spectral import eigenvalues_closed_form
from .walk import CoinParams

__all__ = [
    "APPROX_DENOMINATOR_CAP",
    "APPROX_PERIOD_CAP",
    "K3_DELTAS",
    "K4_DELTAS",
    "TWO_FORM_DELTAS",
    "SolutionFamily",
    "companion_fractions",
    "constant_block_fractions",
    "enumerate_seeded",
    "k2_seed_window",
    "reduced_fractions",
    "solve_approximate",
    "solve_k2",
    "solve_k3",
    "solve_k4",
    "solve_rho_edge",
    "solve_two_form",
    "undefined_blocks",
]

TWO_PI = 2.0 * math.pi
HALF = Fraction(1, 2)

K3_DELTAS = (Fraction(0), Fraction(1, 3), Fraction(2, 3))
K4_DELTAS = (Fraction(0), Fraction(1, 2), Fraction(1, 4), Fraction(3, 4))
TWO_FORM_DELTAS = {
    5: tuple(Fraction(t, 5) for t in range(5)),
    10: tuple(Fraction(t, 5) for t in range(5)),
    8: tuple(Fraction(t, 4) for t in range(4)),
}

APPROX_DENOMINATOR_CAP = 10**6
APPROX_PERIOD_CAP = 10**6

_CASE_TAGS = {2: "k2_seeded", 3: "k3_family", 4: "k4_family"}


@dataclass(frozen=True)
class SolutionFamily:
    """Certificates grouped by cycle length, search case, and coin phase."""

    k: int
    case_tag: str
    delta_two_pi: Fraction
    solutions: tuple[RevivalCertificate, ...]

    def __post_init__(self):
        for cert in self.solutions:
            if cert.case_tag != self.case_tag or cert.k != self.k:
                raise ValueError("certificate does not belong to this family")


def _mod1(x: Fraction) -> Fraction:
    return x % 1


def companion_fractions(seed: Fraction, delta_two_pi: Fraction) -> frozenset[Fraction]:
    """All x in [0, 1) with cos(4*pi*x - delta) == cos(4*pi*seed - delta), exactly."""
    seed = Fraction(seed)
    delta_two_pi = Fraction(delta_two_pi)
    return frozenset(
        _mod1(x)
        for x in (
            seed,
            seed + HALF,
            delta_two_pi - seed,
            delta_two_pi - seed + HALF,
        )
    )


def undefined_blocks(k: int, delta_two_pi: Fraction) -> tuple[int, ...]:
    """Blocks whose weight formula degenerates: 2*l/k + delta/(2*pi) is an integer."""
    delta_two_pi = Fraction(delta_two_pi)
    return tuple(
        l for l in range(k) if (Fraction(2 * l, k) + delta_two_pi).denominator == 1
    )


def constant_block_fractions(k: int, l: int) -> frozenset[Fraction]:
    """Eigenphase fractions {-l/k, -l/k + 1/2} (mod 1) of a degenerate block."""
    base = _mod1(Fraction(-l, k))
    return frozenset((base, _mod1(base + HALF)))


def reduced_fractions(max_den: int) -> list[Fraction]:
    """All reduced fractions in (0, 1) with denominator <= max_den, ascending."""
    out = []
    for q in range(2, max_den + 1):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                out.append(Fraction(p, q))
    return sorted(out)


def _verified(
    k: int,
    rho: float,
    delta_two_pi: Fraction,
    generators,
    n: int,
    case_tag: str,
    *,
    rho_display: str | None = None,
    also_k: tuple[int, ...] = (),
    exact: bool = True,
) -> RevivalCertificate:
    delta = TWO_PI * float(delta_two_pi)
    params = CoinParams.from_delta(rho, delta)
    deviation = power_deviation(k, params, n)
    for other in also_k:
        deviation = max(deviation, power_deviation(other, params, n))
    return RevivalCertificate(
        k=k,
        N=n,
        rho=float(rho),
        delta=delta,
        generators=tuple(generators),
        max_deviation=deviation,
        case_tag=case_tag,
        delta_two_pi=delta_two_pi,
        rho_display=rho_display,
        exact=exact,
    )


def solve_rho_edge(k: int, uv: Fraction, edge: int) -> RevivalCertificate:
    """Revivals at the coin-weight edges: rho=0 (N=2v) and rho=1 (N=lcm(2, k, v*k)).

    `uv` is delta/(2*pi) as a reduced fraction u/v in (0, 1).
    """
    if k < 2:
        raise ValueError(f"cycle length must be at least 2, got {k}")
    uv = Fraction(uv)
    if not 0 < uv < 1:
        raise ValueError(f"delta fraction must lie strictly in (0, 1), got {uv}")
    if edge not in (0, 1):
        raise ValueError(f"edge must be 0 or 1, got {edge}")
    v = uv.denominator
    if edge == 0:
        n = 2 * v
        generators = {_mod1(uv / 2), _mod1(uv / 2 + HALF)}
        tag = "rho0"
    else:
        n = math.lcm(2, k, v * k)
        generators = set()
        for l in range(k):
            generators.add(_mod1(Fraction(-l, k)))
            generators.add(_mod1(Fraction(l, k) + uv + HALF))
        tag = "rho1"
    return _verified(k, float(edge), uv, generators, n, tag)


def _single_form_denominator(k: int, delta_two_pi: Fraction) -> float:
    """Common weight-formula denominator of all non-degenerate blocks.

    Raises when the choice of delta leaves more than one independent form,
    in which case the seeded single-form recipe does not apply.
    """
    delta = TWO_PI * float(delta_two_pi)
    values = []
    for l in range(k):
        den = 1.0 - math.cos(4.0 * math.pi * l / k + delta)
        if abs(den) < UNDEFINED_DENOMINATOR_TOL:
            continue
        values.append(den)
    if not values:
        raise ValueError(f"every block is degenerate for delta={delta_two_pi}*2*pi")
    if max(values) - min(values) > 1e-9:
        raise ValueError(
            f"delta={delta_two_pi}*2*pi leaves more than one weight form for k={k}"
        )
    return float(np.mean(values))


def _seeded_parts(k: int, seed: Fraction, delta_two_pi: Fraction):
    """(rho, generators, N) for a single-form seed; raises if rho is not in (0, 1)."""
    seed = Fraction(seed)
    if not 0 < seed < 1:
        raise ValueError(f"seed must lie strictly in (0, 1), got {seed}")
    form_den = _single_form_denominator(k, delta_two_pi)
    delta = TWO_PI * float(delta_two_pi)
    rho = (1.0 - math.cos(4.0 * math.pi * float(seed) - delta)) / form_den
    if not 1e-12 < rho < 1.0 - 1e-12:
        raise ValueError(
            f"seed {seed} with delta={delta_two_pi}*2*pi gives rho={rho!r}, "
            "outside the open interval (0, 1)"
        )
    generators = set(companion_fractions(seed, delta_two_pi))
    for l in undefined_blocks(k, delta_two_pi):
        generators |= constant_block_fractions(k, l)
    return rho, generators, lcm_denominators(generators)


def k2_seed_window(seed: Fraction) -> tuple[Fraction, Fraction]:
    """Open interval of admissible delta/(2*pi) values for a k=2 seed fraction."""
    seed = Fraction(seed)
    if not 0 < seed < 1:
        raise ValueError(f"seed must lie strictly in (0, 1), got {seed}")
    lo = Fraction(2 * seed.numerator % seed.denominator, 2 * seed.denominator)
    return lo, lo + HALF


def solve_k2(seed: Fraction, uv: Fraction) -> RevivalCertificate:
    """Seeded k=2 family: fix delta = 2*pi*u/v inside the seed's admissible
    window and complete the fraction set holding the weight constant.

    With delta given as an exact fraction the companion set is computed in
    integer arithmetic, so the generators are rational by construction.
    """
    seed = Fraction(seed)
    uv = Fraction(uv)
    lo, hi = k2_seed_window(seed)
    if not lo < uv < hi:
        raise ValueError(
            f"delta fraction {uv} lies outside the admissible window ({lo}, {hi})"
        )
    rho, generators, n = _seeded_parts(2, seed, uv)
    return _verified(2, rho, uv, generators, n, "k2_seeded")


def solve_k3(delta_two_pi: Fraction, seed: Fraction) -> RevivalCertificate:
    """Seeded k=3 family; the certificate is verified for both k=3 and k=6.

    delta/(2*pi) must be one of {0, 1/3, 2/3}: each choice degenerates one
    block and equates the remaining two weight forms.
    """
    dtp = Fraction(delta_two_pi)
    if dtp not in K3_DELTAS:
        raise ValueError(f"delta/(2*pi) must be one of {K3_DELTAS}, got {dtp}")
    rho, generators, n = _seeded_parts(3, seed, dtp)
    return _verified(3, rho, dtp, generators, n, "k3_family", also_k=(6,))


def solve_k4(delta_two_pi: Fraction, seed: Fraction) -> RevivalCertificate:
    """Seeded k=4 family.

    delta/(2*pi) in {0, 1/2} degenerates two blocks and equates the other
    two forms; {1/4, 3/4} equate all four at once.
    """
    dtp = Fraction(delta_two_pi)
    if dtp not in K4_DELTAS:
        raise ValueError(f"delta/(2*pi) must be one of {K4_DELTAS}, got {dtp}")
    rho, generators, n = _seeded_parts(4, seed, dtp)
    return _verified(4, rho, dtp, generators, n, "k4_family")


def enumerate_seeded(
    k: int,
    delta_two_pi: Fraction,
    max_den: int,
    max_n: int | None = None,
) -> SolutionFamily:
    """Scan all seeds with denominator <= max_den: one certificate per
    companion class, canonically sorted by (N, rho).

    Works for the single-form cycles k in {2, 3, 4, 6}; k=3 certificates
    are verified for k=6 as well.
    """
    if k not in (2, 3, 4, 6):
        raise ValueError(f"single-form enumeration applies to k in (2, 3, 4, 6), got {k}")
    dtp = Fraction(delta_two_pi)
    if k == 3 and dtp not in K3_DELTAS:
        raise ValueError(f"delta/(2*pi) must be one of {K3_DELTAS}, got {dtp}")
    if k == 4 and dtp not in K4_DELTAS:
        raise ValueError(f"delta/(2*pi) must be one of {K4_DELTAS}, got {dtp}")
    tag = _CASE_TAGS.get(k, "k3_family" if k == 6 else "")
    also = (6,) if k == 3 else ()
    seen: set[frozenset[Fraction]] = set()
    certificates = []
    for seed in reduced_fractions(max_den):
        cls = companion_fractions(seed, dtp)
        if cls in seen:
            continue
        seen.add(cls)
        try:
            rho, generators, n = _seeded_parts(k, seed, dtp)
        except ValueError:
            continue  # weight at the edge or outside (0, 1)
        if max_n is not None and n > max_n:
            continue
        certificates.append(_verified(k, rho, dtp, generators, n, tag, also_k=also))
    certificates.sort(key=lambda c: (c.N, c.rho))
    return SolutionFamily(k=k, case_tag=tag, delta_two_pi=dtp, solutions=tuple(certificates))


def _two_form_denominators(k: int, delta: float) -> tuple[float, float]:
    """The two distinct weight-form denominators of k in {5, 8, 10}."""
    clusters: dict[float, list[int]] = {}
    for l in range(k):
        den = 1.0 - math.cos(4.0 * math.pi * l / k + delta)
        if abs(den) < UNDEFINED_DENOMINATOR_TOL:
            continue
        for key in clusters:
            if abs(key - den) < 1e-9:
                clusters[key].append(l)
                break
        else:
            clusters[den] = [l]
    if len(clusters) != 2:
        raise ValueError(
            f"expected exactly two weight forms, found {len(clusters)} for k={k}"
        )
    first, second = sorted(clusters)
    return first, second


def solve_two_form(
    k: int, delta_two_pi: Fraction, max_den: int = 24
) -> list[RevivalCertificate]:
    """Search seed pairs equating the two independent weight forms of k in {5, 8, 10}.

    Exhaustive over reduced fractions with denominators <= max_den on both
    sides; every match is completed to its full companion classes and
    verified (k=5 solutions are verified for k=10 too, and vice versa).
    An empty result means no pair exists at this denominator bound.
    """
    if k not in TWO_FORM_DELTAS:
        raise ValueError(f"two-form search applies to k in (5, 8, 10), got {k}")
    dtp = Fraction(delta_two_pi)
    if dtp not in TWO_FORM_DELTAS[k]:
        raise ValueError(
            f"delta/(2*pi) must be one of {TWO_FORM_DELTAS[k]} for k={k}, got {dtp}"
        )
    delta = TWO_PI * float(dtp)
    den_a, den_b = _two_form_denominators(k, delta)

    def weights(form_den: float) -> list[tuple[float, Fraction]]:
        out = []
        for x in reduced_fractions(max_den):
            rho = (1.0 - math.cos(4.0 * math.pi * float(x) - delta)) / form_den
            if 1e-12 < rho < 1.0 - 1e-12:
                out.append((rho, x))
        out.sort(key=lambda item: item[0])
        return out

    side_a = weights(den_a)
    side_b = weights(den_b)
    b_values = [rho for rho, _ in side_b]

    matches: list[tuple[float, Fraction, Fraction]] = []
    for rho_a, x_a in side_a:
        i = int(np.searchsorted(b_values, rho_a - 1e-10))
        while i < len(side_b) and side_b[i][0] <= rho_a + 1e-10:
            matches.append((rho_a, x_a, side_b[i][1]))
            i += 1
    matches.sort(key=lambda item: item[0])

    also = {5: (10,), 10: (5,), 8: ()}[k]
    constants: set[Fraction] = set()
    for l in undefined_blocks(k, dtp):
        constants |= constant_block_fractions(k, l)

    certificates = []
    i = 0
    while i < len(matches):
        j = i
        while j + 1 < len(matches) and matches[j + 1][0] - matches[j][0] < 1e-9:
            j += 1
        cluster = matches[i : j + 1]
        i = j + 1
        rho = float(np.mean([m[0] for m in cluster]))
        generators = set(constants)
        for _, x_a, x_b in cluster:
            generators |= companion_fractions(x_a, dtp)
            generators |= companion_fractions(x_b, dtp)
        n = lcm_denominators(generators)
        certificates.append(
            _verified(k, rho, dtp, generators, n, "two_form", also_k=also)
        )
    certificates.sort(key=lambda c: (c.N, c.rho))
    return certificates


def _form_denominators(k: int, delta: float) -> list[float]:
    """Distinct weight-form denominators over the non-degenerate blocks."""
    clusters: list[float] = []
    for l in range(k):
        den = 1.0 - math.cos(4.0 * math.pi * l / k + delta)
        if abs(den) < UNDEFINED_DENOMINATOR_TOL:
            continue
        if not any(abs(c - den) < 1e-9 for c in clusters):
            clusters.append(den)
    return sorted(clusters)


def _band_intervals(
    rho: float, epsilon: float, form_den: float, delta: float
) -> list[tuple[float, float]] | None:
    """x-intervals in [0, 1) where |weight(x) - rho| <= epsilon for one form.

    The weight condition is a cosine band; its preimage under
    cos(4*pi*x - delta) is up to four intervals per unit turn.
    """
    c_lo = max(-1.0, 1.0 - (rho + epsilon) * form_den)
    c_hi = min(1.0, 1.0 - (rho - epsilon) * form_den)
    if c_lo > c_hi:
        return None
    y_lo, y_hi = math.acos(c_hi), math.acos(c_lo)
    intervals = []
    for lo, hi in (
        ((y_lo + delta) / (4.0 * math.pi), (y_hi + delta) / (4.0 * math.pi)),
        ((delta - y_hi) / (4.0 * math.pi), (delta - y_lo) / (4.0 * math.pi)),
    ):
        for t in range(-3, 4):
            a, b = lo + 0.5 * t, hi + 0.5 * t
            if b < -1e-12 or a > 1.0 + 1e-12:
                continue
            intervals.append((a - 1e-15, b + 1e-15))
    return intervals


def _smallest_fraction_in(intervals, max_den: int) -> Fraction | None:
    """Smallest-denominator reduced fraction inside any interval (ties: smallest value)."""
    for q in range(1, max_den + 1):
        hits = []
        for a, b in intervals:
            for m in range(math.ceil(a * q), math.floor(b * q) + 1):
                if math.gcd(m, q) == 1:
                    hits.append(m % q)
        if hits:
            return Fraction(min(hits), q)
    return None


def solve_approximate(
    k: int,
    rho: float,
    delta: float | Fraction,
    epsilon: float,
    max_den: int = APPROX_DENOMINATOR_CAP,
) -> RevivalCertificate | None:
    """Best-effort near-revival for a fixed coin.

    For each weight form the smallest-denominator fraction whose weight sits
    within epsilon of rho is selected, the generator set is completed
    (exactly, through companions, when delta is a rational turn; phase by
    phase otherwise), and N is the LCM of the denominators.  The recorded
    deviation is whatever N actually achieves and is NOT required to clear
    the certification tolerance.  Returns None when some form admits no
    fraction with denominator <= max_den or the LCM exceeds
    APPROX_PERIOD_CAP.
    """
    if k < 2:
        raise ValueError(f"cycle length must be at least 2, got {k}")
    if not 0.0 < rho < 1.0:
        raise ValueError(f"rho must lie strictly in (0, 1), got {rho}")
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if isinstance(delta, Fraction):
        dtp = _mod1(delta)
    else:
        # floats that are exact rational turns (e.g. 0.0) still get the
        # exact companion treatment
        from .revival import reconstruct_fraction

        dtp = reconstruct_fraction(float(delta), max_den=1000, tol=1e-12)
    delta_value = TWO_PI * float(dtp) if dtp is not None else float(delta) % TWO_PI
    params = CoinParams.from_delta(rho, delta_value)

    fractions: set[Fraction] = set()
    if dtp is not None:
        for l in undefined_blocks(k, dtp):
            fractions |= constant_block_fractions(k, l)
        for form_den in _form_denominators(k, delta_value):
            intervals = _band_intervals(rho, epsilon, form_den, delta_value)
            if intervals is None:
                return None
            picked = _smallest_fraction_in(intervals, max_den)
            if picked is None:
                return None
            fractions |= companion_fractions(picked, dtp)
    else:
        # irrational delta: every eigenphase needs its own fraction
        for l in range(k):
            form_den = 1.0 - math.cos(4.0 * math.pi * l / k + delta_value)
            if abs(form_den) < UNDEFINED_DENOMINATOR_TOL:
                fractions |= constant_block_fractions(k, l)
                continue
            intervals = _band_intervals(rho, epsilon, form_den, delta_value)
            if intervals is None:
                return None
            for value in eigenvalues_closed_form(k, l, params):
                phase = (float(np.angle(value)) / TWO_PI) % 1.0
                near = [
                    (a, b)
                    for a, b in intervals
                    if a - 1e-9 <= phase <= b + 1e-9
                ]
                picked = _smallest_fraction_in(near or intervals, max_den)
                if picked is None:
                    return None
                fractions.add(picked)

    n = lcm_denominators(fractions)
    if n > APPROX_PERIOD_CAP:
        return None
    deviation = power_deviation(k, params, n)
    return RevivalCertificate(
        k=k,
        N=n,
        rho=float(rho),
        delta=delta_value,
        generators=tuple(fractions),
        max_deviation=deviation,
        case_tag="approximate",
        delta_two_pi=dtp,
        exact=bool(deviation < CERTIFICATION_TOL),
    )
