"""The four EAQMDS code families of length n = (q^2+1)/(m^2+1).

Each family fixes a linear form q(k) and, for 1 <= alpha <= k, a defining
set Z = C_{s+1} u ... u C_{s+delta} built from consecutive cyclotomic
cosets.  The module provides the admissible-parameter enumeration, the
closed forms for the run half-length delta, the entanglement count c and
the quantum dimension, the explicit T1 / T1' coset unions whose
disjointness properties drive those closed forms, and a per-instance
verification report.

Family shapes (a = m^2 + 1, m odd):

  case 1:  q = 2ak + m          delta = alpha*q + mk
  case 2:  q = 2ak + a + m      delta = alpha*q + (a+m)k + (a+2m)/2
  case 3:  q = 2ak + a - m      delta = alpha*q + (a-m)k + (a-2m)/2
  case 4:  q = 2ak + 2a - m     delta = alpha*q + (2a-m)k + 2(a-m)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import prime_power_base
from .cosets import ResidueSet, decompose, neg_q_image, run_defining_set

CASES = (1, 2, 3, 4)


def is_odd_prime_power(q: int) -> bool:
    return q % 2 == 1 and prime_power_base(q) is not None


def q_for(case: int, m: int, k: int) -> int:
    """The family's prescribed field size for parameters (m, k)."""
    a = m * m + 1
    if case == 1:
        return 2 * a * k + m
    if case == 2:
        return 2 * a * k + a + m
    if case == 3:
        return 2 * a * k + a - m
    if case == 4:
        return 2 * a * k + 2 * a - m
    raise ValueError(f"unknown case {case}; expected 1..4")


@dataclass(frozen=True)
class FamilySpec:
    """Admissible parameter set (case, m, k, alpha) with derived q, n, s."""

    case: int
    m: int
    k: int
    alpha: int

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case}; expected 1..4")
        if self.m < 1 or self.m % 2 == 0:
            raise ValueError(f"m must be odd and >= 1, got {self.m}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 1 <= self.alpha <= self.k:
            raise ValueError(
                f"alpha must satisfy 1 <= alpha <= k = {self.k}, got {self.alpha}")
        q = q_for(self.case, self.m, self.k)
        if not is_odd_prime_power(q):
            raise ValueError(
                f"q = {q} (case {self.case}, m = {self.m}, k = {self.k}) "
                "is not an odd prime power")
        if (q * q + 1) % self.a:
            raise AssertionError("a does not divide q^2 + 1")  # cannot happen

    @property
    def a(self) -> int:
        return self.m * self.m + 1

    @property
    def q(self) -> int:
        return q_for(self.case, self.m, self.k)

    @property
    def n(self) -> int:
        q = self.q
        return (q * q + 1) // self.a

    @property
    def s(self) -> int:
        return (self.n - 1) // 2


def spec_from_q(case: int, m: int, q: int, alpha: int) -> FamilySpec:
    """Build a spec from an explicit q, inverting the case's linear form."""
    a = m * m + 1
    offset = {1: m, 2: a + m, 3: a - m, 4: 2 * a - m}[case]
    num = q - offset
    if num <= 0 or num % (2 * a):
        raise ValueError(
            f"q = {q} is not of the case-{case} form 2ak + {offset} with k >= 1")
    return FamilySpec(case, m, num // (2 * a), alpha)


def enumerate_admissible(case: int, m: int, k_max: int | None = None,
                         q_max: int | None = None) -> list[FamilySpec]:
    """All admissible specs with k <= k_max, q <= q_max, alpha in [1, k]."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd and >= 1, got {m}")
    if k_max is None and q_max is None:
        raise ValueError("at least one of k_max, q_max is required")
    out = []
    k = 1
    while True:
        if k_max is not None and k > k_max:
            break
        q = q_for(case, m, k)
        if q_max is not None and q > q_max:
            break
        if is_odd_prime_power(q):
            out.extend(FamilySpec(case, m, k, alpha) for alpha in range(1, k + 1))
        k += 1
    return out


# ---------------------------------------------------------------------------
# closed forms


@dataclass(frozen=True)
class ClosedForm:
    """Closed-form parameters of one family instance."""

    delta: int          # run half-length; the defining set has 2*delta residues
    c: int              # entanglement count |Z1|
    classical_dim: int  # n - 2*delta
    quantum_dim: int    # 2*classical_dim - n + c
    d: int              # 2*delta + 1


def closed_form(spec: FamilySpec) -> ClosedForm:
    case, m, k, alpha = spec.case, spec.m, spec.k, spec.alpha
    a, q, n = spec.a, spec.q, spec.n
    if case == 1:
        delta = alpha * q + m * k
        c = 4 * alpha * (a * alpha + m)
    elif case == 2:
        delta = alpha * q + (a + m) * k + (a + 2 * m) // 2
        c = 4 * alpha * (a * alpha + a + m) + a + 2 * m
    elif case == 3:
        delta = alpha * q + (a - m) * k + (a - 2 * m) // 2
        c = 4 * alpha * (a * alpha + a - m) + a - 2 * m
    else:
        delta = alpha * q + (2 * a - m) * k + 2 * (a - m)
        c = 4 * alpha * (a * alpha + 2 * a - m) + 4 * (a - m)
    dim = n - 2 * delta
    return ClosedForm(delta=delta, c=c, classical_dim=dim,
                      quantum_dim=2 * dim - n + c, d=2 * delta + 1)


def theorem_quantum_dim(spec: FamilySpec) -> int:
    """Quantum dimension as printed in each family's parameter statement."""
    case, m, k, alpha = spec.case, spec.m, spec.k, spec.alpha
    a, q, n = spec.a, spec.q, spec.n
    if case == 1:
        return n - 4 * alpha * (q - m - a * alpha) - 4 * m * k
    if case == 2:
        return n - 4 * alpha * (q - a - m - a * alpha) - 4 * (a + m) * k - (a + 2 * m)
    if case == 3:
        return n - 4 * alpha * (q - a + m - a * alpha) - 4 * (a - m) * k - (a - 2 * m)
    return n - 4 * alpha * (q - (2 * a - m) - a * alpha) - 4 * (2 * a - m) * k \
        - 4 * (a - m)


# ---------------------------------------------------------------------------
# code records and EA parameters


@dataclass(frozen=True)
class CodeRecord:
    """A cyclic code given by its defining set."""

    n: int
    defining_set: ResidueSet
    dim: int
    designed_distance: int
    mds: bool


@dataclass(frozen=True)
class EAParams:
    """[[n, kq, d; c]] with the two bound flags."""

    n: int
    kq: int
    d: int
    c: int
    ea_singleton_equality: bool
    d_within_half: bool

    def label(self, q: int) -> str:
        return f"[[{self.n},{self.kq},{self.d};{self.c}]]_{q}"


def build_defining_set(spec: FamilySpec) -> CodeRecord:
    """The defining set Z = C_{s+1} u ... u C_{s+delta} as a code record."""
    cf = closed_form(spec)
    if cf.delta > spec.s:
        raise AssertionError("delta exceeds s; alpha <= k should prevent this")
    z = run_defining_set(spec.n, spec.s, cf.delta)
    return CodeRecord(
        n=spec.n,
        defining_set=z,
        dim=spec.n - len(z),
        designed_distance=len(z) + 1,
        mds=z.is_consecutive_run(),
    )


def assemble_ea_params(n: int, classical_dim: int, d: int, c: int) -> EAParams:
    kq = 2 * classical_dim - n + c
    return EAParams(
        n=n, kq=kq, d=d, c=c,
        ea_singleton_equality=(n + c - kq == 2 * (d - 1)),
        d_within_half=(2 * d <= n + 2),
    )


def ea_params(spec: FamilySpec) -> EAParams:
    cf = closed_form(spec)
    return assemble_ea_params(spec.n, cf.classical_dim, cf.d, cf.c)


# ---------------------------------------------------------------------------
# the T1 / T1' partitions
#
# The t, h, g1, g2, f, g names below are pure iteration variables of the
# piecewise coset unions; they appear nowhere else in the API.


def _collect(dest: set, n: int, idx: int):
    idx %= n
    dest.add(idx)
    dest.add((n - idx) % n)


def build_T1(spec: FamilySpec) -> ResidueSet:
    """The union of cosets that is disjoint from its own -q image.

    Together with T1' it partitions the defining set Z; its existence is
    what pins the entanglement count to |Z1|.
    """
    case, m, k, alpha = spec.case, spec.m, spec.k, spec.alpha
    a, q, n, s = spec.a, spec.q, spec.n, spec.s
    out: set[int] = set()

    if case in (1, 4):
        # odd t from -m to (2m-1)m in blocks of 2m; h steps by block
        kk = k if case == 1 else k + 1
        thresh = s + m * k if case == 1 else s + (2 * a - m) * k + 2 * (a - m)
        for t in range(-m, (2 * m - 1) * m + 1, 2):
            block = 1 if t < 0 else 2 + (t - 1) // (2 * m)
            h = block if case == 1 else 3 - block
            lo = s + (m + t) * kk + h + alpha
            hi = s + (m + t + 2) * kk + (h - 1 if case == 1 else h - 3) - alpha
            for v in range(lo, hi + 1):
                umax = alpha if v <= thresh else alpha - 1
                for u in range(umax + 1):
                    _collect(out, n, u * q + v)
    else:
        # h from 1 to m; t ranges (h-1)m + g1 .. hm - g2 split around (m+1)/2
        if case == 2:
            thresh = s + (a + m) * k + (a + 2 * m) // 2
        else:
            thresh = s + (a - m) * k + (a - 2 * m) // 2
        for h in range(1, m + 1):
            if h <= (m - 1) // 2:
                g1, g2 = 0, 1
            elif h == (m + 1) // 2:
                g1, g2 = 0, 0
            else:
                g1, g2 = 1, 0
            for t in range((h - 1) * m + g1, h * m - g2 + 1):
                if case == 2:
                    lo = s + t * (2 * k + 1) + (h + 1) + alpha
                    hi = s + (t + 1) * (2 * k + 1) + (h - 1) - alpha
                else:
                    lo = s + t * (2 * k + 1) + (2 - h) + alpha
                    hi = s + t * (2 * k + 1) + 2 * k - (h - 1) - alpha
                for v in range(lo, hi + 1):
                    umax = alpha if v <= thresh else alpha - 1
                    for u in range(umax + 1):
                        _collect(out, n, u * q + v)

    return ResidueSet(n, tuple(sorted(out)))


def _t1_prime_case1(spec: FamilySpec) -> ResidueSet:
    """Case 1's explicit T1' union (elsewhere T1' is obtained as Z1)."""
    m, k, alpha = spec.m, spec.k, spec.alpha
    a, q, n, s = spec.a, spec.q, spec.n, spec.s
    out: set[int] = set()

    for v in range(s + 1, s + alpha + 1):
        for u in range(alpha + 1):
            _collect(out, n, u * q + v)

    for t in range(1, (m - 1) // 2 + 1):
        for v in range(s + 2 * t * k + 1 - alpha, s + 2 * t * k + alpha + 1):
            for u in range(alpha + 1):
                _collect(out, n, u * q + v)

    for f in range(1, 2 * m, 2):
        for t in range((f * m + 3) // 2, ((f + 2) * m - 1) // 2 + 1):
            lo = s + 2 * t * k + (f + 3) // 2 - alpha
            hi = s + 2 * t * k + (f + 1) // 2 + alpha
            for v in range(lo, hi + 1):
                for u in range(alpha):
                    _collect(out, n, u * q + v)

    for t in range(((2 * m - 1) * m + 3) // 2, m * m + 1):
        for v in range(s + 2 * t * k + m + 1 - alpha, s + 2 * t * k + m + alpha + 1):
            for u in range(alpha):
                _collect(out, n, u * q + v)

    for v in range(s + 2 * a * k + m + 1 - alpha, s + q + 1):
        for u in range(alpha):
            _collect(out, n, u * q + v)

    for g in range(1, 2 * m, 2):
        mid = s + (g * m + 1) * k + (g + 1) // 2
        for v in range(mid - alpha, mid + alpha + 1):
            for u in range(alpha):
                _collect(out, n, u * q + v)

    return ResidueSet(n, tuple(sorted(out)))


def build_T1_prime(spec: FamilySpec) -> ResidueSet:
    """The -q-stable part of the defining set; always equals Z n (-qZ).

    Case 1 uses the explicit union; the other cases construct it directly
    as Z1 of the decomposition.
    """
    if spec.case == 1:
        return _t1_prime_case1(spec)
    record = build_defining_set(spec)
    return decompose(spec.n, spec.q, record.defining_set).z1


# ---------------------------------------------------------------------------
# verification


CHECK_NAMES = (
    "defining_set_size",       # |Z| == 2*delta
    "consecutive_run",         # Z is one gap-free interval
    "entanglement_closed_form",  # |Z n (-qZ)| equals the closed-form c
    "t1_disjoint",             # T1 n (-qT1) is empty
    "t1_prime_stable",         # -qT1' == T1'
    "t1_partition",            # T1 u T1' == Z and T1 n T1' == empty
    "quantum_dim_formula",     # assembled kq matches the printed formula
    "ea_singleton_equality",   # n + c - kq == 2(d - 1)
)


@dataclass(frozen=True)
class VerificationReport:
    """Pass/fail per structural check for one family instance."""

    spec: FamilySpec
    checks: dict[str, bool] = field(compare=False)
    z1_size: int = 0
    z2_size: int = 0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failed_checks(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


def verify_family(spec: FamilySpec, fault_delta: int = 0) -> VerificationReport:
    """Run every structural check for one instance.

    ``fault_delta`` perturbs the run half-length; it exists so the test
    harness can prove the checks actually bite.  Failures are report
    entries, never exceptions.
    """
    cf = closed_form(spec)
    n, q, s = spec.n, spec.q, spec.s
    delta = cf.delta + fault_delta
    z = run_defining_set(n, s, delta)
    dec = decompose(n, q, z)
    z1, z2 = dec.z1, dec.z2

    t1 = build_T1(spec)
    t1p = build_T1_prime(spec)
    ea = assemble_ea_params(n, n - len(z), 2 * delta + 1, cf.c)

    t1_set, t1p_set, z_set = t1.as_set, t1p.as_set, z.as_set
    checks = {
        "defining_set_size": len(z) == 2 * cf.delta,
        "consecutive_run": z.is_consecutive_run(),
        "entanglement_closed_form": len(z1) == cf.c,
        "t1_disjoint": not (t1_set & neg_q_image(n, q, t1).as_set),
        "t1_prime_stable": neg_q_image(n, q, t1p).as_set == t1p_set,
        "t1_partition": (t1_set | t1p_set) == z_set and not (t1_set & t1p_set),
        "quantum_dim_formula": ea.kq == theorem_quantum_dim(spec)
        and ea.kq == cf.quantum_dim,
        "ea_singleton_equality": ea.ea_singleton_equality,
    }
    return VerificationReport(spec=spec, checks=checks,
                              z1_size=len(z1), z2_size=len(z2))


def sweep_specs(m_max: int = 5, q_max: int = 250):
    """All admissible specs over the four cases, odd m <= m_max, q <= q_max."""
    for case in CASES:
        for m in range(1, m_max + 1, 2):
            yield from enumerate_admissible(case, m, q_max=q_max)
