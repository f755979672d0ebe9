"""Incidence bases and the numerical invariants of the scrolls they sweep.

A base in P^n is a multiset of subspace dimensions n_1 <= ... <= n_r.  The
lines meeting every base space sweep a scroll exactly when the spaces impose
2n - 3 independent conditions on the Grassmannian of lines, one short of its
dimension, so that the lines form a one-parameter family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .schubert import intersection_number


class UnrealizableBaseError(ValueError):
    """Normalization drove a subspace dimension below zero: no lines remain."""


class BaseValidationError(ValueError):
    """A computation that needs a fully valid base received an invalid one."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.summary())


class SpecialityError(ValueError):
    """The nonspecial assumption (ambient = degree - 2 genus + 1) fails."""


class InternalConsistencyError(AssertionError):
    """Two routes that must agree produced different answers."""


@dataclass(frozen=True)
class IncidenceBase:
    """Ambient dimension n plus the sorted multiset of base-space dimensions."""

    ambient: int
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(sorted(self.dims)))
        if self.ambient < 2:
            raise ValueError("ambient projective dimension must be >= 2")
        for d in self.dims:
            if not 0 <= d <= self.ambient - 1:
                raise ValueError(
                    f"subspace dimension {d} outside [0, {self.ambient - 1}]"
                )

    @property
    def r(self) -> int:
        return len(self.dims)

    def condition_count(self) -> int:
        """Number of linear conditions the spaces impose on G(1, n)."""
        return sum(self.ambient - 1 - d for d in self.dims)

    def codims(self) -> tuple[int, ...]:
        return tuple(self.ambient - 1 - d for d in self.dims)

    def histogram(self) -> list[tuple[int, int]]:
        """(dimension, multiplicity) pairs in increasing dimension order."""
        out: list[tuple[int, int]] = []
        for d in self.dims:
            if out and out[-1][0] == d:
                out[-1] = (d, out[-1][1] + 1)
            else:
                out.append((d, 1))
        return out

    def spaces_str(self) -> str:
        parts = []
        for d, k in self.histogram():
            parts.append(f"{k} P^{d}" if k > 1 else f"P^{d}")
        return "{" + ", ".join(parts) + "}"

    def __str__(self) -> str:
        return f"{self.ambient}:{','.join(str(d) for d in self.dims)}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the three independent base checks."""

    base: IncidenceBase
    conditions: int
    required: int
    hyperplanes: tuple[int, ...]
    degenerate_pairs: tuple[tuple[int, int], ...]

    @property
    def incidence_condition(self) -> bool:
        return self.conditions == self.required

    @property
    def no_hyperplanes(self) -> bool:
        return not self.hyperplanes

    @property
    def nondegenerate(self) -> bool:
        return not self.degenerate_pairs

    @property
    def all_ok(self) -> bool:
        return self.incidence_condition and self.no_hyperplanes and self.nondegenerate

    def summary(self) -> str:
        if self.all_ok:
            return f"{self.base} is a valid incidence base"
        problems = []
        if not self.incidence_condition:
            problems.append(
                f"imposes {self.conditions} conditions, needs {self.required}"
            )
        if not self.no_hyperplanes:
            problems.append(f"contains hyperplanes of dimension {list(self.hyperplanes)}")
        if not self.nondegenerate:
            problems.append(
                "degenerate pairs " + ", ".join(str(p) for p in self.degenerate_pairs)
            )
        return f"{self.base}: " + "; ".join(problems)


def validate(b: IncidenceBase) -> ValidationReport:
    """Check the curve condition, absence of hyperplanes, and nondegeneracy.

    The three checks are independent; hyperplanes impose no condition and
    a pair with n_i + n_j < n - 1 forces every line into a proper subspace.
    """
    n = b.ambient
    hyperplanes = tuple(d for d in b.dims if d >= n - 1)
    degenerate = []
    for i in range(b.r):
        for j in range(i + 1, b.r):
            if b.dims[i] + b.dims[j] < n - 1:
                pair = (b.dims[i], b.dims[j])
                if pair not in degenerate:
                    degenerate.append(pair)
    return ValidationReport(
        base=b,
        conditions=b.condition_count(),
        required=2 * n - 3,
        hyperplanes=hyperplanes,
        degenerate_pairs=tuple(degenerate),
    )


def require_valid(b: IncidenceBase) -> None:
    report = validate(b)
    if not report.all_ok:
        raise BaseValidationError(report)


def normalize(b: IncidenceBase) -> IncidenceBase:
    """Drop hyperplanes and contract degenerate pairs until stable.

    A pair with n_i + n_j < n - 1 confines every line to the span
    P^M, M = n_i + n_j + 1; the pair keeps its dimensions there while every
    other space is cut down by the codimension n - M of the span.  Both
    steps preserve the condition-count defect, so a base satisfying the
    curve condition still satisfies it after normalization.  Pairs are
    reduced smallest dimension-sum first.
    """
    n = b.ambient
    dims = sorted(b.dims)
    while True:
        dims = [d for d in dims if d <= n - 2]
        if len(dims) < 2 or dims[0] + dims[1] >= n - 1:
            break
        ni, nj = dims[0], dims[1]
        span = ni + nj + 1
        if span < 2:
            raise UnrealizableBaseError(
                f"{b}: the lines through two general points form no surface"
            )
        shift = n - span
        rest = [d - shift for d in dims[2:]]
        if any(d < 0 for d in rest):
            raise UnrealizableBaseError(
                f"{b}: reducing pair ({ni}, {nj}) to P^{span} empties the configuration"
            )
        dims = sorted([ni, nj] + rest)
        n = span
    return IncidenceBase(n, tuple(dims))


@lru_cache(maxsize=None)
def _degree(n: int, codims: tuple[int, ...]) -> int:
    return intersection_number(n, codims + (1,))


def degree(b: IncidenceBase) -> int:
    """Degree of the swept scroll: the number of lines meeting every base
    space and one generic subspace of codimension 2."""
    require_valid(b)
    return _degree(b.ambient, b.codims())


def directrix_degree(b: IncidenceBase, k: int) -> int:
    """Degree of the directrix curve traced on the k-th base space.

    Counted as lines meeting all spaces with the k-th cut by a general
    hyperplane of itself, which raises its codimension condition by one and
    lands exactly in top degree.
    """
    require_valid(b)
    if not 0 <= k < b.r:
        raise ValueError(f"base space index {k} out of range")
    if b.dims[k] == 0:
        return 0
    n = b.ambient
    codims = [n - 1 - d for i, d in enumerate(b.dims) if i != k]
    codims.append(n - b.dims[k])
    return intersection_number(n, codims)


def min_directrix_degree(b: IncidenceBase) -> int:
    """Smallest directrix degree over the base spaces."""
    require_valid(b)
    best = None
    seen: set[int] = set()
    for k, d in enumerate(b.dims):
        if d in seen:
            continue
        seen.add(d)
        dk = directrix_degree(b, k)
        best = dk if best is None else min(best, dk)
    if best is None:
        raise BaseValidationError(validate(b))
    return best


def formula_genus(b: IncidenceBase, deg: int | None = None) -> int:
    """Genus from the ambient-dimension formula, valid only for nonspecial
    linearly normal scrolls; raises SpecialityError otherwise."""
    d = degree(b) if deg is None else deg
    t = d + 1 - b.ambient
    if t < 0 or t % 2 != 0:
        raise SpecialityError(
            f"{b}: nonspecial assumption violated, degree {d} in P^{b.ambient} "
            f"admits no integer genus"
        )
    return t // 2


@dataclass(frozen=True)
class BundleDescriptor:
    """Shape of the normalized rank-2 bundle behind a genus <= 1 scroll."""

    kind: str
    base_genus: int
    e: int
    e_divisor_trivial: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("decomposable", "indecomposable"):
            raise ValueError(f"unknown bundle kind {self.kind!r}")
        if self.base_genus not in (0, 1):
            raise ValueError("bundle descriptors cover base genus 0 and 1 only")
        if self.kind == "indecomposable":
            if self.base_genus != 1 or self.e not in (-1, 0):
                raise ValueError(
                    "indecomposable bundles occur only over elliptic curves with e in {-1, 0}"
                )
        elif self.e < 0:
            raise ValueError("decomposable bundles have e >= 0")
        if self.e_divisor_trivial and not (self.base_genus == 1 and self.e == 0):
            raise ValueError("the trivial-divisor flag applies to genus 1, e = 0 only")

    def describe(self) -> str:
        if self.kind == "indecomposable":
            return "Ext^1(O_C(P), O_C)" if self.e == -1 else "nonsplit, e = 0"
        if self.base_genus == 0:
            return "O + O" if self.e == 0 else f"O + O(-{self.e})"
        if self.e == 0:
            return "O_C + O_C" if self.e_divisor_trivial else "O_C + O_C(e), e !~ 0"
        if 1 <= self.e <= 3:
            return "O_C + O_C(" + "".join(f"-{p}" for p in "PQR"[: self.e]) + ")"
        return f"O_C + O_C(e), deg e = -{self.e}"


@dataclass(frozen=True)
class ScrollInvariants:
    """Numerical data of the scroll swept by a base.

    divisor_degree is the degree m of the fiber part of the hyperplane
    divisor; speciality is the correction i in ambient = degree - 2 genus
    + 1 + i and is zero exactly when the genus formula applies.
    """

    degree: int
    genus: int
    ambient: int
    e: int
    divisor_degree: int
    min_directrix_degree: int
    decomposable: bool
    speciality: int
    bundle: BundleDescriptor | None

    def __post_init__(self) -> None:
        if self.degree != 2 * self.divisor_degree - self.e:
            raise InternalConsistencyError(
                f"degree {self.degree} != 2*{self.divisor_degree} - {self.e}"
            )
        if self.e != self.degree - 2 * self.min_directrix_degree:
            raise InternalConsistencyError(
                f"e {self.e} != {self.degree} - 2*{self.min_directrix_degree}"
            )
        if self.ambient != self.degree - 2 * self.genus + 1 + self.speciality:
            raise InternalConsistencyError(
                f"ambient {self.ambient} != {self.degree} - 2*{self.genus} + 1 "
                f"+ {self.speciality}"
            )


@dataclass(frozen=True)
class CoreInvariants:
    """Genus-independent part of the invariants (pure Schubert data)."""

    degree: int
    min_directrix_degree: int
    e: int
    divisor_degree: int
    decomposable: bool


def core_invariants(b: IncidenceBase) -> CoreInvariants:
    require_valid(b)
    d = degree(b)
    min_dir = min_directrix_degree(b)
    e = d - 2 * min_dir
    m = (d + e) // 2
    # in general position the two smallest spaces are disjoint exactly when
    # their dimension sum is n - 1; nondegeneracy rules out anything smaller
    decomposable = b.r < 2 or b.dims[0] + b.dims[1] == b.ambient - 1
    return CoreInvariants(d, min_dir, e, m, decomposable)


def e_divisor_trivial(b: IncidenceBase, genus: int, core: CoreInvariants) -> bool:
    """Whether the degree-zero normalizing divisor is linearly trivial.

    Decidable without coordinates only for genus 1, e = 0 bases, where the
    trivial-divisor scroll has the unique base {3 P^3, 2 P^5} in P^7.
    """
    if genus != 1 or core.e != 0 or not core.decomposable:
        return False
    return b.ambient == 7 and b.dims == (3, 3, 3, 5, 5)


def bundle_for(b: IncidenceBase, genus: int, core: CoreInvariants) -> BundleDescriptor | None:
    if genus > 1:
        return None
    if genus == 0 and not core.decomposable:
        raise InternalConsistencyError(
            f"{b}: rational scroll classified as indecomposable"
        )
    kind = "decomposable" if core.decomposable else "indecomposable"
    return BundleDescriptor(
        kind=kind,
        base_genus=genus,
        e=core.e,
        e_divisor_trivial=e_divisor_trivial(b, genus, core),
    )


def invariants(b: IncidenceBase) -> ScrollInvariants:
    """Scroll invariants under the nonspecial assumption.

    The genus comes from the ambient-dimension formula; a base whose scroll
    is special is rejected with SpecialityError rather than being reported
    with a wrong genus.  For a genus computed independently of this
    assumption see the degeneration module.
    """
    core = core_invariants(b)
    g = formula_genus(b, deg=core.degree)
    return ScrollInvariants(
        degree=core.degree,
        genus=g,
        ambient=b.ambient,
        e=core.e,
        divisor_degree=core.divisor_degree,
        min_directrix_degree=core.min_directrix_degree,
        decomposable=core.decomposable,
        speciality=0,
        bundle=bundle_for(b, g, core),
    )
