"""Authoritative store of the survey's surfaces.

The catalog holds the 15 quartic singularity types of the survey's table
(ids ``q-i`` .. ``q-xv``), the working-form model ``q-v-work`` of the 3A1
surface S3 used by the torsor derivation, and the four cubic surfaces S4..S7
(ids ``c-3a2``, ``c-cayley``, ``c-d4``, ``c-e6``).

Records are embedded constants, not user-editable.  The same data ships as a
human-readable text file (``data/surfaces.txt``) regenerated from these
constants; the two must match bit-for-bit (a release gate covered by tests).

Data provenance notes:

* The survey displays the six lines of S3 as ``x_i=x_2=x_j=0`` and
  ``x_0+x_2=x_1+x_2=x_j=0`` (i in {0,1}, j in {3,4}).  The spans written with
  ``x_0+x_2`` do **not** lie on either model of the surface (direct check:
  on the table model the point (1,-1,-1,0,0) of that span gives
  Q1 = -1+1 = 0 but the general point (s,-s,-s,0,t) gives Q2 = s^2+s^2 != 0).
  The verified lines use ``x_0-x_2=x_1+x_2=x_j=0`` on the table model and
  ``x_0-x_2=x_1-x_2=x_j=0`` on the working model; the count of 6 and the four
  coordinate lines are unchanged.  This is recorded as a sign typo in the
  source display.
* Picard ranks are stored only where the survey states them (S3: 6, S1: 6,
  S2: 4, S4/S5/S6/S7: 7); all other records carry ``None``.
* Line lists are stored where the survey states them (S3, S7, and S1's unique
  line) or where ``find_rational_lines`` certifies a complete rational list
  for split surfaces (S4, S5, S6); other records carry empty lists plus the
  table's geometric line count.
"""

from __future__ import annotations

import builtins
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable

from delpezzo.forms import IntForm, ProjectivePoint, evaluate, restrict_to_line
from delpezzo.geometry import Line, jacobian_rank_at

__all__ = [
    "SurfaceRecord",
    "RecordReport",
    "UnknownSurfaceError",
    "get",
    "list_surfaces",
    "verify_catalog",
    "records_to_text",
    "parse_text",
    "packaged_text",
]


class UnknownSurfaceError(KeyError):
    """Raised when a surface id is not in the catalog."""


@dataclass(frozen=True)
class SurfaceRecord:
    """A catalog row: equations, lines, singular points, and classification data."""

    id: str
    ambient_dim: int
    equations: tuple[IntForm, ...]
    singularity_type: str
    geometric_line_count: int
    picard_rank: int | None
    known_lines: tuple[Line, ...] = field(default=())
    known_singular_points: tuple[ProjectivePoint, ...] = field(default=())
    notes: str = ""

    def __post_init__(self) -> None:
        if self.ambient_dim not in (3, 4):
            raise ValueError(f"{self.id}: ambient dimension must be 3 or 4")
        if self.ambient_dim == 4:
            if len(self.equations) != 2 or any(eq.degree != 2 for eq in self.equations):
                raise ValueError(f"{self.id}: quartic records need exactly two degree-2 equations")
        else:
            if len(self.equations) != 1 or self.equations[0].degree != 3:
                raise ValueError(f"{self.id}: cubic records need exactly one degree-3 equation")
        for eq in self.equations:
            if eq.num_vars != self.ambient_dim + 1:
                raise ValueError(f"{self.id}: equation in {eq.num_vars} variables in P^{self.ambient_dim}")
        if self.geometric_line_count < 0:
            raise ValueError(f"{self.id}: negative line count")
        if self.picard_rank is not None and self.picard_rank < 1:
            raise ValueError(f"{self.id}: Picard rank must be positive")
        if "\n" in self.notes:
            raise ValueError(f"{self.id}: notes must be a single line")

    @property
    def degree(self) -> int:
        """Degree of the del Pezzo surface (equals the ambient dimension here)."""
        return self.ambient_dim


def _q(terms: dict[tuple[int, int, int, int, int], int]) -> IntForm:
    return IntForm.from_terms(5, 2, terms)


def _c(terms: dict[tuple[int, int, int, int], int]) -> IntForm:
    return IntForm.from_terms(4, 3, terms)


def _pt(*coords: int) -> ProjectivePoint:
    return ProjectivePoint(tuple(coords))


# Quartic monomials, for readability of the table below.
_X0X1 = (1, 1, 0, 0, 0)
_X0X2 = (1, 0, 1, 0, 0)
_X0X3 = (1, 0, 0, 1, 0)
_X0X4 = (1, 0, 0, 0, 1)
_X1X2 = (0, 1, 1, 0, 0)
_X1X3 = (0, 1, 0, 1, 0)
_X1X4 = (0, 1, 0, 0, 1)
_X2X3 = (0, 0, 1, 1, 0)
_X2X4 = (0, 0, 1, 0, 1)
_X3X4 = (0, 0, 0, 1, 1)
_X0SQ = (2, 0, 0, 0, 0)
_X1SQ = (0, 2, 0, 0, 0)
_X2SQ = (0, 0, 2, 0, 0)
_X3SQ = (0, 0, 0, 2, 0)
_X4SQ = (0, 0, 0, 0, 2)

_S3_SINGULAR_POINTS = (_pt(1, 0, 0, 0, 0), _pt(0, 0, 0, 1, 0), _pt(0, 0, 0, 0, 1))

# The six lines of S3 on the table model: x_i=x_2=x_j=0 and x_0-x_2=x_1+x_2=x_j=0.
_S3_TABLE_LINES = (
    Line.from_points((0, 1, 0, 0, 0), (0, 0, 0, 0, 1)),
    Line.from_points((0, 1, 0, 0, 0), (0, 0, 0, 1, 0)),
    Line.from_points((1, 0, 0, 0, 0), (0, 0, 0, 0, 1)),
    Line.from_points((1, 0, 0, 0, 0), (0, 0, 0, 1, 0)),
    Line.from_points((1, -1, 1, 0, 0), (0, 0, 0, 0, 1)),
    Line.from_points((1, -1, 1, 0, 0), (0, 0, 0, 1, 0)),
)

# The same six lines carried through x0 -> -x0, x2 -> -x2 to the working model.
_S3_WORK_LINES = (
    Line.from_points((0, 1, 0, 0, 0), (0, 0, 0, 0, 1)),
    Line.from_points((0, 1, 0, 0, 0), (0, 0, 0, 1, 0)),
    Line.from_points((1, 0, 0, 0, 0), (0, 0, 0, 0, 1)),
    Line.from_points((1, 0, 0, 0, 0), (0, 0, 0, 1, 0)),
    Line.from_points((1, 1, 1, 0, 0), (0, 0, 0, 0, 1)),
    Line.from_points((1, 1, 1, 0, 0), (0, 0, 0, 1, 0)),
)

_RECORDS: tuple[SurfaceRecord, ...] = (
    SurfaceRecord(
        id="q-i",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2X3: 1}), _q({_X0X3: 1, _X1X2: 1, _X2X4: 1, _X3X4: 1})),
        singularity_type="A1",
        geometric_line_count=12,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-ii",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2X3: 1}), _q({_X0X3: 1, _X1X2: 1, _X2X4: 1, _X4SQ: 1})),
        singularity_type="2A1",
        geometric_line_count=9,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-iii",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: 1}), _q({_X0X2: 1, _X1X2: 1, _X3X4: 1})),
        singularity_type="2A1",
        geometric_line_count=8,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-iv",
        ambient_dim=4,
        equations=(
            _q({_X0X1: 1, _X2X3: 1}),
            # x2x3 + x4(x0+x1+x2-x3), expanded
            _q({_X2X3: 1, _X0X4: 1, _X1X4: 1, _X2X4: 1, _X3X4: -1}),
        ),
        singularity_type="A2",
        geometric_line_count=8,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-v",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: 1}), _q({_X1X2: 1, _X2SQ: 1, _X3X4: 1})),
        singularity_type="3A1",
        geometric_line_count=6,
        picard_rank=6,
        known_lines=_S3_TABLE_LINES,
        known_singular_points=_S3_SINGULAR_POINTS,
        notes=(
            "The survey's split 3A1 example S3 (rho-1=5). The survey prints the last two lines as "
            "x0+x2=x1+x2=xj=0, but those spans do not lie on the surface; the verified lines use "
            "x0-x2=x1+x2=xj=0 (sign typo in the source display)."
        ),
    ),
    SurfaceRecord(
        id="q-vi",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2X3: 1}), _q({_X1SQ: 1, _X2SQ: 1, _X3X4: 1})),
        singularity_type="A1+A2",
        geometric_line_count=6,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-vii",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2X3: 1}), _q({_X1X3: 1, _X2SQ: 1, _X4SQ: 1})),
        singularity_type="A3",
        geometric_line_count=5,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-viii",
        ambient_dim=4,
        equations=(
            _q({_X0X1: 1, _X2SQ: 1}),
            # (x0+x1)^2 + x2x4 + x3^2, expanded
            _q({_X0SQ: 1, _X0X1: 2, _X1SQ: 1, _X2X4: 1, _X3SQ: 1}),
        ),
        singularity_type="A3",
        geometric_line_count=4,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-ix",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: 1}), _q({_X2SQ: 1, _X3X4: 1})),
        singularity_type="4A1",
        geometric_line_count=4,
        picard_rank=None,
        notes="Equivariant compactification of G_m^2 (toric); Manin's conjecture known.",
    ),
    SurfaceRecord(
        id="q-x",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: 1}), _q({_X1X2: 1, _X3X4: 1})),
        singularity_type="2A1+A2",
        geometric_line_count=4,
        picard_rank=None,
        notes="Equivariant compactification of G_m^2 (toric); Manin's conjecture known.",
    ),
    SurfaceRecord(
        id="q-xi",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: 1}), _q({_X0SQ: 1, _X2X4: 1, _X3SQ: 1})),
        singularity_type="A1+A3",
        geometric_line_count=3,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-xii",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2X3: 1}), _q({_X0X4: 1, _X1X3: 1, _X2SQ: 1})),
        singularity_type="A4",
        geometric_line_count=3,
        picard_rank=None,
    ),
    SurfaceRecord(
        id="q-xiii",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: 1}), _q({_X0SQ: 1, _X1X4: 1, _X3SQ: 1})),
        singularity_type="D4",
        geometric_line_count=2,
        picard_rank=4,
        notes=(
            "The survey's example S2 (rho=4); not split: contains the conjugate pair of lines "
            "x1=x2=x0+-i*x3=0; singularity type C3 over Q, becoming D4 over the algebraic closure."
        ),
    ),
    SurfaceRecord(
        id="q-xiv",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: 1}), _q({_X0SQ: 1, _X3X4: 1})),
        singularity_type="2A1+A3",
        geometric_line_count=2,
        picard_rank=None,
        notes="Equivariant compactification of G_m^2 (toric); Manin's conjecture known.",
    ),
    SurfaceRecord(
        id="q-xv",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: 1}), _q({_X0X4: 1, _X1X2: 1, _X3SQ: 1})),
        singularity_type="D5",
        geometric_line_count=1,
        picard_rank=6,
        known_lines=(Line.from_points((0, 1, 0, 0, 0), (0, 0, 0, 0, 1)),),
        notes=(
            "The survey's example S1 (rho=6); equivariant compactification of G_a^2; "
            "the unique line x0=x2=x3=0 is stated in the survey."
        ),
    ),
    SurfaceRecord(
        id="q-v-work",
        ambient_dim=4,
        equations=(_q({_X0X1: 1, _X2SQ: -1}), _q({_X2SQ: 1, _X1X2: -1, _X3X4: 1})),
        singularity_type="3A1",
        geometric_line_count=6,
        picard_rank=6,
        known_lines=_S3_WORK_LINES,
        known_singular_points=_S3_SINGULAR_POINTS,
        notes=(
            "Working model of S3 from the torsor derivation (Q1=x0x1-x2^2, Q2=x2^2-x1x2+x3x4); "
            "related to q-v by the substitution x0 -> -x0, x2 -> -x2, which negates Q1 and preserves "
            "Q2, hence is a height-preserving isomorphism. The torsor_s3 module counts on this model; "
            "its diagonal lines are x0-x2=x1-x2=xj=0."
        ),
    ),
    SurfaceRecord(
        id="c-3a2",
        ambient_dim=3,
        equations=(_c({(3, 0, 0, 0): 1, (0, 1, 1, 1): -1}),),
        singularity_type="3A2",
        geometric_line_count=3,
        picard_rank=7,
        known_lines=(
            Line.from_points((0, 0, 1, 0), (0, 0, 0, 1)),
            Line.from_points((0, 1, 0, 0), (0, 0, 0, 1)),
            Line.from_points((0, 1, 0, 0), (0, 0, 1, 0)),
        ),
        known_singular_points=(_pt(0, 1, 0, 0), _pt(0, 0, 1, 0), _pt(0, 0, 0, 1)),
        notes=(
            "The survey's S4 (x0^3 = x1x2x3); toric; asymptotic of shape (c3) known with deg f = 6, "
            "hence rho=7. Line list certified by find_rational_lines (not stated in the survey)."
        ),
    ),
    SurfaceRecord(
        id="c-cayley",
        ambient_dim=3,
        equations=(_c({(1, 1, 1, 0): 1, (1, 1, 0, 1): 1, (1, 0, 1, 1): 1, (0, 1, 1, 1): 1}),),
        singularity_type="4A1",
        geometric_line_count=9,
        picard_rank=7,
        known_lines=(
            Line.from_points((0, 0, 1, 0), (0, 0, 0, 1)),
            Line.from_points((0, 1, 0, 0), (0, 0, 0, 1)),
            Line.from_points((0, 1, 0, 0), (0, 0, 1, 0)),
            Line.from_points((1, 0, 0, 0), (0, 0, 0, 1)),
            Line.from_points((1, 0, 0, 0), (0, 0, 1, 0)),
            Line.from_points((1, 0, 0, 0), (0, 1, 0, 0)),
            Line.from_points((1, -1, 0, 0), (0, 0, 1, -1)),
            Line.from_points((1, 0, -1, 0), (0, 1, 0, -1)),
            Line.from_points((1, 0, 0, -1), (0, 1, -1, 0)),
        ),
        known_singular_points=(_pt(1, 0, 0, 0), _pt(0, 1, 0, 0), _pt(0, 0, 1, 0), _pt(0, 0, 0, 1)),
        notes="The survey's S5, the Cayley cubic; 9 lines all defined over Q; Picard rank 7.",
    ),
    SurfaceRecord(
        id="c-d4",
        ambient_dim=3,
        equations=(
            # x1x2x3 - x0(x1+x2+x3)^2, expanded
            _c(
                {
                    (0, 1, 1, 1): 1,
                    (1, 2, 0, 0): -1,
                    (1, 0, 2, 0): -1,
                    (1, 0, 0, 2): -1,
                    (1, 1, 1, 0): -2,
                    (1, 1, 0, 1): -2,
                    (1, 0, 1, 1): -2,
                }
            ),
        ),
        singularity_type="D4",
        geometric_line_count=6,
        picard_rank=7,
        known_lines=(
            Line.from_points((0, 0, 1, 0), (0, 0, 0, 1)),
            Line.from_points((0, 1, 0, 0), (0, 0, 0, 1)),
            Line.from_points((0, 1, 0, 0), (0, 0, 1, 0)),
            Line.from_points((1, 0, 0, 0), (0, 1, -1, 0)),
            Line.from_points((1, 0, 0, 0), (0, 1, 0, -1)),
            Line.from_points((1, 0, 0, 0), (0, 0, 1, -1)),
        ),
        known_singular_points=(_pt(1, 0, 0, 0),),
        notes=(
            "The survey's S6 (x1x2x3 = x0(x1+x2+x3)^2); order B (log B)^6 upper and lower bounds "
            "known; Picard rank 7. Line list certified by find_rational_lines (not stated in the survey)."
        ),
    ),
    SurfaceRecord(
        id="c-e6",
        ambient_dim=3,
        equations=(_c({(0, 1, 2, 0): 1, (2, 0, 1, 0): 1, (0, 0, 0, 3): 1}),),
        singularity_type="E6",
        geometric_line_count=1,
        picard_rank=7,
        known_lines=(Line.from_points((1, 0, 0, 0), (0, 1, 0, 0)),),
        known_singular_points=(_pt(0, 1, 0, 0),),
        notes=(
            "The survey's S7 (x1x2^2 + x2x0^2 + x3^3 = 0); unique line x2=x3=0; rho=7. "
            "Universal torsor equation (recorded verbatim): τℓξℓ³ξ₄²ξ₅+τ₂²ξ₂+τ₁³ξ₁²ξ₃=0"
        ),
    ),
)

_BY_ID: dict[str, SurfaceRecord] = {record.id: record for record in _RECORDS}


def get(surface_id: str) -> SurfaceRecord:
    """The full record for ``surface_id``; raises :class:`UnknownSurfaceError` otherwise."""
    try:
        return _BY_ID[surface_id]
    except KeyError:
        raise UnknownSurfaceError(surface_id) from None


def list_surfaces() -> builtins.list[SurfaceRecord]:
    """All 20 records in deterministic order: table types i-xv, the working model, then the cubics."""
    return [*_RECORDS]


# Spec name for the listing operation; ``list_surfaces`` is the importable alias
# that does not shadow the builtin.
list = list_surfaces


@dataclass(frozen=True)
class RecordReport:
    """Per-record verification outcome with reasons for any failure."""

    record_id: str
    passed: bool
    failures: tuple[str, ...]


def verify_catalog(records: Iterable[SurfaceRecord] | None = None) -> builtins.list[RecordReport]:
    """Verify every record: lines on-surface, singular points singular, full line lists complete.

    Failures are report entries, never exceptions.  Passing on the shipped
    catalog is a release gate.
    """
    reports = []
    for record in _RECORDS if records is None else records:
        failures: builtins.list[str] = []
        for line in record.known_lines:
            r1, r2 = line.basis
            for eq in record.equations:
                if any(c != 0 for c in restrict_to_line(eq, r1, r2)):
                    failures.append(f"line {line} does not lie on the surface (equation {eq})")
        for point in record.known_singular_points:
            on_surface = all(evaluate(eq, point.coords) == 0 for eq in record.equations)
            if not on_surface:
                failures.append(f"singular point {point.coords} is not on the surface")
                continue
            rank = jacobian_rank_at(record, point)
            if rank >= len(record.equations):
                failures.append(
                    f"point {point.coords} has full Jacobian rank {rank}; not singular"
                )
        if record.known_lines and len(record.known_lines) != record.geometric_line_count:
            failures.append(
                f"line list has {len(record.known_lines)} entries, expected {record.geometric_line_count}"
            )
        reports.append(RecordReport(record.id, not failures, tuple(failures)))
    return reports


# --------------------------------------------------------------------------
# Text serialization.
#
# One record per block, blocks separated by a blank line, UTF-8, '#' comments:
#   id=<string>
#   dim=<3|4>                    ambient dimension
#   deg=<3|4>                    degree of the del Pezzo surface
#   eq= <monomials>              one line per equation; monomials as coef:e0,e1,...,en
#   line= <row;row>              2x(n+1) basis matrix, row-major, semicolon rows
#   singpt= <vector>             one line per known singular point
#   sing=<label>
#   nlines=<int>
#   rho=<int or ?>
#   note=<single line, possibly empty>
# --------------------------------------------------------------------------

_HEADER = (
    "# delpezzo surface catalog\n"
    "# Generated from the embedded constants in delpezzo.catalog; the two must match bit-for-bit.\n"
    "# Format: id=, dim=, deg=, eq= (coef:e0,...,en monomials), line= (2x(n+1) row-major basis,\n"
    "# semicolon rows), singpt=, sing=, nlines=, rho= (or rho=?), note=.\n"
)


def _form_to_text(form: IntForm) -> str:
    return " ".join(
        f"{coefficient}:{','.join(str(e) for e in exponents)}" for exponents, coefficient in form.terms
    )


def _form_from_text(text: str, num_vars: int) -> IntForm:
    terms: dict[tuple[int, ...], int] = {}
    for token in text.split():
        coefficient_text, exponents_text = token.split(":")
        exponents = tuple(int(e) for e in exponents_text.split(","))
        if len(exponents) != num_vars:
            raise ValueError(f"monomial {token} has {len(exponents)} exponents, expected {num_vars}")
        terms[exponents] = int(coefficient_text)
    degree = sum(next(iter(terms)))
    return IntForm.from_terms(num_vars, degree, terms)


def record_to_text(record: SurfaceRecord) -> str:
    lines = [f"id={record.id}", f"dim={record.ambient_dim}", f"deg={record.degree}"]
    for eq in record.equations:
        lines.append(f"eq= {_form_to_text(eq)}")
    for line in record.known_lines:
        lines.append(f"line= {line}")
    for point in record.known_singular_points:
        lines.append(f"singpt= {','.join(str(c) for c in point.coords)}")
    lines.append(f"sing={record.singularity_type}")
    lines.append(f"nlines={record.geometric_line_count}")
    lines.append(f"rho={'?' if record.picard_rank is None else record.picard_rank}")
    lines.append(f"note={record.notes}")
    return "\n".join(lines)


def records_to_text(records: Iterable[SurfaceRecord] | None = None) -> str:
    body = "\n\n".join(record_to_text(record) for record in (_RECORDS if records is None else records))
    return f"{_HEADER}\n{body}\n"


def parse_text(text: str) -> builtins.list[SurfaceRecord]:
    """Parse the catalog text format back into records (inverse of :func:`records_to_text`)."""
    blocks: builtins.list[dict[str, builtins.list[str]]] = []
    current: dict[str, builtins.list[str]] = {}
    for raw in text.splitlines():
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "id" and current:
            blocks.append(current)
            current = {}
        current.setdefault(key, []).append(value)
    if current:
        blocks.append(current)

    records = []
    for block in blocks:
        def single(key: str) -> str:
            values = block.get(key, [])
            if len(values) != 1:
                raise ValueError(f"expected exactly one '{key}=' line per record, got {len(values)}")
            return values[0]

        dim = int(single("dim"))
        num_vars = dim + 1
        if int(single("deg")) != dim:
            raise ValueError(f"record {single('id')}: deg and dim disagree")
        equations = tuple(_form_from_text(text, num_vars) for text in block.get("eq", []))
        known_lines = tuple(
            Line.from_points(*(tuple(int(c) for c in row.split(",")) for row in value.split(";")))
            for value in block.get("line", [])
        )
        singular_points = tuple(
            ProjectivePoint(tuple(int(c) for c in value.split(","))) for value in block.get("singpt", [])
        )
        rho_text = single("rho")
        records.append(
            SurfaceRecord(
                id=single("id"),
                ambient_dim=dim,
                equations=equations,
                singularity_type=single("sing"),
                geometric_line_count=int(single("nlines")),
                picard_rank=None if rho_text == "?" else int(rho_text),
                known_lines=known_lines,
                known_singular_points=singular_points,
                notes=single("note"),
            )
        )
    return records


def packaged_text() -> str:
    """Contents of the shipped ``data/surfaces.txt`` (must equal ``records_to_text()``)."""
    return resources.files("delpezzo").joinpath("data/surfaces.txt").read_text(encoding="utf-8")
