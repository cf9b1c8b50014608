"""Machine-readable verification report (``chebwave check``)."""

from dataclasses import asdict, dataclass, field, fields
import json

from . import __version__
from .cascade import DEFAULT_TOL, markov_analysis, spectrum, transition_matrix
from .filterbank import analyze_bank
from .filters import make_filter


def fmt_float(x):
    """12 significant digits, normalized so ``-0`` prints as ``0``."""
    s = f"{float(x):.12g}"
    return "0" if s == "-0" else s


def _round12(x):
    return float(fmt_float(x))


@dataclass
class ReportDocument:
    kind: int
    order: int
    k: int
    taps: list
    alias_zero: bool
    distortion: dict
    pr_delay: int | None
    orthogonal: bool
    condition_e: bool
    eigenvalues: list
    unit_eigenvalue_multiplicity: int
    spectral_radius: float
    tolerance: float
    stochastic: bool
    column_sums: list
    irreducible: bool
    aperiodic: bool
    tool: str = "chebwave"
    version: str = __version__
    extra: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**data)


def build_report(kind, order, k=0, tol=DEFAULT_TOL):
    taps = make_filter(kind, order, k or None)
    bank = analyze_bank(taps)
    T = transition_matrix(taps)
    spec = spectrum(T, tol)
    markov = markov_analysis(T)
    return ReportDocument(
        kind=int(kind),
        order=int(order),
        k=int(k or 0),
        taps=[str(c) for c in taps.coefficients],
        alias_zero=bank.alias_zero,
        distortion={str(d): str(c) for d, c in sorted(bank.distortion_product.as_dict().items())},
        pr_delay=bank.pr_delay,
        orthogonal=bank.is_orthogonal,
        condition_e=spec.satisfies_condition_e,
        eigenvalues=[[_round12(v.real) + 0.0, _round12(v.imag) + 0.0] for v in spec.eigenvalues],
        unit_eigenvalue_multiplicity=spec.unit_eigenvalue_multiplicity,
        spectral_radius=_round12(spec.spectral_radius),
        tolerance=tol,
        stochastic=markov.is_stochastic,
        column_sums=[str(s) for s in markov.column_sums],
        irreducible=markov.is_irreducible,
        aperiodic=markov.is_aperiodic,
    )
