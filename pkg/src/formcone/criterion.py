"""Cohen-Macaulayness criterion via level-n colon-stable modules.

For a system a_1..a_t with initial degrees c_i, the level-n module is

    D(n) = (intersection over i of the stabilized (q^(n+l*c_i) M : a_i^l)) / q^n M.

Vanishing of D(n) for every n is equivalent to the initial-form ideal
containing a regular element on the associated graded module; iterating that
step through M -> M/bM computes the grade of the initial-form ideal, which a
Koszul computation must reproduce exactly.  When the initial forms are a
system of parameters that grade equals the depth, and depth = dimension is
the Cohen-Macaulay verdict.

Nonvanishing detections are exact (the probed chain only grows); vanishing
verdicts are bounded by n_max/l_max and every record says so via
``certified=False``.  The exact graded route is always the authority.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    ConsistencyError,
    DegenerateSystemError,
    ValidationError,
)
from .filtration import FiltrationContext, GradedQuotientPresentation
from .graded import (
    GradedElement,
    GradeReport,
    depth,
    graded_dim,
    is_regular_element,
    is_system_of_parameters,
    koszul_grade,
)
from .ideals import PresentedIdeal
from .rings import Polynomial


@dataclass(frozen=True)
class CriterionParams:
    """All scan bounds and search budgets in one place; everything configurable."""

    n_max: int = 10
    l_max: int = 12
    window: int = 2
    degree_cap: int = 8
    probe_cap: int = 12
    step_budget: int = 10**6
    search_degree_span: int = 2
    search_extra_degree: int = 2
    search_coefficients: tuple[int, ...] = (1, -1, 2, -2, 3)
    search_budget: int = 4000
    search_random_rounds: int = 64
    seed: int = 20260810

    def __post_init__(self):
        if self.n_max < 0 or self.l_max < 1 or self.window < 1:
            raise ValidationError("need n_max >= 0, l_max >= 1, window >= 1")
        if self.degree_cap < 0 or self.probe_cap < 1 or self.step_budget < 1:
            raise ValidationError("need degree_cap >= 0, probe_cap >= 1, step_budget >= 1")


DEFAULT_PARAMS = CriterionParams()


@dataclass(frozen=True)
class DefectRecord:
    """Level-n snapshot: the stabilized colon intersection and its verdict.

    ``certified`` is always False: the l-chain stops on a window of
    consecutive equalities (or on budget), which does not self-certify
    because the colon target moves with l.  Nonvanishing, by contrast, is
    exact as soon as it is seen.
    """

    n: int
    stabilized_l: int
    window: int
    ideal: PresentedIdeal
    vanishing: bool
    quotient_generators: tuple[Polynomial, ...]
    certified: bool
    status: str  # "stabilized" | "budget"


@dataclass(frozen=True)
class ScanResult:
    records: tuple[DefectRecord, ...]
    all_vanish: bool
    first_nonvanishing: int | None
    budget_limited: bool


@dataclass(frozen=True)
class CertificateStep:
    """One recursion step: a ring element whose initial form was verified regular."""

    element: Polynomial
    degree: int
    image: GradedElement


@dataclass(frozen=True)
class EquivalenceResult:
    agree: bool
    all_vanish: bool
    regular_exists: bool
    classification: str  # "ok" | "raise-budgets" | "contradiction"
    scan: ScanResult
    annihilator_witness: Polynomial | None
    regular_certificate: CertificateStep | None


@dataclass(frozen=True)
class CriterionReport:
    depth: int
    dim: int
    grade_direct: int
    grade_recursion: int
    lzero_table: tuple[DefectRecord, ...]
    sop_flag: bool
    cm_verdict: bool
    predicted_band: tuple[int, int]
    notes: tuple[str, ...]
    depth_report: GradeReport
    direct_report: GradeReport
    recursion_report: GradeReport
    system_images: tuple[GradedElement, ...]


def _require_usable_system(ctx: FiltrationContext):
    if not ctx.system:
        raise ValidationError("the criterion needs a nonempty system of elements")
    for s in ctx.system:
        if s.zero_flag:
            raise DegenerateSystemError(
                f"system element {s.element} lies in every probed power of the "
                f"filtration ideal (cap {ctx.probe_cap}); its initial form is zero "
                "by convention and the criterion does not apply"
            )


def _require_exact_system(ctx: FiltrationContext):
    _require_usable_system(ctx)
    for s in ctx.system:
        if not s.exact:
            raise ValidationError(
                f"system element {s.element} carries a membership exponent "
                f"{s.degree} that is not its initial degree; the graded routes "
                "need exact initial forms"
            )


# ---------------------------------------------------------------------------
# Level-n scan
# ---------------------------------------------------------------------------

def defect_at(ctx: FiltrationContext, n: int,
              params: CriterionParams = DEFAULT_PARAMS) -> DefectRecord:
    """Stabilize the l-chain of colon intersections at level n.

    The ascending-chain property is asserted at every step; violating it is
    an internal bug, not an input problem.  Budget exhaustion is a reported
    status, never an exception.
    """
    _require_usable_system(ctx)
    if n < 0:
        raise ValidationError("level must be nonnegative")
    key = ("defect", n, params.l_max, params.window)
    if key in ctx.scratch:
        return ctx.scratch[key]

    prev: PresentedIdeal | None = None
    run = 0
    status = "budget"
    stabilized_l = params.l_max
    current: PresentedIdeal | None = None
    for l in range(1, params.l_max + 1):
        pieces = []
        for i, s in enumerate(ctx.system):
            pieces.append(ctx.power_colon(n + l * s.degree, ctx.system_power(i, l)))
        current = pieces[0]
        for piece in pieces[1:]:
            current = current.intersect(piece)
        if prev is not None:
            if not current.contains_ideal(prev):
                raise ConsistencyError(
                    f"colon chain is not ascending at level n={n}, l={l}"
                )
            if current.equals(prev):
                run += 1
            else:
                run = 0
        if run == params.window:
            status = "stabilized"
            stabilized_l = l - params.window
            break
        prev = current

    target = ctx.q_power(n)
    if not current.contains_ideal(target):
        raise ConsistencyError(f"sandwich violated at level n={n}: q^n M not inside the chain")
    gb = current.groebner().generators
    residues = []
    for g in gb:
        r = target.reduce(g)
        if not r.is_zero() and r not in residues:
            residues.append(r)
    record = DefectRecord(
        n=n,
        stabilized_l=stabilized_l,
        window=params.window,
        ideal=current,
        vanishing=not residues,
        quotient_generators=tuple(residues),
        certified=False,
        status=status,
    )
    ctx.scratch[key] = record
    return record


def defect_scan(ctx: FiltrationContext, params: CriterionParams = DEFAULT_PARAMS,
                stop_at_first: bool = False) -> ScanResult:
    """Levels 0..n_max; the summary verdict is all-vanish or the first
    nonvanishing level (which is exact evidence)."""
    records = []
    first = None
    for n in range(params.n_max + 1):
        rec = defect_at(ctx, n, params)
        records.append(rec)
        if not rec.vanishing and first is None:
            first = n
            if stop_at_first:
                break
    return ScanResult(
        records=tuple(records),
        all_vanish=first is None,
        first_nonvanishing=first,
        budget_limited=any(r.status == "budget" for r in records),
    )


# ---------------------------------------------------------------------------
# Exact graded side and the candidate search
# ---------------------------------------------------------------------------

def system_images(ctx: FiltrationContext,
                  pres: GradedQuotientPresentation | None = None) -> tuple[GradedElement, ...]:
    """Initial forms of the system as elements of the graded presentation.

    Rejects systems whose initial forms act as the unit ideal (for example a
    degree-0 element that is a unit on the module): every grade degenerates
    to the +infinity sentinel and the criterion does not apply.
    """
    _require_exact_system(ctx)
    pres = pres or ctx.form_presentation("module")
    out = []
    for s in ctx.system:
        image = ctx.graded_image(s.element, s.degree, pres)
        out.append(GradedElement(pres, image, s.degree))
    if not pres.ideal.sum_with(*(e.representative for e in out)).is_proper():
        raise ValidationError(
            "the system's initial forms act as the unit ideal on the graded "
            "module; grades would be the infinite sentinel and the criterion "
            "does not apply"
        )
    return tuple(out)


def regular_form_exists(ctx: FiltrationContext) -> tuple[bool, Polynomial | None]:
    """Exact test: the initial-form ideal contains a regular element on the
    graded module iff its annihilator there is zero.

    Returns the verdict and, when negative, a nonzero annihilator class that
    kills every candidate at once.
    """
    pres = ctx.form_presentation("module")
    images = system_images(ctx, pres)
    reps = tuple(e.representative for e in images)
    ann = pres.ideal.colon_ideal(pres.ideal.spawn(reps))
    if ann.equals(pres.ideal):
        return True, None
    witness = next(
        (w for w in (pres.reduce(g) for g in ann.groebner().generators) if not w.is_zero()),
        None,
    )
    if witness is None:
        raise ConsistencyError("annihilator grew but reduced to nothing")
    return False, witness


def _candidate_multipliers(ctx: FiltrationContext, c_i: int, d: int,
                           params: CriterionParams) -> list[Polynomial]:
    """Multipliers m with m*a expected in degree d: products of filtration
    generators of degree d-c_i, optionally times low-degree ambient monomials
    that do not raise the initial degree."""
    if d < c_i:
        return []
    base = [p for _, p in ctx.q_power_products(d - c_i)]
    out = list(base)
    ring = ctx.ring
    if params.search_extra_degree > 0:
        from itertools import product as cartesian

        for expts in cartesian(*(range(params.search_extra_degree + 1) for _ in range(ring.nvars))):
            total = sum(expts)
            if total == 0 or total > params.search_extra_degree:
                continue
            mono = ring.monomial(expts, 1)
            for p in base:
                out.append(mono * p)
    return out


def _coefficient_sets(ctx: FiltrationContext, params: CriterionParams,
                      rng: random.Random) -> list:
    p = ctx.ring.field.characteristic
    if p == 0:
        coeffs = list(params.search_coefficients)
        extra = [rng.randint(2, 9) for _ in range(4)]
        return coeffs + [c for c in extra if c not in coeffs]
    nonzero = list(range(1, p))
    if len(nonzero) > 8:
        nonzero = nonzero[:8] + [rng.randrange(1, p) for _ in range(4)]
    return nonzero


def find_regular_lift(ctx: FiltrationContext,
                      params: CriterionParams = DEFAULT_PARAMS) -> CertificateStep | None:
    """Search the system's ideal for an element whose initial form is regular
    on the graded module; every candidate is checked exactly.

    Failure is a search-budget outcome, never a mathematical verdict.
    """
    _require_exact_system(ctx)
    pres = ctx.form_presentation("module")
    rng = random.Random(params.seed)
    coeffs = _coefficient_sets(ctx, params, rng)
    degrees = sorted({s.degree for s in ctx.system})
    d_min = min(degrees)
    budget = params.search_budget

    def try_candidate(b: Polynomial, d: int) -> CertificateStep | None:
        try:
            if ctx.initial_degree(b) != d:
                return None
        except ValidationError:
            return None
        image = ctx.graded_image(b, d, pres)
        if image.is_zero():
            return None
        element = GradedElement(pres, image, d)
        if is_regular_element(pres, element).regular:
            return CertificateStep(b, d, element)
        return None

    for d in range(d_min, d_min + params.search_degree_span + 1):
        pools = [
            [m * s.element for m in _candidate_multipliers(ctx, s.degree, d, params)]
            for s in ctx.system
        ]
        # single-generator candidates (scaling never changes regularity)
        for pool in pools:
            for b in pool:
                budget -= 1
                if budget < 0:
                    return None
                found = try_candidate(b, d)
                if found:
                    return found
        # pairwise combinations with small coefficients
        t = len(pools)
        for i in range(t):
            for j in range(i + 1, t):
                for bi in pools[i][:12]:
                    for bj in pools[j][:12]:
                        for lam in coeffs:
                            budget -= 1
                            if budget < 0:
                                return None
                            found = try_candidate(bi + bj.scale(lam), d)
                            if found:
                                return found
        # pseudorandom full combinations
        for _ in range(params.search_random_rounds):
            acc = ctx.ring.zero()
            for pool in pools:
                if not pool:
                    continue
                acc = acc + rng.choice(pool).scale(rng.choice(coeffs))
            budget -= 1
            if budget < 0:
                return None
            if acc.is_zero():
                continue
            found = try_candidate(acc, d)
            if found:
                return found
    return None


def defect_regularity_equivalence(ctx: FiltrationContext,
                                  params: CriterionParams = DEFAULT_PARAMS) -> EquivalenceResult:
    """Both sides of the vanishing criterion, cross-checked.

    Left: the bounded scan's all-vanish verdict.  Right: the exact existence
    of a regular initial form (annihilator test), plus an explicit certificate
    from the candidate search when one exists.  A disagreement whose scan side
    is budget-bounded means "raise n_max/l_max"; a disagreement with an exact
    nonvanishing witness is an internal failure.
    """
    scan = defect_scan(ctx, params)
    exists, ann_witness = regular_form_exists(ctx)
    certificate = find_regular_lift(ctx, params) if exists else None
    agree = scan.all_vanish == exists
    if agree:
        classification = "ok"
    elif scan.all_vanish and not exists:
        classification = "raise-budgets"
    else:
        raise ConsistencyError(
            "exact nonvanishing witness coexists with a regular initial form; "
            f"first nonvanishing level {scan.first_nonvanishing}"
        )
    return EquivalenceResult(
        agree=agree,
        all_vanish=scan.all_vanish,
        regular_exists=exists,
        classification=classification,
        scan=scan,
        annihilator_witness=ann_witness,
        regular_certificate=certificate,
    )


# ---------------------------------------------------------------------------
# Grade recursion and the full report
# ---------------------------------------------------------------------------

def grade_by_recursion(ctx: FiltrationContext,
                       params: CriterionParams = DEFAULT_PARAMS) -> GradeReport:
    """Count verified regular steps M -> M/bM until a level stops vanishing.

    Every step's regularity is certified exactly; the terminal nonvanishing
    is exact as well.  If the scan says all-vanish but no regular initial
    form exists, the bounds were too small and a budget error is raised.
    """
    _require_exact_system(ctx)
    dim_guard = ctx.ideal_m.krull_dim() + 1
    work = ctx
    steps: list[CertificateStep] = []
    while True:
        scan = defect_scan(work, params, stop_at_first=True)
        if not scan.all_vanish:
            return GradeReport(len(steps), "lzero-recursion", tuple(steps))
        exists, _ = regular_form_exists(work)
        if not exists:
            raise BudgetExceededError(
                "scan reports all-vanish up to n_max but no regular initial form "
                "exists; raise n_max or l_max"
            )
        cand = find_regular_lift(work, params)
        if cand is None:
            raise BudgetExceededError(
                "a regular initial form exists but the candidate search budget "
                "ran out; widen search_degree_span/search_budget"
            )
        steps.append(cand)
        work = work.quotient_by_element(cand.element)
        if len(steps) > dim_guard:
            raise ConsistencyError("recursion depth exceeded the module dimension")


def cohen_macaulay_report(ctx: FiltrationContext,
                          params: CriterionParams = DEFAULT_PARAMS) -> CriterionReport:
    """Assemble depth, dimension, both grade routes, and the verdict.

    Internal consistency is asserted, not assumed: the two grade routes must
    agree, the graded dimension must equal the module dimension, and for a
    system of parameters the grade must equal the depth.

    Depth takes the maximal homogeneous ideal at the origin, so the filtration
    ideal must sit inside the variable ideal; other inputs are refused here
    (scans, the equivalence check, and the grade recursion still apply).
    """
    _require_exact_system(ctx)
    if ctx.local_model_mismatch:
        raise ValidationError(
            "filtration ideal is not inside the variable ideal; depth and the "
            "Cohen-Macaulay verdict assume the distinguished point is the "
            "origin (translate coordinates first)"
        )
    pres = ctx.form_presentation("module")
    dim_graded = graded_dim(pres)
    dim_module = ctx.ideal_m.krull_dim()
    if dim_graded != dim_module:
        raise ConsistencyError(
            f"graded dimension {dim_graded} differs from module dimension {dim_module}"
        )
    depth_report = depth(pres)
    images = system_images(ctx, pres)
    direct = koszul_grade(pres, images)
    recursion = grade_by_recursion(ctx, params)
    if direct.value != recursion.value:
        raise ConsistencyError(
            "grade mismatch between the Koszul route and the recursion: "
            f"{direct.value} vs {recursion.value}; system="
            f"{[str(s.element) for s in ctx.system]}"
        )
    scan = defect_scan(ctx, params)
    sop = is_system_of_parameters(pres, images)
    if sop and depth_report.value != direct.value:
        raise ConsistencyError(
            f"system of parameters but grade {direct.value} != depth {depth_report.value}"
        )
    depth_value = int(depth_report.value)
    cm = depth_value == dim_graded
    notes = [
        "higher-index nonvanishing (indexes depth..dim) is predicted by the grade "
        "identity, not computed directly",
        "vanishing verdicts are bounded (certified=false); nonvanishing and all "
        "graded certificates are exact",
        "depth generators include the degree-0 residue classes of the ambient "
        "variables that survive in the graded quotient",
    ]
    if scan.budget_limited:
        notes.append("some levels hit l_max before stabilizing; treat their vanishing as provisional")
    return CriterionReport(
        depth=depth_value,
        dim=dim_graded,
        grade_direct=int(direct.value),
        grade_recursion=int(recursion.value),
        lzero_table=scan.records,
        sop_flag=sop,
        cm_verdict=cm,
        predicted_band=(depth_value, dim_graded),
        notes=tuple(notes),
        depth_report=depth_report,
        direct_report=direct,
        recursion_report=recursion,
        system_images=images,
    )


def squared_system(ctx: FiltrationContext) -> list[tuple[Polynomial, int]]:
    """The componentwise squares with their doubled membership exponents.

    Doubling is deliberate: the square may sit deeper in the filtration than
    twice the initial degree, and the level ideals match the original system
    only for the doubled exponent.
    """
    return [(s.element * s.element, 2 * s.degree) for s in ctx.system]


@dataclass(frozen=True)
class InvarianceResult:
    agree: bool
    disagreeing_levels: tuple[int, ...]
    budget_levels: tuple[int, ...]

    def __bool__(self):
        return self.agree


def radical_invariance_check(ctx: FiltrationContext, alt_system,
                             params: CriterionParams = DEFAULT_PARAMS) -> InvarianceResult:
    """Compare the stabilized level ideals of two systems the caller asserts
    have equal radicals.

    ``alt_system`` is a list of (element, exponent) pairs; exponents are
    membership exponents, not necessarily initial degrees.  Levels where
    either chain ran out of l_max before stabilizing are reported separately
    instead of counted as disagreement (the two chains probe the union at
    different speeds, so a budget cut can split them legitimately).
    """
    alt = ctx.with_exponent_system(alt_system)
    bad: list[int] = []
    budget: list[int] = []
    for n in range(params.n_max + 1):
        a = defect_at(ctx, n, params)
        b = defect_at(alt, n, params)
        if a.status != "stabilized" or b.status != "stabilized":
            budget.append(n)
            continue
        if not a.ideal.equals(b.ideal):
            bad.append(n)
    return InvarianceResult(not bad, tuple(bad), tuple(budget))
