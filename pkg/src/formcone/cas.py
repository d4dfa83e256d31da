"""Emit cross-validation scripts for external computer-algebra systems.

The scripts recompute the associated-graded presentation by the same tag
elimination, then its dimension and depth, so an independent system can
confirm the verdicts.  This module only writes text; nothing external is ever
executed.
"""

from __future__ import annotations

from .errors import ValidationError
from .filtration import _fresh_names
from .session import SessionSpec

DIALECTS = ("macaulay2", "singular")


def _names(spec: SessionSpec):
    ring = spec.ring
    y_names = _fresh_names(ring, "y", len(spec.q))
    t_name = ring.fresh_name("T")
    return y_names, t_name


def emit_cas_script(spec: SessionSpec, dialect: str = "macaulay2") -> str:
    if dialect == "macaulay2":
        return _macaulay2(spec)
    if dialect == "singular":
        return _singular(spec)
    raise ValidationError(f"unsupported dialect {dialect!r}; known: {', '.join(DIALECTS)}")


def _macaulay2(spec: SessionSpec) -> str:
    y_names, t_name = _names(spec)
    kk = "QQ" if spec.field.is_rationals else f"ZZ/{spec.field.characteristic}"
    xs = ", ".join(spec.variables)
    ys = ", ".join(y_names)
    im_gens = [str(g) for g in spec.base + spec.module] or ["0"]
    rees_rels = [f"{y} - ({f})*{t_name}" for y, f in zip(y_names, spec.q)]
    q_gens = ", ".join(str(g) for g in spec.q)
    lines = [
        "-- cross-validation script (emitted, never executed by the library)",
        f"kk = {kk};",
        f"S = kk[{xs}, {ys}, {t_name}];",
        f"IM = ideal({', '.join(im_gens)});",
        f"J = IM + ideal({', '.join(rees_rels)});",
        f"H = eliminate({t_name}, J);",
        f"P = kk[{xs}, {ys}, Degrees => {{{len(spec.variables)}:0, {len(y_names)}:1}}];",
        "HG = sub(H, P) + sub(ideal(" + q_gens + "), P);",
        "G = P / HG;",
        "<< \"form ideal: \" << toString gens gb HG << endl;",
        "<< \"dim: \" << dim G << endl;",
        "needsPackage \"Depth\";",
        "<< \"depth: \" << depth G << endl;",
    ]
    return "\n".join(lines) + "\n"


def _singular(spec: SessionSpec) -> str:
    y_names, t_name = _names(spec)
    char = 0 if spec.field.is_rationals else spec.field.characteristic
    xs = ", ".join(spec.variables)
    ys = ", ".join(y_names)
    im_gens = [str(g) for g in spec.base + spec.module] or ["0"]
    rees_rels = [f"{y} - ({f})*{t_name}" for y, f in zip(y_names, spec.q)]
    q_gens = ", ".join(str(g) for g in spec.q)
    lines = [
        "// cross-validation script (emitted, never executed by the library)",
        f"ring S = {char}, ({xs}, {ys}, {t_name}), dp;",
        f"ideal IM = {', '.join(im_gens)};",
        f"ideal J = IM, {', '.join(rees_rels)};",
        "LIB \"elim.lib\";",
        f"ideal H = elim(J, {t_name});",
        f"ring P = {char}, ({xs}, {ys}), dp;",
        "ideal HG = imap(S, H);",
        f"HG = HG + ideal({q_gens});",
        "HG = std(HG);",
        "print(\"form ideal:\"); print(HG);",
        "print(\"dim:\"); print(dim(HG));",
        "LIB \"homolog.lib\";",
        "qring G = HG;",
        "print(\"depth:\"); print(depth(std(0)));",
    ]
    return "\n".join(lines) + "\n"
