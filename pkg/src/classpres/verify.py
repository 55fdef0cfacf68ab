"""Verification harness: relator evaluation, dictionaries, centres, coset enumeration."""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

from .enumerate import Overflow, enumerate_presentation
from .field import FieldTower
from .groups import GroupSpec, UnsupportedGroup, group_order
from .linalg import dickson_or_spinor, is_scalar, preserves_form
from .presentations import family_module
from .slp import ExpansionBudget, Slp, matrix_evaluator, render

FULL_BUDGET = 5 * 10**5
TORUS_BUDGET = 10**6
COSET_FACTOR = 4


@dataclass
class Budget:
    full: int = FULL_BUDGET
    torus: int = TORUS_BUDGET
    coset_factor: int = COSET_FACTOR
    # caps tried in turn when the default factor overflows (None: give up at the first)
    escalate: tuple = (16, 64)


@dataclass
class Check:
    name: str
    status: str  # ok | FAIL | skipped
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerifyReport:
    group: GroupSpec
    relators: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def failures(self) -> list:
        out = [r for r in self.relators if r["outcome"] == "FAIL"]
        return out + [c for c in self.checks if c.status == "FAIL"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, name) -> Check | None:
        for c in self.checks:
            if c.name == name:
                return c
        return None

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "name": self.group.name(),
            "ok": self.ok,
            "relators": self.relators,
            "checks": [c.to_json() for c in self.checks],
            "timings": {k: round(v, 4) for k, v in self.timings.items()},
        }

    def summary(self) -> str:
        parts = [f"{self.group.name()}: {'ok' if self.ok else 'FAIL'}",
                 f"{len(self.relators)} relators"]
        for c in self.checks:
            if c.status != "ok" or c.name.startswith("enumerat"):
                parts.append(f"{c.name}={c.status}{' (' + c.detail + ')' if c.detail else ''}")
        return "; ".join(parts)


def _scalar_value(M):
    return M.entry(0, 0)


def check_generators(g: GroupSpec, T: FieldTower, report: VerifyReport):
    mod = family_module(g)
    M = mod.matrices(g, T)
    form = mod.form(g, T)
    bad = []
    for k in mod.generator_names(g, T):
        m = M[k]
        if m.det() != 1:
            bad.append(f"{k}: det {m.det()}")
        if form is not None and not preserves_form(m, form):
            bad.append(f"{k}: form")
        if g.family.startswith("Omega") and dickson_or_spinor(m, form) != 0:
            bad.append(f"{k}: spinor/Dickson")
    report.checks.append(Check("generators", "FAIL" if bad else "ok", "; ".join(bad)))


def check_relators(g: GroupSpec, T: FieldTower, P, report: VerifyReport):
    mod = family_module(g)
    M = mod.matrices(g, T)
    ev = matrix_evaluator({k: M[k] for k in P.generators})
    for i, r in enumerate(P.relators):
        m = ev(r.word)
        if m.is_identity():
            out = {"index": i, "tag": r.tag, "label": r.label, "outcome": "identity"}
        elif g.quotient and is_scalar(m):
            out = {"index": i, "tag": r.tag, "label": r.label, "outcome": "central",
                   "lambda": _scalar_value(m)}
        else:
            out = {"index": i, "tag": r.tag, "label": r.label, "outcome": "FAIL",
                   "relator": render(r.word), "residue": m.to_json()}
        report.relators.append(out)


def relator_outcomes(g: GroupSpec, P, T: FieldTower | None = None) -> list:
    """The relator entries of a VerifyReport, without the other checks."""
    rep = VerifyReport(g)
    check_relators(g, T or g.tower(), P, rep)
    return rep.relators


def relator_outcomes_from_json(data: dict, T: FieldTower | None = None) -> list:
    """Replay the relators of an emitted presentation JSON on the generator matrices.

    Gives the same entries as check_relators on the presentation that produced the JSON.
    """
    gd = data["group"]
    g = GroupSpec(gd["family"], int(gd["d"]), int(gd["q"]), bool(gd.get("quotient", False)))
    T = T or g.tower()
    names = data["generators"]
    M = family_module(g).matrices(g, T)
    vals = [M[k] for k in names]
    out = []
    for i, r in enumerate(data["relators"]):
        m = Slp.from_json(r["slp"], len(names)).eval(vals)
        entry = {"index": i, "tag": r["tag"], "label": r["label"]}
        if m.is_identity():
            entry["outcome"] = "identity"
        elif g.quotient and is_scalar(m):
            entry.update(outcome="central", **{"lambda": _scalar_value(m)})
        else:
            entry.update(outcome="FAIL", relator=r["text"], residue=m.to_json())
        out.append(entry)
    return out


def check_dictionary(g: GroupSpec, T: FieldTower, report: VerifyReport):
    mod = family_module(g)
    M = mod.matrices(g, T)
    names = mod.generator_names(g, T)
    fwd = mod.pres_to_std(g, T)
    ev = matrix_evaluator(M)
    std = {k: ev(fwd[k]) for k in mod.std_names(g)}
    bad = []
    if hasattr(mod, "std_matrices"):
        direct = mod.std_matrices(g, T)
        bad += [f"std {k}" for k in direct if direct[k] != std[k]]
    back = mod.std_to_pres(g, T)
    ev2 = matrix_evaluator(std)
    bad += [f"pres {k}" for k in names if ev2(back[k]) != M[k]]
    report.checks.append(Check("dictionary", "FAIL" if bad else "ok", ", ".join(bad)))


def check_center(g: GroupSpec, T: FieldTower, report: VerifyReport):
    mod = family_module(g)
    w, k = mod.central_word(g, T)
    M = matrix_evaluator(mod.matrices(g, T))(w)
    if not is_scalar(M):
        report.checks.append(Check("center", "FAIL", "central word is not scalar"))
        return
    order = M.F.mult_order(_scalar_value(M))
    status = "ok" if order == k else "FAIL"
    report.checks.append(Check("center", status, f"order {order}, expected {k}"))


def check_torus(g: GroupSpec, T: FieldTower, report: VerifyReport, budget: Budget, strategy: str):
    mod = family_module(g)
    tor = mod.torus(g, T)
    ev = matrix_evaluator(mod.matrices(g, T))
    imgs = {k: ev(w) for k, w in tor.images.items()}
    ev2 = matrix_evaluator(imgs)
    bad = [i for i, r in enumerate(tor.presentation.relators) if not ev2(r.word).is_identity()]
    cent_bad = []
    for c in mod.centralisers(g, T):
        root = ev(c.root)
        for j, w in enumerate(c.words):
            x = ev2(w)
            if x * root != root * x:
                cent_bad.append(f"{c.name}[{j}]")
    detail = ""
    if bad:
        detail = f"torus relators {bad} not identity"
    if cent_bad:
        detail += f" centraliser words {cent_bad} do not commute"
    report.checks.append(Check("torus-relators", "FAIL" if detail else "ok", detail.strip()))
    if tor.order > budget.torus:
        report.checks.append(Check("enumerate-torus", "skipped", f"|N| = {tor.order} > {budget.torus}"))
        return
    report.checks.append(_enumerate("enumerate-torus", tor.presentation, tor.order, budget, strategy))


def _enumerate(name, P, order, budget: Budget, strategy: str) -> Check:
    factors = (budget.coset_factor,) + tuple(f for f in budget.escalate if f > budget.coset_factor)
    last = ""
    for f in factors:
        for strat in (strategy, "hlt" if strategy == "felsch" else "felsch"):
            try:
                r = enumerate_presentation(P, max_cosets=f * order + 16, strategy=strat)
            except Overflow:
                last = f"overflow at {f}x"
                continue
            except ExpansionBudget as e:
                return Check(name, "skipped", str(e))
            status = "ok" if r.index == order else "FAIL"
            return Check(name, status, f"index {r.index}, expected {order}, defined {r.defined}, "
                                       f"cap {f}x, {strat}")
    return Check(name, "skipped", last)


def verify_group(g: GroupSpec, tower: FieldTower | None = None, budget: Budget | int | None = None,
                 strategy: str = "felsch", enumerate_full: bool = True) -> VerifyReport:
    if budget is None:
        budget = Budget()
    elif isinstance(budget, int):
        budget = Budget(full=budget)
    T = tower or g.tower()
    rep = VerifyReport(g)
    mod = family_module(g)

    t = time.perf_counter()
    check_generators(g, T, rep)
    rep.timings["generators"] = time.perf_counter() - t

    t = time.perf_counter()
    P = mod.present(g, T)
    check_relators(g, T, P, rep)
    rep.timings["relators"] = time.perf_counter() - t

    t = time.perf_counter()
    check_dictionary(g, T, rep)
    rep.timings["dictionary"] = time.perf_counter() - t

    t = time.perf_counter()
    check_center(g, T, rep)
    rep.timings["center"] = time.perf_counter() - t

    t = time.perf_counter()
    check_torus(g, T, rep, budget, strategy)
    rep.timings["torus"] = time.perf_counter() - t

    t = time.perf_counter()
    order = group_order(g)
    if not enumerate_full:
        rep.checks.append(Check("enumerate", "skipped", "disabled"))
    elif order > budget.full:
        rep.checks.append(Check("enumerate", "skipped", f"order {order} > budget {budget.full}"))
    else:
        rep.checks.append(_enumerate("enumerate", P, order, budget, strategy))
    rep.timings["enumerate"] = time.perf_counter() - t
    return rep


# ----------------------------------------------------------------- grids

QS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27)


def builtin_grid(quotients: bool = False) -> list[GroupSpec]:
    """The desk grid of the relator-soundness check."""
    specs = []
    specs += [("SL", d, q) for d in range(2, 7) for q in QS]
    specs += [("Sp", 2 * n, q) for n in range(2, 5) for q in QS]
    specs += [("SU", d, q) for d in range(3, 8) for q in (2, 3, 4, 5, 8, 9)]
    specs += [("OmegaPlus", 2 * n, q) for n in range(2, 5) for q in (2, 3, 4, 5, 9)]
    specs += [("OmegaCircle", 2 * n + 1, q) for n in range(2, 4) for q in (3, 5, 7, 9)]
    specs += [("OmegaMinus", 2 * n, q) for n in range(3, 5) for q in (2, 3, 4, 5)]
    out = [GroupSpec(f, d, q) for f, d, q in specs]
    if quotients:
        out += [GroupSpec(f, d, q, True) for f, d, q in specs]
    return out


def load_grid(path: str) -> list[GroupSpec]:
    """JSON list of {family, d, q, quotient?} objects, or lines 'family d q [quotient]'."""
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
        return [GroupSpec(x["family"], int(x["d"]), int(x["q"]), bool(x.get("quotient", False)))
                for x in data]
    except json.JSONDecodeError:
        out = []
        for line in text.splitlines():
            line = line.split("#")[0].strip()
            if not line:
                continue
            parts = line.split()
            out.append(GroupSpec(parts[0], int(parts[1]), int(parts[2]),
                                 len(parts) > 3 and parts[3].lower() in ("1", "true", "quotient", "q")))
        return out


def verify_grid(grid, budget=None, strategy="felsch", enumerate_full=True, jobs=1):
    """Reports in grid order.  Unsupported entries raise UnsupportedGroup before any work."""
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            futs = [ex.submit(verify_group, g, None, budget, strategy, enumerate_full) for g in grid]
            return [f.result() for f in futs]
    return [verify_group(g, None, budget, strategy, enumerate_full) for g in grid]


__all__ = ["Budget", "Check", "VerifyReport", "verify_group", "relator_outcomes", "relator_outcomes_from_json", "builtin_grid", "load_grid",
           "verify_grid", "UnsupportedGroup", "math"]
