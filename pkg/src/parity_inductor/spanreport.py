"""Certification sweeps: solve every canonical target over a generator family."""

from __future__ import annotations

import time

from .chartab import character_table
from .genchar import rho_H
from .generators import family_for
from .group import PermGroup
from .lattice import subgroup_lattice
from .membership import membership_solve, random_S_element, verify_certificate


class TargetResult:
    """Outcome of one membership solve: a subgroup target or a random sample."""

    __slots__ = ("label", "certified", "detail", "terms", "meta")

    def __init__(self, label, certified, detail="", terms=(), meta=None):
        self.label = label
        self.certified = certified
        self.detail = detail
        self.terms = tuple(terms)
        self.meta = dict(meta or {})

    def __repr__(self):
        state = "certified" if self.certified else "FAILED"
        return "TargetResult(%s: %s)" % (self.label, state)


class SpanReport:
    """Per-group summary of a certification sweep over one generator family."""

    __slots__ = (
        "group_name",
        "order",
        "flavor",
        "subgroup_results",
        "sample_results",
        "usage",
        "elapsed",
    )

    def __init__(self, group_name, order, flavor, subgroup_results, sample_results, usage, elapsed):
        self.group_name = group_name
        self.order = order
        self.flavor = flavor
        self.subgroup_results = tuple(subgroup_results)
        self.sample_results = tuple(sample_results)
        self.usage = dict(usage)
        self.elapsed = elapsed

    @property
    def all_certified(self) -> bool:
        results = self.subgroup_results + self.sample_results
        return all(r.certified for r in results)

    def failures(self):
        results = self.subgroup_results + self.sample_results
        return [r for r in results if not r.certified]

    def used_kinds(self):
        """Generator classes (type1 / type2 quotient tags) appearing in any certificate."""
        return frozenset(self.usage)

    def format_text(self) -> str:
        lines = []
        lines.append(
            "group %s (order %d, flavor %s)" % (self.group_name, self.order, self.flavor)
        )
        for result in self.subgroup_results:
            state = "certified" if result.certified else "FAILED"
            suffix = " (%s)" % result.detail if result.detail else ""
            lines.append("  rho[%s]: %s%s" % (result.label, state, suffix))
        for result in self.sample_results:
            state = "certified" if result.certified else "FAILED"
            suffix = " (%s)" % result.detail if result.detail else ""
            lines.append("  %s: %s%s" % (result.label, state, suffix))
        if self.usage:
            parts = ["%s x%d" % (key, self.usage[key]) for key in sorted(self.usage)]
            lines.append("  generators used: %s" % ", ".join(parts))
        else:
            lines.append("  generators used: none")
        good = sum(1 for r in self.subgroup_results + self.sample_results if r.certified)
        total = len(self.subgroup_results) + len(self.sample_results)
        lines.append("  targets certified: %d/%d" % (good, total))
        return "\n".join(lines)

    def to_json(self, include_timing=False) -> dict:
        doc = {
            "group": self.group_name,
            "order": self.order,
            "flavor": self.flavor,
            "subgroups": [
                {
                    "label": r.label,
                    "certified": r.certified,
                    "detail": r.detail,
                    "terms": [list(t) for t in r.terms],
                    **r.meta,
                }
                for r in self.subgroup_results
            ],
            "samples": [
                {
                    "label": r.label,
                    "certified": r.certified,
                    "detail": r.detail,
                    "terms": [list(t) for t in r.terms],
                    **r.meta,
                }
                for r in self.sample_results
            ],
            "usage": {key: self.usage[key] for key in sorted(self.usage)},
            "all_certified": self.all_certified,
        }
        if include_timing:
            doc["elapsed_seconds"] = self.elapsed
        return doc


def _usage_key(desc) -> str:
    if desc.kind == "type1":
        return "type1"
    return desc.tag or "type2"


def _solve_target(rho, family, label, usage, meta):
    try:
        cert = membership_solve(rho, family)
    except (RuntimeError, ValueError) as exc:
        return TargetResult(label, False, detail=str(exc), meta=meta)
    if cert is None:
        return TargetResult(label, False, detail="no integer combination found", meta=meta)
    if not verify_certificate(cert):
        return TargetResult(label, False, detail="certificate failed re-expansion", meta=meta)
    for index, _coeff in cert.terms:
        usage[_usage_key(family.generators[index])] = (
            usage.get(_usage_key(family.generators[index]), 0) + 1
        )
    terms = [(family.generators[i].gen_id, c) for i, c in cert.terms]
    return TargetResult(label, True, terms=terms, meta=meta)


def span_report(G: PermGroup, flavor="thm12", name=None, samples=0, seed=0, bound=4):
    """Certify every rho_H of G plus seeded random targets; failures are recorded."""
    started = time.perf_counter()
    group_name = name if name is not None else "order%d" % G.order()
    usage = {}
    subgroup_results = []
    sample_results = []
    try:
        family = family_for(G, flavor)
    except (RuntimeError, ValueError) as exc:
        result = TargetResult("family", False, detail=str(exc))
        elapsed = time.perf_counter() - started
        return SpanReport(group_name, G.order(), flavor, [result], [], usage, elapsed)
    character_table(G)
    for record in subgroup_lattice(G).records:
        rho = rho_H(G, record)
        label = "%s ord %d" % (record.label, record.order)
        meta = {"class_id": record.class_id}
        subgroup_results.append(_solve_target(rho, family, label, usage, meta))
    for i in range(samples):
        sample_seed = seed + i
        label = "sample seed %d" % sample_seed
        meta = {"seed": sample_seed, "bound": bound}
        try:
            rho = random_S_element(G, sample_seed, bound)
        except (RuntimeError, ValueError) as exc:
            sample_results.append(TargetResult(label, False, detail=str(exc), meta=meta))
            continue
        sample_results.append(_solve_target(rho, family, label, usage, meta))
    elapsed = time.perf_counter() - started
    return SpanReport(
        group_name, G.order(), flavor, subgroup_results, sample_results, usage, elapsed
    )
