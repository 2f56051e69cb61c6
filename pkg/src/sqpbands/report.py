"""JSON report envelope and the bundled regression corpus.

The envelope is the machine interface of the CLI: schema-versioned,
round-trippable JSON with every assertion carried as an explicit
pass/fail/paper-cited entry. The corpus is a set of band words with
expected-value sidecars generated from the independent oracles (Burau,
brute-force state sum, hand counts); the self-test replays it to anchor
every convention against drift.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources

from .laurent import LaurentPolynomial
from .words import BandWord, parse_band_word

SCHEMA_VERSION = "1"


@dataclass
class ReportEnvelope:
    """Top-level JSON payload of every CLI subcommand."""

    subcommand: str
    inputs: dict
    tool_version: str = ""
    schema_version: str = SCHEMA_VERSION
    reports: list[dict] = field(default_factory=list)
    family: list[dict] = field(default_factory=list)
    certificates: list[dict] = field(default_factory=list)
    error: dict | None = None
    timing_s: float = 0.0
    _started: float = field(default_factory=time.time, repr=False)

    def finish(self) -> ReportEnvelope:
        self.timing_s = round(time.time() - self._started, 3)
        return self

    def to_json(self, indent: int | None = 2) -> str:
        payload = {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "reports": self.reports,
            "family": self.family,
            "certificates": self.certificates,
            "error": self.error,
            "timing_s": self.timing_s,
        }
        return json.dumps(payload, indent=indent, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> ReportEnvelope:
        data = json.loads(text)
        env = cls(
            subcommand=data["subcommand"],
            inputs=data["inputs"],
            tool_version=data["tool_version"],
            schema_version=data["schema_version"],
            reports=data["reports"],
            family=data["family"],
            certificates=data["certificates"],
            error=data["error"],
        )
        env.timing_s = data["timing_s"]
        return env


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    word: BandWord
    expected: dict


def _corpus_dir():
    return resources.files("sqpbands").joinpath("data/corpus")


def load_corpus() -> list[CorpusEntry]:
    """Parse the bundled corpus words with their expected-value sidecars."""
    root = _corpus_dir()
    entries = []
    for line in root.joinpath("corpus.bands").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, strands, *tokens = line.split()
        word = parse_band_word(" ".join(tokens), int(strands))
        sidecar = root.joinpath(f"{name}.expected.json")
        expected = json.loads(sidecar.read_text())
        entries.append(CorpusEntry(name, word, expected))
    return entries


def compare_with_expected(entry: CorpusEntry, report) -> list[tuple[str, bool, str]]:
    """Check a live InvariantReport against a corpus sidecar."""
    exp = entry.expected
    checks = []
    checks.append(("components", report.components == exp["components"], ""))
    checks.append(("chi", report.chi == exp["chi"], ""))
    checks.append(("betti", report.betti == exp["betti"], ""))
    checks.append(
        ("linking", [list(r) for r in report.linking] == exp["linking"], "")
    )
    want_delta = LaurentPolynomial.from_pairs(exp["alexander"])
    checks.append(
        (
            "alexander",
            report.alexander.is_unit_equivalent(want_delta),
            report.alexander.format(),
        )
    )
    checks.append(("determinant", report.determinant == exp["determinant"], ""))
    if exp.get("signature") is not None:
        checks.append(("signature", report.signature == exp["signature"], ""))
    if exp.get("component_alexander") is not None:
        want = [LaurentPolynomial.from_pairs(p) for p in exp["component_alexander"]]
        ok = len(want) == len(report.component_polys) and all(
            a.is_unit_equivalent(b) for a, b in zip(report.component_polys, want)
        )
        checks.append(("component-alexander", ok, ""))
    if exp.get("jones") is not None and report.jones is not None:
        want_jones = LaurentPolynomial.from_pairs(exp["jones"])
        checks.append(("jones", report.jones == want_jones, report.jones.format("t", 4)))
    return checks
