"""Mechanical checking of exclusion certificates.

A certificate names a root system type, an admissible subset pi, a positive
root gamma outside the pi subsystem, and a word for an element sigma written
left factor first: sigma = s_{i_t} ... s_{i_1} for sigma_word = [i_t, ..., i_1].
The checkable conditions, with w = w0 * w_Pi and alpha = alpha_{i_t}:

  1. sigma(gamma) = -alpha;
  3. sigma w sigma^-1 (alpha) is positive and different from alpha;
  4. sigma w sigma^-1 s_{i_t} is not an involution.

Condition 2 of the source case analyses concerns which roots occur inside a
group element and cannot be decided here; the witness roots
gamma'_j = s_{i_1} ... s_{i_j}(alpha_{i_{j+1}}) are computed for audit and,
when an expected list is supplied, compared against it. A certificate passes
when 1, 3 and 4 hold.

Verification is deterministic and side-effect free; a batch may be checked
concurrently or in any order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from random import Random

from .rootsys import RootSystem, RootSystemType, Vector, build, subsystem_positive_roots
from .spherical import candidate_element, is_admissible
from .weyl import (
    WeylElement,
    apply,
    from_word,
    identity,
    inverse,
    is_involution,
    multiply,
    simple_reflection,
)


class CertError(ValueError):
    """Malformed certificate data; message carries position and label."""


@dataclass(frozen=True)
class ExclusionCert:
    rstype: RootSystemType
    pi: frozenset[int]
    gamma: Vector
    sigma_word: tuple[int, ...]
    expected_cond2: tuple[Vector, ...] | None
    label: str

    def as_dict(self) -> dict:
        out = {
            "type": str(self.rstype),
            "pi": sorted(self.pi),
            "gamma": list(self.gamma),
            "sigma": list(self.sigma_word),
            "label": self.label,
        }
        if self.expected_cond2 is not None:
            out["expected_cond2"] = [list(v) for v in self.expected_cond2]
        return out


@dataclass(frozen=True)
class CertReport:
    cond1: bool
    cond2_witnesses: tuple[Vector, ...]
    cond2_match: bool | None
    cond3: bool
    cond4_noninvolution: bool
    passed: bool

    def as_dict(self) -> dict:
        return {
            "cond1": self.cond1,
            "cond2_witnesses": [list(v) for v in self.cond2_witnesses],
            "cond2_match": self.cond2_match,
            "cond3": self.cond3,
            "cond4_noninvolution": self.cond4_noninvolution,
            "pass": self.passed,
        }


@dataclass
class VerifySummary:
    passed: int
    failed: int
    reports: list[tuple[ExclusionCert, CertReport]]

    @property
    def ok(self) -> bool:
        return self.failed == 0


def make_cert(
    rstype: RootSystemType,
    pi,
    gamma,
    sigma_word,
    expected_cond2=None,
    label: str = "",
) -> ExclusionCert:
    """Validate fields and build a certificate."""
    rs = build(rstype)
    pi = frozenset(int(i) for i in pi)
    for i in pi:
        if not 1 <= i <= rs.rank:
            raise CertError(f"{label or 'cert'}: pi index {i} out of range for {rstype}")
    gamma = tuple(int(c) for c in gamma)
    if len(gamma) != rs.rank or not rs.is_positive_root(gamma):
        raise CertError(f"{label or 'cert'}: gamma {list(gamma)} is not a positive root of {rstype}")
    word = tuple(int(a) for a in sigma_word)
    if not word:
        raise CertError(f"{label or 'cert'}: sigma word must be nonempty")
    for a in word:
        if not 1 <= a <= rs.rank:
            raise CertError(f"{label or 'cert'}: sigma letter {a} out of range for {rstype}")
    expected = None
    if expected_cond2 is not None:
        expected = tuple(tuple(int(c) for c in v) for v in expected_cond2)
        for v in expected:
            if len(v) != rs.rank:
                raise CertError(f"{label or 'cert'}: expected_cond2 entry {list(v)} has wrong rank")
    return ExclusionCert(rstype, pi, gamma, word, expected, label)


def parse_certs(document: str) -> list[ExclusionCert]:
    """Parse a JSON certificate file; any defect aborts with its position."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise CertError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise CertError("certificate document must be a JSON array")
    certs = []
    for pos, entry in enumerate(data):
        label = ""
        try:
            if not isinstance(entry, dict):
                raise CertError("entry is not an object")
            label = str(entry.get("label", f"cert #{pos}"))
            rstype = RootSystemType.from_string(entry["type"])
            certs.append(
                make_cert(
                    rstype,
                    entry.get("pi", []),
                    entry["gamma"],
                    entry["sigma"],
                    entry.get("expected_cond2"),
                    label,
                )
            )
        except CertError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise CertError(f"cert #{pos} ({label or 'unlabelled'}): {exc}") from exc
    return certs


def certs_to_json(certs) -> str:
    return json.dumps([c.as_dict() for c in certs], indent=1)


def _negate(v: Vector) -> Vector:
    return tuple(-c for c in v)


def verify(cert: ExclusionCert) -> CertReport:
    """Check conditions 1, 3 and 4 and compute the condition-2 witnesses."""
    rs = build(cert.rstype)
    if not rs.is_positive_root(cert.gamma):
        raise CertError(f"{cert.label}: gamma is not a positive root")
    if not is_admissible(rs, cert.pi):
        raise CertError(f"{cert.label}: pi={sorted(cert.pi)} is not admissible in {cert.rstype}")
    if cert.gamma in subsystem_positive_roots(rs, cert.pi):
        raise CertError(f"{cert.label}: gamma lies in the pi subsystem")

    word = cert.sigma_word
    top = word[0]
    alpha_top = rs.simples[top - 1]
    sigma = from_word(rs, word)

    cond1 = apply(sigma, cert.gamma) == _negate(alpha_top)

    # gamma'_j = s_{i_1} ... s_{i_j}(alpha_{i_{j+1}}), reading the word from its
    # right end; j = 0 contributes alpha_{i_1} itself.
    rev = tuple(reversed(word))
    witnesses = []
    prefix = identity(rs)
    for j in range(len(word) - 1):
        witnesses.append(apply(prefix, rs.simples[rev[j] - 1]))
        prefix = multiply(prefix, simple_reflection(rs, rev[j]))
    cond2_match = None
    if cert.expected_cond2 is not None:
        cond2_match = sorted(witnesses) == sorted(cert.expected_cond2)

    w = candidate_element(rs, cert.pi)
    u = multiply(multiply(sigma, w), inverse(sigma))
    image = apply(u, alpha_top)
    cond3 = all(c >= 0 for c in image) and image != alpha_top

    twisted = multiply(u, simple_reflection(rs, top))
    cond4 = not is_involution(twisted)

    return CertReport(
        cond1=cond1,
        cond2_witnesses=tuple(witnesses),
        cond2_match=cond2_match,
        cond3=cond3,
        cond4_noninvolution=cond4,
        passed=cond1 and cond3 and cond4,
    )


def verify_all(certs) -> VerifySummary:
    reports = [(cert, verify(cert)) for cert in certs]
    passed = sum(1 for _, rep in reports if rep.passed)
    return VerifySummary(passed=passed, failed=len(reports) - passed, reports=reports)


def mutate_sigma(cert: ExclusionCert, rng: Random) -> ExclusionCert:
    """Corrupt one letter of the sigma word into a different valid letter."""
    rs = build(cert.rstype)
    pos = rng.randrange(len(cert.sigma_word))
    old = cert.sigma_word[pos]
    choices = [a for a in range(1, rs.rank + 1) if a != old]
    new_word = list(cert.sigma_word)
    new_word[pos] = rng.choice(choices)
    return ExclusionCert(
        cert.rstype,
        cert.pi,
        cert.gamma,
        tuple(new_word),
        None,
        f"{cert.label} [mutated @{pos}]",
    )
