"""Canonical serialization: spec files, witness files, CSV profiles.

Everything is emitted through one canonical JSON form (sorted keys, compact
separators, no floats) so outputs are byte-identical across runs and
platforms, and fingerprints are stable under reformatting of input files.
"""

from __future__ import annotations

import hashlib
import json
import os

from .algebra import is_prime
from .errors import EntryParseError, SpecFileError
from .fields import ExtFieldElem, PFieldElem
from .groups import NAMED_GROUPS, GroupSpec, Word
from .parsing import parse_entry
from .profiler import FarbProfile, ReductionBudget
from .ratfunc import FieldMatrix
from .unipoly import UniPoly
from .witness import FieldHom, WitnessRecord

PROFILE_HEADER = "n,ball_size,max_gl_bound,max_image_order,max_d_reduction,exhaustive_flag"

_BUDGET_KEYS = ("max_prime", "max_degree", "order_budget", "ball_budget")


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def fingerprint(data) -> str:
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


def spec_to_data(spec: GroupSpec) -> dict:
    """Canonical spec-file content for the group itself (no budgets).

    Entries are re-rendered, so two files differing only in formatting map
    to the same data and hence the same fingerprint.
    """
    base = sorted(l for l in spec.generators if not l.endswith("^-1"))
    return {
        "characteristic": spec.char,
        "variables": list(spec.variables),
        "generators": {
            label: [
                [cell.render(spec.variables) for cell in row]
                for row in spec.generators[label].rows
            ]
            for label in base
        },
    }


def spec_fingerprint(spec: GroupSpec) -> str:
    return fingerprint(spec_to_data(spec))


def _check(cond: bool, message: str):
    if not cond:
        raise SpecFileError(message)


def spec_from_data(data) -> tuple[GroupSpec, dict]:
    """Build a group and budget overrides from spec-file data."""
    _check(isinstance(data, dict), "spec file must be a JSON object")
    unknown = set(data) - {"characteristic", "variables", "generators", "budgets"}
    _check(not unknown, f"unknown spec fields: {sorted(unknown)}")
    char = data.get("characteristic")
    _check(
        isinstance(char, int) and (char == 0 or is_prime(char)),
        "characteristic must be 0 or a prime",
    )
    variables = data.get("variables", [])
    _check(
        isinstance(variables, list) and all(isinstance(v, str) for v in variables),
        "variables must be a list of names",
    )
    gens = data.get("generators")
    _check(isinstance(gens, dict) and gens, "generators must be a non-empty object")
    matrices = {}
    for label, rows in sorted(gens.items()):
        _check(isinstance(rows, list) and rows, f"generator {label!r} must be a non-empty array")
        m = len(rows)
        parsed_rows = []
        for i, row in enumerate(rows):
            _check(
                isinstance(row, list) and len(row) == m,
                f"generator {label!r} must be a square array",
            )
            parsed = []
            for j, text in enumerate(row):
                _check(isinstance(text, str), f"entry ({i},{j}) of {label!r} must be a string")
                try:
                    parsed.append(parse_entry(text, char, variables))
                except EntryParseError as exc:
                    raise SpecFileError(f"generator {label!r} entry ({i},{j}): {exc}") from exc
            parsed_rows.append(tuple(parsed))
        matrices[label] = FieldMatrix(tuple(parsed_rows))
    budgets = data.get("budgets", {})
    _check(isinstance(budgets, dict), "budgets must be an object")
    bad = set(budgets) - set(_BUDGET_KEYS)
    _check(not bad, f"unknown budget fields: {sorted(bad)}")
    _check(
        all(isinstance(v, int) and v > 0 for v in budgets.values()),
        "budget overrides must be positive integers",
    )
    try:
        spec = GroupSpec(char, tuple(variables), matrices)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecFileError(str(exc)) from exc
    return spec, dict(budgets)


def load_spec_file(path: str) -> tuple[GroupSpec, dict, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path} is not valid JSON: {exc}") from exc
    spec, budgets = spec_from_data(data)
    return spec, budgets, spec_fingerprint(spec)


def resolve_spec(name_or_path: str) -> tuple[GroupSpec, dict, str]:
    """A spec file path, or one of the built-in group names."""
    if os.path.exists(name_or_path):
        return load_spec_file(name_or_path)
    maker = NAMED_GROUPS.get(name_or_path)
    if maker is None:
        known = ", ".join(sorted(NAMED_GROUPS))
        raise SpecFileError(f"no spec file {name_or_path!r} (built-ins: {known})")
    spec = maker()
    return spec, {}, spec_fingerprint(spec)


def merge_budget(*overrides: dict) -> ReductionBudget:
    """Later sources win: defaults, then each override dict in turn."""
    merged = {}
    for source in overrides:
        for key, value in source.items():
            if key in ("max_prime", "max_degree", "order_budget") and value is not None:
                merged[key] = value
    return ReductionBudget(**merged)


def _hom_to_data(hom: FieldHom) -> dict:
    if hom.modulus is None:
        images = [e.value for e in hom.images]
        modulus = None
    else:
        images = [list(e.coeffs) for e in hom.images]
        modulus = list(hom.modulus.coeffs)
    return {
        "char": hom.char,
        "modulus": modulus,
        "images": images,
        "exponents": list(hom.exponents),
        "ell": hom.ell,
    }


def _hom_from_data(data) -> FieldHom:
    char = data["char"]
    if data["modulus"] is None:
        modulus = None
        images = tuple(PFieldElem.of(char, v) for v in data["images"])
    else:
        modulus = UniPoly(char, tuple(data["modulus"]))
        images = tuple(ExtFieldElem(char, modulus, tuple(cs)) for cs in data["images"])
    return FieldHom(char, modulus, images, tuple(data["exponents"]), data["ell"])


def witness_to_data(record: WitnessRecord, spec_fp: str) -> dict:
    return {
        "spec_fingerprint": spec_fp,
        "word": list(record.word.letters),
        "word_length": record.word_length,
        "entry": list(record.entry),
        "hom": _hom_to_data(record.hom),
        "field_size": record.field_size,
        "gl_bound": record.gl_bound,
        "image_order": record.image_order,
        "image_order_exact": record.image_order_exact,
        "verified": record.verified,
    }


def witness_from_data(data) -> tuple[WitnessRecord, str]:
    _check(isinstance(data, dict), "witness file must be a JSON object")
    required = {
        "spec_fingerprint", "word", "word_length", "entry", "hom",
        "field_size", "gl_bound", "image_order", "image_order_exact", "verified",
    }
    missing = required - set(data)
    _check(not missing, f"witness file missing fields: {sorted(missing)}")
    try:
        record = WitnessRecord(
            word=Word(tuple(data["word"])),
            word_length=data["word_length"],
            entry=tuple(data["entry"]),
            hom=_hom_from_data(data["hom"]),
            field_size=data["field_size"],
            gl_bound=data["gl_bound"],
            image_order=data["image_order"],
            image_order_exact=data["image_order_exact"],
            verified=data["verified"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecFileError(f"malformed witness file: {exc}") from exc
    return record, data["spec_fingerprint"]


def write_witness_file(path: str, record: WitnessRecord, spec_fp: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(witness_to_data(record, spec_fp)) + "\n")


def load_witness_file(path: str) -> tuple[WitnessRecord, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path} is not valid JSON: {exc}") from exc
    return witness_from_data(data)


def profile_to_csv(profile: FarbProfile) -> str:
    lines = [PROFILE_HEADER]
    for row in profile.rows:
        lines.append(
            f"{row.radius},{row.ball_size},{row.max_gl_bound},"
            f"{row.max_image_order},{row.max_d_reduction},"
            f"{'true' if row.exhaustive else 'false'}"
        )
    return "\n".join(lines) + "\n"


def threshold_samples_from_csv(text: str) -> list[tuple[int, int]]:
    """(n, F) pairs from either a profile CSV or a two-column n,value CSV."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise SpecFileError("empty CSV")
    header = lines[0]
    if header == PROFILE_HEADER:
        out = []
        for line in lines[1:]:
            parts = line.split(",")
            out.append((int(parts[0]), int(parts[4])))
        return out
    start = 0
    first = header.split(",")
    if not first[0].lstrip("-").isdigit():
        start = 1  # column-name header
    out = []
    for line in lines[start:]:
        parts = line.split(",")
        if len(parts) < 2:
            raise SpecFileError(f"need two columns per row, got {line!r}")
        out.append((int(parts[0]), int(parts[1])))
    if not out:
        raise SpecFileError("no data rows in CSV")
    return out
